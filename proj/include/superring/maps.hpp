#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "superring/abelian.hpp"
#include "superring/graded.hpp"
#include "superring/ring.hpp"
#include "superring/verdict.hpp"

namespace superring {

// Additive maps between ring carriers are generator-image matrices.
using AdditiveMap = GroupHom;

inline AdditiveMap map_from_generator_images(const AbelianGroup& src, const AbelianGroup& dst,
                                             const std::vector<Elem>& images) {
  if (images.size() != src.rank())
    throw std::invalid_argument("expected one image per source generator");
  std::vector<std::int64_t> m(src.rank() * dst.rank(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    dst.require(images[i]);
    for (std::size_t j = 0; j < dst.rank(); ++j) m[i * dst.rank() + j] = images[i].c[j];
  }
  return GroupHom(src, dst, std::move(m));
}

// x -> xa - ax.
inline AdditiveMap inner_derivation(const Ring& R, const Elem& a) {
  R.require(a);
  const AbelianGroup& g = R.carrier();
  std::vector<Elem> images;
  images.reserve(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i)
    images.push_back(commutator(R, g.generator(i), a));
  return map_from_generator_images(g, g, images);
}

// Additive self-map of a graded ring with declared degree i: d(A_j) must lie
// in A_{i+j}. The block structure is checked on generators, which suffices
// because the parts are coordinate-aligned and d is additive.
class GradedMap {
 public:
  GradedMap(GradedRing graded, GroupHom hom, int degree)
      : graded_(std::move(graded)), hom_(std::move(hom)), degree_(degree) {
    if (degree_ != 0 && degree_ != 1) throw std::invalid_argument("degree must be 0 or 1");
    if (hom_.src() != graded_.ring().carrier() || hom_.dst() != graded_.ring().carrier())
      throw std::invalid_argument("graded map must be a carrier self-map");
    Verdict v = check_blocks(graded_, hom_, degree_);
    if (!v.ok())
      throw std::invalid_argument("declared degree " + std::to_string(degree_) +
                                  " violates the block structure: " +
                                  to_string(*v.counterexample));
  }

  static Verdict check_blocks(const GradedRing& G, const GroupHom& hom, int degree) {
    const AbelianGroup& g = G.ring().carrier();
    const auto& mask = G.coordinate_degrees();
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (g.factor(i) == 1) continue;
      Elem gen = g.generator(i);
      Elem img = hom.apply(gen);
      int want = (mask[i] + degree) % 2;
      if (!G.is_homogeneous(img, want))
        return Verdict::fail({"d(A_j) in A_{j+i}", {{"x", gen}}, img, G.component(img, want)});
    }
    return Verdict::pass();
  }

  const GradedRing& graded() const { return graded_; }
  const GroupHom& hom() const { return hom_; }
  int degree() const { return degree_; }

  Elem apply(const Elem& x) const { return hom_.apply(x); }

  Homog apply(const Homog& x) const {
    return Homog{hom_.apply(x.elem), (x.degree + degree_) % 2};
  }

  bool operator==(const GradedMap& o) const {
    return degree_ == o.degree_ && hom_ == o.hom_;
  }

 private:
  GradedRing graded_;
  GroupHom hom_;
  int degree_;
};

// Assembles a degree-i graded self-map from its two blocks: a hom
// even -> A_i and a hom odd -> A_{1+i}, written between the part groups.
inline GradedMap graded_map_from_blocks(const GradedRing& G, int degree,
                                        const GroupHom& even_block,
                                        const GroupHom& odd_block) {
  const AbelianGroup& g = G.ring().carrier();
  if (even_block.src() != G.part_group(0) || even_block.dst() != G.part_group(degree % 2) ||
      odd_block.src() != G.part_group(1) || odd_block.dst() != G.part_group((1 + degree) % 2))
    throw std::invalid_argument("graded map block shape mismatch");
  std::vector<std::int64_t> m(g.rank() * g.rank(), 0);
  auto insert_block = [&](const GroupHom& h, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b)
        m[rows[a] * g.rank() + cols[b]] = h.entry(a, b);
  };
  insert_block(even_block, G.part_coords(0), G.part_coords(degree % 2));
  insert_block(odd_block, G.part_coords(1), G.part_coords((1 + degree) % 2));
  return GradedMap(G, GroupHom(g, g, std::move(m)), degree);
}

// The space of all degree-i graded self-maps: a Hom block even -> A_i and a
// Hom block odd -> A_{1+i}, indexed lexicographically (even block most
// significant).
class GradedMapSpace {
 public:
  GradedMapSpace(GradedRing graded, int degree, std::int64_t bound)
      : graded_(std::move(graded)),
        degree_(degree),
        even_block_(graded_.part_group(0), graded_.part_group(degree % 2), bound),
        odd_block_(graded_.part_group(1), graded_.part_group((1 + degree) % 2), bound) {
    __int128 total = (__int128)even_block_.size() * odd_block_.size();
    if (total > bound)
      throw BoundExceeded("graded map space of degree " + std::to_string(degree) + " on " +
                          graded_.ring().name() + " exceeds bound " + std::to_string(bound));
    size_ = (std::int64_t)total;
  }

  std::int64_t size() const { return size_; }
  const GradedRing& graded() const { return graded_; }
  int degree() const { return degree_; }

  GradedMap at(std::int64_t index) const {
    if (index < 0 || index >= size_) throw std::out_of_range("graded map index out of range");
    return graded_map_from_blocks(graded_, degree_, even_block_.at(index / odd_block_.size()),
                                  odd_block_.at(index % odd_block_.size()));
  }

 private:
  GradedRing graded_;
  int degree_;
  HomSpace even_block_, odd_block_;
  std::int64_t size_ = 0;
};

// Biadditive map src1 x src2 -> dst, stored as generator-pair images and
// extended biadditively. Well-definedness needs each image annihilated by
// both generator orders.
class BiadditiveMap {
 public:
  BiadditiveMap(AbelianGroup src1, AbelianGroup src2, AbelianGroup dst,
                std::vector<Elem> images)
      : src1_(std::move(src1)),
        src2_(std::move(src2)),
        dst_(std::move(dst)),
        img_(std::move(images)) {
    const std::size_t k1 = src1_.rank(), k2 = src2_.rank();
    if (img_.size() != k1 * k2) throw std::invalid_argument("biadditive image shape mismatch");
    for (std::size_t i = 0; i < k1; ++i)
      for (std::size_t j = 0; j < k2; ++j) {
        Elem& e = img_[i * k2 + j];
        dst_.require(e);
        for (std::size_t t = 0; t < dst_.rank(); ++t)
          if (mod_reduce(src1_.factor(i) * e.c[t], dst_.factor(t)) != 0 ||
              mod_reduce(src2_.factor(j) * e.c[t], dst_.factor(t)) != 0)
            throw std::invalid_argument("biadditive image at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") violates generator orders");
      }
  }

  const AbelianGroup& src1() const { return src1_; }
  const AbelianGroup& src2() const { return src2_; }
  const AbelianGroup& dst() const { return dst_; }
  const std::vector<Elem>& images() const { return img_; }

  const Elem& image(std::size_t i, std::size_t j) const { return img_[i * src2_.rank() + j]; }

  Elem apply(const Elem& x, const Elem& y) const {
    src1_.require(x);
    src2_.require(y);
    Elem r = dst_.zero();
    const std::size_t k2 = src2_.rank();
    for (std::size_t i = 0; i < x.c.size(); ++i) {
      if (x.c[i] == 0) continue;
      for (std::size_t j = 0; j < y.c.size(); ++j) {
        if (y.c[j] == 0) continue;
        r = dst_.add(r, dst_.scale(x.c[i] * y.c[j], img_[i * k2 + j]));
      }
    }
    return r;
  }

  // B(A_i, A_j) in A_{i+j} for a self-biadditive map of a graded carrier.
  static Verdict check_blocks(const GradedRing& G, const BiadditiveMap& B) {
    const AbelianGroup& g = G.ring().carrier();
    const auto& mask = G.coordinate_degrees();
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (g.factor(i) == 1) continue;
      for (std::size_t j = 0; j < g.rank(); ++j) {
        if (g.factor(j) == 1) continue;
        const Elem& e = B.image(i, j);
        int want = (mask[i] + mask[j]) % 2;
        if (!G.is_homogeneous(e, want))
          return Verdict::fail({"B(A_i,A_j) in A_{i+j}",
                                {{"x", g.generator(i)}, {"y", g.generator(j)}},
                                e,
                                G.component(e, want)});
      }
    }
    return Verdict::pass();
  }

  bool operator==(const BiadditiveMap& o) const { return img_ == o.img_; }
  bool operator<(const BiadditiveMap& o) const { return img_ < o.img_; }

  static BiadditiveMap zero(const AbelianGroup& src1, const AbelianGroup& src2,
                            const AbelianGroup& dst) {
    return BiadditiveMap(src1, src2, dst,
                         std::vector<Elem>(src1.rank() * src2.rank(), dst.zero()));
  }

 private:
  AbelianGroup src1_, src2_, dst_;
  std::vector<Elem> img_;
};

// Indexable space of biadditive self-maps of a graded carrier with the block
// constraint applied during generation: the candidate values for the image at
// generator pair (i,j) range over the elements of A_{deg_i+deg_j} annihilated
// by both generator orders. Index order is lexicographic over row-major
// generator pairs.
class BiadditiveSpace {
 public:
  BiadditiveSpace(const GradedRing& G, std::int64_t bound) : graded_(G) {
    const AbelianGroup& g = G.ring().carrier();
    const auto& mask = G.coordinate_degrees();
    const std::size_t k = g.rank();
    __int128 total = 1;
    entry_values_.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<Elem>& vals = entry_values_[i * k + j];
        // per destination coordinate t: multiples of m_t / gcd(n_i, n_j, m_t),
        // zero unless t has the required parity
        const int want = (mask[i] + mask[j]) % 2;
        std::vector<std::vector<std::int64_t>> coord_vals(k);
        for (std::size_t t = 0; t < k; ++t) {
          if (mask[t] != want) {
            coord_vals[t] = {0};
            continue;
          }
          const std::int64_t mt = g.factor(t);
          const std::int64_t gg = std::gcd(std::gcd(g.factor(i), g.factor(j)), mt);
          for (std::int64_t v = 0; v < gg; ++v) coord_vals[t].push_back(v * (mt / gg));
        }
        // cartesian product in coordinate order
        vals.push_back(g.zero());
        for (std::size_t t = 0; t < k; ++t) {
          std::vector<Elem> next;
          next.reserve(vals.size() * coord_vals[t].size());
          for (const Elem& e : vals)
            for (std::int64_t v : coord_vals[t]) {
              Elem e2 = e;
              e2.c[t] = v;
              next.push_back(std::move(e2));
            }
          vals = std::move(next);
        }
        std::sort(vals.begin(), vals.end());
        total *= (std::int64_t)vals.size();
        if (total > bound)
          throw BoundExceeded("biadditive space on " + G.ring().name() + " exceeds bound " +
                              std::to_string(bound));
      }
    size_ = (std::int64_t)total;
  }

  std::int64_t size() const { return size_; }

  // Admissible images at generator pair (i,j), in enumeration order.
  const std::vector<Elem>& entry_values(std::size_t i, std::size_t j) const {
    return entry_values_[i * graded_.ring().carrier().rank() + j];
  }

  BiadditiveMap at(std::int64_t index) const {
    if (index < 0 || index >= size_) throw std::out_of_range("biadditive index out of range");
    const AbelianGroup& g = graded_.ring().carrier();
    std::vector<Elem> imgs(entry_values_.size(), g.zero());
    for (std::size_t p = entry_values_.size(); p-- > 0;) {
      const auto& vals = entry_values_[p];
      imgs[p] = vals[index % (std::int64_t)vals.size()];
      index /= (std::int64_t)vals.size();
    }
    return BiadditiveMap(g, g, g, std::move(imgs));
  }

 private:
  GradedRing graded_;
  std::vector<std::vector<Elem>> entry_values_;
  std::int64_t size_ = 0;
};

}  // namespace superring
