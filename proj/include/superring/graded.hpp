#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superring/abelian.hpp"
#include "superring/constructions.hpp"
#include "superring/ring.hpp"
#include "superring/verdict.hpp"

namespace superring {

// x o y = xy + yx
inline Elem jordan_product(const Ring& R, const Elem& x, const Elem& y) {
  return R.add(R.mul(x, y), R.mul(y, x));
}

// [x,y] = xy - yx
inline Elem commutator(const Ring& R, const Elem& x, const Elem& y) {
  return R.sub(R.mul(x, y), R.mul(y, x));
}

// Bimodule Jordan product r o m = rm + mr (requires an (R,R)-bimodule).
inline Elem module_jordan(const Bimodule& M, const Elem& r, const Elem& m) {
  return M.add(M.left(r, m), M.right(m, r));
}

// A ring element known to be homogeneous, with its degree.
struct Homog {
  Elem elem;
  int degree = 0;  // 0 or 1
};

// Z2-grading of a ring by a coordinate mask: every carrier coordinate is
// assigned degree 0 (even) or 1 (odd), and A_i is the subgroup of elements
// supported on degree-i coordinates. Covers the gradings in scope: trivial
// extensions (R even, M odd) and triangular rings (diagonal even, corner odd).
class GradedRing {
 public:
  GradedRing(Ring ring, std::vector<int> coordinate_degrees)
      : ring_(std::move(ring)), degree_(std::move(coordinate_degrees)) {
    if (degree_.size() != ring_.carrier().rank())
      throw std::invalid_argument("grading mask size mismatch");
    std::vector<std::int64_t> even_f, odd_f;
    for (std::size_t i = 0; i < degree_.size(); ++i) {
      if (degree_[i] != 0 && degree_[i] != 1)
        throw std::invalid_argument("coordinate degree must be 0 or 1");
      if (degree_[i] == 0) {
        even_coords_.push_back(i);
        even_f.push_back(ring_.carrier().factor(i));
      } else {
        odd_coords_.push_back(i);
        odd_f.push_back(ring_.carrier().factor(i));
      }
    }
    even_group_ = AbelianGroup(std::move(even_f));
    odd_group_ = AbelianGroup(std::move(odd_f));
  }

  const Ring& ring() const { return ring_; }
  const std::vector<int>& coordinate_degrees() const { return degree_; }

  // The part subgroups as standalone groups (coordinates in mask order).
  const AbelianGroup& part_group(int degree) const {
    return degree == 0 ? even_group_ : odd_group_;
  }
  const std::vector<std::size_t>& part_coords(int degree) const {
    return degree == 0 ? even_coords_ : odd_coords_;
  }

  // Projection onto the degree-i part (other coordinates zeroed).
  Elem component(const Elem& x, int degree) const {
    ring_.require(x);
    Elem r = ring_.carrier().zero();
    for (std::size_t i : part_coords(degree)) r.c[i] = x.c[i];
    return r;
  }

  bool is_homogeneous(const Elem& x, int degree) const {
    return component(x, degree) == x;
  }

  // Degree of a homogeneous element; zero reports degree 0. Non-homogeneous
  // elements yield nullopt.
  std::optional<int> degree_of(const Elem& x) const {
    if (is_homogeneous(x, 0)) return 0;
    if (is_homogeneous(x, 1)) return 1;
    return std::nullopt;
  }

  Homog homog(const Elem& x, int degree) const {
    if (!is_homogeneous(x, degree))
      throw std::invalid_argument("element " + to_string(x) +
                                  " is not homogeneous of degree " + std::to_string(degree));
    return Homog{x, degree};
  }

  // Compressed part element <-> full carrier element.
  Elem embed(const Elem& part_elem, int degree) const {
    const auto& coords = part_coords(degree);
    if (part_elem.c.size() != coords.size())
      throw std::invalid_argument("part element rank mismatch");
    Elem r = ring_.carrier().zero();
    for (std::size_t i = 0; i < coords.size(); ++i) r.c[coords[i]] = part_elem.c[i];
    ring_.carrier().require(r);
    return r;
  }

  Elem project(const Elem& x, int degree) const {
    ring_.require(x);
    const auto& coords = part_coords(degree);
    Elem r = part_group(degree).zero();
    for (std::size_t i = 0; i < coords.size(); ++i) r.c[i] = x.c[coords[i]];
    return r;
  }

  // All homogeneous elements: the even part in index order, then the odd part.
  std::vector<Homog> homogeneous_elements() const {
    std::vector<Homog> out;
    for (int d = 0; d <= 1; ++d)
      for (std::int64_t i = 0; i < part_group(d).order(); ++i)
        out.push_back(Homog{embed(part_group(d).element_at(i), d), d});
    return out;
  }

  // sigma(a0 + a1) = a0 - a1: negates the odd coordinates.
  Elem sigma(const Elem& x) const {
    return ring_.add(component(x, 0), ring_.neg(component(x, 1)));
  }

 private:
  Ring ring_;
  std::vector<int> degree_;
  std::vector<std::size_t> even_coords_, odd_coords_;
  AbelianGroup even_group_, odd_group_;
};

// x o_s y = xy + (-1)^{|x||y|} yx on homogeneous elements; the result is
// homogeneous of degree |x|+|y|.
inline Homog superproduct(const GradedRing& G, const Homog& x, const Homog& y) {
  const Ring& R = G.ring();
  Elem xy = R.mul(x.elem, y.elem);
  Elem yx = R.mul(y.elem, x.elem);
  Elem v = (x.degree == 1 && y.degree == 1) ? R.sub(xy, yx) : R.add(xy, yx);
  return Homog{std::move(v), (x.degree + y.degree) % 2};
}

// Grading closure, direct-sum decomposition and unit parity, checked
// exhaustively over homogeneous pairs.
inline Verdict validate_grading(const GradedRing& G, std::int64_t bound = 4096) {
  const Ring& R = G.ring();
  if (R.order() > bound) throw BoundExceeded("grading check exceeds bound");
  if (!G.is_homogeneous(R.one(), 0))
    return Verdict::fail({"1 in A0", {}, R.one(), G.component(R.one(), 0)});
  auto homog = G.homogeneous_elements();
  for (const Homog& x : homog)
    for (const Homog& y : homog) {
      Elem p = R.mul(x.elem, y.elem);
      int want = (x.degree + y.degree) % 2;
      if (!G.is_homogeneous(p, want))
        return Verdict::fail({"A_i A_j in A_{i+j}",
                              {{"x", x.elem}, {"y", y.elem}},
                              p,
                              G.component(p, want)});
    }
  // sigma is an involutive ring automorphism fixing 1.
  if (G.sigma(R.one()) != R.one())
    return Verdict::fail({"sigma(1) = 1", {}, G.sigma(R.one()), R.one()});
  for (std::int64_t i = 0; i < R.order(); ++i) {
    Elem x = R.carrier().element_at(i);
    if (G.sigma(G.sigma(x)) != x)
      return Verdict::fail({"sigma(sigma(x)) = x", {{"x", x}}, G.sigma(G.sigma(x)), x});
    for (std::int64_t j = 0; j < R.order(); ++j) {
      Elem y = R.carrier().element_at(j);
      Elem lhs = G.sigma(R.mul(x, y));
      Elem rhs = R.mul(G.sigma(x), G.sigma(y));
      if (lhs != rhs)
        return Verdict::fail({"sigma(xy) = sigma(x)sigma(y)", {{"x", x}, {"y", y}}, lhs, rhs});
    }
  }
  return Verdict::pass();
}

// A0 = {(r,0)}, A1 = {(0,m)}.
inline GradedRing grade_trivial_extension(const TrivialExtension& te) {
  std::vector<int> mask(te.ring.carrier().rank(), 0);
  for (std::size_t i = te.base.carrier().rank(); i < mask.size(); ++i) mask[i] = 1;
  return GradedRing(te.ring, std::move(mask));
}

// Diagonal even, corner odd (the grading transported through the
// trivial-extension identification).
inline GradedRing grade_triangular(const TriangularRing& tri) {
  std::vector<int> mask(tri.ring.carrier().rank(), 0);
  const std::size_t kr = tri.left.carrier().rank();
  const std::size_t km = tri.module.carrier().rank();
  for (std::size_t i = kr; i < kr + km; ++i) mask[i] = 1;
  return GradedRing(tri.ring, std::move(mask));
}

}  // namespace superring
