#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "superring/abelian.hpp"
#include "superring/bimodule.hpp"
#include "superring/graded.hpp"
#include "superring/maps.hpp"
#include "superring/ring.hpp"
#include "superring/verdict.hpp"

namespace superring {

inline constexpr std::int64_t kDefaultBound = 4096;

namespace detail {
inline void gate(const Ring& R, std::int64_t bound, const char* what) {
  if (R.order() > bound)
    throw BoundExceeded(std::string(what) + " on " + R.name() + " exceeds bound " +
                        std::to_string(bound));
}
}  // namespace detail

// d(ab) = d(a)b + a d(b) for an additive d: R -> M.
inline Verdict is_derivation(const Ring& R, const Bimodule& M, const AdditiveMap& d,
                             std::int64_t bound = kDefaultBound) {
  detail::gate(R, bound, "derivation check");
  const AbelianGroup& g = R.carrier();
  for (std::int64_t i = 0; i < g.order(); ++i) {
    Elem a = g.element_at(i);
    Elem da = d.apply(a);
    for (std::int64_t j = 0; j < g.order(); ++j) {
      Elem b = g.element_at(j);
      Elem lhs = d.apply(R.mul(a, b));
      Elem rhs = M.add(M.right(da, b), M.left(a, d.apply(b)));
      if (lhs != rhs)
        return Verdict::fail({"d(ab) = d(a)b + a d(b)", {{"a", a}, {"b", b}}, lhs, rhs});
    }
  }
  return Verdict::pass();
}

inline Verdict is_derivation(const Ring& R, const AdditiveMap& d,
                             std::int64_t bound = kDefaultBound) {
  return is_derivation(R, ring_as_bimodule(R), d, bound);
}

// d(a o b) = d(a) o b + a o d(b) for an additive d: R -> M.
inline Verdict is_jordan_derivation(const Ring& R, const Bimodule& M, const AdditiveMap& d,
                                    std::int64_t bound = kDefaultBound) {
  detail::gate(R, bound, "Jordan derivation check");
  const AbelianGroup& g = R.carrier();
  for (std::int64_t i = 0; i < g.order(); ++i) {
    Elem a = g.element_at(i);
    Elem da = d.apply(a);
    for (std::int64_t j = 0; j < g.order(); ++j) {
      Elem b = g.element_at(j);
      Elem lhs = d.apply(jordan_product(R, a, b));
      Elem rhs = M.add(module_jordan(M, b, da), module_jordan(M, a, d.apply(b)));
      if (lhs != rhs)
        return Verdict::fail({"d(aob) = d(a)ob + aod(b)", {{"a", a}, {"b", b}}, lhs, rhs});
    }
  }
  return Verdict::pass();
}

inline Verdict is_jordan_derivation(const Ring& R, const AdditiveMap& d,
                                    std::int64_t bound = kDefaultBound) {
  return is_jordan_derivation(R, ring_as_bimodule(R), d, bound);
}

// d(xy) = d(x)y + (-1)^{i|x|} x d(y) over homogeneous pairs.
inline Verdict is_superderivation(const GradedMap& d, std::int64_t bound = kDefaultBound) {
  const GradedRing& G = d.graded();
  const Ring& R = G.ring();
  detail::gate(R, bound, "superderivation check");
  auto homog = G.homogeneous_elements();
  for (const Homog& x : homog) {
    Elem dx = d.apply(x.elem);
    const bool flip = (d.degree() * x.degree) % 2 == 1;
    for (const Homog& y : homog) {
      Elem lhs = d.apply(R.mul(x.elem, y.elem));
      Elem second = R.mul(x.elem, d.apply(y.elem));
      Elem rhs = flip ? R.sub(R.mul(dx, y.elem), second) : R.add(R.mul(dx, y.elem), second);
      if (lhs != rhs)
        return Verdict::fail({"d(xy) = d(x)y + (-1)^{i|x|} x d(y)",
                              {{"x", x.elem}, {"y", y.elem}},
                              lhs,
                              rhs});
    }
  }
  return Verdict::pass();
}

// d(x o_s y) = d(x) o_s y + (-1)^{i|x|} x o_s d(y) over homogeneous pairs.
inline Verdict is_jordan_superderivation(const GradedMap& d,
                                         std::int64_t bound = kDefaultBound) {
  const GradedRing& G = d.graded();
  const Ring& R = G.ring();
  detail::gate(R, bound, "Jordan superderivation check");
  auto homog = G.homogeneous_elements();
  for (const Homog& x : homog) {
    Homog dx = d.apply(x);
    const bool flip = (d.degree() * x.degree) % 2 == 1;
    for (const Homog& y : homog) {
      Elem lhs = d.apply(superproduct(G, x, y).elem);
      Elem first = superproduct(G, dx, y).elem;
      Elem second = superproduct(G, x, d.apply(y)).elem;
      Elem rhs = flip ? R.sub(first, second) : R.add(first, second);
      if (lhs != rhs)
        return Verdict::fail({"d(xo_sy) = d(x)o_sy + (-1)^{i|x|} xo_sd(y)",
                              {{"x", x.elem}, {"y", y.elem}},
                              lhs,
                              rhs});
    }
  }
  return Verdict::pass();
}

// B: R x R -> M is a Jordan derivation in each slot:
//   B(x o y, z) = B(x,z) o y + x o B(y,z)
//   B(x, y o z) = B(x,y) o z + y o B(x,z)
inline Verdict is_jordan_biderivation(const Ring& R, const Bimodule& M, const BiadditiveMap& B,
                                      std::int64_t bound = kDefaultBound) {
  detail::gate(R, bound, "Jordan biderivation check");
  const AbelianGroup& g = R.carrier();
  for (std::int64_t i = 0; i < g.order(); ++i) {
    Elem x = g.element_at(i);
    for (std::int64_t j = 0; j < g.order(); ++j) {
      Elem y = g.element_at(j);
      Elem xoy = jordan_product(R, x, y);
      for (std::int64_t k = 0; k < g.order(); ++k) {
        Elem z = g.element_at(k);
        {
          Elem lhs = B.apply(xoy, z);
          Elem rhs = M.add(module_jordan(M, y, B.apply(x, z)),
                           module_jordan(M, x, B.apply(y, z)));
          if (lhs != rhs)
            return Verdict::fail({"B(xoy,z) = B(x,z)oy + xoB(y,z)",
                                  {{"x", x}, {"y", y}, {"z", z}},
                                  lhs,
                                  rhs});
        }
        {
          Elem lhs = B.apply(x, jordan_product(R, y, z));
          Elem rhs = M.add(module_jordan(M, z, B.apply(x, y)),
                           module_jordan(M, y, B.apply(x, z)));
          if (lhs != rhs)
            return Verdict::fail({"B(x,yoz) = B(x,y)oz + yoB(x,z)",
                                  {{"x", x}, {"y", y}, {"z", z}},
                                  lhs,
                                  rhs});
        }
      }
    }
  }
  return Verdict::pass();
}

inline Verdict is_jordan_biderivation(const Ring& R, const BiadditiveMap& B,
                                      std::int64_t bound = kDefaultBound) {
  return is_jordan_biderivation(R, ring_as_bimodule(R), B, bound);
}

// Graded biadditive self-map satisfying the block constraint and
//   B(x, yo_sz) = B(x,y)o_sz + (-1)^{|x||y|} yo_sB(x,z)
//   B(xo_sy, z) = xo_sB(y,z) + (-1)^{|y||z|} B(x,z)o_sy
// over homogeneous triples.
inline Verdict is_jordan_super_biderivation(const GradedRing& G, const BiadditiveMap& B,
                                            std::int64_t bound = kDefaultBound) {
  const Ring& R = G.ring();
  detail::gate(R, bound, "Jordan super-biderivation check");
  if (Verdict blocks = BiadditiveMap::check_blocks(G, B); !blocks.ok()) return blocks;
  auto homog = G.homogeneous_elements();
  auto bval = [&](const Homog& a, const Homog& b) {
    return Homog{B.apply(a.elem, b.elem), (a.degree + b.degree) % 2};
  };
  for (const Homog& x : homog)
    for (const Homog& y : homog) {
      Homog bxy = bval(x, y);
      const bool flip_xy = (x.degree * y.degree) % 2 == 1;
      for (const Homog& z : homog) {
        Homog bxz = bval(x, z);
        {
          Elem lhs = B.apply(x.elem, superproduct(G, y, z).elem);
          Elem first = superproduct(G, bxy, z).elem;
          Elem second = superproduct(G, y, bxz).elem;
          Elem rhs = flip_xy ? R.sub(first, second) : R.add(first, second);
          if (lhs != rhs)
            return Verdict::fail({"B(x,yo_sz) = B(x,y)o_sz + (-1)^{|x||y|} yo_sB(x,z)",
                                  {{"x", x.elem}, {"y", y.elem}, {"z", z.elem}},
                                  lhs,
                                  rhs});
        }
        {
          const bool flip_yz = (y.degree * z.degree) % 2 == 1;
          Elem lhs = B.apply(superproduct(G, x, y).elem, z.elem);
          Elem first = superproduct(G, x, bval(y, z)).elem;
          Elem second = superproduct(G, bxz, y).elem;
          Elem rhs = flip_yz ? R.sub(first, second) : R.add(first, second);
          if (lhs != rhs)
            return Verdict::fail({"B(xo_sy,z) = xo_sB(y,z) + (-1)^{|y||z|} B(x,z)o_sy",
                                  {{"x", x.elem}, {"y", y.elem}, {"z", z.elem}},
                                  lhs,
                                  rhs});
        }
      }
    }
  return Verdict::pass();
}

// The slice characterization: for even a, B(a,.) and B(.,a) are Jordan
// superderivations of degree 0; for odd a, B(a,.) and sigma(B(.,a)) are
// Jordan superderivations of degree 1. Cross-validates the identity form.
inline Verdict is_jordan_super_biderivation_via_slices(const GradedRing& G,
                                                       const BiadditiveMap& B,
                                                       std::int64_t bound = kDefaultBound) {
  const Ring& R = G.ring();
  detail::gate(R, bound, "Jordan super-biderivation slice check");
  if (Verdict blocks = BiadditiveMap::check_blocks(G, B); !blocks.ok()) return blocks;
  const AbelianGroup& g = R.carrier();
  auto slice_hom = [&](const std::function<Elem(const Elem&)>& f) {
    std::vector<Elem> images;
    for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(f(g.generator(i)));
    return map_from_generator_images(g, g, images);
  };
  for (const Homog& a : G.homogeneous_elements()) {
    GradedMap left(G, slice_hom([&](const Elem& x) { return B.apply(a.elem, x); }), a.degree);
    if (Verdict v = is_jordan_superderivation(left, bound); !v.ok()) {
      v.counterexample->where.emplace_back("slice B(a,.), a", a.elem);
      return v;
    }
    GradedMap right(G,
                    slice_hom([&](const Elem& x) {
                      Elem val = B.apply(x, a.elem);
                      return a.degree == 1 ? G.sigma(val) : val;
                    }),
                    a.degree);
    if (Verdict v = is_jordan_superderivation(right, bound); !v.ok()) {
      v.counterexample->where.emplace_back(
          a.degree == 1 ? "slice sigma(B(.,a)), a" : "slice B(.,a), a", a.elem);
      return v;
    }
  }
  return Verdict::pass();
}

// Smallest ring element (in enumeration order) whose inner derivation equals
// d, if any.
inline std::optional<Elem> find_inner(const Ring& R, const AdditiveMap& d,
                                      std::int64_t bound = kDefaultBound) {
  detail::gate(R, bound, "inner derivation search");
  const AbelianGroup& g = R.carrier();
  for (std::int64_t i = 0; i < g.order(); ++i) {
    Elem a = g.element_at(i);
    if (inner_derivation(R, a) == d) return a;
  }
  return std::nullopt;
}

// Full value table of an additive map, built by additive closure from the
// generator images rather than by matrix action: table[index_of(x)] = d(x).
// Used as an independent evaluation path when confirming witnesses.
inline std::vector<Elem> tabulate_additive(const GroupHom& d) {
  const AbelianGroup& src = d.src();
  const AbelianGroup& dst = d.dst();
  std::vector<Elem> table((std::size_t)src.order(), dst.zero());
  for (std::int64_t idx = 1; idx < src.order(); ++idx) {
    Elem x = src.element_at(idx);
    // split off one unit of the last nonzero coordinate
    std::size_t last = 0;
    for (std::size_t i = 0; i < x.c.size(); ++i)
      if (x.c[i] != 0) last = i;
    Elem prev = x;
    prev.c[last] -= 1;
    table[(std::size_t)idx] =
        dst.add(table[(std::size_t)src.index_of(prev)], d.image_of_generator(last));
  }
  return table;
}

}  // namespace superring
