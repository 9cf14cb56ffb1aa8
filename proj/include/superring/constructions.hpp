#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superring/abelian.hpp"
#include "superring/bimodule.hpp"
#include "superring/ring.hpp"
#include "superring/verdict.hpp"

namespace superring {

// Trivial extension T(R,M): carrier R + M, multiplication
// (r,m)(r',m') = (rr', rm' + mr'), identity (1,0).
struct TrivialExtension {
  Ring base;
  Bimodule module;
  Ring ring;

  // Splits a T(R,M) element into its R and M parts.
  std::pair<Elem, Elem> split(const Elem& x) const {
    const std::size_t kr = base.carrier().rank();
    return {Elem(std::vector<std::int64_t>(x.c.begin(), x.c.begin() + kr)),
            Elem(std::vector<std::int64_t>(x.c.begin() + kr, x.c.end()))};
  }

  Elem join(const Elem& r, const Elem& m) const {
    base.require(r);
    module.carrier().require(m);
    Elem x = r;
    x.c.insert(x.c.end(), m.c.begin(), m.c.end());
    return x;
  }
};

inline TrivialExtension trivial_extension(const Ring& R, const Bimodule& M) {
  if (!M.left_ring().same_ring_as(R) || !M.right_ring().same_ring_as(R))
    throw std::invalid_argument("trivial_extension: module " + M.name() +
                                " is not an (R,R)-bimodule over " + R.name());
  AbelianGroup g = AbelianGroup::direct_sum(R.carrier(), M.carrier());
  std::vector<std::int64_t> one = R.one().c;
  one.insert(one.end(), M.carrier().rank(), 0);
  const std::size_t kr = R.carrier().rank();
  auto split = [kr](const Elem& x) {
    return std::make_pair(Elem(std::vector<std::int64_t>(x.c.begin(), x.c.begin() + kr)),
                          Elem(std::vector<std::int64_t>(x.c.begin() + kr, x.c.end())));
  };
  auto mul = [R, M, split](const Elem& x, const Elem& y) {
    auto [r, m] = split(x);
    auto [r2, m2] = split(y);
    Elem pr = R.mul(r, r2);
    Elem pm = M.add(M.left(r, m2), M.right(m, r2));
    pr.c.insert(pr.c.end(), pm.c.begin(), pm.c.end());
    return pr;
  };
  Ring ring(std::move(g), Elem(std::move(one)), std::move(mul),
            "T(" + R.name() + "," + M.name() + ")");
  return TrivialExtension{R, M, std::move(ring)};
}

// Upper triangular matrix ring over R, S and an (R,S)-bimodule M:
// elements (r,m,s), multiplication (r,m,s)(r',m',s') = (rr', rm'+ms', ss').
struct TriangularRing {
  Ring left;
  Bimodule module;
  Ring right;
  Ring ring;

  std::tuple<Elem, Elem, Elem> split(const Elem& x) const {
    const std::size_t kr = left.carrier().rank();
    const std::size_t km = module.carrier().rank();
    return {Elem(std::vector<std::int64_t>(x.c.begin(), x.c.begin() + kr)),
            Elem(std::vector<std::int64_t>(x.c.begin() + kr, x.c.begin() + kr + km)),
            Elem(std::vector<std::int64_t>(x.c.begin() + kr + km, x.c.end()))};
  }

  Elem join(const Elem& r, const Elem& m, const Elem& s) const {
    left.require(r);
    module.carrier().require(m);
    right.require(s);
    Elem x = r;
    x.c.insert(x.c.end(), m.c.begin(), m.c.end());
    x.c.insert(x.c.end(), s.c.begin(), s.c.end());
    return x;
  }
};

inline TriangularRing triangular_ring(const Ring& R, const Bimodule& M, const Ring& S) {
  if (!M.left_ring().same_ring_as(R) || !M.right_ring().same_ring_as(S))
    throw std::invalid_argument("triangular_ring: module " + M.name() +
                                " is not an (R,S)-bimodule over " + R.name() + "," + S.name());
  AbelianGroup g = AbelianGroup::direct_sum(
      AbelianGroup::direct_sum(R.carrier(), M.carrier()), S.carrier());
  std::vector<std::int64_t> one = R.one().c;
  one.insert(one.end(), M.carrier().rank(), 0);
  one.insert(one.end(), S.one().c.begin(), S.one().c.end());
  const std::size_t kr = R.carrier().rank(), km = M.carrier().rank();
  auto split = [kr, km](const Elem& x) {
    return std::make_tuple(
        Elem(std::vector<std::int64_t>(x.c.begin(), x.c.begin() + kr)),
        Elem(std::vector<std::int64_t>(x.c.begin() + kr, x.c.begin() + kr + km)),
        Elem(std::vector<std::int64_t>(x.c.begin() + kr + km, x.c.end())));
  };
  auto mul = [R, M, S, split](const Elem& x, const Elem& y) {
    auto [r, m, s] = split(x);
    auto [r2, m2, s2] = split(y);
    Elem pr = R.mul(r, r2);
    Elem pm = M.add(M.left(r, m2), M.right(m, s2));
    Elem ps = S.mul(s, s2);
    pr.c.insert(pr.c.end(), pm.c.begin(), pm.c.end());
    pr.c.insert(pr.c.end(), ps.c.begin(), ps.c.end());
    return pr;
  };
  Ring ring(std::move(g), Elem(std::move(one)), std::move(mul),
            "Tri(" + R.name() + "," + M.name() + "," + S.name() + ")");
  return TriangularRing{R, M, S, std::move(ring)};
}

// An (R,S)-bimodule M made into an (RxS, RxS)-bimodule:
// (r,s)m = rm and m(r,s) = ms.
inline Bimodule product_bimodule(const Bimodule& M, const Ring& product) {
  const std::size_t kr = M.left_ring().carrier().rank();
  auto split = [kr](const Elem& x) {
    return std::make_pair(Elem(std::vector<std::int64_t>(x.c.begin(), x.c.begin() + kr)),
                          Elem(std::vector<std::int64_t>(x.c.begin() + kr, x.c.end())));
  };
  if (product.carrier() !=
      AbelianGroup::direct_sum(M.left_ring().carrier(), M.right_ring().carrier()))
    throw std::invalid_argument("product_bimodule: ring is not the product of the sides");
  auto l = [M, split](const Elem& rs, const Elem& m) {
    auto [r, s] = split(rs);
    (void)s;
    return M.left(r, m);
  };
  auto r = [M, split](const Elem& m, const Elem& rs) {
    auto [r2, s] = split(rs);
    (void)r2;
    return M.right(m, s);
  };
  return Bimodule(M.carrier(), product, product, std::move(l), std::move(r), M.name());
}

// A ring isomorphism given by mutually inverse additive maps.
struct RingIso {
  Ring from;
  Ring to;
  GroupHom fwd;
  GroupHom inv;
};

// Exhaustive isomorphism check: unit preservation, multiplicativity, and
// two-sided invertibility. Additivity is inherent in GroupHom.
inline Verdict verify_ring_iso(const RingIso& iso, std::int64_t bound = 4096) {
  const AbelianGroup& a = iso.from.carrier();
  const AbelianGroup& b = iso.to.carrier();
  if (a.order() > bound) throw BoundExceeded("ring iso check exceeds bound");
  {
    Elem lhs = iso.fwd.apply(iso.from.one());
    if (lhs != iso.to.one()) return Verdict::fail({"phi(1) = 1", {}, lhs, iso.to.one()});
  }
  for (std::int64_t i = 0; i < a.order(); ++i) {
    Elem x = a.element_at(i);
    Elem back = iso.inv.apply(iso.fwd.apply(x));
    if (back != x) return Verdict::fail({"phi^-1(phi(x)) = x", {{"x", x}}, back, x});
  }
  for (std::int64_t i = 0; i < b.order(); ++i) {
    Elem y = b.element_at(i);
    Elem fwd = iso.fwd.apply(iso.inv.apply(y));
    if (fwd != y) return Verdict::fail({"phi(phi^-1(y)) = y", {{"y", y}}, fwd, y});
  }
  for (std::int64_t i = 0; i < a.order(); ++i) {
    Elem x = a.element_at(i);
    for (std::int64_t j = 0; j < a.order(); ++j) {
      Elem y = a.element_at(j);
      Elem lhs = iso.fwd.apply(iso.from.mul(x, y));
      Elem rhs = iso.to.mul(iso.fwd.apply(x), iso.fwd.apply(y));
      if (lhs != rhs)
        return Verdict::fail({"phi(xy) = phi(x)phi(y)", {{"x", x}, {"y", y}}, lhs, rhs});
    }
  }
  return Verdict::pass();
}

namespace detail {
// Permutation hom sending source coordinate i to destination coordinate
// perm[i]; factor lists must match position-wise.
inline GroupHom coordinate_permutation_hom(const AbelianGroup& src, const AbelianGroup& dst,
                                           const std::vector<std::size_t>& perm) {
  std::vector<std::int64_t> m(src.rank() * dst.rank(), 0);
  for (std::size_t i = 0; i < src.rank(); ++i) {
    if (src.factor(i) != dst.factor(perm[i]))
      throw std::invalid_argument("coordinate permutation factor mismatch");
    m[i * dst.rank() + perm[i]] = src.factor(i) > 1 ? 1 : 0;
  }
  return GroupHom(src, dst, std::move(m));
}
}  // namespace detail

// The identification of a triangular matrix ring with the trivial extension
// T(RxS, M): (r,m,s) -> ((r,s), m). Coordinates [R|M|S] -> [R|S|M].
struct TriangularTrivialIso {
  TrivialExtension te;
  GroupHom fwd;  // triangular carrier -> T(RxS,M) carrier
  GroupHom inv;
};

inline TriangularTrivialIso triangular_to_trivial_iso(const TriangularRing& tri) {
  Ring prod = product_ring(tri.left, tri.right);
  Bimodule mod = product_bimodule(tri.module, prod);
  TrivialExtension te = trivial_extension(prod, mod);
  const std::size_t kr = tri.left.carrier().rank();
  const std::size_t km = tri.module.carrier().rank();
  const std::size_t ks = tri.right.carrier().rank();
  std::vector<std::size_t> perm(kr + km + ks);
  for (std::size_t i = 0; i < kr; ++i) perm[i] = i;                  // R -> R
  for (std::size_t i = 0; i < km; ++i) perm[kr + i] = kr + ks + i;   // M -> tail
  for (std::size_t i = 0; i < ks; ++i) perm[kr + km + i] = kr + i;   // S -> after R
  GroupHom fwd =
      detail::coordinate_permutation_hom(tri.ring.carrier(), te.ring.carrier(), perm);
  std::vector<std::size_t> inv_perm(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv_perm[perm[i]] = i;
  GroupHom inv =
      detail::coordinate_permutation_hom(te.ring.carrier(), tri.ring.carrier(), inv_perm);
  return TriangularTrivialIso{std::move(te), std::move(fwd), std::move(inv)};
}

// n x n upper triangular matrices over R. Entries are stored row-major over
// the upper triangle: (0,0),(0,1),...,(0,n-1),(1,1),...,(n-1,n-1).
inline std::size_t upper_tri_pos(std::size_t n, std::size_t i, std::size_t j) {
  // position of entry (i,j), i <= j
  return i * n - i * (i - 1) / 2 + (j - i);
}

inline Ring upper_triangular_tn(const Ring& R, std::size_t n, std::int64_t bound = 4096) {
  if (n < 1) throw std::invalid_argument("upper_triangular_tn requires n >= 1");
  const std::size_t entries = n * (n + 1) / 2;
  AbelianGroup g;
  {
    __int128 ord = 1;
    for (std::size_t t = 0; t < entries; ++t) {
      ord *= R.order();
      if (ord > bound)
        throw BoundExceeded("T" + std::to_string(n) + "(" + R.name() + ") exceeds bound " +
                            std::to_string(bound));
    }
    AbelianGroup acc;
    for (std::size_t t = 0; t < entries; ++t) acc = AbelianGroup::direct_sum(acc, R.carrier());
    g = std::move(acc);
  }
  const std::size_t kr = R.carrier().rank();
  auto block = [kr](const Elem& x, std::size_t t) {
    return Elem(std::vector<std::int64_t>(x.c.begin() + t * kr, x.c.begin() + (t + 1) * kr));
  };
  std::vector<std::int64_t> one;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Elem& src = (i == j) ? R.one() : R.zero();
      one.insert(one.end(), src.c.begin(), src.c.end());
    }
  auto mul = [R, n, kr, block, g](const Elem& a, const Elem& b) {
    Elem out = g.zero();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Elem acc = R.zero();
        for (std::size_t k = i; k <= j; ++k) {
          Elem prod = R.mul(block(a, upper_tri_pos(n, i, k)), block(b, upper_tri_pos(n, k, j)));
          acc = R.add(acc, prod);
        }
        const std::size_t base = upper_tri_pos(n, i, j) * kr;
        for (std::size_t p = 0; p < kr; ++p) out.c[base + p] = acc.c[p];
      }
    return out;
  };
  return Ring(std::move(g), Elem(std::move(one)), std::move(mul),
              "T" + std::to_string(n) + "(" + R.name() + ")");
}

// R^w as an (R, T_w(R))-bimodule: scalars on the left, row vector times
// upper triangular matrix on the right.
inline Bimodule row_bimodule(const Ring& R, std::size_t w, const Ring& tw) {
  AbelianGroup g;
  for (std::size_t t = 0; t < w; ++t) g = AbelianGroup::direct_sum(g, R.carrier());
  const std::size_t kr = R.carrier().rank();
  auto block = [kr](const Elem& x, std::size_t t) {
    return Elem(std::vector<std::int64_t>(x.c.begin() + t * kr, x.c.begin() + (t + 1) * kr));
  };
  auto l = [R, w, kr, block, g](const Elem& r, const Elem& v) {
    Elem out = g.zero();
    for (std::size_t t = 0; t < w; ++t) {
      Elem prod = R.mul(r, block(v, t));
      for (std::size_t p = 0; p < kr; ++p) out.c[t * kr + p] = prod.c[p];
    }
    return out;
  };
  auto rt = [R, w, kr, block, g](const Elem& v, const Elem& mat) {
    Elem out = g.zero();
    for (std::size_t j = 0; j < w; ++j) {
      Elem acc = R.zero();
      for (std::size_t i = 0; i <= j; ++i)
        acc = R.add(acc, R.mul(block(v, i), block(mat, upper_tri_pos(w, i, j))));
      for (std::size_t p = 0; p < kr; ++p) out.c[j * kr + p] = acc.c[p];
    }
    return out;
  };
  return Bimodule(std::move(g), R, tw, std::move(l), std::move(rt),
                  R.name() + "^" + std::to_string(w));
}

// T_n(R) regarded as the triangular ring with corner R, row module R^{n-1}
// and lower block T_{n-1}(R). The upper-triangle storage order makes the
// carrier identification the identity permutation; the isomorphism content
// is that the two multiplications agree.
struct TnSplit {
  TriangularRing tri;
  RingIso iso;  // from = T_n(R), to = tri.ring
};

inline TnSplit remark_iso(const Ring& R, std::size_t n, std::int64_t bound = 4096) {
  if (n < 2) throw std::invalid_argument("remark_iso requires n >= 2");
  Ring tn = upper_triangular_tn(R, n, bound);
  Ring tn1 = upper_triangular_tn(R, n - 1, bound);
  Bimodule m = row_bimodule(R, n - 1, tn1);
  TriangularRing tri = triangular_ring(R, m, tn1);
  std::vector<std::size_t> ident(tn.carrier().rank());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  GroupHom fwd = detail::coordinate_permutation_hom(tn.carrier(), tri.ring.carrier(), ident);
  GroupHom inv = detail::coordinate_permutation_hom(tri.ring.carrier(), tn.carrier(), ident);
  RingIso iso{tn, tri.ring, std::move(fwd), std::move(inv)};
  return TnSplit{std::move(tri), std::move(iso)};
}

}  // namespace superring
