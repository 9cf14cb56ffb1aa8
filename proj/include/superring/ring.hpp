#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "superring/abelian.hpp"
#include "superring/verdict.hpp"

namespace superring {

// Finite unital ring over an abelian-group carrier. Multiplication is a
// closed-form rule captured at construction (builtin constructors) or a
// structure-constant table; both are bilinear over the carrier.
class Ring {
 public:
  using MulFn = std::function<Elem(const Elem&, const Elem&)>;

  Ring(AbelianGroup carrier, Elem one, MulFn mul, std::string name)
      : carrier_(std::move(carrier)),
        one_(std::move(one)),
        mul_(std::move(mul)),
        name_(std::move(name)) {
    carrier_.require(one_);
  }

  const AbelianGroup& carrier() const { return carrier_; }
  const Elem& one() const { return one_; }
  const std::string& name() const { return name_; }
  std::int64_t order() const { return carrier_.order(); }

  Elem zero() const { return carrier_.zero(); }
  Elem add(const Elem& a, const Elem& b) const { return carrier_.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return carrier_.sub(a, b); }
  Elem neg(const Elem& a) const { return carrier_.neg(a); }

  Elem mul(const Elem& a, const Elem& b) const {
    carrier_.require(a);
    carrier_.require(b);
    return mul_(a, b);
  }

  void require(const Elem& x) const {
    if (!carrier_.contains(x))
      throw std::invalid_argument("element " + to_string(x) + " does not belong to ring " +
                                  name_);
  }

  // Structural identity; factory names are canonical.
  bool same_ring_as(const Ring& o) const {
    return carrier_ == o.carrier_ && one_ == o.one_ && name_ == o.name_;
  }

 private:
  AbelianGroup carrier_;
  Elem one_;
  MulFn mul_;
  std::string name_;
};

// Z_n with modular arithmetic. n = 1 gives the zero ring (one = 0).
inline Ring zn_ring(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("zn_ring requires n >= 1");
  AbelianGroup g({n});
  Elem one = g.make({n > 1 ? 1 : 0});
  auto mul = [n](const Elem& a, const Elem& b) {
    return Elem({mod_reduce(a.c[0] * b.c[0], n)});
  };
  return Ring(std::move(g), std::move(one), std::move(mul), "Z" + std::to_string(n));
}

// Componentwise product ring R x S.
inline Ring product_ring(const Ring& r, const Ring& s) {
  AbelianGroup g = AbelianGroup::direct_sum(r.carrier(), s.carrier());
  std::vector<std::int64_t> one = r.one().c;
  one.insert(one.end(), s.one().c.begin(), s.one().c.end());
  const std::size_t kr = r.carrier().rank();
  auto split = [kr](const Elem& x) {
    Elem a(std::vector<std::int64_t>(x.c.begin(), x.c.begin() + kr));
    Elem b(std::vector<std::int64_t>(x.c.begin() + kr, x.c.end()));
    return std::make_pair(std::move(a), std::move(b));
  };
  auto mul = [r, s, split](const Elem& x, const Elem& y) {
    auto [xr, xs] = split(x);
    auto [yr, ys] = split(y);
    Elem pr = r.mul(xr, yr);
    Elem ps = s.mul(xs, ys);
    pr.c.insert(pr.c.end(), ps.c.begin(), ps.c.end());
    return pr;
  };
  return Ring(std::move(g), Elem(std::move(one)), std::move(mul),
              r.name() + "x" + s.name());
}

// Ring from explicit structure constants: table[i*k+j] is the product of
// generators e_i * e_j, extended bilinearly. Bilinear well-definedness needs
// n_i * t == 0 and n_j * t == 0 coordinatewise for each table entry t.
inline Ring table_ring(AbelianGroup carrier, Elem one, std::vector<Elem> table,
                       std::string name) {
  const std::size_t k = carrier.rank();
  if (table.size() != k * k) throw std::invalid_argument("structure table shape mismatch");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem& t = table[i * k + j];
      carrier.require(t);
      for (std::size_t p = 0; p < k; ++p) {
        if (mod_reduce(carrier.factor(i) * t.c[p], carrier.factor(p)) != 0 ||
            mod_reduce(carrier.factor(j) * t.c[p], carrier.factor(p)) != 0)
          throw std::invalid_argument("structure constant at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") violates generator orders");
      }
    }
  auto mul = [carrier, table, k](const Elem& a, const Elem& b) {
    Elem r = carrier.zero();
    for (std::size_t i = 0; i < k; ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (b.c[j] == 0) continue;
        r = carrier.add(r, carrier.scale(a.c[i] * b.c[j], table[i * k + j]));
      }
    }
    return r;
  };
  return Ring(std::move(carrier), std::move(one), std::move(mul), std::move(name));
}

// Exhaustive ring-axiom validation: distributivity on both sides,
// associativity, and two-sided identity.
inline Verdict validate_ring(const Ring& R, std::int64_t bound = 4096) {
  const AbelianGroup& g = R.carrier();
  const std::int64_t n = g.order();
  if (n > bound)
    throw BoundExceeded("ring " + R.name() + " order " + std::to_string(n) +
                        " exceeds bound " + std::to_string(bound));
  for (std::int64_t i = 0; i < n; ++i) {
    Elem x = g.element_at(i);
    if (R.mul(R.one(), x) != x)
      return Verdict::fail({"1*x = x", {{"x", x}}, R.mul(R.one(), x), x});
    if (R.mul(x, R.one()) != x)
      return Verdict::fail({"x*1 = x", {{"x", x}}, R.mul(x, R.one()), x});
  }
  for (std::int64_t i = 0; i < n; ++i) {
    Elem x = g.element_at(i);
    for (std::int64_t j = 0; j < n; ++j) {
      Elem y = g.element_at(j);
      Elem xy = R.mul(x, y);
      for (std::int64_t k = 0; k < n; ++k) {
        Elem z = g.element_at(k);
        Elem lhs = R.mul(xy, z);
        Elem rhs = R.mul(x, R.mul(y, z));
        if (lhs != rhs)
          return Verdict::fail({"(xy)z = x(yz)", {{"x", x}, {"y", y}, {"z", z}}, lhs, rhs});
        Elem dl = R.mul(x, g.add(y, z));
        Elem dr = g.add(R.mul(x, y), R.mul(x, z));
        if (dl != dr)
          return Verdict::fail({"x(y+z) = xy+xz", {{"x", x}, {"y", y}, {"z", z}}, dl, dr});
        Elem el = R.mul(g.add(y, z), x);
        Elem er = g.add(R.mul(y, x), R.mul(z, x));
        if (el != er)
          return Verdict::fail({"(y+z)x = yx+zx", {{"x", x}, {"y", y}, {"z", z}}, el, er});
      }
    }
  }
  return Verdict::pass();
}

// 2x = 0 implies x = 0, checked exhaustively.
inline bool is_two_torsion_free(const AbelianGroup& g) {
  for (std::int64_t i = 0; i < g.order(); ++i) {
    Elem x = g.element_at(i);
    if (g.scale(2, x) == g.zero() && x != g.zero()) return false;
  }
  return true;
}

inline bool is_two_torsion_free(const Ring& R) { return is_two_torsion_free(R.carrier()); }

// 2x = 0 for every x.
inline bool is_two_torsion(const AbelianGroup& g) {
  for (std::int64_t i = 0; i < g.order(); ++i)
    if (g.scale(2, g.element_at(i)) != g.zero()) return false;
  return true;
}

}  // namespace superring
