#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "superring/abelian.hpp"
#include "superring/ring.hpp"
#include "superring/verdict.hpp"

namespace superring {

// Unitary (R,S)-bimodule over a finite abelian carrier. Actions are bilinear
// rules captured at construction.
class Bimodule {
 public:
  using ActFn = std::function<Elem(const Elem&, const Elem&)>;

  Bimodule(AbelianGroup carrier, Ring left_ring, Ring right_ring, ActFn left, ActFn right,
           std::string name)
      : carrier_(std::move(carrier)),
        left_ring_(std::move(left_ring)),
        right_ring_(std::move(right_ring)),
        left_(std::move(left)),
        right_(std::move(right)),
        name_(std::move(name)) {}

  const AbelianGroup& carrier() const { return carrier_; }
  const Ring& left_ring() const { return left_ring_; }
  const Ring& right_ring() const { return right_ring_; }
  const std::string& name() const { return name_; }

  Elem zero() const { return carrier_.zero(); }
  Elem add(const Elem& a, const Elem& b) const { return carrier_.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return carrier_.sub(a, b); }
  Elem neg(const Elem& a) const { return carrier_.neg(a); }

  // r . m
  Elem left(const Elem& r, const Elem& m) const {
    left_ring_.require(r);
    carrier_.require(m);
    return left_(r, m);
  }

  // m . s
  Elem right(const Elem& m, const Elem& s) const {
    carrier_.require(m);
    right_ring_.require(s);
    return right_(m, s);
  }

 private:
  AbelianGroup carrier_;
  Ring left_ring_, right_ring_;
  ActFn left_, right_;
  std::string name_;
};

// A ring as a bimodule over itself; actions are ring multiplication.
inline Bimodule ring_as_bimodule(const Ring& R) {
  auto l = [R](const Elem& r, const Elem& m) { return R.mul(r, m); };
  auto r = [R](const Elem& m, const Elem& s) { return R.mul(m, s); };
  return Bimodule(R.carrier(), R, R, std::move(l), std::move(r), R.name());
}

// Z_q as a bimodule over Z_a (left) and Z_b (right) with q | a and q | b;
// the action reduces the scalar mod q and multiplies.
inline Bimodule zn_bimodule(std::int64_t q, const Ring& left, const Ring& right) {
  if (q < 1) throw std::invalid_argument("zn_bimodule requires q >= 1");
  for (const Ring* R : {&left, &right}) {
    if (R->carrier().rank() != 1)
      throw std::invalid_argument("zn_bimodule scalar ring must be cyclic: " + R->name());
    if (R->carrier().factor(0) % q != 0)
      throw std::invalid_argument("zn_bimodule needs q | ring order for a well-defined action");
  }
  AbelianGroup g({q});
  auto l = [q](const Elem& r, const Elem& m) {
    return Elem({mod_reduce(mod_reduce(r.c[0], q) * m.c[0], q)});
  };
  auto r = [q](const Elem& m, const Elem& s) {
    return Elem({mod_reduce(m.c[0] * mod_reduce(s.c[0], q), q)});
  };
  return Bimodule(std::move(g), left, right, std::move(l), std::move(r),
                  "Z" + std::to_string(q));
}

// Bimodule from explicit action tables on generator pairs, extended
// bilinearly. left_table[i*kM+j] = e_i^R . e_j^M, right_table[i*kS+...]
// indexed as m-generator x s-generator.
inline Bimodule table_bimodule(AbelianGroup carrier, Ring left_ring, Ring right_ring,
                               std::vector<Elem> left_table, std::vector<Elem> right_table,
                               std::string name) {
  const std::size_t kR = left_ring.carrier().rank();
  const std::size_t kM = carrier.rank();
  const std::size_t kS = right_ring.carrier().rank();
  if (left_table.size() != kR * kM || right_table.size() != kM * kS)
    throw std::invalid_argument("bimodule action table shape mismatch");
  auto check = [&](const AbelianGroup& a, const AbelianGroup& b, const std::vector<Elem>& t) {
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j) {
        const Elem& v = t[i * b.rank() + j];
        carrier.require(v);
        for (std::size_t p = 0; p < kM; ++p)
          if (mod_reduce(a.factor(i) * v.c[p], carrier.factor(p)) != 0 ||
              mod_reduce(b.factor(j) * v.c[p], carrier.factor(p)) != 0)
            throw std::invalid_argument("action table entry violates generator orders");
      }
  };
  check(left_ring.carrier(), carrier, left_table);
  check(carrier, right_ring.carrier(), right_table);
  auto bilinear = [carrier](const std::vector<Elem>& t, std::size_t cols, const Elem& a,
                            const Elem& b) {
    Elem r = carrier.zero();
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) {
        if (b.c[j] == 0) continue;
        r = carrier.add(r, carrier.scale(a.c[i] * b.c[j], t[i * cols + j]));
      }
    }
    return r;
  };
  auto l = [bilinear, left_table, kM](const Elem& r, const Elem& m) {
    return bilinear(left_table, kM, r, m);
  };
  auto r = [bilinear, right_table, kS](const Elem& m, const Elem& s) {
    return bilinear(right_table, kS, m, s);
  };
  return Bimodule(std::move(carrier), std::move(left_ring), std::move(right_ring),
                  std::move(l), std::move(r), std::move(name));
}

// Exhaustive bimodule-axiom validation: unitarity, action associativity,
// compatibility (rm)s = r(ms), and additivity of both actions in each slot.
inline Verdict validate_bimodule(const Bimodule& M, std::int64_t bound = 4096) {
  const AbelianGroup& g = M.carrier();
  const Ring& R = M.left_ring();
  const Ring& S = M.right_ring();
  if (g.order() > bound || R.order() > bound || S.order() > bound)
    throw BoundExceeded("bimodule " + M.name() + " exceeds bound");
  for (std::int64_t im = 0; im < g.order(); ++im) {
    Elem m = g.element_at(im);
    if (M.left(R.one(), m) != m)
      return Verdict::fail({"1*m = m", {{"m", m}}, M.left(R.one(), m), m});
    if (M.right(m, S.one()) != m)
      return Verdict::fail({"m*1 = m", {{"m", m}}, M.right(m, S.one()), m});
  }
  for (std::int64_t ir = 0; ir < R.order(); ++ir) {
    Elem r = R.carrier().element_at(ir);
    for (std::int64_t jr = 0; jr < R.order(); ++jr) {
      Elem r2 = R.carrier().element_at(jr);
      for (std::int64_t im = 0; im < g.order(); ++im) {
        Elem m = g.element_at(im);
        Elem lhs = M.left(R.mul(r, r2), m);
        Elem rhs = M.left(r, M.left(r2, m));
        if (lhs != rhs)
          return Verdict::fail({"(rr')m = r(r'm)", {{"r", r}, {"r'", r2}, {"m", m}}, lhs, rhs});
        Elem al = M.left(R.add(r, r2), m);
        Elem ar = g.add(M.left(r, m), M.left(r2, m));
        if (al != ar)
          return Verdict::fail({"(r+r')m = rm+r'm", {{"r", r}, {"r'", r2}, {"m", m}}, al, ar});
      }
    }
  }
  for (std::int64_t is = 0; is < S.order(); ++is) {
    Elem s = S.carrier().element_at(is);
    for (std::int64_t js = 0; js < S.order(); ++js) {
      Elem s2 = S.carrier().element_at(js);
      for (std::int64_t im = 0; im < g.order(); ++im) {
        Elem m = g.element_at(im);
        Elem lhs = M.right(m, S.mul(s, s2));
        Elem rhs = M.right(M.right(m, s), s2);
        if (lhs != rhs)
          return Verdict::fail({"m(ss') = (ms)s'", {{"m", m}, {"s", s}, {"s'", s2}}, lhs, rhs});
      }
    }
  }
  for (std::int64_t ir = 0; ir < R.order(); ++ir) {
    Elem r = R.carrier().element_at(ir);
    for (std::int64_t im = 0; im < g.order(); ++im) {
      Elem m = g.element_at(im);
      for (std::int64_t is = 0; is < S.order(); ++is) {
        Elem s = S.carrier().element_at(is);
        Elem lhs = M.right(M.left(r, m), s);
        Elem rhs = M.left(r, M.right(m, s));
        if (lhs != rhs)
          return Verdict::fail({"(rm)s = r(ms)", {{"r", r}, {"m", m}, {"s", s}}, lhs, rhs});
      }
      for (std::int64_t jm = 0; jm < g.order(); ++jm) {
        Elem m2 = g.element_at(jm);
        Elem al = M.left(r, g.add(m, m2));
        Elem ar = g.add(M.left(r, m), M.left(r, m2));
        if (al != ar)
          return Verdict::fail({"r(m+m') = rm+rm'", {{"r", r}, {"m", m}, {"m'", m2}}, al, ar});
      }
    }
  }
  for (std::int64_t im = 0; im < g.order(); ++im) {
    Elem m = g.element_at(im);
    for (std::int64_t jm = 0; jm < g.order(); ++jm) {
      Elem m2 = g.element_at(jm);
      for (std::int64_t is = 0; is < S.order(); ++is) {
        Elem s = S.carrier().element_at(is);
        Elem al = M.right(g.add(m, m2), s);
        Elem ar = g.add(M.right(m, s), M.right(m2, s));
        if (al != ar)
          return Verdict::fail({"(m+m')s = ms+m's", {{"m", m}, {"m'", m2}, {"s", s}}, al, ar});
      }
    }
  }
  for (std::int64_t im = 0; im < g.order(); ++im) {
    Elem m = g.element_at(im);
    for (std::int64_t is = 0; is < S.order(); ++is) {
      Elem s = S.carrier().element_at(is);
      for (std::int64_t js = 0; js < S.order(); ++js) {
        Elem s2 = S.carrier().element_at(js);
        Elem al = M.right(m, S.add(s, s2));
        Elem ar = g.add(M.right(m, s), M.right(m, s2));
        if (al != ar)
          return Verdict::fail({"m(s+s') = ms+ms'", {{"m", m}, {"s", s}, {"s'", s2}}, al, ar});
      }
    }
  }
  return Verdict::pass();
}

// 2m = 0 for every m.
inline bool is_two_torsion(const Bimodule& M) { return is_two_torsion(M.carrier()); }

// left: rM = 0 implies r = 0; right: Ms = 0 implies s = 0.
inline std::pair<bool, bool> is_faithful(const Bimodule& M) {
  const AbelianGroup& g = M.carrier();
  bool left = true, right = true;
  const Ring& R = M.left_ring();
  for (std::int64_t ir = 0; ir < R.order() && left; ++ir) {
    Elem r = R.carrier().element_at(ir);
    if (r == R.zero()) continue;
    bool annihilates = true;
    for (std::int64_t im = 0; im < g.order(); ++im)
      if (M.left(r, g.element_at(im)) != g.zero()) {
        annihilates = false;
        break;
      }
    if (annihilates) left = false;
  }
  const Ring& S = M.right_ring();
  for (std::int64_t is = 0; is < S.order() && right; ++is) {
    Elem s = S.carrier().element_at(is);
    if (s == S.zero()) continue;
    bool annihilates = true;
    for (std::int64_t im = 0; im < g.order(); ++im)
      if (M.right(g.element_at(im), s) != g.zero()) {
        annihilates = false;
        break;
      }
    if (annihilates) right = false;
  }
  return {left, right};
}

}  // namespace superring
