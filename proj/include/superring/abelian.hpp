#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace superring {

// Thrown when an exhaustive check or enumeration would exceed the configured
// instance-size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
  // n >= 1; result in [0, n)
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

// Element of a finite abelian group, stored as reduced coordinates.
// Plain data: all arithmetic goes through the owning AbelianGroup.
struct Elem {
  std::vector<std::int64_t> c;

  Elem() = default;
  explicit Elem(std::vector<std::int64_t> coords) : c(std::move(coords)) {}

  bool operator==(const Elem&) const = default;
  bool operator<(const Elem& o) const { return c < o.c; }
};

inline std::string to_string(const Elem& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.c.size(); ++i) {
    if (i) os << ',';
    os << e.c[i];
  }
  os << ')';
  return os.str();
}

// Finite abelian group Z_{n1} x ... x Z_{nk} in given-factor form.
// Factor lists are kept as given: isomorphic groups with different factor
// lists are distinct carriers (constructions need positional access).
class AbelianGroup {
 public:
  AbelianGroup() = default;  // trivial group, order 1

  explicit AbelianGroup(std::vector<std::int64_t> factors)
      : factors_(std::move(factors)) {
    __int128 ord = 1;
    for (auto n : factors_) {
      if (n < 1) throw std::invalid_argument("group factor must be >= 1");
      ord *= n;
      if (ord > (__int128)INT64_MAX) throw std::overflow_error("group order overflow");
    }
    order_ = (std::int64_t)ord;
  }

  std::size_t rank() const { return factors_.size(); }
  std::int64_t factor(std::size_t i) const { return factors_[i]; }
  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::int64_t order() const { return order_; }

  bool contains(const Elem& x) const {
    if (x.c.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (x.c[i] < 0 || x.c[i] >= factors_[i]) return false;
    return true;
  }

  void require(const Elem& x) const {
    if (!contains(x))
      throw std::invalid_argument("element " + to_string(x) +
                                  " does not belong to group " + name());
  }

  Elem zero() const { return Elem(std::vector<std::int64_t>(rank(), 0)); }

  Elem generator(std::size_t i) const {
    Elem e = zero();
    if (factors_[i] > 1) e.c[i] = 1;
    return e;
  }

  // Reduces arbitrary integer coordinates into the group.
  Elem make(std::vector<std::int64_t> coords) const {
    if (coords.size() != rank())
      throw std::invalid_argument("coordinate count mismatch for group " + name());
    for (std::size_t i = 0; i < rank(); ++i) coords[i] = mod_reduce(coords[i], factors_[i]);
    return Elem(std::move(coords));
  }

  Elem add(const Elem& a, const Elem& b) const {
    require(a);
    require(b);
    Elem r = a;
    for (std::size_t i = 0; i < rank(); ++i) r.c[i] = mod_reduce(r.c[i] + b.c[i], factors_[i]);
    return r;
  }

  Elem neg(const Elem& a) const {
    require(a);
    Elem r = a;
    for (std::size_t i = 0; i < rank(); ++i) r.c[i] = mod_reduce(-r.c[i], factors_[i]);
    return r;
  }

  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

  Elem scale(std::int64_t n, const Elem& a) const {
    require(a);
    Elem r = a;
    for (std::size_t i = 0; i < rank(); ++i)
      r.c[i] = mod_reduce(mod_reduce(n, factors_[i]) * a.c[i], factors_[i]);
    return r;
  }

  // Enumeration index: lexicographic order of the coordinate tuple
  // (first coordinate most significant). zero() is index 0.
  std::int64_t index_of(const Elem& x) const {
    require(x);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx = idx * factors_[i] + x.c[i];
    return idx;
  }

  Elem element_at(std::int64_t idx) const {
    if (idx < 0 || idx >= order_) throw std::out_of_range("element index out of range");
    Elem e = zero();
    for (std::size_t i = rank(); i-- > 0;) {
      e.c[i] = idx % factors_[i];
      idx /= factors_[i];
    }
    return e;
  }

  std::string name() const {
    std::ostringstream os;
    if (factors_.empty()) return "0";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) os << "x";
      os << "Z" << factors_[i];
    }
    return os.str();
  }

  bool operator==(const AbelianGroup&) const = default;

  static AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<std::int64_t> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return AbelianGroup(std::move(f));
  }

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
};

// Additive map between finite abelian groups, stored as a generator-image
// matrix: entry (i,j) is the coefficient of source generator i in destination
// factor j. Well-definedness requires n_i^src * m_ij == 0 mod n_j^dst.
class GroupHom {
 public:
  GroupHom(AbelianGroup src, AbelianGroup dst, std::vector<std::int64_t> matrix)
      : src_(std::move(src)), dst_(std::move(dst)), m_(std::move(matrix)) {
    const std::size_t ks = src_.rank(), kd = dst_.rank();
    if (m_.size() != ks * kd) throw std::invalid_argument("hom matrix shape mismatch");
    for (std::size_t i = 0; i < ks; ++i)
      for (std::size_t j = 0; j < kd; ++j) {
        std::int64_t& v = m_[i * kd + j];
        v = mod_reduce(v, dst_.factor(j));
        if (mod_reduce(src_.factor(i) * v, dst_.factor(j)) != 0)
          throw std::invalid_argument(
              "generator-order constraint violated at entry (" + std::to_string(i) + "," +
              std::to_string(j) + "): " + std::to_string(src_.factor(i)) + "*" +
              std::to_string(v) + " != 0 mod " + std::to_string(dst_.factor(j)));
      }
  }

  const AbelianGroup& src() const { return src_; }
  const AbelianGroup& dst() const { return dst_; }
  const std::vector<std::int64_t>& matrix() const { return m_; }
  std::int64_t entry(std::size_t i, std::size_t j) const { return m_[i * dst_.rank() + j]; }

  Elem apply(const Elem& x) const {
    src_.require(x);
    Elem r = dst_.zero();
    const std::size_t kd = dst_.rank();
    for (std::size_t i = 0; i < src_.rank(); ++i) {
      if (x.c[i] == 0) continue;
      for (std::size_t j = 0; j < kd; ++j)
        r.c[j] = mod_reduce(r.c[j] + x.c[i] * m_[i * kd + j], dst_.factor(j));
    }
    return r;
  }

  // Image of src generator i, as a destination element.
  Elem image_of_generator(std::size_t i) const {
    Elem r = dst_.zero();
    for (std::size_t j = 0; j < dst_.rank(); ++j) r.c[j] = entry(i, j);
    return r;
  }

  GroupHom add(const GroupHom& o) const {
    require_same_shape(o);
    std::vector<std::int64_t> m = m_;
    for (std::size_t p = 0; p < m.size(); ++p)
      m[p] = mod_reduce(m[p] + o.m_[p], dst_.factor(p % dst_.rank()));
    return GroupHom(src_, dst_, std::move(m));
  }

  GroupHom negate() const {
    std::vector<std::int64_t> m = m_;
    for (std::size_t p = 0; p < m.size(); ++p)
      m[p] = mod_reduce(-m[p], dst_.factor(p % dst_.rank()));
    return GroupHom(src_, dst_, std::move(m));
  }

  // this . inner : first apply inner, then this.
  GroupHom compose(const GroupHom& inner) const {
    if (inner.dst_ != src_) throw std::invalid_argument("hom composition domain mismatch");
    const std::size_t ks = inner.src_.rank(), kd = dst_.rank();
    std::vector<std::int64_t> m(ks * kd, 0);
    for (std::size_t i = 0; i < ks; ++i) {
      Elem img = apply(inner.image_of_generator(i));
      for (std::size_t j = 0; j < kd; ++j) m[i * kd + j] = img.c[j];
    }
    return GroupHom(inner.src_, dst_, std::move(m));
  }

  bool operator==(const GroupHom&) const = default;
  bool operator<(const GroupHom& o) const { return m_ < o.m_; }

  bool is_zero() const {
    return std::all_of(m_.begin(), m_.end(), [](std::int64_t v) { return v == 0; });
  }

  static GroupHom zero(const AbelianGroup& src, const AbelianGroup& dst) {
    return GroupHom(src, dst, std::vector<std::int64_t>(src.rank() * dst.rank(), 0));
  }

  static GroupHom identity(const AbelianGroup& g) {
    const std::size_t k = g.rank();
    std::vector<std::int64_t> m(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) m[i * k + i] = g.factor(i) > 1 ? 1 : 0;
    return GroupHom(g, g, std::move(m));
  }

 private:
  void require_same_shape(const GroupHom& o) const {
    if (src_ != o.src_ || dst_ != o.dst_)
      throw std::invalid_argument("hom shape mismatch");
  }

  AbelianGroup src_, dst_;
  std::vector<std::int64_t> m_;
};

// The full space Hom(src, dst), indexable without materialization.
// |Hom| = prod_{i,j} gcd(n_i, m_j); entry (i,j) ranges over the gcd(n_i, m_j)
// multiples of m_j / gcd(n_i, m_j). Index order is lexicographic in the
// row-major image matrix, so two runs (and any index partition) agree.
class HomSpace {
 public:
  HomSpace(AbelianGroup src, AbelianGroup dst, std::int64_t bound)
      : src_(std::move(src)), dst_(std::move(dst)) {
    const std::size_t kd = dst_.rank();
    __int128 total = 1;
    for (std::size_t i = 0; i < src_.rank(); ++i)
      for (std::size_t j = 0; j < kd; ++j) {
        const std::int64_t g = std::gcd(src_.factor(i), dst_.factor(j));
        counts_.push_back(g);
        steps_.push_back(dst_.factor(j) / g);
        total *= g;
        if (total > bound)
          throw BoundExceeded("|Hom(" + src_.name() + "," + dst_.name() +
                              ")| exceeds bound " + std::to_string(bound));
      }
    size_ = (std::int64_t)total;
  }

  std::int64_t size() const { return size_; }
  const AbelianGroup& src() const { return src_; }
  const AbelianGroup& dst() const { return dst_; }

  GroupHom at(std::int64_t index) const {
    if (index < 0 || index >= size_) throw std::out_of_range("hom index out of range");
    std::vector<std::int64_t> m(counts_.size(), 0);
    for (std::size_t p = counts_.size(); p-- > 0;) {
      m[p] = (index % counts_[p]) * steps_[p];
      index /= counts_[p];
    }
    return GroupHom(src_, dst_, std::move(m));
  }

 private:
  AbelianGroup src_, dst_;
  std::vector<std::int64_t> counts_, steps_;
  std::int64_t size_ = 1;
};

}  // namespace superring
