#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superring/abelian.hpp"

namespace superring {

// Concrete counterexample to a universally quantified identity.
struct Witness {
  std::string identity;                              // the violated identity
  std::vector<std::pair<std::string, Elem>> where;   // variable bindings
  Elem lhs, rhs;                                     // evaluated sides
};

inline std::string to_string(const Witness& w) {
  std::ostringstream os;
  os << "identity '" << w.identity << "' fails at ";
  for (std::size_t i = 0; i < w.where.size(); ++i) {
    if (i) os << ", ";
    os << w.where[i].first << "=" << to_string(w.where[i].second);
  }
  os << ": lhs=" << to_string(w.lhs) << " rhs=" << to_string(w.rhs);
  return os.str();
}

// Pass, or fail with the first counterexample in canonical order.
struct Verdict {
  std::optional<Witness> counterexample;

  bool ok() const { return !counterexample.has_value(); }

  static Verdict pass() { return Verdict{}; }
  static Verdict fail(Witness w) { return Verdict{std::move(w)}; }
};

}  // namespace superring
