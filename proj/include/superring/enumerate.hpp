#pragma once

#include <algorithm>
#include <vector>

#include "superring/axioms.hpp"
#include "superring/graded.hpp"
#include "superring/maps.hpp"
#include "superring/parallel.hpp"
#include "superring/structure.hpp"

namespace superring {

// Brute-force survivor sets: every candidate in the map space is run through
// the checker. Candidate spaces already apply the block and generator-order
// constraints during generation. Results come out in space-index order
// (lexicographic), independent of the worker count.

inline std::vector<GradedMap> enumerate_jordan_superderivations(const GradedRing& G, int degree,
                                                                std::int64_t bound = kDefaultBound,
                                                                int workers = 1) {
  GradedMapSpace space(G, degree, bound);
  auto idx = parallel_filter_indices(space.size(), workers, [&](std::int64_t i) {
    return is_jordan_superderivation(space.at(i), bound).ok();
  });
  std::vector<GradedMap> out;
  out.reserve(idx.size());
  for (std::int64_t i : idx) out.push_back(space.at(i));
  return out;
}

inline std::vector<GradedMap> enumerate_superderivations(const GradedRing& G, int degree,
                                                         std::int64_t bound = kDefaultBound,
                                                         int workers = 1) {
  GradedMapSpace space(G, degree, bound);
  auto idx = parallel_filter_indices(space.size(), workers, [&](std::int64_t i) {
    return is_superderivation(space.at(i), bound).ok();
  });
  std::vector<GradedMap> out;
  out.reserve(idx.size());
  for (std::int64_t i : idx) out.push_back(space.at(i));
  return out;
}

inline std::vector<AdditiveMap> enumerate_derivations(const Ring& R,
                                                      std::int64_t bound = kDefaultBound,
                                                      int workers = 1) {
  HomSpace space(R.carrier(), R.carrier(), bound);
  auto idx = parallel_filter_indices(space.size(), workers, [&](std::int64_t i) {
    return is_derivation(R, space.at(i), bound).ok();
  });
  std::vector<AdditiveMap> out;
  out.reserve(idx.size());
  for (std::int64_t i : idx) out.push_back(space.at(i));
  return out;
}

inline std::vector<AdditiveMap> enumerate_jordan_derivations(const Ring& R,
                                                             std::int64_t bound = kDefaultBound,
                                                             int workers = 1) {
  HomSpace space(R.carrier(), R.carrier(), bound);
  auto idx = parallel_filter_indices(space.size(), workers, [&](std::int64_t i) {
    return is_jordan_derivation(R, space.at(i), bound).ok();
  });
  std::vector<AdditiveMap> out;
  out.reserve(idx.size());
  for (std::int64_t i : idx) out.push_back(space.at(i));
  return out;
}

inline std::vector<BiadditiveMap> enumerate_jordan_super_biderivations(
    const GradedRing& G, std::int64_t bound = kDefaultBound, int workers = 1) {
  BiadditiveSpace space(G, bound);
  auto idx = parallel_filter_indices(space.size(), workers, [&](std::int64_t i) {
    return is_jordan_super_biderivation(G, space.at(i), bound).ok();
  });
  std::vector<BiadditiveMap> out;
  out.reserve(idx.size());
  for (std::int64_t i : idx) out.push_back(space.at(i));
  return out;
}

// The other route to the degree-i survivors of a trivial extension: choose
// component maps satisfying their classification conditions and assemble the
// graded map. Genuinely independent of the brute-force filter above; the two
// routes must produce the same set.
//   degree 0: (delta Jordan derivation of R) x (g with the delta-twisted identity)
//   degree 1: (gamma Jordan derivation R -> M) x (f Jordan homomorphism with
//             the pairing symmetry)
inline std::vector<GradedMap> superderivations_from_components(const TrivialExtension& te,
                                                               const GradedRing& G, int degree,
                                                               std::int64_t bound = kDefaultBound) {
  const Ring& R = te.base;
  const Bimodule& M = te.module;
  const AbelianGroup& gr = R.carrier();
  const AbelianGroup& gm = M.carrier();
  std::vector<GradedMap> out;
  if (degree == 0) {
    HomSpace delta_space(gr, gr, bound);
    HomSpace g_space(gm, gm, bound);
    for (std::int64_t i = 0; i < delta_space.size(); ++i) {
      AdditiveMap delta = delta_space.at(i);
      if (!is_jordan_derivation(R, delta, bound).ok()) continue;
      for (std::int64_t j = 0; j < g_space.size(); ++j) {
        AdditiveMap g = g_space.at(j);
        if (!check_g_twisted_identity(R, M, g, delta, bound).ok()) continue;
        out.push_back(graded_map_from_blocks(G, 0, delta, g));
      }
    }
  } else if (degree == 1) {
    HomSpace gamma_space(gr, gm, bound);
    HomSpace f_space(gm, gr, bound);
    for (std::int64_t i = 0; i < gamma_space.size(); ++i) {
      AdditiveMap gamma = gamma_space.at(i);
      if (!is_jordan_derivation(R, M, gamma, bound).ok()) continue;
      for (std::int64_t j = 0; j < f_space.size(); ++j) {
        AdditiveMap f = f_space.at(j);
        if (!check_f_jordan_homomorphism(R, M, f, bound).ok()) continue;
        if (!check_f_pairing_symmetry(R, M, f, bound).ok()) continue;
        out.push_back(graded_map_from_blocks(G, 1, gamma, f));
      }
    }
  } else {
    throw std::invalid_argument("degree must be 0 or 1");
  }
  return out;
}

inline void sort_canonical(std::vector<GradedMap>& maps) {
  std::sort(maps.begin(), maps.end(), [](const GradedMap& a, const GradedMap& b) {
    return a.hom().matrix() < b.hom().matrix();
  });
}

inline void sort_canonical(std::vector<AdditiveMap>& maps) {
  std::sort(maps.begin(), maps.end(),
            [](const AdditiveMap& a, const AdditiveMap& b) { return a.matrix() < b.matrix(); });
}

inline void sort_canonical(std::vector<BiadditiveMap>& maps) {
  std::sort(maps.begin(), maps.end());
}

}  // namespace superring
