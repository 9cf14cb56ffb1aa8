#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superring/config.hpp"
#include "superring/enumerate.hpp"
#include "superring/structure.hpp"

namespace superring::suite {

using nlohmann::json;
using config::elem_to_json;
using config::verdict_to_json;
using config::witness_to_json;

// Deterministic generator for the mutation criterion.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// One instance of the verification matrix. Trivial-extension entries carry
// their own grading; triangular entries also carry the trivial-extension
// picture used by the decomposition theorems.
struct MatrixEntry {
  std::string name;
  std::optional<TrivialExtension> te;   // set for trivial-extension entries
  std::optional<TriangularRing> tri;    // set for triangular / tn entries
  Ring ring;
  GradedRing graded;
};

inline MatrixEntry make_te_entry(std::string name, TrivialExtension te) {
  GradedRing g = grade_trivial_extension(te);
  Ring ring = te.ring;
  return MatrixEntry{std::move(name), std::move(te), std::nullopt, std::move(ring),
                     std::move(g)};
}

inline MatrixEntry make_tri_entry(std::string name, TriangularRing tri) {
  GradedRing g = grade_triangular(tri);
  Ring ring = tri.ring;
  return MatrixEntry{std::move(name), std::nullopt, std::move(tri), std::move(ring),
                     std::move(g)};
}

// The default desk-scale matrix: 2-torsion, 2-torsion-free, faithful and
// non-faithful hypotheses are all represented.
inline std::vector<MatrixEntry> default_matrix(std::int64_t bound) {
  std::vector<MatrixEntry> entries;
  entries.push_back(
      make_te_entry("te_z2_z2", trivial_extension(zn_ring(2), ring_as_bimodule(zn_ring(2)))));
  entries.push_back(
      make_te_entry("te_z3_z3", trivial_extension(zn_ring(3), ring_as_bimodule(zn_ring(3)))));
  entries.push_back(make_te_entry(
      "te_z4_z2mod2", trivial_extension(zn_ring(4), zn_bimodule(2, zn_ring(4), zn_ring(4)))));
  {
    Ring z2 = zn_ring(2);
    entries.push_back(
        make_tri_entry("tri_z2_z2_z2", triangular_ring(z2, zn_bimodule(2, z2, z2), z2)));
  }
  {
    Ring z3 = zn_ring(3);
    entries.push_back(
        make_tri_entry("tri_z3_z3_z3", triangular_ring(z3, zn_bimodule(3, z3, z3), z3)));
  }
  entries.push_back(make_tri_entry("t2_z2", remark_iso(zn_ring(2), 2, bound).tri));
  entries.push_back(make_tri_entry("t2_z3", remark_iso(zn_ring(3), 2, bound).tri));
  entries.push_back(make_tri_entry("t3_z2", remark_iso(zn_ring(2), 3, bound).tri));
  return entries;
}

// Survivor sets for one entry, computed once and shared by the criteria.
// For triangular entries the trivial-extension picture is reached through
// the carrier identification.
struct EntryData {
  const MatrixEntry* entry = nullptr;
  bool feasible = false;  // enumeration within bound
  std::string notice;

  std::vector<GradedMap> deg0, deg1;  // survivors on the entry's own grading

  std::optional<TrivialExtension> te_pic;
  std::optional<GradedRing> te_graded;
  std::optional<GroupHom> to_te, from_te;  // carrier identification (identity for te entries)
  std::vector<GradedMap> te_deg0, te_deg1;
  std::vector<BiadditiveMap> biderivations;  // only on te entries
};

inline EntryData compute_entry_data(const MatrixEntry& e, std::int64_t bound, int workers) {
  EntryData d;
  d.entry = &e;
  try {
    d.deg0 = enumerate_jordan_superderivations(e.graded, 0, bound, workers);
    d.deg1 = enumerate_jordan_superderivations(e.graded, 1, bound, workers);
    d.feasible = true;
  } catch (const BoundExceeded& ex) {
    d.notice = ex.what();
    return d;
  }
  if (e.te) {
    d.te_pic = e.te;
    d.te_graded = e.graded;
    d.te_deg0 = d.deg0;
    d.te_deg1 = d.deg1;
    d.biderivations = enumerate_jordan_super_biderivations(e.graded, bound, workers);
  } else {
    TriangularTrivialIso iso = triangular_to_trivial_iso(*e.tri);
    d.te_pic = iso.te;
    d.te_graded = grade_trivial_extension(iso.te);
    d.to_te = iso.fwd;
    d.from_te = iso.inv;
    auto transport = [&](const GradedMap& m) {
      return GradedMap(*d.te_graded, iso.fwd.compose(m.hom()).compose(iso.inv), m.degree());
    };
    for (const GradedMap& m : d.deg0) d.te_deg0.push_back(transport(m));
    for (const GradedMap& m : d.deg1) d.te_deg1.push_back(transport(m));
  }
  return d;
}

namespace detail {

inline json check_to_json(const Check& c) {
  json out = {{"id", c.id}, {"statement", c.statement}};
  out.update(verdict_to_json(c.verdict));
  return out;
}

inline json failed_checks_json(const CheckList& list) {
  json out = json::array();
  for (const Check& c : list.checks)
    if (!c.verdict.ok()) out.push_back(check_to_json(c));
  return out;
}

inline json serialize_survivors(const std::vector<GradedMap>& maps) {
  json out = json::array();
  for (const GradedMap& m : maps) out.push_back(m.hom().matrix());
  return out;
}

inline json serialize_survivors(const std::vector<BiadditiveMap>& maps) {
  json out = json::array();
  for (const BiadditiveMap& b : maps) {
    json imgs = json::array();
    for (const Elem& e : b.images()) imgs.push_back(elem_to_json(e));
    out.push_back(imgs);
  }
  return out;
}

}  // namespace detail

// Criterion 1: on each trivial-extension entry and each degree, the
// brute-force survivor set equals the set assembled from component tuples.
inline json criterion_oracle_agreement(const std::vector<EntryData>& data, std::int64_t bound) {
  json details = json::array();
  bool pass = true;
  for (const EntryData& d : data) {
    if (!d.entry->te || !d.feasible) continue;
    for (int deg : {0, 1}) {
      auto brute = deg == 0 ? d.deg0 : d.deg1;
      auto built = superderivations_from_components(*d.entry->te, d.entry->graded, deg, bound);
      sort_canonical(brute);
      sort_canonical(built);
      bool equal = brute.size() == built.size();
      for (std::size_t i = 0; equal && i < brute.size(); ++i) equal = brute[i] == built[i];
      pass = pass && equal;
      details.push_back({{"entry", d.entry->name},
                         {"degree", deg},
                         {"brute_force_count", brute.size()},
                         {"component_count", built.size()},
                         {"sets_equal", equal}});
    }
  }
  return {{"id", 1},
          {"title", "survivor sets equal component-built sets on trivial extensions"},
          {"pass", pass},
          {"details", details}};
}

// Criterion 2: the two-torsion consequence and the exact iff boundary, on
// every feasible entry through its trivial-extension picture.
inline json criterion_two_torsion(const std::vector<EntryData>& data, std::int64_t bound) {
  json details = json::array();
  bool pass = true;
  for (const EntryData& d : data) {
    if (!d.feasible) {
      details.push_back({{"entry", d.entry->name}, {"skipped", true}, {"notice", d.notice}});
      continue;
    }
    const TrivialExtension& te = *d.te_pic;
    bool two_torsion = is_two_torsion(te.module);
    int pairs = 0, disagreements = 0, d1_failures = 0;
    json first_failure;
    for (const GradedMap& d0 : d.te_deg0)
      for (const GradedMap& d1 : d.te_deg1) {
        auto dec = decompose_trivial_ext(te, *d.te_graded, d0, d1, bound);
        auto rep = check_two_torsion_case(te, d0, d1, dec, bound);
        ++pairs;
        if (!rep.ok()) {
          ++disagreements;
          if (first_failure.is_null())
            first_failure = detail::check_to_json(*rep.checks.first_failure());
        }
        if (two_torsion && !rep.d1_jordan_derivation.ok()) ++d1_failures;
      }
    bool entry_ok = disagreements == 0 && d1_failures == 0;
    pass = pass && entry_ok;
    json row = {{"entry", d.entry->name},
                {"module_two_torsion", two_torsion},
                {"pairs", pairs},
                {"iff_disagreements", disagreements},
                {"d1_not_jordan_when_two_torsion", d1_failures}};
    if (!first_failure.is_null()) row["first_failure"] = first_failure;
    details.push_back(row);
  }
  return {{"id", 2},
          {"title", "d1 Jordan derivation iff 2(m o f(m')) = 0; forced under 2-torsion M"},
          {"pass", pass},
          {"details", details}};
}

// Criterion 3: on the 2-torsion-free triangular entries, every survivor pair
// decomposes with f = 0, the inner gamma form and the g identity, and the sum
// is a Jordan derivation.
inline json criterion_triangular_decomposition(const std::vector<EntryData>& data,
                                               std::int64_t bound) {
  json details = json::array();
  bool pass = true;
  for (const EntryData& d : data) {
    if (!d.entry->tri || !d.feasible) continue;
    const TriangularRing& tri = *d.entry->tri;
    if (!is_two_torsion_free(tri.left) || !is_two_torsion_free(tri.right)) continue;
    int pairs = 0, exceptions = 0;
    json first_failure;
    for (const GradedMap& d0 : d.deg0)
      for (const GradedMap& d1 : d.deg1) {
        auto dec = decompose_triangular(tri, d0, d1, bound);
        ++pairs;
        if (!dec.ok()) {
          ++exceptions;
          if (first_failure.is_null()) {
            const Check* c = dec.checks.first_failure();
            if (!c) c = dec.over_product.checks.first_failure();
            first_failure = detail::check_to_json(*c);
          }
        }
      }
    pass = pass && exceptions == 0;
    json row = {{"entry", d.entry->name}, {"pairs", pairs}, {"exceptions", exceptions}};
    if (!first_failure.is_null()) row["first_failure"] = first_failure;
    details.push_back(row);
  }
  return {{"id", 3},
          {"title", "triangular survivors decompose (f = 0, inner gamma, g identity) and are "
                    "Jordan derivations"},
          {"pass", pass},
          {"details", details}};
}

// Criterion 4: with a two-sided faithful bimodule, every survivor pair is a
// derivation.
inline json criterion_faithful(const std::vector<EntryData>& data, std::int64_t bound) {
  json details = json::array();
  bool pass = true;
  for (const EntryData& d : data) {
    if (!d.entry->tri || !d.feasible) continue;
    if (d.entry->name != "tri_z3_z3_z3") continue;
    const TriangularRing& tri = *d.entry->tri;
    auto [left, right] = is_faithful(tri.module);
    Verdict v = check_faithful_case(tri, d.deg0, d.deg1, bound);
    pass = pass && left && right && v.ok();
    json row = {{"entry", d.entry->name},
                {"faithful_left", left},
                {"faithful_right", right},
                {"pairs", d.deg0.size() * d.deg1.size()}};
    row.update(verdict_to_json(v));
    details.push_back(row);
  }
  return {{"id", 4},
          {"title", "faithful bimodule: every Jordan superderivation is a derivation"},
          {"pass", pass},
          {"details", details}};
}

// Criterion 5: every degree-1 survivor on the 2-torsion-free entries equals
// the inner derivation by m* E12.
inline json criterion_inner_degree1(const std::vector<EntryData>& data, std::int64_t bound) {
  json details = json::array();
  bool pass = true;
  for (const EntryData& d : data) {
    if (!d.entry->tri || !d.feasible) continue;
    const TriangularRing& tri = *d.entry->tri;
    if (!is_two_torsion_free(tri.left) || !is_two_torsion_free(tri.right)) continue;
    const AbelianGroup& c = tri.ring.carrier();
    GradedMap zero0(d.entry->graded, GroupHom::zero(c, c), 0);
    int exceptions = 0;
    json first_failure;
    for (const GradedMap& d1 : d.deg1) {
      auto dec = decompose_triangular(tri, zero0, d1, bound);
      auto match = match_inner_degree1(tri, d1, dec, bound);
      if (!match.matches.ok()) {
        ++exceptions;
        if (first_failure.is_null()) first_failure = verdict_to_json(match.matches);
      }
    }
    pass = pass && exceptions == 0;
    json row = {{"entry", d.entry->name},
                {"degree1_survivors", d.deg1.size()},
                {"exceptions", exceptions}};
    if (!first_failure.is_null()) row["first_failure"] = first_failure;
    details.push_back(row);
  }
  return {{"id", 5},
          {"title", "every degree-1 survivor is the inner derivation by m* E12"},
          {"pass", pass},
          {"details", details}};
}

// Criterion 6: every Jordan super-biderivation decomposes with all four
// component families, reconstructs exactly, and is a Jordan biderivation.
inline json criterion_super_biderivations(const std::vector<EntryData>& data,
                                          std::int64_t bound) {
  json details = json::array();
  bool pass = true;
  for (const EntryData& d : data) {
    if (!d.entry->te || !d.feasible) continue;
    const TrivialExtension& te = *d.entry->te;
    int exceptions = 0;
    json failures = json::array();
    for (const BiadditiveMap& b : d.biderivations) {
      auto dec = decompose_super_biderivation(te, d.entry->graded, b, bound);
      if (!dec.ok()) {
        ++exceptions;
        failures.push_back({{"candidate", detail::serialize_survivors({b})[0]},
                            {"failed_checks", detail::failed_checks_json(dec.checks)}});
      }
    }
    pass = pass && exceptions == 0;
    json row = {{"entry", d.entry->name},
                {"survivors", d.biderivations.size()},
                {"exceptions", exceptions}};
    if (exceptions) row["failures"] = failures;
    details.push_back(row);
  }
  return {{"id", 6},
          {"title", "super-biderivations decompose, reconstruct and are Jordan biderivations"},
          {"pass", pass},
          {"details", details}};
}

// Criterion 7: the trivial-extension identification and the first-row split
// are mutually inverse ring isomorphisms, exhaustively.
inline json criterion_isomorphisms(std::int64_t bound) {
  json details = json::array();
  bool pass = true;
  auto record = [&](const std::string& name, const Verdict& v) {
    json row = {{"iso", name}};
    row.update(verdict_to_json(v));
    pass = pass && v.ok();
    details.push_back(row);
  };
  for (std::int64_t n : {2, 3}) {
    TnSplit split = remark_iso(zn_ring(n), 2, bound);
    TriangularTrivialIso iso = triangular_to_trivial_iso(split.tri);
    record("t2_z" + std::to_string(n) + "_to_trivial_extension",
           verify_ring_iso({split.tri.ring, iso.te.ring, iso.fwd, iso.inv}, bound));
  }
  record("t2_z2_first_row_split", verify_ring_iso(remark_iso(zn_ring(2), 2, bound).iso, bound));
  record("t2_z3_first_row_split", verify_ring_iso(remark_iso(zn_ring(3), 2, bound).iso, bound));
  record("t3_z2_first_row_split", verify_ring_iso(remark_iso(zn_ring(2), 3, bound).iso, bound));
  return {{"id", 7},
          {"title", "carrier identifications are verified ring isomorphisms"},
          {"pass", pass},
          {"details", details}};
}

namespace detail {

// Re-evaluates the Jordan-superderivation identity at a witness pair using a
// tabulated copy of the map (additive closure, not matrix action).
inline bool confirm_superderivation_witness(const GradedRing& G, const GradedMap& d,
                                            const Witness& w) {
  const Ring& R = G.ring();
  auto table = tabulate_additive(d.hom());
  auto ev = [&](const Elem& x) { return table[(std::size_t)R.carrier().index_of(x)]; };
  Elem xe = w.where.at(0).second, ye = w.where.at(1).second;
  auto dx = G.degree_of(xe), dy = G.degree_of(ye);
  if (!dx || !dy) return false;
  Homog x{xe, *dx}, y{ye, *dy};
  Homog dxh{ev(xe), (*dx + d.degree()) % 2};
  Homog dyh{ev(ye), (*dy + d.degree()) % 2};
  Elem lhs = ev(superproduct(G, x, y).elem);
  Elem first = superproduct(G, dxh, y).elem;
  Elem second = superproduct(G, x, dyh).elem;
  Elem rhs = (d.degree() * x.degree) % 2 == 1 ? R.sub(first, second) : R.add(first, second);
  return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
}

// Full value table of a biadditive map over all element pairs, built by
// additive closure in both slots from the generator-pair images.
inline std::vector<std::vector<Elem>> tabulate_biadditive(const BiadditiveMap& B) {
  const AbelianGroup& g1 = B.src1();
  const AbelianGroup& g2 = B.src2();
  const AbelianGroup& dst = B.dst();
  // aux[i][idx(y)] = B(e_i, y) by closure over the second slot
  std::vector<std::vector<Elem>> aux(g1.rank(),
                                     std::vector<Elem>((std::size_t)g2.order(), dst.zero()));
  for (std::size_t i = 0; i < g1.rank(); ++i)
    for (std::int64_t idx = 1; idx < g2.order(); ++idx) {
      Elem y = g2.element_at(idx);
      std::size_t last = 0;
      for (std::size_t t = 0; t < y.c.size(); ++t)
        if (y.c[t] != 0) last = t;
      Elem prev = y;
      prev.c[last] -= 1;
      aux[i][(std::size_t)idx] =
          dst.add(aux[i][(std::size_t)g2.index_of(prev)], B.image(i, last));
    }
  std::vector<std::vector<Elem>> table((std::size_t)g1.order(),
                                       std::vector<Elem>((std::size_t)g2.order(), dst.zero()));
  for (std::int64_t ix = 1; ix < g1.order(); ++ix) {
    Elem x = g1.element_at(ix);
    std::size_t last = 0;
    for (std::size_t t = 0; t < x.c.size(); ++t)
      if (x.c[t] != 0) last = t;
    Elem prev = x;
    prev.c[last] -= 1;
    const auto& prev_row = table[(std::size_t)g1.index_of(prev)];
    auto& row = table[(std::size_t)ix];
    for (std::int64_t iy = 0; iy < g2.order(); ++iy)
      row[(std::size_t)iy] = dst.add(prev_row[(std::size_t)iy], aux[last][(std::size_t)iy]);
  }
  return table;
}

// Re-evaluates the violated super-biderivation identity at a witness triple
// using the tabulated map.
inline bool confirm_biderivation_witness(const GradedRing& G, const BiadditiveMap& B,
                                         const Witness& w) {
  const Ring& R = G.ring();
  auto table = tabulate_biadditive(B);
  auto ev = [&](const Elem& a, const Elem& b) {
    return table[(std::size_t)R.carrier().index_of(a)][(std::size_t)R.carrier().index_of(b)];
  };
  if (w.where.size() != 3) return false;
  Elem xe = w.where.at(0).second, ye = w.where.at(1).second, ze = w.where.at(2).second;
  auto dx = G.degree_of(xe), dy = G.degree_of(ye), dz = G.degree_of(ze);
  if (!dx || !dy || !dz) return false;
  Homog x{xe, *dx}, y{ye, *dy}, z{ze, *dz};
  auto homog_b = [&](const Homog& a, const Homog& b) {
    return Homog{ev(a.elem, b.elem), (a.degree + b.degree) % 2};
  };
  Elem lhs, rhs;
  if (w.identity.rfind("B(x,yo_sz)", 0) == 0) {
    lhs = ev(xe, superproduct(G, y, z).elem);
    Elem first = superproduct(G, homog_b(x, y), z).elem;
    Elem second = superproduct(G, y, homog_b(x, z)).elem;
    rhs = (x.degree * y.degree) % 2 == 1 ? R.sub(first, second) : R.add(first, second);
  } else {
    lhs = ev(superproduct(G, x, y).elem, ze);
    Elem first = superproduct(G, x, homog_b(y, z)).elem;
    Elem second = superproduct(G, homog_b(x, z), y).elem;
    rhs = (y.degree * z.degree) % 2 == 1 ? R.sub(first, second) : R.add(first, second);
  }
  return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
}

// One mutated copy of a graded map: a single admissible block entry replaced
// by a different admissible value. Returns nullopt if the space has no slack.
inline std::optional<GradedMap> mutate_graded(SplitMix64& rng, const GradedRing& G,
                                              const GradedMap& m) {
  const AbelianGroup& g = G.ring().carrier();
  const auto& mask = G.coordinate_degrees();
  struct Pos {
    std::size_t i, j;
    std::int64_t step, count;
  };
  std::vector<Pos> slots;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (g.factor(i) == 1) continue;
    for (std::size_t j = 0; j < g.rank(); ++j) {
      if (mask[j] != (mask[i] + m.degree()) % 2) continue;
      std::int64_t cnt = std::gcd(g.factor(i), g.factor(j));
      if (cnt > 1) slots.push_back({i, j, g.factor(j) / cnt, cnt});
    }
  }
  if (slots.empty()) return std::nullopt;
  const Pos& p = slots[rng.below(slots.size())];
  std::int64_t old = m.hom().entry(p.i, p.j);
  std::int64_t pick = (std::int64_t)rng.below((std::uint64_t)(p.count - 1));
  std::int64_t val = pick * p.step;
  if (val == old) val = (pick + 1) * p.step;
  std::vector<std::int64_t> matrix = m.hom().matrix();
  matrix[p.i * g.rank() + p.j] = val;
  return GradedMap(G, GroupHom(g, g, std::move(matrix)), m.degree());
}

// Analogous single-entry mutation of a block-constrained biadditive map.
inline std::optional<BiadditiveMap> mutate_biadditive(SplitMix64& rng, const GradedRing& G,
                                                      const BiadditiveSpace& space,
                                                      const BiadditiveMap& b) {
  const AbelianGroup& g = G.ring().carrier();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j)
      if (space.entry_values(i, j).size() > 1) slots.push_back({i, j});
  if (slots.empty()) return std::nullopt;
  auto [i, j] = slots[rng.below(slots.size())];
  const auto& vals = space.entry_values(i, j);
  const Elem& old = b.image(i, j);
  std::size_t pick = rng.below(vals.size() - 1);
  Elem val = vals[pick];
  if (val == old) val = vals[pick + 1];
  std::vector<Elem> imgs = b.images();
  imgs[i * g.rank() + j] = val;
  return BiadditiveMap(g, g, g, std::move(imgs));
}

}  // namespace detail

// Criterion 8: mutation testing. Perturbing one generator image of a passing
// map must either fail its checker with a reproducible witness or still pass
// and re-join the independently enumerated survivor set. 100 deterministic
// mutations per entry.
inline json criterion_mutations(const std::vector<EntryData>& data, std::int64_t bound) {
  json details = json::array();
  bool pass = true;
  for (const EntryData& d : data) {
    if (!d.feasible) continue;
    const GradedRing& G = d.entry->graded;
    std::optional<BiadditiveSpace> bspace;
    if (d.entry->te) bspace.emplace(G, bound);

    SplitMix64 rng(fnv1a(d.entry->name) ^ 0x5eed5eed5eed5eedull);
    int mutations = 0, killed = 0, survived = 0, false_verdicts = 0;
    const int wanted = 100;
    int classes = d.biderivations.empty() ? 2 : 3;
    int guard = 0;
    while (mutations < wanted && guard < wanted * 50) {
      ++guard;
      int cls = (int)rng.below((std::uint64_t)classes);
      if (cls < 2) {
        const auto& pool = cls == 0 ? d.deg0 : d.deg1;
        if (pool.empty()) continue;
        const GradedMap& base = pool[rng.below(pool.size())];
        auto mutant = detail::mutate_graded(rng, G, base);
        if (!mutant) continue;
        ++mutations;
        Verdict v = is_jordan_superderivation(*mutant, bound);
        if (!v.ok()) {
          ++killed;
          if (!detail::confirm_superderivation_witness(G, *mutant, *v.counterexample))
            ++false_verdicts;
        } else {
          ++survived;
          bool member = false;
          for (const GradedMap& s : pool)
            if (s == *mutant) member = true;
          if (!member) ++false_verdicts;
        }
      } else {
        if (d.biderivations.empty()) continue;
        const BiadditiveMap& base = d.biderivations[rng.below(d.biderivations.size())];
        auto mutant = detail::mutate_biadditive(rng, G, *bspace, base);
        if (!mutant) continue;
        ++mutations;
        Verdict v = is_jordan_super_biderivation(G, *mutant, bound);
        if (!v.ok()) {
          ++killed;
          if (!detail::confirm_biderivation_witness(G, *mutant, *v.counterexample))
            ++false_verdicts;
        } else {
          ++survived;
          bool member = false;
          for (const BiadditiveMap& s : d.biderivations)
            if (s == *mutant) member = true;
          if (!member) ++false_verdicts;
        }
      }
    }
    bool entry_ok = false_verdicts == 0 && mutations == wanted;
    pass = pass && entry_ok;
    details.push_back({{"entry", d.entry->name},
                       {"mutations", mutations},
                       {"killed_with_confirmed_witness", killed},
                       {"survived_and_reconfirmed", survived},
                       {"false_verdicts", false_verdicts}});
  }
  return {{"id", 8},
          {"title", "mutation testing: no false verdicts across 100 mutations per entry"},
          {"pass", pass},
          {"details", details}};
}

// Criterion 9: the survivor sets are identical for 1 worker and for the
// requested worker count, byte for byte in canonical serialization.
inline json criterion_determinism(const std::vector<MatrixEntry>& entries, std::int64_t bound,
                                  int workers) {
  json details = json::array();
  bool pass = true;
  const int alt = workers == 1 ? 8 : workers;
  for (const MatrixEntry& e : entries) {
    try {
      json seq = json::array(), par = json::array();
      for (int deg : {0, 1}) {
        seq.push_back(
            detail::serialize_survivors(enumerate_jordan_superderivations(e.graded, deg, bound, 1)));
        par.push_back(detail::serialize_survivors(
            enumerate_jordan_superderivations(e.graded, deg, bound, alt)));
      }
      if (e.te) {
        seq.push_back(
            detail::serialize_survivors(enumerate_jordan_super_biderivations(e.graded, bound, 1)));
        par.push_back(detail::serialize_survivors(
            enumerate_jordan_super_biderivations(e.graded, bound, alt)));
      }
      bool equal = seq.dump() == par.dump();
      pass = pass && equal;
      details.push_back({{"entry", e.name}, {"workers_compared", {1, alt}}, {"equal", equal}});
    } catch (const BoundExceeded&) {
      details.push_back({{"entry", e.name}, {"skipped", true}});
    }
  }
  return {{"id", 9},
          {"title", "enumeration output independent of worker count"},
          {"pass", pass},
          {"details", details}};
}

struct SuiteOptions {
  int workers = 1;
  std::int64_t bound = kDefaultBound;
};

// Runs the whole verification matrix. Run metadata (worker count, timings)
// lives under "run"; everything else is deterministic.
inline json run_suite(const SuiteOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<MatrixEntry> entries = default_matrix(options.bound);
  std::vector<EntryData> data;
  json entry_rows = json::array();
  for (const MatrixEntry& e : entries) {
    data.push_back(compute_entry_data(e, options.bound, options.workers));
    const EntryData& d = data.back();
    json row = {{"name", e.name},
                {"ring", e.ring.name()},
                {"order", e.ring.order()},
                {"even_order", e.graded.part_group(0).order()},
                {"odd_order", e.graded.part_group(1).order()},
                {"enumeration_feasible", d.feasible}};
    if (!d.feasible) row["notice"] = d.notice;
    if (d.feasible) {
      row["survivors_degree0"] = d.deg0.size();
      row["survivors_degree1"] = d.deg1.size();
      if (e.te) row["super_biderivation_survivors"] = d.biderivations.size();
    }
    entry_rows.push_back(row);
  }

  json criteria = json::array();
  criteria.push_back(criterion_oracle_agreement(data, options.bound));
  criteria.push_back(criterion_two_torsion(data, options.bound));
  criteria.push_back(criterion_triangular_decomposition(data, options.bound));
  criteria.push_back(criterion_faithful(data, options.bound));
  criteria.push_back(criterion_inner_degree1(data, options.bound));
  criteria.push_back(criterion_super_biderivations(data, options.bound));
  criteria.push_back(criterion_isomorphisms(options.bound));
  criteria.push_back(criterion_mutations(data, options.bound));
  criteria.push_back(criterion_determinism(entries, options.bound, options.workers));

  bool ok = true;
  for (const json& c : criteria) ok = ok && c.at("pass").get<bool>();

  const auto t1 = std::chrono::steady_clock::now();
  return {{"schema_version", 1},
          {"command", "suite"},
          {"matrix", "default"},
          {"bound", options.bound},
          {"entries", entry_rows},
          {"criteria", criteria},
          {"ok", ok},
          {"run",
           {{"workers", options.workers},
            {"timing_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}}}};
}

// The comparison contract for determinism checks: run metadata is excluded.
inline json strip_run_metadata(json j) {
  j.erase("run");
  return j;
}

}  // namespace superring::suite
