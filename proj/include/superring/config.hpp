#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superring/axioms.hpp"
#include "superring/bimodule.hpp"
#include "superring/constructions.hpp"
#include "superring/graded.hpp"
#include "superring/maps.hpp"
#include "superring/ring.hpp"

namespace superring::config {

using nlohmann::json;

// Input errors (malformed documents, unknown kinds, shape mismatches).
// Distinct from mathematical failures, which carry witnesses.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedRing {
  std::string kind;
  Ring ring;
  std::optional<TrivialExtension> te;
  std::optional<TriangularRing> tri;
  std::optional<GradedRing> graded;
};

namespace detail {

inline const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ConfigError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline std::int64_t need_int(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_integer()) throw ConfigError(where + ": '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

inline Elem parse_elem(const json& j, const AbelianGroup& g, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected a coordinate array");
  std::vector<std::int64_t> coords;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw ConfigError(where + ": coordinates must be integers");
    coords.push_back(v.get<std::int64_t>());
  }
  if (coords.size() != g.rank())
    throw ConfigError(where + ": expected " + std::to_string(g.rank()) + " coordinates, got " +
                      std::to_string(coords.size()));
  return g.make(std::move(coords));
}

inline std::vector<Elem> parse_elem_list(const json& j, const AbelianGroup& g,
                                         const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_elem(j[i], g, where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline Ring parse_ring_expr(const json& j, const std::string& where, std::int64_t bound);

inline Bimodule parse_module(const json& j, const Ring& left, const Ring& right,
                             const std::string& where) {
  const std::string kind = detail::need(j, "kind", where).get<std::string>();
  if (kind == "self") {
    if (!left.same_ring_as(right))
      throw ConfigError(where + ": 'self' module needs equal left and right rings");
    return ring_as_bimodule(left);
  }
  if (kind == "zn") {
    return zn_bimodule(detail::need_int(j, "n", where), left, right);
  }
  if (kind == "table") {
    std::vector<std::int64_t> factors;
    for (const json& v : detail::need(j, "factors", where)) factors.push_back(v.get<std::int64_t>());
    AbelianGroup carrier(std::move(factors));
    auto lt = detail::parse_elem_list(detail::need(j, "left_action", where), carrier,
                                      where + ".left_action");
    auto rt = detail::parse_elem_list(detail::need(j, "right_action", where), carrier,
                                      where + ".right_action");
    return table_bimodule(carrier, left, right, std::move(lt), std::move(rt),
                          j.value("name", std::string("module")));
  }
  throw ConfigError(where + ": unknown module kind '" + kind + "'");
}

inline Ring parse_ring_expr(const json& j, const std::string& where, std::int64_t bound) {
  const std::string kind = detail::need(j, "kind", where).get<std::string>();
  if (kind == "zn") return zn_ring(detail::need_int(j, "n", where));
  if (kind == "product")
    return product_ring(parse_ring_expr(detail::need(j, "left", where), where + ".left", bound),
                        parse_ring_expr(detail::need(j, "right", where), where + ".right", bound));
  if (kind == "trivial_extension") {
    Ring base = parse_ring_expr(detail::need(j, "base", where), where + ".base", bound);
    Bimodule m = parse_module(detail::need(j, "module", where), base, base, where + ".module");
    return trivial_extension(base, m).ring;
  }
  if (kind == "triangular") {
    Ring l = parse_ring_expr(detail::need(j, "left", where), where + ".left", bound);
    Ring r = parse_ring_expr(detail::need(j, "right", where), where + ".right", bound);
    Bimodule m = parse_module(detail::need(j, "module", where), l, r, where + ".module");
    return triangular_ring(l, m, r).ring;
  }
  if (kind == "tn") {
    Ring base = parse_ring_expr(detail::need(j, "base", where), where + ".base", bound);
    std::int64_t n = detail::need_int(j, "n", where);
    if (n < 2) throw ConfigError(where + ": tn needs n >= 2");
    return upper_triangular_tn(base, (std::size_t)n, bound);
  }
  if (kind == "table") {
    std::vector<std::int64_t> factors;
    for (const json& v : detail::need(j, "factors", where)) factors.push_back(v.get<std::int64_t>());
    AbelianGroup carrier(std::move(factors));
    Elem one = detail::parse_elem(detail::need(j, "one", where), carrier, where + ".one");
    auto table = detail::parse_elem_list(detail::need(j, "table", where), carrier,
                                         where + ".table");
    Ring r = table_ring(carrier, one, std::move(table), j.value("name", std::string("table")));
    // table rings are validated eagerly at load
    Verdict v = validate_ring(r, bound);
    if (!v.ok())
      throw ConfigError(where + ": table ring fails ring axioms: " +
                        to_string(*v.counterexample));
    return r;
  }
  throw ConfigError(where + ": unknown ring kind '" + kind + "'");
}

// Loads the "ring" expression of a config document, keeping the structured
// handles (trivial extension / triangular pieces and the grading) when the
// top-level constructor provides them.
inline LoadedRing load_ring(const json& doc, std::int64_t bound = kDefaultBound) {
  const json& rj = detail::need(doc, "ring", "config");
  const std::string kind = detail::need(rj, "kind", "config.ring").get<std::string>();
  if (kind == "trivial_extension") {
    Ring base = parse_ring_expr(detail::need(rj, "base", "config.ring"), "config.ring.base",
                                bound);
    Bimodule m = parse_module(detail::need(rj, "module", "config.ring"), base, base,
                              "config.ring.module");
    TrivialExtension te = trivial_extension(base, m);
    GradedRing g = grade_trivial_extension(te);
    return LoadedRing{kind, te.ring, std::move(te), std::nullopt, std::move(g)};
  }
  if (kind == "triangular") {
    Ring l = parse_ring_expr(detail::need(rj, "left", "config.ring"), "config.ring.left", bound);
    Ring r = parse_ring_expr(detail::need(rj, "right", "config.ring"), "config.ring.right",
                             bound);
    Bimodule m = parse_module(detail::need(rj, "module", "config.ring"), l, r,
                              "config.ring.module");
    TriangularRing tri = triangular_ring(l, m, r);
    GradedRing g = grade_triangular(tri);
    return LoadedRing{kind, tri.ring, std::nullopt, std::move(tri), std::move(g)};
  }
  if (kind == "tn") {
    Ring base = parse_ring_expr(detail::need(rj, "base", "config.ring"), "config.ring.base",
                                bound);
    std::int64_t n = detail::need_int(rj, "n", "config.ring");
    if (n < 2) throw ConfigError("config.ring: tn needs n >= 2");
    TnSplit split = remark_iso(base, (std::size_t)n, bound);
    GradedRing g = grade_triangular(split.tri);
    // The carrier identification with the triangular form is the identity
    // permutation, so maps given in tn coordinates act on either ring.
    return LoadedRing{kind, split.iso.from, std::nullopt, std::move(split.tri), std::move(g)};
  }
  Ring ring = parse_ring_expr(rj, "config.ring", bound);
  return LoadedRing{kind, std::move(ring), std::nullopt, std::nullopt, std::nullopt};
}

struct LoadedMaps {
  std::map<std::string, GradedMap> graded;
  std::map<std::string, AdditiveMap> additive;
  std::map<std::string, BiadditiveMap> biadditive;
};

// Parses the "maps" array: entries {name, type: additive|graded|biadditive,
// degree (graded only), images}.
inline LoadedMaps load_maps(const json& doc, const LoadedRing& lr) {
  LoadedMaps out;
  if (!doc.contains("maps")) return out;
  const json& maps = doc.at("maps");
  if (!maps.is_array()) throw ConfigError("config.maps must be an array");
  const AbelianGroup& carrier = lr.ring.carrier();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const json& mj = maps[i];
    const std::string where = "config.maps[" + std::to_string(i) + "]";
    const std::string name = detail::need(mj, "name", where).get<std::string>();
    const std::string type = mj.value("type", std::string("additive"));
    try {
      if (type == "biadditive") {
        const json& imgs = detail::need(mj, "images", where);
        if (!imgs.is_array() || imgs.size() != carrier.rank())
          throw ConfigError(where + ".images: expected one row per generator");
        std::vector<Elem> flat;
        for (std::size_t a = 0; a < imgs.size(); ++a) {
          auto row = detail::parse_elem_list(imgs[a], carrier,
                                             where + ".images[" + std::to_string(a) + "]");
          if (row.size() != carrier.rank())
            throw ConfigError(where + ".images: expected one image per generator pair");
          flat.insert(flat.end(), row.begin(), row.end());
        }
        out.biadditive.emplace(name, BiadditiveMap(carrier, carrier, carrier, std::move(flat)));
      } else {
        auto images = detail::parse_elem_list(detail::need(mj, "images", where), carrier,
                                              where + ".images");
        AdditiveMap hom = map_from_generator_images(carrier, carrier, images);
        if (type == "graded") {
          if (!lr.graded)
            throw ConfigError(where + ": ring construction carries no grading");
          int degree = (int)detail::need_int(mj, "degree", where);
          out.graded.emplace(name, GradedMap(*lr.graded, hom, degree));
        } else if (type == "additive") {
          out.additive.emplace(name, std::move(hom));
        } else {
          throw ConfigError(where + ": unknown map type '" + type + "'");
        }
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  return out;
}

inline json elem_to_json(const Elem& e) {
  json out = json::array();
  for (auto v : e.c) out.push_back(v);
  return out;
}

inline json witness_to_json(const Witness& w) {
  json where = json::array();
  for (const auto& [name, value] : w.where)
    where.push_back({{"var", name}, {"value", elem_to_json(value)}});
  return {{"identity", w.identity},
          {"where", where},
          {"lhs", elem_to_json(w.lhs)},
          {"rhs", elem_to_json(w.rhs)}};
}

inline json verdict_to_json(const Verdict& v) {
  json out = {{"pass", v.ok()}};
  if (!v.ok()) out["witness"] = witness_to_json(*v.counterexample);
  return out;
}

}  // namespace superring::config
