#include "msidon/serialize.hpp"

#include <limits>
#include <unordered_map>

namespace msidon {

namespace {

u64 get_u64(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
  if (v.is_number_unsigned()) return v.get<u64>();
  const auto s = v.get<std::int64_t>();
  if (s < 0) throw FormatError(std::string("field '") + key + "' must be nonnegative");
  return static_cast<u64>(s);
}

std::int64_t as_id(const json& v) {
  if (!v.is_number_integer()) throw FormatError("vertex ids must be integers");
  return v.get<std::int64_t>();
}

json big_int(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class parse_big_int(const json& v, const char* key) {
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) != 0) throw FormatError(std::string("bad integer in '") + key + "'");
    return z;
  }
  throw FormatError(std::string("field '") + key + "' must be an integer or digit string");
}

const char* mode_name(IntervalMode m) { return m == IntervalMode::DirectPrime ? "direct-prime" : "matched"; }

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

json to_json(const SidonSet& s) {
  json j;
  j["n"] = s.n();
  j["elements"] = json::array();
  for (u64 a : s.elements()) j["elements"].push_back(a);
  return j;
}

SidonSet sidon_set_from_json(const json& j) {
  const u64 n = get_u64(j, "n");
  if (!j.contains("elements") || !j.at("elements").is_array()) throw FormatError("missing array 'elements'");
  std::vector<u64> e;
  for (const auto& v : j.at("elements")) {
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
      throw FormatError("elements must be nonnegative integers");
    e.push_back(v.get<u64>());
  }
  return SidonSet(n, std::move(e));
}

json to_json(const GapReport& g) {
  return json{{"leading_deficit", g.leading_deficit},
              {"trailing_deficit", g.trailing_deficit},
              {"max_internal_gap", g.max_internal_gap},
              {"measure", g.measure},
              {"witness_window", {g.witness_window.first, g.witness_window.second}}};
}

json to_json(const ConflictWitness& w) { return json{{"a", w.a}, {"b", w.b}, {"c", w.c}, {"d", w.d}}; }

json to_json(const PrivatePrimeCertificate& c) {
  json j{{"J", c.J}, {"items", json::array()}};
  for (const auto& it : c.items) j["items"].push_back({{"a", it.a}, {"m", it.m}, {"p", it.p}});
  return j;
}

json to_json(const MatchingCertificate& c) {
  json j{{"J", c.J}, {"items", json::array()}};
  for (const auto& r : c.records)
    j["items"].push_back({{"a", r.a}, {"m", r.m}, {"p", r.p}, {"i", r.i}, {"mode", mode_name(r.mode)}});
  return j;
}

PrivatePrimeCertificate certificate_from_json(const json& j) {
  PrivatePrimeCertificate c;
  c.J = get_u64(j, "J");
  if (!j.contains("items") || !j.at("items").is_array()) throw FormatError("missing array 'items'");
  for (const auto& it : j.at("items")) c.items.push_back({get_u64(it, "a"), get_u64(it, "m"), get_u64(it, "p")});
  return c;
}

json to_json(const CertificateVerdict& v) {
  json j{{"valid", v.ok()}, {"violations", json::array()}};
  for (const auto& x : v.violations)
    j["violations"].push_back({{"kind", to_string(x.kind)}, {"items", x.items}, {"message", x.message}});
  return j;
}

json to_json(const LmSumReport& r) {
  json per = json::array();
  for (auto [m, c] : r.per_m_counts) per.push_back({{"m", m}, {"count", c}});
  return json{{"x", r.x},
              {"alpha", r.alpha.str()},
              {"beta", r.beta.str()},
              {"c0", r.c0},
              {"m_max", r.m_max},
              {"window_top", r.window_top},
              {"total_count", r.total_count},
              {"per_m_counts", per},
              {"primes_distinct", r.primes_distinct},
              {"multiplier_inequality_holds", r.multiplier_inequality_holds},
              {"lower_bound_c0xa", r.lower_bound_c0xa}};
}

json to_json(const ShortIntervalScan& s) {
  json j{{"from", s.x_min}, {"to", s.x_max}, {"holds", s.holds}};
  j["first_failure"] = s.first_failure ? json(*s.first_failure) : json(nullptr);
  j["worst_margin"] = static_cast<double>(s.worst_margin);
  j["worst_x"] = s.worst_x;
  return j;
}

json to_json(const ConstructionParams& p) {
  json intervals = json::array();
  if (p.T >= 2) intervals = {{"first", {p.interval_lo(1), p.interval_hi(1)}}, {"count", p.T - 1}};
  return json{{"n", p.n},          {"alpha", p.alpha.str()}, {"beta", p.beta.str()}, {"delta", p.delta.str()},
              {"eta", p.eta},      {"c0", p.c0},             {"H", p.H},             {"J", p.J},
              {"T", p.T},          {"t", p.t},               {"t_unclamped", p.t_unclamped},
              {"intervals", intervals}};
}

json to_json(const ConstructionOutcome& o) {
  json j;
  j["success"] = o.success;
  j["failure"] = o.failure.empty() ? json(nullptr) : json(o.failure);
  j["stats"] = {{"phase1_intervals", o.stats.phase1_intervals},
                {"phase2_intervals", o.stats.phase2_intervals},
                {"graph_right", o.stats.graph_right},
                {"graph_edges", o.stats.graph_edges},
                {"max_phase1_collisions", o.stats.max_phase1_collisions},
                {"matching_size", o.stats.matching_size}};
  j["checks"] = json::array();
  for (const auto& c : o.checks)
    j["checks"].push_back({{"name", c.name}, {"holds", c.holds}, {"required", c.required}, {"detail", c.detail}});
  if (o.gap) j["gap"] = to_json(*o.gap);
  if (!o.prime_free_intervals.empty()) j["prime_free_intervals"] = o.prime_free_intervals;
  if (o.deficiency) j["deficiency"] = {{"S", o.deficiency->intervals}, {"N_S", o.deficiency->primes}};
  return j;
}

json to_json(const WeightedBipartiteGraph& g) {
  json j{{"left", g.left_ids()}, {"right", g.right_ids()}, {"edges", json::array()}};
  for (const auto& e : g.edges()) {
    j["edges"].push_back({{"u", g.left_ids()[e.u]},
                          {"v", g.right_ids()[e.v]},
                          {"w_num", big_int(e.w.get_num())},
                          {"w_den", big_int(e.w.get_den())},
                          {"ms", e.multipliers}});
  }
  return j;
}

WeightedBipartiteGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("graph must be an object");
  for (const char* k : {"left", "right", "edges"})
    if (!j.contains(k) || !j.at(k).is_array()) throw FormatError(std::string("missing array '") + k + "'");
  std::vector<std::int64_t> left, right;
  std::unordered_map<std::int64_t, std::size_t> li, ri;
  for (const auto& v : j.at("left")) {
    left.push_back(as_id(v));
    if (!li.emplace(left.back(), left.size() - 1).second) throw FormatError("duplicate left id");
  }
  for (const auto& v : j.at("right")) {
    right.push_back(as_id(v));
    if (!ri.emplace(right.back(), right.size() - 1).second) throw FormatError("duplicate right id");
  }
  WeightedBipartiteGraph g(left, right);
  for (const auto& e : j.at("edges")) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v")) throw FormatError("edge needs 'u' and 'v'");
    const auto u = li.find(as_id(e.at("u")));
    const auto v = ri.find(as_id(e.at("v")));
    if (u == li.end() || v == ri.end()) throw FormatError("edge endpoint id not declared");
    std::vector<u64> ms;
    Rational from_ms(0);
    if (e.contains("ms")) {
      for (const auto& m : e.at("ms")) {
        if (!m.is_number_integer() || m.get<std::int64_t>() < 1) throw FormatError("ms entries must be positive");
        ms.push_back(m.get<u64>());
        from_ms += Rational(1, m.get<unsigned long>());
      }
    }
    Rational w;
    if (e.contains("w_num") || e.contains("w_den")) {
      if (!e.contains("w_num") || !e.contains("w_den")) throw FormatError("edge needs both w_num and w_den");
      const mpz_class den = parse_big_int(e.at("w_den"), "w_den");
      if (den <= 0) throw FormatError("w_den must be positive");
      w = Rational(parse_big_int(e.at("w_num"), "w_num"), den);
      w.canonicalize();
      if (!ms.empty() && w != from_ms) throw FormatError("edge weight disagrees with sum of 1/m over ms");
    } else if (!ms.empty()) {
      w = from_ms;
    } else {
      throw FormatError("edge needs a weight (w_num/w_den) or multipliers (ms)");
    }
    try {
      g.add_edge(u->second, v->second, w, std::move(ms));
    } catch (const DomainError& err) {
      throw FormatError(err.what());
    }
  }
  return g;
}

json to_json(const WeightedBipartiteGraph& g, const Matching& m) {
  json pairs = json::array();
  for (std::size_t u = 0; u < g.left_size(); ++u)
    if (m.left_to_right[u]) pairs.push_back({{"u", g.left_ids()[u]}, {"v", g.right_ids()[*m.left_to_right[u]]}});
  return json{{"size", m.size()}, {"covers_left", m.covers_left()}, {"pairs", pairs}};
}

json to_json(const WeightedBipartiteGraph& g, const DeficiencyWitness& d) {
  json s = json::array(), ns = json::array();
  for (auto u : d.S) s.push_back(g.left_ids()[u]);
  for (auto v : d.neighbourhood) ns.push_back(g.right_ids()[v]);
  return json{{"S", s}, {"N_S", ns}};
}

json to_json(const WeightedBipartiteGraph& g, const HallCheck& h) {
  json ro = json::array(), co = json::array();
  for (auto u : h.row_offenders) ro.push_back(g.left_ids()[u]);
  for (auto v : h.col_offenders) co.push_back(g.right_ids()[v]);
  return json{{"rows_ok", h.rows_ok}, {"cols_ok", h.cols_ok}, {"row_offenders", ro}, {"col_offenders", co}};
}

json to_json(const ExactResult& r) {
  return json{{"n", r.n},
              {"value", r.value},
              {"lower_bound", r.lower_bound},
              {"witness", to_json(r.witness)},
              {"nodes_explored", r.nodes_explored},
              {"proven_optimal", r.proven_optimal}};
}

}  // namespace msidon
