#include "tiling/io.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "tiling/errors.hpp"

namespace tiling {

namespace {

using Json = nlohmann::ordered_json;

Coord get_integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw ParseError(where + ": expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(where + ": integer out of range");
  return v.get<Coord>();
}

std::vector<Coord> get_int_array(const Json& v, int expected_len, const std::string& where) {
  if (!v.is_array())
    throw ParseError(where + ": expected an array");
  if (static_cast<int>(v.size()) != expected_len)
    throw ParseError(where + ": expected " + std::to_string(expected_len) +
                     " entries, got " + std::to_string(v.size()));
  std::vector<Coord> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(get_integer(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json json_vector(const std::vector<Coord>& v) { return Json(v); }

Json json_coset(const Coset& c) {
  Json j;
  j["n"] = json_vector(c.shape.n);
  j["m"] = json_vector(c.offset);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string format_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

ParsedSystem parse_system(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  if (!doc.contains("d")) throw ParseError("top level: missing field \"d\"");
  if (!doc.contains("cosets")) throw ParseError("top level: missing field \"cosets\"");

  ParsedSystem out;
  const Coord d = get_integer(doc["d"], "d");
  if (d < 1) throw ParseError("d: dimension must be at least 1");
  out.system.d = static_cast<int>(d);

  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("name: expected a string");
    out.name = doc["name"].get<std::string>();
  }

  const Json& cosets = doc["cosets"];
  if (!cosets.is_array() || cosets.empty())
    throw ParseError("cosets: expected a nonempty array");
  for (std::size_t j = 0; j < cosets.size(); ++j) {
    const std::string where = "cosets[" + std::to_string(j) + "]";
    const Json& cj = cosets[j];
    if (!cj.is_object()) throw ParseError(where + ": expected an object");
    if (!cj.contains("n")) throw ParseError(where + ": missing field \"n\"");
    if (!cj.contains("m")) throw ParseError(where + ": missing field \"m\"");
    Coset c;
    c.shape.n = get_int_array(cj["n"], out.system.d, where + ".n");
    c.offset = get_int_array(cj["m"], out.system.d, where + ".m");
    for (int i = 0; i < out.system.d; ++i)
      if (c.shape.n[i] < 1)
        throw ParseError(where + ".n[" + std::to_string(i) + "]: modulus must be positive");
    Coset canon = canonicalize(c);
    if (canon.offset != c.offset)
      out.warnings.push_back(where + ": offsets reduced to the canonical range [0, n_i)");
    out.system.cosets.push_back(std::move(canon));
  }
  check_system(out.system);
  return out;
}

std::string emit_system(const CosetSystem& system, const std::string& name) {
  Json j;
  j["d"] = system.d;
  if (!name.empty()) j["name"] = name;
  j["cosets"] = Json::array();
  for (const Coset& c : system.cosets) j["cosets"].push_back(json_coset(c));
  return dump(j);
}

std::string report_verify(const VerificationReport& rep) {
  Json j;
  j["is_partition"] = rep.is_partition;
  j["is_disjoint"] = rep.is_disjoint;
  j["density_sum"] = rat_to_string(rep.density_sum);
  if (rep.counterexample) {
    Json ce;
    ce["cell"] = json_vector(rep.counterexample->cell);
    ce["cover_count"] = rep.counterexample->cover_count;
    j["counterexample"] = ce;
  } else {
    j["counterexample"] = nullptr;
  }
  return dump(j);
}

std::string report_identity(bool holds, const RationalGF& S) {
  Json j;
  j["holds"] = holds;
  j["denominator_exponents"] = json_vector(S.denom_exponents);
  Json terms = Json::array();
  for (const auto& [e, c] : S.numerator.terms()) {
    Json t;
    t["coefficient"] = rat_to_string(c);
    t["exponents"] = json_vector(e);
    terms.push_back(std::move(t));
  }
  j["numerator_terms"] = std::move(terms);
  return dump(j);
}

std::string report_witness(const Witness& w, const CosetSystem& system) {
  Json j;
  Json inner;
  inner["j_star"] = w.j_star;
  inner["j_partner"] = w.j_partner;
  inner["shape"] = json_vector(w.shared_shape.n);
  inner["offset_star"] = json_vector(system.cosets[w.j_star].offset);
  inner["offset_partner"] = json_vector(system.cosets[w.j_partner].offset);
  j["witness"] = std::move(inner);
  return dump(j);
}

std::string report_witness_precondition(const std::string& reason) {
  Json j;
  j["witness"] = nullptr;
  Json diag;
  diag["kind"] = "precondition";
  diag["message"] = reason;
  j["diagnostic"] = std::move(diag);
  return dump(j);
}

std::string report_poles(const PoleReport& rep) {
  Json j;
  Json pt = Json::array();
  for (const RootCoord& rc : rep.point.coords)
    pt.push_back(std::to_string(rc.k) + "/" + std::to_string(rc.N));
  j["point"] = std::move(pt);
  j["exact_order"] = rep.exact_order;
  Json per = Json::array();
  for (const auto& [idx, order] : rep.per_term_orders)
    per.push_back(Json::array({idx, order}));
  j["per_term_orders"] = std::move(per);
  if (rep.numeric_requested) {
    Json num;
    if (rep.numeric_estimate) {
      num["estimate"] = format_double(*rep.numeric_estimate);
      num["status"] = "ok";
    } else {
      num["estimate"] = nullptr;
      num["status"] = "overflow";
    }
    Json params;
    params["t_max"] = format_param(rep.params.t_max);
    params["t_min"] = format_param(rep.params.t_min);
    params["samples_per_decade"] = rep.params.samples_per_decade;
    params["directions"] = rep.params.directions;
    params["seed"] = rep.params.seed;
    num["params"] = std::move(params);
    j["numeric"] = std::move(num);
  } else {
    j["numeric"] = nullptr;
  }
  return dump(j);
}

std::string report_search(const SearchSpec& spec, const SearchResult& result) {
  Json j;
  Json sp;
  sp["dim"] = spec.d;
  sp["max_n"] = spec.max_n;
  sp["distinct_shapes_only"] = spec.distinct_shapes_only;
  sp["exclude_trivial"] = spec.exclude_trivial;
  if (spec.max_cosets)
    sp["max_cosets"] = *spec.max_cosets;
  else
    sp["max_cosets"] = nullptr;
  j["spec"] = std::move(sp);
  Json sols = Json::array();
  for (const CosetSystem& s : result.solutions) {
    Json sol = Json::array();
    for (const Coset& c : s.cosets) sol.push_back(json_coset(c));
    sols.push_back(std::move(sol));
  }
  j["solutions"] = std::move(sols);
  Json stats;
  stats["nodes"] = result.stats.nodes;
  stats["solutions"] = result.stats.solutions;
  stats["complete"] = result.stats.complete;
  j["stats"] = std::move(stats);
  return dump(j);
}

std::string error_object(const std::string& kind, const std::string& message) {
  Json j;
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  j["error"] = std::move(e);
  return dump(j);
}

RootPoint parse_root_point(const std::string& text, int expected_dim) {
  RootPoint p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t slash = part.find('/');
    if (slash == std::string::npos)
      throw ParseError("point: coordinate \"" + part + "\" is not of the form k/N");
    try {
      std::size_t used_k = 0, used_n = 0;
      const Coord k = std::stoll(part.substr(0, slash), &used_k);
      const Coord N = std::stoll(part.substr(slash + 1), &used_n);
      if (used_k != slash || used_n != part.size() - slash - 1)
        throw std::invalid_argument("trailing characters");
      if (N < 1) throw ParseError("point: denominator must be positive in \"" + part + "\"");
      p.coords.push_back(make_root_coord(k, N));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("point: coordinate \"" + part + "\" is not of the form k/N");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (p.dim() != expected_dim)
    throw ParseError("point: expected " + std::to_string(expected_dim) +
                     " coordinates, got " + std::to_string(p.dim()));
  return p;
}

}  // namespace tiling
