#pragma once

#include <string>
#include <vector>

#include "tiling/coset.hpp"
#include "tiling/genfun.hpp"
#include "tiling/mirsky.hpp"
#include "tiling/search.hpp"

namespace tiling {

struct ParsedSystem {
  CosetSystem system;  // canonicalized
  std::string name;    // "" when the document has none
  std::vector<std::string> warnings;
};

// Parses a UTF-8 JSON system document {"d": ..., "cosets": [{"n": [...],
// "m": [...]}, ...]}. Offsets are canonicalized with a warning; malformed
// documents, dimension mismatches and nonpositive moduli raise ParseError
// naming the offending field.
ParsedSystem parse_system(const std::string& text);

std::string emit_system(const CosetSystem& system, const std::string& name = "");

// Deterministic JSON reports: fixed key order, canonical term order,
// rationals rendered "p/q". Each ends with a newline.
std::string report_verify(const VerificationReport& rep);
std::string report_identity(bool holds, const RationalGF& S);
std::string report_witness(const Witness& w, const CosetSystem& system);
std::string report_witness_precondition(const std::string& reason);
std::string report_poles(const PoleReport& rep);
std::string report_search(const SearchSpec& spec, const SearchResult& result);

std::string error_object(const std::string& kind, const std::string& message);

// "k1/N1,...,kd/Nd" with integer k and positive N; canonicalized.
RootPoint parse_root_point(const std::string& text, int expected_dim);

}  // namespace tiling
