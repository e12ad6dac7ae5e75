#include <doctest.h>

#include <random>

#include "tiling/errors.hpp"
#include "tiling/io.hpp"
#include "test_util.hpp"

using namespace tiling;
using testutil::cs;
using testutil::pick;
using testutil::sys;

TEST_CASE("parse_system reads the running example") {
  ParsedSystem p = parse_system(
      R"({"d":1,"cosets":[{"n":[2],"m":[0]},{"n":[4],"m":[1]},{"n":[4],"m":[3]}]})");
  CHECK(p.system == sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})}));
  CHECK(p.warnings.empty());
}

TEST_CASE("parse_system reads 2D documents and names") {
  ParsedSystem p = parse_system(
      R"({"d":2,"name":"halves","cosets":[{"n":[2,1],"m":[0,0]},{"n":[2,1],"m":[1,0]}]})");
  CHECK(p.system == sys(2, {cs({2, 1}, {0, 0}), cs({2, 1}, {1, 0})}));
  CHECK(p.name == "halves");
}

TEST_CASE("parse_system rejects bad documents with field-precise errors") {
  CHECK_THROWS_WITH_AS(parse_system(R"({"d":1,"cosets":[{"n":[0],"m":[0]}]})"),
                       "cosets[0].n[0]: modulus must be positive", ParseError);
  CHECK_THROWS_WITH_AS(parse_system(R"({"d":2,"cosets":[{"n":[2],"m":[0,0]}]})"),
                       "cosets[0].n: expected 2 entries, got 1", ParseError);
  CHECK_THROWS_AS(parse_system(R"({"d":1,"cosets":[]})"), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"cosets":[{"n":[2],"m":[0]}]})"), ParseError);
  CHECK_THROWS_AS(parse_system("not json"), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"d":1,"cosets":[{"n":[2.5],"m":[0]}]})"), ParseError);
}

TEST_CASE("parse_system canonicalizes offsets with a warning") {
  ParsedSystem p = parse_system(R"({"d":1,"cosets":[{"n":[4],"m":[-1]}]})");
  CHECK(p.system.cosets[0] == cs({4}, {3}));
  REQUIRE(p.warnings.size() == 1);
  CHECK(p.warnings[0].find("cosets[0]") != std::string::npos);
}

TEST_CASE("emit then parse is the identity on canonical systems") {
  std::mt19937_64 rng(2718);
  for (int iter = 0; iter < 100; ++iter) {
    CosetSystem s = random_split_cover(1 + static_cast<int>(pick(rng, 0, 2)),
                                       static_cast<int>(pick(rng, 0, 6)), 4, rng());
    ParsedSystem round = parse_system(emit_system(s));
    CHECK(round.system == s);
    CHECK(round.warnings.empty());
  }
}

TEST_CASE("reports are byte-deterministic") {
  const CosetSystem cover = sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})});
  auto rep = verify_partition(cover);
  CHECK(report_verify(rep) == report_verify(verify_partition(cover)));

  RationalGF S = system_sum(cover);
  CHECK(report_identity(true, S) == report_identity(identity_check(cover), system_sum(cover)));

  Witness w = witness(cover);
  CHECK(report_witness(w, cover) == report_witness(witness(cover), cover));

  SearchSpec spec;
  spec.d = 1;
  spec.max_n = 4;
  spec.exclude_trivial = true;
  CHECK(report_search(spec, search_exact_covers(spec)) ==
        report_search(spec, search_exact_covers(spec)));
}

TEST_CASE("report contents carry the expected fields") {
  const CosetSystem cover = sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})});
  std::string verify = report_verify(verify_partition(cover));
  CHECK(verify.find("\"is_partition\": true") != std::string::npos);
  CHECK(verify.find("\"density_sum\": \"1/1\"") != std::string::npos);

  std::string wit = report_witness(witness(cover), cover);
  CHECK(wit.find("\"j_star\": 1") != std::string::npos);
  CHECK(wit.find("\"j_partner\": 2") != std::string::npos);

  std::string id = report_identity(identity_check(cover), system_sum(cover));
  CHECK(id.find("\"holds\": true") != std::string::npos);

  PoleReport pr = analyze_pole(cover, RootPoint{{make_root_coord(1, 4)}}, false);
  std::string poles = report_poles(pr);
  CHECK(poles.find("\"exact_order\": 0") != std::string::npos);
  CHECK(poles.find("\"1/4\"") != std::string::npos);
}

TEST_CASE("parse_root_point parses and canonicalizes coordinates") {
  RootPoint p = parse_root_point("1/4,2/4", 2);
  CHECK(p == RootPoint{{RootCoord{1, 4}, RootCoord{1, 2}}});
  CHECK_THROWS_AS(parse_root_point("1/4", 2), ParseError);
  CHECK_THROWS_AS(parse_root_point("1/0", 1), ParseError);
  CHECK_THROWS_AS(parse_root_point("x/4", 1), ParseError);
  CHECK_THROWS_AS(parse_root_point("0.25", 1), ParseError);
}
