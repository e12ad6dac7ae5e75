#include <doctest.h>

#include <cmath>
#include <random>

#include "tiling/errors.hpp"
#include "tiling/genfun.hpp"
#include "tiling/search.hpp"
#include "test_util.hpp"

using namespace tiling;
using testutil::cs;
using testutil::pick;
using testutil::sys;

namespace {

MultiPoly poly_1d(std::initializer_list<long> coeffs) {
  MultiPoly p(1);
  Coord e = 0;
  for (long c : coeffs) p.add_term({e++}, Rat(c));
  return p;
}

// Power-series coefficient of x^z in N / prod_i (1 - x_i^{L_i}) for z >= 0:
// sum the numerator coefficients at exponents e <= z with L | (z - e).
Rat series_coefficient(const RationalGF& S, const std::vector<Coord>& z) {
  Rat acc(0);
  for (const auto& [e, c] : S.numerator.terms()) {
    bool hit = true;
    for (std::size_t i = 0; i < z.size() && hit; ++i)
      hit = e[i] <= z[i] && (z[i] - e[i]) % S.denom_exponents[i] == 0;
    if (hit) acc += c;
  }
  return acc;
}

int cover_count(const CosetSystem& s, const std::vector<Coord>& z) {
  int count = 0;
  for (const Coset& c : s.cosets)
    if (contains(c, z)) ++count;
  return count;
}

}  // namespace

TEST_CASE("term_from_coset requires canonical input and expands to the coset") {
  CHECK_THROWS_AS(term_from_coset(cs({4}, {7})), std::invalid_argument);
  GenTerm g = term_from_coset(cs({2, 3}, {1, 2}));
  CHECK(g.coset.shape.n == std::vector<Coord>{2, 3});
  // single-term sum: expansion coefficients are the membership indicator
  CosetSystem single = sys(2, {g.coset});
  RationalGF S = system_sum(single);
  for (Coord x = 0; x < 6; ++x)
    for (Coord y = 0; y < 6; ++y)
      CHECK(series_coefficient(S, {x, y}) == Rat(cover_count(single, {x, y})));
}

TEST_CASE("system_sum spec examples") {
  RationalGF S = system_sum(sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})}));
  CHECK(S.denom_exponents == std::vector<Coord>{4});
  CHECK(S.numerator == poly_1d({1, 1, 1, 1}));

  RationalGF T = system_sum(sys(1, {cs({1}, {0})}));
  CHECK(T.denom_exponents == std::vector<Coord>{1});
  CHECK(T.numerator == poly_1d({1}));

  RationalGF U = system_sum(sys(1, {cs({2}, {0}), cs({4}, {1})}));
  CHECK(U.numerator == poly_1d({1, 1, 1}));
}

TEST_CASE("system_sum respects the term budget") {
  CHECK_THROWS_AS(system_sum(sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})}), 3),
                  BudgetExceeded);
}

TEST_CASE("identity_check spec examples") {
  CHECK(identity_check(sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})})));
  CHECK_FALSE(identity_check(sys(1, {cs({2}, {0}), cs({4}, {1})})));
  CHECK(identity_check(sys(1, {cs({1}, {0})})));
}

TEST_CASE("identity_check equals explicit comparison with the box polynomial") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 80; ++iter) {
    CosetSystem s = random_split_cover(static_cast<int>(pick(rng, 1, 2)),
                                       static_cast<int>(pick(rng, 0, 4)), 3, rng());
    if (pick(rng, 0, 2) == 0 && s.cosets.size() > 1) s.cosets.pop_back();
    RationalGF S = system_sum(s);
    MultiPoly box(s.d);
    {
      // prod_i (1 + x_i + ... + x_i^{L_i - 1}) built term by term
      std::vector<Coord> z(s.d, 0);
      for (;;) {
        box.add_term(z, Rat(1));
        int i = s.d - 1;
        while (i >= 0 && ++z[i] == S.denom_exponents[i]) z[i--] = 0;
        if (i < 0) break;
      }
    }
    CHECK(identity_check(s) == (S.numerator == box));
  }
}

TEST_CASE("identity holds exactly for partitions") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 120) {
    const int d = static_cast<int>(pick(rng, 1, 3));
    CosetSystem s = random_split_cover(d, static_cast<int>(pick(rng, 0, 6)), 3, rng());
    switch (pick(rng, 0, 2)) {
      case 0:
        break;  // keep the exact cover
      case 1:
        if (s.cosets.size() > 1) s.cosets.pop_back();
        break;
      default: {
        Coset& c = s.cosets[static_cast<std::size_t>(pick(
            rng, 0, static_cast<Coord>(s.cosets.size()) - 1))];
        const int axis = static_cast<int>(pick(rng, 0, d - 1));
        if (c.shape.n[axis] > 1)
          c.offset[axis] = floor_mod(c.offset[axis] + pick(rng, 1, c.shape.n[axis] - 1),
                                     c.shape.n[axis]);
        break;
      }
    }
    if (lcm_box(s).volume() > 100000) continue;
    CHECK(identity_check(s) == verify_partition(s).is_partition);
    ++done;
  }
}

TEST_CASE("term and principal point spec examples") {
  GenTerm g = term_from_coset(cs({2, 3}, {0, 0}));
  CHECK(term_pole_order(g, RootPoint{{make_root_coord(1, 2), make_root_coord(1, 3)}}) == 2);
  CHECK(term_pole_order(g, RootPoint{{make_root_coord(1, 2), make_root_coord(1, 4)}}) == 1);
  CHECK(term_pole_order(g, RootPoint{{make_root_coord(1, 4), make_root_coord(1, 5)}}) == 0);

  CHECK(principal_point(SubgroupShape{{4}}) == RootPoint{{RootCoord{1, 4}}});
  CHECK(principal_point(SubgroupShape{{2, 3}}) ==
        RootPoint{{RootCoord{1, 2}, RootCoord{1, 3}}});
  CHECK(principal_point(SubgroupShape{{1, 1}}) ==
        RootPoint{{RootCoord{0, 1}, RootCoord{0, 1}}});
}

TEST_CASE("every term has a full-order pole at its principal point") {
  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 100; ++iter) {
    const int d = static_cast<int>(pick(rng, 1, 4));
    std::vector<Coord> n(d), m(d);
    for (int i = 0; i < d; ++i) {
      n[i] = pick(rng, 1, 9);
      m[i] = pick(rng, 0, n[i] - 1);
    }
    const Coset c = cs(n, m);
    CHECK(term_pole_order(term_from_coset(c), principal_point(c.shape)) == d);
  }
}

TEST_CASE("sum_pole_order_exact spec examples") {
  const CosetSystem cover = sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})});
  RationalGF S = system_sum(cover);
  CHECK(sum_pole_order_exact(S, RootPoint{{make_root_coord(1, 4)}}) == 0);
  CHECK(sum_pole_order_exact(S, RootPoint{{make_root_coord(0, 1)}}) == 1);

  RationalGF T = system_sum(sys(1, {cs({2}, {0}), cs({4}, {1})}));
  CHECK(sum_pole_order_exact(T, RootPoint{{make_root_coord(1, 4)}}) == 1);
}

TEST_CASE("exact cover pole order counts coordinates equal to one") {
  std::mt19937_64 rng(808);
  int done = 0;
  while (done < 50) {
    const int d = static_cast<int>(pick(rng, 1, 3));
    CosetSystem s = random_split_cover(d, static_cast<int>(pick(rng, 1, 5)), 3, rng());
    LcmBox box = lcm_box(s);
    if (box.volume() > 2000) continue;
    RationalGF S = system_sum(s);
    RootPoint p;
    int expected = 0;
    for (int i = 0; i < d; ++i) {
      const Coord Li = box.L[i].get_si();
      std::vector<Coord> divs;
      for (Coord e = 1; e <= Li; ++e)
        if (Li % e == 0) divs.push_back(e);
      const Coord N = divs[pick(rng, 0, static_cast<Coord>(divs.size()) - 1)];
      RootCoord rc = make_root_coord(N == 1 ? 0 : 1, N);
      if (rc.k == 0) ++expected;  // coordinate is the complex number 1
      p.coords.push_back(rc);
    }
    CHECK(sum_pole_order_exact(S, p) == expected);
    ++done;
  }
}

TEST_CASE("truncated series reproduces box cover counts") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 40; ++iter) {
    const int d = static_cast<int>(pick(rng, 1, 2));
    CosetSystem s = random_split_cover(d, static_cast<int>(pick(rng, 0, 4)), 3, rng());
    if (pick(rng, 0, 1) == 1 && s.cosets.size() > 1) s.cosets.pop_back();
    RationalGF S = system_sum(s);
    std::vector<Coord> z(d, 0);
    for (;;) {
      Coord total = 0;
      for (Coord zi : z) total += zi;
      if (total <= 12) CHECK(series_coefficient(S, z) == Rat(cover_count(s, z)));
      int i = d - 1;
      while (i >= 0 && ++z[i] > 12) z[i--] = 0;
      if (i < 0) break;
    }
  }
}

TEST_CASE("numeric pole order tracks the exact order") {
  PoleProbeParams params;
  params.seed = 2;

  const CosetSystem cover = sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})});
  RationalGF S = system_sum(cover);

  const RootPoint one{{make_root_coord(0, 1)}};
  auto est1 = numeric_pole_order(cover, one, params);
  REQUIRE(est1.has_value());
  CHECK(std::abs(*est1 - 1.0) <= 0.2);

  const CosetSystem single = sys(2, {cs({2, 3}, {0, 0})});
  const RootPoint p23{{make_root_coord(1, 2), make_root_coord(1, 3)}};
  auto est2 = numeric_pole_order(single, p23, params);
  REQUIRE(est2.has_value());
  CHECK(std::abs(*est2 - 2.0) <= 0.2);

  const RootPoint quarter{{make_root_coord(1, 4)}};
  auto est0 = numeric_pole_order(cover, quarter, params);
  REQUIRE(est0.has_value());
  CHECK(std::abs(*est0 - 0.0) <= 0.2);
}

TEST_CASE("probe scales are geometric and descending") {
  PoleProbeParams params;
  auto ts = probe_scales(params);
  CHECK(ts.size() == 33);
  CHECK(ts.front() == doctest::Approx(1e-2));
  CHECK(ts.back() == doctest::Approx(1e-6).epsilon(1e-6));
  for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i] < ts[i - 1]);
  params.t_min = 0.5;
  CHECK_THROWS_AS(probe_scales(params), std::invalid_argument);
}

TEST_CASE("analyze_pole assembles exact, per-term and numeric data") {
  const CosetSystem cover = sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})});
  PoleProbeParams params;
  params.seed = 7;
  PoleReport rep = analyze_pole(cover, RootPoint{{make_root_coord(1, 4)}}, true, params);
  CHECK(rep.exact_order == 0);
  REQUIRE(rep.per_term_orders.size() == 3);
  CHECK(rep.per_term_orders[0] == std::pair<std::size_t, int>{0, 0});  // 4th root not in 2Z poles
  CHECK(rep.per_term_orders[1] == std::pair<std::size_t, int>{1, 1});
  CHECK(rep.per_term_orders[2] == std::pair<std::size_t, int>{2, 1});
  CHECK(rep.numeric_requested);
  REQUIRE(rep.numeric_estimate.has_value());
  CHECK(std::abs(*rep.numeric_estimate) <= 0.2);
}
