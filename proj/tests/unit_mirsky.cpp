#include <doctest.h>

#include <algorithm>
#include <random>

#include "tiling/errors.hpp"
#include "tiling/mirsky.hpp"
#include "tiling/search.hpp"
#include "test_util.hpp"

using namespace tiling;
using testutil::cs;
using testutil::pick;
using testutil::sys;

TEST_CASE("max_index_coset spec examples and tie-breaks") {
  CHECK(max_index_coset(sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})})) == 1);
  CHECK(max_index_coset(sys(2, {cs({2, 1}, {0, 0}), cs({1, 2}, {0, 0})})) == 1);
  CHECK(max_index_coset(sys(1, {cs({1}, {0})})) == 0);
  // equal shape and offset: first position wins
  CHECK(max_index_coset(sys(1, {cs({3}, {1}), cs({3}, {1})})) == 0);
}

TEST_CASE("cancelers spec examples") {
  const CosetSystem s = sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})});
  CHECK(cancelers(s, 1) == std::vector<std::size_t>{2});
  CHECK(cancelers(sys(1, {cs({2}, {0}), cs({2}, {1})}), 0) == std::vector<std::size_t>{1});
  CHECK(cancelers(sys(2, {cs({2, 3}, {0, 0}), cs({6, 3}, {1, 0})}), 1).empty());
  CHECK_THROWS_AS(cancelers(s, 3), std::invalid_argument);
}

TEST_CASE("cancelers are invariant under permutation of the others") {
  std::mt19937_64 rng(64);
  for (int iter = 0; iter < 40; ++iter) {
    CosetSystem s = random_split_cover(2, 5, 3, rng());
    const std::size_t j = static_cast<std::size_t>(
        pick(rng, 0, static_cast<Coord>(s.cosets.size()) - 1));
    auto base = cancelers(s, j);
    std::vector<Coset> base_cosets;
    for (std::size_t idx : base) base_cosets.push_back(s.cosets[idx]);
    std::sort(base_cosets.begin(), base_cosets.end());

    CosetSystem perm = s;
    std::swap(perm.cosets.front(), perm.cosets.back());
    const Coset target = s.cosets[j];
    const std::size_t j2 = static_cast<std::size_t>(
        std::find(perm.cosets.begin(), perm.cosets.end(), target) - perm.cosets.begin());
    auto moved = cancelers(perm, j2);
    std::vector<Coset> moved_cosets;
    for (std::size_t idx : moved) moved_cosets.push_back(perm.cosets[idx]);
    std::sort(moved_cosets.begin(), moved_cosets.end());
    CHECK(base_cosets == moved_cosets);
  }
}

TEST_CASE("witness spec examples") {
  Witness w = witness(sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})}));
  CHECK(w.j_star == 1);
  CHECK(w.j_partner == 2);
  CHECK(w.shared_shape.n == std::vector<Coord>{4});

  Witness w2 = witness(sys(2, {cs({2, 1}, {0, 0}), cs({2, 1}, {1, 0})}));
  CHECK(w2.shared_shape.n == std::vector<Coord>{2, 1});
  CHECK(w2.j_star == 0);
  CHECK(w2.j_partner == 1);

  Witness w3 = witness(sys(1, {cs({2}, {0}), cs({2}, {1})}));
  CHECK(w3.shared_shape.n == std::vector<Coord>{2});
}

TEST_CASE("witness preconditions") {
  CHECK_THROWS_AS(witness(sys(1, {cs({2}, {0}), cs({3}, {1})})), WitnessPrecondition);
  CHECK_THROWS_AS(witness(sys(1, {cs({1}, {0})})), WitnessPrecondition);
  CHECK_THROWS_AS(witness(sys(2, {cs({1, 1}, {0, 0})})), WitnessPrecondition);
}

TEST_CASE("theorem_check spec examples") {
  CHECK(theorem_check(sys(1, {cs({2}, {0}), cs({4}, {1}), cs({4}, {3})})));
  CHECK(theorem_check(sys(1, {cs({2}, {0}), cs({3}, {1})})));  // vacuous: not a partition
  CHECK(theorem_check(sys(1, {cs({1}, {0})})));                // vacuous: trivial
}

TEST_CASE("witness and theorem_check agree on random partitions") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const int d = 1 + static_cast<int>(pick(rng, 0, 2));
    CosetSystem s = random_split_cover(d, static_cast<int>(pick(rng, 1, 6)), 3, rng());
    if (s.cosets.size() < 2) continue;
    Witness w = witness(s);  // must not throw on an exact partition
    CHECK(theorem_check(s));
    CHECK(w.j_star != w.j_partner);
    CHECK(w.j_star == max_index_coset(s));
    CHECK(w.shared_shape == s.cosets[w.j_star].shape);
    CHECK(w.shared_shape == s.cosets[w.j_partner].shape);
    // every canceler of the maximal coset matches its shape and product
    for (std::size_t jp : cancelers(s, w.j_star)) {
      CHECK(s.cosets[jp].shape == w.shared_shape);
      CHECK(s.cosets[jp].shape.index() == w.shared_shape.index());
    }
  }
}
