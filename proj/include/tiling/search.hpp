#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tiling/coset.hpp"

namespace tiling {

struct SearchSpec {
  int d = 1;
  Coord max_n = 2;                   // per-axis bound on the moduli
  bool distinct_shapes_only = false; // prune branches repeating a shape
  bool exclude_trivial = false;      // drop the single full-lattice solution
  std::optional<int> max_cosets;
  bool mrv_heuristic = true;         // column selection; speed only
  int threads = 1;
  std::optional<double> timeout_seconds;
  Int cell_budget = kDefaultCellBudget;
};

struct SearchStats {
  std::uint64_t nodes = 0;      // row choices tried
  std::uint64_t solutions = 0;
  double wall_seconds = 0.0;
  bool complete = true;         // false when the timeout cut enumeration short
};

struct SearchResult {
  std::vector<CosetSystem> solutions;  // canonical order, deduplicated
  SearchStats stats;
};

// All canonical cosets with 1 <= n_i <= max_n per axis, ordered by shape then
// offset. Each tiles the box prod_i [0, lcm(1..max_n)) evenly.
std::vector<Coset> enumerate_candidates(const SearchSpec& spec);

// Exact-cover backtracking (dancing links) over the box cells. Returns every
// partition of the box into candidate cosets, as unordered coset sets in
// canonical order. Box-level exact cover equals a Z^d partition because every
// candidate is box-periodic.
SearchResult search_exact_covers(const SearchSpec& spec);

// Starts from the full lattice and repeatedly splits a random coset along a
// random axis into q translates, q in [2, max_factor]. Every output is an
// exact partition by construction. Deterministic for a fixed seed.
CosetSystem random_split_cover(int d, int steps, int max_factor, std::uint64_t seed);

}  // namespace tiling
