#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "tiling/numbers.hpp"

namespace tiling {

// Axis-aligned sublattice n_1 Z x ... x n_d Z of Z^d.
struct SubgroupShape {
  std::vector<Coord> n;

  int dim() const { return static_cast<int>(n.size()); }
  Int index() const;  // prod_i n_i, exact
  friend auto operator<=>(const SubgroupShape&, const SubgroupShape&) = default;
};

// Translate of a Cartesian sublattice. In canonical form 0 <= m_i < n_i, so
// the nonnegative points of the coset are exactly the offset plus nonnegative
// shape multiples.
struct Coset {
  SubgroupShape shape;
  std::vector<Coord> offset;

  int dim() const { return shape.dim(); }
  friend auto operator<=>(const Coset&, const Coset&) = default;
};

// Finite list of cosets in a common dimension; a candidate tiling of Z^d.
struct CosetSystem {
  int d = 0;
  std::vector<Coset> cosets;

  friend auto operator<=>(const CosetSystem&, const CosetSystem&) = default;
};

// Per-axis lcm of the moduli; one full period of the system.
struct LcmBox {
  std::vector<Int> L;
  Int volume() const;
};

struct Counterexample {
  std::vector<Coord> cell;
  std::int64_t cover_count = 0;  // 0 = uncovered, >= 2 = multiply covered
};

struct VerificationReport {
  bool is_disjoint = false;
  Rat density_sum;
  bool is_partition = false;
  std::optional<Counterexample> counterexample;
};

inline constexpr std::int64_t kDefaultCellBudget = 100'000'000;

void check_shape(const SubgroupShape& shape);
void check_system(const CosetSystem& system);
bool is_canonical(const Coset& coset);

// Reduces every offset into [0, n_i). Idempotent, membership-preserving.
Coset canonicalize(const Coset& coset);

// z is in the coset iff z_i = m_i (mod n_i) on every axis.
bool contains(const Coset& coset, const std::vector<Coord>& z);

// Natural density 1 / prod_i n_i.
Rat density(const Coset& coset);

// CRT criterion: the cosets meet iff m1_i = m2_i (mod gcd(n1_i, n2_i)) holds
// on every axis.
bool disjoint(const Coset& a, const Coset& b);

LcmBox lcm_box(const CosetSystem& system);

// Counts covers of every cell of the fundamental box prod_i [0, L_i).
// All cosets are L-periodic, so box verification decides Z^d. The reported
// counterexample is the lexicographically first cell covered != once.
// Throws BudgetExceeded when the box volume exceeds cell_budget.
VerificationReport verify_partition(const CosetSystem& system,
                                    const Int& cell_budget = kDefaultCellBudget);

}  // namespace tiling
