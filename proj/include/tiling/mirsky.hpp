#pragma once

#include <cstddef>
#include <vector>

#include "tiling/coset.hpp"

namespace tiling {

// The guaranteed repetition in an exact partition: two distinct cosets
// sharing the maximal-index shape.
struct Witness {
  std::size_t j_star = 0;     // attains the maximal index product
  std::size_t j_partner = 0;  // distinct coset with the identical shape
  SubgroupShape shared_shape;
};

// Index maximizing prod_i n_i; ties broken by lexicographically smallest n,
// then smallest m, then smallest list position.
std::size_t max_index_coset(const CosetSystem& system);

// All j' != j with n_{j,i} | n_{j',i} on every axis: exactly the terms whose
// order-d pole set contains the principal point of coset j. Sorted ascending.
std::vector<std::size_t> cancelers(const CosetSystem& system, std::size_t j);

// Follows the cancellation argument: the maximal coset's principal pole must
// be cancelled by some other term, and divisibility plus maximality force
// that term's shape to equal the maximal one. Requires the system to be an
// exact partition with at least two cosets; throws TheoremViolation if no
// canceler exists.
Witness witness(const CosetSystem& system, const Int& cell_budget = kDefaultCellBudget);

// Vacuously true when the system is not an exact partition or has a single
// coset; otherwise true iff the maximal-product shape repeats in the shape
// multiset. Checked by direct scan, independently of witness().
bool theorem_check(const CosetSystem& system, const Int& cell_budget = kDefaultCellBudget);

}  // namespace tiling
