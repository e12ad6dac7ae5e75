#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "tiling/coset.hpp"
#include "tiling/cyclotomic.hpp"
#include "tiling/multipoly.hpp"

namespace tiling {

// G = prod_i x_i^{m_i} / (1 - x_i^{n_i}); its power-series expansion
// enumerates the nonnegative points of the (canonical) coset with
// coefficient 1.
struct GenTerm {
  Coset coset;
};

GenTerm term_from_coset(const Coset& c);

// Sum of the terms of a system over the common denominator
// prod_i (1 - x_i^{L_i}) with L the lcm box.
struct RationalGF {
  MultiPoly numerator;
  std::vector<Coord> denom_exponents;
};

inline constexpr std::int64_t kDefaultTermBudget = 10'000'000;

// Exact common-denominator sum: each term contributes
// x^m * prod_i (1 + x_i^{n_i} + ... + x_i^{L_i - n_i}). Throws BudgetExceeded
// when the numerator would need more than term_budget monomials.
RationalGF system_sum(const CosetSystem& system,
                      std::int64_t term_budget = kDefaultTermBudget);

// True iff the numerator equals prod_i (1 + x_i + ... + x_i^{L_i - 1}) as an
// exact polynomial, i.e. the sum collapses to prod_i 1/(1 - x_i). Holds iff
// the system partitions Z^d.
bool identity_check(const CosetSystem& system,
                    std::int64_t term_budget = kDefaultTermBudget);

// Number of axes with p_i^{n_i} = 1, decided by divisibility N_i | n_i. This
// is the line-restricted pole order of the term at p: each such axis factor
// contributes a simple pole and the monomial numerator never vanishes at
// roots of unity.
int term_pole_order(const GenTerm& term, const RootPoint& p);

// (e^{2 pi i / n_1}, ..., e^{2 pi i / n_d}) as reduced fractions; axes with
// n_i = 1 give the coordinate 1.
RootPoint principal_point(const SubgroupShape& shape);

// Exact generic-line pole order at p: #{ i : p_i^{L_i} = 1 } minus the
// Taylor vanishing order of the numerator at p (the smallest total order k
// with some nonzero mixed partial, evaluated exactly in Q(zeta_M)). Clamped
// below at zero.
int sum_pole_order_exact(const RationalGF& S, const RootPoint& p);

struct PoleProbeParams {
  double t_max = 1e-2;
  double t_min = 1e-6;
  int samples_per_decade = 8;
  int directions = 5;
  std::uint64_t seed = 0;
};

// Median over random real lines through p of the least-squares slope of
// log|S| against log(1/t), with t geometric in [t_min, t_max]. Evaluation
// always uses the common-denominator form. Returns nullopt when any sample
// fails to evaluate to a finite nonzero magnitude.
std::optional<double> numeric_pole_order(const CosetSystem& system, const RootPoint& p,
                                         const PoleProbeParams& params = {});

struct PoleReport {
  RootPoint point;
  int exact_order = 0;
  std::vector<std::pair<std::size_t, int>> per_term_orders;
  bool numeric_requested = false;
  std::optional<double> numeric_estimate;  // absent on estimate failure
  PoleProbeParams params;                  // the probe configuration used
};

PoleReport analyze_pole(const CosetSystem& system, const RootPoint& p, bool numeric,
                        const PoleProbeParams& params = {},
                        std::int64_t term_budget = kDefaultTermBudget);

// Numeric plumbing, shared with the test suites.
std::vector<double> probe_scales(const PoleProbeParams& params);  // descending from t_max
std::vector<std::complex<double>> random_unit_direction(std::mt19937_64& rng, int d);
std::complex<double> eval_gf(const RationalGF& S, const std::vector<std::complex<double>>& x);
std::complex<double> eval_term(const GenTerm& term, const std::vector<std::complex<double>>& x);

}  // namespace tiling
