#pragma once

#include <complex>
#include <map>
#include <vector>

#include "tiling/numbers.hpp"

namespace tiling {

using ExpVec = std::vector<Coord>;

// Binary exponentiation; exp must be nonnegative.
std::complex<double> cpow(std::complex<double> base, std::int64_t exp);

// Sparse multivariate polynomial with exact rational coefficients. Terms
// iterate in lexicographic exponent order; zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int dim);
  static MultiPoly monomial(ExpVec e, Rat c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, Rat>& terms() const { return terms_; }

  void add_term(const ExpVec& e, const Rat& c);
  Rat coefficient(const ExpVec& e) const;
  Coord total_degree() const;  // 0 for the zero polynomial

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  bool operator==(const MultiPoly& rhs) const = default;

  // Applies d/dx_i alpha_i times on every axis in one pass.
  MultiPoly mixed_derivative(const std::vector<int>& alpha) const;

  std::complex<double> eval(const std::vector<std::complex<double>>& x) const;

 private:
  int dim_;
  std::map<ExpVec, Rat> terms_;
};

}  // namespace tiling
