#pragma once

#include <complex>
#include <compare>
#include <vector>

#include "tiling/multipoly.hpp"
#include "tiling/numbers.hpp"

namespace tiling {

inline constexpr Coord kDefaultConductorBound = 10'000;

// The complex number e^{2 pi i k/N}, stored as a reduced fraction of a full
// turn: 0 <= k < N, gcd(k, N) = 1, and k == 0 forces N == 1.
struct RootCoord {
  Coord k = 0;
  Coord N = 1;
  friend auto operator<=>(const RootCoord&, const RootCoord&) = default;
};

RootCoord make_root_coord(Coord k, Coord N);

// A point of (C*)^d with root-of-unity coordinates.
struct RootPoint {
  std::vector<RootCoord> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  // lcm of the coordinate orders; throws BudgetExceeded past the bound.
  Coord order(Coord conductor_bound = kDefaultConductorBound) const;
  friend auto operator<=>(const RootPoint&, const RootPoint&) = default;
};

// Phi_M with coefficient of x^t at position t, computed by exact division of
// x^M - 1 by the Phi_e of the proper divisors. Cached; safe to call from
// multiple threads.
const std::vector<Int>& cyclotomic_poly(Coord M, Coord conductor_bound = kDefaultConductorBound);

// Element of Q(zeta_M) as a polynomial in zeta_M reduced mod Phi_M.
// coeffs has length deg Phi_M = phi(M) exactly.
struct CycloNumber {
  Coord M = 1;
  std::vector<Rat> coeffs;

  bool is_zero() const;
};

CycloNumber cyclo_zero(Coord M);
CycloNumber cyclo_from_rat(Coord M, const Rat& c);

// zeta_M^{k M/N}, i.e. e^{2 pi i k/N} inside Q(zeta_M). Requires N | M and
// 0 <= k < N.
CycloNumber embed_root(Coord k, Coord N, Coord M);

// Exact ring operations. All binary operations require equal conductors;
// callers normalize to a common lcm beforehand.
CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
bool operator==(const CycloNumber& a, const CycloNumber& b);
CycloNumber pow(const CycloNumber& a, std::int64_t e);  // e >= 0

std::complex<double> to_complex(const CycloNumber& a);
std::complex<double> to_complex(const RootCoord& rc);
std::vector<std::complex<double>> to_complex(const RootPoint& p);

// Substitutes coordinate i -> e^{2 pi i k_i/N_i} with conductor M = order(p)
// and returns the exact value of P.
CycloNumber eval_at_point(const MultiPoly& P, const RootPoint& p,
                          Coord conductor_bound = kDefaultConductorBound);

}  // namespace tiling
