#include "tiling/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "tiling/errors.hpp"

namespace tiling {

namespace {

std::mutex cache_mutex;
std::map<Coord, std::vector<Int>> phi_cache;

// Exact quotient num / div for a monic integer divisor; throws on nonzero
// remainder.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& div) {
  const std::size_t dn = num.size() - 1;
  const std::size_t dd = div.size() - 1;
  std::vector<Int> q(dn - dd + 1, Int(0));
  for (std::size_t k = dn - dd + 1; k-- > 0;) {
    Int c = num[k + dd];
    if (c == 0) continue;
    q[k] = c;
    for (std::size_t t = 0; t <= dd; ++t) num[k + t] -= c * div[t];
  }
  for (const Int& r : num)
    if (r != 0) throw std::logic_error("cyclotomic: division left a remainder");
  return q;
}

// cache_mutex must be held.
const std::vector<Int>& ensure_phi(Coord M) {
  auto it = phi_cache.find(M);
  if (it != phi_cache.end()) return it->second;
  std::vector<Int> poly(static_cast<std::size_t>(M) + 1, Int(0));
  poly.front() = -1;
  poly.back() = 1;  // x^M - 1
  for (Coord e = 1; e < M; ++e)
    if (M % e == 0) poly = divide_exact(std::move(poly), ensure_phi(e));
  return phi_cache.emplace(M, std::move(poly)).first->second;
}

void check_conductor(Coord M, Coord bound, const char* who) {
  if (M < 1) throw std::invalid_argument(std::string(who) + ": conductor must be positive");
  if (M > bound)
    throw BudgetExceeded(std::string(who) + ": conductor " + std::to_string(M) +
                         " exceeds bound " + std::to_string(bound));
}

void check_same_conductor(const CycloNumber& a, const CycloNumber& b) {
  if (a.M != b.M)
    throw std::invalid_argument("CycloNumber: conductor mismatch (" +
                                std::to_string(a.M) + " vs " + std::to_string(b.M) + ")");
}

// Reduces a coefficient vector of any length mod the monic Phi_M.
std::vector<Rat> reduce_mod_phi(std::vector<Rat> a, const std::vector<Int>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = a.size(); k-- > deg;) {
    Rat c = a[k];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= deg; ++t) a[k - deg + t] -= c * phi[t];
  }
  a.resize(deg, Rat(0));
  return a;
}

}  // namespace

RootCoord make_root_coord(Coord k, Coord N) {
  if (N < 1) throw std::invalid_argument("RootCoord: denominator must be positive");
  k = floor_mod(k, N);
  Coord g = std::gcd(k, N);
  if (g > 1) {
    k /= g;
    N /= g;
  }
  if (k == 0) N = 1;
  return RootCoord{k, N};
}

Coord RootPoint::order(Coord conductor_bound) const {
  Int m = 1;
  for (const RootCoord& rc : coords) m = lcm(m, Int(rc.N));
  if (!fits_coord(m) || m > conductor_bound)
    throw BudgetExceeded("RootPoint: order " + m.get_str() + " exceeds conductor bound " +
                         std::to_string(conductor_bound));
  return m.get_si();
}

const std::vector<Int>& cyclotomic_poly(Coord M, Coord conductor_bound) {
  check_conductor(M, conductor_bound, "cyclotomic_poly");
  std::lock_guard<std::mutex> lock(cache_mutex);
  return ensure_phi(M);
}

bool CycloNumber::is_zero() const {
  for (const Rat& c : coeffs)
    if (c != 0) return false;
  return true;
}

CycloNumber cyclo_zero(Coord M) {
  std::size_t deg = cyclotomic_poly(M).size() - 1;
  return CycloNumber{M, std::vector<Rat>(deg, Rat(0))};
}

CycloNumber cyclo_from_rat(Coord M, const Rat& c) {
  CycloNumber out = cyclo_zero(M);
  out.coeffs[0] = c;
  return out;
}

CycloNumber embed_root(Coord k, Coord N, Coord M) {
  if (N < 1 || k < 0 || k >= N) throw std::invalid_argument("embed_root: need 0 <= k < N");
  if (M % N != 0) throw std::invalid_argument("embed_root: N does not divide M");
  const std::vector<Int>& phi = cyclotomic_poly(M);
  std::vector<Rat> mono(static_cast<std::size_t>(k * (M / N)) + 1, Rat(0));
  mono.back() = 1;
  return CycloNumber{M, reduce_mod_phi(std::move(mono), phi)};
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
  check_same_conductor(a, b);
  CycloNumber out = a;
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] += b.coeffs[j];
  return out;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
  check_same_conductor(a, b);
  CycloNumber out = a;
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] -= b.coeffs[j];
  return out;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  check_same_conductor(a, b);
  const std::size_t deg = a.coeffs.size();
  std::vector<Rat> conv(2 * deg - 1, Rat(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.coeffs[j] == 0) continue;
      conv[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  const std::vector<Int>& phi = cyclotomic_poly(a.M);
  return CycloNumber{a.M, reduce_mod_phi(std::move(conv), phi)};
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  check_same_conductor(a, b);
  return a.coeffs == b.coeffs;
}

CycloNumber pow(const CycloNumber& a, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("CycloNumber: negative exponent");
  CycloNumber acc = cyclo_from_rat(a.M, Rat(1));
  CycloNumber base = a;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::complex<double> to_complex(const CycloNumber& a) {
  std::complex<double> acc(0.0, 0.0);
  const double turn = 2.0 * std::numbers::pi / static_cast<double>(a.M);
  for (std::size_t t = 0; t < a.coeffs.size(); ++t) {
    if (a.coeffs[t] == 0) continue;
    double angle = turn * static_cast<double>(t);
    acc += a.coeffs[t].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::complex<double> to_complex(const RootCoord& rc) {
  double angle = 2.0 * std::numbers::pi * static_cast<double>(rc.k) / static_cast<double>(rc.N);
  return {std::cos(angle), std::sin(angle)};
}

std::vector<std::complex<double>> to_complex(const RootPoint& p) {
  std::vector<std::complex<double>> out;
  out.reserve(p.coords.size());
  for (const RootCoord& rc : p.coords) out.push_back(to_complex(rc));
  return out;
}

CycloNumber eval_at_point(const MultiPoly& P, const RootPoint& p, Coord conductor_bound) {
  if (P.dim() != p.dim())
    throw std::invalid_argument("eval_at_point: polynomial/point dimension mismatch");
  const Coord M = p.order(conductor_bound);
  const std::vector<Int>& phi = cyclotomic_poly(M, conductor_bound);

  std::vector<Coord> step(p.coords.size());
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    step[i] = p.coords[i].k * (M / p.coords[i].N);

  // Every coordinate value is a power of zeta_M, so each monomial lands on a
  // single exponent mod M; accumulate those and reduce once.
  std::vector<Rat> acc(static_cast<std::size_t>(M), Rat(0));
  for (const auto& [e, c] : P.terms()) {
    Coord t = 0;
    for (std::size_t i = 0; i < step.size(); ++i)
      t = (t + (e[i] % M) * step[i]) % M;
    acc[static_cast<std::size_t>(t)] += c;
  }
  return CycloNumber{M, reduce_mod_phi(std::move(acc), phi)};
}

}  // namespace tiling
