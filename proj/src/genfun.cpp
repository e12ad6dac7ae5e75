#include "tiling/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tiling/errors.hpp"

namespace tiling {

GenTerm term_from_coset(const Coset& c) {
  check_shape(c.shape);
  if (!is_canonical(c))
    throw std::invalid_argument("term_from_coset: coset must be canonical");
  return GenTerm{c};
}

RationalGF system_sum(const CosetSystem& s, std::int64_t term_budget) {
  check_system(s);
  LcmBox box = lcm_box(s);

  Int total = 0;
  for (const Coset& c : s.cosets) {
    Int cnt = 1;
    for (int i = 0; i < s.d; ++i) cnt *= box.L[i] / c.shape.n[i];
    total += cnt;
  }
  if (total > term_budget)
    throw BudgetExceeded("system_sum: numerator needs " + total.get_str() +
                         " monomials, budget is " + std::to_string(term_budget));
  for (const Int& li : box.L)
    if (!fits_coord(li))
      throw BudgetExceeded("system_sum: axis period " + li.get_str() + " too large");

  std::vector<Coord> L(s.d);
  for (int i = 0; i < s.d; ++i) L[i] = box.L[i].get_si();

  // (1 - x^L)/(1 - x^n) = 1 + x^n + ... + x^{L-n} per axis, shifted by m.
  MultiPoly numerator(s.d);
  for (const Coset& c : s.cosets) {
    std::vector<Coord> reps(s.d), r(s.d, 0);
    ExpVec e(c.offset.begin(), c.offset.end());
    for (int i = 0; i < s.d; ++i) reps[i] = L[i] / c.shape.n[i];
    for (;;) {
      numerator.add_term(e, Rat(1));
      int a = s.d - 1;
      while (a >= 0) {
        if (++r[a] < reps[a]) {
          e[a] += c.shape.n[a];
          break;
        }
        r[a] = 0;
        e[a] = c.offset[a];
        --a;
      }
      if (a < 0) break;
    }
  }
  return RationalGF{std::move(numerator), std::move(L)};
}

bool identity_check(const CosetSystem& s, std::int64_t term_budget) {
  RationalGF S = system_sum(s, term_budget);
  // Numerator exponents lie in the box by construction, so equality with
  // prod_i (1 + x_i + ... + x_i^{L_i - 1}) holds iff every coefficient is 1
  // and every box exponent occurs.
  Int volume = 1;
  for (Coord li : S.denom_exponents) volume *= li;
  if (Int(static_cast<unsigned long>(S.numerator.term_count())) != volume) return false;
  for (const auto& [e, c] : S.numerator.terms())
    if (c != 1) return false;
  return true;
}

int term_pole_order(const GenTerm& term, const RootPoint& p) {
  if (term.coset.dim() != p.dim())
    throw std::invalid_argument("term_pole_order: dimension mismatch");
  int order = 0;
  for (int i = 0; i < p.dim(); ++i)
    if (term.coset.shape.n[i] % p.coords[i].N == 0) ++order;
  return order;
}

RootPoint principal_point(const SubgroupShape& shape) {
  check_shape(shape);
  RootPoint p;
  p.coords.reserve(shape.n.size());
  for (Coord ni : shape.n) p.coords.push_back(make_root_coord(1 % ni, ni));
  return p;
}

namespace {

// Enumerates all mixed partials of total order k; returns true when one is
// nonzero at p.
bool has_nonzero_partial(const MultiPoly& N, const RootPoint& p, int k,
                         std::vector<int>& alpha, int axis, int remaining) {
  if (axis == N.dim() - 1) {
    alpha[axis] = remaining;
    return !eval_at_point(N.mixed_derivative(alpha), p).is_zero();
  }
  for (int take = 0; take <= remaining; ++take) {
    alpha[axis] = take;
    if (has_nonzero_partial(N, p, k, alpha, axis + 1, remaining - take)) return true;
  }
  return false;
}

}  // namespace

int sum_pole_order_exact(const RationalGF& S, const RootPoint& p) {
  if (S.numerator.dim() != p.dim())
    throw std::invalid_argument("sum_pole_order_exact: dimension mismatch");
  int den_order = 0;
  for (int i = 0; i < p.dim(); ++i)
    if (S.denom_exponents[i] % p.coords[i].N == 0) ++den_order;

  if (S.numerator.is_zero())
    throw std::logic_error("sum_pole_order_exact: numerator is identically zero");
  const Coord max_order = S.numerator.total_degree();
  int num_order = -1;
  std::vector<int> alpha(p.dim(), 0);
  for (Coord k = 0; k <= max_order; ++k) {
    if (has_nonzero_partial(S.numerator, p, static_cast<int>(k), alpha, 0,
                            static_cast<int>(k))) {
      num_order = static_cast<int>(k);
      break;
    }
  }
  if (num_order < 0)
    throw std::logic_error("sum_pole_order_exact: no nonzero Taylor coefficient found");
  return std::max(den_order - num_order, 0);
}

std::vector<double> probe_scales(const PoleProbeParams& pp) {
  if (!(0.0 < pp.t_min && pp.t_min < pp.t_max && pp.t_max < 1.0))
    throw std::invalid_argument("probe: need 0 < t_min < t_max < 1");
  if (pp.samples_per_decade < 1 || pp.directions < 1)
    throw std::invalid_argument("probe: samples_per_decade and directions must be positive");
  const double decades = std::log10(pp.t_max / pp.t_min);
  const int count = static_cast<int>(std::floor(pp.samples_per_decade * decades + 1e-9)) + 1;
  std::vector<double> ts(count);
  for (int k = 0; k < count; ++k)
    ts[k] = pp.t_max * std::pow(10.0, -static_cast<double>(k) / pp.samples_per_decade);
  return ts;
}

std::vector<std::complex<double>> random_unit_direction(std::mt19937_64& rng, int d) {
  // Engine-level uniforms; standard distributions are not bit-portable.
  auto u01 = [&rng] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  std::vector<std::complex<double>> v(d);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (int i = 0; i < d; ++i) {
      double r = std::sqrt(-2.0 * std::log(u01()));
      double phase = 2.0 * std::numbers::pi * u01();
      v[i] = {r * std::cos(phase), r * std::sin(phase)};
      norm2 += std::norm(v[i]);
    }
  } while (norm2 < 1e-24);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& vi : v) vi *= inv;
  return v;
}

std::complex<double> eval_gf(const RationalGF& S, const std::vector<std::complex<double>>& x) {
  std::complex<double> den(1.0, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    den *= 1.0 - cpow(x[i], S.denom_exponents[i]);
  return S.numerator.eval(x) / den;
}

std::complex<double> eval_term(const GenTerm& term, const std::vector<std::complex<double>>& x) {
  std::complex<double> num(1.0, 0.0), den(1.0, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    num *= cpow(x[i], term.coset.offset[i]);
    den *= 1.0 - cpow(x[i], term.coset.shape.n[i]);
  }
  return num / den;
}

namespace {

double fit_slope(const std::vector<double>& u, const std::vector<double>& y) {
  const double n = static_cast<double>(u.size());
  double su = 0, sy = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    su += u[i];
    sy += y[i];
  }
  const double mu = su / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    sxx += (u[i] - mu) * (u[i] - mu);
    sxy += (u[i] - mu) * (y[i] - my);
  }
  return sxy / sxx;
}

}  // namespace

std::optional<double> numeric_pole_order(const CosetSystem& system, const RootPoint& p,
                                         const PoleProbeParams& params) {
  if (system.d != p.dim())
    throw std::invalid_argument("numeric_pole_order: dimension mismatch");
  const RationalGF S = system_sum(system);
  const std::vector<double> ts = probe_scales(params);
  const std::vector<std::complex<double>> center = to_complex(p);

  std::mt19937_64 rng(params.seed);
  std::vector<double> slopes;
  slopes.reserve(params.directions);
  std::vector<std::complex<double>> x(system.d);
  std::vector<double> us(ts.size()), ys(ts.size());
  for (int dir = 0; dir < params.directions; ++dir) {
    const auto v = random_unit_direction(rng, system.d);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      for (int i = 0; i < system.d; ++i) x[i] = center[i] + ts[k] * v[i];
      const double a = std::abs(eval_gf(S, x));
      if (!std::isfinite(a) || a <= 0.0) return std::nullopt;  // estimate failure
      us[k] = std::log(1.0 / ts[k]);
      ys[k] = std::log(a);
    }
    slopes.push_back(fit_slope(us, ys));
  }
  std::sort(slopes.begin(), slopes.end());
  const std::size_t mid = slopes.size() / 2;
  if (slopes.size() % 2 == 1) return slopes[mid];
  return 0.5 * (slopes[mid - 1] + slopes[mid]);
}

PoleReport analyze_pole(const CosetSystem& system, const RootPoint& p, bool numeric,
                        const PoleProbeParams& params, std::int64_t term_budget) {
  PoleReport rep;
  rep.point = p;
  rep.params = params;
  const RationalGF S = system_sum(system, term_budget);
  rep.exact_order = sum_pole_order_exact(S, p);
  for (std::size_t j = 0; j < system.cosets.size(); ++j)
    rep.per_term_orders.emplace_back(j, term_pole_order(term_from_coset(system.cosets[j]), p));
  if (numeric) {
    rep.numeric_requested = true;
    rep.numeric_estimate = numeric_pole_order(system, p, params);
  }
  return rep;
}

}  // namespace tiling
