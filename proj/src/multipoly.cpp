#include "tiling/multipoly.hpp"

#include <stdexcept>

namespace tiling {

std::complex<double> cpow(std::complex<double> base, std::int64_t exp) {
  std::complex<double> acc(1.0, 0.0);
  while (exp > 0) {
    if (exp & 1) acc *= base;
    base *= base;
    exp >>= 1;
  }
  return acc;
}

MultiPoly::MultiPoly(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("MultiPoly: dimension must be at least 1");
}

MultiPoly MultiPoly::monomial(ExpVec e, Rat c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const ExpVec& e, const Rat& c) {
  if (static_cast<int>(e.size()) != dim_)
    throw std::invalid_argument("MultiPoly: exponent dimension mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat MultiPoly::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Coord MultiPoly::total_degree() const {
  Coord deg = 0;
  for (const auto& [e, c] : terms_) {
    Coord t = 0;
    for (Coord ei : e) t += ei;
    if (t > deg) deg = t;
  }
  return deg;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("MultiPoly: dimension mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  MultiPoly out = *this;
  out += rhs;
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("MultiPoly: dimension mismatch");
  MultiPoly out(dim_);
  ExpVec e(dim_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < dim_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::mixed_derivative(const std::vector<int>& alpha) const {
  if (static_cast<int>(alpha.size()) != dim_)
    throw std::invalid_argument("MultiPoly: derivative order dimension mismatch");
  MultiPoly out(dim_);
  ExpVec e(dim_);
  for (const auto& [exp, coef] : terms_) {
    Int factor = 1;
    bool alive = true;
    for (int i = 0; i < dim_ && alive; ++i) {
      if (exp[i] < alpha[i]) {
        alive = false;
        break;
      }
      // falling factorial exp_i (exp_i - 1) ... (exp_i - alpha_i + 1)
      for (int t = 0; t < alpha[i]; ++t) factor *= Int(exp[i] - t);
      e[i] = exp[i] - alpha[i];
    }
    if (alive) out.add_term(e, coef * factor);
  }
  return out;
}

std::complex<double> MultiPoly::eval(const std::vector<std::complex<double>>& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("MultiPoly: evaluation point dimension mismatch");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    std::complex<double> term(c.get_d(), 0.0);
    for (int i = 0; i < dim_; ++i) term *= cpow(x[i], e[i]);
    acc += term;
  }
  return acc;
}

}  // namespace tiling
