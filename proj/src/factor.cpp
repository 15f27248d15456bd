#include "hopf/factor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hopf/error.hpp"
#include "hopf/lattice_search.hpp"

namespace hopf {

namespace {

std::complex<double> ipow(std::complex<double> z, int k) {
  if (k < 0) return 1.0 / ipow(z, -k);
  std::complex<double> acc{1.0, 0.0};
  while (k > 0) {
    if (k & 1) acc *= z;
    z *= z;
    k >>= 1;
  }
  return acc;
}

}  // namespace

Factor::Factor(std::vector<int> exps, std::complex<double> s)
    : exponents(std::move(exps)), scalar(s) {
  if (scalar == std::complex<double>(0.0, 0.0)) throw DomainError("factor scalar must be nonzero");
  if (!std::isfinite(scalar.real()) || !std::isfinite(scalar.imag()))
    throw DomainError("factor scalar must be finite");
}

Factor Factor::identity(int n) { return Factor(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Factor Factor::constant(int n, std::complex<double> s) {
  return Factor(std::vector<int>(static_cast<std::size_t>(n), 0), s);
}

bool Factor::is_identity() const {
  return is_pure_monomial() &&
         std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

std::complex<double> Factor::log_value(std::span<const std::complex<double>> mu) const {
  if (mu.size() != exponents.size())
    throw DomainError("factor has " + std::to_string(exponents.size()) +
                      " exponents but the manifold has n = " + std::to_string(mu.size()));
  std::complex<double> w = complex_log(scalar);
  for (std::size_t i = 0; i < mu.size(); ++i)
    w += static_cast<double>(exponents[i]) * complex_log(mu[i]);
  return w;
}

double Factor::log_modulus(std::span<const std::complex<double>> mu) const {
  return log_value(mu).real();
}

std::complex<double> Factor::value(std::span<const std::complex<double>> mu) const {
  return std::exp(log_value(mu));
}

Factor combine(const Factor& f, const Factor& g, FactorOp op, int k) {
  if (op != FactorOp::Pow && f.n() != g.n())
    throw DomainError("cannot combine factors over n = " + std::to_string(f.n()) + " and n = " +
                      std::to_string(g.n()));
  Factor out = f;
  switch (op) {
    case FactorOp::Mul:
      for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += g.exponents[i];
      out.scalar *= g.scalar;
      break;
    case FactorOp::Div:
      for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] -= g.exponents[i];
      out.scalar /= g.scalar;
      break;
    case FactorOp::Pow:
      for (int& e : out.exponents) e *= k;
      // Integer powers of 1 stay exactly 1 so pure monomials remain pure.
      if (!f.is_pure_monomial()) out.scalar = ipow(f.scalar, k);
      break;
  }
  if (f.is_pure_monomial() && g.is_pure_monomial() && op != FactorOp::Pow) out.scalar = 1.0;
  return out;
}

Factor operator*(const Factor& f, const Factor& g) { return combine(f, g, FactorOp::Mul); }
Factor operator/(const Factor& f, const Factor& g) { return combine(f, g, FactorOp::Div); }
Factor pow(const Factor& f, int k) { return combine(f, f, FactorOp::Pow, k); }
Factor inverse(const Factor& f) { return pow(f, -1); }

}  // namespace hopf
