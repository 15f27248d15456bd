#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hopf {

// Element of C* written as scalar * prod_i mu_i^{exponents[i]}. The symbolic
// exponents keep statements about integer relations exact; the scalar carries
// whatever is not (yet) recognised as a monomial. A factor with scalar exactly
// 1 is a pure monomial.
struct Factor {
  std::vector<int> exponents;
  std::complex<double> scalar{1.0, 0.0};

  Factor() = default;
  Factor(std::vector<int> exps, std::complex<double> s = {1.0, 0.0});

  static Factor identity(int n);
  static Factor monomial(std::vector<int> exps) { return Factor(std::move(exps)); }
  static Factor constant(int n, std::complex<double> s);

  int n() const { return static_cast<int>(exponents.size()); }
  bool is_pure_monomial() const { return scalar == std::complex<double>(1.0, 0.0); }
  bool is_identity() const;

  // ln|a| + i arg a on the branch fixed by the principal logs of mu.
  std::complex<double> log_value(std::span<const std::complex<double>> mu) const;
  double log_modulus(std::span<const std::complex<double>> mu) const;
  std::complex<double> value(std::span<const std::complex<double>> mu) const;

  friend bool operator==(const Factor&, const Factor&) = default;
};

enum class FactorOp { Mul, Div, Pow };

// Group law of Pic(X) = C*. k is only read for FactorOp::Pow.
Factor combine(const Factor& f, const Factor& g, FactorOp op, int k = 1);

Factor operator*(const Factor& f, const Factor& g);
Factor operator/(const Factor& f, const Factor& g);
Factor pow(const Factor& f, int k);
Factor inverse(const Factor& f);

}  // namespace hopf
