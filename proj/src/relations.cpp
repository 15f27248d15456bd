#include "hopf/relations.hpp"

#include <numeric>

#include "hopf/error.hpp"

namespace hopf {

namespace {

void check_n(const Factor& a, const HopfManifold& X) {
  if (a.n() != X.n())
    throw DomainError("factor has " + std::to_string(a.n()) + " exponents but n = " +
                      std::to_string(X.n()));
}

}  // namespace

std::optional<std::vector<int>> detect_monomial(const Factor& a, const HopfManifold& X,
                                                SignConstraint sign, int exp_bound, double tol) {
  check_n(a, X);
  if (a.is_pure_monomial() && X.is_generic()) {
    if (satisfies(sign, a.exponents)) return a.exponents;
    return std::nullopt;
  }
  return search_exponents(a.log_value(X.mu()), X.log_mu(), sign, exp_bound, tol);
}

std::optional<int> detect_classical_power(const Factor& a, const HopfManifold& X, int exp_bound,
                                          double tol) {
  check_n(a, X);
  if (!X.is_classical()) throw UnsupportedKind("classical power requested on a non-classical manifold");
  const int total = std::accumulate(a.exponents.begin(), a.exponents.end(), 0);
  if (a.is_pure_monomial()) return total;
  // All multipliers coincide, so only the scalar needs recognising.
  const std::complex<double> gen = X.log_mu()[0];
  const auto d = search_exponents(complex_log(a.scalar), std::span(&gen, 1), SignConstraint::Any,
                                  exp_bound, tol);
  if (!d) return std::nullopt;
  return total + (*d)[0];
}

Factor normalized(const Factor& a, const HopfManifold& X, const Config& cfg) {
  check_n(a, X);
  if (a.is_pure_monomial()) return a;
  const auto d = search_exponents(complex_log(a.scalar), X.log_mu(), SignConstraint::Any,
                                  cfg.exp_bound, cfg.tol);
  if (!d) return a;
  Factor out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += (*d)[i];
  out.scalar = 1.0;
  return out;
}

bool same_element(const Factor& a, const Factor& b, const HopfManifold& X, double tol) {
  check_n(a, X);
  check_n(b, X);
  return log_is_unit(a.log_value(X.mu()) - b.log_value(X.mu()), tol);
}

}  // namespace hopf
