#pragma once

#include <optional>
#include <vector>

#include "hopf/config.hpp"
#include "hopf/factor.hpp"
#include "hopf/lattice_search.hpp"
#include "hopf/manifold.hpp"

namespace hopf {

// Find m with a = prod mu_i^{m_i} satisfying the sign constraint.
//
// On a generic manifold a pure monomial has a unique representation, so the
// answer is read off its exponents with no tolerance and no bound. Every
// other case runs the bounded search (|m|_inf <= exp_bound, log comparison at
// tol), returning the minimal-norm, then lexicographically first, solution.
std::optional<std::vector<int>> detect_monomial(const Factor& a, const HopfManifold& X,
                                                SignConstraint sign, int exp_bound = 32,
                                                double tol = 1e-9);

inline std::optional<std::vector<int>> detect_monomial(const Factor& a, const HopfManifold& X,
                                                       SignConstraint sign, const Config& cfg) {
  return detect_monomial(a, X, sign, cfg.exp_bound, cfg.tol);
}

// Classical variant: the single exponent m with a = mu^m.
std::optional<int> detect_classical_power(const Factor& a, const HopfManifold& X,
                                          int exp_bound = 32, double tol = 1e-9);

// Fold a numerically recognised monomial scalar into the exponents.
Factor normalized(const Factor& a, const HopfManifold& X, const Config& cfg = {});

// Numeric equality of the two elements of C*.
bool same_element(const Factor& a, const Factor& b, const HopfManifold& X, double tol = 1e-9);

}  // namespace hopf
