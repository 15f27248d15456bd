#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace hopf {

enum class SignConstraint { Any, NonNegative, Negative, NonPositive };

const char* to_string(SignConstraint s);

// Principal complex logarithm ln|z| + i arg z. z must be nonzero.
std::complex<double> complex_log(std::complex<double> z);

// Reduce an angle to (-pi, pi] by the nearest whole winding.
double wrap_angle(double theta);

// True when exp(w) = 1 up to tol in log-modulus and in argument mod 2*pi.
bool log_is_unit(std::complex<double> w, double tol);

// Exhaustive search for an integer vector m with
//     exp(target) = prod_i exp(gens[i])^{m_i}
// i.e. target - sum m_i gens[i] in 2*pi*i*Z up to tol, subject to the sign
// constraint and |m|_inf <= bound. Among all solutions the one with minimal
// infinity norm is returned, ties broken lexicographically. With exclude_zero
// the zero vector is not an admissible answer.
//
// The last coordinate is solved from the real parts instead of enumerated, so
// the cost is (2*bound+1)^(n-1) evaluations.
std::optional<std::vector<int>> search_exponents(std::complex<double> target,
                                                 std::span<const std::complex<double>> gens,
                                                 SignConstraint sign, int bound, double tol,
                                                 bool exclude_zero = false);

bool satisfies(SignConstraint sign, std::span<const int> m);

}  // namespace hopf
