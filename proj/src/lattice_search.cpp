#include "hopf/lattice_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hopf/error.hpp"

namespace hopf {

const char* to_string(SignConstraint s) {
  switch (s) {
    case SignConstraint::Any: return "any";
    case SignConstraint::NonNegative: return "all_nonneg";
    case SignConstraint::Negative: return "all_neg";
    case SignConstraint::NonPositive: return "all_nonpos";
  }
  return "any";
}

std::complex<double> complex_log(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) throw DomainError("logarithm of zero");
  return {std::log(std::abs(z)), std::arg(z)};
}

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return theta - two_pi * std::nearbyint(theta / two_pi);
}

bool log_is_unit(std::complex<double> w, double tol) {
  return std::abs(w.real()) <= tol && std::abs(wrap_angle(w.imag())) <= tol;
}

bool satisfies(SignConstraint sign, std::span<const int> m) {
  switch (sign) {
    case SignConstraint::Any: return true;
    case SignConstraint::NonNegative:
      return std::all_of(m.begin(), m.end(), [](int v) { return v >= 0; });
    case SignConstraint::Negative:
      return std::all_of(m.begin(), m.end(), [](int v) { return v < 0; });
    case SignConstraint::NonPositive:
      return std::all_of(m.begin(), m.end(), [](int v) { return v <= 0; });
  }
  return false;
}

namespace {

struct Range {
  int lo;
  int hi;
};

Range range_for(SignConstraint sign, int bound) {
  switch (sign) {
    case SignConstraint::Any: return {-bound, bound};
    case SignConstraint::NonNegative: return {0, bound};
    case SignConstraint::Negative: return {-bound, -1};
    case SignConstraint::NonPositive: return {-bound, 0};
  }
  return {-bound, bound};
}

int inf_norm(const std::vector<int>& m) {
  int r = 0;
  for (int v : m) r = std::max(r, std::abs(v));
  return r;
}

bool better(const std::vector<int>& a, const std::vector<int>& b) {
  const int na = inf_norm(a), nb = inf_norm(b);
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace

std::optional<std::vector<int>> search_exponents(std::complex<double> target,
                                                 std::span<const std::complex<double>> gens,
                                                 SignConstraint sign, int bound, double tol,
                                                 bool exclude_zero) {
  const std::size_t n = gens.size();
  if (n == 0) throw DomainError("search_exponents: no generators");
  if (bound < 0) throw DomainError("search_exponents: negative bound");
  const Range r = range_for(sign, bound);
  if (r.lo > r.hi) return std::nullopt;

  std::optional<std::vector<int>> best;
  std::vector<int> m(n, r.lo);
  const std::complex<double> last = gens[n - 1];

  auto consider = [&](const std::vector<int>& cand) {
    if (exclude_zero && std::all_of(cand.begin(), cand.end(), [](int v) { return v == 0; }))
      return;
    std::complex<double> residual = target;
    for (std::size_t i = 0; i < n; ++i) residual -= static_cast<double>(cand[i]) * gens[i];
    if (!log_is_unit(residual, tol)) return;
    if (!best || better(cand, *best)) best = cand;
  };

  // Odometer over the first n-1 coordinates.
  while (true) {
    std::complex<double> partial = target;
    for (std::size_t i = 0; i + 1 < n; ++i) partial -= static_cast<double>(m[i]) * gens[i];

    if (std::abs(last.real()) > 4.0 * tol) {
      const double x = partial.real() / last.real();
      if (std::isfinite(x)) {
        const long centre = std::lround(x);
        for (long c = centre - 1; c <= centre + 1; ++c) {
          if (c < r.lo || c > r.hi) continue;
          m[n - 1] = static_cast<int>(c);
          consider(m);
        }
      }
    } else {
      for (int c = r.lo; c <= r.hi; ++c) {
        m[n - 1] = c;
        consider(m);
      }
    }

    std::size_t i = 0;
    for (; i + 1 < n; ++i) {
      if (m[i] < r.hi) {
        ++m[i];
        break;
      }
      m[i] = r.lo;
    }
    if (i + 1 >= n) break;
  }
  return best;
}

}  // namespace hopf
