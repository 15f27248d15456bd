#include "hopf/picard.hpp"

#include <string>

#include "hopf/elliptic.hpp"
#include "hopf/error.hpp"
#include "hopf/lattice_search.hpp"
#include "hopf/relations.hpp"

namespace hopf {

LineBundle::LineBundle(Factor a_, HopfManifold X_) : a(std::move(a_)), X(std::move(X_)) {
  if (a.n() != X.n()) throw DomainError("factor length does not match the manifold dimension");
}

double degree(const Factor& a, const HopfManifold& X) {
  if (a.n() != X.n()) throw DomainError("factor length does not match the manifold dimension");
  if (X.is_classical()) {
    // Exact on the symbolic part: every mu_i is mu up to tol.
    double total = 0.0;
    for (int e : a.exponents) total += e;
    return total + complex_log(a.scalar).real() / X.log_mu()[0].real();
  }
  return -a.log_modulus(X.mu());
}

double degree(const LineBundle& L) { return degree(L.a, L.X); }

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<__int128>(INT64_MAX)) throw DomainError("binomial coefficient overflows");
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace

std::int64_t bott_dimension(int N, int m, int p) {
  if (N < 1) throw DomainError("projective space dimension must be >= 1");
  if (p < 0 || p > N) throw DomainError("cohomological degree p must lie in [0, N]");
  if (p == 0 && m >= 0) return binomial(static_cast<std::int64_t>(N) + m, N);
  if (p == N && m <= -N - 1) return binomial(-static_cast<std::int64_t>(m) - 1, N);
  return 0;
}

CohomologyVector cohomology_dims(const LineBundle& L, const Config& cfg) {
  const HopfManifold& X = L.X;
  const int n = X.n();
  CohomologyVector out{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};

  if (X.is_classical()) {
    const int N = cfg.classical_base_dim.value_or(n - 1);
    if (N < 1 || N > n) throw DomainError("classical base dimension must lie in [1, n]");
    const auto m = detect_classical_power(L.a, X, cfg.exp_bound, cfg.tol);
    if (!m) return out;
    for (int p = 0; p <= N; ++p) {
      const auto h = bott_dimension(N, *m, p);
      if (h > INT32_MAX) throw DomainError("cohomology dimension overflows");
      out.h[static_cast<std::size_t>(p)] = static_cast<int>(h);
    }
    return out;
  }

  if (!X.is_generic())
    throw UnsupportedKind(std::string("no line bundle cohomology table for ") + to_string(X.kind()) +
                          " manifolds");

  const bool effective = detect_monomial(L.a, X, SignConstraint::NonNegative, cfg).has_value();
  const bool anti = detect_monomial(L.a, X, SignConstraint::Negative, cfg).has_value();
  if (n == 2) {
    out.h[0] = effective ? 1 : 0;
    out.h[2] = anti ? 1 : 0;
    out.h[1] = out.h[0] + out.h[2];
  } else {
    out.h[0] = out.h[1] = effective ? 1 : 0;
    out.h[static_cast<std::size_t>(n - 1)] = out.h[static_cast<std::size_t>(n)] = anti ? 1 : 0;
  }
  return out;
}

bool CurveClass::trivial(double tol) const { return same_class(residual, 1.0, q, tol); }

CurveClass restrict_to_curve(const LineBundle& L, int i) {
  if (i < 1 || i > L.X.n())
    throw DomainError("curve index " + std::to_string(i) + " out of range [1, " +
                      std::to_string(L.X.n()) + "]");
  CurveClass c;
  c.curve = i;
  c.remaining = L.a;
  c.remaining.exponents[static_cast<std::size_t>(i - 1)] = 0;
  c.q = L.X.mu(i);
  c.residual = reduce_to_annulus(c.remaining.value(L.X.mu()), c.q);
  return c;
}

}  // namespace hopf
