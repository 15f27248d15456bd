#include "hopf/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hopf/error.hpp"
#include "hopf/lattice_search.hpp"

namespace hopf {

const char* to_string(ManifoldKind k) {
  switch (k) {
    case ManifoldKind::Classical: return "classical";
    case ManifoldKind::Generic: return "generic";
    case ManifoldKind::Resonant: return "resonant";
    case ManifoldKind::Hyperresonant: return "hyperresonant";
    case ManifoldKind::Other: return "other";
  }
  return "other";
}

ManifoldKind manifold_kind_from_string(const std::string& s) {
  for (auto k : {ManifoldKind::Classical, ManifoldKind::Generic, ManifoldKind::Resonant,
                 ManifoldKind::Hyperresonant, ManifoldKind::Other})
    if (s == to_string(k)) return k;
  throw ParseError("unknown manifold kind '" + s + "'");
}

namespace {

void validate_diagonal(std::span<const std::complex<double>> mu) {
  if (mu.size() < 2) throw DomainError("a Hopf manifold needs n >= 2 multipliers");
  double prev = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double r = std::abs(mu[i]);
    if (!std::isfinite(r) || !(r > 0.0) || !(r < 1.0))
      throw DomainError("multiplier mu_" + std::to_string(i + 1) +
                        " must satisfy 0 < |mu| < 1");
    if (r < prev)
      throw DomainError("multipliers must be ordered by modulus: |mu_" + std::to_string(i) +
                        "| > |mu_" + std::to_string(i + 1) + "|");
    prev = r;
  }
}

std::vector<std::complex<double>> logs_of(std::span<const std::complex<double>> mu) {
  std::vector<std::complex<double>> out;
  out.reserve(mu.size());
  for (auto z : mu) out.push_back(complex_log(z));
  return out;
}

bool all_equal(std::span<const std::complex<double>> logs, double tol) {
  for (std::size_t i = 1; i < logs.size(); ++i)
    if (!log_is_unit(logs[i] - logs[0], tol)) return false;
  return true;
}

std::optional<Resonance> resonance_from_logs(std::span<const std::complex<double>> logs,
                                             int exp_bound, double tol) {
  // Enumerate shells of growing max(p, q) so the first hit is the answer.
  for (int s = 1; s <= exp_bound; ++s) {
    for (int p = 1; p <= s; ++p) {
      for (int q = 1; q <= s; ++q) {
        if (std::max(p, q) != s) continue;
        if (log_is_unit(static_cast<double>(p) * logs[0] - static_cast<double>(q) * logs[1], tol))
          return Resonance{p, q};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Resonance> detect_resonance(std::span<const std::complex<double>> mu, int exp_bound,
                                          double tol) {
  if (mu.size() != 2) throw DomainError("resonance is only defined for surfaces (n = 2)");
  validate_diagonal(mu);
  const auto logs = logs_of(mu);
  return resonance_from_logs(logs, exp_bound, tol);
}

ManifoldKind classify_manifold(std::span<const std::complex<double>> mu, int exp_bound,
                               double tol) {
  validate_diagonal(mu);
  const auto logs = logs_of(mu);
  if (all_equal(logs, tol)) return ManifoldKind::Classical;
  if (mu.size() == 2) {
    const auto res = resonance_from_logs(logs, exp_bound, tol);
    if (!res) return ManifoldKind::Generic;
    return res->p == 1 ? ManifoldKind::Resonant : ManifoldKind::Hyperresonant;
  }
  const auto rel = search_exponents({0.0, 0.0}, logs, SignConstraint::Any, exp_bound, tol,
                                    /*exclude_zero=*/true);
  return rel ? ManifoldKind::Other : ManifoldKind::Generic;
}

HopfManifold::HopfManifold(std::vector<std::complex<double>> mu, int exp_bound, double tol)
    : mu_(std::move(mu)) {
  kind_ = classify_manifold(mu_, exp_bound, tol);
  log_mu_ = logs_of(mu_);
  if (mu_.size() == 2 && kind_ != ManifoldKind::Classical && kind_ != ManifoldKind::Generic)
    resonance_ = resonance_from_logs(log_mu_, exp_bound, tol);
}

HopfManifold HopfManifold::from_moduli(std::initializer_list<double> moduli, int exp_bound,
                                       double tol) {
  std::vector<std::complex<double>> mu(moduli.begin(), moduli.end());
  return HopfManifold(std::move(mu), exp_bound, tol);
}

Divisor Divisor::hypersurface(int n, int i) {
  if (i < 1 || i > n) throw DomainError("hypersurface index out of range");
  Divisor d{std::vector<int>(static_cast<std::size_t>(n), 0)};
  d.coeffs[static_cast<std::size_t>(i - 1)] = 1;
  return d;
}

Divisor Divisor::operator+(const Divisor& o) const {
  if (o.coeffs.size() != coeffs.size()) throw DomainError("divisors over different n");
  Divisor out = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += o.coeffs[i];
  return out;
}

Divisor Divisor::operator-() const {
  Divisor out = *this;
  for (int& c : out.coeffs) c = -c;
  return out;
}

int intersection(const Divisor& a, const Divisor& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw DomainError("divisors over different n");
  return 0;
}

Divisor canonical_divisor(const HopfManifold& X) {
  return Divisor{std::vector<int>(static_cast<std::size_t>(X.n()), -1)};
}

Factor divisor_to_line_bundle(const HopfManifold& X, const Divisor& D) {
  if (static_cast<int>(D.coeffs.size()) != X.n())
    throw DomainError("divisor length does not match n");
  return Factor::monomial(D.coeffs);
}

Divisor curve_divisor(const HopfManifold& X, int i) {
  if (X.n() != 2) throw DomainError("curve divisors are only hypersurfaces when n = 2");
  if (i != 1 && i != 2) throw DomainError("curve index must be 1 or 2");
  return Divisor::hypersurface(2, 3 - i);
}

}  // namespace hopf
