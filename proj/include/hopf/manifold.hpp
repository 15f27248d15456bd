#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopf/config.hpp"
#include "hopf/factor.hpp"

namespace hopf {

enum class ManifoldKind { Classical, Generic, Resonant, Hyperresonant, Other };

const char* to_string(ManifoldKind k);
ManifoldKind manifold_kind_from_string(const std::string& s);

// Exponent pair (p, q) with mu_1^p = mu_2^q.
struct Resonance {
  int p = 0;
  int q = 0;
  friend bool operator==(const Resonance&, const Resonance&) = default;
};

// Classify a contraction diagonal. Classicality is decided first; for n = 2
// the resonance search distinguishes Resonant (p = 1) from Hyperresonant, and
// for n >= 3 any non-classical relation gives Other. Generic means no
// relation with exponents up to exp_bound, nothing stronger.
ManifoldKind classify_manifold(std::span<const std::complex<double>> mu, int exp_bound = 32,
                               double tol = 1e-9);

// Smallest positive (p, q), ordered by max(p, q) then lexicographically, with
// mu_1^p = mu_2^q. n must be 2.
std::optional<Resonance> detect_resonance(std::span<const std::complex<double>> mu,
                                          int exp_bound = 32, double tol = 1e-9);

// Diagonal Hopf manifold C^n_* / (mu_1, ..., mu_n). Immutable; the kind is
// computed on construction.
class HopfManifold {
 public:
  // Validates 0 < |mu_1| <= ... <= |mu_n| < 1 and n >= 2, then classifies.
  explicit HopfManifold(std::vector<std::complex<double>> mu, int exp_bound = 32,
                        double tol = 1e-9);
  HopfManifold(std::vector<std::complex<double>> mu, const Config& cfg)
      : HopfManifold(std::move(mu), cfg.exp_bound, cfg.tol) {}

  // Real positive diagonal, convenient in tests and examples.
  static HopfManifold from_moduli(std::initializer_list<double> moduli, int exp_bound = 32,
                                  double tol = 1e-9);

  int n() const { return static_cast<int>(mu_.size()); }
  std::span<const std::complex<double>> mu() const { return mu_; }
  std::complex<double> mu(int i) const { return mu_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const std::complex<double>> log_mu() const { return log_mu_; }
  ManifoldKind kind() const { return kind_; }
  std::optional<Resonance> resonance() const { return resonance_; }

  bool is_surface() const { return n() == 2; }
  bool is_generic() const { return kind_ == ManifoldKind::Generic; }
  bool is_classical() const { return kind_ == ManifoldKind::Classical; }

  friend bool operator==(const HopfManifold& a, const HopfManifold& b) {
    return a.mu_ == b.mu_ && a.kind_ == b.kind_;
  }

 private:
  std::vector<std::complex<double>> mu_;
  std::vector<std::complex<double>> log_mu_;
  ManifoldKind kind_;
  std::optional<Resonance> resonance_;
};

// Divisor m_1 H_1 + ... + m_n H_n; H_i . H_j = 0.
struct Divisor {
  std::vector<int> coeffs;

  static Divisor hypersurface(int n, int i);
  Divisor operator+(const Divisor& o) const;
  Divisor operator-() const;
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

int intersection(const Divisor& a, const Divisor& b);

// K_X = -H_1 - ... - H_n.
Divisor canonical_divisor(const HopfManifold& X);

// O_X(sum m_i H_i) = L_{prod mu_i^{m_i}}.
Factor divisor_to_line_bundle(const HopfManifold& X, const Divisor& D);

// On a surface the axis curves are hypersurfaces: T_1 = {z_2 = 0} = H_2 and
// T_2 = H_1. Requires n = 2, i in {1, 2}.
Divisor curve_divisor(const HopfManifold& X, int i);

}  // namespace hopf
