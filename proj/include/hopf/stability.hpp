#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopf/config.hpp"
#include "hopf/factor.hpp"
#include "hopf/manifold.hpp"
#include "hopf/rank2.hpp"

namespace hopf {

double slope(double deg, int rank);

enum class AnnulusPosition { Inside, Boundary, Outside };

// Open annulus r_lo < |alpha| < r_hi.
struct Annulus {
  double r_lo = 0.0;
  double r_hi = 0.0;

  bool empty() const { return !(r_lo < r_hi); }
  // Strict membership compared in log-modulus; within tol of an edge counts
  // as Boundary.
  AnnulusPosition locate(double modulus, double tol = 1e-9) const;
  bool contains(double modulus, double tol = 1e-9) const {
    return locate(modulus, tol) == AnnulusPosition::Inside;
  }
};

// D_{l_1,...,l_n} = { |delta|^{1/2} < |alpha| < |delta|^{1/2} prod |mu_i|^{-l_i} }.
// On a classical surface this is D_l with l = l_1 + l_2.
Annulus d_domain(const Factor& delta, std::span<const int> lengths, const HopfManifold& X);

struct StabilityVerdict {
  enum class Status { Stable, Unstable, Indeterminate };
  Status status = Status::Unstable;
  // "condition-a", "annulus", "boundary", "destabilized", "extension",
  // "inequality" or "audit".
  std::string branch;
  bool boundary = false;
  std::optional<std::vector<int>> k;  // condition (a) witness
  std::optional<Factor> destabilizer;
  double destabilizer_degree = 0.0;
  double half_det_degree = 0.0;
  Annulus domain;

  bool stable() const { return status == Status::Stable; }
};

const char* to_string(StabilityVerdict::Status s);

// Stability of a filtrable rank-2 bundle on a generic or classical surface.
// E.sub must be a maximal-degree line subbundle (see audit_maximal_sub).
StabilityVerdict is_stable_filtrable_surface(const FiltrableRank2& E, const Config& cfg = {});

// Looks for a line bundle mapping into E with larger degree than E.sub, among
// b mu^{-k} (b = det/sub after removing jumps) whose quotient is torsion free.
std::optional<Factor> audit_maximal_sub(const FiltrableRank2& E, const Config& cfg = {});

// is_stable_filtrable_surface, demoted to Indeterminate when the audit fails.
StabilityVerdict is_stable_filtrable_surface_audited(const FiltrableRank2& E,
                                                     const Config& cfg = {});

// Generic n >= 3: extensions of line bundles are unstable; an ideal extension
// is stable iff prod_{l != i,j} |mu_l|^{m_l} > |mu_i|^{k_i} |mu_j|^{k_j}.
StabilityVerdict is_stable_higher(const HigherExtensionType& t, const HopfManifold& X,
                                  const Config& cfg = {});

struct Parametrization {
  std::string base;  // e.g. "D_{1,0} x Pic^1(T_1)"
  int annulus_dim = 0;
  int picard_degree = 0;
  int picard_dim = 0;
  int projection_space_dim = 0;
  std::string note;

  int dimension() const { return annulus_dim + picard_dim + projection_space_dim; }
};

struct ModuliDescriptor {
  std::optional<Factor> delta;
  int c2 = 0;
  int dim = 0;
  bool nonempty = false;
  Parametrization parametrization;
};

// M_{delta,c2}: non-empty iff c2 > 0, of dimension 4 c2.
ModuliDescriptor moduli_dimension(const std::optional<Factor>& delta, int c2);

struct C2OneParameters {
  Annulus domain;  // D_{1,0}
  Parametrization parametrization;
  std::optional<std::vector<int>> exceptional;  // (m_1 - 1, m_2) when the projection is a P^1
};

// Stable filtrable bundles with c2 = 1 and a jump on T_1: triples (a, lambda, p).
C2OneParameters c2one_parameters(const Factor& a, const Factor& delta, const HopfManifold& X,
                                 const Config& cfg = {});

// Monopoles of mass m and charge k: M(m, k) has dimension 2k.
ModuliDescriptor monopole_parameters(int mass, int charge);

}  // namespace hopf
