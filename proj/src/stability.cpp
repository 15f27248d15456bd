#include "hopf/stability.hpp"

#include <cmath>
#include <string>

#include "hopf/error.hpp"
#include "hopf/picard.hpp"
#include "hopf/relations.hpp"

namespace hopf {

double slope(double deg, int rank) {
  if (rank < 1) throw DomainError("slope needs rank >= 1");
  return deg / rank;
}

AnnulusPosition Annulus::locate(double modulus, double tol) const {
  if (!(modulus > 0.0)) return AnnulusPosition::Outside;
  const double x = std::log(modulus);
  const double lo = std::log(r_lo), hi = std::log(r_hi);
  if (std::abs(x - lo) <= tol || std::abs(x - hi) <= tol) return AnnulusPosition::Boundary;
  return (x > lo && x < hi) ? AnnulusPosition::Inside : AnnulusPosition::Outside;
}

Annulus d_domain(const Factor& delta, std::span<const int> lengths, const HopfManifold& X) {
  if (delta.n() != X.n()) throw DomainError("determinant factor length does not match n");
  for (int l : lengths)
    if (l < 0) throw DomainError("jump lengths must be non-negative");
  const double half = 0.5 * delta.log_modulus(X.mu());
  double hi = half;
  if (lengths.size() == 1 && X.is_classical()) {
    hi -= lengths[0] * X.log_mu()[0].real();
  } else {
    if (static_cast<int>(lengths.size()) != X.n())
      throw DomainError("need one jump length per curve");
    for (std::size_t i = 0; i < lengths.size(); ++i) hi -= lengths[i] * X.log_mu()[i].real();
  }
  return Annulus{std::exp(half), std::exp(hi)};
}

const char* to_string(StabilityVerdict::Status s) {
  switch (s) {
    case StabilityVerdict::Status::Stable: return "stable";
    case StabilityVerdict::Status::Unstable: return "unstable";
    case StabilityVerdict::Status::Indeterminate: return "indeterminate";
  }
  return "unstable";
}

namespace {

// b = det / sub after every jump has been removed (theorem bookkeeping).
Factor jump_free_quotient(const FiltrableRank2& E) {
  std::vector<int> shift(2, 0);
  shift[0] = -E.total_length(1);
  shift[1] = -E.total_length(2);
  return E.det * Factor::monomial(shift) / E.sub;
}

StabilityVerdict annulus_verdict(const Factor& a, const Factor& b, const Annulus& D,
                                 double half_det, const HopfManifold& X, double tol) {
  StabilityVerdict v;
  v.domain = D;
  v.half_det_degree = half_det;
  const double abs_a = std::exp(a.log_modulus(X.mu()));
  const auto pos = D.locate(abs_a, tol);
  if (pos == AnnulusPosition::Inside) {
    v.status = StabilityVerdict::Status::Stable;
    v.branch = "annulus";
    return v;
  }
  v.status = StabilityVerdict::Status::Unstable;
  v.branch = pos == AnnulusPosition::Boundary ? "boundary" : "destabilized";
  v.boundary = pos == AnnulusPosition::Boundary;
  const double deg_a = degree(a, X), deg_b = degree(b, X);
  v.destabilizer = deg_a >= deg_b ? a : b;
  v.destabilizer_degree = std::max(deg_a, deg_b);
  return v;
}

}  // namespace

StabilityVerdict is_stable_filtrable_surface(const FiltrableRank2& E, const Config& cfg) {
  E.validate();
  const HopfManifold& X = E.X;
  const double half_det = 0.5 * degree(E.det, X);

  if (X.is_classical()) {
    const int l = E.total_length();
    const int lengths[] = {l};
    const Annulus D = d_domain(E.det, lengths, X);
    Factor b = E.det * Factor::monomial({-l, 0}) / E.sub;
    return annulus_verdict(E.sub, b, D, half_det, X, cfg.tol);
  }
  if (!X.is_generic())
    throw UnsupportedKind(std::string("no stability criterion for filtrable bundles on ") +
                          to_string(X.kind()) + " surfaces");

  const int lengths[] = {E.total_length(1), E.total_length(2)};
  const Factor b = jump_free_quotient(E);
  // delta a^-2 mu^-l = mu^k with k >= 0, k != 0.
  const Factor target = b / E.sub;
  const auto k = detect_monomial(target, X, SignConstraint::NonNegative, cfg);
  const Annulus D = d_domain(E.det, lengths, X);
  if (k && ((*k)[0] != 0 || (*k)[1] != 0)) {
    StabilityVerdict v;
    v.status = StabilityVerdict::Status::Stable;
    v.branch = "condition-a";
    v.k = k;
    v.domain = D;
    v.half_det_degree = half_det;
    v.destabilizer = E.sub;
    v.destabilizer_degree = degree(E.sub, X);
    return v;
  }
  return annulus_verdict(E.sub, b, D, half_det, X, cfg.tol);
}

std::optional<Factor> audit_maximal_sub(const FiltrableRank2& E, const Config& cfg) {
  E.validate();
  const HopfManifold& X = E.X;
  if (!X.is_generic()) return std::nullopt;
  const Factor b = jump_free_quotient(E);
  const double deg_a = degree(E.sub, X);
  std::optional<Factor> best;
  double best_deg = deg_a + cfg.tol;
  for (int k1 = 0; k1 <= cfg.exp_bound; ++k1) {
    for (int k2 = 0; k2 <= cfg.exp_bound; ++k2) {
      const Factor c = b * Factor::monomial({-k1, -k2});
      // Off k = 0 the quotient E / L_c has torsion unless L_c = L_a.
      if ((k1 != 0 || k2 != 0) && !same_element(c, E.sub, X, cfg.tol)) continue;
      const double d = degree(c, X);
      if (d > best_deg) {
        best = c;
        best_deg = d;
      }
    }
  }
  return best;
}

StabilityVerdict is_stable_filtrable_surface_audited(const FiltrableRank2& E, const Config& cfg) {
  StabilityVerdict v = is_stable_filtrable_surface(E, cfg);
  if (auto c = audit_maximal_sub(E, cfg)) {
    v.status = StabilityVerdict::Status::Indeterminate;
    v.branch = "audit";
    v.destabilizer = *c;
    v.destabilizer_degree = degree(*c, E.X);
  }
  return v;
}

StabilityVerdict is_stable_higher(const HigherExtensionType& t, const HopfManifold& X,
                                  const Config& cfg) {
  if (X.n() < 3 || !X.is_generic())
    throw PreconditionError("needs a generic Hopf manifold with n >= 3");
  StabilityVerdict v;
  if (const auto* d = std::get_if<Decomposable>(&t)) {
    v.status = StabilityVerdict::Status::Unstable;
    v.branch = "extension";
    v.destabilizer = d->a;
    v.destabilizer_degree = degree(d->a, X);
    v.half_det_degree = 0.5 * (degree(d->a, X) + degree(d->b, X));
    return v;
  }
  if (const auto* e = std::get_if<LineExtension>(&t)) {
    const Factor sub = e->a * Factor::monomial(e->m);
    v.status = StabilityVerdict::Status::Unstable;
    v.branch = "extension";
    v.destabilizer = sub;
    v.destabilizer_degree = degree(sub, X);
    v.half_det_degree = 0.5 * (degree(sub, X) + degree(e->a, X));
    return v;
  }
  const auto& ie = std::get<IdealExtension>(t);
  const auto& c = ie.component;
  const auto logs = X.log_mu();
  double lhs = 0.0;
  for (int l = 1; l <= X.n(); ++l)
    if (l != c.i && l != c.j) lhs += ie.m[static_cast<std::size_t>(l - 1)] * logs[l - 1].real();
  const double rhs = c.k_i * logs[c.i - 1].real() + c.k_j * logs[c.j - 1].real();

  std::vector<int> sub_exp = ie.m;
  sub_exp[static_cast<std::size_t>(c.i - 1)] = -c.k_i;
  sub_exp[static_cast<std::size_t>(c.j - 1)] = -c.k_j;
  const Factor sub = ie.a * Factor::monomial(sub_exp);
  v.destabilizer = sub;
  v.destabilizer_degree = degree(sub, X);
  v.half_det_degree = 0.5 * (degree(sub, X) + degree(ie.a, X));
  v.branch = "inequality";
  if (std::abs(lhs - rhs) <= cfg.tol) {
    v.status = StabilityVerdict::Status::Unstable;
    v.boundary = true;
    v.branch = "boundary";
  } else {
    v.status = lhs > rhs ? StabilityVerdict::Status::Stable : StabilityVerdict::Status::Unstable;
  }
  return v;
}

ModuliDescriptor moduli_dimension(const std::optional<Factor>& delta, int c2) {
  if (c2 < 0) throw DomainError("c2 must be non-negative");
  ModuliDescriptor out;
  out.delta = delta;
  out.c2 = c2;
  out.nonempty = c2 > 0;
  out.dim = 4 * c2;
  out.parametrization.base = "M_{delta," + std::to_string(c2) + "}";
  out.parametrization.note =
      c2 > 0 ? "complex manifold; generic points are non-filtrable"
             : "empty: topologically trivial bundles of rank 2 are not simple";
  return out;
}

C2OneParameters c2one_parameters(const Factor& a, const Factor& delta, const HopfManifold& X,
                                 const Config& cfg) {
  if (X.n() != 2 || !(X.is_generic() || X.is_classical()))
    throw PreconditionError("c2 = 1 parametrization needs a generic or classical surface");
  const int lengths[] = {1, 0};
  C2OneParameters out;
  out.domain = d_domain(delta, lengths, X);
  if (!out.domain.contains(std::exp(a.log_modulus(X.mu())), cfg.tol))
    throw PreconditionError("a must lie in D_{1,0}(delta)");
  auto& p = out.parametrization;
  p.base = "D_{1,0} x Pic^1(T_1)";
  p.annulus_dim = 1;
  p.picard_degree = 1;
  p.picard_dim = 1;
  p.projection_space_dim = 0;

  const bool equal_moduli = std::abs(X.log_mu()[0].real() - X.log_mu()[1].real()) <= cfg.tol;
  if (equal_moduli || X.is_classical()) {
    p.note = "|mu_1| = |mu_2|: the modification always splits, projection unique";
    return out;
  }
  // a^2 delta^-1 = mu_1^{m_1 - 1} mu_2^{m_2}, m_1 >= 1, m_2 > 0.
  const auto e = detect_monomial(a * a / delta, X, SignConstraint::NonNegative, cfg);
  if (e && (*e)[1] > 0) {
    out.exceptional = e;
    p.projection_space_dim = 1;
    p.note = "projection in P^1(H^0(T_1, Hom(L_{a^-1 delta} + L_{a mu_1}, lambda)))";
  } else {
    p.note = "projection unique up to isomorphism";
  }
  return out;
}

ModuliDescriptor monopole_parameters(int mass, int charge) {
  if (mass < 1 || charge < 1) throw DomainError("monopole mass and charge must be >= 1");
  ModuliDescriptor out;
  out.c2 = mass * charge;
  out.dim = 2 * charge;
  out.nonempty = true;
  auto& p = out.parametrization;
  p.base = "D_" + std::to_string(mass) + " x Pic^" + std::to_string(charge) + "(T_1)";
  p.annulus_dim = 1;
  p.picard_degree = charge;
  p.picard_dim = 1;
  p.projection_space_dim = 2 * charge - 2;
  p.note = charge == 1 ? "isomorphic to the base"
                       : "triples (a, lambda, p) with p in a projection space";
  return out;
}

}  // namespace hopf
