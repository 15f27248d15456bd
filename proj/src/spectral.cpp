#include "hopf/spectral.hpp"

#include <cmath>

#include "hopf/error.hpp"

namespace hopf {

int intersect(const RuledClass& a, const RuledClass& b) { return a.s * b.f + b.s * a.f; }

namespace {

void trim(std::vector<std::complex<double>>& c, int d) {
  c.resize(static_cast<std::size_t>(d) + 1, 0.0);
}

int effective_degree(const std::vector<std::complex<double>>& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[static_cast<std::size_t>(i)] != 0.0) return i;
  return -1;
}

std::complex<double> homogeneous(const std::vector<std::complex<double>>& c, int d,
                                  std::complex<double> u, std::complex<double> v) {
  std::complex<double> s = 0.0;
  for (int i = 0; i <= d; ++i) s += c[static_cast<std::size_t>(i)] * std::pow(u, i) * std::pow(v, d - i);
  return s;
}

int total(const std::vector<VerticalComponent>& vs) {
  int k = 0;
  for (const auto& v : vs) k += v.multiplicity;
  return k;
}

}  // namespace

GraphData GraphData::make(std::vector<VerticalComponent> verticals,
                          std::vector<std::complex<double>> num,
                          std::vector<std::complex<double>> den) {
  for (const auto& v : verticals)
    if (v.multiplicity < 1) throw DomainError("vertical multiplicities must be >= 1");
  const int dn = effective_degree(num), dd = effective_degree(den);
  if (dn < 0 && dd < 0) throw DomainError("graph map has zero numerator and denominator");
  GraphData g;
  g.verticals = std::move(verticals);
  g.degree = std::max(dn, dd);
  trim(num, g.degree);
  trim(den, g.degree);
  // Common roots would lower the degree; callers pass coprime pairs.
  std::complex<double> scale = dd >= 0 ? den[static_cast<std::size_t>(dd)]
                                       : num[static_cast<std::size_t>(dn)];
  for (auto& c : num) c /= scale;
  for (auto& c : den) c /= scale;
  g.num = std::move(num);
  g.den = std::move(den);
  return g;
}

GraphData GraphData::constant(std::vector<VerticalComponent> verticals, P1Point value) {
  return make(std::move(verticals), {value.u()}, {value.v()});
}

int GraphData::vertical_count() const { return total(verticals); }

P1Point GraphData::evaluate(const P1Point& x) const {
  const auto n = homogeneous(num, degree, x.u(), x.v());
  const auto d = homogeneous(den, degree, x.u(), x.v());
  if (n == 0.0 && d == 0.0) throw DomainError("graph map is undefined at a base point");
  return P1Point(n, d);
}

int SpectralCover::vertical_count() const { return total(vertical); }

SpectralCover spectral_of_filtrable(const FiltrableRank2& E, const Config& cfg) {
  (void)cfg;
  E.validate();
  const HopfManifold& X = E.X;
  if (!X.is_classical() || X.n() != 2)
    throw UnsupportedKind("spectral covers are defined on classical Hopf surfaces");
  if (E.off_curve_points() != 0)
    throw PreconditionError("every point of Z must sit on a recorded fibre");
  SpectralCover S;
  S.q = X.mu(1);
  for (const auto& j : E.jumps) S.vertical.push_back({j.base_point(), j.multiplicity()});
  const int k = S.vertical_count();
  const auto a = E.sub.value(X.mu());
  const auto b = E.quotient().value(X.mu());
  S.delta_t = reduce_to_annulus(E.det.value(X.mu()), S.q);
  S.bisection = ReducibleBisection{reduce_to_annulus(a, S.q), reduce_to_annulus(b, S.q)};
  S.klass = RuledClass{2, E.c2 - k} + RuledClass{0, k};
  return S;
}

SpectralCover cover_from_graph(const GraphData& G, std::complex<double> q,
                               std::complex<double> delta_t) {
  if (G.degree < 1)
    throw PreconditionError("a constant graph pulls back to a reducible bisection");
  SpectralCover S;
  S.q = q;
  S.delta_t = reduce_to_annulus(delta_t, q);
  S.vertical = G.verticals;
  S.bisection = IrreducibleBisection{G};
  const int k = G.vertical_count();
  S.klass = RuledClass{2, G.degree} + RuledClass{0, k};
  return S;
}

bool involution_invariant(const SpectralCover& S, double tol) {
  if (const auto* r = std::get_if<ReducibleBisection>(&S.bisection))
    return same_class(r->lambda1 * r->lambda2, S.delta_t, S.q, tol);
  // eta^* of a graph is invariant by construction.
  return true;
}

GraphData graph_of_spectral(const SpectralCover& S) {
  if (const auto* g = std::get_if<IrreducibleBisection>(&S.bisection)) return g->graph;
  const auto& r = std::get<ReducibleBisection>(S.bisection);
  // The involution lambda -> delta / lambda becomes u -> 1/u with u = lambda / sqrt(delta).
  const auto t = tate_x(r.lambda1 / std::sqrt(S.delta_t), S.q);
  const P1Point value = t.finite ? P1Point::affine(t.x) : P1Point::infinity();
  return GraphData::constant(S.vertical, value);
}

int graph_linear_system_dim(int c2) {
  if (c2 < 0) throw DomainError("c2 must be non-negative");
  return 2 * c2 + 1;
}

std::pair<P1Point, P1Point> casimirs(const GraphData& G, const P1Point& x1, const P1Point& x2,
                                     double tol) {
  for (const auto& v : G.verticals)
    if (v.x.approx_equal(x1, tol) || v.x.approx_equal(x2, tol))
      throw DomainError("Casimir undefined: evaluation point lies under a vertical component");
  return {G.evaluate(x1), G.evaluate(x2)};
}

int bisection_genus(int c2, int k) {
  if (c2 - k < 1) throw DomainError("an irreducible smooth bisection needs c2 - k >= 1");
  return 2 * (c2 - k) - 1;
}

int poisson_rank(int c2, const SplittingType& st1, const SplittingType& st2) {
  if (c2 < 1) throw DomainError("poisson rank needs c2 >= 1");
  const int r = 4 * c2 - (h0_ad(st1) + h0_ad(st2));
  if (r < 0)
    throw ModelInconsistency("negative Poisson rank " + std::to_string(r) +
                             ": splitting data inconsistent with c2 = " + std::to_string(c2));
  return r;
}

LeafLabel leaf_of_bundle(const FiltrableRank2& E, const Config& cfg) {
  if (E.c2 != 1) throw PreconditionError("leaf labels are computed for c2 = 1");
  const SpectralCover S = spectral_of_filtrable(E, cfg);
  LeafLabel out;
  const RegularDistinct regular{1.0, 1.0};
  for (const auto& j : E.jumps) {
    if (j.curve == 1 || j.curve == 2) {
      const SplittingType jumped = UnstableJump{j.height(), 1.0};
      out.rank = poisson_rank(1, jumped, regular);
      out.dim = out.rank;
      out.parametrization = "point: determined by the restrictions to T_1 and T_2";
      return out;
    }
  }
  const GraphData G = graph_of_spectral(S);
  const auto [c1, c2] = casimirs(G, axis_point(1), axis_point(2), cfg.tol);
  out.c1 = c1;
  out.c2 = c2;
  out.rank = poisson_rank(1, regular, regular);
  out.dim = out.rank;
  out.parametrization = "(x0, lambda): x0 in P^1 minus {x1, x2}, lambda in Pic^1(T_x0)";
  return out;
}

LeafLabel leaf_of_graph(const GraphData& G, double tol) {
  if (G.c2() < 1) throw PreconditionError("graph has c2 = 0");
  const auto [c1, c2] = casimirs(G, axis_point(1), axis_point(2), tol);
  LeafLabel out;
  out.c1 = c1;
  out.c2 = c2;
  const RegularDistinct regular{1.0, 1.0};
  out.rank = poisson_rank(G.c2(), regular, regular);
  out.dim = out.rank;
  out.parametrization = c1.approx_equal(c2, tol) ? "filtrable leaf" : "label only";
  return out;
}

const char* to_string(HigherSpectralVerdict v) {
  switch (v) {
    case HigherSpectralVerdict::Decomposes: return "decomposes";
    case HigherSpectralVerdict::TwistedPullbackCandidate: return "twisted-pullback-candidate";
    case HigherSpectralVerdict::FiltrationOnly: return "filtration-only";
  }
  return "filtration-only";
}

HigherSpectral higher_spectral(const HopfManifold& X, const std::vector<std::complex<double>>& lambdas,
                               const Config& cfg) {
  if (X.n() < 3 || !X.is_classical())
    throw PreconditionError("higher spectral covers need a classical Hopf manifold with n >= 3");
  if (lambdas.empty()) throw DomainError("rank must be >= 1");
  HigherSpectral out;
  out.n = X.n();
  out.r = static_cast<int>(lambdas.size());
  const auto q = X.mu(1);
  for (auto l : lambdas) {
    if (l == 0.0) throw DomainError("spectral values must be nonzero");
    out.lambdas.push_back(reduce_to_annulus(l, q));
  }
  bool all_distinct = true, all_equal = true;
  for (std::size_t i = 0; i < out.lambdas.size(); ++i)
    for (std::size_t j = i + 1; j < out.lambdas.size(); ++j) {
      const bool eq = same_class(out.lambdas[i], out.lambdas[j], q, cfg.tol);
      all_distinct = all_distinct && !eq;
      all_equal = all_equal && eq;
    }
  if (out.r == 1 || all_distinct)
    out.verdict = HigherSpectralVerdict::Decomposes;
  else if (all_equal)
    out.verdict = HigherSpectralVerdict::TwistedPullbackCandidate;
  else
    out.verdict = HigherSpectralVerdict::FiltrationOnly;
  return out;
}

}  // namespace hopf
