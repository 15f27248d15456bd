#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopf/config.hpp"
#include "hopf/elliptic.hpp"
#include "hopf/manifold.hpp"
#include "hopf/projective.hpp"
#include "hopf/rank2.hpp"

namespace hopf {

// s Sigma + f F on P^1 x T*, Sigma = P^1 x {pt}, F = {pt} x T*.
struct RuledClass {
  int s = 0;
  int f = 0;
  RuledClass operator+(const RuledClass& o) const { return {s + o.s, f + o.f}; }
  friend bool operator==(const RuledClass&, const RuledClass&) = default;
};

int intersect(const RuledClass& a, const RuledClass& b);

struct VerticalComponent {
  P1Point x;
  int multiplicity = 1;
};

// Rational map P^1 -> P^1 of degree d, F[u:v] = [N(u,v) : D(u,v)] with
// N = sum num[i] u^i v^(d-i). Stored with the leading nonzero denominator
// coefficient scaled to 1 (numerator instead when D = 0).
struct GraphData {
  std::vector<VerticalComponent> verticals;
  std::vector<std::complex<double>> num;
  std::vector<std::complex<double>> den;
  int degree = 0;

  static GraphData make(std::vector<VerticalComponent> verticals,
                        std::vector<std::complex<double>> num,
                        std::vector<std::complex<double>> den);
  static GraphData constant(std::vector<VerticalComponent> verticals, P1Point value);

  int vertical_count() const;
  int c2() const { return degree + vertical_count(); }
  bool is_constant() const { return degree == 0; }
  // Throws DomainError at a base point (N = D = 0).
  P1Point evaluate(const P1Point& x) const;
};

struct ReducibleBisection {
  std::complex<double> lambda1;  // classes on T*, annulus representatives
  std::complex<double> lambda2;
};

struct IrreducibleBisection {
  GraphData graph;
};

using Bisection = std::variant<ReducibleBisection, IrreducibleBisection>;

struct SpectralCover {
  std::vector<VerticalComponent> vertical;
  Bisection bisection;
  RuledClass klass;
  std::complex<double> q;        // T* = C* / q
  std::complex<double> delta_t;  // class of det on T*

  int vertical_count() const;
  int c2() const { return klass.f; }
  bool reducible() const { return std::holds_alternative<ReducibleBisection>(bisection); }
};

// Classical surfaces only: vertical fibres at the jumps, sections from sub and det/sub.
SpectralCover spectral_of_filtrable(const FiltrableRank2& E, const Config& cfg = {});

// Bisection eta^* Gr(F) for a non-constant graph.
SpectralCover cover_from_graph(const GraphData& G, std::complex<double> q,
                               std::complex<double> delta_t);

bool involution_invariant(const SpectralCover& S, double tol = 1e-9);

GraphData graph_of_spectral(const SpectralCover& S);

// dim |O(c2, 1)| on P^1 x P^1.
int graph_linear_system_dim(int c2);

std::pair<P1Point, P1Point> casimirs(const GraphData& G, const P1Point& x1, const P1Point& x2,
                                     double tol = 1e-9);

int bisection_genus(int c2, int k);

int poisson_rank(int c2, const SplittingType& st1, const SplittingType& st2);

struct LeafLabel {
  std::optional<P1Point> c1;
  std::optional<P1Point> c2;
  int rank = 0;
  int dim = 0;
  std::string parametrization;
};

// c2 = 1 bundles on a classical surface; x1 = infinity, x2 = 0 lie under T_1, T_2.
LeafLabel leaf_of_bundle(const FiltrableRank2& E, const Config& cfg = {});
LeafLabel leaf_of_graph(const GraphData& G, double tol = 1e-9);

enum class HigherSpectralVerdict { Decomposes, TwistedPullbackCandidate, FiltrationOnly };
const char* to_string(HigherSpectralVerdict v);

struct HigherSpectral {
  int n = 3;
  int r = 2;
  std::vector<std::complex<double>> lambdas;  // horizontal components P^{n-1} x {lambda_i}
  int vertical_multiplicity = 0;
  int cn = 0;
  bool filtrable = true;
  HigherSpectralVerdict verdict = HigherSpectralVerdict::FiltrationOnly;
};

HigherSpectral higher_spectral(const HopfManifold& X, const std::vector<std::complex<double>>& lambdas,
                               const Config& cfg = {});

}  // namespace hopf
