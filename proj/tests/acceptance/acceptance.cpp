#include "acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "hopf/covers.hpp"
#include "hopf/error.hpp"
#include "hopf/picard.hpp"
#include "hopf/rank2.hpp"
#include "hopf/spectral.hpp"
#include "hopf/stability.hpp"
#include "oracles.hpp"

namespace hopf::acceptance {

using cplx = std::complex<double>;
using Clock = std::chrono::steady_clock;

int Report::passed() const {
  int k = 0;
  for (const auto& r : results) k += r.pass;
  return k;
}

int Report::failed() const { return static_cast<int>(results.size()) - passed(); }

namespace {

constexpr double kPi = std::numbers::pi;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures; keeps the first message for the report line.
struct Tally {
  int checks = 0;
  int failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks - failures << "/" << checks << " checks";
    if (failures) s << "; first failure: " << first;
    return s.str();
  }
};

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  cplx polar(double rlo, double rhi) { return std::polar(uniform(rlo, rhi), uniform(-kPi, kPi)); }
};

std::vector<cplx> mu_of(const HopfManifold& X) { return {X.mu().begin(), X.mu().end()}; }

std::string vec(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

HopfManifold random_generic(Rng& rng, int n, const Config& cfg) {
  while (true) {
    std::vector<double> r(static_cast<std::size_t>(n));
    for (auto& x : r) x = rng.uniform(0.12, 0.92);
    std::sort(r.begin(), r.end());
    std::vector<cplx> mu;
    for (double x : r) mu.push_back(std::polar(x, rng.uniform(-kPi, kPi)));
    try {
      HopfManifold X(mu, cfg);
      if (X.is_generic()) return X;
    } catch (const Error&) {
    }
  }
}

FiltrableRank2 bundle_with_lengths(const HopfManifold& X, const Factor& det, const Factor& sub,
                                   int l1, int l2, int off, Rng& rng) {
  FiltrableRank2 E{X, det, 0, sub, {}, {0, 0}};
  const int lengths[] = {l1, l2};
  for (int c = 1; c <= 2; ++c) {
    const int l = lengths[c - 1];
    if (l == 0) continue;
    JumpRecord r{c, {}, std::nullopt};
    for (int i = 0; i < l; ++i) r.heights.push_back(rng.integer(1, 2));
    E.z_on_curve[static_cast<std::size_t>(c - 1)] = r.multiplicity();
    E.jumps.push_back(r);
  }
  E.c2 = E.jump_multiplicity() + off;
  return E;
}

// 1. Line bundle cohomology on a generic surface.
CriterionResult cohomology_tables(Rng& rng) {
  CriterionResult res{1, "cohomology tables", false, 0, ""};
  const HopfManifold X = HopfManifold::from_moduli({0.31, 0.47});
  const auto mu = mu_of(X);
  Tally t;
  double sut = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Factor a;
    if (i < 500) {
      int e1, e2;
      switch (i % 3) {
        case 0: e1 = rng.integer(0, 6), e2 = rng.integer(0, 6); break;
        case 1: e1 = rng.integer(-6, -1), e2 = rng.integer(-6, -1); break;
        default: e1 = rng.integer(-6, 6), e2 = rng.integer(-6, 6); break;
      }
      a = Factor::monomial({e1, e2});
    } else {
      std::vector<int> e{rng.integer(-6, 6), rng.integer(-6, 6)};
      cplx s = rng.polar(0.05, 3.0);
      // A fifth of them hide a monomial in the scalar.
      if (i % 5 == 0) s = oracle::power_product(mu, {rng.integer(-6, 6), rng.integer(-6, 6)});
      a = Factor(e, s);
    }
    const auto t0 = Clock::now();
    const auto h = cohomology_dims(LineBundle(a, X)).h;
    sut += seconds_since(t0);
    const auto expected = oracle::generic_cohomology(a.value(mu), mu, 14, 1e-9);
    t.expect(h == expected, "factor " + std::to_string(i) + ": got " + vec(h) + " expected " + vec(expected));
    t.expect(h.size() == 3 && h[1] == h[0] + h[2], "h1 != h0 + h2 for factor " + std::to_string(i));
  }
  t.expect(sut < 1.0, "cohomology_dims took " + std::to_string(sut) + " s");
  res.pass = t.ok();
  res.detail = t.summary() + ", 1000 factors in " + std::to_string(sut).substr(0, 5) + " s";
  return res;
}

// 2. Degree normalisations.
CriterionResult degree_normalisations(Rng& rng) {
  CriterionResult res{2, "degree normalisations", false, 0, ""};
  Tally t;
  const double arg = rng.uniform(-kPi, kPi);
  const HopfManifold classical[] = {HopfManifold({0.4, 0.4}),
                                    HopfManifold({std::polar(0.3, arg), std::polar(0.3, arg)})};
  for (const auto& X : classical) {
    t.expect(X.is_classical(), "expected a classical surface");
    const cplx m1 = X.mu(1);
    for (int m = -10; m <= 10; ++m) {
      const double d1 = degree(Factor::monomial({m, 0}), X);
      const double d2 = degree(Factor::monomial({m - 3, 3}), X);
      const double d3 = degree(Factor::constant(2, std::pow(m1, m)), X);
      t.expect(std::abs(d1 - m) <= 1e-12, "classical deg mu^" + std::to_string(m));
      t.expect(std::abs(d2 - m) <= 1e-12, "classical deg mu1^(m-3) mu2^3, m=" + std::to_string(m));
      t.expect(std::abs(d3 - m) <= 1e-12, "classical deg of scalar mu^" + std::to_string(m));
    }
  }
  const HopfManifold X = HopfManifold::from_moduli({0.31, 0.47});
  for (int i = 1; i <= 2; ++i)
    for (int m = 1; m <= 10; ++m) {
      std::vector<int> e{0, 0};
      e[static_cast<std::size_t>(i - 1)] = m;
      const double d = degree(Factor::monomial(e), X);
      const double expected = -m * std::log(std::abs(X.mu(i)));
      t.expect(std::abs(d - expected) <= 1e-12 && d > 0,
               "generic deg mu_" + std::to_string(i) + "^" + std::to_string(m));
    }
  res.pass = t.ok();
  res.detail = t.summary();
  return res;
}

// 3. Geometry of D_{l1,l2}.
CriterionResult domain_geometry(Rng& rng) {
  CriterionResult res{3, "stability-domain geometry", false, 0, ""};
  Tally t;
  const HopfManifold X = HopfManifold::from_moduli({0.31, 0.47});
  const double tol = 1e-9;
  const double step = 10 * tol;
  for (int trial = 0; trial < 100; ++trial) {
    const Factor delta({rng.integer(-3, 3), rng.integer(-3, 3)}, rng.polar(0.1, 10.0));
    Annulus D[4][4];
    for (int l1 = 0; l1 < 4; ++l1)
      for (int l2 = 0; l2 < 4; ++l2) {
        const int l[] = {l1, l2};
        D[l1][l2] = d_domain(delta, l, X);
        t.expect(D[l1][l2].empty() == (l1 == 0 && l2 == 0),
                 "emptiness at l=(" + std::to_string(l1) + "," + std::to_string(l2) + ")");
      }
    for (int a1 = 0; a1 < 4; ++a1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b1 = a1; b1 < 4; ++b1)
          for (int b2 = a2; b2 < 4; ++b2) {
            const auto& A = D[a1][a2];
            const auto& B = D[b1][b2];
            t.expect(std::abs(A.r_lo - B.r_lo) <= 1e-12 * B.r_lo && A.r_hi <= B.r_hi * (1 + 1e-12),
                     "nesting D_l in D_l' for l <= l'");
          }
    const auto& D1 = D[rng.integer(0, 3)][rng.integer(1, 3)];
    t.expect(D1.locate(D1.r_lo, tol) == AnnulusPosition::Boundary, "inner edge is Boundary");
    t.expect(D1.locate(D1.r_hi, tol) == AnnulusPosition::Boundary, "outer edge is Boundary");
    t.expect(D1.locate(D1.r_lo * std::exp(step), tol) == AnnulusPosition::Inside, "inner edge + 10 tol");
    t.expect(D1.locate(D1.r_lo * std::exp(-step), tol) == AnnulusPosition::Outside, "inner edge - 10 tol");
    t.expect(D1.locate(D1.r_hi * std::exp(-step), tol) == AnnulusPosition::Inside, "outer edge - 10 tol");
    t.expect(D1.locate(D1.r_hi * std::exp(step), tol) == AnnulusPosition::Outside, "outer edge + 10 tol");

    // Scale covariance: delta -> t delta, alpha -> t^{1/2} alpha.
    const cplx s = rng.polar(0.2, 5.0);
    const int l[] = {1, 2};
    const Annulus A = d_domain(delta, l, X);
    const Annulus B = d_domain(delta * Factor::constant(2, s), l, X);
    const double root = std::sqrt(std::abs(s));
    t.expect(std::abs(B.r_lo - root * A.r_lo) <= 1e-12 * B.r_lo &&
                 std::abs(B.r_hi - root * A.r_hi) <= 1e-12 * B.r_hi,
             "radii scale by |t|^(1/2)");
    const double alpha = std::exp(rng.uniform(std::log(A.r_lo) - 1, std::log(A.r_hi) + 1));
    t.expect(A.locate(alpha, tol) == B.locate(alpha * root, tol), "membership under rescaling");

    // Stability verdict on the inner edge.
    const int l1 = rng.integer(0, 2), l2 = rng.integer(1, 2);
    const int ll[] = {l1, l2};
    const Annulus E_D = d_domain(delta, ll, X);
    const Factor a = Factor::constant(2, std::polar(E_D.r_lo, rng.uniform(-kPi, kPi)));
    const FiltrableRank2 E = bundle_with_lengths(X, delta, a, l1, l2, 0, rng);
    const auto v = is_stable_filtrable_surface(E);
    t.expect(!v.stable() && v.boundary, "sub on the boundary of D must be unstable with the flag");
  }
  res.pass = t.ok();
  res.detail = t.summary() + ", 100 random determinants";
  return res;
}

// 4. Closed-form stability against destabiliser enumeration.
CriterionResult stability_oracle(Rng& rng) {
  CriterionResult res{4, "brute-force stability oracle", false, 0, ""};
  Config cfg;
  cfg.exp_bound = 8;
  Tally t;
  const auto t0 = Clock::now();
  const int instances = 600;
  int stable = 0;
  for (int i = 0; i < instances; ++i) {
    const HopfManifold X = random_generic(rng, 2, cfg);
    const auto mu = mu_of(X);
    const int l1 = rng.integer(0, 3), l2 = rng.integer(0, 3);
    const Factor delta({rng.integer(-3, 3), rng.integer(-3, 3)}, rng.polar(0.2, 5.0));
    const int l[] = {l1, l2};
    const Annulus D = d_domain(delta, l, X);
    cplx a;
    const int kind = i % 10;
    if (kind < 3) {
      // a^2 = delta mu^{-l-k}, k >= 0 not both zero.
      int k1 = rng.integer(0, 4), k2 = rng.integer(0, 4);
      if (k1 == 0 && k2 == 0) k1 = 1;
      a = std::sqrt(delta.value(mu) * oracle::power_product(mu, {-l1 - k1, -l2 - k2}));
    } else if (kind == 3) {
      a = std::polar(i % 20 < 10 ? D.r_lo : D.r_hi, rng.uniform(-kPi, kPi));
    } else {
      const double lo = std::log(D.r_lo) - 1.5, hi = std::log(D.r_hi) + 1.5;
      a = std::polar(std::exp(rng.uniform(lo, hi)), rng.uniform(-kPi, kPi));
    }
    const Factor sub = Factor::constant(2, a);
    const FiltrableRank2 E = bundle_with_lengths(X, delta, sub, l1, l2, rng.integer(0, 2), rng);
    const auto v = is_stable_filtrable_surface(E, cfg);
    const bool expected = oracle::stable_by_enumeration(a, delta.value(mu), {l1, l2}, mu, 8, cfg.tol);
    stable += expected;
    t.expect(v.stable() == expected, "instance " + std::to_string(i) + " branch " + v.branch +
                                         ": closed form " + (v.stable() ? "stable" : "unstable") +
                                         ", enumeration " + (expected ? "stable" : "unstable"));
  }
  const double s = seconds_since(t0);
  t.expect(s < 30.0, "took " + std::to_string(s) + " s");
  res.pass = t.ok();
  res.detail = t.summary() + ", " + std::to_string(instances) + " instances (" +
               std::to_string(stable) + " stable)";
  return res;
}

// 5. Jumps and elementary modifications.
CriterionResult modification_bookkeeping(Rng& rng) {
  CriterionResult res{5, "jump/modification bookkeeping", false, 0, ""};
  Tally t;
  const HopfManifold X = HopfManifold::from_moduli({0.31, 0.47});
  for (int trial = 0; trial < 300; ++trial) {
    const Factor det0({rng.integer(-3, 3), rng.integer(-3, 3)}, rng.polar(0.2, 5.0));
    const Factor sub({rng.integer(-3, 3), rng.integer(-3, 3)}, rng.polar(0.2, 5.0));
    FiltrableRank2 E{X, det0, 0, sub, {}, {0, 0}};
    const int budget = rng.integer(0, 6);
    while (E.c2 < budget) {
      const int curve = rng.integer(1, 2);
      const int h = rng.integer(1, budget - E.c2);
      E = add_jump(E, curve, EllipticPic(h, rng.polar(0.5, 1.0), X.mu(curve)));
    }
    int total = 0;
    for (const auto& j : E.jumps) total += j.multiplicity();
    t.expect(total == E.c2 && E.off_curve_points() == 0, "sum of multiplicities != c2");

    const int l1 = E.total_length(1), l2 = E.total_length(2);
    const FiltrableRank2 bare = remove_all_jumps(E, DetConvention::Theorem);
    t.expect(bare.jumps.empty() && bare.c2 == 0, "jumps left after full removal");
    t.expect(bare.det == E.det * Factor::monomial({-l1, -l2}),
             "det after removal is not det * mu1^-l1 mu2^-l2");

    const int curve = rng.integer(1, 2);
    const int h = rng.integer(1, 3);
    const FiltrableRank2 up = add_jump(E, curve, EllipticPic(h, rng.polar(0.5, 1.0), X.mu(curve)));
    const FiltrableRank2 back =
        elementary_modification(up, curve, EllipticPic(-h, rng.polar(0.5, 1.0), X.mu(curve)));
    t.expect(back.det == E.det && back.c2 == E.c2 && back.jumps == E.jumps,
             "add-jump then modification does not restore (det, c2)");
  }
  res.pass = t.ok();
  res.detail = t.summary() + ", 300 random profiles with c2 <= 6";
  return res;
}

std::pair<cplx, cplx> as_pair(const TateValue& v) {
  return v.finite ? std::pair<cplx, cplx>{v.x, 1.0} : std::pair<cplx, cplx>{1.0, 0.0};
}

// 6. Spectral covers.
CriterionResult spectral_arithmetic(Rng& rng) {
  CriterionResult res{6, "spectral arithmetic", false, 0, ""};
  Tally t;
  const cplx muc = std::polar(0.4, 0.3);
  const HopfManifold X({muc, muc});
  int covers = 0;
  for (int trial = 0; trial < 200; ++trial) {
    FiltrableRank2 E{X, Factor({rng.integer(-2, 2), 0}, rng.polar(0.5, 2.0)), 0,
                     Factor({rng.integer(-2, 2), 0}, rng.polar(0.5, 2.0)), {}, {0, 0}};
    const int budget = rng.integer(0, 10);
    while (E.c2 < budget) {
      const int curve = rng.integer(0, 2);
      const int h = rng.integer(1, budget - E.c2);
      std::optional<P1Point> fibre;
      if (curve == 0) fibre = P1Point::affine(rng.polar(0.2, 3.0));
      E = add_jump(E, curve, EllipticPic(h, rng.polar(0.5, 1.0), muc), DetConvention::Theorem, fibre);
    }
    const SpectralCover S = spectral_of_filtrable(E);
    ++covers;
    t.expect(intersect(S.klass, S.klass) == 4 * E.c2, "S.S != 4 c2 for a filtrable bundle");
    t.expect(S.reducible() && involution_invariant(S), "filtrable cover must be reducible and invariant");
    const GraphData G = graph_of_spectral(S);
    t.expect(G.is_constant() && G.c2() == E.c2, "graph of a filtrable bundle is constant with d + k = c2");
  }
  for (int trial = 0; trial < 200; ++trial) {
    const int d = rng.integer(1, 6);
    const int k = rng.integer(0, 10 - d);
    std::vector<VerticalComponent> verticals;
    for (int left = k; left > 0;) {
      const int m = rng.integer(1, left);
      verticals.push_back({P1Point::affine(rng.polar(0.2, 3.0)), m});
      left -= m;
    }
    std::vector<cplx> num, den;
    for (int i = 0; i <= d; ++i) {
      num.push_back(rng.polar(0.5, 2.0));
      den.push_back(rng.polar(0.5, 2.0));
    }
    const GraphData G = GraphData::make(verticals, num, den);
    const SpectralCover S = cover_from_graph(G, muc, rng.polar(0.5, 1.0));
    ++covers;
    t.expect(intersect(S.klass, S.klass) == 4 * G.c2(), "S.S != 4 c2 for a graph cover");
    t.expect(G.degree + G.vertical_count() == S.c2(), "d + k != c2");
  }
  for (int c2 = 0; c2 <= 10; ++c2)
    t.expect(graph_linear_system_dim(c2) == 2 * (c2 + 1) - 1, "dim |O(c2,1)| for c2=" + std::to_string(c2));

  const std::vector<std::pair<cplx, cplx>> branch{
      as_pair(tate_x(1.0, muc)), as_pair(tate_x(-1.0, muc)), as_pair(tate_x(std::sqrt(muc), muc)),
      as_pair(tate_x(-std::sqrt(muc), muc))};
  for (int c2 = 1; c2 <= 10; ++c2)
    for (int k = std::max(0, c2 - 5); k < c2; ++k) {
      const int d = c2 - k;
      std::vector<cplx> num, den;
      for (int i = 0; i <= d; ++i) {
        num.push_back(rng.polar(0.5, 2.0));
        den.push_back(rng.polar(0.5, 2.0));
      }
      const int g = oracle::riemann_hurwitz_genus(num, den, branch);
      t.expect(bisection_genus(c2, k) == g, "genus c2=" + std::to_string(c2) + " k=" +
                                                std::to_string(k) + ": Riemann-Hurwitz gives " +
                                                std::to_string(g));
    }
  res.pass = t.ok();
  res.detail = t.summary() + ", " + std::to_string(covers) + " covers";
  return res;
}

// 7. Rank of the Poisson structure.
CriterionResult poisson(Rng& rng) {
  CriterionResult res{7, "poisson rank", false, 0, ""};
  Tally t;
  const cplx l1 = rng.polar(0.5, 1.0), l2 = rng.polar(0.5, 1.0);
  const SplittingType regular = RegularDistinct{l1, l2};
  const SplittingType atiyah = AtiyahNonSplit{l1};
  const SplittingType jump1 = UnstableJump{1, l1};
  for (int c2 = 1; c2 <= 10; ++c2) {
    t.expect(poisson_rank(c2, regular, regular) == 4 * c2 - 2, "regular pair, c2=" + std::to_string(c2));
    t.expect(poisson_rank(c2, atiyah, regular) == 4 * c2 - 2, "atiyah + regular, c2=" + std::to_string(c2));
  }
  t.expect(poisson_rank(1, jump1, regular) == 0, "height-1 jump on T_1, c2 = 1");
  t.expect(poisson_rank(1, regular, jump1) == 0, "height-1 jump on T_2, c2 = 1");

  t.expect(h0_ad(regular) == oracle::h0_ad_regular(), "h0_ad regular");
  t.expect(h0_ad(SplittingType{NonRegularSplit{l1}}) == oracle::h0_ad_nonregular_split(), "h0_ad split");
  t.expect(h0_ad(atiyah) == oracle::h0_ad_atiyah(), "h0_ad atiyah");
  for (int h = 1; h <= 6; ++h)
    t.expect(h0_ad(SplittingType{UnstableJump{h, l1}}) == oracle::h0_ad_jump(h), "h0_ad jump");

  bool threw = false;
  try {
    poisson_rank(1, SplittingType{UnstableJump{2, l1}}, regular);
  } catch (const ModelInconsistency&) {
    threw = true;
  }
  t.expect(threw, "height-2 jump with c2 = 1 must be flagged inconsistent");

  const cplx muc{0.45, 0.0};
  const HopfManifold X({muc, muc});
  const FiltrableRank2 base{X, Factor::identity(2), 0, Factor::constant(2, rng.polar(0.5, 2.0)), {}, {0, 0}};
  for (int curve = 1; curve <= 2; ++curve) {
    const auto E = add_jump(base, curve, EllipticPic(1, l1, muc));
    const auto leaf = leaf_of_bundle(E);
    t.expect(leaf.rank == 0 && leaf.dim == 0, "jump on T_" + std::to_string(curve) + " gives a point leaf");
  }
  const auto E = add_jump(base, 0, EllipticPic(1, l1, muc), DetConvention::Theorem,
                          P1Point::affine(rng.polar(0.3, 2.0)));
  const auto leaf = leaf_of_bundle(E);
  t.expect(leaf.rank == 2 && leaf.dim == 2 && leaf.c1 && leaf.c2 && leaf.c1->approx_equal(*leaf.c2),
           "jump off T_1, T_2 gives a 2-dimensional leaf with C1 = C2");
  res.pass = t.ok();
  res.detail = t.summary();
  return res;
}

// 8. Stability on generic manifolds of dimension 3.
CriterionResult higher_stability(Rng& rng) {
  CriterionResult res{8, "higher-dimensional stability", false, 0, ""};
  Tally t;
  const HopfManifold X = HopfManifold::from_moduli({0.31, 0.47, 0.53});
  const Factor twist = Factor::constant(3, rng.polar(0.5, 2.0));
  for (int m3 = 1; m3 <= 8; ++m3) {
    const auto type = classify_rank2_higher(HigherDescriptor::ideal(twist, {0, 0, m3}, {1, 2, 1, 1}), X);
    t.expect(std::holds_alternative<IdealExtension>(type), "m3=" + std::to_string(m3) + " is an ideal extension");
    const auto v = is_stable_higher(type, X);
    t.expect(v.stable() == (m3 <= 3), "m3=" + std::to_string(m3) + " verdict " + to_string(v.status));
  }
  Config cfg;
  int found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const HopfManifold Y = random_generic(rng, 3, cfg);
    bool ok = false;
    for (int i = 1; i <= 3 && !ok; ++i)
      for (int j = i + 1; j <= 3 && !ok; ++j) {
        const int l = 6 - i - j;
        for (int ki = 1; ki <= 2 && !ok; ++ki)
          for (int kj = 1; kj <= 2 && !ok; ++kj)
            for (int ml = 1; ml <= 8 && !ok; ++ml) {
              std::vector<int> m(3, 0);
              m[static_cast<std::size_t>(l - 1)] = ml;
              const auto type = classify_rank2_higher(HigherDescriptor::ideal(twist, m, {i, j, ki, kj}), Y);
              ok = is_stable_higher(type, Y).stable();
            }
      }
    found += ok;
  }
  t.expect(found == 100, "stable m found for " + std::to_string(found) + "/100 triples");
  res.pass = t.ok();
  res.detail = t.summary() + ", existence " + std::to_string(found) + "/100";
  return res;
}

// 9. Cyclic covers.
CriterionResult cover_table(Rng& rng) {
  CriterionResult res{9, "cover case table", false, 0, ""};
  Tally t;
  auto close = [](cplx x, cplx y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); };
  const HopfManifold surfaces[] = {HopfManifold::from_moduli({0.31, 0.47}),
                                   HopfManifold({rng.polar(0.2, 0.4), rng.polar(0.5, 0.8)})};
  for (const auto& X : surfaces) {
    const cplx mu1 = X.mu(1), mu2 = X.mu(2);
    for (int r = 2; r <= 3; ++r) {
      std::vector<CoverDescriptor> all;
      for (int k = 0; k <= r; ++k) {
        if (k > 0 && r % k != 0) {
          bool threw = false;
          try {
            classify_cyclic_cover(X, r, Branch::Empty, k);
          } catch (const DomainError&) {
            threw = true;
          }
          t.expect(threw, "k not dividing r must be rejected");
          continue;
        }
        const auto c = classify_cyclic_cover(X, r, Branch::Empty, k);
        all.push_back(c);
        if (k == 0) {
          const auto* d = std::get_if<DisconnectedCopies>(&c.result);
          t.expect(d && d->count == r && !d->base, "k = 0 gives r copies of X");
        } else if (k == r) {
          const auto* u = std::get_if<UnramifiedHopf>(&c.result);
          t.expect(u && close(u->mu1, std::pow(mu1, r)) && close(u->mu2, std::pow(mu2, r)),
                   "k = r gives C^2*/(mu1^r, mu2^r)");
        } else {
          const auto* d = std::get_if<DisconnectedCopies>(&c.result);
          t.expect(d && d->count == r / k && d->base && close(d->base->mu1, std::pow(mu1, k)),
                   "0 < k < r gives r/k copies of the k-cover");
        }
      }
      const auto c1 = classify_cyclic_cover(X, r, Branch::T1);
      const auto* y1 = std::get_if<RamifiedHopf>(&c1.result);
      t.expect(y1 && close(y1->mu1, mu1) && close(std::pow(y1->mu2, r), mu2) &&
                   y1->map_exponents == std::vector<int>{1, r},
               "B = T1 gives C^2*/(mu1, alpha), alpha^r = mu2");
      const auto c2 = classify_cyclic_cover(X, r, Branch::T2);
      const auto* y2 = std::get_if<RamifiedHopf>(&c2.result);
      t.expect(y2 && close(std::pow(y2->mu1, r), mu1) && close(y2->mu2, mu2) &&
                   y2->map_exponents == std::vector<int>{r, 1},
               "B = T2 gives C^2*/(alpha, mu2), alpha^r = mu1");
      const auto c3 = classify_cyclic_cover(X, r, Branch::T1T2);
      const auto* y3 = std::get_if<NonPrimary>(&c3.result);
      t.expect(y3 && y3->d == -r && close(std::pow(y3->beta, r), mu2 / mu1) && close(y3->mu, mu1),
               "B = T1 + T2 gives Theta*_{-r}/(beta, mu1), beta^r = mu2/mu1");
      t.expect(y3 && nonprimary_homology(y3->d).H[2].torsion == std::vector<int>{r},
               "H2 of the non-primary cover is Z_r");
      all.push_back(c1);
      all.push_back(c2);
      all.push_back(c3);
      for (const auto& c : all) {
        for (const Factor& M : {Factor::identity(2), Factor({rng.integer(-3, 3), rng.integer(-3, 3)},
                                                           rng.polar(0.3, 3.0))}) {
          const auto p = pushforward_rank2(c, M);
          t.expect(p.c2 == 0 && p.filtrable, "pushforward must have c2 = 0 and be filtrable");
          if (M.is_identity())
            t.expect(static_cast<int>(p.summands.size()) == r, "trivial M pushes forward to r summands");
        }
      }
    }
  }
  res.pass = t.ok();
  res.detail = t.summary();
  return res;
}

// 10. Moduli descriptors.
CriterionResult moduli(Rng&) {
  CriterionResult res{10, "moduli descriptors", false, 0, ""};
  Tally t;
  for (int c2 = 0; c2 <= 10; ++c2) {
    const auto m = moduli_dimension(std::nullopt, c2);
    t.expect(m.dim == 4 * c2 && m.nonempty == (c2 > 0), "M_{delta,c2} for c2=" + std::to_string(c2));
  }
  bool threw = false;
  try {
    moduli_dimension(std::nullopt, -1);
  } catch (const DomainError&) {
    threw = true;
  }
  t.expect(threw, "c2 < 0 must be rejected");
  for (int mass = 1; mass <= 5; ++mass)
    for (int charge = 1; charge <= 5; ++charge) {
      const auto m = monopole_parameters(mass, charge);
      t.expect(m.dim == 2 * charge && m.parametrization.dimension() == m.dim,
               "monopole dim for k=" + std::to_string(charge));
      t.expect(m.parametrization.projection_space_dim == 2 * charge - 2, "projection space dim");
      if (charge == 1)
        t.expect(m.parametrization.base == "D_" + std::to_string(mass) + " x Pic^1(T_1)",
                 "k = 1 base is D_m x Pic^1(T_1)");
    }
  res.pass = t.ok();
  res.detail = t.summary();
  return res;
}

void print(std::ostream& out, const CriterionResult& r) {
  out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << " ("
      << std::fixed;
  out.precision(3);
  out << r.seconds << " s)" << std::endl;
  out.unsetf(std::ios::fixed);
}

}  // namespace

Report run(std::ostream& out, std::uint64_t seed) {
  using Fn = CriterionResult (*)(Rng&);
  const Fn criteria[] = {cohomology_tables,  degree_normalisations, domain_geometry,
                         stability_oracle,   modification_bookkeeping, spectral_arithmetic,
                         poisson,            higher_stability,      cover_table,
                         moduli};
  Report report;
  const auto start = Clock::now();
  int id = 1;
  for (Fn f : criteria) {
    Rng rng(seed + static_cast<std::uint64_t>(id));
    const auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = f(rng);
    } catch (const std::exception& e) {
      r = CriterionResult{id, "criterion " + std::to_string(id), false, 0, std::string("exception: ") + e.what()};
    }
    r.seconds = seconds_since(t0);
    print(out, r);
    report.results.push_back(r);
    ++id;
  }
  report.total_seconds = seconds_since(start);
  CriterionResult total{11, "full suite under 60 s", report.total_seconds < 60.0, report.total_seconds,
                        std::to_string(report.total_seconds).substr(0, 6) + " s total"};
  print(out, total);
  report.results.push_back(total);
  out << report.passed() << "/" << report.results.size() << " criteria passed" << std::endl;
  return report;
}

}  // namespace hopf::acceptance
