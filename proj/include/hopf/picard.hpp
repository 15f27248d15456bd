#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hopf/config.hpp"
#include "hopf/factor.hpp"
#include "hopf/manifold.hpp"

namespace hopf {

// L_a: the quotient of the trivial line bundle by (z, t) -> (mu z, a t).
struct LineBundle {
  Factor a;
  HopfManifold X;

  LineBundle(Factor a_, HopfManifold X_);
};

// (h^0, ..., h^n) of L_a.
struct CohomologyVector {
  std::vector<int> h;
  friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

// Gauduchon degree. Classical: ln|a| / ln|mu|, so deg L_{mu^m} = m.
// Every other kind: -ln|a|, so deg L_{mu_i^m} > 0 for m > 0.
double degree(const LineBundle& L);
double degree(const Factor& a, const HopfManifold& X);

// h^p(P^N, O(m)).
std::int64_t bott_dimension(int N, int m, int p);

// Classical and generic tables only; other kinds throw UnsupportedKind.
CohomologyVector cohomology_dims(const LineBundle& L, const Config& cfg = {});

// Class of L_a in Pic^0(T_i) = C* / <mu_i>.
struct CurveClass {
  int curve = 1;
  Factor remaining;  // a with the mu_i exponent deleted
  std::complex<double> residual;  // value of `remaining`, on |mu_i| < |.| <= 1
  std::complex<double> q;  // mu_i

  bool trivial(double tol = 1e-9) const;
};

CurveClass restrict_to_curve(const LineBundle& L, int i);

}  // namespace hopf
