#pragma once

#include <complex>
#include <string>
#include <variant>

namespace hopf {

// Reduce z into the fundamental annulus |q| < |w| <= 1 of C* / <q>.
std::complex<double> reduce_to_annulus(std::complex<double> z, std::complex<double> q);

// Equality of classes in C* / <q>: z / w in q^Z up to tol (log comparison).
bool same_class(std::complex<double> z, std::complex<double> w, std::complex<double> q,
                double tol = 1e-9);

// Line bundle on the elliptic curve T = C* / <q>: degree d and a class in
// Pic^0(T) = C* / <q> stored on the fundamental annulus.
struct EllipticPic {
  int d = 0;
  std::complex<double> cls{1.0, 0.0};
  std::complex<double> q{0.5, 0.0};

  EllipticPic() = default;
  EllipticPic(int degree, std::complex<double> cls_, std::complex<double> q_);

  bool trivial_class(double tol = 1e-9) const { return same_class(cls, 1.0, q, tol); }
  EllipticPic dual() const;
  EllipticPic tensor(const EllipticPic& o) const;
};

// h^0 of a line bundle on an elliptic curve.
int h0_line(const EllipticPic& L, double tol = 1e-9);

// Restriction types of a rank-2 bundle to an elliptic curve.
struct RegularDistinct {
  std::complex<double> lambda1;
  std::complex<double> lambda2;
};
struct NonRegularSplit {
  std::complex<double> lambda;
};
struct AtiyahNonSplit {
  std::complex<double> lambda;
};
// lambda + (lambda^* tensor delta) with deg lambda = -height.
struct UnstableJump {
  int height = 1;
  std::complex<double> lambda{1.0, 0.0};
};

using SplittingType = std::variant<RegularDistinct, NonRegularSplit, AtiyahNonSplit, UnstableJump>;

std::string splitting_name(const SplittingType& st);
// Parses "regular", "nonregular", "atiyah" and "jump:<h>".
SplittingType splitting_from_string(const std::string& s);

// dim H^0(T, ad E|_T) per splitting type.
int h0_ad(const SplittingType& st);

// Regular restrictions have one-dimensional trace-free endomorphisms.
// atiyah_is_regular = false treats the non-split restriction as non-generic.
bool is_regular(const SplittingType& st, bool atiyah_is_regular = true);

// Splitting type of lambda + lambda^{-1} delta (both of degree 0) on C*/<q>.
SplittingType degree_zero_splitting(std::complex<double> lambda, std::complex<double> delta,
                                    std::complex<double> q, double tol = 1e-9);

// Degree-2 even function on C*/<q> (Tate's X coordinate), invariant under
// u -> q u and u -> 1/u. Returns false in `finite` at the pole u in q^Z.
struct TateValue {
  std::complex<double> x;
  bool finite = true;
};
TateValue tate_x(std::complex<double> u, std::complex<double> q);

}  // namespace hopf
