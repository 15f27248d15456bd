#pragma once

#include <complex>

namespace hopf {

// Point [u : v] of P^1, normalised so the larger-modulus coordinate is
// exactly 1. Affine coordinate u / v; v = 0 is infinity.
class P1Point {
 public:
  P1Point() : u_(0.0), v_(1.0) {}
  P1Point(std::complex<double> u, std::complex<double> v);

  static P1Point affine(std::complex<double> x) { return P1Point(x, 1.0); }
  static P1Point infinity() { return P1Point(1.0, 0.0); }

  std::complex<double> u() const { return u_; }
  std::complex<double> v() const { return v_; }
  bool is_infinity(double tol = 0.0) const { return std::abs(v_) <= tol; }
  // Only meaningful away from infinity.
  std::complex<double> affine_value() const { return u_ / v_; }

  // Chordal-style comparison on the normalised coordinates.
  bool approx_equal(const P1Point& o, double tol = 1e-9) const;

  friend bool operator==(const P1Point&, const P1Point&) = default;

 private:
  std::complex<double> u_;
  std::complex<double> v_;
};

// Base points of the axis curves in the classical fibration
// [z_1 : z_2]: T_1 = [1 : 0], T_2 = [0 : 1].
inline P1Point axis_point(int i) { return i == 1 ? P1Point::infinity() : P1Point::affine(0.0); }

}  // namespace hopf
