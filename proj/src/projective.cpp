#include "hopf/projective.hpp"

#include <cmath>

#include "hopf/error.hpp"

namespace hopf {

P1Point::P1Point(std::complex<double> u, std::complex<double> v) {
  const double ru = std::abs(u), rv = std::abs(v);
  if (!(ru > 0.0) && !(rv > 0.0)) throw DomainError("[0 : 0] is not a point of P^1");
  if (!std::isfinite(ru) || !std::isfinite(rv)) throw DomainError("non-finite P^1 coordinates");
  if (ru >= rv) {
    v_ = v / u;
    u_ = 1.0;
  } else {
    u_ = u / v;
    v_ = 1.0;
  }
}

bool P1Point::approx_equal(const P1Point& o, double tol) const {
  // |u v' - u' v| is the numerator of the chordal distance; both points are
  // normalised so the denominator lies in [1, 2].
  return std::abs(u_ * o.v_ - o.u_ * v_) <= tol;
}

}  // namespace hopf
