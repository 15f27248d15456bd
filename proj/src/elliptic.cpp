#include "hopf/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "hopf/error.hpp"
#include "hopf/lattice_search.hpp"

namespace hopf {

namespace {

void check_modulus(std::complex<double> q) {
  const double r = std::abs(q);
  if (!(r > 0.0) || !(r < 1.0)) throw DomainError("elliptic curve modulus must satisfy 0 < |q| < 1");
}

}  // namespace

std::complex<double> reduce_to_annulus(std::complex<double> z, std::complex<double> q) {
  check_modulus(q);
  const std::complex<double> lz = complex_log(z);
  const std::complex<double> lq = complex_log(q);
  const double k = std::floor(lz.real() / lq.real());
  std::complex<double> w = std::exp(lz - k * lq);
  // Guard the half-open edge against rounding.
  if (std::abs(w) > 1.0) w *= q;
  if (std::abs(w) <= std::abs(q)) w /= q;
  return w;
}

bool same_class(std::complex<double> z, std::complex<double> w, std::complex<double> q, double tol) {
  check_modulus(q);
  const std::complex<double> diff = complex_log(z) - complex_log(w);
  const std::complex<double> lq = complex_log(q);
  const double k = std::nearbyint(diff.real() / lq.real());
  return log_is_unit(diff - k * lq, tol);
}

EllipticPic::EllipticPic(int degree, std::complex<double> cls_, std::complex<double> q_)
    : d(degree), cls(reduce_to_annulus(cls_, q_)), q(q_) {}

EllipticPic EllipticPic::dual() const { return EllipticPic(-d, 1.0 / cls, q); }

EllipticPic EllipticPic::tensor(const EllipticPic& o) const {
  if (o.q != q) throw DomainError("line bundles live on different elliptic curves");
  return EllipticPic(d + o.d, cls * o.cls, q);
}

int h0_line(const EllipticPic& L, double tol) {
  if (L.d > 0) return L.d;
  if (L.d < 0) return 0;
  return L.trivial_class(tol) ? 1 : 0;
}

std::string splitting_name(const SplittingType& st) {
  struct {
    std::string operator()(const RegularDistinct&) const { return "regular"; }
    std::string operator()(const NonRegularSplit&) const { return "nonregular"; }
    std::string operator()(const AtiyahNonSplit&) const { return "atiyah"; }
    std::string operator()(const UnstableJump& j) const { return "jump:" + std::to_string(j.height); }
  } v;
  return std::visit(v, st);
}

SplittingType splitting_from_string(const std::string& s) {
  if (s == "regular") return RegularDistinct{{1.0, 0.0}, {-1.0, 0.0}};
  if (s == "nonregular") return NonRegularSplit{{1.0, 0.0}};
  if (s == "atiyah") return AtiyahNonSplit{{1.0, 0.0}};
  if (s.rfind("jump:", 0) == 0) {
    std::size_t used = 0;
    int h = 0;
    try {
      h = std::stoi(s.substr(5), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() - 5 || h < 1)
      throw ParseError("jump height must be a positive integer in '" + s + "'");
    return UnstableJump{h, {1.0, 0.0}};
  }
  throw ParseError("unknown splitting type '" + s + "' (regular|nonregular|atiyah|jump:<h>)");
}

int h0_ad(const SplittingType& st) {
  struct {
    int operator()(const RegularDistinct&) const { return 1; }
    int operator()(const NonRegularSplit&) const { return 3; }
    int operator()(const AtiyahNonSplit&) const { return 1; }
    int operator()(const UnstableJump& j) const {
      if (j.height < 1) throw DomainError("jump height must be positive");
      return 2 * j.height + 1;
    }
  } v;
  return std::visit(v, st);
}

bool is_regular(const SplittingType& st, bool atiyah_is_regular) {
  if (std::holds_alternative<RegularDistinct>(st)) return true;
  if (std::holds_alternative<AtiyahNonSplit>(st)) return atiyah_is_regular;
  return false;
}

SplittingType degree_zero_splitting(std::complex<double> lambda, std::complex<double> delta,
                                    std::complex<double> q, double tol) {
  const std::complex<double> partner = delta / lambda;
  if (same_class(lambda, partner, q, tol))
    return NonRegularSplit{reduce_to_annulus(lambda, q)};
  return RegularDistinct{reduce_to_annulus(lambda, q), reduce_to_annulus(partner, q)};
}

TateValue tate_x(std::complex<double> u, std::complex<double> q) {
  check_modulus(q);
  u = reduce_to_annulus(u, q);
  // Pole at u = 1 (and at u = q, the other edge of the annulus).
  if (same_class(u, 1.0, q, 1e-12)) return {{0.0, 0.0}, false};

  const double rq = std::abs(q);
  const int terms =
      std::min(200000, static_cast<int>(std::ceil(std::log(1e-18) / std::log(rq))) + 2);
  auto term = [](std::complex<double> w) { return w / ((1.0 - w) * (1.0 - w)); };

  std::complex<double> sum = term(u);
  std::complex<double> qn{1.0, 0.0};
  std::complex<double> correction{0.0, 0.0};
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    sum += term(qn * u) + term(qn / u);
    correction += static_cast<double>(n) * qn / (1.0 - qn);
  }
  return {sum - 2.0 * correction, true};
}

}  // namespace hopf
