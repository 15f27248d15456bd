#include "hopf/rank2.hpp"

#include <algorithm>
#include <string>

#include "hopf/error.hpp"
#include "hopf/picard.hpp"
#include "hopf/relations.hpp"

namespace hopf {

int JumpRecord::multiplicity() const {
  int m = 0;
  for (int h : heights) m += h;
  return m;
}

P1Point JumpRecord::base_point() const {
  if (curve == 0) {
    if (!fibre) throw InvariantViolation("fibre jump without a base point");
    return *fibre;
  }
  return axis_point(curve);
}

int PointSet::count() const {
  int c = off_curve;
  for (int v : on_curve) c += v;
  for (const auto& [x, k] : on_fibres) c += k;
  return c;
}

int FiltrableRank2::jump_multiplicity() const {
  int total = 0;
  for (const auto& j : jumps) total += j.multiplicity();
  return total;
}

int FiltrableRank2::total_length(int curve) const {
  int l = 0;
  for (const auto& j : jumps)
    if (j.curve == curve) l += j.length();
  return l;
}

int FiltrableRank2::total_length() const {
  int l = 0;
  for (const auto& j : jumps) l += j.length();
  return l;
}

void FiltrableRank2::validate() const {
  if (X.n() != 2) throw InvariantViolation("filtrable rank-2 descriptors live on surfaces");
  if (det.n() != 2 || sub.n() != 2) throw InvariantViolation("factor length must be 2");
  if (c2 < 0) throw InvariantViolation("c2 must be non-negative");
  if (z_on_curve.size() != 2) throw InvariantViolation("z_on_curve needs one entry per curve");
  std::vector<int> per_curve(2, 0);
  for (std::size_t a = 0; a < jumps.size(); ++a) {
    const auto& j = jumps[a];
    if (j.heights.empty()) throw InvariantViolation("jump without heights");
    for (int h : j.heights)
      if (h < 1) throw InvariantViolation("jump heights must be positive");
    if (j.curve < 0 || j.curve > 2) throw InvariantViolation("jump curve index out of range");
    if (j.curve == 0) {
      if (!X.is_classical()) throw InvariantViolation("only classical surfaces jump off T_1, T_2");
      if (!j.fibre) throw InvariantViolation("fibre jump without a base point");
    } else {
      per_curve[static_cast<std::size_t>(j.curve - 1)] += j.multiplicity();
    }
    for (std::size_t b = 0; b < a; ++b) {
      const auto& o = jumps[b];
      const bool same = o.curve == j.curve &&
                        (j.curve != 0 || o.fibre->approx_equal(*j.fibre));
      if (same) throw InvariantViolation("two jump records over the same curve");
    }
  }
  for (std::size_t i = 0; i < 2; ++i) {
    if (z_on_curve[i] < 0) throw InvariantViolation("negative point count");
    if (per_curve[i] != z_on_curve[i])
      throw InvariantViolation("jump multiplicity over T_" + std::to_string(i + 1) +
                               " does not match the points of Z on it");
  }
  if (jump_multiplicity() > c2)
    throw InvariantViolation("jump multiplicities exceed c2");
}

FiltrableRank2 serre_extension(const HopfManifold& X, const Factor& L, const Factor& Lprime,
                               const PointSet& Z) {
  if (X.n() != 2) throw DomainError("the Serre construction is implemented on surfaces");
  if (Z.off_curve < 0) throw DomainError("negative point count");
  FiltrableRank2 E{X, L * Lprime, Z.count(), L, {}, std::vector<int>(2, 0)};
  if (!Z.on_curve.empty() && Z.on_curve.size() != 2)
    throw DomainError("on_curve needs one entry per axis curve");
  for (std::size_t i = 0; i < Z.on_curve.size(); ++i) {
    if (Z.on_curve[i] < 0) throw DomainError("negative point count");
    if (Z.on_curve[i] == 0) continue;
    E.jumps.push_back(JumpRecord{static_cast<int>(i) + 1, {Z.on_curve[i]}, std::nullopt});
    E.z_on_curve[i] = Z.on_curve[i];
  }
  for (const auto& [x, k] : Z.on_fibres) {
    if (k < 0) throw DomainError("negative point count");
    if (k == 0) continue;
    if (!X.is_classical()) throw DomainError("only classical surfaces have further elliptic fibres");
    int axis = 0;
    for (int i = 1; i <= 2; ++i)
      if (x.approx_equal(axis_point(i))) axis = i;
    auto it = std::find_if(E.jumps.begin(), E.jumps.end(), [&](const JumpRecord& j) {
      return axis ? j.curve == axis : (j.curve == 0 && j.fibre->approx_equal(x));
    });
    if (it != E.jumps.end()) {
      it->heights.front() += k;
    } else if (axis) {
      E.jumps.push_back(JumpRecord{axis, {k}, std::nullopt});
    } else {
      E.jumps.push_back(JumpRecord{0, {k}, x});
    }
    if (axis) E.z_on_curve[static_cast<std::size_t>(axis - 1)] += k;
  }
  E.validate();
  return E;
}

const char* to_string(ExtensionClass c) {
  return c == ExtensionClass::SplitOnly ? "split-only" : "split-or-unique-nonsplit";
}

ExtensionClassification classify_extension_c2zero(const Factor& a, const Factor& b,
                                                  const HopfManifold& X, const Config& cfg) {
  if (X.n() != 2 || !X.is_generic())
    throw PreconditionError("extension classification needs a generic Hopf surface");
  auto m = detect_monomial(a / b, X, SignConstraint::NonNegative, cfg);
  if (m) return {ExtensionClass::SplitOrUniqueNonSplit, std::move(m)};
  return {ExtensionClass::SplitOnly, std::nullopt};
}

AutomorphyFactor2 automorphy_factor(const ExtensionClassification& cls, ExtensionChoice choice,
                                    const Factor& a, const Factor& b,
                                    const std::optional<std::vector<int>>& m) {
  if (a.n() != b.n()) throw DomainError("factors over different n");
  AutomorphyFactor2 out{a, b, std::vector<int>(static_cast<std::size_t>(a.n()), 0), 0};
  if (choice == ExtensionChoice::Split) {
    if (m) {
      if (m->size() != out.m.size()) throw DomainError("exponent vector length mismatch");
      out.m = *m;
    }
    return out;
  }
  if (cls.cls != ExtensionClass::SplitOrUniqueNonSplit || !cls.m)
    throw InvariantViolation("a non-split extension needs a = b mu^m with m >= 0");
  if (m && *m != *cls.m)
    throw InvariantViolation("exponents disagree with the detected relation a/b = mu^m");
  out.m = *cls.m;
  out.eps = 1;
  return out;
}

Factor modification_divisor(const HopfManifold& X, const JumpRecord& jump, DetConvention conv) {
  if (X.n() != 2) throw DomainError("elementary modifications are implemented on surfaces");
  int index = 1;
  if (jump.curve == 1 || jump.curve == 2)
    index = conv == DetConvention::Theorem ? jump.curve : 3 - jump.curve;
  else if (jump.curve != 0)
    throw DomainError("jump curve index out of range");
  return divisor_to_line_bundle(X, Divisor::hypersurface(2, index));
}

namespace {

std::vector<JumpRecord>::iterator find_jump(std::vector<JumpRecord>& jumps, int curve,
                                            const std::optional<P1Point>& fibre) {
  return std::find_if(jumps.begin(), jumps.end(), [&](const JumpRecord& j) {
    if (j.curve != curve) return false;
    if (curve != 0) return true;
    return fibre && j.fibre && j.fibre->approx_equal(*fibre);
  });
}

void check_curve_modulus(const FiltrableRank2& E, int curve, const EllipticPic& lambda) {
  const std::complex<double> q = curve == 0 ? E.X.mu(1) : E.X.mu(curve);
  if (std::abs(lambda.q - q) > 1e-9 * std::abs(q))
    throw PreconditionError("lambda does not live on the jump curve");
}

}  // namespace

FiltrableRank2 elementary_modification(const FiltrableRank2& E, int curve, const EllipticPic& lambda,
                                       DetConvention conv, const std::optional<P1Point>& fibre) {
  FiltrableRank2 out = E;
  auto it = find_jump(out.jumps, curve, fibre);
  if (it == out.jumps.end())
    throw PreconditionError("no jump over curve " + std::to_string(curve));
  const int h = it->height();
  if (lambda.d != -h)
    throw PreconditionError("lambda must have degree -" + std::to_string(h) +
                            " (the current height), got " + std::to_string(lambda.d));
  check_curve_modulus(E, curve, lambda);
  out.det = out.det / modification_divisor(out.X, *it, conv);
  out.c2 -= h;
  if (curve >= 1) out.z_on_curve[static_cast<std::size_t>(curve - 1)] -= h;
  it->heights.erase(it->heights.begin());
  if (it->heights.empty()) out.jumps.erase(it);
  out.validate();
  return out;
}

FiltrableRank2 add_jump(const FiltrableRank2& E, int curve, const EllipticPic& lambda,
                        DetConvention conv, const std::optional<P1Point>& fibre) {
  if (lambda.d < 1) throw PreconditionError("adding a jump needs lambda of positive degree");
  if (curve < 0 || curve > 2) throw DomainError("jump curve index out of range");
  if (curve == 0 && !fibre) throw PreconditionError("fibre jumps need a base point");
  check_curve_modulus(E, curve, lambda);
  FiltrableRank2 out = E;
  const int h = lambda.d;
  auto it = find_jump(out.jumps, curve, fibre);
  if (it == out.jumps.end()) {
    out.jumps.push_back(JumpRecord{curve, {}, curve == 0 ? fibre : std::nullopt});
    it = std::prev(out.jumps.end());
  }
  it->heights.insert(it->heights.begin(), h);
  out.det = out.det * modification_divisor(out.X, *it, conv);
  out.c2 += h;
  if (curve >= 1) out.z_on_curve[static_cast<std::size_t>(curve - 1)] += h;
  out.validate();
  return out;
}

FiltrableRank2 remove_all_jumps(const FiltrableRank2& E, DetConvention conv) {
  FiltrableRank2 cur = E;
  while (!cur.jumps.empty()) {
    const JumpRecord& j = cur.jumps.front();
    const std::complex<double> q = j.curve == 0 ? cur.X.mu(1) : cur.X.mu(j.curve);
    cur = elementary_modification(cur, j.curve, EllipticPic(-j.height(), 1.0, q), conv, j.fibre);
  }
  return cur;
}

HigherDescriptor HigherDescriptor::line(const Factor& twist, std::vector<int> m, bool split) {
  return HigherDescriptor{twist, Factor::monomial(std::move(m)), split, {}};
}

HigherDescriptor HigherDescriptor::ideal(const Factor& twist, std::vector<int> m,
                                         CodimTwoComponent c) {
  return HigherDescriptor{twist, Factor::monomial(std::move(m)), false, {c}};
}

HigherDescriptor HigherDescriptor::from_extension(const Factor& sub, const Factor& quot,
                                                  bool split) {
  return HigherDescriptor{quot, sub / quot, split, {}};
}

std::string higher_type_name(const HigherExtensionType& t) {
  struct {
    std::string operator()(const Decomposable&) const { return "decomposable"; }
    std::string operator()(const LineExtension&) const { return "line-extension"; }
    std::string operator()(const IdealExtension&) const { return "ideal-extension"; }
  } v;
  return std::visit(v, t);
}

namespace {

Decomposable ordered(const Factor& x, const Factor& y, const HopfManifold& X) {
  if (degree(y, X) > degree(x, X)) return {y, x};
  return {x, y};
}

Factor axis_power(int n, int i, int e) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i - 1)] = e;
  return Factor::monomial(std::move(v));
}

void check_component(const CodimTwoComponent& c, int n) {
  if (c.i < 1 || c.i > n || c.j < 1 || c.j > n || c.i == c.j)
    throw ClassificationError("H_{k_i k_j} needs distinct indices in [1, n]");
  if (c.k_i < 1 || c.k_j < 1)
    throw ClassificationError("H_{k_i k_j} needs k_i, k_j >= 1");
}

}  // namespace

HigherExtensionType classify_rank2_higher(const HigherDescriptor& desc, const HopfManifold& X,
                                          const Config& cfg) {
  const int n = X.n();
  if (n < 3 || !X.is_generic())
    throw PreconditionError("higher classification needs a generic Hopf manifold with n >= 3");
  if (desc.twist.n() != n || desc.ratio.n() != n)
    throw DomainError("descriptor factors must have n entries");
  const Factor& a = desc.twist;

  if (desc.z.empty()) {
    if (desc.split) return ordered(a * desc.ratio, a, X);
    auto m = detect_monomial(desc.ratio, X, SignConstraint::NonNegative, cfg);
    if (!m)
      throw ClassificationError(
          "a non-trivial extension of O by L_c exists only for c = mu^m with m >= 0");
    return LineExtension{a, std::move(*m)};
  }

  if (desc.z.size() == 1) {
    const CodimTwoComponent c = desc.z.front();
    check_component(c, n);
    auto m = detect_monomial(desc.ratio, X, SignConstraint::Any, cfg);
    if (!m) throw ClassificationError("ideal extensions need a monomial sub-line-bundle twist");
    (*m)[static_cast<std::size_t>(c.i - 1)] = 0;
    (*m)[static_cast<std::size_t>(c.j - 1)] = 0;
    if (std::any_of(m->begin(), m->end(), [](int v) { return v < 0; }))
      throw ClassificationError(
          "no locally free extension of I_H: the remaining exponents must be non-negative");
    if (std::all_of(m->begin(), m->end(), [](int v) { return v == 0; }))
      return ordered(a * axis_power(n, c.i, -c.k_i), a * axis_power(n, c.j, -c.k_j), X);
    return IdealExtension{a, std::move(*m), c};
  }

  if (desc.z.size() == 2) {
    if (n != 3)
      throw ClassificationError(
          "for n >= 4 the only admissible codimension-2 loci are single H_{k_i k_j}");
    CodimTwoComponent c1 = desc.z[0], c2 = desc.z[1];
    check_component(c1, n);
    check_component(c2, n);
    // Bring both to the form H_{k_i k_j} + H_{k_i k_l} with a shared index i.
    auto share = [](CodimTwoComponent& x, CodimTwoComponent& y) {
      for (int s = 0; s < 4; ++s) {
        if (x.i == y.i && x.k_i == y.k_i && x.j != y.j) return true;
        if (s % 2 == 0) std::swap(x.i, x.j), std::swap(x.k_i, x.k_j);
        else std::swap(y.i, y.j), std::swap(y.k_i, y.k_j);
      }
      return false;
    };
    if (!share(c1, c2))
      throw ClassificationError("Z must be H_{k_i k_j} + H_{k_i k_l} with j != l");
    // Such extensions always split.
    Factor first = a * axis_power(n, c1.i, -c1.k_i);
    Factor second = a * axis_power(n, c1.j, -c1.k_j) * axis_power(n, c2.j, -c2.k_j);
    return ordered(first, second, X);
  }

  throw ClassificationError("Z may have at most two components");
}

const char* to_string(Filtrability f) {
  switch (f) {
    case Filtrability::Filtrable: return "filtrable";
    case Filtrability::GenericallyNonFiltrable: return "generically-non-filtrable";
    case Filtrability::AlwaysFiltrable: return "always-filtrable";
  }
  return "filtrable";
}

Filtrability filtrability_verdict(int n, bool c1_torsion, int c2) {
  if (n < 2) throw DomainError("Hopf manifolds have n >= 2");
  if (c2 < 0) throw DomainError("c2 must be non-negative");
  if (n >= 3) return Filtrability::AlwaysFiltrable;
  if (!c1_torsion)
    throw DomainError("H^2(X, Z) vanishes on a diagonal Hopf surface, so c1 is always torsion");
  return c2 == 0 ? Filtrability::Filtrable : Filtrability::GenericallyNonFiltrable;
}

}  // namespace hopf
