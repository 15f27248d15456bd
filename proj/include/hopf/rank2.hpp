#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopf/config.hpp"
#include "hopf/elliptic.hpp"
#include "hopf/factor.hpp"
#include "hopf/manifold.hpp"
#include "hopf/projective.hpp"

namespace hopf {

// A jump of a rank-2 bundle over an elliptic curve. curve in 1..n is the axis
// curve T_i; curve 0 is another fibre of a classical surface, located by
// `fibre`. heights = (h_0, ..., h_{l-1}), one per allowable modification.
struct JumpRecord {
  int curve = 1;
  std::vector<int> heights;
  std::optional<P1Point> fibre;

  int length() const { return static_cast<int>(heights.size()); }
  int multiplicity() const;
  int height() const { return heights.empty() ? 0 : heights.front(); }
  P1Point base_point() const;

  friend bool operator==(const JumpRecord&, const JumpRecord&) = default;
};

// Zero-dimensional Z of the Serre construction, kept only as counts: the
// constructions never need positions off the curves.
struct PointSet {
  std::vector<int> on_curve;  // multiplicity on T_1, ..., T_n
  std::vector<std::pair<P1Point, int>> on_fibres;  // classical fibres other than T_1, T_2
  int off_curve = 0;

  int count() const;
};

// 0 -> L_sub -> E -> L_{det/sub} (x) I_Z -> 0 on a Hopf surface.
struct FiltrableRank2 {
  HopfManifold X;
  Factor det;
  int c2 = 0;
  Factor sub;
  std::vector<JumpRecord> jumps;
  std::vector<int> z_on_curve;  // points of Z on T_1, ..., T_n

  Factor quotient() const { return det / sub; }
  int jump_multiplicity() const;
  // c2 minus the jump multiplicities: points of Z lying on no jump curve.
  int off_curve_points() const { return c2 - jump_multiplicity(); }
  // Sum of lengths of the jumps over T_i (i >= 1) or over all curves (i = 0
  // on a classical surface).
  int total_length(int curve) const;
  int total_length() const;

  // Throws InvariantViolation unless c2 >= 0, jump heights are positive, the
  // per-curve multiplicities match z_on_curve and sum to at most c2.
  void validate() const;
};

FiltrableRank2 serre_extension(const HopfManifold& X, const Factor& L, const Factor& Lprime,
                               const PointSet& Z);

// Extensions 0 -> L_a -> E -> L_b -> 0 on a generic surface.
enum class ExtensionClass { SplitOnly, SplitOrUniqueNonSplit };
const char* to_string(ExtensionClass c);

struct ExtensionClassification {
  ExtensionClass cls;
  std::optional<std::vector<int>> m;  // a/b = mu^m, m >= 0, when it exists
};

ExtensionClassification classify_extension_c2zero(const Factor& a, const Factor& b,
                                                  const HopfManifold& X, const Config& cfg = {});

// Upper-triangular factor of automorphy ((a, eps z^m), (0, b)).
struct AutomorphyFactor2 {
  Factor a;
  Factor b;
  std::vector<int> m;
  int eps = 0;
};

enum class ExtensionChoice { Split, NonSplit };

// eps = 1 needs a = b mu^m with m >= 0; otherwise InvariantViolation. A given
// m must agree with the detected one.
AutomorphyFactor2 automorphy_factor(const ExtensionClassification& cls, ExtensionChoice choice,
                                    const Factor& a, const Factor& b,
                                    const std::optional<std::vector<int>>& m = std::nullopt);

// Multiplier whose inverse a modification along the jump curve contributes
// to the determinant.
Factor modification_divisor(const HopfManifold& X, const JumpRecord& jump, DetConvention conv);

// Allowable modification along the first jump over `curve` (fibre selects a
// classical fibre when curve = 0). lambda has degree -h where h is the
// current height of that jump.
FiltrableRank2 elementary_modification(const FiltrableRank2& E, int curve, const EllipticPic& lambda,
                                       DetConvention conv = DetConvention::Theorem,
                                       const std::optional<P1Point>& fibre = std::nullopt);

// Inverse of elementary_modification: lambda of degree h >= 1 creates (or
// raises) a jump over `curve` with new leading height h.
FiltrableRank2 add_jump(const FiltrableRank2& E, int curve, const EllipticPic& lambda,
                        DetConvention conv = DetConvention::Theorem,
                        const std::optional<P1Point>& fibre = std::nullopt);

// Applies allowable modifications until no jump is left.
FiltrableRank2 remove_all_jumps(const FiltrableRank2& E, DetConvention conv = DetConvention::Theorem);

// --- generic manifolds of dimension n >= 3 ---

// H_{k_i k_j} = p({z_i^{k_i} = z_j^{k_j} = 0}); indices are 1-based.
struct CodimTwoComponent {
  int i = 1;
  int j = 2;
  int k_i = 1;
  int k_j = 1;
  friend bool operator==(const CodimTwoComponent&, const CodimTwoComponent&) = default;
};

// Input description of E = L_twist (x) E'. With z empty, E' is an extension
// 0 -> L_ratio -> E' -> O -> 0 (split or not). Otherwise E' is the extension
// of I_Z by L_{ratio mu_i^{-k_i} mu_j^{-k_j}}, where ratio must be a monomial
// mu^m and the entries of m at i and j are ignored.
struct HigherDescriptor {
  Factor twist;
  Factor ratio;
  bool split = false;
  std::vector<CodimTwoComponent> z;

  static HigherDescriptor line(const Factor& twist, std::vector<int> m, bool split);
  static HigherDescriptor ideal(const Factor& twist, std::vector<int> m, CodimTwoComponent c);
  // Normalises 0 -> L_sub -> E -> L_quot -> 0 to twist = quot, ratio = sub/quot.
  static HigherDescriptor from_extension(const Factor& sub, const Factor& quot, bool split);
};

struct Decomposable {
  Factor a;
  Factor b;  // deg a >= deg b
};
struct LineExtension {
  Factor a;
  std::vector<int> m;
};
struct IdealExtension {
  Factor a;
  std::vector<int> m;  // entries at i, j are zero
  CodimTwoComponent component;
};

using HigherExtensionType = std::variant<Decomposable, LineExtension, IdealExtension>;

std::string higher_type_name(const HigherExtensionType& t);

HigherExtensionType classify_rank2_higher(const HigherDescriptor& desc, const HopfManifold& X,
                                          const Config& cfg = {});

enum class Filtrability { Filtrable, GenericallyNonFiltrable, AlwaysFiltrable };
const char* to_string(Filtrability f);

Filtrability filtrability_verdict(int n, bool c1_torsion, int c2);

}  // namespace hopf
