#include "hopf/covers.hpp"

#include <cmath>
#include <numbers>

#include "hopf/error.hpp"

namespace hopf {

const char* to_string(Branch b) {
  switch (b) {
    case Branch::Empty: return "0";
    case Branch::T1: return "t1";
    case Branch::T2: return "t2";
    case Branch::T1T2: return "t1t2";
  }
  return "0";
}

Branch branch_from_string(const std::string& s) {
  if (s == "0" || s == "empty") return Branch::Empty;
  if (s == "t1") return Branch::T1;
  if (s == "t2") return Branch::T2;
  if (s == "t1t2" || s == "t1+t2") return Branch::T1T2;
  throw DomainError("unknown branch divisor '" + s + "' (expected 0, t1, t2, t1t2)");
}

std::string result_name(const CoverResult& r) {
  struct {
    std::string operator()(const DisconnectedCopies&) const { return "disconnected"; }
    std::string operator()(const UnramifiedHopf&) const { return "unramified-hopf"; }
    std::string operator()(const RamifiedHopf&) const { return "ramified-hopf"; }
    std::string operator()(const NonPrimary&) const { return "non-primary"; }
  } v;
  return std::visit(v, r);
}

namespace {

std::complex<double> principal_root(std::complex<double> z, int r) {
  return std::pow(z, 1.0 / r);
}

}  // namespace

CoverDescriptor classify_cyclic_cover(const HopfManifold& X, int r, Branch branch,
                                      std::optional<int> k, BetaConvention beta) {
  if (X.n() != 2 || !X.is_generic())
    throw PreconditionError("cyclic covers are classified on generic Hopf surfaces only");
  if (r < 2) throw DomainError("cover degree r must be >= 2");
  if (k && branch != Branch::Empty)
    throw DomainError("the order k only applies to an empty branch divisor");

  CoverDescriptor out;
  out.r = r;
  out.branch = branch;
  out.k = k;
  out.base_mu.assign(X.mu().begin(), X.mu().end());
  const auto mu1 = X.mu(1), mu2 = X.mu(2);
  switch (branch) {
    case Branch::Empty: {
      if (!k) throw DomainError("an empty branch divisor needs the order k of the line bundle");
      if (*k < 0 || *k > r || (*k > 0 && r % *k != 0))
        throw DomainError("k must satisfy 0 <= k <= r and k | r");
      out.branch_bundle = Factor::identity(2);
      if (*k == 0) {
        out.result = DisconnectedCopies{r, std::nullopt};
      } else {
        UnramifiedHopf y{std::pow(mu1, *k), std::pow(mu2, *k)};
        if (*k == r)
          out.result = y;
        else
          out.result = DisconnectedCopies{r / *k, y};
      }
      break;
    }
    case Branch::T1:
      out.branch_bundle = Factor::monomial({0, 1});
      out.result = RamifiedHopf{mu1, principal_root(mu2, r), {1, r}};
      break;
    case Branch::T2:
      out.branch_bundle = Factor::monomial({1, 0});
      out.result = RamifiedHopf{principal_root(mu1, r), mu2, {r, 1}};
      break;
    case Branch::T1T2: {
      out.branch_bundle = Factor::monomial({1, 1});
      const auto b = beta == BetaConvention::Proof ? principal_root(mu2 / mu1, r)
                                                   : principal_root(mu1, r);
      out.result = NonPrimary{-r, b, mu1};
      break;
    }
  }
  return out;
}

std::string to_string(const GroupDescriptor& g) {
  std::string s;
  if (g.free_rank > 0) s = g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
  for (int t : g.torsion) s += (s.empty() ? "" : " + ") + std::string("Z_") + std::to_string(t);
  return s.empty() ? "0" : s;
}

HomologyTable nonprimary_homology(int d) {
  if (d == 0) throw DomainError("non-primary Hopf surfaces need d != 0");
  const int t = std::abs(d);
  std::vector<int> tors;
  if (t > 1) tors.push_back(t);
  HomologyTable h;
  h.H[0] = {1, {}};
  h.H[1] = {1, {}};
  h.H[2] = {0, tors};
  h.H[3] = {1, tors};
  h.H[4] = {1, {}};
  return h;
}

Pushforward pushforward_rank2(const CoverDescriptor& cover, const Factor& M) {
  Pushforward out;
  out.rank = cover.r;
  // c1 of every line bundle on Y is torsion, so c2 = -phi_*(c1^2) vanishes.
  out.c2 = 0;
  out.filtrable = true;
  if (!M.is_identity()) return out;

  // phi_* O_Y = sum_j Lcal^{-j}, Lcal^r = O_X(B).
  std::complex<double> root{1.0, 0.0};
  const int r = cover.r;
  switch (cover.branch) {
    case Branch::Empty:
      if (cover.k && *cover.k > 0) root = std::polar(1.0, 2.0 * std::numbers::pi / *cover.k);
      break;
    case Branch::T1:
    case Branch::T2:
    case Branch::T1T2:
      if (cover.branch_bundle.n() != 2 || cover.base_mu.size() != 2)
        throw PreconditionError("cover descriptor lacks its base data");
      root = principal_root(cover.branch_bundle.value(cover.base_mu), r);
      break;
  }
  for (int j = 0; j < r; ++j) out.summands.push_back(Factor::constant(2, std::pow(root, -j)));
  return out;
}

}  // namespace hopf
