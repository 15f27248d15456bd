#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopf/factor.hpp"
#include "hopf/manifold.hpp"

namespace hopf {

enum class Branch { Empty, T1, T2, T1T2 };
const char* to_string(Branch b);
Branch branch_from_string(const std::string& s);  // "0", "t1", "t2", "t1t2"

// beta^r = mu_1^-1 mu_2 (Proof) or beta^r = mu_1 (Statement).
enum class BetaConvention { Proof, Statement };

struct UnramifiedHopf {
  std::complex<double> mu1;
  std::complex<double> mu2;
};

struct DisconnectedCopies {
  int count = 1;
  // nullopt: copies of X itself.
  std::optional<UnramifiedHopf> base;
};

struct RamifiedHopf {
  std::complex<double> mu1;
  std::complex<double> mu2;
  std::vector<int> map_exponents;  // (z1, z2) -> (z1^e1, z2^e2)
};

// Theta*_d / (beta, mu).
struct NonPrimary {
  int d = -2;
  std::complex<double> beta;
  std::complex<double> mu;
};

using CoverResult = std::variant<DisconnectedCopies, UnramifiedHopf, RamifiedHopf, NonPrimary>;

struct CoverDescriptor {
  int r = 2;
  Branch branch = Branch::Empty;
  std::optional<int> k;  // order of the line bundle when branch is empty
  Factor branch_bundle;  // O_X(B)
  std::vector<std::complex<double>> base_mu;
  CoverResult result;
};

std::string result_name(const CoverResult& r);

CoverDescriptor classify_cyclic_cover(const HopfManifold& X, int r, Branch branch,
                                      std::optional<int> k = std::nullopt,
                                      BetaConvention beta = BetaConvention::Proof);

struct GroupDescriptor {
  int free_rank = 0;
  std::vector<int> torsion;  // orders > 1
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

std::string to_string(const GroupDescriptor& g);

struct HomologyTable {
  GroupDescriptor H[5];
};

HomologyTable nonprimary_homology(int d);

struct Pushforward {
  int rank = 2;
  int c2 = 0;
  bool filtrable = true;
  // Line bundle summands on X, filled when M is trivial.
  std::vector<Factor> summands;
};

Pushforward pushforward_rank2(const CoverDescriptor& cover, const Factor& M);

}  // namespace hopf
