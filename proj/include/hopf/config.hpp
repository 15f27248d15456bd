#pragma once

#include <optional>

namespace hopf {

// Which multiplier a modification along T_i divides the determinant by.
//   theorem: T_i contributes mu_i   (det -> det * mu_1^-l1 * mu_2^-l2)
//   lemma:   O_X(T_1) = L_{mu_2}, O_X(T_2) = L_{mu_1}
enum class DetConvention { Theorem, Lemma };

struct Config {
  double tol = 1e-9;
  int exp_bound = 32;
  DetConvention det_convention = DetConvention::Theorem;
  // Base dimension N of the projective space in the classical cohomology
  // table. Unset means n - 1.
  std::optional<int> classical_base_dim;

  // Throws DomainError unless tol > 0 and exp_bound >= 1.
  void validate() const;
};

}  // namespace hopf
