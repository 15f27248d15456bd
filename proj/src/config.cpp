#include "hopf/config.hpp"

#include <cmath>

#include "hopf/error.hpp"

namespace hopf {

void Config::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tol must be a positive number");
  if (exp_bound < 1) throw DomainError("exp_bound must be >= 1");
  if (classical_base_dim && *classical_base_dim < 1)
    throw DomainError("classical_base_dim must be >= 1");
}

}  // namespace hopf
