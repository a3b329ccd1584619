// Physical and kernel parameters for one simulation of a polytropic polyatomic
// gas with quasi-resonant collisions.
//
// The internal energy law is phi(I) = I^(delta/2 - 1), i.e. a polytropic gas
// with delta internal degrees of freedom. The reference collision kernel is
//
//   B = C_B * b * E_k^(kappa_k - 1/2) * E_k'^kappa_k * E_i^kappa_i
//         * E_i'^kappa_i * E^gamma * 1[E_i' <= E] / m_phi(E),
//
// with the isotropic angular kernel b = 1/(4 pi), and the quasi-resonant
// family is B_eps = B * chi_eps(R, R') with the logit-strip cutoff chi_eps.

#ifndef QRGAS_GAS_MODEL_HPP
#define QRGAS_GAS_MODEL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace qrgas {

struct GasModel {
  double m = 1.0;         // molecular mass, > 0
  double delta = 2.0;     // internal degrees of freedom, >= 2
  double kappa_k = 0.5;   // kinetic exponent
  double kappa_i = -0.5;  // internal exponent
  double gamma = 3.0;     // total-energy exponent
  double C_B = 2.0;       // kernel prefactor, > 0
  double epsilon = 0.1;   // quasi-resonance parameter, > 0

  // Throws std::invalid_argument on violated bounds. When require_lt is set,
  // additionally enforces gamma == delta + 1, the choice under which the
  // Landau-Teller temperature equations hold.
  void validate(bool require_lt = false) const {
    if (!(m > 0.0)) throw std::invalid_argument("GasModel: m must be > 0");
    if (!(delta >= 2.0)) throw std::invalid_argument("GasModel: delta must be >= 2");
    if (!(C_B > 0.0)) throw std::invalid_argument("GasModel: C_B must be > 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("GasModel: epsilon must be > 0");
    if (require_lt && std::abs(gamma - (delta + 1.0)) > 1e-12 * (1.0 + std::abs(gamma)))
      throw std::invalid_argument("GasModel: gamma must equal delta + 1 for Landau-Teller runs");
  }

  bool lt_consistent() const {
    return std::abs(gamma - (delta + 1.0)) <= 1e-12 * (1.0 + std::abs(gamma));
  }

  GasModel with_epsilon(double eps) const {
    GasModel copy = *this;
    copy.epsilon = eps;
    return copy;
  }
};

}  // namespace qrgas

#endif
