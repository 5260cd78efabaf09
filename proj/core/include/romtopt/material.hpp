#ifndef ROMTOPT_MATERIAL_HPP
#define ROMTOPT_MATERIAL_HPP

#include <cmath>

namespace romtopt {

// Isotropic material with power-law density interpolation. The modulus
// keeps a small floor E_min so the stiffness matrix stays positive
// definite at zero density.
struct MaterialModel {
  double youngs_modulus = 1.0;      // E0, N/m^2
  double poisson_ratio = 0.3;
  double simp_exponent = 3.0;       // s > 1
  double stress_relax_exponent = 0.5;  // q in (0, 1)
  double modulus_floor = 1e-6;      // E_min, N/m^2

  // E(x) = E_min + x^s (E0 - E_min)
  double simp_modulus(double x) const
  {
    return modulus_floor + std::pow(x, simp_exponent) * (youngs_modulus - modulus_floor);
  }

  // dE/dx = s x^{s-1} (E0 - E_min)
  double simp_modulus_derivative(double x) const
  {
    return simp_exponent * std::pow(x, simp_exponent - 1.0) *
           (youngs_modulus - modulus_floor);
  }

  // T(x) = x^q T0
  double relaxed_stress(double x, double solid_stress) const
  {
    return std::pow(x, stress_relax_exponent) * solid_stress;
  }

  double relaxed_stress_density_derivative(double x, double solid_stress) const
  {
    return stress_relax_exponent * std::pow(x, stress_relax_exponent - 1.0) *
           solid_stress;
  }
};

}  // namespace romtopt

#endif
