#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "lfmkit/types.hpp"

namespace lfmkit {

enum class DecayClass {
  gaussian_dominated,
  polynomial_times_gaussian,
  oscillatory_damped,
};

// Test function psi depending on finitely many coordinates. The evaluator reads
// the first `dim` entries of its argument; pairing at a larger truncation n
// completes the remaining coordinates with the unit Gaussian weight (each
// completed coordinate contributes a factor of exactly 1 to the normalized
// integral).
//
// Optional structure used by the quadrature engine:
//  - center: Gaussian-factoring center per coordinate. Tensor Gauss-Hermite
//    factors exp(-|x - center|^2 / 2) out of psi analytically and places its
//    nodes around `center`; a shifted functional moves its center with it,
//    which is what keeps shifted pairings exact (node re-centering).
//  - factors: per-coordinate 1-D factors when psi is a product
//    psi(x) = prod_j f_j(x_j). Lets the tensor rule run dimension-by-dimension,
//    so high dimensions stay inside the evaluation budget.
//  - gradient: analytic partial derivatives; central differences otherwise.
struct CylinderFunctional {
  int dim = 1;
  std::function<Complex(const VectorXd&)> evaluator;
  DecayClass decay_class = DecayClass::gaussian_dominated;

  // |psi(x)| <= bound_c * exp(-bound_a |x - center|^2), spot-checked by validate().
  double bound_c = 1.0;
  double bound_a = 0.5;

  VectorXd center;  // empty means 0
  std::vector<std::function<Complex(double)>> factors;  // empty means no product structure
  std::function<VectorXd(const VectorXd&)> gradient_real;  // optional, for real-valued psi
  std::function<VectorXcd(const VectorXd&)> gradient;      // optional, complex-valued

  bool separable() const { return static_cast<int>(factors.size()) == dim; }
  VectorXd center_or_zero() const {
    return center.size() == dim ? center : VectorXd::Zero(dim);
  }

  Complex operator()(const VectorXd& x) const { return evaluator(x); }

  // Partial derivative d psi / d x_j (analytic when supplied, else central
  // differences with the step below).
  VectorXcd grad(const VectorXd& x) const;

  static constexpr double fd_step = 1e-5;
};

// psi(x + h): evaluator composed with the shift, center moved to center - h,
// factors shifted coordinate-wise. Decay constants are unchanged.
CylinderFunctional shifted(const CylinderFunctional& psi, const VectorXd& h);

// a * psi1 + b * psi2 (loses product structure).
CylinderFunctional linear_combination(Complex a, const CylinderFunctional& psi1, Complex b,
                                      const CylinderFunctional& psi2);

// --- shipped test-function builders ------------------------------------------

// exp(-|x|^2 / 2) in dimension n.
CylinderFunctional gauss_functional(int n);

// x_1 * exp(-|x|^2 / 2).
CylinderFunctional x1_gauss(int n);

// x_1^2 * exp(-|x|^2 / 2).
CylinderFunctional x1sq_gauss(int n);

// (x_1 + c)^2 * exp(-|x|^2 / 2); normalized pairing is 1 + c^2.
CylinderFunctional offset_sq_gauss(int n, double c);

// exp(i x_1 - |x|^2 / 2); normalized pairing is exp(-1/2).
CylinderFunctional fourier_gauss(int n);

// (1 + c * x_1 x_2) * exp(-|x|^2 / 2), n >= 2.
CylinderFunctional cross_term_gauss(int n, double c);

// exp(-|x|^2/2 - sum_j x_j^2 / 2^(j+1)) for the dimension-sweep family.
CylinderFunctional sweep_product_gauss(int n);

// exp(i |x|^2 / 2) pure oscillatory functional (requires damping).
CylinderFunctional oscillatory_quadratic(int n);

}  // namespace lfmkit
