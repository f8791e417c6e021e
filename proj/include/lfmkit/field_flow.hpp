#pragma once

#include <Eigen/Dense>
#include <functional>

#include "lfmkit/types.hpp"

namespace lfmkit {

// Vector field k on E, evaluated through finite truncations: the evaluator maps
// an n-vector to an n-vector for any n (the truncation P_n k restricted to E_n).
// The Jacobian is analytic when supplied, else central finite differences with
// step fd_step.
struct VectorFieldSpec {
  std::function<VectorXd(const VectorXd&)> evaluator;
  std::function<MatrixXd(const VectorXd&)> jacobian;  // optional
  std::function<double(int)> trace_class_decay;  // optional bound on |<k'(x) e_j, e_j>|, j >= 1

  static constexpr double fd_step = 1e-5;

  // Jacobian at x: analytic if present, else central differences.
  MatrixXd jacobian_at(const VectorXd& x) const;
  MatrixXd fd_jacobian(const VectorXd& x) const;
  bool has_jacobian() const { return static_cast<bool>(evaluator) || static_cast<bool>(jacobian); }
};

// Flow F: I x E -> E with F(0, x) = x, acting on finite truncations like
// VectorFieldSpec. space_jacobian is d/dx F(t, x); mixed_jacobian is
// d/dt d/dx F(t, x) (derived by time differences of space_jacobian when absent).
struct FlowSpec {
  std::function<VectorXd(double, const VectorXd&)> forward;
  std::function<VectorXd(double, const VectorXd&)> inverse;
  std::function<MatrixXd(double, const VectorXd&)> space_jacobian;   // optional
  std::function<VectorXd(double, const VectorXd&)> time_derivative;  // optional
  std::function<MatrixXd(double, const VectorXd&)> mixed_jacobian;   // optional

  static constexpr double fd_step = 1e-5;
  static constexpr double fd_step_t = 1e-5;

  MatrixXd space_jacobian_at(double t, const VectorXd& x) const;
  MatrixXd fd_space_jacobian(double t, const VectorXd& x) const;
  MatrixXd mixed_jacobian_at(double t, const VectorXd& x) const;
};

// --- shipped flow builders ----------------------------------------------------

// Translation flow F(t, x) = x + t h.
FlowSpec translation_flow(const VectorXd& h);

// Linear flow F(t, x) = exp(t A) x with exact derivatives.
FlowSpec matrix_exponential_flow(const MatrixXd& a);

// Scaling flow F(t, x) = e^t x.
FlowSpec scaling_flow();

// Perturbation-of-identity flow F(t, x) = x + t k(x). The inverse is solved by
// Newton iteration; invertibility holds for t |k'| < 1 on the sampled region.
FlowSpec perturbation_flow(const VectorFieldSpec& k);

// Shear flow F(t, (x1, x2)) = (x1 + t tanh(x2), x2); det of the space Jacobian is 1.
FlowSpec tanh_shear_flow();

// Degenerate-at-t=1 flow F(t, x) = (1 - t) x (for SingularJacobian reporting).
FlowSpec linear_collapse_flow();

}  // namespace lfmkit
