#include "lfmkit/field_flow.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

namespace lfmkit {

MatrixXd VectorFieldSpec::fd_jacobian(const VectorXd& x) const {
  if (!evaluator) throw NoJacobian("vector field has no evaluator");
  const int n = static_cast<int>(x.size());
  MatrixXd j(n, n);
  VectorXd xp = x, xm = x;
  for (int c = 0; c < n; ++c) {
    const double h = fd_step * std::max(1.0, std::abs(x[c]));
    xp[c] = x[c] + h;
    xm[c] = x[c] - h;
    j.col(c) = (evaluator(xp) - evaluator(xm)) / (2.0 * h);
    xp[c] = x[c];
    xm[c] = x[c];
  }
  return j;
}

MatrixXd VectorFieldSpec::jacobian_at(const VectorXd& x) const {
  if (jacobian) return jacobian(x);
  if (evaluator) return fd_jacobian(x);
  throw NoJacobian("vector field supplies neither analytic nor finite-difference jacobian");
}

MatrixXd FlowSpec::fd_space_jacobian(double t, const VectorXd& x) const {
  const int n = static_cast<int>(x.size());
  MatrixXd j(n, n);
  VectorXd xp = x, xm = x;
  for (int c = 0; c < n; ++c) {
    const double h = fd_step * std::max(1.0, std::abs(x[c]));
    xp[c] = x[c] + h;
    xm[c] = x[c] - h;
    j.col(c) = (forward(t, xp) - forward(t, xm)) / (2.0 * h);
    xp[c] = x[c];
    xm[c] = x[c];
  }
  return j;
}

MatrixXd FlowSpec::space_jacobian_at(double t, const VectorXd& x) const {
  if (space_jacobian) return space_jacobian(t, x);
  return fd_space_jacobian(t, x);
}

MatrixXd FlowSpec::mixed_jacobian_at(double t, const VectorXd& x) const {
  if (mixed_jacobian) return mixed_jacobian(t, x);
  const double h = fd_step_t * std::max(1.0, std::abs(t));
  return (space_jacobian_at(t + h, x) - space_jacobian_at(t - h, x)) / (2.0 * h);
}

FlowSpec translation_flow(const VectorXd& h) {
  FlowSpec f;
  f.forward = [h](double t, const VectorXd& x) { return VectorXd(x + t * h.head(x.size())); };
  f.inverse = [h](double t, const VectorXd& x) { return VectorXd(x - t * h.head(x.size())); };
  f.space_jacobian = [](double, const VectorXd& x) {
    return MatrixXd(MatrixXd::Identity(x.size(), x.size()));
  };
  f.mixed_jacobian = [](double, const VectorXd& x) {
    return MatrixXd(MatrixXd::Zero(x.size(), x.size()));
  };
  f.time_derivative = [h](double, const VectorXd& x) { return VectorXd(h.head(x.size())); };
  return f;
}

FlowSpec matrix_exponential_flow(const MatrixXd& a) {
  FlowSpec f;
  f.forward = [a](double t, const VectorXd& x) { return VectorXd((t * a).exp() * x); };
  f.inverse = [a](double t, const VectorXd& x) { return VectorXd((-t * a).exp() * x); };
  f.space_jacobian = [a](double t, const VectorXd&) { return MatrixXd((t * a).exp()); };
  f.mixed_jacobian = [a](double t, const VectorXd&) { return MatrixXd(a * (t * a).exp()); };
  f.time_derivative = [a](double t, const VectorXd& x) { return VectorXd(a * (t * a).exp() * x); };
  return f;
}

FlowSpec scaling_flow() {
  FlowSpec f;
  f.forward = [](double t, const VectorXd& x) { return VectorXd(std::exp(t) * x); };
  f.inverse = [](double t, const VectorXd& x) { return VectorXd(std::exp(-t) * x); };
  f.space_jacobian = [](double t, const VectorXd& x) {
    return MatrixXd(std::exp(t) * MatrixXd::Identity(x.size(), x.size()));
  };
  f.mixed_jacobian = [](double t, const VectorXd& x) {
    return MatrixXd(std::exp(t) * MatrixXd::Identity(x.size(), x.size()));
  };
  return f;
}

FlowSpec perturbation_flow(const VectorFieldSpec& k) {
  FlowSpec f;
  auto eval = k.evaluator;
  f.forward = [eval](double t, const VectorXd& x) { return VectorXd(x + t * eval(x)); };
  f.inverse = [k](double t, const VectorXd& y) {
    // Newton iteration for x with x + t k(x) = y.
    VectorXd x = y;
    for (int it = 0; it < 50; ++it) {
      const VectorXd r = x + t * k.evaluator(x) - y;
      if (r.norm() < 1e-14) break;
      const MatrixXd j =
          MatrixXd::Identity(x.size(), x.size()) + t * k.jacobian_at(x);
      x -= j.partialPivLu().solve(r);
    }
    return x;
  };
  f.space_jacobian = [k](double t, const VectorXd& x) {
    return MatrixXd(MatrixXd::Identity(x.size(), x.size()) + t * k.jacobian_at(x));
  };
  f.mixed_jacobian = [k](double, const VectorXd& x) { return k.jacobian_at(x); };
  f.time_derivative = [eval](double, const VectorXd& x) { return eval(x); };
  return f;
}

FlowSpec tanh_shear_flow() {
  FlowSpec f;
  f.forward = [](double t, const VectorXd& x) {
    VectorXd y = x;
    y[0] += t * std::tanh(x[1]);
    return y;
  };
  f.inverse = [](double t, const VectorXd& x) {
    VectorXd y = x;
    y[0] -= t * std::tanh(x[1]);
    return y;
  };
  f.space_jacobian = [](double t, const VectorXd& x) {
    MatrixXd j = MatrixXd::Identity(x.size(), x.size());
    const double c = std::cosh(x[1]);
    j(0, 1) = t / (c * c);
    return j;
  };
  f.mixed_jacobian = [](double, const VectorXd& x) {
    MatrixXd j = MatrixXd::Zero(x.size(), x.size());
    const double c = std::cosh(x[1]);
    j(0, 1) = 1.0 / (c * c);
    return j;
  };
  return f;
}

FlowSpec linear_collapse_flow() {
  FlowSpec f;
  f.forward = [](double t, const VectorXd& x) { return VectorXd((1.0 - t) * x); };
  f.inverse = [](double t, const VectorXd& x) { return VectorXd(x / (1.0 - t)); };
  f.space_jacobian = [](double t, const VectorXd& x) {
    return MatrixXd((1.0 - t) * MatrixXd::Identity(x.size(), x.size()));
  };
  f.mixed_jacobian = [](double, const VectorXd& x) {
    return MatrixXd(-MatrixXd::Identity(x.size(), x.size()));
  };
  return f;
}

}  // namespace lfmkit
