#include "lfmkit/functional.hpp"

#include <cmath>

namespace lfmkit {

VectorXcd CylinderFunctional::grad(const VectorXd& x) const {
  if (gradient) return gradient(x);
  if (gradient_real) return gradient_real(x).cast<Complex>();
  VectorXcd g(dim);
  VectorXd xp = x, xm = x;
  for (int j = 0; j < dim; ++j) {
    const double h = fd_step * std::max(1.0, std::abs(x[j]));
    xp[j] = x[j] + h;
    xm[j] = x[j] - h;
    g[j] = (evaluator(xp) - evaluator(xm)) / (2.0 * h);
    xp[j] = x[j];
    xm[j] = x[j];
  }
  return g;
}

CylinderFunctional shifted(const CylinderFunctional& psi, const VectorXd& h_in) {
  VectorXd h = VectorXd::Zero(psi.dim);
  h.head(std::min<int>(h_in.size(), psi.dim)) = h_in.head(std::min<int>(h_in.size(), psi.dim));

  CylinderFunctional out = psi;
  auto base = psi.evaluator;
  out.evaluator = [base, h](const VectorXd& x) { return base(x + h); };
  out.center = psi.center_or_zero() - h;
  if (psi.separable()) {
    out.factors.clear();
    for (int j = 0; j < psi.dim; ++j) {
      auto f = psi.factors[j];
      const double hj = h[j];
      out.factors.push_back([f, hj](double x) { return f(x + hj); });
    }
  }
  if (psi.gradient) {
    auto g = psi.gradient;
    out.gradient = [g, h](const VectorXd& x) { return g(x + h); };
  }
  if (psi.gradient_real) {
    auto g = psi.gradient_real;
    out.gradient_real = [g, h](const VectorXd& x) { return g(x + h); };
  }
  return out;
}

CylinderFunctional linear_combination(Complex a, const CylinderFunctional& psi1, Complex b,
                                      const CylinderFunctional& psi2) {
  CylinderFunctional out;
  out.dim = std::max(psi1.dim, psi2.dim);
  auto e1 = psi1.evaluator;
  auto e2 = psi2.evaluator;
  out.evaluator = [a, b, e1, e2](const VectorXd& x) { return a * e1(x) + b * e2(x); };
  out.decay_class =
      (psi1.decay_class == DecayClass::gaussian_dominated &&
       psi2.decay_class == DecayClass::gaussian_dominated)
          ? DecayClass::gaussian_dominated
          : DecayClass::polynomial_times_gaussian;
  out.bound_c = std::abs(a) * psi1.bound_c + std::abs(b) * psi2.bound_c;
  out.bound_a = std::min(psi1.bound_a, psi2.bound_a);
  return out;
}

CylinderFunctional gauss_functional(int n) {
  CylinderFunctional psi;
  psi.dim = n;
  psi.evaluator = [n](const VectorXd& x) {
    return Complex(std::exp(-0.5 * x.head(n).squaredNorm()), 0.0);
  };
  psi.decay_class = DecayClass::gaussian_dominated;
  psi.bound_c = 1.0;
  psi.bound_a = 0.5;
  for (int j = 0; j < n; ++j) {
    psi.factors.push_back([](double x) { return Complex(std::exp(-0.5 * x * x), 0.0); });
  }
  psi.gradient_real = [n](const VectorXd& x) {
    return VectorXd(-x.head(n) * std::exp(-0.5 * x.head(n).squaredNorm()));
  };
  return psi;
}

namespace {

CylinderFunctional poly_gauss(int n, std::function<double(double)> p1,
                              std::function<double(double)> dp1) {
  // p(x_1) * exp(-|x|^2/2) with p acting on the first coordinate only.
  CylinderFunctional psi;
  psi.dim = n;
  psi.evaluator = [n, p1](const VectorXd& x) {
    return Complex(p1(x[0]) * std::exp(-0.5 * x.head(n).squaredNorm()), 0.0);
  };
  psi.decay_class = DecayClass::polynomial_times_gaussian;
  psi.bound_a = 0.4;
  psi.bound_c = 64.0;  // generous envelope for the shipped low-order polynomials
  psi.factors.push_back([p1](double x) { return Complex(p1(x) * std::exp(-0.5 * x * x), 0.0); });
  for (int j = 1; j < n; ++j) {
    psi.factors.push_back([](double x) { return Complex(std::exp(-0.5 * x * x), 0.0); });
  }
  psi.gradient_real = [n, p1, dp1](const VectorXd& x) {
    const double g = std::exp(-0.5 * x.head(n).squaredNorm());
    VectorXd grad = -x.head(n) * (p1(x[0]) * g);
    grad[0] += dp1(x[0]) * g;
    return grad;
  };
  return psi;
}

}  // namespace

CylinderFunctional x1_gauss(int n) {
  return poly_gauss(
      n, [](double x) { return x; }, [](double) { return 1.0; });
}

CylinderFunctional x1sq_gauss(int n) {
  return poly_gauss(
      n, [](double x) { return x * x; }, [](double x) { return 2.0 * x; });
}

CylinderFunctional offset_sq_gauss(int n, double c) {
  return poly_gauss(
      n, [c](double x) { return (x + c) * (x + c); },
      [c](double x) { return 2.0 * (x + c); });
}

CylinderFunctional fourier_gauss(int n) {
  CylinderFunctional psi;
  psi.dim = n;
  psi.evaluator = [n](const VectorXd& x) {
    return std::exp(Complex(-0.5 * x.head(n).squaredNorm(), x[0]));
  };
  psi.decay_class = DecayClass::gaussian_dominated;
  psi.bound_c = 1.0;
  psi.bound_a = 0.5;
  psi.factors.push_back([](double x) { return std::exp(Complex(-0.5 * x * x, x)); });
  for (int j = 1; j < n; ++j) {
    psi.factors.push_back([](double x) { return Complex(std::exp(-0.5 * x * x), 0.0); });
  }
  psi.gradient = [n](const VectorXd& x) {
    const Complex v = std::exp(Complex(-0.5 * x.head(n).squaredNorm(), x[0]));
    VectorXcd g = (-x.head(n)).cast<Complex>() * v;
    g[0] += Complex(0.0, 1.0) * v;
    return g;
  };
  return psi;
}

CylinderFunctional cross_term_gauss(int n, double c) {
  CylinderFunctional psi;
  psi.dim = n;
  psi.evaluator = [n, c](const VectorXd& x) {
    return Complex((1.0 + c * x[0] * x[1]) * std::exp(-0.5 * x.head(n).squaredNorm()), 0.0);
  };
  psi.decay_class = DecayClass::polynomial_times_gaussian;
  psi.bound_a = 0.4;
  psi.bound_c = 16.0 * (1.0 + std::abs(c));
  psi.gradient_real = [n, c](const VectorXd& x) {
    const double g = std::exp(-0.5 * x.head(n).squaredNorm());
    VectorXd grad = -x.head(n) * ((1.0 + c * x[0] * x[1]) * g);
    grad[0] += c * x[1] * g;
    grad[1] += c * x[0] * g;
    return grad;
  };
  return psi;
}

CylinderFunctional sweep_product_gauss(int n) {
  CylinderFunctional psi;
  psi.dim = n;
  psi.evaluator = [n](const VectorXd& x) {
    double expo = -0.5 * x.head(n).squaredNorm();
    for (int j = 0; j < n; ++j) expo -= x[j] * x[j] * std::pow(2.0, -(j + 2));
    return Complex(std::exp(expo), 0.0);
  };
  psi.decay_class = DecayClass::gaussian_dominated;
  psi.bound_c = 1.0;
  psi.bound_a = 0.5;
  for (int j = 0; j < n; ++j) {
    const double extra = std::pow(2.0, -(j + 2));
    psi.factors.push_back([extra](double x) {
      return Complex(std::exp(-(0.5 + extra) * x * x), 0.0);
    });
  }
  return psi;
}

CylinderFunctional oscillatory_quadratic(int n) {
  CylinderFunctional psi;
  psi.dim = n;
  psi.evaluator = [n](const VectorXd& x) {
    return std::exp(Complex(0.0, 0.5 * x.head(n).squaredNorm()));
  };
  psi.decay_class = DecayClass::oscillatory_damped;
  psi.bound_c = 1.0;
  psi.bound_a = 0.0;
  for (int j = 0; j < n; ++j) {
    psi.factors.push_back([](double x) { return std::exp(Complex(0.0, 0.5 * x * x)); });
  }
  return psi;
}

}  // namespace lfmkit
