#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "lfmkit/errors.hpp"

namespace lfmkit {

using Complex = std::complex<double>;
using Eigen::MatrixXd;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Uniform time grid on (0, t_final) with n_slices slices. Node j sits at j*delta,
// j = 0..n_slices.
struct TimeGrid {
  double t_final = 1.0;
  int n_slices = 1;
  double delta = 1.0;  // t_final / n_slices, stored

  TimeGrid() = default;
  TimeGrid(double t, int n) : t_final(t), n_slices(n), delta(t / n) {}

  double node(int j) const { return j * delta; }
  double midpoint(int j) const { return (j - 0.5) * delta; }  // midpoint of slice j, j = 1..n
};

// Time-sliced path vanishing at the left endpoint: values are the node values at
// nodes 1..n_slices (node 0 is implicit and fixed at 0). dim_Q = 1 throughout the
// shipped examples; multi-component paths store components contiguously per node.
struct DiscretePath {
  TimeGrid grid;
  int dim_q = 1;
  MatrixXd values;  // n_slices x dim_q

  DiscretePath() = default;
  DiscretePath(TimeGrid g, MatrixXd vals, int dq = 1)
      : grid(g), dim_q(dq), values(std::move(vals)) {}

  // Discrete Sobolev norm^2: sum_j |xi_j - xi_{j-1}|^2 / delta, with xi_0 = 0.
  double sobolev_norm2() const;

  // Linear interpolation onto a grid with twice the slices. Preserves the norm
  // of a piecewise-linear path exactly.
  DiscretePath refined() const;
};

// Phase-space path: q sampled at slice midpoints, p at nodes 1..n_slices.
// Two candidate q-norms are stored side by side (see q_sobolev_norm2 /
// q_l2_norm2); callers pick and report which one an experiment uses.
struct PhasePath {
  TimeGrid grid;
  int dim = 1;          // dim_P = dim_Q
  MatrixXd q_values;    // n_slices x dim, midpoint samples
  MatrixXd p_values;    // n_slices x dim, node samples

  double q_sobolev_norm2() const;  // sum |dq|^2 / delta over consecutive midpoints
  double q_l2_norm2() const;       // sum |q|^2 * delta
  double p_l2_norm2() const;       // sum |p|^2 * delta
  double norm2() const { return q_sobolev_norm2() + p_l2_norm2(); }
};

enum class BasisId {
  coordinate,  // abstract coordinate basis of R^n
  path_hat,    // orthonormal increment (hat-function) basis of the discrete path space
};

// Finite-dimensional subspace E_n spanned by an orthonormal family e_1..e_n.
struct FiniteSubspace {
  int dim = 1;
  BasisId basis_id = BasisId::coordinate;
  TimeGrid grid;  // only meaningful for path_hat

  FiniteSubspace() = default;
  static FiniteSubspace coordinate(int n) { return {n, BasisId::coordinate, {}}; }
  static FiniteSubspace path_hat(const TimeGrid& g) {
    return {g.n_slices, BasisId::path_hat, g};
  }

  // Gram matrix of the basis under the subspace inner product. Identity to
  // machine precision for both shipped bases.
  MatrixXd gram_matrix() const;
};

// Path with node values built from hat-basis coordinates u: xi_j = sqrt(delta) * sum_{m<=j} u_m.
// The coordinates u are orthonormal for the discrete Sobolev inner product.
DiscretePath path_from_coefficients(const TimeGrid& grid, const VectorXd& u);
VectorXd coefficients_from_path(const DiscretePath& path);

// Uniform 1-D spatial grid.
struct SpatialGrid {
  double x_min = -12.0;
  double x_max = 12.0;
  int n_points = 1024;

  double dx() const { return (x_max - x_min) / n_points; }
  double point(int i) const { return x_min + i * dx(); }
  VectorXd points() const;
  bool operator==(const SpatialGrid& other) const {
    return x_min == other.x_min && x_max == other.x_max && n_points == other.n_points;
  }
};

// Complex-valued function sampled on a SpatialGrid.
struct WaveFunction {
  SpatialGrid grid;
  VectorXcd values;

  WaveFunction() = default;
  WaveFunction(SpatialGrid g, VectorXcd v) : grid(g), values(std::move(v)) {}

  // L2 norm by the trapezoid rule (endpoints of the open-boundary grid carry
  // half weight; values there are ~0 for all shipped states).
  double l2_norm() const;
};

// Gaussian packet (pi sigma^2)^{-1/4} exp(-(x-c)^2/(2 sigma^2) + i k (x - c)) on `grid`.
WaveFunction gaussian_packet(const SpatialGrid& grid, double center, double sigma,
                             double momentum = 0.0);

// Plane wave exp(i k x) with k an exact lattice mode of the periodic grid.
WaveFunction plane_wave(const SpatialGrid& grid, int mode);

void require_same_grid(const WaveFunction& a, const WaveFunction& b, const std::string& where);

}  // namespace lfmkit
