#include "lfmkit/types.hpp"

#include <cmath>

namespace lfmkit {

double DiscretePath::sobolev_norm2() const {
  double acc = 0.0;
  Eigen::RowVectorXd prev = Eigen::RowVectorXd::Zero(dim_q);
  for (int j = 0; j < values.rows(); ++j) {
    acc += (values.row(j) - prev).squaredNorm() / grid.delta;
    prev = values.row(j);
  }
  return acc;
}

DiscretePath DiscretePath::refined() const {
  TimeGrid fine(grid.t_final, 2 * grid.n_slices);
  MatrixXd vals(2 * grid.n_slices, dim_q);
  Eigen::RowVectorXd prev = Eigen::RowVectorXd::Zero(dim_q);
  for (int j = 0; j < grid.n_slices; ++j) {
    vals.row(2 * j) = 0.5 * (prev + values.row(j));
    vals.row(2 * j + 1) = values.row(j);
    prev = values.row(j);
  }
  return DiscretePath(fine, std::move(vals), dim_q);
}

double PhasePath::q_sobolev_norm2() const {
  double acc = 0.0;
  for (int j = 1; j < q_values.rows(); ++j) {
    acc += (q_values.row(j) - q_values.row(j - 1)).squaredNorm() / grid.delta;
  }
  return acc;
}

double PhasePath::q_l2_norm2() const {
  double acc = 0.0;
  for (int j = 0; j < q_values.rows(); ++j) acc += q_values.row(j).squaredNorm() * grid.delta;
  return acc;
}

double PhasePath::p_l2_norm2() const {
  double acc = 0.0;
  for (int j = 0; j < p_values.rows(); ++j) acc += p_values.row(j).squaredNorm() * grid.delta;
  return acc;
}

MatrixXd FiniteSubspace::gram_matrix() const {
  if (basis_id == BasisId::coordinate) {
    return MatrixXd::Identity(dim, dim);
  }
  // Hat basis e_j of W^1_2((0,t), R) vanishing at 0: e_j ramps from 0 to sqrt(delta)
  // across slice j and stays constant after. Derivatives are piecewise constant,
  // so <e_i, e_j> = sum over slices of slope_i * slope_j * delta.
  const double delta = grid.delta;
  const double slope = 1.0 / std::sqrt(delta);
  MatrixXd g = MatrixXd::Zero(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int i = 0; i < dim; ++i) {
      const double si = (i == m) ? slope : 0.0;
      if (si == 0.0) continue;
      for (int j = 0; j < dim; ++j) {
        const double sj = (j == m) ? slope : 0.0;
        g(i, j) += si * sj * delta;
      }
    }
  }
  return g;
}

DiscretePath path_from_coefficients(const TimeGrid& grid, const VectorXd& u) {
  const double s = std::sqrt(grid.delta);
  MatrixXd vals(grid.n_slices, 1);
  double acc = 0.0;
  for (int j = 0; j < grid.n_slices; ++j) {
    acc += s * u[j];
    vals(j, 0) = acc;
  }
  return DiscretePath(grid, std::move(vals), 1);
}

VectorXd coefficients_from_path(const DiscretePath& path) {
  const double s = std::sqrt(path.grid.delta);
  VectorXd u(path.grid.n_slices);
  double prev = 0.0;
  for (int j = 0; j < path.grid.n_slices; ++j) {
    u[j] = (path.values(j, 0) - prev) / s;
    prev = path.values(j, 0);
  }
  return u;
}

VectorXd SpatialGrid::points() const {
  VectorXd x(n_points);
  for (int i = 0; i < n_points; ++i) x[i] = point(i);
  return x;
}

double WaveFunction::l2_norm() const {
  const double dx = grid.dx();
  double acc = 0.0;
  for (int i = 0; i < values.size(); ++i) {
    const double w = (i == 0 || i == values.size() - 1) ? 0.5 : 1.0;
    acc += w * std::norm(values[i]);
  }
  return std::sqrt(acc * dx);
}

WaveFunction gaussian_packet(const SpatialGrid& grid, double center, double sigma,
                             double momentum) {
  VectorXcd v(grid.n_points);
  const double norm = std::pow(M_PI * sigma * sigma, -0.25);
  for (int i = 0; i < grid.n_points; ++i) {
    const double x = grid.point(i);
    const double u = x - center;
    v[i] = norm * std::exp(-u * u / (2.0 * sigma * sigma)) *
           std::exp(Complex(0.0, momentum * u));
  }
  return WaveFunction(grid, std::move(v));
}

WaveFunction plane_wave(const SpatialGrid& grid, int mode) {
  const double k = 2.0 * M_PI * mode / (grid.x_max - grid.x_min);
  VectorXcd v(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    v[i] = std::exp(Complex(0.0, k * grid.point(i)));
  }
  return WaveFunction(grid, std::move(v));
}

void require_same_grid(const WaveFunction& a, const WaveFunction& b, const std::string& where) {
  if (!(a.grid == b.grid)) throw GridMismatch(where);
}

}  // namespace lfmkit
