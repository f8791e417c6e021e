#include "lfmkit/validate.hpp"

#include <cmath>

namespace lfmkit {

namespace {
constexpr std::uint64_t kValidateSeed = 0x5eedbeef;
}

std::vector<std::string> validate(const TimeGrid& grid) {
  std::vector<std::string> bad;
  if (!(grid.t_final > 0)) bad.push_back("t_final must be > 0");
  if (grid.n_slices < 1) bad.push_back("n_slices must be >= 1");
  if (grid.n_slices >= 1 && grid.t_final > 0) {
    if (std::abs(grid.delta * grid.n_slices - grid.t_final) >
        8 * std::numeric_limits<double>::epsilon() * grid.t_final) {
      bad.push_back("delta * n_slices != t_final");
    }
  }
  return bad;
}

std::vector<std::string> validate(const DiscretePath& path) {
  std::vector<std::string> bad = validate(path.grid);
  if (path.values.rows() != path.grid.n_slices) {
    bad.push_back("values must have exactly n_slices entries");
  }
  if (path.values.cols() != path.dim_q) bad.push_back("values width must equal dim_q");
  const double n2 = path.sobolev_norm2();
  if (!std::isfinite(n2) || n2 < 0) bad.push_back("sobolev norm^2 must be finite and nonnegative");
  return bad;
}

std::vector<std::string> validate(const PhasePath& path) {
  std::vector<std::string> bad = validate(path.grid);
  if (path.q_values.rows() != path.grid.n_slices) bad.push_back("q_values must have n_slices rows");
  if (path.p_values.rows() != path.grid.n_slices) bad.push_back("p_values must have n_slices rows");
  if (!std::isfinite(path.norm2())) bad.push_back("phase-path norm^2 must be finite");
  return bad;
}

std::vector<std::string> validate(const FiniteSubspace& subspace) {
  std::vector<std::string> bad;
  if (subspace.dim < 1) bad.push_back("dim must be >= 1");
  if (subspace.basis_id == BasisId::path_hat) {
    auto grid_bad = validate(subspace.grid);
    bad.insert(bad.end(), grid_bad.begin(), grid_bad.end());
    if (subspace.dim != subspace.grid.n_slices) bad.push_back("hat basis dim must equal n_slices");
  }
  if (bad.empty()) {
    const MatrixXd g = subspace.gram_matrix();
    const double err = (g - MatrixXd::Identity(subspace.dim, subspace.dim))
                           .cwiseAbs()
                           .maxCoeff();
    if (err > 1e-12) bad.push_back("gram matrix deviates from identity beyond 1e-12");
  }
  return bad;
}

std::vector<std::string> validate(const CylinderFunctional& psi) {
  std::vector<std::string> bad;
  if (psi.dim < 1) bad.push_back("dim must be >= 1");
  if (!psi.evaluator) {
    bad.push_back("evaluator missing");
    return bad;
  }
  if (psi.center.size() != 0 && psi.center.size() != psi.dim) {
    bad.push_back("center length must match dim");
  }
  if (!psi.factors.empty() && static_cast<int>(psi.factors.size()) != psi.dim) {
    bad.push_back("factors, when present, must supply one factor per coordinate");
  }
  NormalSampler sampler(kValidateSeed);
  const VectorXd c = psi.center_or_zero();
  for (int s = 0; s < 32; ++s) {
    const VectorXd x = c + 2.0 * sampler.vector(psi.dim);
    const Complex v = psi.evaluator(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      bad.push_back("evaluator not finite on finite input");
      break;
    }
    if (psi.decay_class == DecayClass::gaussian_dominated) {
      const double bound =
          psi.bound_c * std::exp(-psi.bound_a * (x - c).squaredNorm());
      if (std::abs(v) > bound * (1.0 + 1e-9)) {
        bad.push_back("gaussian_dominated decay bound violated on sample");
        break;
      }
    }
    if (psi.separable()) {
      Complex prod(1.0, 0.0);
      for (int j = 0; j < psi.dim; ++j) prod *= psi.factors[j](x[j]);
      if (std::abs(prod - v) > 1e-10 * (1.0 + std::abs(v))) {
        bad.push_back("product factors disagree with evaluator on sample");
        break;
      }
    }
  }
  return bad;
}

std::vector<std::string> validate(const VectorFieldSpec& field, int dim) {
  std::vector<std::string> bad;
  if (!field.evaluator) {
    bad.push_back("evaluator missing");
    return bad;
  }
  if (field.jacobian) {
    // Analytic vs finite-difference Jacobian, entrywise, on a few samples.
    NormalSampler sampler(kValidateSeed);
    const double tol = 10.0 * VectorFieldSpec::fd_step * VectorFieldSpec::fd_step;
    for (int s = 0; s < 8; ++s) {
      const VectorXd x = sampler.vector(dim);
      const MatrixXd ja = field.jacobian(x);
      const MatrixXd jf = field.fd_jacobian(x);
      const double scale = std::max(1.0, ja.cwiseAbs().maxCoeff());
      if (((ja - jf).cwiseAbs().maxCoeff()) > tol * scale) {
        bad.push_back("analytic jacobian disagrees with finite differences");
        break;
      }
    }
  }
  return bad;
}

std::vector<std::string> validate(const FlowSpec& flow, int dim, double t_max) {
  std::vector<std::string> bad;
  if (!flow.forward) {
    bad.push_back("forward map missing");
    return bad;
  }
  NormalSampler sampler(kValidateSeed);
  for (int s = 0; s < 8; ++s) {
    const VectorXd x = sampler.vector(dim);
    if ((flow.forward(0.0, x) - x).norm() > 1e-12 * (1.0 + x.norm())) {
      bad.push_back("F(0, x) != x");
      break;
    }
  }
  if (flow.inverse) {
    for (int s = 0; s < 8; ++s) {
      const VectorXd x = sampler.vector(dim);
      const double t = t_max * (s + 1) / 8.0;
      if ((flow.forward(t, flow.inverse(t, x)) - x).norm() > 1e-9 * (1.0 + x.norm())) {
        bad.push_back("inverse mismatch");
        break;
      }
    }
  }
  if (flow.space_jacobian) {
    for (int s = 0; s < 4; ++s) {
      const VectorXd x = sampler.vector(dim);
      const double t = t_max * (s + 1) / 4.0;
      const MatrixXd ja = flow.space_jacobian(t, x);
      const MatrixXd jf = flow.fd_space_jacobian(t, x);
      const double scale = std::max(1.0, ja.cwiseAbs().maxCoeff());
      if ((ja - jf).cwiseAbs().maxCoeff() > 1e-6 * scale) {
        bad.push_back("space jacobian disagrees with finite differences of forward");
        break;
      }
    }
  }
  return bad;
}

std::vector<std::string> validate(const QuadratureSpec& quad, int dim) {
  std::vector<std::string> bad;
  if (quad.scheme == QuadScheme::tensor_gauss_hermite) {
    if (quad.nodes_per_dim < 1) bad.push_back("nodes_per_dim must be >= 1");
  } else {
    if (quad.sample_count < 1) bad.push_back("sample_count must be >= 1");
  }
  if (quad.damping_epsilon < 0) bad.push_back("damping_epsilon must be >= 0");
  for (size_t i = 1; i < quad.epsilon_schedule.size(); ++i) {
    if (!(quad.epsilon_schedule[i] < quad.epsilon_schedule[i - 1])) {
      bad.push_back("epsilon_schedule must be strictly decreasing");
      break;
    }
  }
  if (quad.scheme == QuadScheme::tensor_gauss_hermite && !quad.tensor_fits(dim)) {
    bad.push_back("tensor node count exceeds budget at this dimension");
  }
  return bad;
}

std::vector<std::string> validate(const WaveFunction& wave) {
  std::vector<std::string> bad;
  if (wave.grid.n_points < 2) bad.push_back("grid needs at least 2 points");
  if (wave.values.size() != wave.grid.n_points) bad.push_back("values size must match grid");
  if (!std::isfinite(wave.l2_norm())) bad.push_back("L2 norm must be finite");
  return bad;
}

}  // namespace lfmkit
