#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lfmkit/errors.hpp"

namespace lfmkit {

// Nodes y_i and weights w_i of an m-point rule.
struct QuadRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

// Gauss-Hermite rule for the weight exp(-y^2) on R. sum(w) = sqrt(pi).
// Computed by Golub-Welsch (eigenvalues of the Jacobi matrix); cached per m.
const QuadRule& gauss_hermite(int m);

// Gauss-Legendre rule on (a, b). sum(w) = b - a.
QuadRule gauss_legendre(int m, double a, double b);

enum class QuadScheme {
  tensor_gauss_hermite,
  gaussian_importance_mc,
};

// Default tensor evaluation budget; overridable via LFMKIT_NODE_BUDGET.
long double default_node_budget();

// Controls every LFM evaluation: scheme, resolution, damping and seed.
struct QuadratureSpec {
  QuadScheme scheme = QuadScheme::tensor_gauss_hermite;
  int nodes_per_dim = 20;
  std::int64_t sample_count = 1'000'000;
  std::uint64_t rng_seed = 1;
  double damping_epsilon = 0.0;  // oscillatory regularizer, >= 0
  std::vector<double> epsilon_schedule;  // decreasing; enables extrapolation to eps -> 0
  long double node_budget = default_node_budget();

  static QuadratureSpec tensor(int nodes, std::uint64_t seed = 1) {
    QuadratureSpec q;
    q.scheme = QuadScheme::tensor_gauss_hermite;
    q.nodes_per_dim = nodes;
    q.rng_seed = seed;
    return q;
  }
  static QuadratureSpec monte_carlo(std::int64_t samples, std::uint64_t seed) {
    QuadratureSpec q;
    q.scheme = QuadScheme::gaussian_importance_mc;
    q.sample_count = samples;
    q.rng_seed = seed;
    return q;
  }

  // Total tensor evaluation count for dimension n (as long double; n log m can
  // overflow integers long before it exceeds any budget).
  long double tensor_cost(int dim_tensor) const;

  // True iff the full tensor rule fits the budget at this dimension.
  bool tensor_fits(int dim_tensor) const { return tensor_cost(dim_tensor) <= node_budget; }
};

// Deterministic standard-normal sampler (Box-Muller over mt19937_64). Used
// instead of std::normal_distribution so seeded runs are bit-reproducible
// across standard libraries.
class NormalSampler {
public:
  explicit NormalSampler(std::uint64_t seed) : gen_(seed) {}
  double next();
  Eigen::VectorXd vector(int n);

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lfmkit
