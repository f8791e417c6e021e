#include "lfmkit/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>

namespace lfmkit {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
// matrix of the orthogonal polynomial family; weights come from the first
// components of the eigenvectors.
QuadRule golub_welsch(const Eigen::VectorXd& offdiag, double weight_mass) {
  const int m = static_cast<int>(offdiag.size()) + 1;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i + 1 < m; ++i) {
    jacobi(i, i + 1) = offdiag[i];
    jacobi(i + 1, i) = offdiag[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  QuadRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = weight_mass * v0 * v0;
  }
  return rule;
}

}  // namespace

const QuadRule& gauss_hermite(int m) {
  if (m < 1) throw Error("gauss_hermite: need at least one node");
  static std::map<int, QuadRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Hermite recurrence (physicists'): beta_k = sqrt(k/2).
  Eigen::VectorXd offdiag(m - 1);
  for (int k = 1; k < m; ++k) offdiag[k - 1] = std::sqrt(k / 2.0);
  QuadRule rule = golub_welsch(offdiag, std::sqrt(M_PI));
  return cache.emplace(m, std::move(rule)).first->second;
}

QuadRule gauss_legendre(int m, double a, double b) {
  if (m < 1) throw Error("gauss_legendre: need at least one node");
  // Legendre recurrence on (-1,1): beta_k = k / sqrt(4k^2 - 1).
  Eigen::VectorXd offdiag(m - 1);
  for (int k = 1; k < m; ++k) offdiag[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  QuadRule rule = golub_welsch(offdiag, 2.0);
  // Affine map onto (a, b).
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int i = 0; i < m; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

long double default_node_budget() {
  if (const char* env = std::getenv("LFMKIT_NODE_BUDGET")) {
    const long double v = std::strtold(env, nullptr);
    if (v > 0) return v;
  }
  return 1e7L;
}

long double QuadratureSpec::tensor_cost(int dim_tensor) const {
  if (dim_tensor <= 0) return 1.0L;
  long double cost = 1.0L;
  for (int i = 0; i < dim_tensor; ++i) {
    cost *= static_cast<long double>(nodes_per_dim);
    if (cost > 1e30L) return cost;  // saturate; far beyond any budget
  }
  return cost;
}

double NormalSampler::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller with explicit uniform construction from mt19937_64.
  const double inv = 1.0 / 9007199254740992.0;  // 2^-53
  double u1;
  do {
    u1 = static_cast<double>(gen_() >> 11) * inv;
  } while (u1 <= 0.0);
  const double u2 = static_cast<double>(gen_() >> 11) * inv;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Eigen::VectorXd NormalSampler::vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = next();
  return v;
}

}  // namespace lfmkit
