#include "tlsbpg/rbf.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "tlsbpg/errors.hpp"

namespace tlsbpg {

RbfConfig RbfConfig::square_grid(int side, int dim, double sigma, int update_interval) {
  if (side < 1) throw ConfigError("rbf: grid side must be >= 1");
  if (dim < 1 || dim > 4) throw ConfigError("rbf: dim must be in [1,4]");
  RbfConfig cfg;
  cfg.sigma = sigma > 0.0 ? sigma : 0.5 / side;
  cfg.update_interval = update_interval;
  const int count = static_cast<int>(std::pow(side, dim));
  cfg.centers.reserve(count);
  for (int flat = 0; flat < count; ++flat) {
    StateVector c(dim);
    int rest = flat;
    for (int d = dim - 1; d >= 0; --d) {
      c[d] = (rest % side + 0.5) / side;
      rest /= side;
    }
    cfg.centers.push_back(std::move(c));
  }
  return cfg;
}

std::vector<double> rbf_basis(const RbfConfig& config, std::span<const double> state) {
  const int J = config.basis_count();
  if (J < 1) throw ConfigError("rbf: no centers");
  if (static_cast<int>(state.size()) != config.dim()) {
    throw ConfigError("rbf: state dimension mismatch");
  }
  std::vector<double> phi(J);
  double sum = 0.0;
  const double inv_two_sigma2 = 1.0 / (2.0 * config.sigma * config.sigma);
  for (int j = 0; j < J; ++j) {
    double dist2 = 0.0;
    for (std::size_t d = 0; d < state.size(); ++d) {
      const double delta = state[d] - config.centers[j][d];
      dist2 += delta * delta;
    }
    phi[j] = std::exp(-dist2 * inv_two_sigma2);
    sum += phi[j];
  }
  for (double& v : phi) v /= sum;
  return phi;
}

std::pair<double, double> rbf_eval(const RbfLatent& latent, const RbfConfig& config,
                                   std::span<const double> state) {
  const auto phi = rbf_basis(config, state);
  if (latent.theta_action.size() != phi.size() || latent.theta_utility.size() != phi.size()) {
    throw ConfigError("rbf: latent size does not match basis count");
  }
  double a = 0.0, u = 0.0;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    a += latent.theta_action[j] * phi[j];
    u += latent.theta_utility[j] * phi[j];
  }
  return {a, u};
}

RbfLatent fit_latent(std::span<const FitSample> samples, const RbfConfig& config, double ridge) {
  if (samples.empty()) throw EmptyFit("rbf: fit requested with no samples");
  const int J = config.basis_count();
  const int n = static_cast<int>(samples.size());

  Eigen::MatrixXd phi(n, J);
  Eigen::VectorXd y_action(n), y_utility(n);
  for (int i = 0; i < n; ++i) {
    const auto row = rbf_basis(config, samples[i].state);
    for (int j = 0; j < J; ++j) phi(i, j) = row[j];
    y_action(i) = samples[i].action;
    y_utility(i) = samples[i].utility;
  }

  Eigen::MatrixXd gram = phi.transpose() * phi;
  gram.diagonal().array() += ridge;
  const auto solver = gram.ldlt();

  RbfLatent latent;
  latent.theta_action.resize(J);
  latent.theta_utility.resize(J);
  Eigen::VectorXd ta = solver.solve(phi.transpose() * y_action);
  Eigen::VectorXd tu = solver.solve(phi.transpose() * y_utility);
  for (int j = 0; j < J; ++j) {
    latent.theta_action[j] = ta(j);
    latent.theta_utility[j] = tu(j);
  }
  return latent;
}

double fit_loss(std::span<const FitSample> samples, const RbfConfig& config,
                std::span<const double> theta, bool utility_head, double ridge) {
  if (static_cast<int>(theta.size()) != config.basis_count()) {
    throw ConfigError("rbf: theta size mismatch");
  }
  double loss = 0.0;
  for (const FitSample& s : samples) {
    const auto phi = rbf_basis(config, s.state);
    double pred = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j) pred += theta[j] * phi[j];
    const double r = pred - (utility_head ? s.utility : s.action);
    loss += r * r;
  }
  for (double t : theta) loss += ridge * t * t;
  return loss;
}

std::vector<double> fit_gradient(std::span<const FitSample> samples, const RbfConfig& config,
                                 std::span<const double> theta, bool utility_head, double ridge) {
  if (static_cast<int>(theta.size()) != config.basis_count()) {
    throw ConfigError("rbf: theta size mismatch");
  }
  std::vector<double> grad(theta.size(), 0.0);
  for (const FitSample& s : samples) {
    const auto phi = rbf_basis(config, s.state);
    double pred = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j) pred += theta[j] * phi[j];
    const double r = pred - (utility_head ? s.utility : s.action);
    for (std::size_t j = 0; j < phi.size(); ++j) grad[j] += 2.0 * r * phi[j];
  }
  for (std::size_t j = 0; j < theta.size(); ++j) grad[j] += 2.0 * ridge * theta[j];
  return grad;
}

double similarity(const RbfLatent& a, const RbfLatent& b) {
  if (a.theta_action.size() != b.theta_action.size() ||
      a.theta_utility.size() != b.theta_utility.size()) {
    throw ConfigError("rbf: latent dimensions differ");
  }
  double s = 0.0;
  for (std::size_t j = 0; j < a.theta_action.size(); ++j) {
    const double da = a.theta_action[j] - b.theta_action[j];
    const double du = a.theta_utility[j] - b.theta_utility[j];
    s += da * da + du * du;
  }
  return s;
}

SimilarityResult similarity_matrix(std::span<const RbfLatent> latents) {
  const int n = static_cast<int>(latents.size());
  if (n < 2) throw ConfigError("rbf: similarity matrix needs at least two players");
  SimilarityResult res;
  res.matrix.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double s = similarity(latents[i], latents[j]);
      res.matrix[i][j] = s;
      res.matrix[j][i] = s;
      res.ranked_pairs.emplace_back(i, j, s);
    }
  }
  std::stable_sort(res.ranked_pairs.begin(), res.ranked_pairs.end(),
                   [](const auto& a, const auto& b) { return std::get<2>(a) < std::get<2>(b); });
  return res;
}

double latent_sw_loss(std::span<const RbfLatent> history_i, std::span<const RbfLatent> history_n,
                      int horizon) {
  if (horizon < 1) throw ConfigError("latent_sw_loss: horizon must be >= 1");
  if (history_i.empty() || history_n.empty()) throw ConfigError("latent_sw_loss: empty history");
  auto at = [](std::span<const RbfLatent> h, int k) -> const RbfLatent& {
    const int n = static_cast<int>(h.size());
    return k < n ? h[n - 1 - k] : h[0];
  };
  double sum = 0.0;
  for (int k = 0; k < horizon; ++k) {
    sum += similarity(at(history_i, k), at(history_n, k));
  }
  return sum;
}

double utility_with_latent(double u_base, std::span<const double> alphas,
                           std::span<const double> losses, int n_players) {
  if (n_players < 2) throw ConfigError("utility_with_latent: need at least two players");
  if (alphas.size() != losses.size()) {
    throw ConfigError("utility_with_latent: alpha/loss length mismatch");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < alphas.size(); ++k) acc += alphas[k] * losses[k];
  return u_base - acc / static_cast<double>(n_players - 1);
}

}  // namespace tlsbpg
