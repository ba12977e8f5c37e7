#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "tlsbpg/grid.hpp"

namespace tlsbpg {

// Fixed-center, fixed-spread radial basis layout shared by every player.
struct RbfConfig {
  std::vector<StateVector> centers;
  double sigma = 0.5 / 3.0;
  int update_interval = 10;  // adaptation steps between refits

  int basis_count() const { return static_cast<int>(centers.size()); }
  int dim() const { return centers.empty() ? 0 : static_cast<int>(centers.front().size()); }

  // Regular side^dim lattice of centers inside [0,1]^dim. sigma <= 0 picks
  // the default 0.5 / side.
  static RbfConfig square_grid(int side, int dim = 2, double sigma = -1.0,
                               int update_interval = 10);
};

// Normalized Gaussian bases: phi_j(s) = exp(-||s-mu_j||^2 / (2 sigma^2)),
// divided by the sum over all centers. The weights always sum to 1.
std::vector<double> rbf_basis(const RbfConfig& config, std::span<const double> state);

// Two-headed latent: weights reproducing the player's state->action and
// state->utility surfaces through the shared basis.
struct RbfLatent {
  std::vector<double> theta_action;
  std::vector<double> theta_utility;
  std::int64_t fitted_at_step = -1;
};

struct FitSample {
  StateVector state;
  double action = 0.0;
  double utility = 0.0;
};

// Evaluates both heads at a state.
std::pair<double, double> rbf_eval(const RbfLatent& latent, const RbfConfig& config,
                                   std::span<const double> state);

// Ridge least squares (lambda ||theta||^2) over the samples, solved by
// normal equations. Deterministic for fixed inputs; zero samples raise
// EmptyFit.
RbfLatent fit_latent(std::span<const FitSample> samples, const RbfConfig& config,
                     double ridge = 1e-6);

// Objective and analytic gradient of the per-head fit problem, exposed so
// the finite-difference checks can probe them.
double fit_loss(std::span<const FitSample> samples, const RbfConfig& config,
                std::span<const double> theta, bool utility_head, double ridge = 1e-6);
std::vector<double> fit_gradient(std::span<const FitSample> samples, const RbfConfig& config,
                                 std::span<const double> theta, bool utility_head,
                                 double ridge = 1e-6);

// Squared distance between two latents, summed over both heads.
double similarity(const RbfLatent& a, const RbfLatent& b);

struct SimilarityResult {
  std::vector<std::vector<double>> matrix;               // symmetric, zero diagonal
  std::vector<std::tuple<int, int, double>> ranked_pairs;  // most similar first
};

SimilarityResult similarity_matrix(std::span<const RbfLatent> latents);

// Latent analog of the sliding-window loss: squared latent gaps summed over
// the last `horizon` snapshots (most-recent-last, padded with the oldest).
double latent_sw_loss(std::span<const RbfLatent> history_i, std::span<const RbfLatent> history_n,
                      int horizon);

// Multi-partner utility: u - (1/(N-1)) * sum_n alpha_n * loss_n.
double utility_with_latent(double u_base, std::span<const double> alphas,
                           std::span<const double> losses, int n_players);

}  // namespace tlsbpg
