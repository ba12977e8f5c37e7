#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tlsbpg/grid.hpp"

namespace tlsbpg {

enum class TransferVariant { kSw, kMom, kRbf };

// Which undirected player pairs exchange knowledge and with which mechanism.
struct TransferPlan {
  std::vector<std::pair<int, int>> pairs;
  TransferVariant variant = TransferVariant::kMom;
  double beta_tf = 0.8;   // exploration threshold gating the transfer
  int horizon = 10;       // window length for the sliding-window losses
  double alpha_mom = 0.5; // momentum weight for the exponential loss

  // Rejects self-pairs, duplicate pairs (either orientation) and players
  // outside [0, n_players).
  void validate(int n_players) const;
};

// Squared action gap summed over the last `horizon` entries. Histories are
// most-recent-last; shorter histories are padded by repeating their oldest
// entry so the loss is defined from the first gated step.
double sw_loss(std::span<const double> history_i, std::span<const double> history_j, int horizon);

// Exponentially averaged squared action gap. The first update is the plain
// squared gap; afterwards h_t = alpha * h_{t-1} + (1 - alpha) * gap^2.
class MomState {
 public:
  double update(double a_i, double a_j, double alpha_mom);
  double value() const { return h_prev_; }
  bool started() const { return started_; }

 private:
  double h_prev_ = 0.0;
  bool started_ = false;
};

// Per-dimension visit histograms over B bins, exposed as Laplace-smoothed
// probability vectors (+1 per bin), so downstream divergences never see an
// empty bin.
class VisitDistribution {
 public:
  VisitDistribution(int dims, int bins);

  void record(std::span<const int> index);

  std::vector<double> distribution(int dim) const;

  int dims() const { return static_cast<int>(counts_.size()); }
  int bins() const { return bins_; }
  std::uint64_t total() const { return total_; }

 private:
  int bins_;
  std::uint64_t total_ = 0;
  std::vector<std::vector<std::uint64_t>> counts_;
};

// Jensen-Shannon divergence with base-2 logarithms, so the result lies in
// [0,1]. Arguments are canonically ordered before evaluation, making
// jsd(p,q) and jsd(q,p) the same floating-point expression.
double jsd(std::span<const double> p, std::span<const double> q);

// Sum of per-dimension divergences between two players' visit histograms.
double jsd_sum(const VisitDistribution& a, const VisitDistribution& b);

// Adaptive transfer weight: 0 while exploration dominates (epsilon >=
// beta_tf) or the players roam disjoint states (divergence >= 1); otherwise
// 1 - divergence.
double alpha_tf_from_divergence(double epsilon, double beta_tf, double divergence_sum);
double alpha_tf(double epsilon, double beta_tf, const VisitDistribution& visit_i,
                const VisitDistribution& visit_j);

// Utility with the transfer penalty attached: u - alpha * h.
double modified_utility(double u_base, double alpha, double h_loss);

}  // namespace tlsbpg
