#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tlsbpg/performance_map.hpp"
#include "tlsbpg/rng.hpp"
#include "tlsbpg/transfer.hpp"

namespace tlsbpg {

// Exponential exploration decay with a floor: eps(t) = eps0 * gamma^t,
// clamped below at eps_min.
struct DecaySchedule {
  double eps0 = 1.0;
  double eps_min = 0.02;
  double gamma = 0.999;

  double at(std::int64_t step) const;

  // Chooses gamma so the floor is reached at `knee` of the total step count.
  static DecaySchedule reach_floor(double eps0, double eps_min, std::int64_t total_steps,
                                   double knee = 0.8);
};

// One actuator-controlling learner: its performance map, exploration state,
// seeded action stream, recent action window and state-visit histograms.
class PlayerAgent {
 public:
  PlayerAgent(std::string name, int state_dim, int bins, std::uint64_t stream_seed,
              std::size_t history_capacity = 64);

  const std::string& name() const { return name_; }
  int state_dim() const { return map_.dim(); }

  PerformanceMap& map() { return map_; }
  const PerformanceMap& map() const { return map_; }
  void replace_map(PerformanceMap m);

  double epsilon() const { return epsilon_; }
  void set_epsilon(double eps);

  // Epsilon-greedy over the map: uniform random action with probability
  // epsilon, interpolated best response otherwise. An empty map always
  // explores. Returns (action, explored).
  std::pair<double, bool> select_action(std::span<const double> state);

  void record_action(double action);
  std::span<const double> action_history() const { return history_; }

  VisitDistribution& visits() { return visits_; }
  const VisitDistribution& visits() const { return visits_; }

  RandomStream& rng() { return rng_; }

 private:
  std::string name_;
  PerformanceMap map_;
  VisitDistribution visits_;
  RandomStream rng_;
  double epsilon_ = 1.0;
  std::size_t history_capacity_;
  std::vector<double> history_;  // most-recent-last
};

}  // namespace tlsbpg
