#include "tlsbpg/player.hpp"

#include <cmath>

#include "tlsbpg/errors.hpp"

namespace tlsbpg {

double DecaySchedule::at(std::int64_t step) const {
  const double eps = eps0 * std::pow(gamma, static_cast<double>(step));
  return eps < eps_min ? eps_min : eps;
}

DecaySchedule DecaySchedule::reach_floor(double eps0, double eps_min, std::int64_t total_steps,
                                         double knee) {
  if (eps0 <= 0.0 || eps_min <= 0.0 || eps_min > eps0) {
    throw ConfigError("decay schedule: need 0 < eps_min <= eps0");
  }
  if (total_steps < 1 || knee <= 0.0 || knee > 1.0) {
    throw ConfigError("decay schedule: bad step count or knee");
  }
  DecaySchedule s;
  s.eps0 = eps0;
  s.eps_min = eps_min;
  const double knee_steps = knee * static_cast<double>(total_steps);
  s.gamma = std::exp(std::log(eps_min / eps0) / knee_steps);
  return s;
}

PlayerAgent::PlayerAgent(std::string name, int state_dim, int bins, std::uint64_t stream_seed,
                         std::size_t history_capacity)
    : name_(std::move(name)),
      map_(state_dim, bins),
      visits_(state_dim, bins),
      rng_(stream_seed),
      history_capacity_(history_capacity) {
  if (history_capacity_ < 1) throw ConfigError("player: history capacity must be >= 1");
}

void PlayerAgent::replace_map(PerformanceMap m) {
  if (m.dim() != map_.dim() || m.bins() != map_.bins()) {
    throw PolicyLoadError("player '" + name_ + "': map shape does not match topology");
  }
  map_ = std::move(m);
}

void PlayerAgent::set_epsilon(double eps) {
  if (eps < 0.0 || eps > 1.0) throw ConfigError("player: epsilon must be in [0,1]");
  epsilon_ = eps;
}

std::pair<double, bool> PlayerAgent::select_action(std::span<const double> state) {
  if (rng_.uniform_unit() < epsilon_) {
    return {rng_.uniform_unit(), true};
  }
  if (auto a = map_.try_interpolate(state)) {
    return {*a, false};
  }
  return {rng_.uniform_unit(), true};  // nothing learned yet
}

void PlayerAgent::record_action(double action) {
  history_.push_back(action);
  if (history_.size() > history_capacity_) {
    history_.erase(history_.begin());
  }
}

}  // namespace tlsbpg
