#include "tlsbpg/bgs.hpp"

#include <cmath>
#include <queue>

#include "tlsbpg/errors.hpp"

namespace tlsbpg {

ActuatorKind actuator_kind_from_string(const std::string& s) {
  if (s == "continuous") return ActuatorKind::kContinuous;
  if (s == "duration") return ActuatorKind::kDuration;
  if (s == "binary") return ActuatorKind::kBinary;
  throw ConfigError("unknown actuator kind '" + s + "'");
}

std::string to_string(ActuatorKind k) {
  switch (k) {
    case ActuatorKind::kContinuous: return "continuous";
    case ActuatorKind::kDuration: return "duration";
    case ActuatorKind::kBinary: return "binary";
  }
  return "?";
}

void ModuleGraph::validate() const {
  if (reservoirs.empty() || actuators.empty()) {
    throw TopologyError("module graph: needs at least one reservoir and one actuator");
  }
  const int n_res = static_cast<int>(reservoirs.size());
  for (const Reservoir& r : reservoirs) {
    if (r.capacity_liters <= 0.0) {
      throw TopologyError("reservoir '" + r.name + "': capacity must be positive");
    }
    if (r.initial_fill_frac < 0.0 || r.initial_fill_frac > 1.0) {
      throw TopologyError("reservoir '" + r.name + "': initial fill outside [0,1]");
    }
  }
  for (const ActuatorSpec& a : actuators) {
    if (a.sink < 0 || a.sink >= n_res) {
      throw TopologyError("actuator '" + a.name + "': dangling sink");
    }
    if (a.source >= n_res) {
      throw TopologyError("actuator '" + a.name + "': dangling source");
    }
    if (a.source == a.sink) {
      throw TopologyError("actuator '" + a.name + "': source equals sink");
    }
    if (a.max_flow_lps < 0.0 || a.power_nominal_kw < 0.0 || a.power_standby_kw < 0.0) {
      throw TopologyError("actuator '" + a.name + "': negative flow or power");
    }
    if (a.power_standby_kw > a.power_nominal_kw) {
      throw TopologyError("actuator '" + a.name + "': standby power above nominal");
    }
  }
  if (terminal_reservoirs.empty()) {
    throw TopologyError("module graph: no terminal buffer for the demand drain");
  }
  for (int t : terminal_reservoirs) {
    if (t < 0 || t >= n_res) throw TopologyError("module graph: terminal index out of range");
  }

  // Kahn traversal over reservoir->actuator->reservoir edges; leftovers mean
  // a flow cycle. The alternating structure itself is enforced by the edge
  // representation (actuators only ever connect two reservoirs).
  std::vector<int> indegree(reservoirs.size(), 0);
  for (const ActuatorSpec& a : actuators) ++indegree[a.sink];
  std::queue<int> ready;
  for (int r = 0; r < n_res; ++r) {
    if (indegree[r] == 0) ready.push(r);
  }
  int visited = 0;
  while (!ready.empty()) {
    const int r = ready.front();
    ready.pop();
    ++visited;
    for (const ActuatorSpec& a : actuators) {
      if (a.source == r && --indegree[a.sink] == 0) ready.push(a.sink);
    }
  }
  if (visited != n_res) throw TopologyError("module graph: flow cycle detected");
}

double ModuleGraph::terminal_capacity() const {
  double cap = 0.0;
  for (int t : terminal_reservoirs) cap += reservoirs[t].capacity_liters;
  return cap;
}

BgsEnv::BgsEnv(ModuleGraph graph, double dt_seconds, double demand_lps)
    : graph_(std::move(graph)), dt_(dt_seconds), demand_lps_(demand_lps) {
  if (dt_ <= 0.0) throw ConfigError("environment: dt must be positive");
  if (demand_lps_ < 0.0) throw ConfigError("environment: demand must be >= 0");
  graph_.validate();
  reset();
}

void BgsEnv::reset() {
  for (Reservoir& r : graph_.reservoirs) {
    r.fill_liters = r.initial_fill_frac * r.capacity_liters;
    r.overflow_liters = 0.0;
  }
}

StateVector BgsEnv::player_state(int player) const {
  return {source_fill_norm(player), sink_fill_norm(player)};
}

double BgsEnv::source_fill_norm(int player) const {
  const ActuatorSpec& a = graph_.actuators.at(player);
  if (a.source < 0) return 1.0;  // inlet never starves
  const Reservoir& r = graph_.reservoirs[a.source];
  return r.fill_liters / r.capacity_liters;
}

double BgsEnv::sink_fill_norm(int player) const {
  const ActuatorSpec& a = graph_.actuators.at(player);
  const Reservoir& r = graph_.reservoirs[a.sink];
  return r.fill_liters / r.capacity_liters;
}

double BgsEnv::final_fill_norm() const {
  double fill = 0.0;
  for (int t : graph_.terminal_reservoirs) fill += graph_.reservoirs[t].fill_liters;
  return fill / graph_.terminal_capacity();
}

bool BgsEnv::is_last_player(int player) const {
  const int sink = graph_.actuators.at(player).sink;
  for (int t : graph_.terminal_reservoirs) {
    if (t == sink) return true;
  }
  return false;
}

StepOutcome BgsEnv::step(std::span<const double> actions) {
  if (static_cast<int>(actions.size()) != player_count()) {
    throw ConfigError("environment: one action per actuator required");
  }

  StepOutcome out;
  out.power_kw.resize(actions.size());
  out.final_fill_norm_pre = final_fill_norm();
  out.requested_l = demand_lps_ * dt_;

  double fill_before = 0.0;
  for (const Reservoir& r : graph_.reservoirs) fill_before += r.fill_liters;

  // Supply reservoirs refill from outside before any transport happens.
  for (Reservoir& r : graph_.reservoirs) {
    if (r.supply && r.fill_liters < r.capacity_liters) {
      out.external_in_l += r.capacity_liters - r.fill_liters;
      r.fill_liters = r.capacity_liters;
    }
  }

  std::vector<bool> is_terminal(graph_.reservoirs.size(), false);
  for (int t : graph_.terminal_reservoirs) is_terminal[t] = true;

  for (std::size_t k = 0; k < actions.size(); ++k) {
    const ActuatorSpec& a = graph_.actuators[k];
    double act = actions[k];
    if (act < 0.0) act = 0.0;
    if (act > 1.0) act = 1.0;
    // Binary actuators threshold at 0.5; duration actuators duty-cycle
    // within the step, which lands on the same linear scaling.
    const double effective = a.kind == ActuatorKind::kBinary ? (act >= 0.5 ? 1.0 : 0.0) : act;

    double moved = effective * a.max_flow_lps * dt_;
    if (a.source >= 0) {
      Reservoir& src = graph_.reservoirs[a.source];
      if (moved > src.fill_liters) moved = src.fill_liters;
      src.fill_liters -= moved;
    } else {
      out.external_in_l += moved;
    }
    Reservoir& snk = graph_.reservoirs[a.sink];
    const double headroom = snk.capacity_liters - snk.fill_liters;
    const double into = moved < headroom ? moved : headroom;
    const double spill = moved - into;
    snk.fill_liters += into;
    snk.overflow_liters += spill;
    out.overflow_l += spill;
    if (is_terminal[a.sink]) out.inflow_to_terminal_l += into;

    out.power_kw[k] = a.power_standby_kw + effective * (a.power_nominal_kw - a.power_standby_kw);
  }

  // Production demand drains the terminal buffers, in chain order.
  double remaining = out.requested_l;
  for (int t : graph_.terminal_reservoirs) {
    if (remaining <= 0.0) break;
    Reservoir& r = graph_.reservoirs[t];
    const double take = remaining < r.fill_liters ? remaining : r.fill_liters;
    r.fill_liters -= take;
    out.shipped_l += take;
    remaining -= take;
  }

  double fill_after = 0.0;
  for (const Reservoir& r : graph_.reservoirs) fill_after += r.fill_liters;
  out.mass_residual_l =
      (fill_after - fill_before) - (out.external_in_l - out.shipped_l - out.overflow_l);
  return out;
}

void UtilityWeights::validate() const {
  if (alpha_l <= 0.0 || alpha_p <= 0.0 || alpha_d <= 0.0) {
    throw ConfigError("utility weights must be positive");
  }
  if (!(h_p_limit >= 0.0 && h_p_limit < h_s_limit && h_s_limit <= 1.0)) {
    throw ConfigError("utility limits must satisfy 0 <= H_p < H_s <= 1");
  }
}

double demand_term(double final_fill_norm, double demanded_lps, double inflow_lps, double dt) {
  if (final_fill_norm > 0.0) return 0.0;
  return (demanded_lps - inflow_lps) * dt;
}

std::pair<double, double> constraint_terms(std::span<const double> fills_prior,
                                           std::span<const double> fills_next,
                                           const UtilityWeights& weights, double dt) {
  double l_p = 0.0, l_s = 0.0;
  for (double h : fills_prior) {
    if (h < weights.h_p_limit) l_p += dt;
  }
  for (double h : fills_next) {
    if (h > weights.h_s_limit) l_s += dt;
  }
  return {l_p, l_s};
}

namespace {

constexpr double kDemandDenominatorFloor = 1e-6;

double demand_utility_term(double alpha_d, double v_d, bool* clamped) {
  double den = 1.0 - alpha_d * v_d;
  if (den < kDemandDenominatorFloor) {
    den = kDemandDenominatorFloor;
    if (clamped) *clamped = true;
  }
  return 1.0 / den;
}

}  // namespace

double utility_bgs(bool is_last, double l_p, double l_s, double power_kw, double v_d,
                   const UtilityWeights& w, bool* demand_clamped) {
  if (demand_clamped) *demand_clamped = false;
  const double term_lp = 1.0 / (1.0 + w.alpha_l * l_p);
  const double term_p = 1.0 / (1.0 + w.alpha_p * power_kw);
  if (is_last) {
    return term_lp + term_p + demand_utility_term(w.alpha_d, v_d, demand_clamped);
  }
  const double term_ls = 1.0 / (1.0 + w.alpha_l * l_s);
  return term_lp + term_ls + term_p;
}

double utility_lsbgs(bool is_last, double l_p, double l_s, double power_kw, double v_d,
                     const UtilityWeights& w, bool* demand_clamped) {
  if (demand_clamped) *demand_clamped = false;
  const double term_lp = 1.0 / (1.0 + w.alpha_l * l_p);
  const double term_p = 1.0 / (1.0 + w.alpha_p * power_kw);
  const double term_d = demand_utility_term(w.alpha_d, v_d, demand_clamped);
  if (is_last) {
    return term_lp + term_p + term_d;
  }
  const double term_ls = 1.0 / (1.0 + w.alpha_l * l_s);
  return term_lp + term_ls + term_p + term_d;
}

double potential(std::span<const double> utilities) {
  double sum = 0.0;
  for (double u : utilities) sum += u;
  return sum;
}

}  // namespace tlsbpg
