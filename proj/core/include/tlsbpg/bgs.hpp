#pragma once

#include <span>
#include <string>
#include <vector>

#include "tlsbpg/grid.hpp"

namespace tlsbpg {

enum class ActuatorKind { kContinuous, kDuration, kBinary };

ActuatorKind actuator_kind_from_string(const std::string& s);
std::string to_string(ActuatorKind k);

struct Reservoir {
  std::string name;
  double capacity_liters = 1.0;
  double fill_liters = 0.0;
  double overflow_liters = 0.0;  // accumulated spill, monotone non-decreasing
  double initial_fill_frac = 0.5;
  bool supply = false;  // topped up from outside at every step
};

struct ActuatorSpec {
  std::string name;
  ActuatorKind kind = ActuatorKind::kContinuous;
  double max_flow_lps = 0.3;
  double power_nominal_kw = 0.1;
  double power_standby_kw = 0.0;
  int source = -1;  // reservoir index; -1 = system inlet
  int sink = -1;    // reservoir index, required
};

// Alternating reservoir/actuator chain, possibly with parallel branches.
// Terminal reservoirs are where the production demand draws from.
struct ModuleGraph {
  std::vector<Reservoir> reservoirs;
  std::vector<ActuatorSpec> actuators;
  std::vector<int> terminal_reservoirs;

  // Structural checks: indices in range, every actuator has a sink and a
  // source (or is an inlet), no flow cycles, at least one terminal buffer.
  void validate() const;

  double terminal_capacity() const;
};

struct StepOutcome {
  std::vector<double> power_kw;        // one entry per actuator
  double overflow_l = 0.0;             // spilled this step, all reservoirs
  double requested_l = 0.0;            // demand_lps * dt
  double shipped_l = 0.0;              // demand actually served
  double inflow_to_terminal_l = 0.0;
  double external_in_l = 0.0;
  double final_fill_norm_pre = 0.0;    // terminal fill fraction at step start
  double mass_residual_l = 0.0;        // conservation defect, ~0 by construction
};

// Discrete-time material flow simulator. Flows are processed in actuator
// order within a step; each transfer is limited by source availability, and
// volume beyond the sink's capacity is spilled into its overflow
// accumulator. The terminal buffers drain at the demand rate afterwards.
class BgsEnv {
 public:
  BgsEnv(ModuleGraph graph, double dt_seconds, double demand_lps);

  void reset();

  int player_count() const { return static_cast<int>(graph_.actuators.size()); }
  const ModuleGraph& graph() const { return graph_; }

  // (source fill, sink fill), both normalized; inlet sources read as 1.0.
  StateVector player_state(int player) const;

  double source_fill_norm(int player) const;
  double sink_fill_norm(int player) const;
  double final_fill_norm() const;

  // True for actuators that feed a terminal buffer (the "last players").
  bool is_last_player(int player) const;

  double dt() const { return dt_; }
  double demand_lps() const { return demand_lps_; }

  StepOutcome step(std::span<const double> actions);

 private:
  ModuleGraph graph_;
  double dt_;
  double demand_lps_;
};

struct UtilityWeights {
  double alpha_l = 1.0;
  double alpha_p = 1.0;
  double alpha_d = 0.5;
  double h_p_limit = 0.1;  // lower fill limit (starvation guard)
  double h_s_limit = 0.9;  // upper fill limit (congestion guard)

  void validate() const;
};

// Deficit-rate contribution of one step: (demanded - inflow) * dt while the
// final buffer sits empty, zero otherwise. Integrate over the adaptation
// interval and clamp at zero to obtain V_D.
double demand_term(double final_fill_norm, double demanded_lps, double inflow_lps, double dt);

// Indicator integrals over an interval of per-step fills: time below the
// lower limit (prior reservoir) and time above the upper limit (next
// reservoir).
std::pair<double, double> constraint_terms(std::span<const double> fills_prior,
                                           std::span<const double> fills_next,
                                           const UtilityWeights& weights, double dt);

// Three-term local utility: last player trades the congestion term for the
// production-demand term. The demand denominator is clamped at 1e-6 when
// alpha_d * V_D runs into the singularity; `demand_clamped` reports it.
double utility_bgs(bool is_last, double l_p, double l_s, double power_kw, double v_d,
                   const UtilityWeights& weights, bool* demand_clamped = nullptr);

// Larger-scale variant: every non-last player carries the demand term too
// (four terms), the last player is unchanged.
double utility_lsbgs(bool is_last, double l_p, double l_s, double power_kw, double v_d,
                     const UtilityWeights& weights, bool* demand_clamped = nullptr);

// Global potential: plain sum of the local utilities.
double potential(std::span<const double> utilities);

}  // namespace tlsbpg
