#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tlsbpg/bgs.hpp"
#include "tlsbpg/transfer.hpp"

namespace tlsbpg {

enum class Variant { kBaseline, kSw, kMom, kRbf };

Variant variant_from_string(const std::string& s);
std::string to_string(Variant v);

enum class UtilityScheme { kBgs, kLsbgs };

enum class PairSelection { kManual, kSimilarity };

struct RunSettings {
  int episodes = 5;
  std::int64_t steps_per_episode = 20000;
  int adaptation_interval = 10;
  int bins = 40;
  std::uint64_t seed = 1;
  Variant variant = Variant::kBaseline;
  double epsilon0 = 1.0;
  double epsilon_min = 0.02;
  double epsilon_knee = 0.8;  // fraction of training where the floor is hit
  double dt = 1.0;

  void validate() const;
};

struct UtilitySettings {
  UtilityWeights weights;
  double demand_lps = 0.125;
  UtilityScheme scheme = UtilityScheme::kBgs;
};

struct TransferSettings {
  std::vector<std::pair<std::string, std::string>> pair_names;
  double beta_tf = 0.8;
  int horizon = 10;
  double alpha_mom = 0.5;
  PairSelection pair_selection = PairSelection::kManual;
  int top_k = 1;
  std::int64_t selection_step = 200;  // adaptation step at which pairs are fixed
};

struct RbfSettings {
  int grid_side = 3;
  double sigma = -1.0;  // <= 0: default 0.5 / grid_side
  int update_interval = 10;
  int latent_horizon = 10;
};

struct StationConfig {
  std::string id;
  double silo_capacity = 17.42;
  double hopper_capacity = 9.1;
  double initial_fill = 0.5;
  bool supply = false;
  std::vector<std::string> actuator_names;  // declaration order = player order
};

struct ActuatorConfig {
  std::string name;
  std::string station;
  ActuatorKind kind = ActuatorKind::kContinuous;
  double max_flow_lps = 0.3;
  double power_nominal_kw = 0.1;
  double power_standby_kw = 0.0;
  std::string source;  // "self.silo", "self.hopper" or "prev.out"
  std::string sink;
};

// One parsed run configuration file.
struct FullConfig {
  RunSettings run;
  UtilitySettings utility;
  TransferSettings transfer;
  RbfSettings rbf;
  std::map<std::string, StationConfig> stations;
  std::map<std::string, ActuatorConfig> actuators;
  std::string sequence = "1-2-3-4";

  static FullConfig parse(const std::string& text);
  static FullConfig load_file(const std::string& path);
};

// Sequence grammar: positions joined by '-', parallel stations inside a
// position joined by "//". A station id may appear more than once; each
// occurrence instantiates a fresh copy of its hardware.
std::vector<std::vector<std::string>> parse_sequence(const std::string& sequence);

struct BuiltTopology {
  ModuleGraph graph;
  // Per actuator instance: base actuator name it clones (for policy reuse
  // across resequenced lines).
  std::vector<std::string> donor_names;
};

// Instantiates the station chain described by the sequence. Validation
// failures (unknown stations, empty sequence, unreachable wiring) raise
// TopologyError.
BuiltTopology build_topology(const FullConfig& config);

// Convenience wrapper matching the one-call shape used by tools: parse +
// build + validate.
ModuleGraph load_topology(const std::string& config_text);

}  // namespace tlsbpg
