#pragma once

#include <stdexcept>
#include <string>

namespace tlsbpg {

// Bad run configuration: malformed files, out-of-range parameters, mismatched
// dimensions. Maps to CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural problem in a module graph (cycle, dangling edge, reservoir
// chained to reservoir). Maps to CLI exit code 3.
struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A serialized performance map could not be read or does not match the
// current topology (wrong bins, wrong dimension, corrupt rows).
struct PolicyLoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Probability vector is not normalized, not positive, or lengths disagree.
struct InvalidDistribution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// NaN offered as a map utility.
struct InvalidUtility : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A performance map has no filled cell to interpolate from; the caller is
// expected to explore instead.
struct NoKnowledge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Latent fit requested with zero samples.
struct EmptyFit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tlsbpg
