#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "tlsbpg/grid.hpp"

namespace tlsbpg {

struct MapCell {
  double action = 0.0;
  double utility = -std::numeric_limits<double>::infinity();

  bool filled() const { return utility != -std::numeric_limits<double>::infinity(); }
};

// Per-player policy: a dense B^d grid over the discretized state space, each
// cell holding the best action seen there and the utility it earned. Cell
// utilities only ever increase (strict best-response improvement, ties keep
// the incumbent).
class PerformanceMap {
 public:
  PerformanceMap(int dim, int bins_per_dim);

  int dim() const { return dim_; }
  int bins() const { return bins_; }
  std::size_t cell_count() const { return cells_.size(); }
  std::size_t filled_count() const { return filled_; }

  const MapCell& cell(std::size_t flat) const { return cells_[flat]; }
  const MapCell& cell_at(std::span<const int> index) const;

  // Stores (action, utility) at the cell for `state` iff utility strictly
  // beats the incumbent. Returns whether the cell changed. NaN utilities are
  // rejected with InvalidUtility.
  bool update(std::span<const double> state, double action, double utility);

  // Inverse-squared-distance weighting over every filled support point,
  // w_k = 1 / (||s - c_k||^2 + delta). An exact hit on a support center
  // returns that cell's action unchanged. Empty map -> nullopt.
  std::optional<double> try_interpolate(std::span<const double> state) const;

  // Same, but an empty map raises NoKnowledge (the caller must explore).
  double interpolate(std::span<const double> state) const;

  // Flat text format: "tlsbpg-map <version>" header with dim and bins, then
  // one "action utility" row per cell in row-major order; empty cells carry
  // a -inf utility sentinel.
  void save(std::ostream& out) const;
  static PerformanceMap load(std::istream& in);

  bool operator==(const PerformanceMap& other) const;

 private:
  int dim_;
  int bins_;
  std::size_t filled_ = 0;
  std::vector<MapCell> cells_;
};

}  // namespace tlsbpg
