#include "tlsbpg/performance_map.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tlsbpg/errors.hpp"

namespace tlsbpg {

namespace {
constexpr double kIdwDelta = 1e-9;
constexpr double kExactHit = 1e-18;  // squared distance treated as "on the support point"
constexpr int kMapFormatVersion = 1;
}  // namespace

PerformanceMap::PerformanceMap(int dim, int bins_per_dim) : dim_(dim), bins_(bins_per_dim) {
  if (dim < 1) throw ConfigError("performance map: dim must be >= 1");
  if (bins_per_dim < 2) throw ConfigError("performance map: bins must be >= 2");
  cells_.resize(grid_cell_count(dim_, bins_));
}

const MapCell& PerformanceMap::cell_at(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != dim_) {
    throw ConfigError("performance map: index dimension mismatch");
  }
  return cells_[flat_index(index, bins_)];
}

bool PerformanceMap::update(std::span<const double> state, double action, double utility) {
  if (static_cast<int>(state.size()) != dim_) {
    throw ConfigError("performance map: state dimension mismatch");
  }
  if (std::isnan(utility)) throw InvalidUtility("performance map: NaN utility rejected");
  const GridIndex idx = discretize(state, bins_);
  MapCell& c = cells_[flat_index(idx, bins_)];
  if (utility > c.utility) {
    if (!c.filled()) ++filled_;
    c.action = action;
    c.utility = utility;
    return true;
  }
  return false;
}

std::optional<double> PerformanceMap::try_interpolate(std::span<const double> state) const {
  if (static_cast<int>(state.size()) != dim_) {
    throw ConfigError("performance map: state dimension mismatch");
  }
  if (filled_ == 0) return std::nullopt;

  double num = 0.0;
  double den = 0.0;
  GridIndex idx(dim_);
  for (std::size_t flat = 0; flat < cells_.size(); ++flat) {
    const MapCell& c = cells_[flat];
    if (!c.filled()) continue;
    // Decode the cell's center from its flat index.
    std::size_t rest = flat;
    for (int d = dim_ - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(rest % bins_);
      rest /= bins_;
    }
    double dist2 = 0.0;
    for (int d = 0; d < dim_; ++d) {
      const double delta = state[d] - (idx[d] + 0.5) / bins_;
      dist2 += delta * delta;
    }
    if (dist2 < kExactHit) return c.action;
    const double w = 1.0 / (dist2 + kIdwDelta);
    num += w * c.action;
    den += w;
  }
  double a = num / den;
  if (a < 0.0) a = 0.0;
  if (a > 1.0) a = 1.0;
  return a;
}

double PerformanceMap::interpolate(std::span<const double> state) const {
  auto a = try_interpolate(state);
  if (!a) throw NoKnowledge("performance map: no filled cells");
  return *a;
}

void PerformanceMap::save(std::ostream& out) const {
  out << "tlsbpg-map " << kMapFormatVersion << "\n";
  out << "dim " << dim_ << "\n";
  out << "bins " << bins_ << "\n";
  out.precision(17);
  for (const MapCell& c : cells_) {
    if (c.filled()) {
      out << c.action << ' ' << c.utility << '\n';
    } else {
      out << "0 -inf\n";
    }
  }
}

PerformanceMap PerformanceMap::load(std::istream& in) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "tlsbpg-map" || version != kMapFormatVersion) {
    throw PolicyLoadError("performance map: bad header");
  }
  std::string key;
  int dim = 0, bins = 0;
  if (!(in >> key >> dim) || key != "dim") throw PolicyLoadError("performance map: missing dim");
  if (!(in >> key >> bins) || key != "bins") throw PolicyLoadError("performance map: missing bins");
  if (dim < 1 || dim > 8 || bins < 2 || bins > 4096) {
    throw PolicyLoadError("performance map: implausible dim/bins");
  }
  PerformanceMap map(dim, bins);
  for (std::size_t flat = 0; flat < map.cells_.size(); ++flat) {
    double action = 0.0;
    std::string util;
    if (!(in >> action >> util)) throw PolicyLoadError("performance map: truncated cell table");
    MapCell& c = map.cells_[flat];
    if (util == "-inf") continue;
    std::istringstream conv(util);
    if (!(conv >> c.utility) || std::isnan(c.utility)) {
      throw PolicyLoadError("performance map: bad utility value");
    }
    c.action = action;
    ++map.filled_;
  }
  return map;
}

bool PerformanceMap::operator==(const PerformanceMap& other) const {
  if (dim_ != other.dim_ || bins_ != other.bins_) return false;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].filled() != other.cells_[i].filled()) return false;
    if (cells_[i].filled() &&
        (cells_[i].action != other.cells_[i].action || cells_[i].utility != other.cells_[i].utility)) {
      return false;
    }
  }
  return true;
}

}  // namespace tlsbpg
