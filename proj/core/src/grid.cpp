#include "tlsbpg/grid.hpp"

#include <cmath>

#include "tlsbpg/errors.hpp"

namespace tlsbpg {

GridIndex discretize(std::span<const double> state, int bins_per_dim) {
  if (bins_per_dim < 2) {
    throw ConfigError("discretize: bins_per_dim must be >= 2");
  }
  GridIndex idx(state.size());
  for (std::size_t d = 0; d < state.size(); ++d) {
    int k = static_cast<int>(std::floor(state[d] * bins_per_dim));
    if (k < 0) k = 0;
    if (k >= bins_per_dim) k = bins_per_dim - 1;
    idx[d] = k;
  }
  return idx;
}

StateVector cell_center(std::span<const int> index, int bins_per_dim) {
  StateVector c(index.size());
  for (std::size_t d = 0; d < index.size(); ++d) {
    c[d] = (index[d] + 0.5) / bins_per_dim;
  }
  return c;
}

std::size_t flat_index(std::span<const int> index, int bins_per_dim) {
  std::size_t flat = 0;
  for (int k : index) {
    flat = flat * static_cast<std::size_t>(bins_per_dim) + static_cast<std::size_t>(k);
  }
  return flat;
}

std::size_t grid_cell_count(int dim, int bins_per_dim) {
  std::size_t n = 1;
  for (int d = 0; d < dim; ++d) n *= static_cast<std::size_t>(bins_per_dim);
  return n;
}

}  // namespace tlsbpg
