#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tlsbpg {

// Normalized state: one fill level in [0,1] per neighboring reservoir.
using StateVector = std::vector<double>;

// Per-dimension bin indices into a B^d grid.
using GridIndex = std::vector<int>;

// Equidistant binning: k = floor(v * bins), clamped into [0, bins-1] so that
// v = 1.0 lands in the top bin.
GridIndex discretize(std::span<const double> state, int bins_per_dim);

// Center of a cell, ((k + 0.5) / B per dimension). Support points of the
// performance maps live here.
StateVector cell_center(std::span<const int> index, int bins_per_dim);

std::size_t flat_index(std::span<const int> index, int bins_per_dim);

std::size_t grid_cell_count(int dim, int bins_per_dim);

}  // namespace tlsbpg
