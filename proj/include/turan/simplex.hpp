#pragma once

#include <turan/rng.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace turan {

/// Euclidean projection onto {x >= 0, sum x = 1} (sort-and-threshold).
std::vector<double> project_to_simplex(std::span<const double> y);

/// Projection onto the face of the simplex spanned by `support`; coordinates
/// outside the support are set to zero.
std::vector<double> project_to_face(std::span<const double> y, std::span<const int> support);

/// Uniformly random point of the simplex on `dimension` coordinates.
std::vector<double> random_simplex_point(std::size_t dimension, Rng &rng);

/// Number of compositions of `total` into `parts` non-negative parts,
/// C(total + parts - 1, parts - 1), saturating at UINT64_MAX.
std::uint64_t composition_count(int total, int parts);

/// Calls `visit` on every composition of `total` into `parts` non-negative
/// parts, in lexicographically decreasing order of the count vector.
void for_each_composition(int total, int parts, const std::function<void(std::span<const int>)> &visit);

} // namespace turan
