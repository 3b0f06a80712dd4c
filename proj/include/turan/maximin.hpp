#pragma once

#include <turan/polynomial.hpp>
#include <turan/rng.hpp>

#include <span>
#include <vector>

namespace turan {

struct MaximinConfig {
    int restarts = 50;
    double temperature_start = 1.0;
    double temperature_end = 1e-4;
    double temperature_factor = 0.5;
    int iterations_per_stage = 40;
    /// Best softmin candidates handed to the trust-region LP refinement.
    int refine_candidates = 2;
    int refine_iterations = 200;
    /// Largest face lattice scanned to seed a start point.
    std::uint64_t seed_grid_points = 2000;
};

struct MaximinResult {
    std::vector<double> x;
    double value = 0.0;
    long iterations = 0;
    /// Improvement the last linearised subproblem still predicted.
    double residual = 0.0;
};

/// Value of min_j forms[j](x).
double min_of_forms(std::span<const HomogeneousPolynomial *const> forms, std::span<const double> x);

/// Maximises min_j forms[j](x) over the face of the simplex spanned by
/// `support` (coordinates outside it are zero). Smoothed ascent on the
/// softmin surrogate with a decreasing temperature from several starts,
/// followed by trust-region sequential LP on the exact max-min. For linear
/// forms the first LP step over the whole face is already exact.
MaximinResult maximize_min_on_face(std::span<const HomogeneousPolynomial *const> forms, std::span<const int> support,
                                   std::size_t dimension, const MaximinConfig &config, Rng rng,
                                   std::span<const std::vector<double>> extra_starts = {});

/// Trust-region sequential LP refinement of one point.
MaximinResult refine_maximin(std::span<const HomogeneousPolynomial *const> forms, std::span<const int> support,
                             std::vector<double> x, int max_iterations);

} // namespace turan
