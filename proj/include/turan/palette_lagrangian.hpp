#pragma once

#include <turan/hypergraph.hpp>
#include <turan/lagrangian.hpp>
#include <turan/maximin.hpp>
#include <turan/palette.hpp>
#include <turan/weighting.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace turan {

/// A colour counts as present in a weighting when its weight exceeds this.
inline constexpr double kPositivityEps = 1e-12;

// Pointwise evaluation. The Weighting overloads require the labels to be
// exactly the palette's colours; the span overloads take weights indexed by
// dense colour index and do not require a simplex point.

/// Weight vector of `x` in dense colour order; throws if the labels are not
/// the palette's colour set.
std::vector<double> colour_weights(const Palette &palette, const Weighting &x);

double lambda_vvv(const Palette &palette, std::span<const double> x);
double lambda_vvv(const Palette &palette, const Weighting &x);

/// Minimum over the three positions of the weight of the triples having
/// colour `a` in that position (product of the two other entries).
double degree_lagrangian(const Palette &palette, int a_index, std::span<const double> x);
double degree_lagrangian(const Palette &palette, Colour a, const Weighting &x);

/// Minimum over the six ordered placements of colours a and b of the weight
/// of the remaining entry; a and b may coincide.
double codegree_lagrangian(const Palette &palette, int a_index, int b_index, std::span<const double> x);
double codegree_lagrangian(const Palette &palette, Colour a, Colour b, const Weighting &x);

/// Minimum of the degree Lagrangian over colours of positive weight.
double lambda_ev(const Palette &palette, std::span<const double> x, double eps = kPositivityEps);
double lambda_ev(const Palette &palette, const Weighting &x, double eps = kPositivityEps);

/// Minimum of the codegree Lagrangian over pairs of colours of positive weight.
double lambda_ee(const Palette &palette, std::span<const double> x, double eps = kPositivityEps);
double lambda_ee(const Palette &palette, const Weighting &x, double eps = kPositivityEps);

double lambda_star(const Palette &palette, StarMode star, std::span<const double> x, double eps = kPositivityEps);
double lambda_star(const Palette &palette, StarMode star, const Weighting &x, double eps = kPositivityEps);

/// The palette whose colours are the vertices of a 3-graph and which, for
/// each edge a<b<c, holds the first t permutations of (a,b,c) in
/// lexicographic order (abc, acb, bac, bca, cab, cba).
Palette build_pt(const Hypergraph &graph, int t);

struct PaletteSolverConfig {
    /// Used for vvv, which is a plain polynomial on the simplex.
    SolverConfig ascent;
    MaximinConfig maximin;
    /// Largest colour set for exact enumeration of supports (ev / ee).
    int support_cap = 12;
    /// Random supports tried in the fallback above the cap.
    int heuristic_supports = 256;
    int oracle_cap = 5;
    int oracle_resolution = 10;
    double positivity_eps = kPositivityEps;
    unsigned threads = 0;
};

struct PaletteLagrangianReport {
    StarMode star = StarMode::vvv;
    double value = 0.0;
    Weighting maximiser;
    /// Colours with weight above the positivity threshold.
    std::vector<Colour> support;
    /// ev: degree Lagrangian of each support colour at the maximiser.
    std::map<Colour, double> per_colour;
    /// ee: codegree Lagrangian of each support pair (a <= b).
    std::map<std::pair<Colour, Colour>, double> per_pair;
    SolverMethod method = SolverMethod::multistart_gradient;
    long iterations = 0;
    double residual = 0.0;
    /// Set when the support enumeration was replaced by the fallback.
    bool heuristic = false;
    std::string note;
    std::size_t supports_examined = 0;
    std::size_t supports_pruned = 0;
    std::optional<double> oracle_value;
    int oracle_resolution = 0;
};

/// Maximum over the simplex of the chosen palette Lagrangian. The empty
/// palette has value 0.
PaletteLagrangianReport palette_lagrangian(const Palette &palette, StarMode star,
                                           const PaletteSolverConfig &config = {});

struct PaletteGridResult {
    double value = 0.0;
    std::vector<int> counts;
};

/// Exact maximum of the chosen palette Lagrangian over simplex points with
/// denominator `resolution`.
PaletteGridResult palette_grid_oracle(const Palette &palette, StarMode star, int resolution,
                                      std::uint64_t budget = kDefaultGridBudget);

} // namespace turan
