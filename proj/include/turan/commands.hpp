#pragma once

#include <turan/hypergraph.hpp>
#include <turan/lagrangian.hpp>

#include <string>
#include <vector>

namespace turan {

struct ObservationRow {
    std::string graph;
    double computed = 0.0;
    double target = 0.0;
    std::string target_text;
    double error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// (1/6) times the Lagrangian of the tight cycles C_3..C_7 and of F_{3,2},
/// against their closed forms.
std::vector<ObservationRow> reproduce_observation(const SolverConfig &config = {});

struct PtCheck {
    int t = 0;
    double lambda_graph = 0.0;
    /// (t/6) times lambda_graph.
    double scaled = 0.0;
    double lambda_palette = 0.0;
    double difference = 0.0;
    bool pass = false;
};

inline constexpr double kPtTolerance = 1e-7;

/// Compares the vvv palette Lagrangian of p_t(graph) with (t/6) times the
/// Lagrangian of the graph.
PtCheck pt_check(const Hypergraph &graph, int t, const SolverConfig &config = {});

} // namespace turan
