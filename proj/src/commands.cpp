#include <turan/commands.hpp>
#include <turan/palette_lagrangian.hpp>

#include <cmath>

namespace turan {

std::vector<ObservationRow> reproduce_observation(const SolverConfig &config)
{
    struct Target {
        std::string name;
        Hypergraph graph;
        double value;
        std::string text;
        double tolerance;
    };
    std::vector<Target> targets{
        {"C_3", tight_cycle(3), 1.0 / 27.0, "1/27", 1e-8},
        {"C_4", tight_cycle(4), 1.0 / 16.0, "1/16", 1e-8},
        {"C_5", tight_cycle(5), 1.0 / 25.0, "1/25", 1e-8},
        {"C_6", tight_cycle(6), 1.0 / 27.0, "1/27", 1e-8},
        {"C_7", tight_cycle(7), 1.0 / 27.0, "1/27", 1e-8},
        {"F_{3,2}", make_f32(), (5.0 * std::sqrt(5.0) + 63.0) / 1922.0, "(5*sqrt(5)+63)/1922", 1e-6},
    };
    std::vector<ObservationRow> rows;
    for (const auto &t : targets) {
        ObservationRow row;
        row.graph = t.name;
        row.computed = lagrangian(t.graph, config).value / 6.0;
        row.target = t.value;
        row.target_text = t.text;
        row.error = std::abs(row.computed - row.target);
        row.tolerance = t.tolerance;
        row.pass = row.error <= row.tolerance;
        rows.push_back(row);
    }
    return rows;
}

PtCheck pt_check(const Hypergraph &graph, int t, const SolverConfig &config)
{
    PtCheck out;
    out.t = t;
    Palette palette = build_pt(graph, t);
    out.lambda_graph = lagrangian(graph, config).value;
    out.scaled = out.lambda_graph * t / 6.0;
    PaletteSolverConfig palette_config;
    palette_config.ascent = config;
    palette_config.threads = config.threads;
    out.lambda_palette = palette_lagrangian(palette, StarMode::vvv, palette_config).value;
    out.difference = std::abs(out.lambda_palette - out.scaled);
    out.pass = out.difference < kPtTolerance;
    return out;
}

} // namespace turan
