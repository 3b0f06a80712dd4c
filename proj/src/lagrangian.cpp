#include <turan/lagrangian.hpp>
#include <turan/parallel.hpp>
#include <turan/rng.hpp>
#include <turan/simplex.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace turan {

namespace {

double factorial(int k)
{
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

std::vector<int> vertex_labels(int n)
{
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    return labels;
}

void check_dimension(const Hypergraph &graph, std::span<const double> x)
{
    if (x.size() != static_cast<std::size_t>(graph.order()))
        throw std::invalid_argument("weighting has " + std::to_string(x.size()) + " coordinates but the graph has " +
                                    std::to_string(graph.order()) + " vertices");
}

// Value first; near-ties go to the lexicographically smallest point rounded
// to 1e-9.
bool better(const SimplexMaximum &a, const SimplexMaximum &b)
{
    constexpr double tie = 1e-12;
    if (a.value > b.value + tie) return true;
    if (b.value > a.value + tie) return false;
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        double ra = std::round(a.x[i] * 1e9), rb = std::round(b.x[i] * 1e9);
        if (ra != rb) return ra < rb;
    }
    return false;
}

} // namespace

std::string_view to_string(SolverMethod method)
{
    switch (method) {
    case SolverMethod::multistart_gradient: return "multistart_gradient";
    case SolverMethod::grid: return "grid";
    case SolverMethod::support_enum: return "support_enum";
    }
    return "?";
}

std::vector<double> vertex_weights(const Hypergraph &graph, const Weighting &x)
{
    if (x.size() != static_cast<std::size_t>(graph.order()))
        throw std::invalid_argument("weighting has " + std::to_string(x.size()) + " labels but the graph has " +
                                    std::to_string(graph.order()) + " vertices");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.labels()[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("vertex weighting must be labelled 1..n");
    return {x.weights().begin(), x.weights().end()};
}

double lagrange_poly(const Hypergraph &graph, std::span<const double> x)
{
    check_dimension(graph, x);
    double total = 0.0;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        double p = 1.0;
        for (Vertex v : graph.edge(i)) p *= x[static_cast<std::size_t>(v - 1)];
        total += p;
    }
    return factorial(graph.uniformity()) * total;
}

double lagrange_poly(const Hypergraph &graph, const Weighting &x)
{
    return lagrange_poly(graph, vertex_weights(graph, x));
}

std::vector<double> lagrange_grad(const Hypergraph &graph, std::span<const double> x)
{
    check_dimension(graph, x);
    std::vector<double> g(x.size(), 0.0);
    double scale = factorial(graph.uniformity());
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto e = graph.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) {
            double p = scale;
            for (std::size_t l = 0; l < e.size(); ++l)
                if (l != j) p *= x[static_cast<std::size_t>(e[l] - 1)];
            g[static_cast<std::size_t>(e[j] - 1)] += p;
        }
    }
    return g;
}

std::vector<double> lagrange_grad(const Hypergraph &graph, const Weighting &x)
{
    return lagrange_grad(graph, vertex_weights(graph, x));
}

HomogeneousPolynomial lagrange_polynomial(const Hypergraph &graph)
{
    HomogeneousPolynomial poly(graph.uniformity(), static_cast<std::size_t>(graph.order()));
    double scale = factorial(graph.uniformity());
    std::vector<int> idx(static_cast<std::size_t>(graph.uniformity()));
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto e = graph.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) idx[j] = e[j] - 1;
        poly.add_monomial(idx, scale);
    }
    return poly;
}

double kkt_residual(const HomogeneousPolynomial &poly, std::span<const double> x)
{
    if (x.empty()) return 0.0;
    std::vector<double> g;
    poly.gradient(x, g);
    double multiplier = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) multiplier += x[i] * g[i];
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double gap = g[i] - multiplier;
        worst = std::max(worst, x[i] > 1e-12 ? std::abs(gap) : std::max(gap, 0.0));
    }
    return worst;
}

SimplexMaximum ascend_on_simplex(const HomogeneousPolynomial &poly, std::vector<double> start, int max_iterations,
                                 double gradient_tolerance)
{
    SimplexMaximum out;
    std::vector<double> x = project_to_simplex(start);
    double f = poly.evaluate(x);
    std::vector<double> g, g_next, trial(x.size());
    double step = 1.0;
    long it = 0;
    for (; it < max_iterations; ++it) {
        poly.gradient(x, g);

        for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + g[i];
        auto unit = project_to_simplex(trial);
        double mapping = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) mapping = std::max(mapping, std::abs(unit[i] - x[i]));
        if (mapping < gradient_tolerance) break;

        bool accepted = false;
        while (step > 1e-18) {
            for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + step * g[i];
            auto next = project_to_simplex(trial);
            double fn = poly.evaluate(next);
            double predicted = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) predicted += g[i] * (next[i] - x[i]);
            bool accept = fn > f && fn >= f + 1e-4 * predicted;
            if (!accept && fn >= f - 8.0 * std::numeric_limits<double>::epsilon() * std::abs(f)) {
                // Within rounding of f the values cannot rank the points; take
                // the step if the objective is still increasing at its end.
                // The step sums to zero only up to rounding, so centre the
                // gradient first or that rounding swamps the slope.
                poly.gradient(next, g_next);
                double centre = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i) centre += next[i] * g_next[i];
                double slope = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i) slope += (g_next[i] - centre) * (next[i] - x[i]);
                accept = slope > 0.0;
            }
            if (accept) {
                accepted = next != x;
                x = std::move(next);
                f = fn;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
        step = std::min(step * 2.0, 1e4);
    }
    out.value = f;
    out.residual = kkt_residual(poly, x);
    out.x = std::move(x);
    out.iterations = it;
    return out;
}

SimplexMaximum maximize_on_simplex(const HomogeneousPolynomial &poly, std::vector<std::vector<double>> seeded_starts,
                                   const SolverConfig &config)
{
    std::size_t d = poly.dimension();
    if (d == 0) return {};

    Rng rng(config.seed);
    std::vector<std::vector<double>> starts = std::move(seeded_starts);
    for (int s = 0; s < config.starts; ++s) {
        Rng stream = rng.split(static_cast<std::uint64_t>(s));
        starts.push_back(random_simplex_point(d, stream));
    }
    if (starts.empty()) starts.emplace_back(d, 1.0 / static_cast<double>(d));

    std::vector<SimplexMaximum> screened(starts.size());
    parallel_for(
        starts.size(),
        [&](std::size_t i) {
            screened[i] =
                ascend_on_simplex(poly, starts[i], config.screening_iterations, config.gradient_tolerance);
        },
        config.threads);

    // Pick the best screened candidates by repeated linear scans (index order
    // keeps the choice deterministic).
    std::vector<bool> taken(screened.size(), false);
    std::vector<std::size_t> chosen;
    std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(std::max(config.polish_candidates, 1)),
                                             screened.size());
    while (chosen.size() < want) {
        std::size_t best = screened.size();
        for (std::size_t i = 0; i < screened.size(); ++i)
            if (!taken[i] && (best == screened.size() || better(screened[i], screened[best]))) best = i;
        taken[best] = true;
        chosen.push_back(best);
    }

    std::vector<SimplexMaximum> polished(chosen.size());
    parallel_for(
        chosen.size(),
        [&](std::size_t j) {
            polished[j] = ascend_on_simplex(poly, screened[chosen[j]].x, config.max_iterations,
                                            config.gradient_tolerance);
        },
        config.threads);

    long total_iterations = 0;
    for (const auto &s : screened) total_iterations += s.iterations;
    std::size_t best = 0;
    for (std::size_t j = 0; j < polished.size(); ++j) {
        total_iterations += polished[j].iterations;
        if (better(polished[j], polished[best])) best = j;
    }
    SimplexMaximum result = std::move(polished[best]);
    result.iterations = total_iterations;
    return result;
}

LagrangianReport lagrangian(const Hypergraph &graph, const SolverConfig &config)
{
    LagrangianReport report;
    int n = graph.order();
    if (n == 0) return report;
    if (graph.empty()) {
        report.maximiser = Weighting::uniform(vertex_labels(n));
        return report;
    }

    auto poly = lagrange_polynomial(graph);
    std::vector<std::vector<double>> seeded;
    seeded.emplace_back(static_cast<std::size_t>(n), 1.0 / n);
    for (std::size_t i = 0; i < graph.size(); ++i) {
        std::vector<double> x(static_cast<std::size_t>(n), 0.0);
        for (Vertex v : graph.edge(i)) x[static_cast<std::size_t>(v - 1)] = 1.0 / graph.uniformity();
        seeded.push_back(std::move(x));
    }

    auto best = maximize_on_simplex(poly, std::move(seeded), config);

    if (n <= config.oracle_cap && config.oracle_resolution >= 1 &&
        composition_count(config.oracle_resolution, n) <= kDefaultGridBudget) {
        auto oracle = lagrangian_grid_oracle(graph, config.oracle_resolution);
        report.oracle_value = oracle.value;
        report.oracle_resolution = config.oracle_resolution;
        if (best.value < oracle.value - config.tolerance) {
            std::vector<double> start(oracle.counts.begin(), oracle.counts.end());
            for (double &v : start) v /= config.oracle_resolution;
            auto refined = ascend_on_simplex(poly, start, config.max_iterations, config.gradient_tolerance);
            refined.iterations += best.iterations;
            if (refined.value > best.value) best = std::move(refined);
        }
    }

    report.maximiser = Weighting(vertex_labels(n), best.x);
    report.value = lagrange_poly(graph, best.x);
    report.iterations = best.iterations;
    report.residual = best.residual;
    return report;
}

GridOracleResult lagrangian_grid_oracle(const Hypergraph &graph, int resolution, std::uint64_t budget)
{
    if (resolution < 1) throw std::invalid_argument("grid resolution must be at least 1");
    int n = graph.order();
    GridOracleResult result;
    if (n == 0) return result;
    std::uint64_t points = composition_count(resolution, n);
    if (points > budget)
        throw std::length_error("grid oracle needs " + std::to_string(points) + " points, budget is " +
                                std::to_string(budget));

    // Exact integer numerator: sum over edges of the product of counts.
    unsigned __int128 best = 0;
    bool first = true;
    for_each_composition(resolution, n, [&](std::span<const int> c) {
        ++result.points;
        unsigned __int128 total = 0;
        for (std::size_t i = 0; i < graph.size(); ++i) {
            unsigned __int128 p = 1;
            for (Vertex v : graph.edge(i)) p *= static_cast<unsigned>(c[static_cast<std::size_t>(v - 1)]);
            total += p;
        }
        if (first || total > best) {
            best = total;
            result.counts.assign(c.begin(), c.end());
            first = false;
        }
    });

    // With both sides exact in double, a single division is correctly rounded
    // and so equals the nearest double to the rational maximum.
    unsigned __int128 numerator = best * static_cast<unsigned __int128>(factorial(graph.uniformity()));
    unsigned __int128 denominator = 1;
    for (int i = 0; i < graph.uniformity(); ++i) denominator *= static_cast<unsigned>(resolution);
    constexpr unsigned __int128 exact_limit = static_cast<unsigned __int128>(1) << 53;
    if (numerator < exact_limit && denominator < exact_limit)
        result.value = static_cast<double>(numerator) / static_cast<double>(denominator);
    else
        result.value = static_cast<double>(static_cast<long double>(numerator) / static_cast<long double>(denominator));
    return result;
}

} // namespace turan
