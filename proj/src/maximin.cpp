#include <turan/linear_program.hpp>
#include <turan/maximin.hpp>
#include <turan/simplex.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace turan {

namespace {

struct Softmin {
    double value;
    std::vector<double> gradient;
};

// Smooth lower approximation of the minimum: -T log sum exp(-g_j / T).
Softmin softmin(std::span<const HomogeneousPolynomial *const> forms, std::span<const double> x, double temperature,
                bool with_gradient)
{
    std::vector<double> values(forms.size());
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < forms.size(); ++j) {
        values[j] = forms[j]->evaluate(x);
        lowest = std::min(lowest, values[j]);
    }
    double z = 0.0;
    for (double &v : values) {
        v = std::exp(-(v - lowest) / temperature);
        z += v;
    }
    Softmin out{lowest - temperature * std::log(z), {}};
    if (with_gradient) {
        out.gradient.assign(x.size(), 0.0);
        std::vector<double> g;
        for (std::size_t j = 0; j < forms.size(); ++j) {
            double w = values[j] / z;
            if (w < 1e-300) continue;
            forms[j]->gradient(x, g);
            for (std::size_t i = 0; i < x.size(); ++i) out.gradient[i] += w * g[i];
        }
    }
    return out;
}

long softmin_ascent(std::span<const HomogeneousPolynomial *const> forms, std::span<const int> support,
                    std::vector<double> &x, const MaximinConfig &config)
{
    long iterations = 0;
    std::vector<double> trial(x.size());
    for (double t = config.temperature_start; t >= config.temperature_end * (1.0 - 1e-9);
         t *= config.temperature_factor) {
        double step = 1.0;
        auto current = softmin(forms, x, t, true);
        for (int it = 0; it < config.iterations_per_stage; ++it, ++iterations) {
            bool accepted = false;
            while (step > 1e-14) {
                for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + step * current.gradient[i];
                auto next = project_to_face(trial, support);
                auto candidate = softmin(forms, next, t, false);
                double predicted = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i) predicted += current.gradient[i] * (next[i] - x[i]);
                if (candidate.value > current.value && candidate.value >= current.value + 1e-4 * predicted) {
                    x = std::move(next);
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) break;
            current = softmin(forms, x, t, true);
            step = std::min(step * 2.0, 1e3);
        }
    }
    return iterations;
}

// Chooses the finest face lattice within the point budget.
int seed_grid_resolution(std::size_t face_size, std::uint64_t budget)
{
    int m = 0;
    while (m < 64 && composition_count(m + 1, static_cast<int>(face_size)) <= budget) ++m;
    return m;
}

} // namespace

double min_of_forms(std::span<const HomogeneousPolynomial *const> forms, std::span<const double> x)
{
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto *f : forms) lowest = std::min(lowest, f->evaluate(x));
    return lowest;
}

MaximinResult refine_maximin(std::span<const HomogeneousPolynomial *const> forms, std::span<const int> support,
                             std::vector<double> x, int max_iterations)
{
    MaximinResult out;
    bool linear = std::all_of(forms.begin(), forms.end(), [](const auto *f) { return f->degree() == 1; });
    double radius = linear ? 1.0 : 0.25;
    double value = min_of_forms(forms, x);
    std::size_t s = support.size();
    std::vector<double> g;

    for (int it = 0; it < max_iterations && radius > 1e-12; ++it) {
        ++out.iterations;
        // Variables: u_i = d_i + lower_i in [0, lower_i + radius] for the
        // face coordinates, then t = t_plus - t_minus.
        LinearProgram lp;
        lp.variables = s + 2;
        lp.objective.assign(s + 2, 0.0);
        lp.objective[s] = 1.0;
        lp.objective[s + 1] = -1.0;
        std::vector<double> lower(s);
        for (std::size_t i = 0; i < s; ++i) lower[i] = std::min(radius, x[static_cast<std::size_t>(support[i])]);

        for (const auto *f : forms) {
            f->gradient(x, g);
            LinearProgram::Row row;
            row.coefficients.assign(s + 2, 0.0);
            double rhs = f->evaluate(x);
            for (std::size_t i = 0; i < s; ++i) {
                double gi = g[static_cast<std::size_t>(support[i])];
                row.coefficients[i] = -gi;
                rhs -= gi * lower[i];
            }
            row.coefficients[s] = 1.0;
            row.coefficients[s + 1] = -1.0;
            row.rhs = rhs;
            lp.rows.push_back(std::move(row));
        }
        LinearProgram::Row balance;
        balance.coefficients.assign(s + 2, 0.0);
        balance.equality = true;
        for (std::size_t i = 0; i < s; ++i) {
            balance.coefficients[i] = 1.0;
            balance.rhs += lower[i];
        }
        lp.rows.push_back(std::move(balance));
        for (std::size_t i = 0; i < s; ++i) {
            LinearProgram::Row box;
            box.coefficients.assign(s + 2, 0.0);
            box.coefficients[i] = 1.0;
            box.rhs = lower[i] + radius;
            lp.rows.push_back(std::move(box));
        }

        auto sol = solve_lp(lp);
        if (sol.status != LpSolution::Status::optimal) {
            radius *= 0.25;
            continue;
        }
        double predicted = sol.value - value;
        out.residual = std::max(predicted, 0.0);
        if (predicted <= 1e-15) break;

        std::vector<double> next = x;
        double sum = 0.0;
        for (std::size_t i = 0; i < s; ++i) {
            auto c = static_cast<std::size_t>(support[i]);
            next[c] = std::max(0.0, x[c] + sol.z[i] - lower[i]);
            sum += next[c];
        }
        if (sum <= 0.0) {
            radius *= 0.25;
            continue;
        }
        for (std::size_t i = 0; i < s; ++i) next[static_cast<std::size_t>(support[i])] /= sum;

        double next_value = min_of_forms(forms, next);
        if (next_value > value) {
            x = std::move(next);
            value = next_value;
            radius = std::min(1.0, radius * 2.0);
        } else {
            radius *= 0.25;
        }
    }
    out.x = std::move(x);
    out.value = value;
    return out;
}

MaximinResult maximize_min_on_face(std::span<const HomogeneousPolynomial *const> forms, std::span<const int> support,
                                   std::size_t dimension, const MaximinConfig &config, Rng rng,
                                   std::span<const std::vector<double>> extra_starts)
{
    std::size_t s = support.size();
    std::vector<std::vector<double>> starts;

    std::vector<double> centre(dimension, 0.0);
    for (int i : support) centre[static_cast<std::size_t>(i)] = 1.0 / static_cast<double>(s);
    starts.push_back(centre);

    if (int m = seed_grid_resolution(s, config.seed_grid_points); m >= 1) {
        std::vector<double> best_point, point(dimension, 0.0);
        double best = -1.0;
        for_each_composition(m, static_cast<int>(s), [&](std::span<const int> c) {
            for (std::size_t i = 0; i < s; ++i)
                point[static_cast<std::size_t>(support[i])] = static_cast<double>(c[i]) / m;
            double v = min_of_forms(forms, point);
            if (v > best) {
                best = v;
                best_point = point;
            }
        });
        starts.push_back(best_point);
    }
    for (const auto &e : extra_starts) starts.push_back(project_to_face(e, support));
    for (int r = static_cast<int>(starts.size()); r < config.restarts; ++r) {
        auto local = random_simplex_point(s, rng);
        std::vector<double> point(dimension, 0.0);
        for (std::size_t i = 0; i < s; ++i) point[static_cast<std::size_t>(support[i])] = local[i];
        starts.push_back(std::move(point));
    }

    std::vector<MaximinResult> smoothed;
    long iterations = 0;
    for (auto &start : starts) {
        MaximinResult r;
        r.iterations = softmin_ascent(forms, support, start, config);
        iterations += r.iterations;
        r.value = min_of_forms(forms, start);
        r.x = std::move(start);
        smoothed.push_back(std::move(r));
    }

    // Refine the best few; stable ordering keeps the choice deterministic.
    std::vector<std::size_t> order(smoothed.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return smoothed[a].value > smoothed[b].value; });

    MaximinResult best;
    best.value = -1.0;
    std::size_t refine = std::min<std::size_t>(order.size(), static_cast<std::size_t>(std::max(1, config.refine_candidates)));
    for (std::size_t k = 0; k < refine; ++k) {
        auto r = refine_maximin(forms, support, smoothed[order[k]].x, config.refine_iterations);
        iterations += r.iterations;
        if (r.value > best.value) best = std::move(r);
    }
    best.iterations = iterations;
    return best;
}

} // namespace turan
