#include <turan/palette_lagrangian.hpp>
#include <turan/parallel.hpp>
#include <turan/simplex.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace turan {

namespace {

constexpr int kCodegreePatterns = 6;

// Position sums for every colour: slot a*3+p is the weight of the triples
// with colour a in position p.
std::vector<double> degree_table(const Palette &palette, std::span<const double> x)
{
    std::vector<double> table(palette.colour_count() * 3, 0.0);
    for (const auto &t : palette.dense_triples()) {
        auto w = [&](int i) { return x[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])]; };
        table[static_cast<std::size_t>(t[0]) * 3 + 0] += w(1) * w(2);
        table[static_cast<std::size_t>(t[1]) * 3 + 1] += w(0) * w(2);
        table[static_cast<std::size_t>(t[2]) * 3 + 2] += w(0) * w(1);
    }
    return table;
}

// Slot (a*q+b)*6+k holds pattern k of the codegree sums at (a,b):
// (a,b,c) (b,a,c) (a,c,b) (b,c,a) (c,a,b) (c,b,a), each summing x_c.
std::vector<double> codegree_table(const Palette &palette, std::span<const double> x)
{
    std::size_t q = palette.colour_count();
    std::vector<double> table(q * q * kCodegreePatterns, 0.0);
    auto slot = [&](int a, int b, int k) -> double & {
        return table[(static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)) * kCodegreePatterns +
                     static_cast<std::size_t>(k)];
    };
    for (const auto &t : palette.dense_triples()) {
        double x0 = x[static_cast<std::size_t>(t[0])];
        double x1 = x[static_cast<std::size_t>(t[1])];
        double x2 = x[static_cast<std::size_t>(t[2])];
        slot(t[0], t[1], 0) += x2;
        slot(t[1], t[0], 1) += x2;
        slot(t[0], t[2], 2) += x1;
        slot(t[2], t[0], 3) += x1;
        slot(t[1], t[2], 4) += x0;
        slot(t[2], t[1], 5) += x0;
    }
    return table;
}

double degree_from_table(const std::vector<double> &table, int a)
{
    auto base = static_cast<std::size_t>(a) * 3;
    return std::min({table[base], table[base + 1], table[base + 2]});
}

double codegree_from_table(const std::vector<double> &table, std::size_t q, int a, int b)
{
    auto base = (static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)) * kCodegreePatterns;
    return *std::min_element(table.begin() + static_cast<std::ptrdiff_t>(base),
                             table.begin() + static_cast<std::ptrdiff_t>(base + kCodegreePatterns));
}

void check_point(const Palette &palette, std::span<const double> x)
{
    if (x.size() != palette.colour_count())
        throw std::invalid_argument("weight vector has " + std::to_string(x.size()) + " entries, palette has " +
                                    std::to_string(palette.colour_count()) + " colours");
}

int colour_index(const Palette &palette, Colour c)
{
    auto idx = palette.index_of(c);
    if (!idx) throw std::invalid_argument("colour " + std::to_string(c) + " is not a colour of the palette");
    return *idx;
}

std::vector<int> positive_colours(std::span<const double> x, double eps)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > eps) out.push_back(static_cast<int>(i));
    return out;
}

// The polynomials whose minimum the ev and ee objectives take.
struct PaletteForms {
    std::size_t q;
    std::vector<HomogeneousPolynomial> degree;   // a*3+p
    std::vector<HomogeneousPolynomial> codegree; // (a*q+b)*6+k

    explicit PaletteForms(const Palette &palette, StarMode star) : q(palette.colour_count())
    {
        if (star == StarMode::ev) {
            degree.assign(q * 3, HomogeneousPolynomial(2, q));
            for (const auto &t : palette.dense_triples()) {
                for (int p = 0; p < 3; ++p) {
                    std::array<int, 2> rest{};
                    for (int i = 0, r = 0; i < 3; ++i)
                        if (i != p) rest[static_cast<std::size_t>(r++)] = t[static_cast<std::size_t>(i)];
                    degree[static_cast<std::size_t>(t[static_cast<std::size_t>(p)]) * 3 + static_cast<std::size_t>(p)]
                        .add_monomial(rest, 1.0);
                }
            }
        } else if (star == StarMode::ee) {
            codegree.assign(q * q * kCodegreePatterns, HomogeneousPolynomial(1, q));
            auto add = [&](int a, int b, int k, int c) {
                int idx[1] = {c};
                codegree[(static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)) * kCodegreePatterns +
                         static_cast<std::size_t>(k)]
                    .add_monomial(idx, 1.0);
            };
            for (const auto &t : palette.dense_triples()) {
                add(t[0], t[1], 0, t[2]);
                add(t[1], t[0], 1, t[2]);
                add(t[0], t[2], 2, t[1]);
                add(t[2], t[0], 3, t[1]);
                add(t[1], t[2], 4, t[0]);
                add(t[2], t[1], 5, t[0]);
            }
        }
    }

    /// Forms whose minimum is the objective on the face `support`; empty
    /// when one of them vanishes identically there (the face value is 0).
    std::vector<const HomogeneousPolynomial *> on_face(StarMode star, const std::vector<int> &support) const
    {
        std::vector<bool> allowed(q, false);
        for (int i : support) allowed[static_cast<std::size_t>(i)] = true;
        std::vector<const HomogeneousPolynomial *> out;
        auto take = [&](const HomogeneousPolynomial &f) {
            if (!f.supported_on(allowed)) return false;
            out.push_back(&f);
            return true;
        };
        if (star == StarMode::ev) {
            for (int a : support)
                for (std::size_t p = 0; p < 3; ++p)
                    if (!take(degree[static_cast<std::size_t>(a) * 3 + p])) return {};
        } else {
            for (std::size_t i = 0; i < support.size(); ++i)
                for (std::size_t j = i; j < support.size(); ++j)
                    for (std::size_t k = 0; k < kCodegreePatterns; ++k)
                        if (!take(codegree[(static_cast<std::size_t>(support[i]) * q +
                                            static_cast<std::size_t>(support[j])) *
                                               kCodegreePatterns +
                                           k]))
                            return {};
        }
        return out;
    }
};

struct FaceOutcome {
    bool pruned = true;
    MaximinResult result;
};

std::vector<std::vector<int>> all_supports(std::size_t q)
{
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < q; ++i)
            if (mask & (1u << i)) s.push_back(static_cast<int>(i));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<int>> heuristic_supports(const Palette &palette, int random_count, Rng rng)
{
    std::size_t q = palette.colour_count();
    std::vector<std::vector<int>> out;
    std::vector<int> everything(q);
    for (std::size_t i = 0; i < q; ++i) everything[i] = static_cast<int>(i);
    out.push_back(everything);
    for (const auto &t : palette.dense_triples()) {
        std::vector<int> s(t.begin(), t.end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        out.push_back(std::move(s));
    }
    for (int r = 0; r < random_count; ++r) {
        std::vector<int> s;
        double density = 0.1 + 0.8 * rng.uniform();
        for (std::size_t i = 0; i < q; ++i)
            if (rng.bernoulli(density)) s.push_back(static_cast<int>(i));
        if (!s.empty()) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<double> colour_weights(const Palette &palette, const Weighting &x)
{
    const auto &colours = palette.colours();
    if (x.size() != colours.size() || !std::equal(colours.begin(), colours.end(), x.labels().begin()))
        throw std::invalid_argument("weighting is not indexed by the palette's colour set");
    return {x.weights().begin(), x.weights().end()};
}

double lambda_vvv(const Palette &palette, std::span<const double> x)
{
    check_point(palette, x);
    double total = 0.0;
    for (const auto &t : palette.dense_triples())
        total += x[static_cast<std::size_t>(t[0])] * x[static_cast<std::size_t>(t[1])] *
                 x[static_cast<std::size_t>(t[2])];
    return total;
}

double lambda_vvv(const Palette &palette, const Weighting &x)
{
    return lambda_vvv(palette, colour_weights(palette, x));
}

double degree_lagrangian(const Palette &palette, int a_index, std::span<const double> x)
{
    check_point(palette, x);
    if (a_index < 0 || static_cast<std::size_t>(a_index) >= palette.colour_count())
        throw std::invalid_argument("colour index out of range");
    return degree_from_table(degree_table(palette, x), a_index);
}

double degree_lagrangian(const Palette &palette, Colour a, const Weighting &x)
{
    int idx = colour_index(palette, a);
    return degree_lagrangian(palette, idx, colour_weights(palette, x));
}

double codegree_lagrangian(const Palette &palette, int a_index, int b_index, std::span<const double> x)
{
    check_point(palette, x);
    std::size_t q = palette.colour_count();
    if (a_index < 0 || b_index < 0 || static_cast<std::size_t>(a_index) >= q || static_cast<std::size_t>(b_index) >= q)
        throw std::invalid_argument("colour index out of range");
    return codegree_from_table(codegree_table(palette, x), q, a_index, b_index);
}

double codegree_lagrangian(const Palette &palette, Colour a, Colour b, const Weighting &x)
{
    int ia = colour_index(palette, a), ib = colour_index(palette, b);
    return codegree_lagrangian(palette, ia, ib, colour_weights(palette, x));
}

double lambda_ev(const Palette &palette, std::span<const double> x, double eps)
{
    check_point(palette, x);
    auto present = positive_colours(x, eps);
    if (present.empty()) throw std::invalid_argument("lambda_ev: no colour has positive weight");
    auto table = degree_table(palette, x);
    double best = std::numeric_limits<double>::infinity();
    for (int a : present) best = std::min(best, degree_from_table(table, a));
    return best;
}

double lambda_ev(const Palette &palette, const Weighting &x, double eps)
{
    return lambda_ev(palette, colour_weights(palette, x), eps);
}

double lambda_ee(const Palette &palette, std::span<const double> x, double eps)
{
    check_point(palette, x);
    auto present = positive_colours(x, eps);
    if (present.empty()) throw std::invalid_argument("lambda_ee: no colour has positive weight");
    auto table = codegree_table(palette, x);
    double best = std::numeric_limits<double>::infinity();
    for (int a : present)
        for (int b : present) best = std::min(best, codegree_from_table(table, palette.colour_count(), a, b));
    return best;
}

double lambda_ee(const Palette &palette, const Weighting &x, double eps)
{
    return lambda_ee(palette, colour_weights(palette, x), eps);
}

double lambda_star(const Palette &palette, StarMode star, std::span<const double> x, double eps)
{
    switch (star) {
    case StarMode::vvv: return lambda_vvv(palette, x);
    case StarMode::ev: return lambda_ev(palette, x, eps);
    case StarMode::ee: return lambda_ee(palette, x, eps);
    }
    throw std::logic_error("unreachable star mode");
}

double lambda_star(const Palette &palette, StarMode star, const Weighting &x, double eps)
{
    return lambda_star(palette, star, colour_weights(palette, x), eps);
}

Palette build_pt(const Hypergraph &graph, int t)
{
    if (graph.uniformity() != 3) throw std::invalid_argument("build_pt needs a 3-graph");
    if (t < 1 || t > 6) throw std::invalid_argument("t must be in [1, 6], got " + std::to_string(t));
    std::vector<ColourTriple> triples;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto e = graph.edge(i);
        ColourTriple perm{e[0], e[1], e[2]}; // sorted, so the first permutation
        for (int k = 0; k < t; ++k) {
            triples.push_back(perm);
            std::next_permutation(perm.begin(), perm.end());
        }
    }
    return Palette(std::move(triples));
}

PaletteLagrangianReport palette_lagrangian(const Palette &palette, StarMode star, const PaletteSolverConfig &config)
{
    PaletteLagrangianReport report;
    report.star = star;
    if (palette.empty()) {
        report.note = "empty palette";
        return report;
    }

    const std::size_t q = palette.colour_count();
    std::vector<double> x;

    if (star == StarMode::vvv) {
        HomogeneousPolynomial poly(3, q);
        for (const auto &t : palette.dense_triples()) poly.add_monomial(t, 1.0);
        std::vector<std::vector<double>> seeded;
        seeded.emplace_back(q, 1.0 / static_cast<double>(q));
        for (const auto &t : palette.dense_triples()) {
            std::vector<double> s(q, 0.0);
            std::vector<int> distinct(t.begin(), t.end());
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (int c : distinct) s[static_cast<std::size_t>(c)] = 1.0 / static_cast<double>(distinct.size());
            seeded.push_back(std::move(s));
        }
        auto best = maximize_on_simplex(poly, std::move(seeded), config.ascent);
        x = std::move(best.x);
        report.iterations = best.iterations;
        report.method = SolverMethod::multistart_gradient;

        if (static_cast<int>(q) <= config.oracle_cap) {
            auto oracle = palette_grid_oracle(palette, star, config.oracle_resolution);
            report.oracle_value = oracle.value;
            report.oracle_resolution = config.oracle_resolution;
            if (lambda_vvv(palette, x) < oracle.value - config.ascent.tolerance) {
                std::vector<double> start(oracle.counts.begin(), oracle.counts.end());
                for (double &v : start) v /= config.oracle_resolution;
                auto refined = ascend_on_simplex(poly, start, config.ascent.max_iterations,
                                                 config.ascent.gradient_tolerance);
                if (refined.value > lambda_vvv(palette, x)) x = std::move(refined.x);
            }
        }
        report.residual = kkt_residual(poly, x);
    } else {
        PaletteForms forms(palette, star);
        Rng rng(config.ascent.seed);
        std::vector<std::vector<int>> supports;
        if (static_cast<int>(q) <= config.support_cap) {
            supports = all_supports(q);
            report.method = SolverMethod::support_enum;
        } else {
            supports = heuristic_supports(palette, config.heuristic_supports, rng.split(0xfa11bac));
            report.heuristic = true;
            report.note = "palette too large for exact support enumeration (" + std::to_string(q) + " colours, cap " +
                          std::to_string(config.support_cap) + "); searched " + std::to_string(supports.size()) +
                          " candidate supports";
            report.method = SolverMethod::multistart_gradient;
        }

        std::vector<FaceOutcome> outcomes(supports.size());
        parallel_for(
            supports.size(),
            [&](std::size_t i) {
                auto face = forms.on_face(star, supports[i]);
                if (face.empty()) return;
                outcomes[i].pruned = false;
                outcomes[i].result = maximize_min_on_face(face, supports[i], q, config.maximin, rng.split(i));
            },
            config.threads);

        std::size_t best = outcomes.size();
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            if (outcomes[i].pruned) {
                ++report.supports_pruned;
                continue;
            }
            ++report.supports_examined;
            report.iterations += outcomes[i].result.iterations;
            if (best == outcomes.size() || outcomes[i].result.value > outcomes[best].result.value) best = i;
        }
        if (best == outcomes.size()) {
            // Every face has a vanishing form, so the objective is 0 everywhere.
            x.assign(q, 1.0 / static_cast<double>(q));
        } else {
            x = outcomes[best].result.x;
            report.residual = outcomes[best].result.residual;
        }

        if (static_cast<int>(q) <= config.oracle_cap) {
            auto oracle = palette_grid_oracle(palette, star, config.oracle_resolution);
            report.oracle_value = oracle.value;
            report.oracle_resolution = config.oracle_resolution;
            if (lambda_star(palette, star, x, config.positivity_eps) < oracle.value - config.ascent.tolerance) {
                std::vector<double> start(oracle.counts.begin(), oracle.counts.end());
                std::vector<int> support;
                for (std::size_t i = 0; i < q; ++i) {
                    start[i] /= config.oracle_resolution;
                    if (oracle.counts[i] > 0) support.push_back(static_cast<int>(i));
                }
                auto face = forms.on_face(star, support);
                if (!face.empty()) {
                    auto refined = refine_maximin(face, support, start, config.maximin.refine_iterations);
                    report.iterations += refined.iterations;
                    x = refined.value >= oracle.value ? refined.x : start;
                } else {
                    x = start;
                }
            }
        }
    }

    // Snap sub-threshold weights to zero so the reported support and the
    // maximiser agree.
    double sum = 0.0;
    for (double &v : x) {
        if (v <= config.positivity_eps) v = 0.0;
        sum += v;
    }
    for (double &v : x) v /= sum;
    report.maximiser = Weighting(palette.colours(), x);
    report.value = lambda_star(palette, star, x, config.positivity_eps);

    for (std::size_t i = 0; i < q; ++i)
        if (x[i] > config.positivity_eps) report.support.push_back(palette.colours()[i]);
    if (star == StarMode::ev) {
        auto table = degree_table(palette, x);
        for (std::size_t i = 0; i < q; ++i)
            if (x[i] > config.positivity_eps)
                report.per_colour[palette.colours()[i]] = degree_from_table(table, static_cast<int>(i));
    } else if (star == StarMode::ee) {
        auto table = codegree_table(palette, x);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = i; j < q; ++j)
                if (x[i] > config.positivity_eps && x[j] > config.positivity_eps)
                    report.per_pair[{palette.colours()[i], palette.colours()[j]}] =
                        codegree_from_table(table, q, static_cast<int>(i), static_cast<int>(j));
    }
    return report;
}

PaletteGridResult palette_grid_oracle(const Palette &palette, StarMode star, int resolution, std::uint64_t budget)
{
    if (resolution < 1) throw std::invalid_argument("grid resolution must be at least 1");
    PaletteGridResult result;
    std::size_t q = palette.colour_count();
    if (q == 0) return result;
    std::uint64_t points = composition_count(resolution, static_cast<int>(q));
    if (points > budget)
        throw std::length_error("palette grid oracle needs " + std::to_string(points) + " points, budget is " +
                                std::to_string(budget));

    // Integer numerators over the common denominator resolution^degree.
    using Int = long long;
    std::vector<Int> table;
    bool first = true;
    Int best = 0;
    for_each_composition(resolution, static_cast<int>(q), [&](std::span<const int> c) {
        auto w = [&](int i) { return static_cast<Int>(c[static_cast<std::size_t>(i)]); };
        Int value = 0;
        if (star == StarMode::vvv) {
            for (const auto &t : palette.dense_triples()) value += w(t[0]) * w(t[1]) * w(t[2]);
        } else if (star == StarMode::ev) {
            table.assign(q * 3, 0);
            for (const auto &t : palette.dense_triples()) {
                table[static_cast<std::size_t>(t[0]) * 3 + 0] += w(t[1]) * w(t[2]);
                table[static_cast<std::size_t>(t[1]) * 3 + 1] += w(t[0]) * w(t[2]);
                table[static_cast<std::size_t>(t[2]) * 3 + 2] += w(t[0]) * w(t[1]);
            }
            value = std::numeric_limits<Int>::max();
            for (std::size_t a = 0; a < q; ++a)
                if (c[a] > 0) value = std::min({value, table[a * 3], table[a * 3 + 1], table[a * 3 + 2]});
        } else {
            table.assign(q * q * kCodegreePatterns, 0);
            auto slot = [&](int a, int b, int k) -> Int & {
                return table[(static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)) * kCodegreePatterns +
                             static_cast<std::size_t>(k)];
            };
            for (const auto &t : palette.dense_triples()) {
                slot(t[0], t[1], 0) += w(t[2]);
                slot(t[1], t[0], 1) += w(t[2]);
                slot(t[0], t[2], 2) += w(t[1]);
                slot(t[2], t[0], 3) += w(t[1]);
                slot(t[1], t[2], 4) += w(t[0]);
                slot(t[2], t[1], 5) += w(t[0]);
            }
            value = std::numeric_limits<Int>::max();
            for (std::size_t a = 0; a < q; ++a)
                for (std::size_t b = 0; b < q; ++b)
                    if (c[a] > 0 && c[b] > 0)
                        for (int k = 0; k < kCodegreePatterns; ++k)
                            value = std::min(value, slot(static_cast<int>(a), static_cast<int>(b), k));
        }
        if (first || value > best) {
            best = value;
            result.counts.assign(c.begin(), c.end());
            first = false;
        }
    });

    int degree = star == StarMode::vvv ? 3 : star == StarMode::ev ? 2 : 1;
    Int denominator = 1;
    for (int i = 0; i < degree; ++i) denominator *= resolution;
    result.value = static_cast<double>(best) / static_cast<double>(denominator);
    return result;
}

} // namespace turan
