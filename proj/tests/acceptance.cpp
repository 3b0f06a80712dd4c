// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include "support.hpp"

#include <turan/cli.hpp>
#include <turan/commands.hpp>
#include <turan/construction.hpp>
#include <turan/density.hpp>
#include <turan/lagrangian.hpp>
#include <turan/palette_lagrangian.hpp>
#include <turan/satisfaction.hpp>
#include <turan/simplex.hpp>
#include <turan/text_io.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace turan;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int number, const std::string &title, const std::function<Verdict()> &check)
{
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = check();
    } catch (const std::exception &e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::ostringstream line;
    line << "criterion " << number << ": " << (v.pass ? "PASS" : "FAIL") << "  " << title << "  [" << v.detail << "; "
         << std::fixed << std::setprecision(1) << seconds << " s]";
    std::cout << line.str() << std::endl;
}

std::string fmt(double v)
{
    std::ostringstream s;
    s << std::setprecision(4) << v;
    return s.str();
}

Palette single_edge_p6() { return build_pt(Hypergraph(3, 3, {{1, 2, 3}}), 6); }

Verdict observation()
{
    auto rows = reproduce_observation();
    bool pass = true;
    double worst = 0.0;
    for (const auto &r : rows) {
        pass = pass && r.pass;
        worst = std::max(worst, r.error);
    }
    return {pass && rows.size() == 6, "max error " + fmt(worst)};
}

Verdict pt_identity()
{
    Rng rng(0x7074);
    double worst = 0.0;
    for (int g = 0; g < 50; ++g) {
        int n = 3 + static_cast<int>(rng.below(5));
        auto graph = testing::random_graph(3, n, 0.5, rng);
        for (int t = 1; t <= 6; ++t) {
            auto palette = build_pt(graph, t);
            for (int s = 0; s < 100; ++s) {
                auto xv = random_simplex_point(static_cast<std::size_t>(n), rng);
                std::vector<double> xc(palette.colour_count());
                for (std::size_t i = 0; i < xc.size(); ++i)
                    xc[i] = xv[static_cast<std::size_t>(palette.colours()[i] - 1)];
                worst = std::max(worst, std::abs(lambda_vvv(palette, xc) - t / 6.0 * lagrange_poly(graph, xv)));
            }
        }
    }
    return {worst < 1e-12, "max error " + fmt(worst) + " over 30000 evaluations"};
}

Verdict motzkin_straus()
{
    double worst = 0.0;
    for (int r = 2; r <= 7; ++r)
        worst = std::max(worst, std::abs(lagrangian(complete_hypergraph(2, r)).value - (1.0 - 1.0 / r)));
    return {worst <= 1e-8, "max error " + fmt(worst)};
}

Verdict oracle_equivalence()
{
    std::size_t graphs = 0, bad = 0;
    double worst = 0.0;
    for (int n = 3; n <= 5; ++n) {
        auto all = complete_hypergraph(3, n).edge_list();
        for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
            std::vector<std::vector<Vertex>> edges;
            for (std::size_t i = 0; i < all.size(); ++i)
                if (mask >> i & 1) edges.push_back(all[i]);
            Hypergraph g(3, n, edges);
            double gap = lagrangian_grid_oracle(g, 15).value - lagrangian(g).value;
            worst = std::max(worst, gap);
            bad += gap > 1e-9;
            ++graphs;
        }
    }
    return {bad == 0, std::to_string(graphs) + " graphs, oracle excess " + fmt(worst)};
}

Verdict chain_property()
{
    Rng rng(0x6368);
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int q = 1 + static_cast<int>(rng.below(6));
        auto palette = testing::random_palette(q, 3 * q * q, rng);
        auto x = random_simplex_point(palette.colour_count(), rng);
        // Some points on proper faces.
        if (trial % 4 == 0) x[rng.below(x.size())] = 0.0, x = project_to_simplex(x);
        double vvv = lambda_vvv(palette, x), ev = lambda_ev(palette, x), ee = lambda_ee(palette, x);
        violations += ee > ev + 1e-12 || ev > vvv + 1e-12;
    }
    return {violations == 0, std::to_string(violations) + " violations in 1000 pairs"};
}

Verdict satisfaction_equivalence()
{
    std::vector<ColourTriple> triples;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) triples.push_back({a, b, c});
    std::vector<Palette> palettes;
    for (std::uint32_t mask = 1; mask < 256; ++mask) {
        if (std::popcount(mask) > 4) continue;
        std::vector<ColourTriple> chosen;
        for (std::size_t i = 0; i < 8; ++i)
            if (mask >> i & 1) chosen.push_back(triples[i]);
        palettes.emplace_back(chosen);
    }
    std::size_t pairs = 0, agree = 0;
    for (int n = 1; n <= 4; ++n) {
        auto all = n >= 3 ? complete_hypergraph(3, n).edge_list() : std::vector<std::vector<Vertex>>{};
        for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
            std::vector<std::vector<Vertex>> edges;
            for (std::size_t i = 0; i < all.size(); ++i)
                if (mask >> i & 1) edges.push_back(all[i]);
            Hypergraph g(3, n, edges);
            for (const auto &p : palettes) {
                auto r = satisfies(g, p);
                bool expected = testing::brute_force_violations(g, p) == 0;
                bool got = r.verdict == turan::Verdict::satisfied;
                bool certified = !got || (r.certificate && verify_certificate(g, p, *r.certificate));
                agree += r.verdict != turan::Verdict::indeterminate && got == expected && certified;
                ++pairs;
            }
        }
    }
    return {agree == pairs, std::to_string(agree) + "/" + std::to_string(pairs) + " agree"};
}

struct ConstructionAudit {
    double mean_density = 0.0;
    double min_d = 1.0, max_d = 0.0;
    double lambda = 0.0;
};

const ConstructionAudit &construction_audits()
{
    static const ConstructionAudit result = [] {
        ConstructionAudit out;
        auto palette = single_edge_p6();
        auto weights = Weighting::uniform(palette.colours());
        out.lambda = palette_lagrangian(palette, StarMode::vvv).value;
        const int n = 200;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto c = generate_construction(palette, weights, n, seed);
            out.mean_density += static_cast<double>(c.hypergraph.size()) / (n * (n - 1.0) * (n - 2.0) / 6.0) / 20.0;
            AuditConfig config;
            config.eta = 0.01;
            config.samples = 10000;
            config.densities = {0.25};
            config.seed = seed;
            double d = audit_density(c.hypergraph, StarMode::vvv, config).d_estimate;
            out.min_d = std::min(out.min_d, d);
            out.max_d = std::max(out.max_d, d);
        }
        return out;
    }();
    return result;
}

Verdict construction_density()
{
    const auto &a = construction_audits();
    bool pass = std::abs(a.mean_density - 2.0 / 9) <= 0.02 && a.min_d >= 2.0 / 9 - 0.03;
    return {pass, "mean density " + fmt(a.mean_density) + ", min d_estimate " + fmt(a.min_d)};
}

Verdict upper_bound()
{
    const auto &a = construction_audits();
    return {a.max_d <= a.lambda + 0.05, "max d_estimate " + fmt(a.max_d) + ", vvv Lagrangian " + fmt(a.lambda)};
}

Verdict counting_product()
{
    const int m = 60;
    double worst = 0.0;
    int patterns = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Rng rng(seed);
        PairColouring c(3 * m);
        std::vector<Vertex> v1, v2, v3;
        for (int i = 1; i <= m; ++i) v1.push_back(i), v2.push_back(m + i), v3.push_back(2 * m + i);
        auto colour_between = [&](const std::vector<Vertex> &a, const std::vector<Vertex> &b) {
            std::array<double, 3> counts{};
            for (auto x : a)
                for (auto y : b) {
                    int col = static_cast<int>(rng.below(3));
                    c.set(x, y, col);
                    counts[static_cast<std::size_t>(col)] += 1.0 / (m * m);
                }
            return counts;
        };
        auto d12 = colour_between(v1, v2), d23 = colour_between(v2, v3), d13 = colour_between(v1, v3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int cc = 0; cc < 3; ++cc) {
                    double product = d12[static_cast<std::size_t>(a)] * d23[static_cast<std::size_t>(b)] *
                                     d13[static_cast<std::size_t>(cc)];
                    if (product < 0.01) continue;
                    double observed = static_cast<double>(count_colour_triangles(c, v1, v2, v3, a, b, cc)) /
                                      (static_cast<double>(m) * m * m);
                    worst = std::max(worst, std::abs(observed / product - 1.0));
                    ++patterns;
                }
    }
    return {worst <= 0.15, std::to_string(patterns) + " patterns, max relative deviation " + fmt(worst)};
}

std::string slurp(const std::string &path) { return read_text_file(path); }

int shell(const std::string &command)
{
    int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Verdict determinism()
{
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "turan_acceptance";
    fs::create_directories(dir);
    auto path = [&](const std::string &name) { return (dir / name).string(); };
    write_text_file(path("f32.txt"), serialize_hypergraph(make_f32()));
    write_text_file(path("p6.txt"), serialize_palette(single_edge_p6()));
    std::string binary = TURAN_BINARY;
    std::vector<std::pair<std::string, std::string>> commands{
        {"lagrangian", "lagrangian " + path("f32.txt") + " --seed 17"},
        {"palette-lagrangian", "palette-lagrangian " + path("p6.txt") + " --star ev --seed 17"},
        {"construct", "construct " + path("p6.txt") + " --n 60 --seed 17"},
        {"construct-optimal", "construct " + path("p6.txt") + " --n 40 --optimal --seed 5"},
        {"audit", "audit " + path("f32.txt") + " --star ee --samples 300 --seed 17"},
        {"reproduce-observation", "reproduce-observation --seed 17"},
        {"pt-check", "pt-check " + path("f32.txt") + " --t 4 --seed 17"},
    };
    int good = 0;
    std::string failed;
    for (const auto &[name, args] : commands) {
        auto manifest = path(name + ".json"), first = path(name + ".1"), second = path(name + ".2");
        int a = shell(binary + " --format records --manifest " + manifest + " " + args + " > " + first + " 2>/dev/null");
        int b = shell(binary + " --format records " + args + " > " + second + " 2>/dev/null");
        int replay = shell(binary + " replay " + manifest + " > /dev/null 2>&1");
        bool ok = a == 0 && b == 0 && replay == 0 && slurp(first) == slurp(second) && !slurp(first).empty();
        if (ok)
            ++good;
        else
            failed += " " + name;
    }
    std::string detail = std::to_string(good) + "/" + std::to_string(commands.size()) + " commands replay identically";
    if (!failed.empty()) detail += "; failed:" + failed;
    return {good == static_cast<int>(commands.size()), detail};
}

} // namespace

int main()
{
    criterion(1, "tight cycles and F_{3,2} Lagrangians match closed forms", observation);
    criterion(2, "p_t scales the Lagrange polynomial by t/6", pt_identity);
    criterion(3, "clique 2-graphs have Lagrangian 1 - 1/r", motzkin_straus);
    criterion(4, "solver dominates the resolution-15 grid on all 3-graphs with n <= 5", oracle_equivalence);
    criterion(5, "ee <= ev <= vvv pointwise on random palettes", chain_property);
    criterion(6, "satisfaction search agrees with full enumeration", satisfaction_equivalence);
    criterion(7, "p_6 construction density and sampled vvv audit", construction_density);
    criterion(8, "sampled audit stays below the vvv Lagrangian plus 0.05", upper_bound);
    criterion(9, "colour triangle counts follow the density product", counting_product);
    criterion(10, "randomized commands replay byte-identically", determinism);
    return failures == 0 ? 0 : 1;
}
