#include <turan/cli.hpp>
#include <turan/commands.hpp>
#include <turan/construction.hpp>
#include <turan/density.hpp>
#include <turan/lagrangian.hpp>
#include <turan/palette_lagrangian.hpp>
#include <turan/satisfaction.hpp>
#include <turan/text_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

namespace turan {

namespace {

using json = nlohmann::json;

constexpr std::uint64_t kDefaultSeed = SolverConfig{}.seed;

const char *kFormatsHelp = R"(File formats:
  graph      first line "k n", then one edge per line as k vertices in 1..n
  palette    one ordered colour triple "a b c" per line (colours >= 0)
  cert       first line the vertex ordering, then one "i j c" line per pair
Lines starting with '#' and blank lines are ignored.
Randomized commands take --seed; the default comes from $TURAN_SEED.
Exit codes: 0 ok, 1 check failed or answer is no, 2 usage or input error,
3 search budget exhausted.)";

struct Outcome {
    int exit_code = kExitOk;
    std::vector<json> records;
    std::ostringstream text;
    std::optional<std::uint64_t> seed;
};

std::string records_text(const std::vector<json> &records)
{
    std::string out;
    for (const auto &r : records) out += r.dump() + "\n";
    return out;
}

std::uint64_t default_seed()
{
    const char *env = std::getenv(kSeedVariable);
    if (!env || !*env) return kDefaultSeed;
    std::string text(env);
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &used, 0);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size()) throw std::invalid_argument(std::string(kSeedVariable) + " is not an integer: " + text);
    return value;
}

json weighting_json(const Weighting &w)
{
    json out = json::array();
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back({w.labels()[i], w.weights()[i]});
    return out;
}

json optional_number(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

json pairs_json(const std::vector<VertexPair> &pairs)
{
    json out = json::array();
    for (auto [u, v] : pairs) out.push_back({u, v});
    return out;
}

std::string join_weights(const Weighting &w)
{
    std::ostringstream s;
    s << std::setprecision(12);
    for (std::size_t i = 0; i < w.size(); ++i) s << (i ? " " : "") << w.labels()[i] << ":" << w.weights()[i];
    return s.str();
}

std::vector<double> parse_weight_list(const std::string &text)
{
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() || !(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("--weights: '" + item + "' is not a non-negative number");
        out.push_back(v);
    }
    return out;
}

/// Options shared by every command.
struct Globals {
    std::string format = "text";
    std::string manifest;
    unsigned threads = 0;
};

struct Invocation {
    std::string command;
    Outcome outcome;
};

Invocation execute(const std::vector<std::string> &args, std::optional<std::uint64_t> seed_override, Globals &globals,
                   std::ostream &out, std::ostream &err, bool &handled);

void add_seed(CLI::App *sub, std::uint64_t &seed)
{
    sub->add_option("--seed", seed, "RNG seed (default: $TURAN_SEED or built-in)");
}

Outcome cmd_lagrangian(const std::string &path, const SolverConfig &config)
{
    Outcome o;
    o.seed = config.seed;
    auto graph = read_hypergraph_file(path);
    auto r = lagrangian(graph, config);
    o.records.push_back({{"record", "lagrangian"},
                         {"k", graph.uniformity()},
                         {"n", graph.order()},
                         {"edges", graph.size()},
                         {"value", r.value},
                         {"maximiser", weighting_json(r.maximiser)},
                         {"method", std::string(to_string(r.method))},
                         {"iterations", r.iterations},
                         {"residual", r.residual},
                         {"oracle_value", optional_number(r.oracle_value)},
                         {"oracle_resolution", r.oracle_resolution},
                         {"seed", config.seed}});
    auto &t = o.text;
    t << std::setprecision(15);
    t << "lagrangian  " << r.value << "\n";
    t << "maximiser   " << join_weights(r.maximiser) << "\n";
    t << "method      " << to_string(r.method) << " (" << r.iterations << " iterations, KKT residual " << r.residual
      << ")\n";
    if (r.oracle_value)
        t << "oracle      " << *r.oracle_value << " at resolution " << r.oracle_resolution << "\n";
    else
        t << "oracle      not run (n > " << config.oracle_cap << ")\n";
    return o;
}

Outcome cmd_palette_lagrangian(const std::string &path, StarMode star, const PaletteSolverConfig &config)
{
    Outcome o;
    o.seed = config.ascent.seed;
    auto palette = read_palette_file(path);
    auto r = palette_lagrangian(palette, star, config);
    json per_colour = json::array(), per_pair = json::array();
    for (auto [c, v] : r.per_colour) per_colour.push_back({c, v});
    for (auto [ab, v] : r.per_pair) per_pair.push_back({ab.first, ab.second, v});
    o.records.push_back({{"record", "palette_lagrangian"},
                         {"star", std::string(to_string(star))},
                         {"triples", palette.size()},
                         {"colours", palette.colour_count()},
                         {"value", r.value},
                         {"maximiser", weighting_json(r.maximiser)},
                         {"support", r.support},
                         {"per_colour", per_colour},
                         {"per_pair", per_pair},
                         {"method", std::string(to_string(r.method))},
                         {"iterations", r.iterations},
                         {"residual", r.residual},
                         {"heuristic", r.heuristic},
                         {"note", r.note},
                         {"supports_examined", r.supports_examined},
                         {"supports_pruned", r.supports_pruned},
                         {"oracle_value", optional_number(r.oracle_value)},
                         {"oracle_resolution", r.oracle_resolution},
                         {"seed", config.ascent.seed}});
    auto &t = o.text;
    t << std::setprecision(15);
    t << "palette lagrangian (" << to_string(star) << ")  " << r.value << "\n";
    t << "maximiser   " << join_weights(r.maximiser) << "\n";
    t << "support     ";
    for (std::size_t i = 0; i < r.support.size(); ++i) t << (i ? " " : "") << r.support[i];
    t << "\n";
    for (auto [c, v] : r.per_colour) t << "  degree lagrangian at " << c << ": " << v << "\n";
    for (auto [ab, v] : r.per_pair)
        t << "  codegree lagrangian at " << ab.first << "," << ab.second << ": " << v << "\n";
    t << "method      " << to_string(r.method) << " (" << r.iterations << " iterations";
    if (star != StarMode::vvv) t << ", " << r.supports_examined << " supports solved, " << r.supports_pruned << " pruned";
    t << ")\n";
    if (r.oracle_value) t << "oracle      " << *r.oracle_value << " at resolution " << r.oracle_resolution << "\n";
    if (r.heuristic) t << "warning     " << r.note << "\n";
    return o;
}

Outcome cmd_build_pt(const std::string &path, int t_value, const std::string &output)
{
    Outcome o;
    auto graph = read_hypergraph_file(path);
    auto palette = build_pt(graph, t_value);
    auto text = serialize_palette(palette);
    json triples = json::array();
    for (const auto &tr : palette.triples()) triples.push_back(tr);
    o.records.push_back({{"record", "palette"},
                         {"t", t_value},
                         {"triples", triples},
                         {"colours", palette.colours()},
                         {"output", output.empty() ? json(nullptr) : json(output)}});
    if (output.empty()) {
        o.text << text;
    } else {
        write_text_file(output, text);
        o.text << "wrote " << palette.size() << " triples over " << palette.colour_count() << " colours to " << output
               << "\n";
    }
    return o;
}

Outcome cmd_satisfies(const std::string &graph_path, const std::string &palette_path, const SatisfactionBudget &budget,
                      const std::string &cert_path)
{
    Outcome o;
    auto graph = read_hypergraph_file(graph_path);
    auto palette = read_palette_file(palette_path);
    auto r = satisfies(graph, palette, budget);
    std::string cert = r.certificate ? serialize_certificate(*r.certificate) : "";
    if (r.certificate && !cert_path.empty()) write_text_file(cert_path, cert);
    o.records.push_back({{"record", "satisfies"},
                         {"verdict", std::string(to_string(r.verdict))},
                         {"reason", r.reason},
                         {"nodes", r.nodes},
                         {"certificate", r.certificate ? json(cert) : json(nullptr)}});
    o.text << "verdict     " << to_string(r.verdict) << " (" << r.reason << ", " << r.nodes << " search nodes)\n";
    if (r.certificate) {
        if (cert_path.empty())
            o.text << cert;
        else
            o.text << "certificate written to " << cert_path << "\n";
    }
    o.exit_code = r.verdict == Verdict::satisfied      ? kExitOk
                  : r.verdict == Verdict::not_satisfied ? kExitFailed
                                                        : kExitInconclusive;
    return o;
}

Outcome cmd_almost_distance(const std::string &graph_path, const std::string &palette_path,
                            const DistanceBudget &budget, const std::string &cert_path)
{
    Outcome o;
    auto graph = read_hypergraph_file(graph_path);
    auto palette = read_palette_file(palette_path);
    auto r = almost_satisfies_distance(graph, palette, budget);
    double cube = std::pow(static_cast<double>(std::max(graph.order(), 1)), 3);
    std::string cert = r.certificate ? serialize_certificate(*r.certificate) : "";
    if (r.certificate && !cert_path.empty()) write_text_file(cert_path, cert);
    o.records.push_back({{"record", "almost_distance"},
                         {"deletions", r.deletions},
                         {"edges", graph.size()},
                         {"alpha", static_cast<double>(r.deletions) / cube},
                         {"optimal", r.optimal},
                         {"reason", r.reason},
                         {"nodes", r.nodes},
                         {"certificate", r.certificate ? json(cert) : json(nullptr)}});
    o.text << std::setprecision(12);
    o.text << "deletions   " << r.deletions << " of " << graph.size() << " edges"
           << (r.optimal ? "" : " (upper bound)") << "\n";
    o.text << "alpha       " << static_cast<double>(r.deletions) / cube << "  (deletions / n^3)\n";
    o.text << "search      " << r.reason << ", " << r.nodes << " nodes\n";
    if (!cert_path.empty() && r.certificate) o.text << "certificate written to " << cert_path << "\n";
    o.exit_code = r.optimal ? kExitOk : kExitInconclusive;
    return o;
}

Outcome cmd_construct(const std::string &palette_path, int n, std::uint64_t seed, const std::string &weights_text,
                      bool optimal, const std::string &graph_out, const std::string &cert_out, unsigned threads)
{
    Outcome o;
    o.seed = seed;
    auto palette = read_palette_file(palette_path);
    Weighting weights;
    if (!palette.empty()) {
        if (optimal) {
            PaletteSolverConfig config;
            config.ascent.seed = seed;
            config.ascent.threads = threads;
            config.threads = threads;
            weights = palette_lagrangian(palette, StarMode::vvv, config).maximiser;
        } else if (!weights_text.empty()) {
            auto raw = parse_weight_list(weights_text);
            if (raw.size() != palette.colour_count())
                throw std::invalid_argument("--weights has " + std::to_string(raw.size()) + " entries, palette has " +
                                            std::to_string(palette.colour_count()) + " colours");
            double sum = 0.0;
            for (double v : raw) sum += v;
            if (!(sum > 0.0)) throw std::invalid_argument("--weights must have a positive sum");
            for (double &v : raw) v /= sum;
            weights = Weighting(palette.colours(), raw);
        } else {
            weights = Weighting::uniform(palette.colours());
        }
    }
    auto c = generate_construction(palette, weights, n, seed);
    double triples = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
    double density = static_cast<double>(c.hypergraph.size()) / triples;
    double expected = palette.empty() ? 0.0 : lambda_vvv(palette, weights);
    auto graph_text = serialize_hypergraph(c.hypergraph);
    auto cert_text = serialize_certificate(c.certificate());
    if (!graph_out.empty()) write_text_file(graph_out, graph_text);
    if (!cert_out.empty()) write_text_file(cert_out, cert_text);

    o.records.push_back({{"record", "construction"},
                         {"n", n},
                         {"edges", c.hypergraph.size()},
                         {"density", density},
                         {"expected_density", expected},
                         {"weights", weighting_json(weights)},
                         {"seed", seed},
                         {"graph", graph_text},
                         {"certificate", cert_text}});
    auto &t = o.text;
    t << std::setprecision(12);
    t << "# construction n=" << n << " seed=" << seed << " edges=" << c.hypergraph.size() << "\n";
    t << "# edge density " << density << ", expected " << expected << "\n";
    t << "# weights " << join_weights(weights) << "\n";
    if (!cert_out.empty()) t << "# certificate written to " << cert_out << "\n";
    if (graph_out.empty())
        t << graph_text;
    else
        t << "# graph written to " << graph_out << "\n";
    return o;
}

json witness_json(const AuditWitness &w)
{
    return {{"x", w.x},           {"y", w.y},       {"z", w.z},          {"p", pairs_json(w.p)},
            {"q", pairs_json(w.q)}, {"edges", w.edges}, {"size", w.size}, {"origin", w.origin}};
}

Outcome cmd_audit(const std::string &path, StarMode star, AuditConfig config, const std::string &hint_path)
{
    Outcome o;
    auto graph = read_hypergraph_file(path);
    if (!hint_path.empty()) config.hint = parse_certificate(read_text_file(hint_path)).colouring;
    if (config.mode == AuditMode::sampled) o.seed = config.seed;
    auto a = audit_density(graph, star, config);
    o.records.push_back({{"record", "audit"},
                         {"star", std::string(to_string(star))},
                         {"mode", std::string(to_string(a.mode))},
                         {"eta", a.eta},
                         {"d_estimate", a.d_estimate},
                         {"samples", a.samples},
                         {"seed", config.mode == AuditMode::sampled ? json(config.seed) : json(nullptr)},
                         {"witness", a.witness ? witness_json(*a.witness) : json(nullptr)}});
    auto &t = o.text;
    t << std::setprecision(12);
    t << "d_estimate  " << a.d_estimate << "  (" << to_string(star) << ", eta " << a.eta << ", " << to_string(a.mode)
      << ", " << a.samples << " witnesses examined)\n";
    if (a.witness) {
        const auto &w = *a.witness;
        t << "witness     " << w.origin << ": ";
        if (star == StarMode::vvv) t << "|X|=" << w.x.size() << " |Y|=" << w.y.size() << " |Z|=" << w.z.size();
        if (star == StarMode::ev) t << "|X|=" << w.x.size() << " |P|=" << w.p.size();
        if (star == StarMode::ee) t << "|P|=" << w.p.size() << " |Q|=" << w.q.size();
        t << ", count " << w.edges << " against size " << w.size << "\n";
    }
    return o;
}

Outcome cmd_reproduce_observation(const SolverConfig &config)
{
    Outcome o;
    o.seed = config.seed;
    auto rows = reproduce_observation(config);
    auto &t = o.text;
    t << std::left << std::setw(9) << "graph" << std::setw(20) << "computed" << std::setw(22) << "target"
      << std::setw(12) << "error" << "status\n";
    bool all = true;
    for (const auto &r : rows) {
        o.records.push_back({{"record", "observation"},
                             {"graph", r.graph},
                             {"computed", r.computed},
                             {"target", r.target},
                             {"target_text", r.target_text},
                             {"error", r.error},
                             {"tolerance", r.tolerance},
                             {"pass", r.pass}});
        std::ostringstream computed, error;
        computed << std::setprecision(15) << r.computed;
        error << std::setprecision(2) << std::scientific << r.error;
        t << std::setw(9) << r.graph << std::setw(20) << computed.str() << std::setw(22) << r.target_text
          << std::setw(12) << error.str() << (r.pass ? "ok" : "FAIL") << "\n";
        all = all && r.pass;
    }
    o.exit_code = all ? kExitOk : kExitFailed;
    return o;
}

Outcome cmd_pt_check(const std::string &path, int t_value, const SolverConfig &config)
{
    Outcome o;
    o.seed = config.seed;
    auto graph = read_hypergraph_file(path);
    auto r = pt_check(graph, t_value, config);
    o.records.push_back({{"record", "pt_check"},
                         {"t", r.t},
                         {"lambda_graph", r.lambda_graph},
                         {"scaled", r.scaled},
                         {"lambda_palette", r.lambda_palette},
                         {"difference", r.difference},
                         {"tolerance", kPtTolerance},
                         {"pass", r.pass}});
    auto &t = o.text;
    t << std::setprecision(15);
    t << "graph lagrangian          " << r.lambda_graph << "\n";
    t << "(t/6) x graph lagrangian  " << r.scaled << "  (t=" << t_value << ")\n";
    t << "p_t palette lagrangian    " << r.lambda_palette << "\n";
    t << "difference                " << std::setprecision(3) << std::scientific << r.difference << "  "
      << (r.pass ? "ok" : "FAIL") << "\n";
    o.exit_code = r.pass ? kExitOk : kExitFailed;
    return o;
}

Outcome cmd_replay(const std::string &manifest_path, std::ostream &out, std::ostream &err)
{
    Outcome o;
    json manifest = json::parse(read_text_file(manifest_path));
    std::vector<std::string> argv = manifest.at("argv").get<std::vector<std::string>>();
    std::optional<std::uint64_t> seed;
    if (!manifest.at("seed").is_null()) seed = manifest.at("seed").get<std::uint64_t>();
    std::string expected = manifest.at("digest").get<std::string>();

    // Rerun without rewriting the manifest.
    std::vector<std::string> rerun;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        if (argv[i] == "--manifest" && i + 1 < argv.size()) {
            ++i;
            continue;
        }
        if (argv[i].rfind("--manifest=", 0) == 0) continue;
        rerun.push_back(argv[i]);
    }
    Globals globals;
    bool handled = false;
    std::ostringstream sink_out, sink_err;
    auto inv = execute(rerun, seed, globals, sink_out, sink_err, handled);
    if (handled) {
        err << sink_err.str();
        throw std::runtime_error("manifest command line could not be replayed");
    }
    std::string actual = fnv1a_hex(records_text(inv.outcome.records));
    bool match = actual == expected;
    o.records.push_back({{"record", "replay"},
                         {"command", inv.command},
                         {"expected_digest", expected},
                         {"actual_digest", actual},
                         {"match", match}});
    o.text << "replayed    " << inv.command << "\n";
    o.text << "digest      " << actual << (match ? " matches" : " differs from ") << (match ? "" : expected) << "\n";
    o.exit_code = match ? kExitOk : kExitFailed;
    (void)out;
    return o;
}

StarMode star_option(const std::string &text) { return parse_star_mode(text); }

Invocation execute(const std::vector<std::string> &args, std::optional<std::uint64_t> seed_override, Globals &globals,
                   std::ostream &out, std::ostream &err, bool &handled)
{
    handled = false;
    CLI::App app{"Lagrangians, palettes and uniform density tools for 3-graphs", "turan"};
    app.footer(kFormatsHelp);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    app.add_option("--format", globals.format, "Output: text or records (one JSON object per line)")
        ->check(CLI::IsMember({"text", "records"}));
    app.add_option("--manifest", globals.manifest, "Write a run manifest (JSON) to this path");
    app.add_option("--threads", globals.threads, "Worker threads (0 = all cores)");

    std::uint64_t seed = seed_override ? *seed_override : default_seed();

    std::string graph_path, palette_path, output, cert_path, star_text = "vvv", weights_text, hint_path;
    int t_value = 0, n = 0;
    bool optimal = false, exhaustive = false, no_structured = false;

    SolverConfig solver;
    auto *lag = app.add_subcommand("lagrangian", "Maximise the Lagrange polynomial of a hypergraph");
    lag->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
    lag->add_option("--starts", solver.starts, "Random starts");
    add_seed(lag, seed);
    lag->add_option("--tol", solver.tolerance, "Tolerance for the oracle cross-check");
    lag->add_option("--oracle-res", solver.oracle_resolution, "Grid oracle resolution");
    lag->add_option("--oracle-cap", solver.oracle_cap, "Largest n cross-checked against the grid oracle");

    PaletteSolverConfig palette_solver;
    auto *plag = app.add_subcommand("palette-lagrangian", "Maximise a palette Lagrangian (vvv, ev or ee)");
    plag->add_option("palette", palette_path, "Palette file")->required()->check(CLI::ExistingFile);
    plag->add_option("--star", star_text, "vvv, ev or ee")->required()->check(CLI::IsMember({"vvv", "ev", "ee"}));
    plag->add_option("--support-cap", palette_solver.support_cap, "Largest colour set for exact support enumeration");
    plag->add_option("--oracle-cap", palette_solver.oracle_cap, "Largest colour set cross-checked on a grid");
    add_seed(plag, seed);

    auto *bpt = app.add_subcommand("build-pt", "Build the palette p_t of a 3-graph");
    bpt->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
    bpt->add_option("--t", t_value, "Permutations per edge, 1..6")->required()->check(CLI::Range(1, 6));
    bpt->add_option("-o,--output", output, "Palette output file (default: stdout)");

    SatisfactionBudget sat_budget;
    auto *sat = app.add_subcommand("satisfies", "Decide whether a 3-graph satisfies a palette");
    sat->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
    sat->add_option("palette", palette_path, "Palette file")->required()->check(CLI::ExistingFile);
    sat->add_option("--max-n", sat_budget.max_n, "Largest vertex count searched");
    sat->add_option("--node-limit", sat_budget.node_limit, "Search node budget");
    sat->add_option("--emit-cert", cert_path, "Write the certificate to this file");

    DistanceBudget dist_budget;
    auto *dist = app.add_subcommand("almost-distance", "Fewest edge deletions after which the graph satisfies");
    dist->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
    dist->add_option("palette", palette_path, "Palette file")->required()->check(CLI::ExistingFile);
    dist->add_option("--max-n", dist_budget.max_n, "Largest vertex count searched");
    dist->add_option("--node-limit", dist_budget.node_limit, "Search node budget");
    dist->add_option("--emit-cert", cert_path, "Write the ordering and colouring attaining the distance");

    auto *con = app.add_subcommand("construct", "Random 3-graph from a palette and colour weights");
    con->add_option("palette", palette_path, "Palette file")->required()->check(CLI::ExistingFile);
    con->add_option("--n", n, "Vertices")->required()->check(CLI::Range(3, 100000));
    add_seed(con, seed);
    auto *weights_opt = con->add_option("--weights", weights_text, "Comma-separated colour weights (normalised)");
    auto *optimal_opt = con->add_flag("--optimal", optimal, "Use the maximiser of the vvv palette Lagrangian");
    weights_opt->excludes(optimal_opt);
    con->add_option("-o,--output", output, "Graph output file (default: stdout)");
    con->add_option("--cert", cert_path, "Certificate output file");

    AuditConfig audit_config;
    auto *aud = app.add_subcommand("audit", "Estimate the (d, eta, star)-density of a 3-graph");
    aud->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
    aud->add_option("--star", star_text, "vvv, ev or ee")->required()->check(CLI::IsMember({"vvv", "ev", "ee"}));
    aud->add_option("--eta", audit_config.eta, "The eta of the density inequality")->check(CLI::NonNegativeNumber);
    auto *samples_opt = aud->add_option("--samples", audit_config.samples, "Random witnesses");
    auto *exhaustive_opt = aud->add_flag("--exhaustive", exhaustive, "Examine every witness (small n only)");
    samples_opt->excludes(exhaustive_opt);
    aud->add_option("--density", audit_config.densities, "Inclusion probabilities of random subsets")
        ->check(CLI::Range(0.0, 1.0));
    aud->add_option("--hint", hint_path, "Certificate whose colour classes are tried as pair sets")
        ->check(CLI::ExistingFile);
    aud->add_flag("--no-structured", no_structured, "Only random witnesses");
    add_seed(aud, seed);

    auto *obs = app.add_subcommand("reproduce-observation", "Lagrangians of tight cycles and F_{3,2} against targets");
    add_seed(obs, seed);

    auto *ptc = app.add_subcommand("pt-check", "Check the p_t scaling identity on a 3-graph");
    ptc->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
    ptc->add_option("--t", t_value, "Permutations per edge, 1..6")->required()->check(CLI::Range(1, 6));
    add_seed(ptc, seed);

    std::string manifest_in;
    auto *rep = app.add_subcommand("replay", "Rerun a manifest and compare the records digest");
    rep->add_option("manifest", manifest_in, "Manifest file")->required()->check(CLI::ExistingFile);

    Invocation inv;
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        handled = true;
        inv.outcome.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
        return inv;
    }

    unsigned threads = globals.threads;
    solver.seed = seed;
    solver.threads = threads;
    auto *chosen = app.get_subcommands().front();
    inv.command = chosen->get_name();

    if (chosen == lag) {
        inv.outcome = cmd_lagrangian(graph_path, solver);
    } else if (chosen == plag) {
        palette_solver.ascent.seed = seed;
        palette_solver.ascent.threads = threads;
        palette_solver.threads = threads;
        inv.outcome = cmd_palette_lagrangian(palette_path, star_option(star_text), palette_solver);
    } else if (chosen == bpt) {
        inv.outcome = cmd_build_pt(graph_path, t_value, output);
    } else if (chosen == sat) {
        inv.outcome = cmd_satisfies(graph_path, palette_path, sat_budget, cert_path);
    } else if (chosen == dist) {
        inv.outcome = cmd_almost_distance(graph_path, palette_path, dist_budget, cert_path);
    } else if (chosen == con) {
        inv.outcome = cmd_construct(palette_path, n, seed, weights_text, optimal, output, cert_path, threads);
    } else if (chosen == aud) {
        audit_config.mode = exhaustive ? AuditMode::exhaustive : AuditMode::sampled;
        audit_config.seed = seed;
        audit_config.structured = !no_structured;
        audit_config.threads = threads;
        inv.outcome = cmd_audit(graph_path, star_option(star_text), audit_config, hint_path);
    } else if (chosen == obs) {
        inv.outcome = cmd_reproduce_observation(solver);
    } else if (chosen == ptc) {
        inv.outcome = cmd_pt_check(graph_path, t_value, solver);
    } else if (chosen == rep) {
        inv.outcome = cmd_replay(manifest_in, out, err);
    }
    return inv;
}

} // namespace

std::string fnv1a_hex(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    auto started = std::chrono::steady_clock::now();
    Globals globals;
    try {
        bool handled = false;
        auto inv = execute(args, std::nullopt, globals, out, err, handled);
        if (handled) return inv.outcome.exit_code;

        std::string records = records_text(inv.outcome.records);
        if (globals.format == "records")
            out << records;
        else
            out << inv.outcome.text.str();

        if (!globals.manifest.empty()) {
            double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            json manifest{{"command", inv.command},
                          {"argv", args},
                          {"seed", inv.outcome.seed ? json(*inv.outcome.seed) : json(nullptr)},
                          {"version", std::string(kToolVersion)},
                          {"duration_seconds", seconds},
                          {"digest", fnv1a_hex(records)},
                          {"exit_code", inv.outcome.exit_code}};
            write_text_file(globals.manifest, manifest.dump(2) + "\n");
        }
        return inv.outcome.exit_code;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace turan
