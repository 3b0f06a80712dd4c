#include <turan/density.hpp>
#include <turan/link_index.hpp>
#include <turan/parallel.hpp>
#include <turan/rng.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace turan {

namespace {

struct PairSet {
    std::vector<VertexPair> pairs;
    /// nbr[v]: the vertices paired with v.
    std::vector<VertexSet> nbr;
};

PairSet make_pair_set(int n, std::vector<VertexPair> pairs)
{
    for (auto &[u, v] : pairs)
        if (u > v) std::swap(u, v);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    PairSet out{std::move(pairs), std::vector<VertexSet>(static_cast<std::size_t>(n) + 1, VertexSet(n))};
    for (auto [u, v] : out.pairs) {
        out.nbr[static_cast<std::size_t>(u)].insert(v);
        out.nbr[static_cast<std::size_t>(v)].insert(u);
    }
    return out;
}

/// One instance of the inequality being tested.
struct Candidate {
    VertexSet x, y, z;
    PairSet p, q;
    std::string origin;
};

struct Count {
    std::uint64_t edges = 0;
    std::uint64_t size = 0;
};

/// Counts through the link index when the graph is small enough, else by
/// iterating the edges.
class Counter {
public:
    explicit Counter(const Hypergraph &graph) : graph_(graph)
    {
        if (graph.order() <= LinkIndex::kMaxOrder) index_.emplace(graph);
    }

    const LinkIndex *index() const { return index_ ? &*index_ : nullptr; }

    Count count(StarMode star, const Candidate &c) const
    {
        switch (star) {
        case StarMode::vvv: return vvv(c);
        case StarMode::ev: return ev(c);
        case StarMode::ee: return ee(c);
        }
        return {};
    }

private:
    Count vvv(const Candidate &c) const
    {
        Count out{0, c.x.size() * c.y.size() * c.z.size()};
        if (out.size == 0) return out;
        if (!index_) {
            out.edges = count_evvv(graph_, c.x.members(), c.y.members(), c.z.members());
            return out;
        }
        auto ys = c.y.members();
        for (Vertex x : c.x.members())
            for (Vertex y : ys) out.edges += index_->common(x, y, c.z);
        return out;
    }

    Count ev(const Candidate &c) const
    {
        Count out{0, c.x.size() * c.p.pairs.size()};
        if (out.size == 0) return out;
        if (!index_) {
            out.edges = count_eev(graph_, c.x.members(), c.p.pairs);
            return out;
        }
        for (auto [u, v] : c.p.pairs) out.edges += index_->common(u, v, c.x);
        return out;
    }

    Count ee(const Candidate &c) const
    {
        Count out;
        int n = graph_.order();
        for (Vertex y = 1; y <= n; ++y)
            out.size += c.p.nbr[static_cast<std::size_t>(y)].size() * c.q.nbr[static_cast<std::size_t>(y)].size();
        if (out.size == 0) return out;
        if (!index_) {
            out.edges = count_kee_and_eee(graph_, c.p.pairs, c.q.pairs).edges;
            return out;
        }
        for (Vertex y = 1; y <= n; ++y) {
            const auto &qn = c.q.nbr[static_cast<std::size_t>(y)];
            if (qn.size() == 0) continue;
            for (Vertex x : c.p.nbr[static_cast<std::size_t>(y)].members()) out.edges += index_->common(x, y, qn);
        }
        return out;
    }

    const Hypergraph &graph_;
    std::optional<LinkIndex> index_;
};

AuditWitness to_witness(StarMode star, const Candidate &c, const Count &count)
{
    AuditWitness w;
    if (star == StarMode::vvv) {
        w.x = c.x.members(), w.y = c.y.members(), w.z = c.z.members();
    } else if (star == StarMode::ev) {
        w.x = c.x.members(), w.p = c.p.pairs;
    } else {
        w.p = c.p.pairs, w.q = c.q.pairs;
    }
    w.edges = count.edges;
    w.size = count.size;
    w.origin = c.origin;
    return w;
}

VertexSet from_list(int n, const std::vector<Vertex> &list) { return VertexSet(n, list); }

std::vector<Vertex> range(Vertex first, Vertex last)
{
    std::vector<Vertex> out;
    for (Vertex v = first; v <= last; ++v) out.push_back(v);
    return out;
}

VertexSet random_vertices(int n, double rho, Rng &rng)
{
    VertexSet s(n);
    for (Vertex v = 1; v <= n; ++v)
        if (rng.bernoulli(rho)) s.insert(v);
    if (s.size() == 0) s.insert(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))) + 1);
    return s;
}

PairSet random_pairs(int n, double rho, Rng &rng)
{
    std::vector<VertexPair> pairs;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rng.bernoulli(rho)) pairs.emplace_back(u, v);
    if (pairs.empty()) {
        auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))) + 1;
        auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1))) + 1;
        if (v >= u) ++v;
        pairs.emplace_back(u, v);
    }
    return make_pair_set(n, std::move(pairs));
}

Candidate random_candidate(StarMode star, int n, double rho, Rng rng)
{
    Candidate c;
    c.origin = "random rho=" + std::to_string(rho);
    c.x = VertexSet(n), c.y = VertexSet(n), c.z = VertexSet(n);
    c.p = make_pair_set(n, {}), c.q = make_pair_set(n, {});
    if (star == StarMode::vvv) {
        c.x = random_vertices(n, rho, rng);
        c.y = random_vertices(n, rho, rng);
        c.z = random_vertices(n, rho, rng);
    } else if (star == StarMode::ev) {
        c.x = random_vertices(n, rho, rng);
        c.p = random_pairs(n, rho, rng);
    } else {
        c.p = random_pairs(n, rho, rng);
        c.q = random_pairs(n, rho, rng);
    }
    return c;
}

std::vector<Candidate> structured_candidates(const Hypergraph &graph, StarMode star, const AuditConfig &config)
{
    int n = graph.order();
    std::vector<std::pair<std::string, std::vector<Vertex>>> vertex_sets;
    vertex_sets.emplace_back("all vertices", range(1, n));
    if (n >= 2) {
        vertex_sets.emplace_back("first half", range(1, n / 2));
        vertex_sets.emplace_back("second half", range(n / 2 + 1, n));
    }
    if (n >= 3) {
        vertex_sets.emplace_back("first third", range(1, n / 3));
        vertex_sets.emplace_back("middle third", range(n / 3 + 1, 2 * n / 3));
        vertex_sets.emplace_back("last third", range(2 * n / 3 + 1, n));
    }
    auto degrees = graph.degrees();
    std::vector<Vertex> by_degree = range(1, n);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
        return degrees[static_cast<std::size_t>(a)] < degrees[static_cast<std::size_t>(b)];
    });
    if (n >= 2) {
        vertex_sets.emplace_back("lowest-degree half", std::vector<Vertex>(by_degree.begin(), by_degree.begin() + n / 2));
        vertex_sets.emplace_back("highest-degree half", std::vector<Vertex>(by_degree.begin() + n / 2, by_degree.end()));
    }

    std::vector<Candidate> out;
    auto blank = [&](std::string origin) {
        Candidate c;
        c.origin = std::move(origin);
        c.x = VertexSet(n), c.y = VertexSet(n), c.z = VertexSet(n);
        c.p = make_pair_set(n, {}), c.q = make_pair_set(n, {});
        return c;
    };

    if (star == StarMode::vvv) {
        for (const auto &[name, set] : vertex_sets) {
            if (set.empty()) continue;
            auto c = blank(name + " (x3)");
            c.x = c.y = c.z = from_list(n, set);
            out.push_back(std::move(c));
        }
        if (n >= 3) {
            auto c = blank("thirds");
            c.x = from_list(n, vertex_sets[3].second);
            c.y = from_list(n, vertex_sets[4].second);
            c.z = from_list(n, vertex_sets[5].second);
            out.push_back(std::move(c));
        }
        return out;
    }

    // Pair candidates.
    std::vector<std::pair<std::string, std::vector<VertexPair>>> pair_sets;
    std::vector<VertexPair> all, inside_first, inside_second, across;
    std::vector<std::pair<std::uint64_t, VertexPair>> by_codegree;
    std::map<VertexPair, std::uint64_t> codegree;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto e = graph.edge(i);
        ++codegree[{e[0], e[1]}], ++codegree[{e[1], e[2]}], ++codegree[{e[0], e[2]}];
    }
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) {
            all.emplace_back(u, v);
            bool fu = u <= n / 2, fv = v <= n / 2;
            (fu && fv ? inside_first : !fu && !fv ? inside_second : across).emplace_back(u, v);
            auto it = codegree.find({u, v});
            by_codegree.emplace_back(it == codegree.end() ? 0 : it->second, VertexPair{u, v});
        }
    std::stable_sort(by_codegree.begin(), by_codegree.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<VertexPair> low_codegree, high_codegree;
    for (std::size_t i = 0; i < by_codegree.size(); ++i)
        (i < by_codegree.size() / 2 ? low_codegree : high_codegree).push_back(by_codegree[i].second);
    pair_sets.emplace_back("all pairs", all);
    pair_sets.emplace_back("pairs inside first half", inside_first);
    pair_sets.emplace_back("pairs inside second half", inside_second);
    pair_sets.emplace_back("pairs across halves", across);
    pair_sets.emplace_back("lowest-codegree half of pairs", low_codegree);
    pair_sets.emplace_back("highest-codegree half of pairs", high_codegree);
    if (config.hint && config.hint->order() == n) {
        std::map<Colour, std::vector<VertexPair>> classes;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (Colour c = (*config.hint)(u, v); c != PairColouring::kUncoloured) classes[c].emplace_back(u, v);
        for (auto &[colour, pairs] : classes) pair_sets.emplace_back("colour class " + std::to_string(colour), pairs);
    }
    std::erase_if(pair_sets, [](const auto &s) { return s.second.empty(); });

    if (star == StarMode::ev) {
        for (const auto &[vname, vset] : vertex_sets) {
            if (vset.empty()) continue;
            for (const auto &[pname, pset] : pair_sets) {
                auto c = blank(vname + " / " + pname);
                c.x = from_list(n, vset);
                c.p = make_pair_set(n, pset);
                out.push_back(std::move(c));
            }
        }
    } else {
        for (const auto &[pname, pset] : pair_sets)
            for (const auto &[qname, qset] : pair_sets) {
                auto c = blank(pname + " / " + qname);
                c.p = make_pair_set(n, pset);
                c.q = make_pair_set(n, qset);
                out.push_back(std::move(c));
            }
    }
    return out;
}

struct Best {
    double bound = std::numeric_limits<double>::infinity();
    AuditWitness witness;
    bool found = false;
};

template <typename Make>
void consider(Best &best, double bound, Make &&make)
{
    if (bound < best.bound) {
        best.bound = bound;
        best.witness = make();
        best.found = true;
    }
}

std::vector<Vertex> mask_members(std::uint32_t mask, int n)
{
    std::vector<Vertex> out;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) out.push_back(i + 1);
    return out;
}

std::uint64_t vertex_bits(std::uint32_t mask) { return std::uint64_t{mask} << 1; }

void exhaustive_vvv(const Hypergraph &graph, const LinkIndex &index, double eta, Best &best, std::uint64_t &count)
{
    int n = graph.order();
    auto side = static_cast<std::size_t>(n) + 1;
    std::uint32_t full = (1u << n) - 1;
    std::vector<int> a(side * side), w(side);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (std::uint32_t xm = 1; xm <= full; ++xm) {
        std::uint64_t xb = vertex_bits(xm);
        auto xs = static_cast<std::uint64_t>(std::popcount(xm));
        // a[y][z] = number of x in X with xyz an edge.
        for (Vertex y = 1; y <= n; ++y)
            for (Vertex z = 1; z <= n; ++z)
                a[static_cast<std::size_t>(y) * side + static_cast<std::size_t>(z)] =
                    std::popcount(index.link(y, z)[0] & xb);
        std::fill(w.begin(), w.end(), 0);
        std::uint32_t ym = 0;
        // Gray-code walk over Y, updating w[z] = e(X, Y, {z}).
        for (std::uint32_t g = 1; g <= full; ++g) {
            int bit = std::countr_zero(g);
            ym ^= 1u << bit;
            Vertex y = bit + 1;
            int sign = (ym >> bit & 1) ? 1 : -1;
            for (Vertex z = 1; z <= n; ++z)
                w[static_cast<std::size_t>(z)] += sign * a[static_cast<std::size_t>(y) * side + static_cast<std::size_t>(z)];
            ++count;
            auto ys = static_cast<std::uint64_t>(std::popcount(ym));
            std::iota(order.begin(), order.end(), 1);
            std::stable_sort(order.begin(), order.end(), [&](Vertex p, Vertex q) {
                return w[static_cast<std::size_t>(p)] < w[static_cast<std::size_t>(q)];
            });
            std::uint64_t prefix = 0;
            for (std::size_t s = 1; s <= order.size(); ++s) {
                prefix += static_cast<std::uint64_t>(w[static_cast<std::size_t>(order[s - 1])]);
                std::uint64_t size = xs * ys * s;
                double bound = witness_bound(prefix, size, eta, n);
                consider(best, bound, [&] {
                    AuditWitness wit;
                    wit.x = mask_members(xm, n);
                    wit.y = mask_members(ym, n);
                    wit.z.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(s));
                    std::sort(wit.z.begin(), wit.z.end());
                    wit.edges = prefix;
                    wit.size = size;
                    wit.origin = "exhaustive";
                    return wit;
                });
            }
        }
    }
}

std::vector<VertexPair> all_pairs(int n)
{
    std::vector<VertexPair> out;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) out.emplace_back(u, v);
    return out;
}

void exhaustive_ev(const Hypergraph &graph, const LinkIndex &index, double eta, Best &best, std::uint64_t &count)
{
    int n = graph.order();
    auto pairs = all_pairs(n);
    std::vector<std::uint64_t> w(pairs.size());
    std::vector<std::size_t> order(pairs.size());
    for (std::uint32_t xm = 1; xm < (1u << n); ++xm) {
        ++count;
        std::uint64_t xb = vertex_bits(xm);
        auto xs = static_cast<std::uint64_t>(std::popcount(xm));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            w[i] = static_cast<std::uint64_t>(std::popcount(index.link(pairs[i].first, pairs[i].second)[0] & xb));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return w[p] < w[q]; });
        std::uint64_t prefix = 0;
        for (std::size_t s = 1; s <= order.size(); ++s) {
            prefix += w[order[s - 1]];
            double bound = witness_bound(prefix, xs * s, eta, n);
            consider(best, bound, [&] {
                AuditWitness wit;
                wit.x = mask_members(xm, n);
                for (std::size_t k = 0; k < s; ++k) wit.p.push_back(pairs[order[k]]);
                std::sort(wit.p.begin(), wit.p.end());
                wit.edges = prefix;
                wit.size = xs * s;
                wit.origin = "exhaustive";
                return wit;
            });
        }
    }
}

void exhaustive_ee(const Hypergraph &graph, const LinkIndex &index, double eta, Best &best, std::uint64_t &count)
{
    int n = graph.order();
    auto pairs = all_pairs(n);
    std::size_t m = pairs.size();
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n) + 1), a(m), b(m);
    std::vector<std::size_t> order;
    for (std::uint64_t pm = 1; pm < (std::uint64_t{1} << m); ++pm) {
        ++count;
        std::fill(nbr.begin(), nbr.end(), 0);
        for (std::size_t i = 0; i < m; ++i)
            if (pm >> i & 1) {
                auto [u, v] = pairs[i];
                nbr[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            }
        // For q = {u,v} in Q: hinge u with z = v, and hinge v with z = u.
        order.clear();
        for (std::size_t i = 0; i < m; ++i) {
            auto [u, v] = pairs[i];
            std::uint64_t link = index.link(u, v)[0];
            auto nu = nbr[static_cast<std::size_t>(u)], nv = nbr[static_cast<std::size_t>(v)];
            a[i] = static_cast<std::uint64_t>(std::popcount(nu & link) + std::popcount(nv & link));
            b[i] = static_cast<std::uint64_t>(std::popcount(nu) + std::popcount(nv));
            if (b[i] > 0) order.push_back(i);
        }
        // For fixed P the best Q is a prefix in increasing a/b.
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t p, std::size_t q) { return a[p] * b[q] < a[q] * b[p]; });
        std::uint64_t edges = 0, size = 0;
        for (std::size_t s = 1; s <= order.size(); ++s) {
            edges += a[order[s - 1]];
            size += b[order[s - 1]];
            double bound = witness_bound(edges, size, eta, n);
            consider(best, bound, [&] {
                AuditWitness wit;
                for (std::size_t i = 0; i < m; ++i)
                    if (pm >> i & 1) wit.p.push_back(pairs[i]);
                for (std::size_t k = 0; k < s; ++k) wit.q.push_back(pairs[order[k]]);
                std::sort(wit.q.begin(), wit.q.end());
                wit.edges = edges;
                wit.size = size;
                wit.origin = "exhaustive";
                return wit;
            });
        }
    }
}

} // namespace

std::string_view to_string(AuditMode mode) { return mode == AuditMode::exhaustive ? "exhaustive" : "sampled"; }

double witness_bound(std::uint64_t edges, std::uint64_t size, double eta, int n)
{
    double cube = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
    return (static_cast<double>(edges) + eta * cube) / static_cast<double>(size);
}

double recount_witness(const Hypergraph &graph, StarMode star, double eta, const AuditWitness &witness)
{
    std::uint64_t edges = 0, size = 0;
    if (star == StarMode::vvv) {
        edges = count_evvv(graph, witness.x, witness.y, witness.z);
        size = static_cast<std::uint64_t>(witness.x.size() * witness.y.size() * witness.z.size());
    } else if (star == StarMode::ev) {
        edges = count_eev(graph, witness.x, witness.p);
        size = static_cast<std::uint64_t>(witness.x.size() * witness.p.size());
    } else {
        auto counts = count_kee_and_eee(graph, witness.p, witness.q);
        edges = counts.edges;
        size = counts.hinged;
    }
    if (size == 0) throw std::invalid_argument("witness has zero size");
    return std::min(1.0, witness_bound(edges, size, eta, graph.order()));
}

DensityAudit audit_density(const Hypergraph &graph, StarMode star, const AuditConfig &config)
{
    if (graph.uniformity() != 3) throw std::invalid_argument("density audit needs a 3-graph");
    if (config.eta < 0.0 || !std::isfinite(config.eta)) throw std::invalid_argument("eta must be non-negative");
    DensityAudit audit;
    audit.star = star;
    audit.eta = config.eta;
    audit.mode = config.mode;
    audit.seed = config.seed;
    int n = graph.order();
    if (n == 0 || (star != StarMode::vvv && n < 2)) return audit;

    Best best;
    if (config.mode == AuditMode::exhaustive) {
        int cap = star == StarMode::vvv ? kExhaustiveVvvCap : star == StarMode::ev ? kExhaustiveEvCap : kExhaustiveEeCap;
        if (n > cap)
            throw std::invalid_argument("exhaustive " + std::string(to_string(star)) + " audit is limited to " +
                                        std::to_string(cap) + " vertices, graph has " + std::to_string(n));
        LinkIndex index(graph);
        if (star == StarMode::vvv) exhaustive_vvv(graph, index, config.eta, best, audit.samples);
        else if (star == StarMode::ev) exhaustive_ev(graph, index, config.eta, best, audit.samples);
        else exhaustive_ee(graph, index, config.eta, best, audit.samples);
    } else {
        if (config.densities.empty()) throw std::invalid_argument("no sampling densities configured");
        for (double rho : config.densities)
            if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("sampling densities must lie in (0, 1]");
        Counter counter(graph);
        if (config.structured) {
            for (const auto &c : structured_candidates(graph, star, config)) {
                auto count = counter.count(star, c);
                ++audit.samples;
                if (count.size == 0) continue;
                consider(best, witness_bound(count.edges, count.size, config.eta, n),
                         [&] { return to_witness(star, c, count); });
            }
        }
        Rng master(config.seed);
        auto draw = [&](std::uint64_t i) {
            return random_candidate(star, n, config.densities[i % config.densities.size()], master.split(i));
        };
        std::vector<double> bounds(config.samples, std::numeric_limits<double>::infinity());
        parallel_for(
            config.samples,
            [&](std::size_t i) {
                auto count = counter.count(star, draw(i));
                if (count.size > 0) bounds[i] = witness_bound(count.edges, count.size, config.eta, n);
            },
            config.threads);
        audit.samples += config.samples;
        auto it = std::min_element(bounds.begin(), bounds.end());
        if (it != bounds.end() && *it < best.bound) {
            auto c = draw(static_cast<std::uint64_t>(it - bounds.begin()));
            consider(best, *it, [&] { return to_witness(star, c, counter.count(star, c)); });
        }
    }
    if (best.found) {
        audit.d_estimate = std::min(1.0, best.bound);
        audit.witness = std::move(best.witness);
    }
    return audit;
}

} // namespace turan
