#include <turan/satisfaction.hpp>
#include <turan/text_io.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace turan {

namespace {

using Mask = std::uint64_t;

constexpr int kMaxSearchColours = 64;

struct BudgetExhausted {};

std::size_t pair_id(Vertex u, Vertex v)
{
    auto lo = static_cast<std::size_t>(std::min(u, v)), hi = static_cast<std::size_t>(std::max(u, v));
    return (hi - 1) * (hi - 2) / 2 + (lo - 1);
}

std::size_t pair_count(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

void require_three_uniform(const Hypergraph &graph)
{
    if (graph.uniformity() != 3) throw std::invalid_argument("palette satisfaction is defined for 3-graphs");
}

/// Twin classes: u and v share a class when swapping them maps the edge set
/// onto itself. Returns the class id (smallest member) of each vertex.
std::vector<Vertex> twin_classes(const Hypergraph &graph)
{
    int n = graph.order();
    std::vector<Vertex> cls(static_cast<std::size_t>(n) + 1);
    std::iota(cls.begin(), cls.end(), 0);
    std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < graph.size(); ++i)
        for (Vertex v : graph.edge(i)) incident[static_cast<std::size_t>(v)].push_back(i);

    auto swap_preserves = [&](Vertex u, Vertex v) {
        for (Vertex w : {u, v})
            for (std::size_t i : incident[static_cast<std::size_t>(w)]) {
                std::array<Vertex, 3> e{};
                auto edge = graph.edge(i);
                for (int j = 0; j < 3; ++j) {
                    Vertex x = edge[static_cast<std::size_t>(j)];
                    e[static_cast<std::size_t>(j)] = x == u ? v : x == v ? u : x;
                }
                if (!graph.contains(e)) return false;
            }
        return true;
    };
    for (Vertex u = 1; u <= n; ++u) {
        if (cls[static_cast<std::size_t>(u)] != u) continue;
        for (Vertex v = u + 1; v <= n; ++v)
            if (cls[static_cast<std::size_t>(v)] == v && swap_preserves(u, v)) cls[static_cast<std::size_t>(v)] = u;
    }
    return cls;
}

/// Receives the steps of an ordering enumeration.
class OrderingVisitor {
public:
    virtual ~OrderingVisitor() = default;
    /// Called after `v` takes the next position; false prunes the subtree.
    virtual bool enter(Vertex v) = 0;
    /// Undoes enter(v); called whether or not enter accepted.
    virtual void leave(Vertex v) = 0;
    /// A full ordering is placed; true stops the enumeration.
    virtual bool complete() = 0;
};

/// Depth-first enumeration of vertex orderings. Only the smallest unplaced
/// member of a twin class may be placed next.
class OrderingSearch {
public:
    OrderingSearch(const Hypergraph &graph, std::uint64_t &nodes, std::uint64_t limit)
        : n_(graph.order()), classes_(twin_classes(graph)), position_(static_cast<std::size_t>(n_) + 1, -1),
          nodes_(nodes), limit_(limit)
    {
    }

    const std::vector<Vertex> &ordering() const { return ordering_; }
    const std::vector<int> &positions() const { return position_; }

    /// True when the visitor stopped the enumeration.
    bool run(OrderingVisitor &visitor) { return descend(visitor); }

private:
    bool descend(OrderingVisitor &visitor)
    {
        if (static_cast<int>(ordering_.size()) == n_) return visitor.complete();
        for (Vertex v = 1; v <= n_; ++v) {
            if (position_[static_cast<std::size_t>(v)] >= 0) continue;
            bool blocked = false;
            for (Vertex w = 1; w < v && !blocked; ++w)
                blocked = position_[static_cast<std::size_t>(w)] < 0 &&
                          classes_[static_cast<std::size_t>(w)] == classes_[static_cast<std::size_t>(v)];
            if (blocked) continue;
            if (++nodes_ > limit_) throw BudgetExhausted{};
            position_[static_cast<std::size_t>(v)] = static_cast<int>(ordering_.size());
            ordering_.push_back(v);
            bool stop = visitor.enter(v) && descend(visitor);
            visitor.leave(v);
            ordering_.pop_back();
            position_[static_cast<std::size_t>(v)] = -1;
            if (stop) return true;
        }
        return false;
    }

    int n_;
    std::vector<Vertex> classes_;
    std::vector<int> position_;
    std::vector<Vertex> ordering_;
    std::uint64_t &nodes_;
    std::uint64_t limit_;
};

std::vector<std::vector<std::size_t>> incident_edges(const Hypergraph &graph)
{
    std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(graph.order()) + 1);
    for (std::size_t i = 0; i < graph.size(); ++i)
        for (Vertex v : graph.edge(i)) incident[static_cast<std::size_t>(v)].push_back(i);
    return incident;
}

/// The three pair slots of an edge under an ordering: (first,second),
/// (second,third), (first,third).
std::array<std::size_t, 3> edge_slots(std::span<const Vertex> edge, const std::vector<int> &position)
{
    std::array<Vertex, 3> e{edge[0], edge[1], edge[2]};
    std::sort(e.begin(), e.end(), [&](Vertex a, Vertex b) {
        return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
    });
    return {pair_id(e[0], e[1]), pair_id(e[1], e[2]), pair_id(e[0], e[2])};
}

/// Colour CSP with generalised arc consistency on the ternary edge
/// constraints and smallest-domain-first branching.
class ColourCsp {
public:
    ColourCsp(const Palette &palette, std::size_t variables, std::uint64_t &nodes, std::uint64_t limit)
        : palette_(palette), variables_(variables), nodes_(nodes), limit_(limit)
    {
        full_ = palette.colour_count() == 64 ? ~Mask{0} : (Mask{1} << palette.colour_count()) - 1;
    }

    /// Dense colour per variable on success (unconstrained variables get
    /// colour index 0).
    std::optional<std::vector<int>> solve(const std::vector<std::array<std::size_t, 3>> &constraints)
    {
        constraints_ = &constraints;
        watch_.assign(variables_, {});
        for (std::size_t c = 0; c < constraints.size(); ++c)
            for (std::size_t v : constraints[c]) watch_[v].push_back(c);
        std::vector<Mask> domains(variables_, full_);
        std::vector<std::size_t> all(constraints.size());
        std::iota(all.begin(), all.end(), 0);
        if (!propagate(domains, all)) return std::nullopt;
        if (!search(domains)) return std::nullopt;
        std::vector<int> out(variables_);
        for (std::size_t v = 0; v < variables_; ++v) out[v] = std::countr_zero(domains[v]);
        return out;
    }

private:
    bool revise(std::vector<Mask> &domains, std::size_t c, std::vector<std::size_t> &changed)
    {
        const auto &vars = (*constraints_)[c];
        std::array<Mask, 3> support{};
        for (const auto &t : palette_.dense_triples()) {
            bool fits = true;
            for (int i = 0; i < 3 && fits; ++i)
                fits = (domains[vars[static_cast<std::size_t>(i)]] >> t[static_cast<std::size_t>(i)]) & 1;
            if (!fits) continue;
            for (int i = 0; i < 3; ++i) support[static_cast<std::size_t>(i)] |= Mask{1} << t[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < 3; ++i) {
            std::size_t v = vars[static_cast<std::size_t>(i)];
            Mask next = domains[v] & support[static_cast<std::size_t>(i)];
            if (next == 0) return false;
            if (next != domains[v]) {
                domains[v] = next;
                changed.push_back(v);
            }
        }
        return true;
    }

    bool propagate(std::vector<Mask> &domains, std::vector<std::size_t> queue)
    {
        std::vector<char> queued(constraints_->size(), 0);
        for (std::size_t c : queue) queued[c] = 1;
        std::vector<std::size_t> changed;
        while (!queue.empty()) {
            std::size_t c = queue.back();
            queue.pop_back();
            queued[c] = 0;
            changed.clear();
            if (!revise(domains, c, changed)) return false;
            for (std::size_t v : changed)
                for (std::size_t d : watch_[v])
                    if (!queued[d]) {
                        queued[d] = 1;
                        queue.push_back(d);
                    }
        }
        return true;
    }

    bool search(std::vector<Mask> &domains)
    {
        if (++nodes_ > limit_) throw BudgetExhausted{};
        std::size_t pick = variables_;
        int best = 65;
        for (std::size_t v = 0; v < variables_; ++v) {
            if (watch_[v].empty()) continue;
            int size = std::popcount(domains[v]);
            if (size > 1 && (size < best || (size == best && watch_[v].size() > watch_[pick].size()))) {
                best = size;
                pick = v;
            }
        }
        if (pick == variables_) return true;
        for (Mask rest = domains[pick]; rest != 0; rest &= rest - 1) {
            std::vector<Mask> trial = domains;
            trial[pick] = rest & (~rest + 1);
            if (propagate(trial, watch_[pick]) && search(trial)) {
                domains = std::move(trial);
                return true;
            }
        }
        return false;
    }

    const Palette &palette_;
    std::size_t variables_;
    std::uint64_t &nodes_;
    std::uint64_t limit_;
    Mask full_ = 0;
    const std::vector<std::array<std::size_t, 3>> *constraints_ = nullptr;
    std::vector<std::vector<std::size_t>> watch_;
};

SatisfactionCertificate make_certificate(int n, const std::vector<Vertex> &ordering, const Palette &palette,
                                         const std::vector<int> &dense_colours)
{
    SatisfactionCertificate cert;
    cert.ordering = ordering;
    Colour fill = palette.colours().empty() ? PairColouring::kUncoloured : palette.colours().front();
    cert.colouring = PairColouring(n, fill);
    for (Vertex v = 2; v <= n; ++v)
        for (Vertex u = 1; u < v; ++u) {
            int c = dense_colours.empty() ? -1 : dense_colours[pair_id(u, v)];
            if (c >= 0) cert.colouring.set(u, v, palette.colours()[static_cast<std::size_t>(c)]);
        }
    return cert;
}

std::vector<Vertex> identity_ordering(int n)
{
    std::vector<Vertex> o(static_cast<std::size_t>(n));
    std::iota(o.begin(), o.end(), 1);
    return o;
}

void check_colour_count(const Palette &palette)
{
    if (palette.colour_count() > kMaxSearchColours)
        throw std::invalid_argument("satisfaction search supports at most " + std::to_string(kMaxSearchColours) +
                                    " colours, palette has " + std::to_string(palette.colour_count()));
}

} // namespace

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::not_satisfied: return "not_satisfied";
    case Verdict::indeterminate: return "indeterminate";
    }
    return "?";
}

bool verify_certificate(const Hypergraph &graph, const Palette &palette, const SatisfactionCertificate &cert)
{
    require_three_uniform(graph);
    int n = graph.order();
    if (static_cast<int>(cert.ordering.size()) != n)
        throw CertificateMismatch("ordering has " + std::to_string(cert.ordering.size()) + " vertices, graph has " +
                                  std::to_string(n));
    if (cert.colouring.order() != n)
        throw CertificateMismatch("colouring covers " + std::to_string(cert.colouring.order()) +
                                  " vertices, graph has " + std::to_string(n));
    std::vector<int> position(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t i = 0; i < cert.ordering.size(); ++i) {
        Vertex v = cert.ordering[i];
        if (v < 1 || v > n || position[static_cast<std::size_t>(v)] >= 0)
            throw CertificateMismatch("ordering is not a permutation of 1.." + std::to_string(n));
        position[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (Vertex v = 2; v <= n; ++v)
        for (Vertex u = 1; u < v; ++u) {
            Colour c = cert.colouring(u, v);
            if (c == PairColouring::kUncoloured) {
                if (palette.colour_count() > 0)
                    throw CertificateMismatch("pair {" + std::to_string(u) + "," + std::to_string(v) +
                                              "} is uncoloured");
            } else if (!palette.index_of(c)) {
                throw CertificateMismatch("pair {" + std::to_string(u) + "," + std::to_string(v) + "} has colour " +
                                          std::to_string(c) + ", which is not a palette colour");
            }
        }
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto e = graph.edge(i);
        std::array<Vertex, 3> o{e[0], e[1], e[2]};
        std::sort(o.begin(), o.end(), [&](Vertex a, Vertex b) {
            return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
        });
        ColourTriple shadow{cert.colouring(o[0], o[1]), cert.colouring(o[1], o[2]), cert.colouring(o[0], o[2])};
        if (!palette.contains(shadow)) return false;
    }
    return true;
}


namespace {

class SatisfactionVisitor : public OrderingVisitor {
public:
    SatisfactionVisitor(const Hypergraph &graph, const Palette &palette, const OrderingSearch &search,
                        std::uint64_t &nodes, std::uint64_t limit)
        : graph_(graph), palette_(palette), search_(search), incident_(incident_edges(graph)),
          csp_(palette, pair_count(graph.order()), nodes, limit)
    {
    }

    bool enter(Vertex v) override
    {
        const auto &pos = search_.positions();
        sizes_.push_back(closed_.size());
        for (std::size_t i : incident_[static_cast<std::size_t>(v)]) {
            auto e = graph_.edge(i);
            if (std::all_of(e.begin(), e.end(), [&](Vertex w) { return pos[static_cast<std::size_t>(w)] >= 0; }))
                closed_.push_back(edge_slots(e, pos));
        }
        if (closed_.size() == sizes_.back()) return true;
        auto colours = csp_.solve(closed_);
        if (!colours) return false;
        if (closed_.size() == graph_.size()) colours_ = std::move(*colours);
        return true;
    }

    void leave(Vertex) override
    {
        closed_.resize(sizes_.back());
        sizes_.pop_back();
    }

    bool complete() override
    {
        if (colours_.empty()) return false;
        certificate_ = make_certificate(graph_.order(), search_.ordering(), palette_, colours_);
        return true;
    }

    const SatisfactionCertificate &certificate() const { return certificate_; }

private:
    const Hypergraph &graph_;
    const Palette &palette_;
    const OrderingSearch &search_;
    std::vector<std::vector<std::size_t>> incident_;
    ColourCsp csp_;
    std::vector<std::array<std::size_t, 3>> closed_;
    std::vector<std::size_t> sizes_;
    std::vector<int> colours_;
    SatisfactionCertificate certificate_;
};

/// Minimum number of violated edges over pair colourings for one fixed
/// ordering, by branch and bound. An edge is dead once its partial shadow
/// has no completion in the palette.
class DeletionSearch {
public:
    DeletionSearch(const Palette &palette, std::size_t variables, std::uint64_t &nodes, std::uint64_t limit)
        : q_(static_cast<int>(palette.colour_count())), variables_(variables), nodes_(nodes), limit_(limit)
    {
        // Slot value q stands for "unassigned".
        auto w = static_cast<std::size_t>(q_ + 1);
        compatible_.assign(w * w * w, 0);
        for (const auto &t : palette.dense_triples())
            for (int mask = 0; mask < 8; ++mask) {
                std::array<std::size_t, 3> k{};
                for (int i = 0; i < 3; ++i)
                    k[static_cast<std::size_t>(i)] =
                        (mask >> i) & 1 ? static_cast<std::size_t>(t[static_cast<std::size_t>(i)]) : w - 1;
                compatible_[(k[0] * w + k[1]) * w + k[2]] = 1;
            }
    }

    /// Best colouring with fewer than `bound` dead edges, if any.
    std::optional<std::pair<std::size_t, std::vector<int>>> solve(const std::vector<std::array<std::size_t, 3>> &edges,
                                                                  std::size_t bound)
    {
        edges_ = &edges;
        watch_.assign(variables_, {});
        for (std::size_t e = 0; e < edges.size(); ++e)
            for (std::size_t v : edges[e]) watch_[v].push_back(e);
        order_.clear();
        for (std::size_t v = 0; v < variables_; ++v)
            if (!watch_[v].empty()) order_.push_back(v);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return watch_[a].size() > watch_[b].size(); });
        assigned_.assign(variables_, q_);
        dead_.assign(edges.size(), 0);
        best_ = bound;
        best_colours_.clear();
        descend(0, 0);
        if (best_colours_.empty()) return std::nullopt;
        return std::make_pair(best_, best_colours_);
    }

private:
    bool alive(std::size_t e) const
    {
        auto w = static_cast<std::size_t>(q_ + 1);
        const auto &s = (*edges_)[e];
        return compatible_[(static_cast<std::size_t>(assigned_[s[0]]) * w + static_cast<std::size_t>(assigned_[s[1]])) *
                               w +
                           static_cast<std::size_t>(assigned_[s[2]])] != 0;
    }

    std::size_t kill(std::size_t var, std::vector<std::size_t> &killed)
    {
        for (std::size_t e : watch_[var])
            if (!dead_[e] && !alive(e)) {
                dead_[e] = 1;
                killed.push_back(e);
            }
        return killed.size();
    }

    void descend(std::size_t depth, std::size_t cost)
    {
        if (++nodes_ > limit_) throw BudgetExhausted{};
        if (cost >= best_) return;
        if (depth == order_.size()) {
            best_ = cost;
            best_colours_.assign(variables_, 0);
            for (std::size_t v = 0; v < variables_; ++v)
                if (assigned_[v] < q_) best_colours_[v] = assigned_[v];
            return;
        }
        std::size_t var = order_[depth];
        // Colours in order of how many edges they kill now.
        std::vector<std::pair<std::size_t, int>> choices;
        std::vector<std::size_t> killed;
        for (int c = 0; c < q_; ++c) {
            assigned_[var] = c;
            killed.clear();
            choices.emplace_back(kill(var, killed), c);
            for (std::size_t e : killed) dead_[e] = 0;
        }
        std::stable_sort(choices.begin(), choices.end(),
                         [](const auto &a, const auto &b) { return a.first < b.first; });
        for (const auto &[extra, c] : choices) {
            if (cost + extra >= best_) break;
            assigned_[var] = c;
            killed.clear();
            kill(var, killed);
            descend(depth + 1, cost + killed.size());
            for (std::size_t e : killed) dead_[e] = 0;
            if (best_ == 0) break;
        }
        assigned_[var] = q_;
    }

    int q_;
    std::size_t variables_;
    std::uint64_t &nodes_;
    std::uint64_t limit_;
    std::vector<unsigned char> compatible_;
    const std::vector<std::array<std::size_t, 3>> *edges_ = nullptr;
    std::vector<std::vector<std::size_t>> watch_;
    std::vector<std::size_t> order_;
    std::vector<int> assigned_;
    std::vector<unsigned char> dead_;
    std::size_t best_ = 0;
    std::vector<int> best_colours_;
};

class DistanceVisitor : public OrderingVisitor {
public:
    DistanceVisitor(const Hypergraph &graph, const Palette &palette, const OrderingSearch &search,
                    std::uint64_t &nodes, std::uint64_t limit, DistanceResult &result)
        : graph_(graph), palette_(palette), search_(search), solver_(palette, pair_count(graph.order()), nodes, limit),
          result_(result)
    {
    }

    bool enter(Vertex) override { return true; }
    void leave(Vertex) override {}

    bool complete() override
    {
        std::vector<std::array<std::size_t, 3>> slots;
        for (std::size_t i = 0; i < graph_.size(); ++i) slots.push_back(edge_slots(graph_.edge(i), search_.positions()));
        if (auto found = solver_.solve(slots, result_.deletions)) {
            result_.deletions = found->first;
            result_.certificate = make_certificate(graph_.order(), search_.ordering(), palette_, found->second);
        }
        return result_.deletions == 0;
    }

private:
    const Hypergraph &graph_;
    const Palette &palette_;
    const OrderingSearch &search_;
    DeletionSearch solver_;
    DistanceResult &result_;
};

} // namespace

SatisfactionResult satisfies(const Hypergraph &graph, const Palette &palette, const SatisfactionBudget &budget)
{
    require_three_uniform(graph);
    check_colour_count(palette);
    SatisfactionResult result;
    int n = graph.order();

    if (graph.empty()) {
        result.verdict = Verdict::satisfied;
        result.certificate = make_certificate(n, identity_ordering(n), palette, {});
        result.reason = "no edges";
        return result;
    }
    if (palette.empty()) {
        result.verdict = Verdict::not_satisfied;
        result.reason = "an empty palette admits no edge";
        return result;
    }
    if (n > budget.max_n) {
        result.reason = "graph has " + std::to_string(n) + " vertices; complete search is limited to " +
                        std::to_string(budget.max_n);
        return result;
    }

    OrderingSearch search(graph, result.nodes, budget.node_limit);
    SatisfactionVisitor visitor(graph, palette, search, result.nodes, budget.node_limit);
    try {
        if (search.run(visitor)) {
            auto cert = visitor.certificate();
            if (!verify_certificate(graph, palette, cert))
                throw std::logic_error("satisfaction search produced an invalid certificate");
            result.verdict = Verdict::satisfied;
            result.certificate = std::move(cert);
            result.reason = "certificate found";
        } else {
            result.verdict = Verdict::not_satisfied;
            result.reason = "no ordering admits a valid colouring";
        }
    } catch (const BudgetExhausted &) {
        result.verdict = Verdict::indeterminate;
        result.reason = "node budget of " + std::to_string(budget.node_limit) + " exhausted";
    }
    return result;
}

DistanceResult almost_satisfies_distance(const Hypergraph &graph, const Palette &palette, const DistanceBudget &budget)
{
    require_three_uniform(graph);
    check_colour_count(palette);
    DistanceResult result;
    int n = graph.order();

    // Deleting every edge always works.
    result.deletions = graph.size();
    result.certificate = make_certificate(n, identity_ordering(n), palette, {});
    if (graph.empty() || palette.empty()) {
        result.reason = graph.empty() ? "no edges" : "an empty palette admits no edge";
        return result;
    }
    if (n > budget.max_n) {
        result.optimal = false;
        result.reason = "graph has " + std::to_string(n) + " vertices; exact search is limited to " +
                        std::to_string(budget.max_n);
        return result;
    }

    auto decided = satisfies(graph, palette, {budget.max_n, budget.node_limit});
    result.nodes = decided.nodes;
    if (decided.verdict == Verdict::satisfied) {
        result.deletions = 0;
        result.certificate = std::move(decided.certificate);
        result.reason = "graph satisfies the palette";
        return result;
    }

    OrderingSearch search(graph, result.nodes, budget.node_limit);
    DistanceVisitor visitor(graph, palette, search, result.nodes, budget.node_limit, result);
    try {
        search.run(visitor);
        result.reason = "branch and bound over all orderings";
    } catch (const BudgetExhausted &) {
        result.optimal = false;
        result.reason = "node budget of " + std::to_string(budget.node_limit) + " exhausted; value is an upper bound";
    }
    return result;
}

std::string serialize_certificate(const SatisfactionCertificate &cert)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < cert.ordering.size(); ++i) out << (i ? " " : "") << cert.ordering[i];
    out << '\n';
    int n = cert.colouring.order();
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (Colour c = cert.colouring(u, v); c != PairColouring::kUncoloured)
                out << u << ' ' << v << ' ' << c << '\n';
    return out.str();
}

SatisfactionCertificate parse_certificate(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    bool have_ordering = false;
    SatisfactionCertificate cert;
    while (std::getline(in, raw)) {
        ++number;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::istringstream line(raw);
        std::vector<long long> tokens;
        std::string tok;
        while (line >> tok) {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(tok, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != tok.size()) throw ParseError(number, "non-integer token '" + tok + "'");
            tokens.push_back(value);
        }
        if (!have_ordering) {
            for (long long v : tokens) cert.ordering.push_back(static_cast<Vertex>(v));
            int n = static_cast<int>(tokens.size());
            std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
            for (Vertex v : cert.ordering) {
                if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                    throw ParseError(number, "ordering is not a permutation of 1.." + std::to_string(n));
                seen[static_cast<std::size_t>(v)] = true;
            }
            cert.colouring = PairColouring(n);
            have_ordering = true;
            continue;
        }
        if (tokens.size() != 3) throw ParseError(number, "pair line must be \"i j c\"");
        int n = cert.colouring.order();
        if (tokens[0] < 1 || tokens[1] < 1 || tokens[0] > n || tokens[1] > n || tokens[0] == tokens[1])
            throw ParseError(number, "pair {" + std::to_string(tokens[0]) + "," + std::to_string(tokens[1]) +
                                         "} is not a pair of 1.." + std::to_string(n));
        if (tokens[2] < 0) throw ParseError(number, "colour must be non-negative");
        auto u = static_cast<Vertex>(tokens[0]), v = static_cast<Vertex>(tokens[1]);
        if (cert.colouring(u, v) != PairColouring::kUncoloured)
            throw ParseError(number, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} coloured twice");
        cert.colouring.set(u, v, static_cast<Colour>(tokens[2]));
    }
    if (!have_ordering) throw ParseError(0, "missing ordering line");
    return cert;
}

} // namespace turan
