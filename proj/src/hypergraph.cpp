#include <turan/hypergraph.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace turan {

namespace {

std::string edge_to_string(const std::vector<Vertex> &e)
{
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(e[i]);
    }
    return s + "}";
}

} // namespace

Hypergraph::Hypergraph(int k, int n, std::vector<std::vector<Vertex>> edges) : k_(k), n_(n)
{
    if (k < 1) throw std::invalid_argument("uniformity must be positive, got " + std::to_string(k));
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative, got " + std::to_string(n));

    for (auto &e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("edge " + edge_to_string(e) + " has " + std::to_string(e.size()) +
                                        " vertices, expected " + std::to_string(k));
        for (Vertex v : e)
            if (v < 1 || v > n)
                throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [1, " + std::to_string(n) +
                                            "]");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("edge " + edge_to_string(e) + " repeats a vertex");
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw std::invalid_argument("duplicate edge " + edge_to_string(*dup));

    flat_.reserve(edges.size() * static_cast<std::size_t>(k));
    for (const auto &e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
}

bool Hypergraph::contains(std::span<const Vertex> vertices) const
{
    if (static_cast<int>(vertices.size()) != k_) return false;
    std::vector<Vertex> key(vertices.begin(), vertices.end());
    std::sort(key.begin(), key.end());

    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto e = edge(mid);
        if (std::lexicographical_compare(e.begin(), e.end(), key.begin(), key.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < size() && std::equal(key.begin(), key.end(), edge(lo).begin());
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const
{
    std::vector<std::vector<Vertex>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto e = edge(i);
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

std::vector<int> Hypergraph::degrees() const
{
    std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex v : flat_) ++deg[static_cast<std::size_t>(v)];
    return deg;
}

Hypergraph tight_cycle(int length)
{
    if (length < 3) throw std::invalid_argument("tight cycle needs length >= 3, got " + std::to_string(length));
    std::set<std::vector<Vertex>> windows;
    for (int i = 0; i < length; ++i) {
        std::vector<Vertex> e{i % length + 1, (i + 1) % length + 1, (i + 2) % length + 1};
        std::sort(e.begin(), e.end());
        windows.insert(e);
    }
    return Hypergraph(3, length, {windows.begin(), windows.end()});
}

Hypergraph complete_hypergraph(int k, int n)
{
    std::vector<std::vector<Vertex>> edges;
    if (k >= 1 && k <= n) {
        std::vector<Vertex> e(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            edges.push_back(e);
            int i = k - 1;
            while (i >= 0 && e[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
            if (i < 0) break;
            ++e[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return Hypergraph(k, n, std::move(edges));
}

Hypergraph make_f32()
{
    return Hypergraph(3, 5, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}});
}

Hypergraph with_edges(const Hypergraph &graph, const std::vector<bool> &keep)
{
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < graph.size(); ++i)
        if (keep.at(i)) {
            auto e = graph.edge(i);
            edges.emplace_back(e.begin(), e.end());
        }
    return Hypergraph(graph.uniformity(), graph.order(), std::move(edges));
}

} // namespace turan
