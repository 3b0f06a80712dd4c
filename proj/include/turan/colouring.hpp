#pragma once

#include <turan/hypergraph.hpp>
#include <turan/palette.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

/// Colour of every unordered pair of vertices in {1..n}.
class PairColouring {
public:
    static constexpr Colour kUncoloured = -1;

    PairColouring() = default;
    explicit PairColouring(int n, Colour fill = kUncoloured)
        : n_(n), cells_(n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2, fill)
    {
    }

    int order() const { return n_; }

    Colour operator()(Vertex u, Vertex v) const { return cells_[index(u, v)]; }
    void set(Vertex u, Vertex v, Colour c) { cells_[index(u, v)] = c; }

    bool total() const
    {
        for (Colour c : cells_)
            if (c == kUncoloured) return false;
        return true;
    }

    bool operator==(const PairColouring &) const = default;

private:
    std::size_t index(Vertex u, Vertex v) const
    {
        if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
            throw std::out_of_range("pair {" + std::to_string(u) + "," + std::to_string(v) + "} is not a pair of 1.." +
                                    std::to_string(n_));
        auto lo = static_cast<std::size_t>(std::min(u, v)), hi = static_cast<std::size_t>(std::max(u, v));
        return (hi - 1) * (hi - 2) / 2 + (lo - 1);
    }

    int n_ = 0;
    std::vector<Colour> cells_;
};

} // namespace turan
