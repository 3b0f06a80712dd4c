#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace turan {

using Colour = int;
using ColourTriple = std::array<Colour, 3>;

/// A finite set of ordered colour triples.
///
/// Triples are ordered, so (1,2,3) and (2,1,3) are different members, and a
/// triple may repeat a colour. The colour set is the union of all entries,
/// kept sorted; each colour also has a dense 0-based index into that list,
/// which is how weight vectors over the palette are laid out.
class Palette {
public:
    using DenseTriple = std::array<int, 3>;

    Palette() = default;
    explicit Palette(std::vector<ColourTriple> triples);

    const std::vector<ColourTriple> &triples() const { return triples_; }
    const std::vector<Colour> &colours() const { return colours_; }
    /// Triples rewritten with dense colour indices, same order as triples().
    const std::vector<DenseTriple> &dense_triples() const { return dense_; }

    std::size_t size() const { return triples_.size(); }
    std::size_t colour_count() const { return colours_.size(); }
    bool empty() const { return triples_.empty(); }

    std::optional<int> index_of(Colour c) const;
    bool contains(const ColourTriple &t) const;

    bool operator==(const Palette &other) const { return triples_ == other.triples_; }

private:
    std::vector<ColourTriple> triples_;
    std::vector<Colour> colours_;
    std::vector<DenseTriple> dense_;
};

/// Dense membership table over colour indices, |colours|^3 flags.
class TripleTable {
public:
    explicit TripleTable(const Palette &palette);

    int colour_count() const { return q_; }
    bool operator()(int a, int b, int c) const
    {
        return flags_[(static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b)) *
                          static_cast<std::size_t>(q_) +
                      static_cast<std::size_t>(c)] != 0;
    }

private:
    int q_;
    std::vector<unsigned char> flags_;
};

} // namespace turan
