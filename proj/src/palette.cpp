#include <turan/palette.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace turan {

namespace {

std::string triple_to_string(const ColourTriple &t)
{
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

// Dense tables beyond this many cells would be wasteful; palettes that large
// are far outside what the exhaustive routines can handle anyway.
constexpr std::size_t kMaxTableCells = std::size_t{1} << 27;

} // namespace

Palette::Palette(std::vector<ColourTriple> triples) : triples_(std::move(triples))
{
    for (const auto &t : triples_)
        for (Colour c : t)
            if (c < 0) throw std::invalid_argument("negative colour in triple " + triple_to_string(t));

    std::sort(triples_.begin(), triples_.end());
    if (auto dup = std::adjacent_find(triples_.begin(), triples_.end()); dup != triples_.end())
        throw std::invalid_argument("duplicate triple " + triple_to_string(*dup));

    for (const auto &t : triples_) colours_.insert(colours_.end(), t.begin(), t.end());
    std::sort(colours_.begin(), colours_.end());
    colours_.erase(std::unique(colours_.begin(), colours_.end()), colours_.end());

    dense_.reserve(triples_.size());
    for (const auto &t : triples_) dense_.push_back({*index_of(t[0]), *index_of(t[1]), *index_of(t[2])});
}

std::optional<int> Palette::index_of(Colour c) const
{
    auto it = std::lower_bound(colours_.begin(), colours_.end(), c);
    if (it == colours_.end() || *it != c) return std::nullopt;
    return static_cast<int>(it - colours_.begin());
}

bool Palette::contains(const ColourTriple &t) const
{
    return std::binary_search(triples_.begin(), triples_.end(), t);
}

TripleTable::TripleTable(const Palette &palette) : q_(static_cast<int>(palette.colour_count()))
{
    std::size_t q = palette.colour_count();
    if (q * q * q > kMaxTableCells) throw std::length_error("palette has too many colours for a dense triple table");
    flags_.assign(q * q * q, 0);
    for (const auto &t : palette.dense_triples())
        flags_[(static_cast<std::size_t>(t[0]) * q + static_cast<std::size_t>(t[1])) * q +
               static_cast<std::size_t>(t[2])] = 1;
}

} // namespace turan
