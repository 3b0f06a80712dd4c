#pragma once

#include <turan/colouring.hpp>
#include <turan/hypergraph.hpp>
#include <turan/palette.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace turan {

/// A vertex ordering and pair colouring witnessing that a 3-graph
/// satisfies a palette.
struct SatisfactionCertificate {
    /// ordering[i] is the vertex in position i.
    std::vector<Vertex> ordering;
    PairColouring colouring;

    bool operator==(const SatisfactionCertificate &) const = default;
};

/// Thrown when a certificate does not even fit the graph and palette
/// (wrong size, not a permutation, uncoloured pair, unknown colour).
class CertificateMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True iff every edge's ordered colour shadow lies in the palette.
/// Uncoloured pairs are accepted only when the palette has no colours.
bool verify_certificate(const Hypergraph &graph, const Palette &palette, const SatisfactionCertificate &cert);

enum class Verdict { satisfied, not_satisfied, indeterminate };

std::string_view to_string(Verdict verdict);

struct SatisfactionBudget {
    /// Largest vertex count searched completely.
    int max_n = 10;
    /// Search nodes (orderings plus colour assignments) before giving up.
    std::uint64_t node_limit = 200'000'000;
};

struct SatisfactionResult {
    Verdict verdict = Verdict::indeterminate;
    /// Present exactly when satisfied; already verified.
    std::optional<SatisfactionCertificate> certificate;
    std::uint64_t nodes = 0;
    std::string reason;
};

/// Complete search over orderings (prefix pruning, twin symmetry breaking)
/// with a forward-checking colour CSP per ordering.
SatisfactionResult satisfies(const Hypergraph &graph, const Palette &palette, const SatisfactionBudget &budget = {});

struct DistanceBudget {
    int max_n = 8;
    std::uint64_t node_limit = 200'000'000;
};

struct DistanceResult {
    /// Minimum number of edge deletions after which the graph satisfies the
    /// palette; an upper bound when `optimal` is false.
    std::size_t deletions = 0;
    bool optimal = true;
    /// Ordering and colouring attaining `deletions`.
    std::optional<SatisfactionCertificate> certificate;
    std::uint64_t nodes = 0;
    std::string reason;
};

/// Branch and bound over orderings and pair colourings; the cost of a
/// colouring is the number of edges whose shadow misses the palette.
DistanceResult almost_satisfies_distance(const Hypergraph &graph, const Palette &palette,
                                         const DistanceBudget &budget = {});

// Certificate text format: the ordering on the first line, then one line
// "i j c" per pair i<j.
std::string serialize_certificate(const SatisfactionCertificate &cert);
SatisfactionCertificate parse_certificate(std::string_view text);

} // namespace turan
