#pragma once

#include <turan/colouring.hpp>
#include <turan/construction.hpp>
#include <turan/hypergraph.hpp>
#include <turan/weighting.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace turan {

enum class AuditMode { exhaustive, sampled };

std::string_view to_string(AuditMode mode);

struct AuditConfig {
    double eta = 0.0;
    AuditMode mode = AuditMode::sampled;
    /// Random witnesses drawn in sampled mode.
    std::uint64_t samples = 10000;
    /// Inclusion probabilities for random vertex and pair subsets, cycled
    /// over the samples.
    std::vector<double> densities{0.1, 0.25, 0.5};
    std::uint64_t seed = 0x61756469;
    /// Also try intervals, degree-extremal and codegree-extremal sets.
    bool structured = true;
    /// Pair colouring whose colour classes are tried as pair sets.
    std::optional<PairColouring> hint;
    unsigned threads = 0;
};

/// Largest vertex count for exhaustive audits per mode.
inline constexpr int kExhaustiveVvvCap = 12;
inline constexpr int kExhaustiveEvCap = 12;
inline constexpr int kExhaustiveEeCap = 7;

/// The sets of one instance of the density inequality: X,Y,Z for vvv; X and
/// P for ev; P and Q for ee.
struct AuditWitness {
    std::vector<Vertex> x, y, z;
    std::vector<VertexPair> p, q;
    /// Edge count (e_vvv, e_ev or e_ee) and the size it is compared with
    /// (|X||Y||Z|, |X||P| or |K_ee(P,Q)|).
    std::uint64_t edges = 0;
    std::uint64_t size = 0;
    std::string origin;
};

struct DensityAudit {
    StarMode star = StarMode::vvv;
    /// Largest d for which the inequality holds on every examined witness,
    /// capped at 1.
    double d_estimate = 1.0;
    double eta = 0.0;
    std::optional<AuditWitness> witness;
    AuditMode mode = AuditMode::sampled;
    /// Witnesses examined (for exhaustive mode, the outer enumeration count).
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// (edges + eta n^3) / size, the largest d the witness allows.
double witness_bound(std::uint64_t edges, std::uint64_t size, double eta, int n);

/// Recounts the witness on `graph` with the direct counting routines and
/// returns min(1, witness_bound). Throws if the witness has zero size.
double recount_witness(const Hypergraph &graph, StarMode star, double eta, const AuditWitness &witness);

/// Adversarial search for the density parameter of `graph`: the minimum
/// witness bound over the examined sets. Exhaustive mode covers every
/// choice of sets (refused above the size caps).
DensityAudit audit_density(const Hypergraph &graph, StarMode star, const AuditConfig &config = {});

} // namespace turan
