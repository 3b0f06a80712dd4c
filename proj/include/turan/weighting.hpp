#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace turan {

/// Tolerance on the weight sum of a point of the standard simplex.
inline constexpr double kSimplexTolerance = 1e-12;

/// A point of the standard simplex indexed by labels (vertices or colours).
///
/// Labels are kept sorted and unique; weights are non-negative and sum to 1
/// within kSimplexTolerance.
class Weighting {
public:
    Weighting() = default;
    Weighting(std::vector<int> labels, std::vector<double> weights);

    static Weighting uniform(std::vector<int> labels);
    /// Labels 1..n, as used for vertex weightings.
    static Weighting over_vertices(std::vector<double> weights);

    std::span<const int> labels() const { return labels_; }
    std::span<const double> weights() const { return weights_; }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    /// Weight of `label`; 0 for labels outside the index set.
    double weight_of(int label) const;

    bool operator==(const Weighting &) const = default;

private:
    std::vector<int> labels_;
    std::vector<double> weights_;
};

enum class StarMode { vvv, ev, ee };

std::string_view to_string(StarMode mode);
StarMode parse_star_mode(std::string_view text);

} // namespace turan
