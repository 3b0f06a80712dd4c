#include <turan/weighting.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace turan {

Weighting::Weighting(std::vector<int> labels, std::vector<double> weights)
{
    if (labels.size() != weights.size()) throw std::invalid_argument("weighting: label and weight counts differ");

    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

    labels_.reserve(labels.size());
    weights_.reserve(labels.size());
    double sum = 0.0;
    for (std::size_t i : order) {
        if (!labels_.empty() && labels_.back() == labels[i])
            throw std::invalid_argument("weighting: duplicate label " + std::to_string(labels[i]));
        if (!(weights[i] >= 0.0) || !std::isfinite(weights[i]))
            throw std::invalid_argument("weighting: weight of label " + std::to_string(labels[i]) +
                                        " is negative or not finite");
        labels_.push_back(labels[i]);
        weights_.push_back(weights[i]);
        sum += weights[i];
    }
    if (!labels_.empty() && std::abs(sum - 1.0) > kSimplexTolerance)
        throw std::invalid_argument("weighting: weights sum to " + std::to_string(sum) + ", not 1");
}

Weighting Weighting::uniform(std::vector<int> labels)
{
    std::vector<double> w(labels.size(), labels.empty() ? 0.0 : 1.0 / static_cast<double>(labels.size()));
    return Weighting(std::move(labels), std::move(w));
}

Weighting Weighting::over_vertices(std::vector<double> weights)
{
    std::vector<int> labels(weights.size());
    std::iota(labels.begin(), labels.end(), 1);
    return Weighting(std::move(labels), std::move(weights));
}

double Weighting::weight_of(int label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return 0.0;
    return weights_[static_cast<std::size_t>(it - labels_.begin())];
}

std::string_view to_string(StarMode mode)
{
    switch (mode) {
    case StarMode::vvv: return "vvv";
    case StarMode::ev: return "ev";
    case StarMode::ee: return "ee";
    }
    return "?";
}

StarMode parse_star_mode(std::string_view text)
{
    if (text == "vvv") return StarMode::vvv;
    if (text == "ev") return StarMode::ev;
    if (text == "ee") return StarMode::ee;
    throw std::invalid_argument("unknown star mode '" + std::string(text) + "' (expected vvv, ev or ee)");
}

} // namespace turan
