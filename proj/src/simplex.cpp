#include <turan/simplex.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace turan {

std::vector<double> project_to_simplex(std::span<const double> y)
{
    std::size_t n = y.size();
    if (n == 0) return {};
    std::vector<double> sorted(y.begin(), y.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    double cumulative = 0.0, theta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cumulative += sorted[i];
        double t = (cumulative - 1.0) / static_cast<double>(i + 1);
        if (sorted[i] - t > 0.0) theta = t;
    }

    std::vector<double> x(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::max(y[i] - theta, 0.0);
        sum += x[i];
    }
    // Clean up rounding so the result sums to 1 to machine precision.
    if (sum > 0.0)
        for (double &v : x) v /= sum;
    else
        std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(n));
    return x;
}

std::vector<double> project_to_face(std::span<const double> y, std::span<const int> support)
{
    std::vector<double> sub;
    sub.reserve(support.size());
    for (int i : support) sub.push_back(y[static_cast<std::size_t>(i)]);
    auto p = project_to_simplex(sub);
    std::vector<double> x(y.size(), 0.0);
    for (std::size_t j = 0; j < support.size(); ++j) x[static_cast<std::size_t>(support[j])] = p[j];
    return x;
}

std::vector<double> random_simplex_point(std::size_t dimension, Rng &rng)
{
    std::vector<double> x(dimension);
    double sum = 0.0;
    for (double &v : x) {
        // Exponential spacings give the uniform (flat Dirichlet) distribution.
        v = -std::log1p(-rng.uniform());
        sum += v;
    }
    if (sum <= 0.0) {
        std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(dimension));
        return x;
    }
    for (double &v : x) v /= sum;
    return x;
}

std::uint64_t composition_count(int total, int parts)
{
    if (parts <= 0) return total == 0 ? 1 : 0;
    // C(total + parts - 1, parts - 1) computed incrementally; each partial
    // product is itself a binomial coefficient, so the division is exact.
    std::uint64_t r = 1;
    int k = std::min(parts - 1, total);
    int n = total + parts - 1;
    for (int i = 1; i <= k; ++i) {
        unsigned __int128 next = static_cast<unsigned __int128>(r) * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (next > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
        r = static_cast<std::uint64_t>(next);
    }
    return r;
}

void for_each_composition(int total, int parts, const std::function<void(std::span<const int>)> &visit)
{
    if (parts <= 0) {
        if (total == 0) visit({});
        return;
    }
    std::vector<int> c(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == parts - 1) {
            c[static_cast<std::size_t>(pos)] = remaining;
            visit(c);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            c[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, total);
}

} // namespace turan
