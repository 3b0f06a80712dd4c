#include <turan/polynomial.hpp>

#include <algorithm>
#include <stdexcept>

namespace turan {

void HomogeneousPolynomial::add_monomial(std::span<const int> indices, double coefficient)
{
    if (static_cast<int>(indices.size()) != degree_) throw std::invalid_argument("monomial degree mismatch");
    for (int i : indices)
        if (i < 0 || static_cast<std::size_t>(i) >= dimension_) throw std::out_of_range("monomial index out of range");
    indices_.insert(indices_.end(), indices.begin(), indices.end());
    coefficients_.push_back(coefficient);
}

double HomogeneousPolynomial::evaluate(std::span<const double> x) const
{
    if (x.size() != dimension_) throw std::invalid_argument("polynomial evaluated at a point of wrong dimension");
    double total = 0.0;
    for (std::size_t m = 0; m < coefficients_.size(); ++m) {
        double p = coefficients_[m];
        for (int i : monomial(m)) p *= x[static_cast<std::size_t>(i)];
        total += p;
    }
    return total;
}

void HomogeneousPolynomial::gradient(std::span<const double> x, std::vector<double> &out) const
{
    if (x.size() != dimension_) throw std::invalid_argument("polynomial gradient at a point of wrong dimension");
    out.assign(dimension_, 0.0);
    for (std::size_t m = 0; m < coefficients_.size(); ++m) {
        auto mono = monomial(m);
        for (std::size_t j = 0; j < mono.size(); ++j) {
            double p = coefficients_[m];
            for (std::size_t l = 0; l < mono.size(); ++l)
                if (l != j) p *= x[static_cast<std::size_t>(mono[l])];
            out[static_cast<std::size_t>(mono[j])] += p;
        }
    }
}

bool HomogeneousPolynomial::supported_on(const std::vector<bool> &allowed) const
{
    for (std::size_t m = 0; m < coefficients_.size(); ++m) {
        if (coefficients_[m] == 0.0) continue;
        auto mono = monomial(m);
        if (std::all_of(mono.begin(), mono.end(), [&](int i) { return allowed[static_cast<std::size_t>(i)]; }))
            return true;
    }
    return false;
}

} // namespace turan
