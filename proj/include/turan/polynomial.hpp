#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace turan {

/// Homogeneous polynomial with non-negative coefficients, stored as a list
/// of monomials. A monomial is `degree` variable indices (repeats allowed,
/// so x_a^2 x_b is {a, a, b}) with a coefficient.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial(int degree, std::size_t dimension) : degree_(degree), dimension_(dimension) {}

    void add_monomial(std::span<const int> indices, double coefficient);

    int degree() const { return degree_; }
    std::size_t dimension() const { return dimension_; }
    std::size_t monomial_count() const { return coefficients_.size(); }
    std::span<const int> monomial(std::size_t i) const
    {
        return {indices_.data() + i * static_cast<std::size_t>(degree_), static_cast<std::size_t>(degree_)};
    }
    double coefficient(std::size_t i) const { return coefficients_[i]; }

    double evaluate(std::span<const double> x) const;
    /// Writes the gradient into `out` (resized to dimension()).
    void gradient(std::span<const double> x, std::vector<double> &out) const;

    /// True when some monomial uses only indices flagged in `allowed`, i.e.
    /// the polynomial is not identically zero on that face.
    bool supported_on(const std::vector<bool> &allowed) const;

private:
    int degree_;
    std::size_t dimension_;
    std::vector<int> indices_;
    std::vector<double> coefficients_;
};

} // namespace turan
