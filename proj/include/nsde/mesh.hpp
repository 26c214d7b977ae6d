#pragma once

#include <cstddef>
#include <vector>

namespace nsde {

/// Strictly increasing time grid 0 = t_0 < ... < t_N = 1. Step i (0-based)
/// spans [t_i, t_{i+1}] and has width h = knot(i+1) - knot(i); steps are all
/// positive and sum to 1 within 1e-12.
class TimeMesh {
public:
    /// Validates and adopts the given knots; throws MeshError otherwise.
    explicit TimeMesh(std::vector<double> knots);

    /// Uniform mesh with n steps of width 1/n.
    static TimeMesh uniform(std::size_t n);

    std::size_t num_steps() const noexcept { return knots_.size() - 1; }
    double knot(std::size_t i) const { return knots_[i]; }
    double step(std::size_t i) const { return knots_[i + 1] - knots_[i]; }
    const std::vector<double>& knots() const noexcept { return knots_; }

    /// Index of the knot equal to t within 1e-12; throws MeshError if t is
    /// not a knot.
    std::size_t knot_index(double t) const;

    bool operator==(const TimeMesh& other) const { return knots_ == other.knots_; }

private:
    std::vector<double> knots_;
};

} // namespace nsde
