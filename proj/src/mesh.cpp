#include "nsde/mesh.hpp"

#include <cmath>
#include <string>

#include "nsde/errors.hpp"

namespace nsde {

TimeMesh::TimeMesh(std::vector<double> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) throw MeshError("mesh needs at least two knots");
    if (knots_.front() != 0.0) throw MeshError("mesh must start at t = 0");
    if (knots_.back() != 1.0) throw MeshError("mesh must end at t = 1");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        const double h = knots_[i + 1] - knots_[i];
        if (!(h > 0.0)) throw MeshError("mesh knots must be strictly increasing");
        sum += h;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw MeshError("mesh steps must sum to 1");
}

TimeMesh TimeMesh::uniform(std::size_t n) {
    if (n == 0) throw MeshError("uniform mesh needs at least one step");
    std::vector<double> knots(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        knots[i] = static_cast<double>(i) / static_cast<double>(n);
    knots[n] = 1.0;
    return TimeMesh(std::move(knots));
}

std::size_t TimeMesh::knot_index(double t) const {
    for (std::size_t i = 0; i < knots_.size(); ++i)
        if (std::abs(knots_[i] - t) <= 1e-12) return i;
    throw MeshError("t = " + std::to_string(t) + " is not a mesh knot");
}

} // namespace nsde
