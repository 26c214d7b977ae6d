#include "nsde/noise.hpp"

#include <cmath>
#include <ostream>

#include "nsde/errors.hpp"
#include "nsde/rng.hpp"

namespace nsde {

NoisePath::NoisePath(Eigen::Index dim, Mat increments, std::uint64_t seed)
    : dim_(dim), increments_(std::move(increments)), seed_(seed) {
    if (dim < 1) throw DimensionError("noise dimension must be >= 1");
    if (increments_.rows() != dim)
        throw DimensionError("increment rows do not match noise dimension");
}

Vec NoisePath::value_at_knot(std::size_t i) const {
    Vec w = Vec::Zero(dim_);
    for (std::size_t j = 0; j < i; ++j) w += increments_.col(static_cast<Eigen::Index>(j));
    return w;
}

void NoisePath::write_csv(std::ostream& os) const {
    for (Eigen::Index i = 0; i < increments_.cols(); ++i) {
        for (Eigen::Index r = 0; r < dim_; ++r) {
            if (r) os << ',';
            os << increments_(r, i);
        }
        os << '\n';
    }
}

Vec DriftShift::at(double t) const {
    Vec v = u_(t);
    if (v.size() != dim_) throw DimensionError("drift shift output has wrong dimension");
    return v;
}

NoisePath sample_wiener(const TimeMesh& mesh, Eigen::Index dim, std::uint64_t seed) {
    if (dim < 1) throw DimensionError("noise dimension must be >= 1");
    const std::size_t n = mesh.num_steps();
    Mat inc(dim, static_cast<Eigen::Index>(n));
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const double scale = std::sqrt(mesh.step(i));
        for (Eigen::Index r = 0; r < dim; ++r)
            inc(r, static_cast<Eigen::Index>(i)) = scale * rng.gaussian();
    }
    return NoisePath(dim, std::move(inc), seed);
}

NoisePath shift_path(const NoisePath& path, const DriftShift& shift, const TimeMesh& mesh) {
    if (shift.dim() != path.dim())
        throw DimensionError("drift shift dimension does not match path dimension");
    if (mesh.num_steps() != path.num_steps())
        throw DimensionError("mesh step count does not match path");
    Mat inc = path.increments();
    for (std::size_t i = 0; i < path.num_steps(); ++i)
        inc.col(static_cast<Eigen::Index>(i)) += mesh.step(i) * shift.at(mesh.knot(i));
    return NoisePath(path.dim(), std::move(inc), path.seed());
}

} // namespace nsde
