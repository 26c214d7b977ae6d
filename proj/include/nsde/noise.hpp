#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>

#include <Eigen/Dense>

#include "nsde/mesh.hpp"

namespace nsde {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// A sampled Wiener path on a mesh, stored as raw Gaussian increments.
/// Increment i covers mesh step i and has per-coordinate variance step(i);
/// path values are derived by cumulative sum, W_{t_0} = 0. Immutable after
/// construction.
class NoisePath {
public:
    NoisePath(Eigen::Index dim, Mat increments, std::uint64_t seed);

    Eigen::Index dim() const noexcept { return dim_; }
    std::size_t num_steps() const noexcept { return static_cast<std::size_t>(increments_.cols()); }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Increment over mesh step i (a d-vector).
    Vec increment(std::size_t i) const { return increments_.col(static_cast<Eigen::Index>(i)); }
    const Mat& increments() const noexcept { return increments_; }

    /// Path value W_{t_i} = sum of increments 0..i-1 (zero vector at i = 0).
    Vec value_at_knot(std::size_t i) const;

    /// One increment vector per row, comma separated.
    void write_csv(std::ostream& os) const;

private:
    Eigen::Index dim_;
    Mat increments_; // d x N, column i = increment over step i
    std::uint64_t seed_;
};

/// Deterministic drift t -> R^d used to mean-shift a Wiener path.
class DriftShift {
public:
    DriftShift(Eigen::Index dim, std::function<Vec(double)> u)
        : dim_(dim), u_(std::move(u)) {}

    Eigen::Index dim() const noexcept { return dim_; }
    Vec at(double t) const;

private:
    Eigen::Index dim_;
    std::function<Vec(double)> u_;
};

/// Samples independent Gaussian increments on the mesh, increment i having
/// covariance step(i) * I_d. Deterministic given (mesh, dim, seed): draws are
/// consumed step-major, coordinate-minor.
NoisePath sample_wiener(const TimeMesh& mesh, Eigen::Index dim, std::uint64_t seed);

/// Adds the left-endpoint quadrature of the drift integral to each increment:
/// increment i becomes increment i + step(i) * u(t_i).
NoisePath shift_path(const NoisePath& path, const DriftShift& shift, const TimeMesh& mesh);

} // namespace nsde
