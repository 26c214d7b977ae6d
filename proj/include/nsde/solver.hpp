#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "nsde/mesh.hpp"
#include "nsde/noise.hpp"

namespace nsde {

/// A general Ito SDE dZ = f(Z,t)dt + g(Z,t)dW on [t0, t1] with Z_{t0} = z0.
/// The state dimension m and the driving-noise dimension d may differ; g maps
/// to an m x d matrix. Drift and dispersion write into caller-owned buffers so
/// the integration loop stays allocation-free.
struct SdeProblem {
    Eigen::Index dim = 0;       // m
    Eigen::Index noise_dim = 0; // d
    std::function<void(const Vec& z, double t, Vec& out)> drift;       // out: m
    std::function<void(const Vec& z, double t, Mat& out)> dispersion;  // out: m x d
    Vec z0;
    double t0 = 0.0;
    double t1 = 1.0;

    /// Validates dimensions and time range; throws on violation. t0 == t1 is
    /// allowed and yields a single-state trajectory.
    void validate() const;
};

/// Euler states along the integration window: times[i] are the mesh knots in
/// [t0, t1] and states.col(i) the corresponding state, states.col(0) = z0.
struct Trajectory {
    std::vector<double> times;
    Mat states; // m x (num knots in window)

    Eigen::Index dim() const noexcept { return states.rows(); }
    std::size_t num_knots() const noexcept { return times.size(); }
    Vec final_state() const { return states.col(states.cols() - 1); }

    /// CSV rows t, z_1, ..., z_m.
    void write_csv(std::ostream& os) const;
};

/// Fixed-mesh Euler-Maruyama: z_{i+1} = z_i + h_i f(z_i, t_i) + g(z_i, t_i) dW_i,
/// driven by the supplied noise increments (never sampled internally, so the
/// same Wiener path can be reused across parameter perturbations). t0 and t1
/// must be mesh knots. Throws DivergenceError naming the step index if any
/// state goes non-finite.
Trajectory sde_solve(const SdeProblem& problem, const TimeMesh& mesh, const NoisePath& noise);

/// Convenience wrappers for value-returning drift / dispersion callables.
std::function<void(const Vec&, double, Vec&)> drift_fn(std::function<Vec(const Vec&, double)> f);
std::function<void(const Vec&, double, Mat&)> dispersion_fn(std::function<Mat(const Vec&, double)> g);

} // namespace nsde
