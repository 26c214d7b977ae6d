#include "nsde/solver.hpp"

#include <cmath>
#include <ostream>

#include "nsde/errors.hpp"

namespace nsde {

void SdeProblem::validate() const {
    if (dim < 1) throw DimensionError("SDE state dimension must be >= 1");
    if (noise_dim < 1) throw DimensionError("SDE noise dimension must be >= 1");
    if (z0.size() != dim) throw DimensionError("initial state does not match SDE dimension");
    if (!(t0 >= 0.0 && t0 <= t1 && t1 <= 1.0))
        throw DimensionError("SDE time window must satisfy 0 <= t0 <= t1 <= 1");
    if (!drift || !dispersion) throw DimensionError("SDE drift and dispersion must be set");
}

void Trajectory::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < times.size(); ++i) {
        os << times[i];
        for (Eigen::Index r = 0; r < states.rows(); ++r)
            os << ',' << states(r, static_cast<Eigen::Index>(i));
        os << '\n';
    }
}

Trajectory sde_solve(const SdeProblem& problem, const TimeMesh& mesh, const NoisePath& noise) {
    problem.validate();
    if (noise.dim() != problem.noise_dim)
        throw DimensionError("noise dimension does not match SDE dispersion columns");
    if (noise.num_steps() != mesh.num_steps())
        throw DimensionError("noise path does not match mesh");

    const std::size_t first = mesh.knot_index(problem.t0);
    const std::size_t last = mesh.knot_index(problem.t1);
    const std::size_t n = last - first;

    Trajectory traj;
    traj.times.resize(n + 1);
    traj.states.resize(problem.dim, static_cast<Eigen::Index>(n + 1));
    traj.states.col(0) = problem.z0;
    traj.times[0] = mesh.knot(first);

    Vec z = problem.z0;
    Vec f(problem.dim);
    Mat g(problem.dim, problem.noise_dim);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t step = first + i;
        const double t = mesh.knot(step);
        const double h = mesh.step(step);
        problem.drift(z, t, f);
        problem.dispersion(z, t, g);
        z += h * f + g * noise.increments().col(static_cast<Eigen::Index>(step));
        if (!z.allFinite()) throw DivergenceError(step, "non-finite state in Euler step");
        traj.times[i + 1] = mesh.knot(step + 1);
        traj.states.col(static_cast<Eigen::Index>(i + 1)) = z;
    }
    return traj;
}

std::function<void(const Vec&, double, Vec&)> drift_fn(std::function<Vec(const Vec&, double)> f) {
    return [f = std::move(f)](const Vec& z, double t, Vec& out) { out = f(z, t); };
}

std::function<void(const Vec&, double, Mat&)> dispersion_fn(
    std::function<Mat(const Vec&, double)> g) {
    return [g = std::move(g)](const Vec& z, double t, Mat& out) { out = g(z, t); };
}

} // namespace nsde
