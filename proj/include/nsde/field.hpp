#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nsde/noise.hpp"

namespace nsde {

/// C^2 activations only; eval/jac formulas rely on bounded, Lipschitz
/// first derivatives. ReLU is rejected at construction.
enum class Activation { sigmoid, tanh, softplus };

double activate(Activation a, double x);
double activate_deriv(Activation a, double x);
std::string activation_name(Activation a);
Activation activation_from_name(const std::string& name);

/// Named slice of a flat parameter vector.
struct ParamSegment {
    std::string name;
    Eigen::Index offset = 0;
    Eigen::Index size = 0;
};

/// Flat parameter vector plus the (layer, role) -> index-range layout of the
/// architecture it belongs to. Segments are disjoint and cover [0, len).
class ParamVector {
public:
    ParamVector() = default;
    ParamVector(Vec values, std::vector<ParamSegment> layout);

    Eigen::Index size() const noexcept { return values_.size(); }
    const Vec& values() const noexcept { return values_; }
    Vec& values() noexcept { return values_; }
    const std::vector<ParamSegment>& layout() const noexcept { return layout_; }

    /// View of one named segment; throws DimensionError for unknown names.
    Eigen::VectorBlock<const Vec> segment(const std::string& name) const;

private:
    Vec values_;
    std::vector<ParamSegment> layout_;
};

/// Call counts for one field instance; shared across copies so tapes and
/// augmented systems report against the field they were built from.
struct FieldCallCounts {
    std::uint64_t eval = 0;
    std::uint64_t jac_x = 0;
    std::uint64_t jac_params = 0;
};

/// A parametric map (x, t, params) -> R^d (drift) or R^{dxd} (diffusion)
/// with exact hand-derived Jacobians in x and in params.
///
/// Matrix-valued outputs are flattened column-major everywhere: eval returns
/// a (rows*cols)-vector, and rows [l*d, (l+1)*d) of jac_x / jac_params belong
/// to output column l.
class VectorField {
public:
    enum class Arch {
        zero,            // x |-> 0                        (no params)
        constant,        // x |-> v                        (params: value)
        affine,          // x |-> A x + c                  (params: A, c)
        matrix_linear,   // x |-> A x                      (params: A)
        act_linear,      // x |-> act(A x)                 (params: A)
        single_hidden,   // x |-> W2 act(W1 xin + b1) + b2 (params: W1, b1, W2, b2)
        identity_matrix, // x |-> I_d                      (no params)
        constant_matrix, // x |-> M                        (params: M)
        diag_linear      // x |-> diag(A x), experimental  (params: A)
    };

    static VectorField zero(Eigen::Index dim);
    static VectorField constant(Eigen::Index dim);
    static VectorField affine(Eigen::Index dim);
    static VectorField matrix_linear(Eigen::Index dim);
    static VectorField act_linear(Eigen::Index dim, Activation act);
    static VectorField single_hidden(Eigen::Index dim, Eigen::Index hidden, Activation act,
                                     bool time_input = false);
    static VectorField identity_matrix(Eigen::Index dim);
    static VectorField constant_matrix(Eigen::Index dim);
    static VectorField diag_linear(Eigen::Index dim);

    Arch arch() const noexcept { return arch_; }
    Eigen::Index dim() const noexcept { return dim_; }
    Eigen::Index out_rows() const noexcept { return dim_; }
    Eigen::Index out_cols() const noexcept { return matrix_valued_ ? dim_ : 1; }
    Eigen::Index flat_out() const noexcept { return out_rows() * out_cols(); }
    bool matrix_valued() const noexcept { return matrix_valued_; }
    bool time_input() const noexcept { return time_input_; }
    Activation activation() const noexcept { return act_; }
    Eigen::Index hidden() const noexcept { return hidden_; }
    Eigen::Index num_params() const noexcept { return num_params_; }
    const std::vector<ParamSegment>& param_layout() const noexcept { return layout_; }
    std::string arch_name() const;

    /// True when the output never depends on x (jac_x structurally zero), so
    /// sensitivity systems can skip the state-coupling terms.
    bool state_independent() const noexcept {
        return arch_ == Arch::zero || arch_ == Arch::constant ||
               arch_ == Arch::identity_matrix || arch_ == Arch::constant_matrix;
    }

    /// Wraps a flat value vector in this field's layout (validates length).
    ParamVector make_params(Vec values) const;
    ParamVector zero_params() const { return make_params(Vec::Zero(num_params_)); }

    Vec eval(const Vec& x, double t, const ParamVector& p) const;
    Mat eval_matrix(const Vec& x, double t, const ParamVector& p) const;
    Mat jac_x(const Vec& x, double t, const ParamVector& p) const;
    Mat jac_params(const Vec& x, double t, const ParamVector& p) const;

    FieldCallCounts counts() const;
    void reset_counts() const;

private:
    VectorField(Arch arch, Eigen::Index dim, Eigen::Index hidden, Activation act,
                bool matrix_valued, bool time_input);

    void check_args(const Vec& x, const ParamVector& p) const;
    Eigen::Index net_in() const noexcept { return dim_ + (time_input_ ? 1 : 0); }

    struct Counters {
        std::atomic<std::uint64_t> eval{0};
        std::atomic<std::uint64_t> jac_x{0};
        std::atomic<std::uint64_t> jac_params{0};
    };

    Arch arch_;
    Eigen::Index dim_;
    Eigen::Index hidden_;
    Activation act_;
    bool matrix_valued_;
    bool time_input_;
    Eigen::Index num_params_ = 0;
    std::vector<ParamSegment> layout_;
    std::shared_ptr<Counters> counters_;
};

} // namespace nsde
