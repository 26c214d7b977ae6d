#include "nsde/field.hpp"

#include <cmath>

#include "nsde/errors.hpp"

namespace nsde {

double activate(Activation a, double x) {
    switch (a) {
        case Activation::sigmoid:
            return 1.0 / (1.0 + std::exp(-x));
        case Activation::tanh:
            return std::tanh(x);
        case Activation::softplus:
            // log(1 + e^x), split to avoid overflow for large |x|
            return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
    }
    return 0.0;
}

double activate_deriv(Activation a, double x) {
    switch (a) {
        case Activation::sigmoid: {
            const double s = 1.0 / (1.0 + std::exp(-x));
            return s * (1.0 - s);
        }
        case Activation::tanh: {
            const double t = std::tanh(x);
            return 1.0 - t * t;
        }
        case Activation::softplus:
            return 1.0 / (1.0 + std::exp(-x));
    }
    return 0.0;
}

std::string activation_name(Activation a) {
    switch (a) {
        case Activation::sigmoid: return "sigmoid";
        case Activation::tanh: return "tanh";
        case Activation::softplus: return "softplus";
    }
    return "?";
}

Activation activation_from_name(const std::string& name) {
    if (name == "sigmoid") return Activation::sigmoid;
    if (name == "tanh") return Activation::tanh;
    if (name == "softplus") return Activation::softplus;
    if (name == "relu")
        throw DimensionError("relu is not C^2; supported activations: sigmoid, tanh, softplus");
    throw DimensionError("unknown activation: " + name);
}

ParamVector::ParamVector(Vec values, std::vector<ParamSegment> layout)
    : values_(std::move(values)), layout_(std::move(layout)) {
    Eigen::Index covered = 0;
    for (const auto& seg : layout_) {
        if (seg.offset != covered)
            throw DimensionError("parameter layout segments must be contiguous");
        covered += seg.size;
    }
    if (covered != values_.size())
        throw DimensionError("parameter layout does not cover the value vector");
}

Eigen::VectorBlock<const Vec> ParamVector::segment(const std::string& name) const {
    for (const auto& seg : layout_)
        if (seg.name == name) return values_.segment(seg.offset, seg.size);
    throw DimensionError("no parameter segment named " + name);
}

VectorField::VectorField(Arch arch, Eigen::Index dim, Eigen::Index hidden, Activation act,
                         bool matrix_valued, bool time_input)
    : arch_(arch),
      dim_(dim),
      hidden_(hidden),
      act_(act),
      matrix_valued_(matrix_valued),
      time_input_(time_input),
      counters_(std::make_shared<Counters>()) {
    if (dim < 1) throw DimensionError("field dimension must be >= 1");
    switch (arch_) {
        case Arch::constant:
            layout_ = {{"value", 0, dim}};
            break;
        case Arch::affine:
            layout_ = {{"A", 0, dim * dim}, {"c", dim * dim, dim}};
            break;
        case Arch::matrix_linear:
        case Arch::act_linear:
        case Arch::diag_linear:
            layout_ = {{"A", 0, dim * dim}};
            break;
        case Arch::single_hidden: {
            if (hidden < 1) throw DimensionError("hidden width must be >= 1");
            const Eigen::Index in = net_in();
            Eigen::Index off = 0;
            layout_ = {{"W1", off, hidden * in}};
            off += hidden * in;
            layout_.push_back({"b1", off, hidden});
            off += hidden;
            layout_.push_back({"W2", off, dim * hidden});
            off += dim * hidden;
            layout_.push_back({"b2", off, dim});
            break;
        }
        case Arch::identity_matrix:
            layout_ = {};
            break;
        case Arch::constant_matrix:
            layout_ = {{"M", 0, dim * dim}};
            break;
    }
    num_params_ = 0;
    for (const auto& seg : layout_) num_params_ += seg.size;
}

VectorField VectorField::constant(Eigen::Index dim) {
    return VectorField(Arch::constant, dim, 0, Activation::sigmoid, false, false);
}
VectorField VectorField::affine(Eigen::Index dim) {
    return VectorField(Arch::affine, dim, 0, Activation::sigmoid, false, false);
}
VectorField VectorField::matrix_linear(Eigen::Index dim) {
    return VectorField(Arch::matrix_linear, dim, 0, Activation::sigmoid, false, false);
}
VectorField VectorField::act_linear(Eigen::Index dim, Activation act) {
    return VectorField(Arch::act_linear, dim, 0, act, false, false);
}
VectorField VectorField::single_hidden(Eigen::Index dim, Eigen::Index hidden, Activation act,
                                       bool time_input) {
    return VectorField(Arch::single_hidden, dim, hidden, act, false, time_input);
}
VectorField VectorField::identity_matrix(Eigen::Index dim) {
    return VectorField(Arch::identity_matrix, dim, 0, Activation::sigmoid, true, false);
}
VectorField VectorField::constant_matrix(Eigen::Index dim) {
    return VectorField(Arch::constant_matrix, dim, 0, Activation::sigmoid, true, false);
}
VectorField VectorField::diag_linear(Eigen::Index dim) {
    return VectorField(Arch::diag_linear, dim, 0, Activation::sigmoid, true, false);
}

std::string VectorField::arch_name() const {
    switch (arch_) {
        case Arch::constant: return "constant";
        case Arch::affine: return "affine";
        case Arch::matrix_linear: return "matrix_linear";
        case Arch::act_linear: return "act_linear";
        case Arch::single_hidden: return "single_hidden";
        case Arch::identity_matrix: return "identity_matrix";
        case Arch::constant_matrix: return "constant_matrix";
        case Arch::diag_linear: return "diag_linear";
    }
    return "?";
}

ParamVector VectorField::make_params(Vec values) const {
    if (values.size() != num_params_)
        throw DimensionError(arch_name() + " expects " + std::to_string(num_params_) +
                             " parameters, got " + std::to_string(values.size()));
    return ParamVector(std::move(values), layout_);
}

void VectorField::check_args(const Vec& x, const ParamVector& p) const {
    if (x.size() != dim_) throw DimensionError("state dimension mismatch in field eval");
    if (p.size() != num_params_) throw DimensionError("parameter count mismatch in field eval");
}

namespace {
// Column-major views of a matrix stored in a flat parameter block.
inline Eigen::Map<const Mat> mat_view(const Eigen::VectorBlock<const Vec>& seg, Eigen::Index r,
                                      Eigen::Index c) {
    return Eigen::Map<const Mat>(seg.data(), r, c);
}
} // namespace

Vec VectorField::eval(const Vec& x, double t, const ParamVector& p) const {
    check_args(x, p);
    counters_->eval.fetch_add(1, std::memory_order_relaxed);
    switch (arch_) {
        case Arch::constant:
            return p.values();
        case Arch::affine: {
            const auto A = mat_view(p.segment("A"), dim_, dim_);
            return A * x + p.segment("c");
        }
        case Arch::matrix_linear: {
            const auto A = mat_view(p.segment("A"), dim_, dim_);
            return A * x;
        }
        case Arch::act_linear: {
            const auto A = mat_view(p.segment("A"), dim_, dim_);
            Vec u = A * x;
            for (Eigen::Index i = 0; i < u.size(); ++i) u[i] = activate(act_, u[i]);
            return u;
        }
        case Arch::single_hidden: {
            const Eigen::Index in = net_in();
            Vec xin(in);
            xin.head(dim_) = x;
            if (time_input_) xin[dim_] = t;
            const auto W1 = mat_view(p.segment("W1"), hidden_, in);
            const auto W2 = mat_view(p.segment("W2"), dim_, hidden_);
            Vec u = W1 * xin + p.segment("b1");
            for (Eigen::Index i = 0; i < u.size(); ++i) u[i] = activate(act_, u[i]);
            return W2 * u + p.segment("b2");
        }
        case Arch::identity_matrix: {
            Mat id = Mat::Identity(dim_, dim_);
            return Eigen::Map<const Vec>(id.data(), dim_ * dim_);
        }
        case Arch::constant_matrix:
            return p.values();
        case Arch::diag_linear: {
            const auto A = mat_view(p.segment("A"), dim_, dim_);
            Vec ax = A * x;
            Vec out = Vec::Zero(dim_ * dim_);
            for (Eigen::Index l = 0; l < dim_; ++l) out[l * dim_ + l] = ax[l];
            return out;
        }
    }
    return Vec();
}

Mat VectorField::eval_matrix(const Vec& x, double t, const ParamVector& p) const {
    Vec flat = eval(x, t, p);
    return Eigen::Map<const Mat>(flat.data(), out_rows(), out_cols());
}

Mat VectorField::jac_x(const Vec& x, double t, const ParamVector& p) const {
    check_args(x, p);
    counters_->jac_x.fetch_add(1, std::memory_order_relaxed);
    switch (arch_) {
        case Arch::constant:
            return Mat::Zero(dim_, dim_);
        case Arch::affine:
        case Arch::matrix_linear:
            return mat_view(p.segment("A"), dim_, dim_);
        case Arch::act_linear: {
            const auto A = mat_view(p.segment("A"), dim_, dim_);
            Vec u = A * x;
            Mat jac = A;
            for (Eigen::Index i = 0; i < dim_; ++i) jac.row(i) *= activate_deriv(act_, u[i]);
            return jac;
        }
        case Arch::single_hidden: {
            const Eigen::Index in = net_in();
            Vec xin(in);
            xin.head(dim_) = x;
            if (time_input_) xin[dim_] = t;
            const auto W1 = mat_view(p.segment("W1"), hidden_, in);
            const auto W2 = mat_view(p.segment("W2"), dim_, hidden_);
            Vec u = W1 * xin + p.segment("b1");
            Mat inner = W1.leftCols(dim_);
            for (Eigen::Index r = 0; r < hidden_; ++r) inner.row(r) *= activate_deriv(act_, u[r]);
            return W2 * inner;
        }
        case Arch::identity_matrix:
        case Arch::constant_matrix:
            return Mat::Zero(dim_ * dim_, dim_);
        case Arch::diag_linear: {
            const auto A = mat_view(p.segment("A"), dim_, dim_);
            Mat jac = Mat::Zero(dim_ * dim_, dim_);
            for (Eigen::Index l = 0; l < dim_; ++l) jac.row(l * dim_ + l) = A.row(l);
            return jac;
        }
    }
    return Mat();
}

Mat VectorField::jac_params(const Vec& x, double t, const ParamVector& p) const {
    check_args(x, p);
    counters_->jac_params.fetch_add(1, std::memory_order_relaxed);
    switch (arch_) {
        case Arch::constant:
            return Mat::Identity(dim_, dim_);
        case Arch::affine: {
            Mat jac = Mat::Zero(dim_, num_params_);
            for (Eigen::Index c = 0; c < dim_; ++c)
                for (Eigen::Index i = 0; i < dim_; ++i) jac(i, c * dim_ + i) = x[c];
            jac.rightCols(dim_) = Mat::Identity(dim_, dim_);
            return jac;
        }
        case Arch::matrix_linear: {
            Mat jac = Mat::Zero(dim_, num_params_);
            for (Eigen::Index c = 0; c < dim_; ++c)
                for (Eigen::Index i = 0; i < dim_; ++i) jac(i, c * dim_ + i) = x[c];
            return jac;
        }
        case Arch::act_linear: {
            const auto A = mat_view(p.segment("A"), dim_, dim_);
            Vec u = A * x;
            Mat jac = Mat::Zero(dim_, num_params_);
            for (Eigen::Index c = 0; c < dim_; ++c)
                for (Eigen::Index i = 0; i < dim_; ++i)
                    jac(i, c * dim_ + i) = activate_deriv(act_, u[i]) * x[c];
            return jac;
        }
        case Arch::single_hidden: {
            const Eigen::Index in = net_in();
            Vec xin(in);
            xin.head(dim_) = x;
            if (time_input_) xin[dim_] = t;
            const auto W1 = mat_view(p.segment("W1"), hidden_, in);
            const auto W2 = mat_view(p.segment("W2"), dim_, hidden_);
            Vec u = W1 * xin + p.segment("b1");
            Vec du(hidden_), h(hidden_);
            for (Eigen::Index r = 0; r < hidden_; ++r) {
                du[r] = activate_deriv(act_, u[r]);
                h[r] = activate(act_, u[r]);
            }
            Mat jac = Mat::Zero(dim_, num_params_);
            Eigen::Index off = 0;
            // W1 (hidden x in, column-major): d out_i / d W1_{rc} = W2(i,r) du_r xin_c
            for (Eigen::Index c = 0; c < in; ++c)
                for (Eigen::Index r = 0; r < hidden_; ++r)
                    jac.col(off + c * hidden_ + r) = W2.col(r) * (du[r] * xin[c]);
            off += hidden_ * in;
            // b1: d out_i / d b1_r = W2(i,r) du_r
            for (Eigen::Index r = 0; r < hidden_; ++r) jac.col(off + r) = W2.col(r) * du[r];
            off += hidden_;
            // W2 (dim x hidden, column-major): d out_i / d W2_{rc} = delta_{ir} h_c
            for (Eigen::Index c = 0; c < hidden_; ++c)
                for (Eigen::Index r = 0; r < dim_; ++r) jac(r, off + c * dim_ + r) = h[c];
            off += dim_ * hidden_;
            jac.middleCols(off, dim_) = Mat::Identity(dim_, dim_);
            return jac;
        }
        case Arch::identity_matrix:
            return Mat::Zero(dim_ * dim_, 0);
        case Arch::constant_matrix:
            return Mat::Identity(dim_ * dim_, dim_ * dim_);
        case Arch::diag_linear: {
            Mat jac = Mat::Zero(dim_ * dim_, num_params_);
            for (Eigen::Index l = 0; l < dim_; ++l)
                for (Eigen::Index c = 0; c < dim_; ++c) jac(l * dim_ + l, c * dim_ + l) = x[c];
            return jac;
        }
    }
    return Mat();
}

FieldCallCounts VectorField::counts() const {
    FieldCallCounts c;
    c.eval = counters_->eval.load(std::memory_order_relaxed);
    c.jac_x = counters_->jac_x.load(std::memory_order_relaxed);
    c.jac_params = counters_->jac_params.load(std::memory_order_relaxed);
    return c;
}

void VectorField::reset_counts() const {
    counters_->eval.store(0, std::memory_order_relaxed);
    counters_->jac_x.store(0, std::memory_order_relaxed);
    counters_->jac_params.store(0, std::memory_order_relaxed);
}

} // namespace nsde
