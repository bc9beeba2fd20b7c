#include "nmeasure/networks/mlp.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "nmeasure/core/error.hpp"
#include "trig_kernel.hpp"

namespace nmeasure {

namespace {

using ConstMatMap = Eigen::Map<const Eigen::MatrixXd>;
using MatMap = Eigen::Map<Eigen::MatrixXd>;

}  // namespace

std::string to_string(Activation a) {
    switch (a) {
        case Activation::snake: return "snake";
        case Activation::tanh: return "tanh";
    }
    return "unknown";
}

Activation activation_from_string(const std::string& s) {
    if (s == "snake") return Activation::snake;
    if (s == "tanh") return Activation::tanh;
    throw InvalidArgument("unknown activation '" + s + "' (expected snake or tanh)");
}

double snake(double x, double a) {
    if (a == 0.0) throw InvalidArgument("snake: frequency a must be non-zero");
    const double s = std::sin(a * x);
    return x + s * s / a;
}

std::vector<std::size_t> MLPArchitecture::layer_dims() const {
    std::vector<std::size_t> dims;
    dims.reserve(hidden_layers + 2);
    dims.push_back(input_dim);
    for (std::size_t k = 0; k < hidden_layers; ++k) dims.push_back(hidden_width);
    dims.push_back(output_dim);
    return dims;
}

std::size_t MLPArchitecture::frequency_offset() const {
    const auto dims = layer_dims();
    std::size_t n = 0;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) n += dims[k + 1] * (dims[k] + 1);
    return n;
}

std::size_t MLPArchitecture::parameter_count() const {
    return frequency_offset() + (activation == Activation::snake ? hidden_layers : 0);
}

void MLPArchitecture::validate() const {
    if (input_dim < 1 || output_dim < 1) throw InvalidArgument("MLPArchitecture: dimensions must be >= 1");
    if (hidden_layers < 1) throw InvalidArgument("MLPArchitecture: hidden_layers must be >= 1");
    if (hidden_width < 1) throw InvalidArgument("MLPArchitecture: hidden_width must be >= 1");
}

std::string MLPArchitecture::header() const {
    std::ostringstream os;
    os << input_dim << ',' << output_dim << ',' << hidden_layers << ',' << hidden_width << ','
       << to_string(activation);
    return os.str();
}

MLPArchitecture MLPArchitecture::from_header(const std::string& s) {
    std::istringstream is(s);
    std::string field;
    std::vector<std::string> parts;
    while (std::getline(is, field, ',')) parts.push_back(field);
    if (parts.size() != 5) throw InvalidArgument("architecture header needs 5 fields: '" + s + "'");
    MLPArchitecture arch;
    try {
        arch.input_dim = std::stoul(parts[0]);
        arch.output_dim = std::stoul(parts[1]);
        arch.hidden_layers = std::stoul(parts[2]);
        arch.hidden_width = std::stoul(parts[3]);
    } catch (const std::exception&) {
        throw InvalidArgument("architecture header has a non-numeric size: '" + s + "'");
    }
    arch.activation = activation_from_string(parts[4]);
    arch.validate();
    return arch;
}

Eigen::VectorXd xavier_init(const MLPArchitecture& arch, std::uint64_t seed) {
    arch.validate();
    const auto dims = arch.layer_dims();
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(arch.parameter_count()));
    std::mt19937_64 rng(seed);
    std::size_t offset = 0;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
        const double stddev = std::sqrt(2.0 / static_cast<double>(dims[k] + dims[k + 1]));
        std::normal_distribution<double> normal(0.0, stddev);
        const std::size_t nw = dims[k + 1] * dims[k];
        for (std::size_t i = 0; i < nw; ++i) theta[static_cast<Eigen::Index>(offset + i)] = normal(rng);
        offset += nw + dims[k + 1];  // biases stay zero
    }
    if (arch.activation == Activation::snake) {
        for (std::size_t k = 0; k < arch.hidden_layers; ++k) theta[static_cast<Eigen::Index>(offset + k)] = 1.0;
    }
    return theta;
}

ChannelLayout::ChannelLayout(Channels requested) {
    index_.fill(-1);
    index_[0] = 0;
    count_ = 1;
    if (requested.has(Channel::dt)) index_[1] = static_cast<int>(count_++);
    if (requested.has(Channel::dx) || requested.has(Channel::dxx)) index_[2] = static_cast<int>(count_++);
    if (requested.has(Channel::dxx)) index_[3] = static_cast<int>(count_++);
}

Channels ChannelLayout::carried() const {
    Channels c;
    if (carries(Channel::dt)) c = c.with(Channel::dt);
    if (carries(Channel::dx)) c = c.with(Channel::dx);
    if (carries(Channel::dxx)) c = c.with(Channel::dxx);
    return c;
}

Mlp::Mlp(MLPArchitecture arch, Eigen::VectorXd theta) : arch_(arch), theta_(std::move(theta)) {
    arch_.validate();
    if (static_cast<std::size_t>(theta_.size()) != arch_.parameter_count()) {
        throw InvalidArgument("Mlp: theta has " + std::to_string(theta_.size()) + " entries, architecture " +
                              arch_.header() + " needs " + std::to_string(arch_.parameter_count()));
    }
    dims_ = arch_.layer_dims();
    std::size_t offset = 0;
    for (std::size_t k = 0; k + 1 < dims_.size(); ++k) {
        weight_offset_.push_back(offset);
        offset += dims_[k + 1] * dims_[k];
        bias_offset_.push_back(offset);
        offset += dims_[k + 1];
    }
}

Mlp Mlp::xavier(const MLPArchitecture& arch, std::uint64_t seed) { return Mlp(arch, xavier_init(arch, seed)); }

double Mlp::frequency(std::size_t hidden) const {
    const double a = theta_[static_cast<Eigen::Index>(arch_.frequency_offset() + hidden)];
    if (std::abs(a) < kSnakeMinFrequency) return a < 0.0 ? -kSnakeMinFrequency : kSnakeMinFrequency;
    return a;
}

Eigen::VectorXd Mlp::forward(std::span<const double> input) const {
    if (input.size() != arch_.input_dim) {
        throw InvalidArgument("forward: input has " + std::to_string(input.size()) + " entries, expected " +
                              std::to_string(arch_.input_dim));
    }
    Eigen::MatrixXd in(static_cast<Eigen::Index>(input.size()), 1);
    for (std::size_t i = 0; i < input.size(); ++i) in(static_cast<Eigen::Index>(i), 0) = input[i];
    return forward_batch(in, InputRoles{}, Channels::value_only()).col(0);
}

ModelEval Mlp::forward_with_input_derivatives(std::span<const double> input, const InputRoles& roles,
                                              Channels wanted) const {
    if (arch_.output_dim != 1) {
        throw InvalidArgument("forward_with_input_derivatives: network must have a scalar output");
    }
    if (input.size() != arch_.input_dim) {
        throw InvalidArgument("forward_with_input_derivatives: input dimension mismatch");
    }
    Eigen::MatrixXd in(static_cast<Eigen::Index>(input.size()), 1);
    for (std::size_t i = 0; i < input.size(); ++i) in(static_cast<Eigen::Index>(i), 0) = input[i];
    const Eigen::MatrixXd out = forward_batch(in, roles, wanted);
    const ChannelLayout layout(wanted);
    ModelEval m;
    m.u = out(0, 0);
    if (layout.carries(Channel::dt)) m.u_t = out(0, layout.block(Channel::dt));
    if (wanted.has(Channel::dx)) m.u_x = out(0, layout.block(Channel::dx));
    if (wanted.has(Channel::dxx)) m.u_xx = out(0, layout.block(Channel::dxx));
    return m;
}

Eigen::MatrixXd Mlp::forward_batch(const Eigen::MatrixXd& inputs, const InputRoles& roles, Channels wanted,
                                   MlpTape* tape) const {
    if (static_cast<std::size_t>(inputs.rows()) != arch_.input_dim) {
        throw InvalidArgument("forward_batch: input has " + std::to_string(inputs.rows()) + " rows, expected " +
                              std::to_string(arch_.input_dim));
    }
    if (wanted.has(Channel::dt) && (!roles.t || *roles.t >= arch_.input_dim)) {
        throw InvalidArgument("forward_batch: time derivative requested but no time coordinate is tagged");
    }
    if (wanted.needs_space() && (!roles.x || *roles.x >= arch_.input_dim)) {
        throw InvalidArgument(
            "forward_batch: space derivatives requested but the model has no spatial input coordinate");
    }
    const ChannelLayout layout(wanted);
    const Eigen::Index n = inputs.cols();
    const auto blocks = static_cast<Eigen::Index>(layout.block_count());
    const int bt = layout.block(Channel::dt);
    const int bx = layout.block(Channel::dx);
    const int bxx = layout.block(Channel::dxx);

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(inputs.rows(), blocks * n);
    h.leftCols(n) = inputs;
    if (bt >= 0) h.block(static_cast<Eigen::Index>(*roles.t), bt * n, 1, n).setOnes();
    if (bx >= 0) h.block(static_cast<Eigen::Index>(*roles.x), bx * n, 1, n).setOnes();

    if (tape) {
        tape->columns = static_cast<std::size_t>(n);
        tape->layout = layout;
        tape->layer_inputs.clear();
        tape->preacts.clear();
        tape->activation_cache.clear();
    }

    const std::size_t layers = arch_.layer_count();
    for (std::size_t k = 0; k < layers; ++k) {
        const auto rows = static_cast<Eigen::Index>(dims_[k + 1]);
        const auto cols = static_cast<Eigen::Index>(dims_[k]);
        ConstMatMap w(theta_.data() + weight_offset_[k], rows, cols);
        Eigen::Map<const Eigen::VectorXd> b(theta_.data() + bias_offset_[k], rows);
        Eigen::MatrixXd z(rows, blocks * n);
        z.noalias() = w * h;
        z.leftCols(n).colwise() += b;
        if (tape) tape->layer_inputs.push_back(std::move(h));
        if (k + 1 == layers) return z;

        const bool is_snake = arch_.activation == Activation::snake;
        const double a = is_snake ? frequency(k) : 0.0;
        Eigen::MatrixXd out(rows, blocks * n);
        // cache0/cache1: sin^2(a z), sin(2 a z) for snake; tanh(z) for tanh.
        Eigen::ArrayXXd cache0(rows, n), cache1;
        const auto zv = z.leftCols(n).array();
        Eigen::ArrayXXd s1(rows, n);
        if (is_snake) {
            cache1.resize(rows, n);
            Eigen::ArrayXXd arg = a * zv;
            Eigen::ArrayXXd c(rows, n);
            detail::sincos_array(arg.data(), cache0.data(), c.data(), static_cast<std::size_t>(arg.size()));
            cache1 = 2.0 * cache0 * c;
            cache0 = cache0.square();
            out.leftCols(n).array() = zv + cache0 / a;
            s1 = 1.0 + cache1;
        } else {
            cache0 = zv.tanh();
            out.leftCols(n).array() = cache0;
            s1 = 1.0 - cache0.square();
        }
        if (bt >= 0) out.middleCols(bt * n, n).array() = s1 * z.middleCols(bt * n, n).array();
        if (bx >= 0) {
            const auto zx = z.middleCols(bx * n, n).array();
            out.middleCols(bx * n, n).array() = s1 * zx;
            if (bxx >= 0) {
                const Eigen::ArrayXXd s2 =
                    is_snake ? Eigen::ArrayXXd(2.0 * a * (1.0 - 2.0 * cache0)) : Eigen::ArrayXXd(-2.0 * cache0 * s1);
                out.middleCols(bxx * n, n).array() = s2 * zx.square() + s1 * z.middleCols(bxx * n, n).array();
            }
        }
        if (tape) {
            tape->preacts.push_back(std::move(z));
            tape->activation_cache.push_back({std::move(cache0), std::move(cache1)});
        }
        h = std::move(out);
    }
    return h;  // unreachable: the loop returns on the output layer
}

void Mlp::backward(const MlpTape& tape, const Eigen::MatrixXd& output_adjoint,
                   Eigen::Ref<Eigen::VectorXd> grad) const {
    if (grad.size() != theta_.size()) throw InvalidArgument("backward: gradient size mismatch");
    const std::size_t layers = arch_.layer_count();
    if (tape.layer_inputs.size() != layers || tape.preacts.size() + 1 != layers) {
        throw InvalidArgument("backward: tape was not recorded for this network");
    }
    const auto n = static_cast<Eigen::Index>(tape.columns);
    const auto blocks = static_cast<Eigen::Index>(tape.layout.block_count());
    if (output_adjoint.rows() != static_cast<Eigen::Index>(arch_.output_dim) || output_adjoint.cols() != blocks * n) {
        throw InvalidArgument("backward: output adjoint has the wrong shape");
    }
    const int bt = tape.layout.block(Channel::dt);
    const int bx = tape.layout.block(Channel::dx);
    const int bxx = tape.layout.block(Channel::dxx);
    const bool is_snake = arch_.activation == Activation::snake;

    Eigen::MatrixXd zbar = output_adjoint;
    for (std::size_t kk = layers; kk-- > 0;) {
        const auto rows = static_cast<Eigen::Index>(dims_[kk + 1]);
        const auto cols = static_cast<Eigen::Index>(dims_[kk]);
        const Eigen::MatrixXd& h = tape.layer_inputs[kk];
        MatMap gw(grad.data() + weight_offset_[kk], rows, cols);
        Eigen::Map<Eigen::VectorXd> gb(grad.data() + bias_offset_[kk], rows);
        gw.noalias() += zbar * h.transpose();
        gb += zbar.leftCols(n).rowwise().sum();
        if (kk == 0) break;

        ConstMatMap w(theta_.data() + weight_offset_[kk], rows, cols);
        Eigen::MatrixXd hbar(cols, blocks * n);
        hbar.noalias() = w.transpose() * zbar;

        // Activation of hidden layer kk-1: hbar is the adjoint of its output.
        const std::size_t hidden = kk - 1;
        const Eigen::MatrixXd& z = tape.preacts[hidden];
        const auto& cache = tape.activation_cache[hidden];
        const double a_raw = is_snake ? theta_[static_cast<Eigen::Index>(arch_.frequency_offset() + hidden)] : 0.0;
        const bool clamped = is_snake && std::abs(a_raw) < kSnakeMinFrequency;
        const double a = is_snake ? frequency(hidden) : 0.0;
        const auto zv = z.leftCols(n).array();
        const Eigen::ArrayXXd& c0 = cache[0];
        const Eigen::ArrayXXd& c1 = cache[1];
        Eigen::MatrixXd znext(cols, blocks * n);
        // Reverse sweep through the activation jet: s1, s2, s3 are the first
        // three z-derivatives of sigma, da0, da1, da2 the a-derivatives of
        // sigma and its first two z-derivatives.
        auto sweep = [&](const auto& s1, const auto& s2, const auto& s3, const auto& da0, const auto& da1,
                         const auto& da2, bool with_frequency) {
            double acc = 0.0;
            const auto g0 = hbar.leftCols(n).array();
            auto zvbar = znext.leftCols(n).array();
            zvbar = g0 * s1;
            if (with_frequency) acc += (g0 * da0).sum();
            if (bt >= 0) {
                const auto gt = hbar.middleCols(bt * n, n).array();
                const auto zt = z.middleCols(bt * n, n).array();
                zvbar += gt * s2 * zt;
                znext.middleCols(bt * n, n).array() = gt * s1;
                if (with_frequency) acc += (gt * da1 * zt).sum();
            }
            if (bx >= 0) {
                const auto gx = hbar.middleCols(bx * n, n).array();
                const auto zx = z.middleCols(bx * n, n).array();
                auto zxbar = znext.middleCols(bx * n, n).array();
                if (bxx >= 0) {
                    const auto gxx = hbar.middleCols(bxx * n, n).array();
                    const auto zxx = z.middleCols(bxx * n, n).array();
                    zvbar += gx * s2 * zx + gxx * (s3 * zx.square() + s2 * zxx);
                    zxbar = gx * s1 + gxx * 2.0 * s2 * zx;
                    znext.middleCols(bxx * n, n).array() = gxx * s1;
                    if (with_frequency) acc += (gx * da1 * zx + gxx * (da2 * zx.square() + da1 * zxx)).sum();
                } else {
                    zvbar += gx * s2 * zx;
                    zxbar = gx * s1;
                    if (with_frequency) acc += (gx * da1 * zx).sum();
                }
            }
            return acc;
        };

        double abar = 0.0;
        if (is_snake) {
            const auto cos2 = 1.0 - 2.0 * c0;
            abar = sweep(1.0 + c1, 2.0 * a * cos2, -4.0 * a * a * c1, zv * c1 / a - c0 / (a * a), 2.0 * zv * cos2,
                         2.0 * cos2 - 4.0 * a * zv * c1, true);
        } else {
            const Eigen::ArrayXXd s1 = 1.0 - c0.square();
            const Eigen::ArrayXXd s2 = -2.0 * c0 * s1;
            const Eigen::ArrayXXd s3 = -2.0 * s1.square() + 4.0 * c0.square() * s1;
            sweep(s1, s2, s3, s1, s1, s1, false);
        }
        if (is_snake && !clamped) grad[static_cast<Eigen::Index>(arch_.frequency_offset() + hidden)] += abar;
        zbar = std::move(znext);
    }
}

Eigen::VectorXd forward(const MLPArchitecture& arch, const Eigen::VectorXd& theta, std::span<const double> input) {
    return Mlp(arch, theta).forward(input);
}

ModelEval forward_with_input_derivatives(const MLPArchitecture& arch, const Eigen::VectorXd& theta,
                                         std::span<const double> input, const InputRoles& roles,
                                         Channels wanted) {
    return Mlp(arch, theta).forward_with_input_derivatives(input, roles, wanted);
}

}  // namespace nmeasure
