#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nmeasure/core/fields.hpp"

namespace nmeasure {

enum class Activation { snake, tanh };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& s);

/// Snake activation x + sin^2(a x) / a. Throws when a == 0.
double snake(double x, double a);

/// Smallest admissible |a| inside the network; frequencies are clamped to it.
inline constexpr double kSnakeMinFrequency = 1e-6;

/// Fully connected network C_L o sigma o C_{L-1} o ... o sigma o C_1 with an
/// affine output layer.
struct MLPArchitecture {
    std::size_t input_dim = 1;
    std::size_t output_dim = 1;
    std::size_t hidden_layers = 1;
    std::size_t hidden_width = 1;
    Activation activation = Activation::snake;

    /// Layer widths d_0 (input) ... d_L (output).
    std::vector<std::size_t> layer_dims() const;
    std::size_t layer_count() const { return hidden_layers + 1; }
    /// sum_k d_{k+1}(d_k + 1), plus one frequency per hidden layer for snake.
    std::size_t parameter_count() const;
    std::size_t frequency_offset() const;
    void validate() const;

    /// "in,out,layers,width,activation"
    std::string header() const;
    static MLPArchitecture from_header(const std::string& s);

    bool operator==(const MLPArchitecture&) const = default;
};

/// Which input coordinates are time and space, for derivative seeding.
struct InputRoles {
    std::optional<std::size_t> t;
    std::optional<std::size_t> x;
};

/// Glorot/Xavier normal weights (variance 2/(fan_in + fan_out)), zero biases,
/// unit snake frequencies.
Eigen::VectorXd xavier_init(const MLPArchitecture& arch, std::uint64_t seed);

/// Column blocks of a channel-stacked matrix [value | dt | dx | dxx].
/// dx is carried whenever dxx is requested.
class ChannelLayout {
public:
    explicit ChannelLayout(Channels requested);

    std::size_t block_count() const { return count_; }
    /// Block index of a channel, or -1 when the channel is not carried.
    int block(Channel c) const { return index_[static_cast<std::size_t>(c)]; }
    bool carries(Channel c) const { return block(c) >= 0; }
    Channels carried() const;

private:
    std::array<int, kChannelCount> index_{};
    std::size_t count_ = 0;
};

/// Intermediate values kept for the reverse sweep of a batched evaluation.
struct MlpTape {
    std::size_t columns = 0;  // batch size N
    ChannelLayout layout{Channels{}};
    std::vector<Eigen::MatrixXd> layer_inputs;  // H_k, d_k x (blocks * N)
    std::vector<Eigen::MatrixXd> preacts;       // Z_k of hidden layers
    // Per hidden layer: sin^2(a z), sin(2 a z) for snake; tanh(z) for tanh.
    std::vector<std::array<Eigen::ArrayXXd, 2>> activation_cache;
};

/// A network with its parameter vector theta.
///
/// Theta layout, layer by layer: W_k stored column-major (d_{k+1} x d_k),
/// then b_k; after the last layer one snake frequency a_k per hidden layer.
class Mlp {
public:
    Mlp(MLPArchitecture arch, Eigen::VectorXd theta);
    static Mlp xavier(const MLPArchitecture& arch, std::uint64_t seed);

    const MLPArchitecture& architecture() const { return arch_; }
    const Eigen::VectorXd& theta() const { return theta_; }
    Eigen::VectorXd& theta() { return theta_; }

    Eigen::VectorXd forward(std::span<const double> input) const;

    /// Exact input derivatives of a scalar-output network at one point.
    ModelEval forward_with_input_derivatives(std::span<const double> input, const InputRoles& roles,
                                             Channels wanted) const;

    /// Batched channel-stacked evaluation. `inputs` is d_in x N; the result is
    /// d_out x (blocks * N) following ChannelLayout(wanted). When `tape` is
    /// non-null the intermediates needed by backward() are recorded.
    Eigen::MatrixXd forward_batch(const Eigen::MatrixXd& inputs, const InputRoles& roles,
                                  Channels wanted, MlpTape* tape = nullptr) const;

    /// Accumulates d(loss)/d(theta) into grad given the adjoint of the stacked
    /// output of the taped forward pass.
    void backward(const MlpTape& tape, const Eigen::MatrixXd& output_adjoint,
                  Eigen::Ref<Eigen::VectorXd> grad) const;

private:
    double frequency(std::size_t hidden) const;

    MLPArchitecture arch_;
    Eigen::VectorXd theta_;
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> weight_offset_;
    std::vector<std::size_t> bias_offset_;
};

/// Free-function forms of the network operations.
Eigen::VectorXd forward(const MLPArchitecture& arch, const Eigen::VectorXd& theta,
                        std::span<const double> input);
ModelEval forward_with_input_derivatives(const MLPArchitecture& arch, const Eigen::VectorXd& theta,
                                         std::span<const double> input, const InputRoles& roles,
                                         Channels wanted);

}  // namespace nmeasure
