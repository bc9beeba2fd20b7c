#pragma once

#include <array>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nmeasure/core/problem.hpp"
#include "nmeasure/measures/space_time_basis.hpp"
#include "nmeasure/metrics/ensemble.hpp"
#include "nmeasure/networks/mlp.hpp"
#include "nmeasure/pce/chaos_basis.hpp"

namespace nmeasure {

enum class MeasureVariant { fullnn, pce_nn, galerkin_nn };

std::string to_string(MeasureVariant v);
MeasureVariant measure_variant_from_string(const std::string& s);

using PointSet = std::vector<SpaceTime>;

/// Channel fields of a measure on (xi batch) x (points): rows index xi,
/// columns index points. Channels that were not requested stay empty.
struct FieldBlock {
    std::array<Eigen::MatrixXd, kChannelCount> channels;

    Eigen::MatrixXd& operator[](Channel c) { return channels[static_cast<std::size_t>(c)]; }
    const Eigen::MatrixXd& operator[](Channel c) const { return channels[static_cast<std::size_t>(c)]; }
    bool has(Channel c) const { return (*this)[c].size() > 0; }
};

/// Opaque per-variant intermediates for the reverse sweep.
class MeasureTape {
public:
    virtual ~MeasureTape() = default;
};

/// A parameterized map X_theta from standardized parameters to space-time
/// functions; its pushforward of the parameter law is the modelled solution law.
class NeuralMeasure {
public:
    NeuralMeasure(DomainSpec domain, ParameterSpace params);
    virtual ~NeuralMeasure() = default;

    virtual MeasureVariant variant() const = 0;
    virtual std::unique_ptr<NeuralMeasure> clone() const = 0;

    virtual const Eigen::VectorXd& theta() const = 0;
    virtual Eigen::VectorXd& theta() = 0;
    std::size_t parameter_count() const { return static_cast<std::size_t>(theta().size()); }

    /// Batched evaluation at every (xi row, point) pair. `xi_hat` is n_xi x dim
    /// and already standardized. When `tape` is non-null, intermediates for
    /// backward() are stored in it.
    virtual FieldBlock forward(const PointSet& points, const Eigen::MatrixXd& xi_hat, Channels wanted,
                               std::unique_ptr<MeasureTape>* tape = nullptr) const = 0;

    /// Accumulate d(loss)/d(theta) given the adjoint of every carried channel.
    virtual void backward(const MeasureTape& tape, const FieldBlock& adjoint,
                          Eigen::Ref<Eigen::VectorXd> grad) const = 0;

    /// Largest xi chunk worth evaluating at once for a given point count.
    virtual std::size_t preferred_xi_chunk(std::size_t n_points) const;

    /// Point evaluation with raw parameters; validates domain and bounds.
    ModelEval eval(double x, double t, std::span<const double> xi, Channels wanted) const;

    const DomainSpec& domain() const { return domain_; }
    const ParameterSpace& params() const { return params_; }

protected:
    void check_points(const PointSet& points) const;

private:
    DomainSpec domain_;
    ParameterSpace params_;
};

/// Base for the three network-backed variants.
class NetworkMeasure : public NeuralMeasure {
public:
    NetworkMeasure(DomainSpec domain, ParameterSpace params, Mlp net);

    const Mlp& network() const { return net_; }
    const Eigen::VectorXd& theta() const override { return net_.theta(); }
    Eigen::VectorXd& theta() override { return net_.theta(); }

protected:
    Mlp net_;
};

/// X_theta(xi) = g_theta(x, t, xi_hat): a single network on space, time and
/// standardized parameters.
class FullNNMeasure final : public NetworkMeasure {
public:
    FullNNMeasure(DomainSpec domain, ParameterSpace params, Mlp net);
    /// Network sized for the problem: input (x?, t, xi), scalar output.
    static MLPArchitecture architecture_for(const DomainSpec& domain, const ParameterSpace& params,
                                            std::size_t hidden_layers, std::size_t hidden_width,
                                            Activation activation);

    MeasureVariant variant() const override { return MeasureVariant::fullnn; }
    std::unique_ptr<NeuralMeasure> clone() const override;
    FieldBlock forward(const PointSet& points, const Eigen::MatrixXd& xi_hat, Channels wanted,
                       std::unique_ptr<MeasureTape>* tape) const override;
    void backward(const MeasureTape& tape, const FieldBlock& adjoint, Eigen::Ref<Eigen::VectorXd> grad) const override;
    std::size_t preferred_xi_chunk(std::size_t n_points) const override;

private:
    InputRoles roles() const;
};

/// X_theta(xi) = sum_n g_theta^(n)(x, t) phi_n(xi_hat): one network on space
/// and time whose K outputs are the chaos coefficient fields.
class PCENNMeasure final : public NetworkMeasure {
public:
    PCENNMeasure(DomainSpec domain, ParameterSpace params, Mlp net, ChaosBasis basis);
    static MLPArchitecture architecture_for(const DomainSpec& domain, const ChaosBasis& basis,
                                            std::size_t hidden_layers, std::size_t hidden_width,
                                            Activation activation);

    MeasureVariant variant() const override { return MeasureVariant::pce_nn; }
    std::unique_ptr<NeuralMeasure> clone() const override;
    FieldBlock forward(const PointSet& points, const Eigen::MatrixXd& xi_hat, Channels wanted,
                       std::unique_ptr<MeasureTape>* tape) const override;
    void backward(const MeasureTape& tape, const FieldBlock& adjoint, Eigen::Ref<Eigen::VectorXd> grad) const override;

    const ChaosBasis& basis() const { return basis_; }

private:
    InputRoles roles() const;
    ChaosBasis basis_;
};

/// X_theta(xi) = sum_n g_theta^(n)(xi_hat) psi_n(x, t): one network on the
/// standardized parameters whose M outputs weight a fixed space-time basis.
class GalerkinNNMeasure final : public NetworkMeasure {
public:
    GalerkinNNMeasure(DomainSpec domain, ParameterSpace params, Mlp net, SpaceTimeBasis basis);
    static MLPArchitecture architecture_for(const ParameterSpace& params, const SpaceTimeBasis& basis,
                                            std::size_t hidden_layers, std::size_t hidden_width,
                                            Activation activation);

    MeasureVariant variant() const override { return MeasureVariant::galerkin_nn; }
    std::unique_ptr<NeuralMeasure> clone() const override;
    FieldBlock forward(const PointSet& points, const Eigen::MatrixXd& xi_hat, Channels wanted,
                       std::unique_ptr<MeasureTape>* tape) const override;
    void backward(const MeasureTape& tape, const FieldBlock& adjoint, Eigen::Ref<Eigen::VectorXd> grad) const override;

    const SpaceTimeBasis& basis() const { return basis_; }

private:
    SpaceTimeBasis basis_;
};

/// Model values at every (xi row, grid point); xi_batch holds raw parameters.
EmpiricalEnsemble sample_pushforward(const NeuralMeasure& measure, const Eigen::MatrixXd& xi_batch,
                                     const std::vector<SpaceTime>& grid);

}  // namespace nmeasure
