#include "nmeasure/measures/measure.hpp"

#include <algorithm>
#include <limits>

#include "nmeasure/core/error.hpp"

namespace nmeasure {

namespace {

struct NetworkTape final : MeasureTape {
    MlpTape mlp;
    Eigen::Index n_xi = 0;
    Eigen::Index n_points = 0;
    Eigen::MatrixXd chaos;                                // PCE: K x n_xi
    std::array<Eigen::MatrixXd, kChannelCount> psi;       // Galerkin: M x n_points per channel
};

const NetworkTape& as_network_tape(const MeasureTape& tape) {
    const auto* t = dynamic_cast<const NetworkTape*>(&tape);
    if (!t) throw InvalidArgument("backward: tape was produced by a different measure");
    return *t;
}

constexpr std::array<Channel, kChannelCount> kAllChannels = {Channel::value, Channel::dt, Channel::dx,
                                                             Channel::dxx};

}  // namespace

std::string to_string(MeasureVariant v) {
    switch (v) {
        case MeasureVariant::fullnn: return "fullnn";
        case MeasureVariant::pce_nn: return "pce_nn";
        case MeasureVariant::galerkin_nn: return "galerkin_nn";
    }
    return "unknown";
}

MeasureVariant measure_variant_from_string(const std::string& s) {
    if (s == "fullnn") return MeasureVariant::fullnn;
    if (s == "pce_nn") return MeasureVariant::pce_nn;
    if (s == "galerkin_nn") return MeasureVariant::galerkin_nn;
    throw InvalidArgument("unknown measure variant '" + s + "' (expected fullnn, pce_nn or galerkin_nn)");
}

NeuralMeasure::NeuralMeasure(DomainSpec domain, ParameterSpace params)
    : domain_(std::move(domain)), params_(std::move(params)) {}

std::size_t NeuralMeasure::preferred_xi_chunk(std::size_t /*n_points*/) const {
    return std::numeric_limits<std::size_t>::max();
}

void NeuralMeasure::check_points(const PointSet& points) const {
    for (const auto& p : points) domain_.check_contains(p.x, p.t);
}

ModelEval NeuralMeasure::eval(double x, double t, std::span<const double> xi, Channels wanted) const {
    domain_.check_contains(x, t);
    const auto hat = params_.standardize(xi);
    Eigen::MatrixXd xi_hat(1, static_cast<Eigen::Index>(hat.size()));
    for (std::size_t j = 0; j < hat.size(); ++j) xi_hat(0, static_cast<Eigen::Index>(j)) = hat[j];
    const FieldBlock f = forward(PointSet{{x, t}}, xi_hat, wanted);
    ModelEval m;
    m.u = f[Channel::value](0, 0);
    if (wanted.has(Channel::dt)) m.u_t = f[Channel::dt](0, 0);
    if (wanted.has(Channel::dx)) m.u_x = f[Channel::dx](0, 0);
    if (wanted.has(Channel::dxx)) m.u_xx = f[Channel::dxx](0, 0);
    return m;
}

NetworkMeasure::NetworkMeasure(DomainSpec domain, ParameterSpace params, Mlp net)
    : NeuralMeasure(std::move(domain), std::move(params)), net_(std::move(net)) {}

// ---------------------------------------------------------------- FullNN

FullNNMeasure::FullNNMeasure(DomainSpec domain, ParameterSpace params, Mlp net)
    : NetworkMeasure(std::move(domain), std::move(params), std::move(net)) {
    const auto expected = architecture_for(this->domain(), this->params(), net_.architecture().hidden_layers,
                                           net_.architecture().hidden_width, net_.architecture().activation);
    if (net_.architecture() != expected) {
        throw InvalidArgument("FullNNMeasure: network " + net_.architecture().header() + " does not match " +
                              expected.header());
    }
}

MLPArchitecture FullNNMeasure::architecture_for(const DomainSpec& domain, const ParameterSpace& params,
                                                std::size_t hidden_layers, std::size_t hidden_width,
                                                Activation activation) {
    return {(domain.has_space() ? 2u : 1u) + params.dimension(), 1, hidden_layers, hidden_width, activation};
}

std::unique_ptr<NeuralMeasure> FullNNMeasure::clone() const { return std::make_unique<FullNNMeasure>(*this); }

InputRoles FullNNMeasure::roles() const {
    if (domain().has_space()) return {std::size_t{1}, std::size_t{0}};
    return {std::size_t{0}, std::nullopt};
}

std::size_t FullNNMeasure::preferred_xi_chunk(std::size_t n_points) const {
    return std::max<std::size_t>(1, 2048 / std::max<std::size_t>(1, n_points));
}

FieldBlock FullNNMeasure::forward(const PointSet& points, const Eigen::MatrixXd& xi_hat, Channels wanted,
                                  std::unique_ptr<MeasureTape>* tape) const {
    check_points(points);
    const Eigen::Index nxi = xi_hat.rows();
    const auto np = static_cast<Eigen::Index>(points.size());
    const bool space = domain().has_space();
    const Eigen::Index offset = space ? 2 : 1;
    Eigen::MatrixXd inputs(offset + xi_hat.cols(), nxi * np);
    for (Eigen::Index j = 0; j < np; ++j) {
        const auto& p = points[static_cast<std::size_t>(j)];
        for (Eigen::Index i = 0; i < nxi; ++i) {
            const Eigen::Index c = j * nxi + i;
            if (space) {
                inputs(0, c) = p.x;
                inputs(1, c) = p.t;
            } else {
                inputs(0, c) = p.t;
            }
            inputs.block(offset, c, xi_hat.cols(), 1) = xi_hat.row(i).transpose();
        }
    }
    std::unique_ptr<NetworkTape> t;
    if (tape) t = std::make_unique<NetworkTape>();
    const Eigen::MatrixXd out = net_.forward_batch(inputs, roles(), wanted, t ? &t->mlp : nullptr);
    const ChannelLayout layout(wanted);
    const Eigen::Index n = nxi * np;
    FieldBlock f;
    for (Channel c : kAllChannels) {
        if (!layout.carries(c)) continue;
        f[c] = Eigen::Map<const Eigen::MatrixXd>(out.data() + layout.block(c) * n, nxi, np);
    }
    if (t) {
        t->n_xi = nxi;
        t->n_points = np;
        *tape = std::move(t);
    }
    return f;
}

void FullNNMeasure::backward(const MeasureTape& tape, const FieldBlock& adjoint,
                             Eigen::Ref<Eigen::VectorXd> grad) const {
    const auto& t = as_network_tape(tape);
    const auto& layout = t.mlp.layout;
    const Eigen::Index n = t.n_xi * t.n_points;
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(1, static_cast<Eigen::Index>(layout.block_count()) * n);
    for (Channel c : kAllChannels) {
        if (!layout.carries(c) || !adjoint.has(c)) continue;
        Eigen::Map<Eigen::MatrixXd>(adj.data() + layout.block(c) * n, t.n_xi, t.n_points) = adjoint[c];
    }
    net_.backward(t.mlp, adj, grad);
}

// ---------------------------------------------------------------- PCE-NN

PCENNMeasure::PCENNMeasure(DomainSpec domain, ParameterSpace params, Mlp net, ChaosBasis basis)
    : NetworkMeasure(std::move(domain), std::move(params), std::move(net)), basis_(std::move(basis)) {
    if (basis_.dim() != this->params().dimension()) {
        throw InvalidArgument("PCENNMeasure: chaos dimension must equal the parameter dimension");
    }
    const auto expected = architecture_for(this->domain(), basis_, net_.architecture().hidden_layers,
                                           net_.architecture().hidden_width, net_.architecture().activation);
    if (net_.architecture() != expected) {
        throw InvalidArgument("PCENNMeasure: network " + net_.architecture().header() + " does not match " +
                              expected.header());
    }
}

MLPArchitecture PCENNMeasure::architecture_for(const DomainSpec& domain, const ChaosBasis& basis,
                                               std::size_t hidden_layers, std::size_t hidden_width,
                                               Activation activation) {
    return {domain.has_space() ? 2u : 1u, basis.cardinality(), hidden_layers, hidden_width, activation};
}

std::unique_ptr<NeuralMeasure> PCENNMeasure::clone() const { return std::make_unique<PCENNMeasure>(*this); }

InputRoles PCENNMeasure::roles() const {
    if (domain().has_space()) return {std::size_t{1}, std::size_t{0}};
    return {std::size_t{0}, std::nullopt};
}

FieldBlock PCENNMeasure::forward(const PointSet& points, const Eigen::MatrixXd& xi_hat, Channels wanted,
                                 std::unique_ptr<MeasureTape>* tape) const {
    check_points(points);
    const auto np = static_cast<Eigen::Index>(points.size());
    const bool space = domain().has_space();
    Eigen::MatrixXd inputs(space ? 2 : 1, np);
    for (Eigen::Index j = 0; j < np; ++j) {
        const auto& p = points[static_cast<std::size_t>(j)];
        if (space) {
            inputs(0, j) = p.x;
            inputs(1, j) = p.t;
        } else {
            inputs(0, j) = p.t;
        }
    }
    std::unique_ptr<NetworkTape> t;
    if (tape) t = std::make_unique<NetworkTape>();
    const Eigen::MatrixXd coeffs = net_.forward_batch(inputs, roles(), wanted, t ? &t->mlp : nullptr);
    Eigen::MatrixXd chaos = basis_.eval_rows(xi_hat);  // K x n_xi
    const ChannelLayout layout(wanted);
    FieldBlock f;
    for (Channel c : kAllChannels) {
        if (!layout.carries(c)) continue;
        f[c].noalias() = chaos.transpose() * coeffs.middleCols(layout.block(c) * np, np);
    }
    if (t) {
        t->n_xi = xi_hat.rows();
        t->n_points = np;
        t->chaos = std::move(chaos);
        *tape = std::move(t);
    }
    return f;
}

void PCENNMeasure::backward(const MeasureTape& tape, const FieldBlock& adjoint,
                            Eigen::Ref<Eigen::VectorXd> grad) const {
    const auto& t = as_network_tape(tape);
    const auto& layout = t.mlp.layout;
    const auto k = static_cast<Eigen::Index>(basis_.cardinality());
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(k, static_cast<Eigen::Index>(layout.block_count()) * t.n_points);
    for (Channel c : kAllChannels) {
        if (!layout.carries(c) || !adjoint.has(c)) continue;
        adj.middleCols(layout.block(c) * t.n_points, t.n_points).noalias() = t.chaos * adjoint[c];
    }
    net_.backward(t.mlp, adj, grad);
}

// ---------------------------------------------------------------- Galerkin-NN

GalerkinNNMeasure::GalerkinNNMeasure(DomainSpec domain, ParameterSpace params, Mlp net, SpaceTimeBasis basis)
    : NetworkMeasure(std::move(domain), std::move(params), std::move(net)), basis_(std::move(basis)) {
    const auto expected = architecture_for(this->params(), basis_, net_.architecture().hidden_layers,
                                           net_.architecture().hidden_width, net_.architecture().activation);
    if (net_.architecture() != expected) {
        throw InvalidArgument("GalerkinNNMeasure: network " + net_.architecture().header() + " does not match " +
                              expected.header());
    }
}

MLPArchitecture GalerkinNNMeasure::architecture_for(const ParameterSpace& params, const SpaceTimeBasis& basis,
                                                    std::size_t hidden_layers, std::size_t hidden_width,
                                                    Activation activation) {
    return {params.dimension(), basis.size(), hidden_layers, hidden_width, activation};
}

std::unique_ptr<NeuralMeasure> GalerkinNNMeasure::clone() const {
    return std::make_unique<GalerkinNNMeasure>(*this);
}

FieldBlock GalerkinNNMeasure::forward(const PointSet& points, const Eigen::MatrixXd& xi_hat, Channels wanted,
                                      std::unique_ptr<MeasureTape>* tape) const {
    check_points(points);
    if (wanted.needs_space() && !domain().has_space()) {
        throw InvalidArgument("GalerkinNNMeasure: spatial derivatives requested on an ODE domain");
    }
    std::unique_ptr<NetworkTape> t;
    if (tape) t = std::make_unique<NetworkTape>();
    const Eigen::MatrixXd inputs = xi_hat.transpose();
    const Eigen::MatrixXd coeffs =
        net_.forward_batch(inputs, InputRoles{}, Channels::value_only(), t ? &t->mlp : nullptr);  // M x n_xi
    FieldBlock f;
    for (Channel c : kAllChannels) {
        if (c != Channel::value && !wanted.has(c)) continue;
        Eigen::MatrixXd psi = basis_.matrix(points, c);
        f[c].noalias() = coeffs.transpose() * psi;
        if (t) t->psi[static_cast<std::size_t>(c)] = std::move(psi);
    }
    if (t) {
        t->n_xi = xi_hat.rows();
        t->n_points = static_cast<Eigen::Index>(points.size());
        *tape = std::move(t);
    }
    return f;
}

void GalerkinNNMeasure::backward(const MeasureTape& tape, const FieldBlock& adjoint,
                                 Eigen::Ref<Eigen::VectorXd> grad) const {
    const auto& t = as_network_tape(tape);
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(basis_.size()), t.n_xi);
    for (Channel c : kAllChannels) {
        const auto& psi = t.psi[static_cast<std::size_t>(c)];
        if (psi.size() == 0 || !adjoint.has(c)) continue;
        adj.noalias() += psi * adjoint[c].transpose();
    }
    net_.backward(t.mlp, adj, grad);
}

// ---------------------------------------------------------------- sampling

EmpiricalEnsemble sample_pushforward(const NeuralMeasure& measure, const Eigen::MatrixXd& xi_batch,
                                     const std::vector<SpaceTime>& grid) {
    if (xi_batch.rows() == 0 || grid.empty()) {
        throw InvalidArgument("sample_pushforward: empty parameter batch or grid");
    }
    const Eigen::MatrixXd xi_hat = measure.params().standardize_rows(xi_batch);
    EmpiricalEnsemble e;
    e.grid = grid;
    e.values.resize(xi_batch.rows(), static_cast<Eigen::Index>(grid.size()));
    const auto chunk = static_cast<Eigen::Index>(
        std::max<std::size_t>(1, std::min<std::size_t>(measure.preferred_xi_chunk(grid.size()), 4096)));
    for (Eigen::Index start = 0; start < xi_hat.rows(); start += chunk) {
        const Eigen::Index rows = std::min(chunk, xi_hat.rows() - start);
        const FieldBlock f = measure.forward(grid, xi_hat.middleRows(start, rows), Channels::value_only());
        e.values.middleRows(start, rows) = f[Channel::value];
    }
    return e;
}

}  // namespace nmeasure
