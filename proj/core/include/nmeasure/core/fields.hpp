#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace nmeasure {

/// Solution channels a residual may need: u and its input derivatives.
enum class Channel : std::uint8_t { value = 0, dt = 1, dx = 2, dxx = 3 };

inline constexpr std::size_t kChannelCount = 4;

/// Set of requested channels. The value channel is always present.
class Channels {
public:
    constexpr Channels() = default;
    static constexpr Channels value_only() { return Channels{}; }
    static constexpr Channels ode() { return Channels{}.with(Channel::dt); }
    static constexpr Channels pde_1d() {
        return Channels{}.with(Channel::dt).with(Channel::dx).with(Channel::dxx);
    }

    constexpr Channels with(Channel c) const {
        Channels out = *this;
        out.bits_ |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
        return out;
    }
    constexpr bool has(Channel c) const {
        return (bits_ >> static_cast<unsigned>(c)) & 1u;
    }
    constexpr Channels merged(Channels other) const {
        Channels out = *this;
        out.bits_ |= other.bits_;
        return out;
    }
    constexpr bool needs_space() const { return has(Channel::dx) || has(Channel::dxx); }
    constexpr bool operator==(const Channels&) const = default;

    std::string to_string() const;

private:
    std::uint8_t bits_ = 1;  // value
};

/// Point evaluation of a model together with its input derivatives.
struct ModelEval {
    double u = 0.0;
    double u_t = 0.0;
    std::optional<double> u_x;
    std::optional<double> u_xx;
};

/// Forward-mode dual number carrying partials with respect to the four
/// solution channels (u, u_t, u_x, u_xx). Residuals are written against it so
/// the loss can back-propagate through them exactly.
struct Dual {
    double v = 0.0;
    std::array<double, kChannelCount> d{};

    constexpr Dual() = default;
    constexpr Dual(double value) : v(value) {}  // NOLINT: implicit constant promotion

    static constexpr Dual seed(double value, Channel c) {
        Dual out(value);
        out.d[static_cast<std::size_t>(c)] = 1.0;
        return out;
    }
};

inline constexpr Dual operator+(const Dual& a, const Dual& b) {
    Dual r(a.v + b.v);
    for (std::size_t i = 0; i < kChannelCount; ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
}
inline constexpr Dual operator-(const Dual& a, const Dual& b) {
    Dual r(a.v - b.v);
    for (std::size_t i = 0; i < kChannelCount; ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
}
inline constexpr Dual operator-(const Dual& a) {
    Dual r(-a.v);
    for (std::size_t i = 0; i < kChannelCount; ++i) r.d[i] = -a.d[i];
    return r;
}
inline constexpr Dual operator*(const Dual& a, const Dual& b) {
    Dual r(a.v * b.v);
    for (std::size_t i = 0; i < kChannelCount; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    return r;
}
inline constexpr Dual operator*(double s, const Dual& a) {
    Dual r(s * a.v);
    for (std::size_t i = 0; i < kChannelCount; ++i) r.d[i] = s * a.d[i];
    return r;
}
inline constexpr Dual operator*(const Dual& a, double s) { return s * a; }

/// Channel values of the model at one (point, xi) pair, as seeded duals.
struct FieldDuals {
    Dual u;
    Dual u_t;
    Dual u_x;
    Dual u_xx;

    static FieldDuals seeded(double u, double u_t, double u_x, double u_xx) {
        return {Dual::seed(u, Channel::value), Dual::seed(u_t, Channel::dt),
                Dual::seed(u_x, Channel::dx), Dual::seed(u_xx, Channel::dxx)};
    }
    static FieldDuals seeded(const ModelEval& m) {
        return seeded(m.u, m.u_t, m.u_x.value_or(0.0), m.u_xx.value_or(0.0));
    }
};

}  // namespace nmeasure
