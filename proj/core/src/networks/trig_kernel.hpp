#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>

namespace nmeasure::detail {

// Branch-free sin/cos over contiguous arrays, written so the compiler can
// vectorize it. Cody-Waite reduction by pi/2 in three parts, then the fdlibm
// minimax kernels on [-pi/4, pi/4]. Accurate to about 1 ulp for |x| below
// kTrigFastLimit; larger arguments go through std::sin/std::cos.
inline constexpr double kTrigFastLimit = 1e5;

inline void sincos_array(const double* __restrict x, double* __restrict s, double* __restrict c, std::size_t n) {
    constexpr double kTwoOverPi = 6.36619772367581382433e-01;
    constexpr double kPio2_1 = 1.57079632673412561417e+00;
    constexpr double kPio2_2 = 6.07710050630396597660e-11;
    constexpr double kPio2_3 = 2.02226624871116645580e-21;
    constexpr double kShift = 6755399441055744.0;  // 1.5 * 2^52

    constexpr double S1 = -1.66666666666666324348e-01;
    constexpr double S2 = 8.33333333332248946124e-03;
    constexpr double S3 = -1.98412698298579493134e-04;
    constexpr double S4 = 2.75573137070700676789e-06;
    constexpr double S5 = -2.50507602534068634195e-08;
    constexpr double S6 = 1.58969099521155010221e-10;
    constexpr double C1 = 4.16666666666666019037e-02;
    constexpr double C2 = -1.38888888888741095749e-03;
    constexpr double C3 = 2.48015872894767294178e-05;
    constexpr double C4 = -2.75573143513906633035e-07;
    constexpr double C5 = 2.08757232129817482790e-09;
    constexpr double C6 = -1.13596475577881948265e-11;

    std::uint64_t slow = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double shifted = xi * kTwoOverPi + kShift;
        const std::uint64_t q = std::bit_cast<std::uint64_t>(shifted);
        const double k = shifted - kShift;
        const double r = ((xi - k * kPio2_1) - k * kPio2_2) - k * kPio2_3;
        const double z = r * r;

        const double ps = S2 + z * (S3 + z * (S4 + z * (S5 + z * S6)));
        const double sr = r + r * z * (S1 + z * ps);
        const double pc = z * (C1 + z * (C2 + z * (C3 + z * (C4 + z * (C5 + z * C6)))));
        const double hz = 0.5 * z;
        const double w = 1.0 - hz;
        const double cr = w + (((1.0 - w) - hz) + z * pc);

        const bool swap = (q & 1U) != 0;
        const double sv = swap ? cr : sr;
        const double cv = swap ? sr : cr;
        const std::uint64_t sflip = (q & 2U) << 62;
        const std::uint64_t cflip = ((q + 1U) & 2U) << 62;
        s[i] = std::bit_cast<double>(std::bit_cast<std::uint64_t>(sv) ^ sflip);
        c[i] = std::bit_cast<double>(std::bit_cast<std::uint64_t>(cv) ^ cflip);
        slow += (xi > kTrigFastLimit) | (xi < -kTrigFastLimit);
    }
    if (slow == 0) return;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(std::abs(x[i]) < kTrigFastLimit)) {
            s[i] = std::sin(x[i]);
            c[i] = std::cos(x[i]);
        }
    }
}

}  // namespace nmeasure::detail
