#pragma once

// Slow, independent reference computations used by the tests. Nothing here
// goes through the library's expansion or group-ring code.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "urdd/pulses.hpp"

namespace oracle {

using urdd::Complex;
using urdd::Mat2;

inline constexpr double pi = std::numbers::pi;

// Plain rotation/Y, written out again rather than taken from the library.
inline Mat2 rot(double phi) {
    return Mat2::diag(std::polar(1.0, phi / 2), std::polar(1.0, -phi / 2));
}

inline Mat2 yfac(double alpha, double beta) {
    return {0.0, std::polar(1.0, beta - alpha), -std::polar(1.0, alpha - beta), 0.0};
}

// Sum over all 2^n placements of Y with exactly l Y-factors, in the gauge
// phi_1 = 0: factor j is R(Delta_j + 2 alpha) or R(Delta_j + 2 alpha) Y.
inline Mat2 ptilde(double alpha, double beta, const std::vector<double>& phases, int l) {
    const int n = static_cast<int>(phases.size());
    std::vector<double> chi(n);
    for (int j = 0; j < n; ++j) {
        const double next = (j + 1 < n) ? phases[j + 1] : phases[0];
        chi[j] = phases[j] - next + 2 * alpha;
    }
    Mat2 acc;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != l) continue;
        Mat2 prod = Mat2::identity();
        for (int j = 0; j < n; ++j) {
            Mat2 f = rot(chi[j]);
            if (mask & (1u << j)) f = f * yfac(alpha, beta);
            prod = f * prod;
        }
        acc += prod;
    }
    return acc;
}

// Product of the raw pulse matrices written directly from the pulse formula.
inline Mat2 pulse_train(double eps, double alpha, double beta, const std::vector<double>& phases) {
    const double s = std::sqrt(1 - eps * eps);
    Mat2 acc = Mat2::identity();
    for (double phi : phases) {
        const Mat2 u{eps * std::polar(1.0, alpha), s * std::polar(1.0, beta + phi),
                     -s * std::polar(1.0, -(beta + phi)), eps * std::polar(1.0, -alpha)};
        acc = u * acc;
    }
    return acc;
}

// Floating-point A_s: sum over tuples with S(r) = s of exp(i Phi W / 2).
inline Complex a_s(int n, int k, int s, double big_phi) {
    Complex acc = 0.0;
    std::vector<int> r(2 * k);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != 2 * k) continue;
        int idx = 0, sig = 0;
        long w = 0;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) {
                ++idx;
                const int sign = ((idx + i) % 2 == 0) ? 1 : -1;
                sig += sign;
                w += sign * i;
            }
        if (sig == s) acc += std::polar(1.0, big_phi * w / 2);
    }
    return acc;
}

inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Phi of the UR prescription, computed from the case analysis.
inline double ur_phi(int n, int sign) {
    if (n % 4 == 0) return sign * pi / (n / 4);
    const int m = (n - 2) / 4;
    return sign * 2.0 * m * pi / (2 * m + 1);
}

inline std::vector<double> ur_list(int n, double phi2, int sign) {
    const double big = ur_phi(n, sign);
    std::vector<double> out(n);
    for (int k = 1; k <= n; ++k) out[k - 1] = (k - 1) * phi2 + (k - 1) * (k - 2) / 2.0 * big;
    return out;
}

inline std::vector<double> random_phases(std::mt19937_64& gen, int n) {
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    std::vector<double> out(n);
    for (auto& x : out) x = u(gen);
    return out;
}

}  // namespace oracle
