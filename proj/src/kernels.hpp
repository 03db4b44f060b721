#pragma once

// Scalar-generic pulse kernels shared by the double and extended-precision
// code paths. Internal header.

#include <cmath>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "urdd/pulses.hpp"

namespace urdd::detail {

using PreciseReal = boost::multiprecision::cpp_bin_float_100;
using PreciseComplex = boost::multiprecision::cpp_complex_100;
using PreciseMat2 = BasicMat2<PreciseComplex>;

template <typename R>
R pi_value() {
    return boost::math::constants::pi<R>();
}

template <typename C, typename R>
C unit_phase(const R& angle) {
    using std::cos;
    using std::sin;
    return C(cos(angle), sin(angle));
}

template <typename C, typename R>
BasicMat2<C> rotation_t(const R& phi) {
    return BasicMat2<C>::diag(unit_phase<C>(phi / 2), unit_phase<C>(-phi / 2));
}

template <typename C, typename R>
BasicMat2<C> y_factor_t(const R& alpha, const R& beta) {
    return {C(0), unit_phase<C>(beta - alpha), -unit_phase<C>(alpha - beta), C(0)};
}

template <typename C, typename R>
BasicMat2<C> pulse_unitary_t(const R& eps, const R& alpha, const R& beta, const R& phi) {
    using std::sqrt;
    const R s = sqrt(R(1) - eps * eps);
    return {unit_phase<C>(alpha) * C(eps), unit_phase<C>(beta + phi) * C(s),
            -unit_phase<C>(-(beta + phi)) * C(s), unit_phase<C>(-alpha) * C(eps)};
}

template <typename R>
R gamma_t(const std::vector<R>& phases) {
    // Gauge phi_1 = 0; Delta_n = phi_n - phi_1 since phi_{n+1} = 0.
    const std::size_t n = phases.size();
    R acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        const R next = (j + 1 < n) ? phases[j + 1] - phases[0] : R(0);
        const R delta = (phases[j] - phases[0]) - next;
        if (j % 2 == 0)
            acc += delta;
        else
            acc -= delta;
    }
    return acc;
}

template <typename C, typename R>
BasicMat2<C> ideal_unitary_t(const std::vector<R>& phases, const R& gamma) {
    const BasicMat2<C> rot = rotation_t<C>(R(-gamma));
    return (phases.size() / 2) % 2 == 0 ? rot : -rot;
}

template <typename C, typename R>
BasicMat2<C> sequence_unitary_t(const R& eps, const R& alpha, const R& beta,
                                const std::vector<R>& phases) {
    BasicMat2<C> acc = BasicMat2<C>::identity();
    for (const R& phi : phases) acc = pulse_unitary_t<C>(eps, alpha, beta, phi) * acc;
    return acc;
}

/// Phases in extended precision; exact for UR sequences.
std::vector<PreciseReal> precise_phases(const PhaseSequence& seq);

/// Gamma in extended precision, with exact pi-bookkeeping for UR sequences.
PreciseReal precise_gamma(const PhaseSequence& seq);

/// Tr(U_0^dag U_eps) in extended precision. Epsilon is not range-checked.
PreciseComplex precise_trace_overlap(const PreciseReal& eps, double alpha, double beta,
                                     const PhaseSequence& seq);

}  // namespace urdd::detail
