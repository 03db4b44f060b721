#include "urdd/pulses.hpp"

#include <cmath>
#include <string>

#include "kernels.hpp"

namespace urdd {

void PulseParams::validate() const {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw DomainError("epsilon must lie in [0, 1], got " + std::to_string(epsilon));
}

PhaseSequence::PhaseSequence(std::vector<double> phases, std::optional<URMetadata> ur)
    : phases_(std::move(phases)), ur_(std::move(ur)) {
    if (phases_.empty()) throw DomainError("phase sequence must be non-empty");
}

std::vector<AffineAngle> PhaseSequence::exact_phases() const {
    if (!ur_) throw DomainError("exact phases are only known for UR sequences");
    std::vector<AffineAngle> out;
    out.reserve(phases_.size());
    for (int k = 1; k <= n(); ++k) {
        const std::int64_t km1 = k - 1;
        out.push_back({Rational(km1), ur_->phi_over_pi * Rational(km1 * (k - 2), 2)});
    }
    return out;
}

PhaseSequence PhaseSequence::shifted(double theta) const {
    std::vector<double> out = phases_;
    for (auto& p : out) p += theta;
    return PhaseSequence(std::move(out));
}

Mat2 rotation(double phi) { return detail::rotation_t<Complex>(phi); }

Mat2 y_factor(double alpha, double beta) { return detail::y_factor_t<Complex>(alpha, beta); }

Mat2 pulse_unitary(const PulseParams& params, double phi) {
    params.validate();
    return detail::pulse_unitary_t<Complex>(params.epsilon, params.alpha, params.beta, phi);
}

Mat2 sequence_unitary(const PulseParams& params, const PhaseSequence& seq) {
    params.validate();
    return detail::sequence_unitary_t<Complex>(params.epsilon, params.alpha, params.beta,
                                               seq.phases());
}

namespace {

void require_even(const PhaseSequence& seq) {
    if (seq.n() % 2 != 0)
        throw DomainError("pulse count must be even, got " + std::to_string(seq.n()));
}

// Gamma = -n phi2 - n(n-2)/2 Phi for UR phases, with the pi part reduced
// modulo 4 (R has period 4 pi).
AffineAngle exact_gamma(const PhaseSequence& seq) {
    const auto ph = seq.exact_phases();
    const std::size_t n = ph.size();
    AffineAngle acc;
    for (std::size_t j = 0; j < n; ++j) {
        const AffineAngle next = (j + 1 < n) ? ph[j + 1] - ph[0] : AffineAngle{};
        const AffineAngle delta = (ph[j] - ph[0]) - next;
        acc = (j % 2 == 0) ? acc + delta : acc - delta;
    }
    return acc.reduced_pi(4);
}

}  // namespace

double gamma_raw(const PhaseSequence& seq) {
    if (seq.is_ur()) {
        const auto ph = seq.exact_phases();
        AffineAngle acc;
        for (std::size_t j = 0; j < ph.size(); ++j) {
            const AffineAngle next = (j + 1 < ph.size()) ? ph[j + 1] : AffineAngle{};
            acc = (j % 2 == 0) ? acc + (ph[j] - next) : acc - (ph[j] - next);
        }
        return acc.value(seq.ur()->phi2);
    }
    return detail::gamma_t(seq.phases());
}

Mat2 ideal_unitary(const PhaseSequence& seq) {
    require_even(seq);
    const double gamma =
        seq.is_ur() ? exact_gamma(seq).value(seq.ur()->phi2) : detail::gamma_t(seq.phases());
    return detail::ideal_unitary_t<Complex>(seq.phases(), gamma);
}

Complex overlap(const PulseParams& params, const PhaseSequence& seq) {
    const Mat2 u0 = ideal_unitary(seq);
    const Mat2 ue = sequence_unitary(params, seq);
    return 0.5 * (u0.adjoint() * ue).trace();
}

double fidelity(const PulseParams& params, const PhaseSequence& seq) {
    return std::abs(overlap(params, seq));
}

namespace detail {

std::vector<PreciseReal> precise_phases(const PhaseSequence& seq) {
    std::vector<PreciseReal> out;
    out.reserve(seq.n());
    if (!seq.is_ur()) {
        for (double p : seq.phases()) out.emplace_back(p);
        return out;
    }
    const PreciseReal phi2(seq.ur()->phi2);
    const PreciseReal pi = pi_value<PreciseReal>();
    for (const auto& a : seq.exact_phases()) {
        const AffineAngle r = a.reduced_pi(4);
        out.push_back(PreciseReal(r.phi2.numerator()) / r.phi2.denominator() * phi2 +
                      PreciseReal(r.pi.numerator()) / r.pi.denominator() * pi);
    }
    return out;
}

PreciseReal precise_gamma(const PhaseSequence& seq) {
    if (!seq.is_ur()) return gamma_t(precise_phases(seq));
    const AffineAngle g = exact_gamma(seq);
    return PreciseReal(g.phi2.numerator()) / g.phi2.denominator() * PreciseReal(seq.ur()->phi2) +
           PreciseReal(g.pi.numerator()) / g.pi.denominator() * pi_value<PreciseReal>();
}

PreciseComplex precise_trace_overlap(const PreciseReal& eps, double alpha, double beta,
                                     const PhaseSequence& seq) {
    require_even(seq);
    const auto phases = precise_phases(seq);
    const PreciseMat2 u0 = ideal_unitary_t<PreciseComplex>(phases, precise_gamma(seq));
    const PreciseMat2 ue =
        sequence_unitary_t<PreciseComplex>(eps, PreciseReal(alpha), PreciseReal(beta), phases);
    return (u0.adjoint() * ue).trace();
}

}  // namespace detail

double fidelity_error(const PulseParams& params, const PhaseSequence& seq) {
    params.validate();
    const auto tr =
        detail::precise_trace_overlap(detail::PreciseReal(params.epsilon), params.alpha,
                                      params.beta, seq);
    using boost::multiprecision::abs;
    const detail::PreciseReal f = abs(tr) / 2;
    return static_cast<double>(detail::PreciseReal(1) - f);
}

}  // namespace urdd
