#include "urdd/urphases.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace urdd {

URConfig URConfig::make(int n, double phi2, Sign sign) {
    if (n < 4 || n % 2 != 0)
        throw DomainError("n must be even and >= 4, got " + std::to_string(n));
    URConfig cfg;
    cfg.n = n;
    cfg.phi2 = phi2;
    cfg.sign = sign;
    const int s = sign == Sign::plus ? 1 : -1;
    if (n % 4 == 0) {
        cfg.family = Family::four_m;
        cfg.m = n / 4;
        cfg.phi_over_pi = Rational(s, cfg.m);
    } else {
        cfg.family = Family::four_m_plus_two;
        cfg.m = (n - 2) / 4;
        cfg.phi_over_pi = Rational(s * 2 * cfg.m, 2 * cfg.m + 1);
    }
    // omega = exp(i Phi / 2) = exp(2 pi i * p / (4 q)) with Phi / pi = p / q.
    const std::int64_t p = cfg.phi_over_pi.numerator();
    const std::int64_t q4 = 4 * cfg.phi_over_pi.denominator();
    const std::int64_t g = std::gcd(p, q4);
    cfg.order_d = static_cast<int>(q4 / g);
    cfg.generator_g = static_cast<int>(((p / g) % cfg.order_d + cfg.order_d) % cfg.order_d);
    return cfg;
}

URConfig URConfig::of(const PhaseSequence& seq) {
    if (!seq.is_ur()) throw DomainError("phase sequence carries no UR metadata");
    return make(seq.n(), seq.ur()->phi2, seq.ur()->sign);
}

double URConfig::phi() const {
    return boost::rational_cast<double>(phi_over_pi) * std::numbers::pi;
}

URMetadata URConfig::metadata() const {
    return {phi_over_pi, phi2, sign, family, m};
}

std::int64_t URConfig::omega_exponent(std::int64_t w) const {
    const std::int64_t r = (static_cast<std::int64_t>(generator_g) * (w % order_d)) % order_d;
    return r < 0 ? r + order_d : r;
}

PhaseSequence ur_phases(const URConfig& cfg) {
    if (cfg.n < 4 || cfg.n % 2 != 0)
        throw DomainError("n must be even and >= 4, got " + std::to_string(cfg.n));
    std::vector<double> phases(cfg.n);
    const double big_phi = cfg.phi();
    for (int k = 1; k <= cfg.n; ++k)
        phases[k - 1] = (k - 1) * cfg.phi2 + 0.5 * (k - 1) * (k - 2) * big_phi;
    return PhaseSequence(std::move(phases), cfg.metadata());
}

std::vector<double> deltas(const PhaseSequence& seq) {
    const auto& ph = seq.phases();
    std::vector<double> out(ph.size());
    for (std::size_t k = 0; k < ph.size(); ++k)
        out[k] = ph[k] - (k + 1 < ph.size() ? ph[k + 1] : 0.0);
    return out;
}

std::vector<AffineAngle> exact_deltas(const URConfig& cfg) {
    const auto ph = ur_phases(cfg).exact_phases();
    std::vector<AffineAngle> out(ph.size());
    for (std::size_t k = 0; k < ph.size(); ++k)
        out[k] = ph[k] - (k + 1 < ph.size() ? ph[k + 1] : AffineAngle{});
    return out;
}

double reduce_mod_4pi(double angle) {
    constexpr double four_pi = 4.0 * std::numbers::pi;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(angle + two_pi, four_pi);
    if (r < 0) r += four_pi;
    return r - two_pi;
}

AffineAngle exact_gamma(const URConfig& cfg) {
    const std::int64_t n = cfg.n;
    return {Rational(-n), -cfg.phi_over_pi * Rational(n * (n - 2), 2)};
}

GammaValue gamma(const PhaseSequence& seq) {
    GammaValue out;
    out.raw = gamma_raw(seq);
    if (seq.is_ur()) {
        // The pi part is an exact multiple of 4 pi, so only -n phi2 survives.
        const AffineAngle g = exact_gamma(URConfig::of(seq)).reduced_pi(4);
        out.reduced = reduce_mod_4pi(g.value(seq.ur()->phi2));
    } else {
        out.reduced = reduce_mod_4pi(out.raw);
    }
    return out;
}

AffineAngle eta_offset(const URConfig& cfg) {
    return {Rational(-1), cfg.phi_over_pi * (Rational(1, 2) - Rational(cfg.n))};
}

double eta(const URConfig& cfg, double alpha) {
    return 2.0 * alpha + eta_offset(cfg).value(cfg.phi2);
}

}  // namespace urdd
