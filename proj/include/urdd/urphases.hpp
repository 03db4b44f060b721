#pragma once

#include <vector>

#include "urdd/algebra.hpp"
#include "urdd/pulses.hpp"

namespace urdd {

/// Parameters of the UR phase prescription together with the derived
/// root-of-unity bookkeeping.
///
/// omega = exp(i Phi / 2) equals zeta_d^g with zeta_d = exp(2 pi i / d),
/// where d is the exact multiplicative order of omega and gcd(g, d) = 1.
struct URConfig {
    int n = 4;
    double phi2 = 0.0;
    Sign sign = Sign::plus;

    // derived
    Rational phi_over_pi{1};
    int m = 1;
    Family family = Family::four_m;
    int order_d = 4;
    int generator_g = 1;

    /// Throws DomainError unless n is even and n >= 4.
    static URConfig make(int n, double phi2 = 0.0, Sign sign = Sign::plus);
    /// Recovers the configuration of a UR sequence.
    static URConfig of(const PhaseSequence& seq);

    double phi() const;
    URMetadata metadata() const;
    /// Exponent of zeta_d representing omega^w.
    std::int64_t omega_exponent(std::int64_t w) const;
    /// q = omega^2 = exp(i Phi); kept for reference only.
    std::int64_t q_exponent() const { return omega_exponent(2); }
};

/// phi_1 = 0, phi_k = (k-1) phi2 + (k-1)(k-2)/2 Phi.
PhaseSequence ur_phases(const URConfig& cfg);

/// Delta_k = phi_k - phi_{k+1} with phi_{n+1} = 0 (no gauge shift applied).
std::vector<double> deltas(const PhaseSequence& seq);

/// Delta_k of a UR sequence in exact form.
std::vector<AffineAngle> exact_deltas(const URConfig& cfg);

struct GammaValue {
    double raw = 0.0;
    double reduced = 0.0;  // representative in [-2 pi, 2 pi)
};

/// Gamma = sum_j (-1)^{j-1} Delta_j in the phi_1 = 0 gauge.
GammaValue gamma(const PhaseSequence& seq);

/// Gamma = -n phi2 - n(n-2)/2 Phi for UR phases.
AffineAngle exact_gamma(const URConfig& cfg);

/// Reduction of a float angle to [-2 pi, 2 pi).
double reduce_mod_4pi(double angle);

/// eta = 2 alpha - phi2 - n Phi + Phi / 2.
double eta(const URConfig& cfg, double alpha);
/// The alpha-free part -phi2 - n Phi + Phi/2 in exact form.
AffineAngle eta_offset(const URConfig& cfg);

}  // namespace urdd
