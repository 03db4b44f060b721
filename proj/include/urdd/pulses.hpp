#pragma once

#include <optional>
#include <vector>

#include "urdd/algebra.hpp"

namespace urdd {

/// Error triple of one effective free-evolution/pulse/free-evolution cycle.
struct PulseParams {
    double epsilon = 0.0;  // sqrt(1 - p), p the single-cycle transition probability
    double alpha = 0.0;
    double beta = 0.0;

    /// Throws DomainError unless 0 <= epsilon <= 1.
    void validate() const;
};

enum class Sign { plus, minus };
enum class Family { four_m, four_m_plus_two };

/// Provenance of a phase list built by the UR prescription. With it the
/// phases are known exactly as (k-1)*phi2 + rational*pi.
struct URMetadata {
    Rational phi_over_pi{0};  // Phi / pi, signed
    double phi2 = 0.0;
    Sign sign = Sign::plus;
    Family family = Family::four_m;
    int m = 1;
};

/// Controlled phases phi_1..phi_n of one pulse train.
class PhaseSequence {
public:
    PhaseSequence() = default;
    explicit PhaseSequence(std::vector<double> phases, std::optional<URMetadata> ur = std::nullopt);

    int n() const { return static_cast<int>(phases_.size()); }
    const std::vector<double>& phases() const { return phases_; }
    double operator[](int k) const { return phases_.at(k - 1); }  // 1-based
    const std::optional<URMetadata>& ur() const { return ur_; }
    bool is_ur() const { return ur_.has_value(); }

    /// Exact phases; only available for UR sequences.
    std::vector<AffineAngle> exact_phases() const;

    /// Every phase shifted by theta; UR metadata is dropped.
    PhaseSequence shifted(double theta) const;

private:
    std::vector<double> phases_;
    std::optional<URMetadata> ur_;
};

/// z-axis rotation diag(e^{i phi/2}, e^{-i phi/2}).
Mat2 rotation(double phi);
/// The off-diagonal factor Y; it depends on beta - alpha only.
Mat2 y_factor(double alpha, double beta);

/// Imperfect pulse with controlled phase phi.
Mat2 pulse_unitary(const PulseParams& params, double phi);

/// U_eps(phi_n) ... U_eps(phi_1).
Mat2 sequence_unitary(const PulseParams& params, const PhaseSequence& seq);

/// The eps = 0 propagator (-1)^{n/2} R(-Gamma), computed in the phi_1 = 0 gauge.
Mat2 ideal_unitary(const PhaseSequence& seq);

/// G(eps) = Tr(U_0^dag U_eps) / 2.
Complex overlap(const PulseParams& params, const PhaseSequence& seq);

/// F = |G(eps)|.
double fidelity(const PulseParams& params, const PhaseSequence& seq);

/// 1 - F evaluated in 100-digit arithmetic, so that errors far below double
/// epsilon (eps^n with eps ~ 1e-3) are resolved. UR sequences use their exact
/// phases rather than the rounded doubles.
double fidelity_error(const PulseParams& params, const PhaseSequence& seq);

/// Alternating sum of the gauge-fixed phase differences:
/// sum_j (-1)^{j-1} Delta_j with phi_1 subtracted from every phase.
double gamma_raw(const PhaseSequence& seq);

}  // namespace urdd
