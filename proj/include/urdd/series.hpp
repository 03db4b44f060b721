#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "urdd/algebra.hpp"
#include "urdd/pulses.hpp"

namespace urdd {

/// Phase differences Delta_1..Delta_n in the phi_1 = 0 gauge. For UR
/// sequences they come from the exact form with the Phi part reduced mod 4 pi,
/// which keeps the rounding error independent of n.
std::vector<double> gauge_deltas(const PhaseSequence& seq);

/// All partial sums P~_0..P~_n of the expansion
/// R_n(eps + sY) ... R_1(eps + sY) = sum_l eps^{n-l} s^l P~_l, R_j = R(Delta_j + 2 alpha).
std::vector<Mat2> ptilde_all(double alpha, const PhaseSequence& seq, double beta = 0.0);

/// P~_l. Even l does not depend on beta. In debug builds even l is checked
/// against ptilde_lemma and odd l for a zero diagonal.
Mat2 ptilde(double alpha, const PhaseSequence& seq, int l, double beta = 0.0);

/// P~_{n-2k} = (-1)^{n/2+k} sum_r R(L_r(X_C)) over increasing 2k-tuples.
Mat2 ptilde_lemma(double alpha, const PhaseSequence& seq, int l);

/// Tr(P~_n^dag P~_{n-2k}) from the matrix expansion.
Complex ptilde_trace(double alpha, const PhaseSequence& seq, int k);

struct TraceRoutes {
    Complex direct;
    std::optional<Complex> fourier;       // through the exact sums A_s (UR only)
    std::optional<Integer> exact_value;   // set when the trace is alpha-independent
};

TraceRoutes ptilde_trace_routes(double alpha, const PhaseSequence& seq, int k);

/// a_k = sum_{s<=k} C(n/2-s, k-s) (-1)^{k-s} traces[s], k = 0..n/2.
std::vector<Complex> coefficients_from_traces(int n, std::span<const Complex> traces);
std::vector<Integer> coefficients_from_traces(int n, std::span<const Integer> traces);

/// sum_{s=0}^{k-1} (-1)^{k-1-s} C(k, s), which equals 1 for k >= 1.
Integer alternating_binomial_tail(int k);

struct ExpansionReport {
    int n = 0;
    PhaseSequence phases;
    double alpha = 0.0;
    std::vector<Complex> a;                       // coefficient of eps^{2k} in Tr(U_0^dag U_eps)
    std::vector<Complex> traces;                  // Tr(P~_n^dag P~_{n-2k})
    std::vector<std::optional<Complex>> traces_fourier;
    std::vector<std::optional<Integer>> a_exact;  // exact a_k where alpha-independent
    std::vector<Complex> a_fit;                   // least-squares fit of sampled overlaps
    std::optional<double> endpoint_closed_form;
    bool cancellation = false;                    // a_1..a_{n/2-1} vanish
    std::map<std::string, std::string> routes;
};

ExpansionReport coefficients_a(double alpha, const PhaseSequence& seq, double tol = kDefaultTolerance);

/// The eps^{2k} series of the overlap Tr(U_0^dag U_eps) / 2.
EpsSeries overlap_series(const ExpansionReport& report);

struct EndpointReport {
    bool lower_orders_vanish = false;
    double closed_form = 0.0;               // 2 (-1)^{n/2} cos(n alpha + Gamma/2) - 2
    std::optional<double> ur_form;          // 2[(-1)^{n/2} cos(n alpha - n phi2 / 2) - 1]
    Complex direct;                         // a_{n/2} from the expansion
    Complex endpoint_trace;                 // Tr(P~_n^dag P~_0)
    bool ptilde0_is_rotation = false;       // P~_0 = R(2 n alpha)
};

EndpointReport endpoint_coefficient(double alpha, const PhaseSequence& seq, double tol = kDefaultTolerance);

struct ScanRow {
    double epsilon = 0.0;
    double one_minus_f = 0.0;
    double predicted = 0.0;
    double ratio = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    int expected_order = 0;     // power of eps in the leading error term
    double prefactor = 0.0;     // predicted = prefactor * eps^expected_order
    double slope = 0.0;         // log-log regression slope
    int fitted_points = 0;
    bool near_node = false;     // prefactor too small for a reliable slope
    std::string note;
};

/// 1 - F on the given eps grid (each eps in (0, 0.5]); the slope is fitted over
/// the points inside [1e-3, 1e-2], or over all points if fewer than two fall there.
ScanResult scaling_scan(const PhaseSequence& seq, double alpha, double beta,
                        std::span<const double> eps_grid);

/// Log-spaced grid from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int points);

/// Unnormalized overlap Tr(U_0^dag U_eps) as an eps power series, extracted
/// by Newton forward differences on n + 2 equispaced samples in [0, 1]
/// computed in 100-digit arithmetic.
struct DifferenceExtraction {
    std::vector<Complex> coefficients;  // eps^0 .. eps^n
    double residual = 0.0;              // |(n+1)-th forward difference|
};

DifferenceExtraction power_coefficients_fd(double alpha, double beta, const PhaseSequence& seq);

}  // namespace urdd
