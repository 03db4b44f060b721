#include "urdd/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "kernels.hpp"
#include "urdd/combinatorics.hpp"
#include "urdd/fourier.hpp"
#include "urdd/urphases.hpp"

namespace urdd {

namespace {

constexpr double kPi = std::numbers::pi;

void require_even(const PhaseSequence& seq) {
    if (seq.n() < 2 || seq.n() % 2 != 0)
        throw DomainError("expansion needs an even number of pulses, got n = " + std::to_string(seq.n()));
}

// chi_j = Delta_j + 2 alpha in the phi_1 = 0 gauge.
std::vector<double> chis(double alpha, const PhaseSequence& seq) {
    auto out = gauge_deltas(seq);
    for (auto& x : out) x += 2.0 * alpha;
    return out;
}

double gauge_gamma(const PhaseSequence& seq) {
    if (seq.is_ur()) return exact_gamma(URConfig::of(seq)).reduced_pi(4).value(seq.ur()->phi2);
    return gamma_raw(seq);
}

// (-1)^k
int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<double> gauge_deltas(const PhaseSequence& seq) {
    const int n = seq.n();
    std::vector<double> out(n);
    if (seq.is_ur()) {
        const auto exact = seq.exact_phases();
        const double phi2 = seq.ur()->phi2;
        for (int k = 0; k < n; ++k) {
            const AffineAngle next = (k + 1 < n) ? exact[k + 1] : exact[0];
            out[k] = (exact[k] - next).reduced_pi(4).value(phi2);
        }
        return out;
    }
    const auto& p = seq.phases();
    for (int k = 0; k < n; ++k) {
        const double next = (k + 1 < n) ? p[k + 1] : p[0];
        out[k] = p[k] - next;
    }
    return out;
}

std::vector<Mat2> ptilde_all(double alpha, const PhaseSequence& seq, double beta) {
    const int n = seq.n();
    if (n < 1) throw DomainError("empty phase sequence");
    const auto chi = chis(alpha, seq);
    const Mat2 y = y_factor(alpha, beta);
    // m[l] holds the partial sum with l factors of Y so far.
    std::vector<Mat2> m(n + 1, Mat2());
    m[0] = Mat2::identity();
    for (int j = 0; j < n; ++j) {
        const Mat2 r = rotation(chi[j]);
        const Mat2 ry = r * y;
        for (int l = j + 1; l >= 0; --l) {
            Mat2 next = (l <= j) ? r * m[l] : Mat2();
            if (l > 0) next += ry * m[l - 1];
            m[l] = next;
        }
    }
    return m;
}

Mat2 ptilde(double alpha, const PhaseSequence& seq, int l, double beta) {
    if (l < 0 || l > seq.n())
        throw DomainError("l must lie in [0, n], got " + std::to_string(l));
    const Mat2 out = ptilde_all(alpha, seq, beta)[l];
#ifndef NDEBUG
    if ((seq.n() - l) % 2 == 0 && seq.n() % 2 == 0) {
        assert(max_abs_diff(out, ptilde_lemma(alpha, seq, l)) < 1e-12 * std::max(1.0, std::abs(out.trace())));
    } else if (l % 2 == 1) {
        assert(std::abs(out(0, 0)) < 1e-12 && std::abs(out(1, 1)) < 1e-12);
    }
#endif
    return out;
}

Mat2 ptilde_lemma(double alpha, const PhaseSequence& seq, int l) {
    require_even(seq);
    const int n = seq.n();
    if (l < 0 || l > n || l % 2 != 0)
        throw DomainError("the closed form needs even l in [0, n], got " + std::to_string(l));
    const int k = (n - l) / 2;
    const auto chi = chis(alpha, seq);
    const std::vector<double> xc(chi.rbegin(), chi.rend());
    Mat2 acc;
    for_each_tuple(n, 2 * k, [&](std::span<const int> r) {
        const IndexTuple tuple(n, std::vector<int>(r.begin(), r.end()));
        acc += rotation(l_r(tuple, std::span<const double>(xc)));
    });
    return acc.scaled(Complex(parity_sign(n / 2 + k)));
}

Complex ptilde_trace(double alpha, const PhaseSequence& seq, int k) {
    require_even(seq);
    const int n = seq.n();
    if (k < 0 || k > n / 2) throw DomainError("k must lie in [0, n/2], got " + std::to_string(k));
    const auto all = ptilde_all(alpha, seq);
    return (all[n].adjoint() * all[n - 2 * k]).trace();
}

namespace {

struct FourierTrace {
    Complex value;
    std::optional<Integer> exact;
};

// Trace through the signature sums A_s and eta.
FourierTrace fourier_trace(const URConfig& cfg, const SignatureSums& sums, double alpha) {
    const int k = sums.k;
    const GroupRingElement a0 = sums.at(0);
    const GroupRingElement zero_part = a0 + a0.conj();
    const AffineAngle offset = eta_offset(cfg);

    Complex acc = zero_part.eval();
    bool alpha_free = true;
    for (int mm = 2; mm <= 2 * k; mm += 2) {
        const GroupRingElement b = sums.at(mm) + sums.at(-mm).conj();
        if (!b.is_zero_value()) alpha_free = false;
        // e^{i eta M/2}; the pi-part of (M/2) eta only matters mod 2 pi.
        const Rational half(mm / 2);
        const AffineAngle scaled = (offset * half).reduced_pi(2);
        const double angle = half.numerator() * 2.0 * alpha + scaled.value(cfg.phi2);
        const Complex phase = std::polar(1.0, angle);
        const Complex bv = b.eval();
        acc += phase * bv + std::conj(phase * bv);
    }
    FourierTrace out{acc * double(parity_sign(k)), std::nullopt};
    if (alpha_free) {
        const auto res = zero_part.residue();
        bool rational = true;
        for (std::size_t i = 1; i < res.size(); ++i)
            if (res[i] != 0) rational = false;
        if (rational) out.exact = parity_sign(k) * (res.empty() ? Integer(0) : res[0]);
    }
    return out;
}

}  // namespace

TraceRoutes ptilde_trace_routes(double alpha, const PhaseSequence& seq, int k) {
    TraceRoutes out;
    out.direct = ptilde_trace(alpha, seq, k);
    if (!seq.is_ur()) return out;
    if (k == 0) {
        out.fourier = Complex(2.0);
        out.exact_value = 2;
        return out;
    }
    const URConfig cfg = URConfig::of(seq);
    const auto ft = fourier_trace(cfg, signature_sums_dp(cfg, k), alpha);
    out.fourier = ft.value;
    out.exact_value = ft.exact;
    return out;
}

std::vector<Complex> coefficients_from_traces(int n, std::span<const Complex> traces) {
    const int half = n / 2;
    if (static_cast<int>(traces.size()) != half + 1)
        throw DomainError("expected n/2 + 1 traces");
    std::vector<Complex> a(half + 1);
    for (int k = 0; k <= half; ++k)
        for (int s = 0; s <= k; ++s)
            a[k] += binomial(half - s, k - s).convert_to<double>() * double(parity_sign(k - s)) * traces[s];
    return a;
}

std::vector<Integer> coefficients_from_traces(int n, std::span<const Integer> traces) {
    const int half = n / 2;
    if (static_cast<int>(traces.size()) != half + 1)
        throw DomainError("expected n/2 + 1 traces");
    std::vector<Integer> a(half + 1, 0);
    for (int k = 0; k <= half; ++k)
        for (int s = 0; s <= k; ++s) a[k] += binomial(half - s, k - s) * parity_sign(k - s) * traces[s];
    return a;
}

Integer alternating_binomial_tail(int k) {
    Integer acc = 0;
    for (int s = 0; s < k; ++s) acc += parity_sign(k - 1 - s) * binomial(k, s);
    return acc;
}

namespace {

constexpr double kFitRange = 0.3;

// Least-squares fit of Tr(U_0^dag U_eps) by even powers on Chebyshev nodes
// in [0, kFitRange]; columns are scaled to x = eps / kFitRange.
std::vector<Complex> fit_even_powers(const PhaseSequence& seq, double alpha) {
    const int half = seq.n() / 2;
    const int cols = half + 1;
    const int rows = std::max(4 * cols, 24);
    Eigen::MatrixXd design(rows, cols);
    Eigen::MatrixXd rhs(rows, 2);
    for (int i = 0; i < rows; ++i) {
        const double x = 0.5 * (1.0 + std::cos(kPi * (2.0 * i + 1.0) / (2.0 * rows)));
        const double eps = kFitRange * x;
        const Complex value = 2.0 * overlap(PulseParams{eps, alpha, 0.0}, seq);
        double p = 1.0;
        for (int j = 0; j < cols; ++j) {
            design(i, j) = p;
            p *= x * x;
        }
        rhs(i, 0) = value.real();
        rhs(i, 1) = value.imag();
    }
    const Eigen::MatrixXd sol = design.colPivHouseholderQr().solve(rhs);
    std::vector<Complex> out(cols);
    for (int j = 0; j < cols; ++j)
        out[j] = Complex(sol(j, 0), sol(j, 1)) / std::pow(kFitRange, 2.0 * j);
    return out;
}

std::string route_name(bool exact) { return exact ? "exact" : "unverified"; }

}  // namespace

ExpansionReport coefficients_a(double alpha, const PhaseSequence& seq, double tol) {
    require_even(seq);
    const int n = seq.n();
    const int half = n / 2;
    ExpansionReport rep;
    rep.n = n;
    rep.phases = seq;
    rep.alpha = alpha;

    const auto all = ptilde_all(alpha, seq);
    const Mat2 lead = all[n].adjoint();
    rep.traces.resize(half + 1);
    for (int k = 0; k <= half; ++k) rep.traces[k] = (lead * all[n - 2 * k]).trace();
    rep.a = coefficients_from_traces(n, rep.traces);
    rep.a_fit = fit_even_powers(seq, alpha);

    rep.traces_fourier.assign(half + 1, std::nullopt);
    rep.a_exact.assign(half + 1, std::nullopt);
    std::vector<std::optional<Integer>> exact_traces(half + 1);
    if (seq.is_ur()) {
        const URConfig cfg = URConfig::of(seq);
        rep.traces_fourier[0] = Complex(2.0);
        exact_traces[0] = 2;
        for (int k = 1; k <= half; ++k) {
            const auto ft = fourier_trace(cfg, signature_sums_dp(cfg, k), alpha);
            rep.traces_fourier[k] = ft.value;
            exact_traces[k] = ft.exact;
        }
        // a_k uses traces 0..k only, so it is exact as long as they are.
        std::vector<Integer> known;
        for (int k = 0; k <= half && exact_traces[k]; ++k) {
            known.push_back(*exact_traces[k]);
            Integer acc = 0;
            for (int s = 0; s <= k; ++s) acc += binomial(half - s, k - s) * parity_sign(k - s) * known[s];
            rep.a_exact[k] = acc;
        }
    }

    bool cancel = true;
    for (int k = 1; k < half; ++k) {
        if (std::abs(rep.a[k]) >= tol) cancel = false;
        if (rep.a_exact[k] && *rep.a_exact[k] != 0) cancel = false;
    }
    rep.cancellation = cancel;
    if (cancel) rep.endpoint_closed_form = 2.0 * parity_sign(half) * std::cos(n * alpha + gauge_gamma(seq) / 2) - 2.0;

    // Agreement between routes.
    bool fit_ok = true;
    for (int k = 0; k <= half; ++k) {
        const double scale = std::max(1.0, std::abs(rep.a[k]));
        const double allowed = 1e-9 * scale / std::pow(kFitRange, 2.0 * k);
        if (std::abs(rep.a_fit[k] - rep.a[k]) > allowed) fit_ok = false;
    }
    bool fourier_ok = seq.is_ur();
    for (int k = 0; k <= half && fourier_ok; ++k)
        if (!rep.traces_fourier[k] || std::abs(*rep.traces_fourier[k] - rep.traces[k]) > 1e-11 * std::max(1.0, std::abs(rep.traces[k])))
            fourier_ok = false;
    rep.routes["traces"] = seq.is_ur() ? (fourier_ok ? "matrix+fourier" : "matrix (fourier mismatch)") : "matrix";
    rep.routes["a"] = fit_ok ? "matrix+fit" : "matrix (fit mismatch)";
    bool all_exact = seq.is_ur();
    for (int k = 1; k < half; ++k)
        if (!rep.a_exact[k]) all_exact = false;
    rep.routes["cancellation"] = seq.is_ur() ? route_name(all_exact) + "+float" : "float";
    return rep;
}

EpsSeries overlap_series(const ExpansionReport& report) {
    EpsSeries out;
    for (std::size_t k = 0; k < report.a.size(); ++k) out.set(2 * k, report.a[k] / 2.0);
    return out;
}

EndpointReport endpoint_coefficient(double alpha, const PhaseSequence& seq, double tol) {
    require_even(seq);
    const int n = seq.n();
    const int half = n / 2;
    const auto rep = coefficients_a(alpha, seq, tol);
    EndpointReport out;
    out.lower_orders_vanish = rep.cancellation;
    out.closed_form = 2.0 * parity_sign(half) * std::cos(n * alpha + gauge_gamma(seq) / 2) - 2.0;
    if (seq.is_ur())
        out.ur_form = 2.0 * (parity_sign(half) * std::cos(n * alpha - n * seq.ur()->phi2 / 2) - 1.0);
    out.direct = rep.a[half];
    out.endpoint_trace = rep.traces[half];
    const Mat2 p0 = ptilde_all(alpha, seq)[0];
    out.ptilde0_is_rotation = max_abs_diff(p0, rotation(2.0 * n * alpha)) < 1e-12 * n;
    return out;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (points < 1) throw DomainError("grid needs at least one point");
    if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("grid bounds must satisfy 0 < lo <= hi");
    if (points == 1) return {lo};
    std::vector<double> out(points);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < points; ++i) out[i] = std::exp(a + (b - a) * i / (points - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

ScanResult scaling_scan(const PhaseSequence& seq, double alpha, double beta, std::span<const double> eps_grid) {
    if (eps_grid.empty()) throw DomainError("epsilon grid is empty");
    for (double e : eps_grid)
        if (!(e > 0.0 && e <= 0.5)) throw DomainError("epsilon grid values must lie in (0, 0.5]");
    require_even(seq);
    const int n = seq.n();
    ScanResult out;
    if (seq.is_ur()) {
        const double arg = n * alpha / 2 - n * seq.ur()->phi2 / 4 + n * kPi / 4;
        out.expected_order = n;
        out.prefactor = 2.0 * std::sin(arg) * std::sin(arg);
    } else {
        const auto rep = coefficients_a(alpha, seq);
        int lead = n / 2;
        for (int k = 1; k <= n / 2; ++k)
            if (std::abs(rep.a[k]) > 1e-9) {
                lead = k;
                break;
            }
        out.expected_order = 2 * lead;
        out.prefactor = -rep.a[lead].real() / 2.0;
    }
    out.near_node = out.prefactor < 1e-3;
    if (out.near_node) out.note = "near-node alpha, slope unreliable";

    for (double e : eps_grid) {
        ScanRow row;
        row.epsilon = e;
        row.one_minus_f = fidelity_error(PulseParams{e, alpha, beta}, seq);
        row.predicted = out.prefactor * std::pow(e, out.expected_order);
        row.ratio = row.predicted != 0.0 ? row.one_minus_f / row.predicted : 0.0;
        out.rows.push_back(row);
    }

    auto fit = [&](bool restrict_decade) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int count = 0;
        for (const auto& r : out.rows) {
            if (restrict_decade && (r.epsilon < 1e-3 * (1 - 1e-12) || r.epsilon > 1e-2 * (1 + 1e-12))) continue;
            if (!(r.one_minus_f > 0.0)) continue;
            const double x = std::log(r.epsilon);
            const double y = std::log(r.one_minus_f);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++count;
        }
        out.fitted_points = count;
        const double den = count * sxx - sx * sx;
        out.slope = (count >= 2 && den != 0.0) ? (count * sxy - sx * sy) / den : 0.0;
        return count;
    };
    if (fit(true) < 2) fit(false);
    if (out.fitted_points < 2) {
        out.slope = 0.0;
        if (out.note.empty()) out.note = "fewer than two positive points, no slope";
    }
    return out;
}

DifferenceExtraction power_coefficients_fd(double alpha, double beta, const PhaseSequence& seq) {
    using detail::PreciseComplex;
    using detail::PreciseReal;
    const int n = seq.n();
    if (n < 1) throw DomainError("empty phase sequence");
    const int nodes = n + 2;
    const PreciseReal h = PreciseReal(1) / (n + 1);
    std::vector<PreciseComplex> diff(nodes);
    for (int j = 0; j < nodes; ++j) diff[j] = detail::precise_trace_overlap(h * j, alpha, beta, seq);

    // Newton coefficients c_j = Delta^j f_0 / (j! h^j).
    std::vector<PreciseComplex> newton;
    PreciseReal scale = 1;
    for (int order = 0; order < nodes; ++order) {
        if (order > 0) {
            for (int j = 0; j + order < nodes; ++j) diff[j] = diff[j + 1] - diff[j];
            scale *= h * order;
        }
        newton.push_back(diff[0] / scale);
    }
    DifferenceExtraction out;
    out.residual = static_cast<double>(abs(newton.back() * scale));

    // Newton form to monomials, using only the first n + 1 coefficients.
    std::vector<PreciseComplex> poly{newton[n]};
    for (int j = n - 1; j >= 0; --j) {
        std::vector<PreciseComplex> next(poly.size() + 1, PreciseComplex(0));
        const PreciseReal node = h * j;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * node;
        }
        next[0] += newton[j];
        poly = std::move(next);
    }
    for (const auto& c : poly)
        out.coefficients.emplace_back(static_cast<double>(c.real()), static_cast<double>(c.imag()));
    return out;
}

}  // namespace urdd
