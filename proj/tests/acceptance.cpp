// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "urdd/cli.hpp"
#include "urdd/combinatorics.hpp"
#include "urdd/fourier.hpp"
#include "urdd/series.hpp"
#include "urdd/urphases.hpp"

using namespace urdd;

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr double kCoeffTol = 1e-10;        // |a_k|, traces, endpoint
constexpr double kFidelityRelTol = 0.01;   // 1 - F against the leading term
constexpr double kPrefactorFloor = 1e-2;   // only compare 1 - F above this prefactor
constexpr double kSlopeRelTol = 0.01;      // UR slopes
constexpr double kControlSlopeRelTol = 0.02;
constexpr double kOddPowerTol = 1e-12;
constexpr double kBetaTol = 1e-13;
constexpr double kSweepFloor = 1.0;
constexpr double kBudgetSeconds = 60.0;

const std::vector<int> kEvenRange{4, 6, 8, 10, 12, 14, 16};

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double ur_prefactor(int n, double alpha, double phi2) {
    const double x = std::sin(n * alpha / 2 - n * phi2 / 4 + n * kPi / 4);
    return 2 * x * x;
}

std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5g", x);
    return buf;
}

std::string where(int n, Sign sg, int k = -1, int s = 0) {
    std::string out = "n=" + std::to_string(n) + (sg == Sign::plus ? " sign=+" : " sign=-");
    if (k >= 0) out += " k=" + std::to_string(k) + " s=" + std::to_string(s);
    return out;
}

// 1: A_0 = (-1)^k C(n/2, k) as canonical residues.
Outcome zero_signature() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    int checked = 0;
    for (int n : kEvenRange)
        for (Sign sg : {Sign::plus, Sign::minus}) {
            const auto cfg = URConfig::make(n, 0.0, sg);
            for (int k = 1; k < n / 2; ++k) {
                const auto sums = signature_sums_dp(cfg, k);
                const Integer expected = (k % 2 ? -1 : 1) * binomial(n / 2, k);
                if (!sums.at(0).same_value(GroupRingElement::constant(cfg.order_d, expected)))
                    o.fail(where(n, sg, k));
                ++checked;
            }
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= kBudgetSeconds) o.fail("took " + str(secs) + " s");
    if (o.pass) o.detail = std::to_string(checked) + " cases in " + str(secs) + " s";
    return o;
}

// 2 and 3 share the sums.
template <typename Check>
Outcome over_signature_range(Check check) {
    Outcome o;
    int checked = 0;
    for (int n : kEvenRange)
        for (Sign sg : {Sign::plus, Sign::minus}) {
            const auto cfg = URConfig::make(n, 0.0, sg);
            for (int k = 1; k < n / 2; ++k) {
                const auto sums = signature_sums_dp(cfg, k);
                checked += check(cfg, sums, o);
            }
        }
    if (o.pass) o.detail = std::to_string(checked) + " identities";
    return o;
}

Outcome nonzero_signature() {
    return over_signature_range([](const URConfig& cfg, const SignatureSums& sums, Outcome& o) {
        const int k = sums.k;
        int count = 0;
        for (int s = 2; s <= 2 * k; s += 2) {
            const auto lhs = sums.at(s) + sums.at(-s).conj();
            if (!lhs.is_zero_value()) o.fail(where(cfg.n, cfg.sign, k, s));
            ++count;
        }
        return count;
    });
}

Outcome reflection() {
    return over_signature_range([](const URConfig& cfg, const SignatureSums& sums, Outcome& o) {
        int count = 0;
        for (int s = -2 * sums.k; s <= 2 * sums.k; s += 2) {
            if (!verify_reflection(cfg, sums, s).pass) o.fail(where(cfg.n, cfg.sign, sums.k, s));
            ++count;
        }
        return count;
    });
}

// 4: full product and every pairing factor.
Outcome transfer() {
    Outcome o;
    std::set<ParityCase> seen;
    int pairs = 0;
    for (int n : kEvenRange)
        for (Sign sg : {Sign::plus, Sign::minus}) {
            const auto tp = transfer_product(URConfig::make(n, 0.0, sg));
            seen.insert(tp.parity);
            if (!tp.p.same_value(MatrixPoly::one_minus_t2_power(tp.order, n / 2))) o.fail(where(n, sg) + " product");
            for (const auto& c : tp.checks) {
                if (c.identity == "transfer_pair") ++pairs;
                if (!c.pass) o.fail(where(n, sg) + " " + c.identity + " j=" + std::to_string(c.k));
            }
        }
    if (seen.size() != 3) o.fail("only " + std::to_string(seen.size()) + " parity cases");
    if (pairs == 0) o.fail("no pairing factors checked");
    if (o.pass) o.detail = "3 parity cases, " + std::to_string(pairs) + " pairing factors";
    return o;
}

struct Sample {
    double alpha, beta, phi2;
    Sign sign;
};

std::vector<Sample> samples(std::uint64_t seed, int count) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::vector<Sample> out;
    for (int i = 0; i < count; ++i) {
        const double a = ang(gen), b = ang(gen), p = ang(gen);
        out.push_back({a, b, p, i % 2 ? Sign::minus : Sign::plus});
    }
    return out;
}

// 5: a_1..a_{n/2-1} vanish, numerically and exactly.
Outcome cancellation() {
    Outcome o;
    double worst = 0.0;
    for (int n : kEvenRange)
        for (const auto& sm : samples(500 + n, 200)) {
            const auto seq = ur_phases(URConfig::make(n, sm.phi2, sm.sign));
            const auto rep = coefficients_a(sm.alpha, seq, kCoeffTol);
            for (int k = 1; k < n / 2; ++k) {
                worst = std::max(worst, std::abs(rep.a[k]));
                if (!(std::abs(rep.a[k]) < kCoeffTol)) o.fail(where(n, sm.sign) + " |a_" + std::to_string(k) + "|=" + str(std::abs(rep.a[k])));
                if (!rep.a_exact[k] || *rep.a_exact[k] != 0) o.fail(where(n, sm.sign) + " exact a_" + std::to_string(k));
            }
        }
    if (o.pass) o.detail = "max |a_k| = " + str(worst);
    return o;
}

// 6: endpoint closed form and the leading fidelity error.
Outcome endpoint() {
    Outcome o;
    double worst = 0.0, worst_rel = 0.0;
    int compared = 0;
    for (int n : kEvenRange)
        for (const auto& sm : samples(600 + n, 200)) {
            const auto seq = ur_phases(URConfig::make(n, sm.phi2, sm.sign));
            const auto e = endpoint_coefficient(sm.alpha, seq, kCoeffTol);
            const double sign = (n / 2) % 2 ? -1.0 : 1.0;
            const double expected = 2 * (sign * std::cos(n * sm.alpha - n * sm.phi2 / 2) - 1);
            const double diff = std::abs(e.direct - expected);
            worst = std::max(worst, diff);
            if (!(diff < kCoeffTol)) o.fail(where(n, sm.sign) + " a_{n/2} off by " + str(diff));
            const double pref = ur_prefactor(n, sm.alpha, sm.phi2);
            if (pref > kPrefactorFloor) {
                const double eps = 1e-2;
                const double measured = fidelity_error({eps, sm.alpha, sm.beta}, seq);
                const double rel = std::abs(measured / (pref * std::pow(eps, n)) - 1);
                worst_rel = std::max(worst_rel, rel);
                if (!(rel < kFidelityRelTol)) o.fail(where(n, sm.sign) + " 1-F relative error " + str(rel));
                ++compared;
            }
        }
    if (o.pass)
        o.detail = "max |diff| = " + str(worst) + ", 1-F compared at " + std::to_string(compared) +
                   " samples, max rel = " + str(worst_rel);
    return o;
}

double fitted_slope(const ScanResult& scan) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(scan.rows.size());
    for (const auto& r : scan.rows) {
        const double x = std::log(r.epsilon), y = std::log(r.one_minus_f);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

// 7: log-log slopes.
Outcome slopes() {
    Outcome o;
    const auto grid = log_grid(1e-3, 1e-2, 10);
    std::string detail;
    for (int n : {4, 8, 12}) {
        const double alpha = 0.3, phi2 = 0.0;
        if (ur_prefactor(n, alpha, phi2) < 0.1) o.fail("test point near a node at n=" + std::to_string(n));
        const auto scan = scaling_scan(ur_phases(URConfig::make(n, phi2, Sign::plus)), alpha, 1.1, grid);
        const double slope = fitted_slope(scan);
        if (!(std::abs(slope / n - 1) < kSlopeRelTol)) o.fail("n=" + std::to_string(n) + " slope " + str(slope));
        detail += "n=" + std::to_string(n) + ":" + str(slope) + " ";
    }
    const auto control = scaling_scan(PhaseSequence({0, 0, 0, 0}), 0.3, 1.1, grid);
    const double cs = fitted_slope(control);
    if (!(std::abs(cs / 2 - 1) < kControlSlopeRelTol)) o.fail("zero-phase control slope " + str(cs));
    // the control's leading coefficient: a_1 = -16 cos^2 alpha
    const auto rep = coefficients_a(0.3, PhaseSequence({0, 0, 0, 0}));
    if (!(std::abs(rep.a[1] + 16 * std::cos(0.3) * std::cos(0.3)) < kCoeffTol)) o.fail("control a_1");
    if (o.pass) o.detail = detail + "control:" + str(cs);
    return o;
}

// 8: Tr(P~_n^dag P~_{n-2k}) = 2 C(n/2, k).
Outcome traces() {
    Outcome o;
    double worst = 0.0;
    for (int n : kEvenRange)
        for (const auto& sm : samples(800 + n, 50)) {
            const auto seq = ur_phases(URConfig::make(n, sm.phi2, sm.sign));
            for (int k = 0; k < n / 2; ++k) {
                const auto r = ptilde_trace_routes(sm.alpha, seq, k);
                const Integer expected = 2 * binomial(n / 2, k);
                const double diff = std::abs(r.direct - expected.convert_to<double>());
                worst = std::max(worst, diff);
                if (!(diff < kCoeffTol)) o.fail(where(n, sm.sign) + " k=" + std::to_string(k) + " off by " + str(diff));
                if (k > 0 && (!r.exact_value || *r.exact_value != expected))
                    o.fail(where(n, sm.sign) + " k=" + std::to_string(k) + " exact route");
            }
        }
    if (o.pass) o.detail = "max |diff| = " + str(worst);
    return o;
}

// 9: tuple lemmas, every tuple for n <= 12.
Outcome lemmas() {
    Outcome o;
    long tuples = 0;
    for (int n = 2; n <= 12; n += 2) {
        std::vector<std::int64_t> xn(n);
        std::vector<double> xr(n);
        std::mt19937_64 gen(900 + n);
        std::uniform_real_distribution<double> u(-3, 3);
        for (int j = 0; j < n; ++j) {
            xn[j] = j + 1;
            xr[j] = u(gen);
        }
        for (int len = 0; len <= n; len += 2)
            for_each_tuple(n, len, [&](std::span<const int> e) {
                ++tuples;
                const IndexTuple r(n, std::vector<int>(e.begin(), e.end()));
                const std::span<const std::int64_t> xs(xn);
                const std::span<const double> rs(xr);
                const std::string at = "n=" + std::to_string(n) + " len=" + std::to_string(len);
                if (l_r(r, xs) != l_r_blocks(r, xs) || std::abs(l_r(r, rs) - l_r_blocks(r, rs)) > 1e-12)
                    o.fail(at + " block recursion");
                if (Rational(l_r(r, xs)) != l_r_xn_closed(r)) o.fail(at + " natural-vector form");
                if (len == 0) return;
                const auto sig = signature_pair(r);
                const auto t = involution(r, InvolutionKind::tau);
                const auto st = signature_pair(t);
                if (st.s != sig.s || st.w != (n + 1) * static_cast<std::int64_t>(sig.s) - sig.w) o.fail(at + " tau law");
                if (!(involution(t, InvolutionKind::tau) == r)) o.fail(at + " tau involution");
                if (r[len] < n) {
                    const auto ti = involution(r, InvolutionKind::tau_internal);
                    const auto si = signature_pair(ti);
                    if (si.s != -sig.s || si.w != sig.w - static_cast<std::int64_t>(n) * sig.s || ti[len] >= n)
                        o.fail(at + " internal law");
                    if (!(involution(ti, InvolutionKind::tau_internal) == r)) o.fail(at + " internal involution");
                } else {
                    const auto tb = involution(r, InvolutionKind::tau_boundary);
                    const auto sb = signature_pair(tb);
                    if (sb.s != sig.s || sb.w != static_cast<std::int64_t>(n) * (sig.s + 1) - sig.w || tb[len] != n)
                        o.fail(at + " boundary law");
                    if (!(involution(tb, InvolutionKind::tau_boundary) == r)) o.fail(at + " boundary involution");
                }
            });
    }
    for (int n = 4; n <= 12; n += 2)
        for (Sign sg : {Sign::plus, Sign::minus}) {
            const auto cfg = URConfig::make(n, 0.7, sg);
            for (int len = 0; len <= n; len += 2)
                for_each_tuple(n, len, [&](std::span<const int> e) {
                    const IndexTuple r(n, std::vector<int>(e.begin(), e.end()));
                    if (!(l_r_xd(cfg, r) == l_r_xd_direct(cfg, r))) o.fail(where(n, sg) + " delta-vector form");
                });
        }
    if (o.pass) o.detail = std::to_string(tuples) + " tuples, zero failures";
    return o;
}

// 10: DP against enumeration, and the fault-injection self-test.
Outcome oracle_equivalence() {
    Outcome o;
    int checked = 0;
    for (int n = 4; n <= 12; n += 2)
        for (Sign sg : {Sign::plus, Sign::minus}) {
            const auto cfg = URConfig::make(n, 0.0, sg);
            for (int k = 1; k <= n / 2; ++k) {
                const auto dp = signature_sums_dp(cfg, k);
                const auto bf = signature_sums_bruteforce(cfg, k);
                for (int s = -2 * k; s <= 2 * k; s += 2)
                    for (auto dom : {TupleDomain::all, TupleDomain::internal, TupleDomain::boundary}) {
                        if (dp.at(s, dom).counts() != bf.at(s, dom).counts()) o.fail(where(n, sg, k, s));
                        ++checked;
                    }
            }
        }
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--n", "8", "--perturb"}, out, err);
    int fails = 0;
    std::istringstream lines(out.str());
    for (std::string line; std::getline(lines, line);)
        if (line.rfind("FAIL ", 0) == 0) ++fails;
    if (code != cli::verification_failed || fails < 1) o.fail("perturbed run reported no failure");
    if (o.pass) o.detail = std::to_string(checked) + " sums equal, perturbed run: " + std::to_string(fails) + " FAIL lines";
    return o;
}

// 11: odd powers of eps vanish; beta drops out.
Outcome odd_powers_and_beta() {
    Outcome o;
    std::mt19937_64 gen(1100);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    double worst_odd = 0.0, worst_beta = 0.0;
    std::vector<PhaseSequence> seqs;
    for (int n : kEvenRange) seqs.push_back(ur_phases(URConfig::make(n, ang(gen), Sign::plus)));
    for (int t = 0; t < 8; ++t) {
        std::vector<double> ph(4 + 2 * (t % 4));
        for (auto& x : ph) x = ang(gen);
        seqs.emplace_back(ph);
    }
    for (const auto& seq : seqs) {
        const double alpha = ang(gen);
        const auto fd = power_coefficients_fd(alpha, ang(gen), seq);
        for (int p = 1; p <= seq.n(); p += 2) worst_odd = std::max(worst_odd, std::abs(fd.coefficients[p]));
        for (double eps : {0.01, 0.2, 0.7}) {
            const Complex ref = overlap({eps, alpha, 0.0}, seq);
            for (int i = 0; i < 50; ++i)
                worst_beta = std::max(worst_beta, std::abs(overlap({eps, alpha, ang(gen)}, seq) - ref));
        }
    }
    if (!(worst_odd < kOddPowerTol)) o.fail("odd coefficient " + str(worst_odd));
    if (!(worst_beta < kBetaTol)) o.fail("beta dependence " + str(worst_beta));
    if (o.pass) o.detail = "max odd = " + str(worst_odd) + ", max beta drift = " + str(worst_beta);
    return o;
}

// 12: the UR endpoint coefficient is not identically zero in alpha, and
// random non-UR lists do not cancel the lower orders.
Outcome obstruction() {
    Outcome o;
    double smallest_max = 1e300;
    int non_ur_cancel = 0;
    for (int n : {4, 6, 8}) {
        std::mt19937_64 gen(1200 + n);
        std::uniform_real_distribution<double> ang(-kPi, kPi);
        for (int t = 0; t < 100; ++t) {
            const auto seq = ur_phases(URConfig::make(n, ang(gen), t % 2 ? Sign::minus : Sign::plus));
            double mx = 0.0;
            bool cancel = true;
            for (int i = 0; i < 64; ++i) {
                const auto e = endpoint_coefficient(2 * kPi * i / 64, seq, kCoeffTol);
                cancel = cancel && e.lower_orders_vanish;
                mx = std::max(mx, std::abs(e.direct));
            }
            smallest_max = std::min(smallest_max, mx);
            if (!cancel) o.fail("n=" + std::to_string(n) + " UR list without cancellation");
            if (!(mx > kSweepFloor)) o.fail("n=" + std::to_string(n) + " sweep max " + str(mx));

            std::vector<double> ph(n);
            for (auto& x : ph) x = ang(gen);
            if (coefficients_a(ang(gen), PhaseSequence(ph), kCoeffTol).cancellation) ++non_ur_cancel;
        }
    }
    if (non_ur_cancel > 0) o.fail(std::to_string(non_ur_cancel) + " random lists cancelled");
    if (o.pass) o.detail = "smallest sweep max = " + str(smallest_max) + ", random lists cancelled: 0 of 300";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"zero-signature identity", zero_signature},
        {"nonzero-signature identity", nonzero_signature},
        {"reflection", reflection},
        {"transfer product", transfer},
        {"coefficient cancellation", cancellation},
        {"endpoint coefficient", endpoint},
        {"scaling slope", slopes},
        {"trace condition", traces},
        {"tuple lemmas", lemmas},
        {"oracle equivalence", oracle_equivalence},
        {"odd powers and beta", odd_powers_and_beta},
        {"endpoint obstruction", obstruction},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        if (!r.pass) ++failed;
        std::cout << (r.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << r.detail
                  << std::endl;
    }
    std::cout << "# " << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
