#include "urdd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "urdd/combinatorics.hpp"
#include "urdd/fourier.hpp"
#include "urdd/series.hpp"
#include "urdd/urphases.hpp"

namespace urdd::cli {

namespace {

using nlohmann::json;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Options {
    int n = 0;
    int n_max = 0;
    double phi2 = 0.0;
    std::string sign = "+";
    bool sign_given = false;
    double alpha = 0.0;
    int alpha_samples = 0;
    std::uint64_t seed = 1;
    double beta = 0.0;
    double eps_min = 1e-3;
    double eps_max = 1e-2;
    int points = 10;
    std::string out;
    std::string format;
    std::string units = "rad";
    std::uint64_t cap = kDefaultBruteForceCap;
    bool perturb = false;
    std::string phases;
    std::string plot_script;
    bool verbose = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << (x == 0.0 ? 0.0 : x);
    return os.str();
}

double to_radians(const Options& o, double x) {
    return o.units == "deg" ? x * std::numbers::pi / 180.0 : x;
}

Sign parse_sign(const std::string& s) {
    if (s == "+" || s == "plus") return Sign::plus;
    if (s == "-" || s == "minus") return Sign::minus;
    throw UsageError("sign must be + or -, got '" + s + "'");
}

const char* sign_text(Sign s) { return s == Sign::plus ? "+" : "-"; }

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

PhaseSequence input_sequence(const Options& o) {
    if (!o.phases.empty()) {
        auto list = parse_phase_list(o.phases);
        for (auto& x : list) x = to_radians(o, x);
        return PhaseSequence(std::move(list));
    }
    if (o.n == 0) throw UsageError("either --n or --phases is required");
    return ur_phases(URConfig::make(o.n, to_radians(o, o.phi2), parse_sign(o.sign)));
}

std::vector<double> alphas(const Options& o) {
    if (o.alpha_samples > 0) return sample_angles(o.seed, o.alpha_samples);
    return {to_radians(o, o.alpha)};
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw OutputError("cannot open output file '" + o.out + "'");
    file << text;
    file.flush();
    if (!file) throw OutputError("write to '" + o.out + "' failed");
}

// ---------------------------------------------------------------------------
// phases
// ---------------------------------------------------------------------------

int cmd_phases(const Options& o, std::ostream& out) {
    if (o.n == 0) throw UsageError("--n is required");
    const URConfig cfg = URConfig::make(o.n, to_radians(o, o.phi2), parse_sign(o.sign));
    const PhaseSequence seq = ur_phases(cfg);
    const auto d = deltas(seq);
    const auto g = gamma(seq);
    std::ostringstream os;
    if (o.format == "json") {
        json j;
        j["n"] = cfg.n;
        j["sign"] = sign_text(cfg.sign);
        j["phi2"] = cfg.phi2;
        j["phi_over_pi"] = std::to_string(cfg.phi_over_pi.numerator()) + "/" +
                           std::to_string(cfg.phi_over_pi.denominator());
        j["phi"] = cfg.phi();
        j["omega_order"] = cfg.order_d;
        j["omega_generator"] = cfg.generator_g;
        j["gamma_raw"] = g.raw;
        j["gamma_reduced"] = g.reduced == 0.0 ? 0.0 : g.reduced;
        j["rows"] = json::array();
        for (int k = 1; k <= cfg.n; ++k) {
            double wrapped = std::fmod(seq[k], kTwoPi);
            if (wrapped < 0) wrapped += kTwoPi;
            j["rows"].push_back({{"k", k}, {"phi", seq[k]}, {"phi_mod_2pi", wrapped}, {"delta", d[k - 1]}});
        }
        os << j.dump(2) << '\n';
    } else {
        os << "# n=" << cfg.n << " sign=" << sign_text(cfg.sign) << " phi2=" << fmt(cfg.phi2)
           << " Phi/pi=" << cfg.phi_over_pi.numerator() << '/' << cfg.phi_over_pi.denominator()
           << " Phi=" << fmt(cfg.phi()) << " omega_order=" << cfg.order_d << '\n';
        os << "# gamma_raw=" << fmt(g.raw) << " gamma_reduced=" << fmt(g.reduced) << '\n';
        os << "k,phi,phi_mod_2pi,delta\n";
        for (int k = 1; k <= cfg.n; ++k) {
            double wrapped = std::fmod(seq[k], kTwoPi);
            if (wrapped < 0) wrapped += kTwoPi;
            // exact multiples of 2 pi can land just below 2 pi
            if (kTwoPi - wrapped < 1e-12) wrapped = 0.0;
            os << k << ',' << fmt(seq[k]) << ',' << fmt(wrapped) << ',' << fmt(d[k - 1]) << '\n';
        }
    }
    emit(o, os.str(), out);
    return ok;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct CaseLine {
    std::string status;  // PASS, FAIL, SKIP
    std::string identity;
    int n = 0;
    int k = 0;
    std::optional<int> s;
    Sign sign = Sign::plus;
    std::string detail;
};

class Suite {
public:
    void add(const IdentityCheck& c, bool with_s = true) {
        CaseLine line{c.pass ? "PASS" : "FAIL", c.identity, c.n, c.k, std::nullopt, c.sign, ""};
        if (with_s) line.s = c.s;
        if (!c.pass) line.detail = "lhs=" + c.lhs + " rhs=" + c.rhs + (c.note.empty() ? "" : " " + c.note);
        lines_.push_back(std::move(line));
    }
    void add(bool pass, std::string identity, int n, int k, std::optional<int> s, Sign sign,
             std::string detail = "") {
        lines_.push_back({pass ? "PASS" : "FAIL", std::move(identity), n, k, s, sign, pass ? "" : std::move(detail)});
    }
    void skip(std::string identity, int n, int k, Sign sign, std::string reason) {
        lines_.push_back({"SKIP", std::move(identity), n, k, std::nullopt, sign, std::move(reason)});
    }
    const std::vector<CaseLine>& lines() const { return lines_; }
    int count(const std::string& status) const {
        return static_cast<int>(std::count_if(lines_.begin(), lines_.end(),
                                              [&](const CaseLine& l) { return l.status == status; }));
    }

private:
    std::vector<CaseLine> lines_;
};

// Exhaustive checks of the tuple lemmas for one (n, k).
void lemma_checks(Suite& suite, const URConfig& cfg, int k) {
    const int n = cfg.n;
    std::vector<std::int64_t> xn(n);
    for (int j = 0; j < n; ++j) xn[j] = j + 1;
    std::vector<AffineAngle> xd;
    for (const auto& d : exact_deltas(cfg)) xd.insert(xd.begin(), d);

    int blocks_bad = 0, nice_bad = 0, lrxd_bad = 0, tuples = 0;
    int tau_bad = 0, tau_i_bad = 0, tau_b_bad = 0, invol_bad = 0;
    for_each_tuple(n, 2 * k, [&](std::span<const int> entries) {
        ++tuples;
        const IndexTuple r(n, std::vector<int>(entries.begin(), entries.end()));
        const std::span<const std::int64_t> xs(xn);
        const std::span<const AffineAngle> ds(xd);
        if (l_r(r, xs) != l_r_blocks(r, xs) || !(l_r(r, ds) == l_r_blocks(r, ds))) ++blocks_bad;
        if (Rational(l_r(r, xs)) != l_r_xn_closed(r)) ++nice_bad;
        if (!(l_r_xd(cfg, r) == l_r_xd_direct(cfg, r))) ++lrxd_bad;

        const Signature sig = signature_pair(r);
        const IndexTuple t = involution(r, InvolutionKind::tau);
        const Signature st = signature_pair(t);
        if (st.s != sig.s || st.w != (n + 1) * static_cast<std::int64_t>(sig.s) - sig.w) ++tau_bad;
        if (!(involution(t, InvolutionKind::tau) == r)) ++invol_bad;
        if (r[2 * k] < n) {
            const IndexTuple ti = involution(r, InvolutionKind::tau_internal);
            const Signature si = signature_pair(ti);
            if (si.s != -sig.s || si.w != sig.w - static_cast<std::int64_t>(n) * sig.s || ti[2 * k] >= n) ++tau_i_bad;
            if (!(involution(ti, InvolutionKind::tau_internal) == r)) ++invol_bad;
        } else {
            const IndexTuple tb = involution(r, InvolutionKind::tau_boundary);
            const Signature sb = signature_pair(tb);
            if (sb.s != sig.s || sb.w != static_cast<std::int64_t>(n) * (sig.s + 1) - sig.w || tb[2 * k] != n) ++tau_b_bad;
            if (!(involution(tb, InvolutionKind::tau_boundary) == r)) ++invol_bad;
        }
    });
    const std::string of = " of " + std::to_string(tuples) + " tuples";
    suite.add(blocks_bad == 0, "block_recursion", n, k, std::nullopt, cfg.sign, std::to_string(blocks_bad) + of);
    suite.add(nice_bad == 0, "natural_vector_form", n, k, std::nullopt, cfg.sign, std::to_string(nice_bad) + of);
    suite.add(lrxd_bad == 0, "delta_vector_form", n, k, std::nullopt, cfg.sign, std::to_string(lrxd_bad) + of);
    suite.add(tau_bad == 0, "tau_law", n, k, std::nullopt, cfg.sign, std::to_string(tau_bad) + of);
    suite.add(tau_i_bad == 0, "tau_internal_law", n, k, std::nullopt, cfg.sign, std::to_string(tau_i_bad) + of);
    suite.add(tau_b_bad == 0, "tau_boundary_law", n, k, std::nullopt, cfg.sign, std::to_string(tau_b_bad) + of);
    suite.add(invol_bad == 0, "involution", n, k, std::nullopt, cfg.sign, std::to_string(invol_bad) + of);
}

void oracle_checks(Suite& suite, const URConfig& cfg, int k, const SignatureSums& dp, std::uint64_t cap) {
    const Integer tuples = binomial(cfg.n, 2 * k);
    if (tuples > cap) {
        suite.skip("dp_vs_bruteforce", cfg.n, k, cfg.sign,
                   "tuple count " + tuples.str() + " exceeds cap " + std::to_string(cap));
        return;
    }
    const SignatureSums brute = signature_sums_bruteforce(cfg, k, cap);
    for (int s = -2 * k; s <= 2 * k; s += 2) {
        bool pass = true;
        std::string detail;
        for (auto domain : {TupleDomain::all, TupleDomain::internal, TupleDomain::boundary}) {
            const auto a = dp.at(s, domain);
            const auto b = brute.at(s, domain);
            if (!a.same_value(b)) {
                pass = false;
                detail = "lhs=" + format_residue(a.residue()) + " rhs=" + format_residue(b.residue());
            }
        }
        suite.add(pass, "dp_vs_bruteforce", cfg.n, k, s, cfg.sign, detail);
    }
}

void verify_case(Suite& suite, const URConfig& cfg, const Options& o) {
    suite.add(verify_root_orders(cfg), false);
    for (int k = 1; k < cfg.n / 2; ++k) {
        SignatureSums sums = signature_sums_dp(cfg, k);
        if (o.perturb) sums.perturb(0);
        for (int s = -2 * k; s <= 2 * k; s += 2) suite.add(verify_reflection(cfg, sums, s));
        const auto nz = verify_nonzero_signature(cfg, sums);
        for (const auto& c : nz.checks) {
            const bool global = c.identity == "no_short_even_period";
            if (!global || k == 1) suite.add(c, !global);
        }
        suite.add(verify_zero_signature(cfg, sums));
        oracle_checks(suite, cfg, k, sums, o.cap);
        if (binomial(cfg.n, 2 * k) <= o.cap)
            lemma_checks(suite, cfg, k);
        else
            suite.skip("tuple_lemmas", cfg.n, k, cfg.sign, "tuple count exceeds cap");
    }
    const auto tp = transfer_product(cfg);
    for (const auto& c : tp.checks) suite.add(c, false);
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<int> ns;
    if (o.n != 0) {
        ns.push_back(o.n);
    } else {
        const int top = o.n_max != 0 ? o.n_max : 12;
        for (int n = 4; n <= top; n += 2) ns.push_back(n);
    }
    if (ns.empty()) throw UsageError("--n-max must be at least 4");
    std::vector<Sign> signs{Sign::plus, Sign::minus};
    if (o.sign_given) signs = {parse_sign(o.sign)};

    Suite suite;
    for (int n : ns)
        for (Sign sg : signs) verify_case(suite, URConfig::make(n, 0.0, sg), o);

    const int pass = suite.count("PASS");
    const int fail = suite.count("FAIL");
    const int skip = suite.count("SKIP");
    std::ostringstream os;
    if (o.format == "json") {
        json j;
        j["cases"] = json::array();
        for (const auto& l : suite.lines()) {
            json c{{"status", l.status}, {"identity", l.identity}, {"n", l.n}, {"k", l.k}, {"sign", sign_text(l.sign)}};
            c["s"] = l.s ? json(*l.s) : json(nullptr);
            if (!l.detail.empty()) c["detail"] = l.detail;
            j["cases"].push_back(std::move(c));
        }
        j["summary"] = {{"pass", pass}, {"fail", fail}, {"skip", skip}, {"total", pass + fail + skip}};
        os << j.dump(2) << '\n';
    } else {
        for (const auto& l : suite.lines()) {
            os << l.status << ' ' << l.identity << " n=" << l.n << " k=" << l.k;
            if (l.s) os << " s=" << *l.s;
            os << " sign=" << sign_text(l.sign);
            if (!l.detail.empty() && (l.status != "PASS" || o.verbose)) os << ' ' << l.detail;
            os << '\n';
        }
        os << "# summary pass=" << pass << " fail=" << fail << " skip=" << skip << '\n';
    }
    emit(o, os.str(), out);
    return fail == 0 ? ok : verification_failed;
}

// ---------------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------------

json expansion_json(const ExpansionReport& rep, const EndpointReport& end) {
    json j;
    j["n"] = rep.n;
    j["alpha"] = rep.alpha;
    j["phases"] = rep.phases.phases();
    j["ur"] = rep.phases.is_ur();
    j["a"] = json::array();
    j["a_fit"] = json::array();
    j["a_exact"] = json::array();
    j["traces"] = json::array();
    j["traces_fourier"] = json::array();
    for (std::size_t k = 0; k < rep.a.size(); ++k) {
        j["a"].push_back(complex_json(rep.a[k]));
        j["a_fit"].push_back(complex_json(rep.a_fit[k]));
        j["a_exact"].push_back(rep.a_exact[k] ? json(rep.a_exact[k]->str()) : json(nullptr));
        j["traces"].push_back(complex_json(rep.traces[k]));
        j["traces_fourier"].push_back(rep.traces_fourier[k] ? complex_json(*rep.traces_fourier[k]) : json(nullptr));
    }
    j["routes"] = rep.routes;
    j["cancellation"] = rep.cancellation;
    json e;
    e["applies"] = end.lower_orders_vanish;
    e["closed_form"] = end.closed_form;
    e["ur_form"] = end.ur_form ? json(*end.ur_form) : json(nullptr);
    e["direct"] = complex_json(end.direct);
    e["ptilde0_is_rotation"] = end.ptilde0_is_rotation;
    j["endpoint"] = e;
    return j;
}

int cmd_expand(const Options& o, std::ostream& out) {
    const PhaseSequence seq = input_sequence(o);
    const auto as = alphas(o);
    bool pass = true;
    std::ostringstream os;
    for (double alpha : as) {
        const auto rep = coefficients_a(alpha, seq);
        const auto end = endpoint_coefficient(alpha, seq);
        json j = expansion_json(rep, end);
        bool ok_here = true;
        if (seq.is_ur()) {
            ok_here = rep.cancellation && rep.routes.at("traces") == "matrix+fourier" && end.ur_form &&
                      std::abs(end.direct - *end.ur_form) < 1e-10;
        }
        j["pass"] = ok_here;
        pass = pass && ok_here;
        os << (as.size() == 1 ? j.dump(2) : j.dump()) << '\n';
    }
    emit(o, os.str(), out);
    return pass ? ok : verification_failed;
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

const char* kPlotStub =
    "import sys\n"
    "import numpy as np\n"
    "import matplotlib.pyplot as plt\n"
    "\n"
    "data = np.loadtxt(sys.argv[1], delimiter=',', skiprows=1, comments='#')\n"
    "plt.loglog(data[:, 0], data[:, 1], 'o', label='1 - F')\n"
    "plt.loglog(data[:, 0], data[:, 2], '-', label='leading term')\n"
    "plt.xlabel('epsilon')\n"
    "plt.ylabel('1 - F')\n"
    "plt.legend()\n"
    "plt.savefig(sys.argv[2] if len(sys.argv) > 2 else 'scan.png', dpi=150)\n";

int cmd_scan(const Options& o, std::ostream& out) {
    const PhaseSequence seq = input_sequence(o);
    if (o.points < 1) throw UsageError("--points must be positive");
    if (!(o.eps_min > 0.0) || o.eps_max < o.eps_min || o.eps_max > 0.5)
        throw UsageError("epsilon range must satisfy 0 < eps-min <= eps-max <= 0.5");
    const auto grid = log_grid(o.eps_min, o.eps_max, o.points);
    const double beta = to_radians(o, o.beta);
    const auto as = alphas(o);

    std::ostringstream os;
    json all = json::array();
    if (o.format != "json") os << "epsilon,one_minus_F,predicted,ratio\n";
    for (double alpha : as) {
        const auto scan = scaling_scan(seq, alpha, beta, grid);
        if (o.format == "json") {
            json j;
            j["n"] = seq.n();
            j["alpha"] = alpha;
            j["beta"] = beta;
            j["expected_order"] = scan.expected_order;
            j["prefactor"] = scan.prefactor;
            j["slope"] = scan.slope;
            j["fitted_points"] = scan.fitted_points;
            j["near_node"] = scan.near_node;
            j["note"] = scan.note;
            j["rows"] = json::array();
            for (const auto& r : scan.rows)
                j["rows"].push_back({{"epsilon", r.epsilon}, {"one_minus_F", r.one_minus_f},
                                     {"predicted", r.predicted}, {"ratio", r.ratio}});
            all.push_back(std::move(j));
            continue;
        }
        if (as.size() > 1) os << "# alpha=" << fmt(alpha) << '\n';
        for (const auto& r : scan.rows)
            os << fmt(r.epsilon) << ',' << fmt(r.one_minus_f) << ',' << fmt(r.predicted) << ',' << fmt(r.ratio) << '\n';
        os << "# slope=" << fmt(scan.slope) << " expected_order=" << scan.expected_order
           << " prefactor=" << fmt(scan.prefactor) << " fitted_points=" << scan.fitted_points;
        if (!scan.note.empty()) os << " note=" << scan.note;
        os << '\n';
    }
    if (o.format == "json") os << (all.size() == 1 ? all[0].dump(2) : all.dump(2)) << '\n';
    emit(o, os.str(), out);
    if (!o.plot_script.empty()) {
        std::ofstream file(o.plot_script);
        if (!file) throw OutputError("cannot open plot script file '" + o.plot_script + "'");
        file << kPlotStub;
        if (!file) throw OutputError("write to '" + o.plot_script + "' failed");
    }
    return ok;
}

}  // namespace

std::vector<double> parse_phase_list(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw DomainError("empty entry in phase list '" + text + "'");
        item = item.substr(first, last - first + 1);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            throw DomainError("malformed phase '" + item + "'");
        }
        if (used != item.size() || !std::isfinite(value)) throw DomainError("malformed phase '" + item + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<double> sample_angles(std::uint64_t seed, int count) {
    std::mt19937_64 gen(seed);
    std::vector<double> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        out.push_back(unit * kTwoPi);
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Phase tables, identity checks, expansions and scans for UR pulse sequences", "urdd"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "Write the report to this file");
        sub->add_option("--units", o.units, "Angle units of the inputs")->check(CLI::IsMember({"rad", "deg"}));
    };
    auto ur_flags = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "Number of pulses");
        sub->add_option("--phi2", o.phi2, "Free phase phi_2");
        sub->add_option("--sign", o.sign, "Sign of Phi (+ or -)");
    };
    auto alpha_flags = [&](CLI::App* sub) {
        sub->add_option("--alpha", o.alpha, "Effective phase alpha");
        sub->add_option("--alpha-samples", o.alpha_samples, "Number of sampled alpha values")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", o.seed, "Seed for sampled alpha values");
        sub->add_option("--phases", o.phases, "Explicit comma-separated phase list");
    };

    auto* phases = app.add_subcommand("phases", "Print the UR phase table");
    ur_flags(phases);
    common(phases);
    phases->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Run the exact identity suite");
    verify->add_option("--n", o.n, "Single number of pulses");
    verify->add_option("--n-max", o.n_max, "Largest n of the range 4, 6, ...");
    verify->add_option("--sign", o.sign, "Restrict to one sign of Phi");
    verify->add_option("--cap", o.cap, "Largest tuple count enumerated directly");
    verify->add_flag("--perturb", o.perturb, "Inject one wrong count to exercise the checker");
    verify->add_flag("--verbose", o.verbose, "Show details on passing lines");
    verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    common(verify);

    auto* expand = app.add_subcommand("expand", "Expansion coefficients as JSON");
    ur_flags(expand);
    alpha_flags(expand);
    common(expand);

    auto* scan = app.add_subcommand("scan", "Fidelity error versus epsilon");
    ur_flags(scan);
    alpha_flags(scan);
    common(scan);
    scan->add_option("--beta", o.beta, "Effective phase beta");
    scan->add_option("--eps-min", o.eps_min, "Smallest epsilon");
    scan->add_option("--eps-max", o.eps_max, "Largest epsilon");
    scan->add_option("--points", o.points, "Number of log-spaced epsilon values");
    scan->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--plot-script", o.plot_script, "Also write a plotting script stub to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    }
    o.sign_given = verify->count("--sign") > 0;

    try {
        if (*phases) return cmd_phases(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*expand) return cmd_expand(o, out);
        if (*scan) return cmd_scan(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const OutputError& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

}  // namespace urdd::cli
