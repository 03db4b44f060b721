#include "urdd/fourier.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "urdd/combinatorics.hpp"

namespace urdd {

namespace {

void check_k(const URConfig& cfg, int k) {
    if (k < 1 || 2 * k > cfg.n)
        throw DomainError("k must satisfy 1 <= k <= n/2, got k=" + std::to_string(k));
}

bool in_domain(std::span<const int> r, int n, TupleDomain domain) {
    switch (domain) {
        case TupleDomain::all: return true;
        case TupleDomain::internal: return r.empty() || r.back() < n;
        case TupleDomain::boundary: return !r.empty() && r.back() == n;
    }
    return false;
}

std::map<int, GroupRingElement> empty_classes(int k, int order) {
    std::map<int, GroupRingElement> out;
    for (int s = -2 * k; s <= 2 * k; s += 2) out.emplace(s, GroupRingElement(order));
    return out;
}

// DP over positions 1..last. State: (rank l in [0, len], S + len, exponent).
// Returns the layer at the end as table[l][S + len][e].
struct DpTable {
    int len;
    int order;
    std::vector<Integer> cells;  // ((l * (2 len + 1)) + (S + len)) * order + e

    Integer& at(int l, int s, int e) { return cells[((l * (2 * len + 1)) + (s + len)) * order + e]; }
};

DpTable run_dp(const URConfig& cfg, int len, int last) {
    DpTable cur{len, cfg.order_d, {}};
    cur.cells.assign(static_cast<std::size_t>(len + 1) * (2 * len + 1) * cfg.order_d, 0);
    cur.at(0, 0, 0) = 1;
    for (int i = 1; i <= last; ++i) {
        DpTable next = cur;  // skipping position i
        const int lmax = std::min(i - 1, len - 1);
        for (int l = 0; l <= lmax; ++l) {
            // position i becomes rank l + 1
            const int sgn = ((l + 1 + i) % 2 == 0) ? 1 : -1;
            const auto de = cfg.omega_exponent(static_cast<std::int64_t>(sgn) * i);
            for (int s = -l; s <= l; ++s) {
                for (int e = 0; e < cfg.order_d; ++e) {
                    const Integer& v = cur.at(l, s, e);
                    if (v == 0) continue;
                    next.at(l + 1, s + sgn, static_cast<int>((e + de) % cfg.order_d)) += v;
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::map<int, GroupRingElement> dp_classes(const URConfig& cfg, int k, TupleDomain domain) {
    const int len = 2 * k;
    auto out = empty_classes(k, cfg.order_d);
    if (domain == TupleDomain::boundary) {
        // Tuples ending at n: ranks 1..2k-1 below n, then n as rank 2k with
        // sign (-1)^{2k + n} = +1 (n even).
        DpTable t = run_dp(cfg, len, cfg.n - 1);
        const int sgn = ((len + cfg.n) % 2 == 0) ? 1 : -1;
        const auto de = cfg.omega_exponent(static_cast<std::int64_t>(sgn) * cfg.n);
        for (int s = -(len - 1); s <= len - 1; ++s)
            for (int e = 0; e < cfg.order_d; ++e) {
                const Integer& v = t.at(len - 1, s, e);
                if (v != 0) out.at(s + sgn).add_power(e + de, v);
            }
        return out;
    }
    const int last = domain == TupleDomain::internal ? cfg.n - 1 : cfg.n;
    DpTable t = run_dp(cfg, len, last);
    for (int s = -len; s <= len; s += 2)
        for (int e = 0; e < cfg.order_d; ++e) {
            const Integer& v = t.at(len, s, e);
            if (v != 0) out.at(s).add_power(e, v);
        }
    return out;
}

std::map<int, GroupRingElement> brute_classes(const URConfig& cfg, int k, TupleDomain domain,
                                              std::uint64_t cap, std::map<int, Integer>* counts) {
    const Integer total = binomial(cfg.n, 2 * k);
    if (total > cap)
        throw ResourceError("C(" + std::to_string(cfg.n) + "," + std::to_string(2 * k) + ") = " +
                            total.str() + " tuples exceeds the brute-force cap " +
                            std::to_string(cap) + "; use the dynamic-programming route");
    auto out = empty_classes(k, cfg.order_d);
    for_each_tuple(cfg.n, 2 * k, [&](std::span<const int> r) {
        if (!in_domain(r, cfg.n, domain)) return;
        const auto sw = signature_pair(r);
        out.at(sw.s).add_power(cfg.omega_exponent(sw.w));
        if (counts) (*counts)[sw.s] += 1;
    });
    return out;
}

IdentityCheck make_check(std::string identity, const URConfig& cfg, int k, int s,
                         const GroupRingElement& lhs, const GroupRingElement& rhs) {
    IdentityCheck c;
    c.identity = std::move(identity);
    c.n = cfg.n;
    c.k = k;
    c.s = s;
    c.sign = cfg.sign;
    c.pass = lhs.same_value(rhs);
    c.lhs = format_residue(lhs.residue());
    c.rhs = format_residue(rhs.residue());
    return c;
}

IdentityCheck make_flag(std::string identity, const URConfig& cfg, int k, int s, bool pass,
                        std::string note) {
    IdentityCheck c;
    c.identity = std::move(identity);
    c.n = cfg.n;
    c.k = k;
    c.s = s;
    c.sign = cfg.sign;
    c.pass = pass;
    c.note = std::move(note);
    return c;
}

}  // namespace

FourierSum a_s_bruteforce(const URConfig& cfg, int k, int s, TupleDomain domain, std::uint64_t cap) {
    check_k(cfg, k);
    auto classes = brute_classes(cfg, k, domain, cap, nullptr);
    auto it = classes.find(s);
    return {cfg.n, k, s, it == classes.end() ? GroupRingElement(cfg.order_d) : it->second};
}

FourierSum a_s_dp(const URConfig& cfg, int k, int s, TupleDomain domain) {
    check_k(cfg, k);
    auto classes = dp_classes(cfg, k, domain);
    auto it = classes.find(s);
    return {cfg.n, k, s, it == classes.end() ? GroupRingElement(cfg.order_d) : it->second};
}

GroupRingElement SignatureSums::at(int s, TupleDomain domain) const {
    const auto& m = domain == TupleDomain::all        ? all
                    : domain == TupleDomain::internal ? internal
                                                      : boundary;
    auto it = m.find(s);
    return it == m.end() ? GroupRingElement(order) : it->second;
}

void SignatureSums::perturb(int s) {
    auto it = all.find(s);
    if (it == all.end()) it = all.emplace(s, GroupRingElement(order)).first;
    it->second.add_power(0, 1);
}

SignatureSums signature_sums_dp(const URConfig& cfg, int k) {
    check_k(cfg, k);
    SignatureSums out;
    out.n = cfg.n;
    out.k = k;
    out.order = cfg.order_d;
    out.all = dp_classes(cfg, k, TupleDomain::all);
    out.internal = dp_classes(cfg, k, TupleDomain::internal);
    out.boundary = dp_classes(cfg, k, TupleDomain::boundary);
    for (const auto& [s, elem] : out.all) out.tuple_counts[s] = elem.total_count();
    return out;
}

SignatureSums signature_sums_bruteforce(const URConfig& cfg, int k, std::uint64_t cap) {
    check_k(cfg, k);
    SignatureSums out;
    out.n = cfg.n;
    out.k = k;
    out.order = cfg.order_d;
    for (int s = -2 * k; s <= 2 * k; s += 2) out.tuple_counts[s] = 0;
    out.all = brute_classes(cfg, k, TupleDomain::all, cap, &out.tuple_counts);
    out.internal = brute_classes(cfg, k, TupleDomain::internal, cap, nullptr);
    out.boundary = brute_classes(cfg, k, TupleDomain::boundary, cap, nullptr);
    return out;
}

IdentityCheck verify_reflection(const URConfig& cfg, const SignatureSums& sums, int s) {
    const auto a = sums.at(s);
    return make_check("reflection", cfg, sums.k, s, a,
                      a.conj().shifted(cfg.omega_exponent(s)));
}

IdentityCheck verify_reflection(const URConfig& cfg, int k, int s) {
    return verify_reflection(cfg, signature_sums_dp(cfg, k), s);
}

NonzeroSignatureReport verify_nonzero_signature(const URConfig& cfg, const SignatureSums& sums) {
    NonzeroSignatureReport rep;
    const int k = sums.k;
    auto add = [&](IdentityCheck c) {
        rep.pass = rep.pass && c.pass;
        rep.checks.push_back(std::move(c));
    };
    add(verify_no_short_even_period(cfg));
    const GroupRingElement zero(sums.order);
    for (int s = 2; s < cfg.n; s += 2) {
        for (int sg : {s, -s}) {
            const auto b = sums.at(sg) + sums.at(-sg).conj();
            rep.b_s.emplace(sg, b);
            auto c = make_check("nonzero_signature", cfg, k, sg, b, zero);
            if (sg > 2 * k) c.note = "|s| > 2k: both sums empty";
            add(std::move(c));
        }
        if (s > 2 * k) continue;
        // Proof-internal facts: A_{s,I} = A_{-s,I}, A_{s,B} real.
        add(make_check("internal_symmetry", cfg, k, s, sums.at(s, TupleDomain::internal),
                       sums.at(-s, TupleDomain::internal)));
        for (int sg : {s, -s}) {
            const auto ab = sums.at(sg, TupleDomain::boundary);
            add(make_check("boundary_real", cfg, k, sg, ab, ab.conj()));
        }
    }
    // Decomposition A_s = A_{s,I} + A_{s,B} for every class.
    for (int s = -2 * k; s <= 2 * k; s += 2)
        add(make_check("domain_split", cfg, k, s, sums.at(s),
                       sums.at(s, TupleDomain::internal) + sums.at(s, TupleDomain::boundary)));
    return rep;
}

NonzeroSignatureReport verify_nonzero_signature(const URConfig& cfg, int k) {
    if (2 * k >= cfg.n) throw DomainError("nonzero-signature identity needs k < n/2");
    return verify_nonzero_signature(cfg, signature_sums_dp(cfg, k));
}

IdentityCheck verify_zero_signature(const URConfig& cfg, const SignatureSums& sums) {
    const int k = sums.k;
    const Integer expected = (k % 2 == 0 ? 1 : -1) * binomial(cfg.n / 2, k);
    const auto a0 = sums.at(0);
    auto c = make_check("zero_signature", cfg, k, 0, a0, GroupRingElement::constant(sums.order, expected));
    if (c.pass && !a0.same_value(a0.conj())) {
        c.pass = false;
        c.note = "A_0 not real";
    }
    c.note = c.note.empty() ? "expected " + expected.str() : c.note;
    return c;
}

IdentityCheck verify_zero_signature(const URConfig& cfg, int k) {
    if (2 * k >= cfg.n) throw DomainError("zero-signature identity needs k < n/2");
    return verify_zero_signature(cfg, signature_sums_dp(cfg, k));
}

IdentityCheck verify_no_short_even_period(const URConfig& cfg) {
    for (int s = 2; s < cfg.n; s += 2)
        for (int sg : {s, -s})
            if (cfg.omega_exponent(sg) == 0)
                return make_flag("no_short_even_period", cfg, 0, sg, false,
                                 "omega^" + std::to_string(sg) + " = 1");
    return make_flag("no_short_even_period", cfg, 0, 0, true,
                     "order of omega = " + std::to_string(cfg.order_d));
}

IdentityCheck verify_root_orders(const URConfig& cfg) {
    const int d = cfg.order_d;
    bool ok = std::gcd(cfg.generator_g, d) == 1 && cfg.omega_exponent(cfg.n) == 0;
    // order of omega^2 = zeta_d^{2g} is d / gcd(2g, d)
    ok = ok && d / std::gcd(2 * cfg.generator_g, d) == cfg.n / 2;
    return make_flag("root_orders", cfg, 0, 0, ok,
                     "d=" + std::to_string(d) + " g=" + std::to_string(cfg.generator_g));
}

// ---------------------------------------------------------------------------

MatrixPoly::MatrixPoly(int order, int degree) : order_(order), degree_(degree) {
    for (auto& entry : e_) entry.assign(degree + 1, GroupRingElement(order));
}

MatrixPoly MatrixPoly::identity(int order) { return constant(order, {1, 0, 0, 1}); }

MatrixPoly MatrixPoly::constant(int order, std::array<int, 4> entries) {
    MatrixPoly out(order, 0);
    for (int i = 0; i < 4; ++i) out.e_[i][0] = GroupRingElement::constant(order, entries[i]);
    return out;
}

MatrixPoly MatrixPoly::transfer_factor(int order, std::int64_t exponent) {
    MatrixPoly out(order, 1);
    out.coeff(0, 0, 0) = GroupRingElement::constant(order, 1);
    out.coeff(1, 1, 0) = GroupRingElement::constant(order, 1);
    out.coeff(0, 1, 1) = GroupRingElement::monomial(order, exponent);
    out.coeff(1, 0, 1) = GroupRingElement::monomial(order, -exponent);
    return out;
}

MatrixPoly MatrixPoly::one_minus_t2_power(int order, int power) {
    MatrixPoly out(order, 2 * power);
    for (int j = 0; j <= power; ++j) {
        const Integer c = (j % 2 == 0 ? 1 : -1) * binomial(power, j);
        out.coeff(0, 0, 2 * j) = GroupRingElement::constant(order, c);
        out.coeff(1, 1, 2 * j) = GroupRingElement::constant(order, c);
    }
    return out;
}

const GroupRingElement& MatrixPoly::coeff(int row, int col, int power) const {
    return e_[2 * row + col].at(power);
}

GroupRingElement& MatrixPoly::coeff(int row, int col, int power) {
    return e_[2 * row + col].at(power);
}

MatrixPoly MatrixPoly::operator*(const MatrixPoly& o) const {
    if (o.order_ != order_) throw DomainError("matrix polynomial orders differ");
    MatrixPoly out(order_, degree_ + o.degree_);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l)
                for (int a = 0; a <= degree_; ++a) {
                    const auto& x = coeff(i, l, a);
                    if (x.is_empty()) continue;
                    for (int b = 0; b <= o.degree_; ++b) out.coeff(i, j, a + b) += x * o.coeff(l, j, b);
                }
    return out;
}

bool MatrixPoly::same_value(const MatrixPoly& o) const {
    if (o.order_ != order_) return false;
    const int deg = std::max(degree_, o.degree_);
    const GroupRingElement zero(order_);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int p = 0; p <= deg; ++p) {
                const auto& x = p <= degree_ ? coeff(i, j, p) : zero;
                const auto& y = p <= o.degree_ ? o.coeff(i, j, p) : zero;
                if (!x.same_value(y)) return false;
            }
    return true;
}

const char* to_string(ParityCase c) {
    switch (c) {
        case ParityCase::four_m: return "4m";
        case ParityCase::four_m_plus_two_odd_m: return "4m+2,m odd";
        case ParityCase::four_m_plus_two_even_m: return "4m+2,m even";
    }
    return "?";
}

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

// Exact exponent bookkeeping for omega^x = exp(i Phi x / 2) with rational x.
// With Phi / pi = p / q and every x a multiple of 1/L, omega^x = zeta_D^{p L x}
// for D = 4 q L; D is then shrunk by the common factor of all exponents.
struct ExponentFrame {
    std::int64_t scale = 1;  // multiply x by this to get the zeta_D exponent numerator
    std::int64_t den = 1;    // L
    std::int64_t order = 1;  // D

    std::int64_t exponent(const Rational& x) const {
        const Rational e = x * Rational(scale);
        if (!is_integer(e)) throw std::logic_error("exponent not integral in chosen frame");
        std::int64_t r = e.numerator() % order;
        return r < 0 ? r + order : r;
    }
};

ExponentFrame make_frame(const URConfig& cfg, const std::vector<Rational>& xs) {
    std::int64_t l = 1;
    for (const auto& x : xs) l = lcm64(l, x.denominator());
    const std::int64_t p = cfg.phi_over_pi.numerator();
    const std::int64_t q = cfg.phi_over_pi.denominator();
    ExponentFrame f{p * l, l, 4 * q * l};
    std::int64_t h = f.order;
    for (const auto& x : xs) h = std::gcd(h, (x * Rational(f.scale)).numerator());
    h = std::gcd(h, f.scale);  // keep exponent(1/L)-multiples integral
    if (h > 1) {
        f.order /= h;
        f.scale /= h;
    }
    if (f.order > kMaxCyclotomicOrder)
        throw ResourceError("transfer product needs cyclotomic order " + std::to_string(f.order));
    return f;
}

}  // namespace

TransferProduct transfer_product(const URConfig& cfg) {
    TransferProduct tp;
    tp.n = cfg.n;
    tp.sign = cfg.sign;
    const int n = cfg.n;
    const int m = cfg.m;
    const int big_n = n / 2;
    if (cfg.family == Family::four_m) {
        tp.parity = ParityCase::four_m;
        tp.gamma = Rational(-1, 2);
        tp.c = Rational(-1, 2);
    } else if (m % 2 == 1) {
        tp.parity = ParityCase::four_m_plus_two_odd_m;
        tp.gamma = 0;
        tp.c = Rational(big_n, 2);
    } else {
        tp.parity = ParityCase::four_m_plus_two_even_m;
        tp.gamma = Rational(big_n, 2 * m);
        tp.c = 0;
    }
    for (int j = 1; j <= n; ++j) {
        const Rational base = Rational(j) + tp.gamma;
        tp.beta.push_back((j % 2 == 1 ? base : -base) + tp.c);
    }
    std::vector<Rational> xs = tp.beta;
    xs.push_back(tp.gamma * Rational(2));  // gamma S with S even
    const ExponentFrame frame = make_frame(cfg, xs);
    const int order = static_cast<int>(frame.order);
    tp.order = order;
    for (const auto& b : tp.beta) tp.beta_exponent.push_back(frame.exponent(b));

    auto record = [&](IdentityCheck c) {
        tp.pass = tp.pass && c.pass;
        tp.checks.push_back(std::move(c));
    };
    auto flag = [&](const std::string& name, int k, bool ok, std::string note) {
        IdentityCheck c;
        c.identity = name;
        c.n = n;
        c.k = k;
        c.sign = cfg.sign;
        c.pass = ok;
        c.note = std::move(note);
        record(std::move(c));
    };

    std::vector<MatrixPoly> factors;
    for (int j = 0; j < n; ++j) factors.push_back(MatrixPoly::transfer_factor(order, tp.beta_exponent[j]));

    MatrixPoly p = MatrixPoly::identity(order);
    for (const auto& f : factors) p = p * f;
    tp.p = p;
    flag("transfer_full_product", 0, p.same_value(MatrixPoly::one_minus_t2_power(order, big_n)),
         std::string("P(t) = (1-t^2)^") + std::to_string(big_n) + " I, case " + to_string(tp.parity));

    const MatrixPoly one_minus = MatrixPoly::one_minus_t2_power(order, 1);
    // Pairing T_j T_{2m-j+1} = (1 - t^2) I for 1 <= j <= m.
    const int half = cfg.family == Family::four_m ? 2 * m : big_n;
    for (int j = 1; j <= m; ++j) {
        const int partner = 2 * m - j + 1;
        flag("transfer_pair", j, (factors[j - 1] * factors[partner - 1]).same_value(one_minus),
             "T_" + std::to_string(j) + " T_" + std::to_string(partner) + " = (1-t^2) I");
    }
    MatrixPoly q = MatrixPoly::identity(order);
    for (int j = 0; j < half; ++j) q = q * factors[j];
    tp.q = q;
    if (cfg.family == Family::four_m) {
        const MatrixPoly e = MatrixPoly::constant(order, {1, 0, 0, -1});
        for (int j = 1; j <= 2 * m; ++j)
            flag("transfer_shift_conjugation", j,
                 factors[j + 2 * m - 1].same_value(e * factors[j - 1] * e),
                 "T_{j+2m} = E T_j E");
        flag("transfer_half_product", 0, q.same_value(MatrixPoly::one_minus_t2_power(order, m)),
             "Q(t) = (1-t^2)^m I");
        flag("transfer_qeqe", 0, p.same_value(q * e * q * e), "P = Q E Q E");
    } else {
        const MatrixPoly jm = MatrixPoly::constant(order, {0, 1, 1, 0});
        for (int j = 1; j <= big_n; ++j)
            flag("transfer_shift_conjugation", j,
                 factors[j + big_n - 1].same_value(jm * factors[j - 1] * jm),
                 "T_{j+N} = J T_j J");
        const MatrixPoly& tn = factors[big_n - 1];
        flag("transfer_half_product", 0,
             q.same_value(MatrixPoly::one_minus_t2_power(order, m) * tn), "Q(t) = (1-t^2)^m T_N");
        flag("transfer_qjqj", 0, p.same_value(q * jm * q * jm), "P = Q J Q J");
        flag("transfer_tn_square", 0, (tn * jm * tn * jm).same_value(one_minus),
             "T_N J T_N J = (1-t^2) I");
        // omega^{beta_N} = (-1)^{(m+1)/2} i (m odd) or i (m even), conjugated for Phi < 0.
        bool ok = order % 4 == 0;
        if (ok) {
            int quarter = order / 4;  // zeta^{D/4} = i
            int target = (tp.parity == ParityCase::four_m_plus_two_odd_m && ((m + 1) / 2) % 2 == 1)
                             ? 3 * quarter
                             : quarter;
            if (cfg.sign == Sign::minus) target = (order - target) % order;
            ok = GroupRingElement::monomial(order, tp.beta_exponent[big_n - 1])
                     .same_value(GroupRingElement::monomial(order, target));
        }
        flag("transfer_tn_entry", 0, ok, "omega^{beta_N} matches the closed form");
    }

    for (int l = 0; l <= n; ++l) {
        tp.lambda.push_back(p.coeff(0, 0, l));
        tp.mu.push_back(p.coeff(0, 1, l));
    }
    // lambda_{2k} equals the direct sum of omega^{W + gamma S} and (-1)^k C(n/2, k).
    for (int k = 0; k <= big_n; ++k) {
        GroupRingElement direct(order);
        if (k == 0) {
            direct = GroupRingElement::constant(order, 1);
        } else {
            for_each_tuple(n, 2 * k, [&](std::span<const int> r) {
                const auto sw = signature_pair(r);
                direct.add_power(frame.exponent(Rational(sw.w) + tp.gamma * Rational(sw.s)));
            });
        }
        const Integer expected = (k % 2 == 0 ? 1 : -1) * binomial(big_n, k);
        IdentityCheck c;
        c.identity = "transfer_lambda";
        c.n = n;
        c.k = k;
        c.sign = cfg.sign;
        c.pass = tp.lambda[2 * k].same_value(direct) &&
                 tp.lambda[2 * k].same_value(GroupRingElement::constant(order, expected));
        c.lhs = format_residue(tp.lambda[2 * k].residue());
        c.rhs = format_residue(direct.residue());
        c.note = "expected " + expected.str();
        record(std::move(c));
    }
    // Numerical split lambda_{2k} = A_0 + (purely imaginary cross terms).
    const double phi = cfg.phi();
    for (int k = 1; k < big_n; ++k) {
        const auto sums = signature_sums_dp(cfg, k);
        Complex cross{0.0, 0.0};
        for (int a = 1; a <= k; ++a) {
            const double ang = phi * a * boost::rational_cast<double>(tp.gamma);
            cross += std::polar(1.0, ang) * sums.at(2 * a).eval() +
                     std::polar(1.0, -ang) * sums.at(-2 * a).eval();
        }
        const Complex lam = tp.lambda[2 * k].eval();
        const Complex a0 = sums.at(0).eval();
        const bool ok = std::abs(cross.real()) < kDefaultTolerance &&
                        std::abs(lam - (a0 + cross)) < kDefaultTolerance;
        flag("transfer_cross_terms_imaginary", k, ok,
             "Re(cross) = " + std::to_string(cross.real()));
    }
    return tp;
}

}  // namespace urdd
