#include "urdd/algebra.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace urdd {

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.e[i] - b.e[i]));
    return worst;
}

bool is_unitary(const Mat2& m, double tol) {
    return max_abs_diff(m.adjoint() * m, Mat2::identity()) <= tol;
}

namespace {

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<Integer> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const Integer q = num[i];
        quot[i - dd] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

void check_order(int d) {
    if (d < 1 || d > kMaxCyclotomicOrder)
        throw DomainError("cyclotomic order must lie in [1, " + std::to_string(kMaxCyclotomicOrder) +
                          "], got " + std::to_string(d));
}

std::int64_t mod_exponent(std::int64_t e, int d) {
    const std::int64_t r = e % d;
    return r < 0 ? r + d : r;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int d) {
    check_order(d);
    // Phi_e for every divisor e of d, built bottom-up.
    std::vector<std::vector<Integer>> phi(d + 1);
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        std::vector<Integer> xe(e + 1, 0);
        xe[0] = -1;
        xe[e] = 1;
        std::vector<Integer> prod{1};
        for (int f = 1; f < e; ++f)
            if (e % f == 0) prod = poly_mul(prod, phi[f]);
        phi[e] = poly_div_exact(std::move(xe), prod);
    }
    return phi[d];
}

std::vector<Integer> group_ring_reduce(std::span<const Integer> counts, int d) {
    check_order(d);
    if (static_cast<int>(counts.size()) != d)
        throw DomainError("count vector length " + std::to_string(counts.size()) +
                          " does not match order " + std::to_string(d));
    const auto phi = cyclotomic_polynomial(d);
    const std::size_t deg = phi.size() - 1;
    std::vector<Integer> work(counts.begin(), counts.end());
    for (std::size_t i = work.size(); i-- > deg;) {
        const Integer q = work[i];
        if (q == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) work[i - deg + j] -= q * phi[j];
    }
    work.resize(deg);
    return work;
}

GroupRingElement::GroupRingElement(int order) {
    check_order(order);
    counts_.assign(order, 0);
}

GroupRingElement GroupRingElement::constant(int order, const Integer& value) {
    GroupRingElement out(order);
    out.counts_[0] = value;
    return out;
}

GroupRingElement GroupRingElement::monomial(int order, std::int64_t exponent, const Integer& mult) {
    GroupRingElement out(order);
    out.add_power(exponent, mult);
    return out;
}

void GroupRingElement::add_power(std::int64_t exponent, const Integer& mult) {
    counts_[mod_exponent(exponent, order())] += mult;
}

GroupRingElement GroupRingElement::conj() const {
    GroupRingElement out(order());
    for (int e = 0; e < order(); ++e) out.counts_[mod_exponent(-e, order())] = counts_[e];
    return out;
}

GroupRingElement GroupRingElement::shifted(std::int64_t exponent) const {
    GroupRingElement out(order());
    for (int e = 0; e < order(); ++e) out.counts_[mod_exponent(e + exponent, order())] = counts_[e];
    return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    if (o.order() != order()) throw DomainError("group ring orders differ");
    for (int e = 0; e < order(); ++e) counts_[e] += o.counts_[e];
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    if (o.order() != order()) throw DomainError("group ring orders differ");
    for (int e = 0; e < order(); ++e) counts_[e] -= o.counts_[e];
    return *this;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement out = *this;
    out += o;
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    GroupRingElement out = *this;
    out -= o;
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    if (o.order() != order()) throw DomainError("group ring orders differ");
    GroupRingElement out(order());
    for (int a = 0; a < order(); ++a) {
        if (counts_[a] == 0) continue;
        for (int b = 0; b < order(); ++b) {
            if (o.counts_[b] == 0) continue;
            out.counts_[(a + b) % order()] += counts_[a] * o.counts_[b];
        }
    }
    return out;
}

GroupRingElement GroupRingElement::scaled(const Integer& s) const {
    GroupRingElement out = *this;
    for (auto& c : out.counts_) c *= s;
    return out;
}

std::vector<Integer> GroupRingElement::residue() const {
    return group_ring_reduce(counts_, order());
}

bool GroupRingElement::same_value(const GroupRingElement& o) const {
    if (o.order() != order()) throw DomainError("group ring orders differ");
    return (*this - o).is_zero_value();
}

bool GroupRingElement::is_zero_value() const {
    for (const auto& c : residue())
        if (c != 0) return false;
    return true;
}

bool GroupRingElement::is_empty() const {
    for (const auto& c : counts_)
        if (c != 0) return false;
    return true;
}

Integer GroupRingElement::total_count() const {
    Integer acc = 0;
    for (const auto& c : counts_) acc += c;
    return acc;
}

Complex GroupRingElement::eval(int g) const {
    return group_ring_eval(*this, g);
}

Complex group_ring_eval(const GroupRingElement& elem, int primitive_exponent) {
    const int d = elem.order();
    if (std::gcd(primitive_exponent, d) != 1)
        throw DomainError("evaluation exponent " + std::to_string(primitive_exponent) +
                          " is not coprime to order " + std::to_string(d));
    Complex acc{0.0, 0.0};
    for (int e = 0; e < d; ++e) {
        if (elem.counts()[e] == 0) continue;
        const auto reduced = mod_exponent(static_cast<std::int64_t>(primitive_exponent) * e, d);
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduced) / d;
        acc += elem.counts()[e].convert_to<double>() * std::polar(1.0, angle);
    }
    return acc;
}

std::string format_residue(const std::vector<Integer>& residue) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < residue.size(); ++i) {
        if (i) os << ',';
        os << residue[i];
    }
    os << ']';
    return os.str();
}

double AffineAngle::value(double phi2_value) const {
    return boost::rational_cast<double>(phi2) * phi2_value +
           boost::rational_cast<double>(pi) * std::numbers::pi;
}

Rational rational_mod(const Rational& r, std::int64_t p) {
    // floor(r / p) computed on numerator/denominator exactly
    const std::int64_t num = r.numerator();
    const std::int64_t den = r.denominator() * p;
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return r - Rational(q * p);
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

AffineAngle AffineAngle::reduced_pi(std::int64_t period) const {
    return {phi2, rational_mod(pi, period)};
}

}  // namespace urdd
