#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "urdd/algebra.hpp"

using namespace urdd;

namespace {

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

int totient(int d) {
    int count = 0;
    for (int i = 1; i <= d; ++i)
        if (std::gcd(i, d) == 1) ++count;
    return count;
}

Complex raw_eval(const std::vector<Integer>& counts, int d, int g = 1) {
    Complex acc = 0.0;
    for (int e = 0; e < d; ++e)
        acc += counts[e].convert_to<double>() * std::polar(1.0, 2 * oracle::pi * g * e / d);
    return acc;
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(100, 50) == Integer("100891344545564193334812497256"));
}

TEST_CASE("cyclotomic polynomials: standard values") {
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
    CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    const auto p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == -2);
    CHECK(p105[41] == -2);
}

TEST_CASE("cyclotomic polynomials: degree and root properties") {
    for (int d = 1; d <= 64; ++d) {
        int total = 0;
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) total += static_cast<int>(cyclotomic_polynomial(e).size()) - 1;
        CHECK(total == d);
    }
    for (int d = 1; d <= kMaxCyclotomicOrder; d += 17) {
        const auto p = cyclotomic_polynomial(d);
        CHECK(static_cast<int>(p.size()) - 1 == totient(d));
        CHECK(p.back() == 1);
        // vanishes at the primitive root
        Complex acc = 0.0;
        const Complex z = std::polar(1.0, 2 * oracle::pi / d);
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i].convert_to<double>();
        CHECK(std::abs(acc) < 1e-8);
    }
    CHECK_THROWS_AS(cyclotomic_polynomial(0), DomainError);
    CHECK_THROWS_AS(cyclotomic_polynomial(kMaxCyclotomicOrder + 1), DomainError);
}

TEST_CASE("group ring reduction examples") {
    CHECK(group_ring_reduce(ints({0, 0, 2, 0}), 4) == ints({-2, 0}));
    CHECK(group_ring_reduce(ints({0, 1, 0, 1}), 4) == ints({0, 0}));
    CHECK(group_ring_reduce(ints({1, 0, 1, 0, 1, 0}), 6) == ints({0, 0}));
    CHECK(std::abs(raw_eval(ints({1, 0, 1, 0, 1, 0}), 6)) < 1e-12);
    CHECK_THROWS_AS(group_ring_reduce(ints({1, 2, 3}), 4), DomainError);
}

TEST_CASE("group ring evaluation examples") {
    CHECK(std::abs(group_ring_eval(GroupRingElement::monomial(4, 2, 2), 1) - Complex(-2, 0)) < 1e-12);
    CHECK(std::abs(group_ring_eval(GroupRingElement::monomial(4, 3), 1) - Complex(0, -1)) < 1e-12);
    CHECK(std::abs(group_ring_eval(GroupRingElement::constant(5, 5), 1) - Complex(5, 0)) < 1e-12);
    CHECK_THROWS_AS(group_ring_eval(GroupRingElement::monomial(4, 1), 2), DomainError);
    CHECK_NOTHROW(group_ring_eval(GroupRingElement::monomial(4, 1), 3));
}

TEST_CASE("reduction preserves value and is linear") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> order(4, 32);
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = order(gen);
        std::vector<Integer> a(d), b(d), sum(d);
        for (int e = 0; e < d; ++e) {
            a[e] = coeff(gen);
            b[e] = coeff(gen);
            sum[e] = a[e] + b[e];
        }
        const auto ra = group_ring_reduce(a, d);
        const auto rb = group_ring_reduce(b, d);
        const auto rs = group_ring_reduce(sum, d);
        // residue evaluated as a polynomial at zeta_d
        std::vector<Integer> padded = ra;
        padded.resize(d, 0);
        CHECK(std::abs(raw_eval(padded, d) - raw_eval(a, d)) < 1e-10);
        for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rs[i] == ra[i] + rb[i]);
    }
}

TEST_CASE("residue equality matches numeric equality") {
    std::mt19937_64 gen(5);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int d : {4, 5, 6, 8, 9, 12, 15, 16, 20, 24}) {
        for (int trial = 0; trial < 50; ++trial) {
            GroupRingElement a(d);
            for (int e = 0; e < d; ++e) a.add_power(e, coeff(gen));
            // adding a full coset of a prime-order subgroup keeps the value
            GroupRingElement b = a;
            int p = 2;
            while (d % p != 0) ++p;
            const int offset = coeff(gen) + 3;
            for (int j = 0; j < p; ++j) b.add_power(offset + j * (d / p), 7);
            CHECK(a.same_value(b));
            CHECK(a.residue() == b.residue());
            CHECK(std::abs(a.eval() - b.eval()) < 1e-10);

            GroupRingElement c = a;
            c.add_power(coeff(gen) + 3, 1);
            CHECK_FALSE(a.same_value(c));
            CHECK(std::abs(a.eval() - c.eval()) > 1e-6);
        }
    }
}

TEST_CASE("group ring operations") {
    const int d = 12;
    const auto z = [&](int e) { return GroupRingElement::monomial(d, e); };
    CHECK((z(5) * z(9)).same_value(z(2)));
    CHECK(z(6).same_value(GroupRingElement::constant(d, -1)));
    CHECK(z(5).conj().same_value(z(7)));
    CHECK(z(5).shifted(4).same_value(z(9)));
    CHECK((z(1) + z(11)).same_value((z(1) + z(11)).conj()));
    CHECK((z(3) - z(3)).is_empty());
    GroupRingElement all(d);
    for (int e = 0; e < d; ++e) all.add_power(e);
    CHECK(all.is_zero_value());
    CHECK_FALSE(all.is_empty());
    CHECK(all.total_count() == d);
    CHECK(std::abs(z(2).scaled(3).eval() - 3.0 * std::polar(1.0, oracle::pi / 3)) < 1e-12);
    CHECK_THROWS_AS(z(1) + GroupRingElement::monomial(8, 1), DomainError);
    CHECK(format_residue(ints({1, -2, 0})) == "[1,-2,0]");
}

TEST_CASE("2x2 matrices") {
    const Mat2 a{Complex(1, 2), Complex(0, 1), Complex(-1, 0), Complex(2, -1)};
    CHECK(a.adjoint()(0, 1) == std::conj(a(1, 0)));
    CHECK(a.trace() == Complex(3, 1));
    CHECK(a.det() == Complex(1, 2) * Complex(2, -1) - Complex(0, 1) * Complex(-1, 0));
    CHECK(max_abs_diff(a * Mat2::identity(), a) == 0.0);
    CHECK_FALSE(is_unitary(a));
    const Mat2 r = oracle::rot(0.7);
    CHECK(is_unitary(r));
    CHECK(max_abs_diff((r + r).scaled(0.5), r) < 1e-15);
    CHECK(max_abs_diff(r - r, Mat2()) == 0.0);
}

TEST_CASE("polynomials") {
    const Polynomial<int> p(std::vector<int>{1, 2, 3});  // 1 + 2x + 3x^2
    CHECK(p(2) == 17);
    CHECK(p.degree() == 2);
    const auto q = p * Polynomial<int>(std::vector<int>{0, 1});
    CHECK(q.coefficients() == std::vector<int>{0, 1, 2, 3});
    CHECK((p + q).coefficients() == std::vector<int>{1, 3, 5, 3});
    EpsSeries s;
    s.set(4, Complex(2, 0));
    CHECK(s.coefficient(3) == Complex(0));
    CHECK(s(Complex(0.5)) == Complex(0.125));
}

TEST_CASE("exact angles") {
    CHECK(rational_mod(Rational(9, 2), 4) == Rational(1, 2));
    CHECK(rational_mod(Rational(-1, 3), 4) == Rational(11, 3));
    CHECK(rational_mod(Rational(-8), 4) == Rational(0));
    CHECK(is_integer(Rational(4, 2)));
    CHECK_FALSE(is_integer(Rational(1, 2)));
    const AffineAngle a{Rational(2), Rational(-13, 2)};
    CHECK(a.reduced_pi(4) == AffineAngle{Rational(2), Rational(3, 2)});
    CHECK(a.value(0.25) == doctest::Approx(0.5 - 6.5 * oracle::pi));
    CHECK((a - a) == AffineAngle{});
    CHECK((a * Rational(2)).pi == Rational(-13));
}
