#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace urdd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

/// Default absolute tolerance for floating-point comparisons.
inline constexpr double kDefaultTolerance = 1e-10;

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a request would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Integer binomial(int n, int k);

// ---------------------------------------------------------------------------
// 2x2 matrices
// ---------------------------------------------------------------------------

/// Row-major 2x2 matrix over a complex scalar type. The template parameter
/// lets the same kernels run in double and in extended precision.
template <typename C>
struct BasicMat2 {
    std::array<C, 4> e{C(0), C(0), C(0), C(0)};

    BasicMat2() = default;
    BasicMat2(C a, C b, C c, C d) : e{a, b, c, d} {}

    static BasicMat2 identity() { return {C(1), C(0), C(0), C(1)}; }
    static BasicMat2 diag(C a, C d) { return {a, C(0), C(0), d}; }

    C& operator()(int row, int col) { return e[2 * row + col]; }
    const C& operator()(int row, int col) const { return e[2 * row + col]; }

    BasicMat2 operator*(const BasicMat2& o) const {
        return {e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]};
    }
    BasicMat2 operator+(const BasicMat2& o) const {
        return {e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]};
    }
    BasicMat2 operator-(const BasicMat2& o) const {
        return {e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2], e[3] - o.e[3]};
    }
    BasicMat2 operator-() const { return {-e[0], -e[1], -e[2], -e[3]}; }
    BasicMat2& operator+=(const BasicMat2& o) { return *this = *this + o; }
    BasicMat2 scaled(const C& s) const { return {s * e[0], s * e[1], s * e[2], s * e[3]}; }

    BasicMat2 adjoint() const {
        using std::conj;
        return {conj(e[0]), conj(e[2]), conj(e[1]), conj(e[3])};
    }
    C trace() const { return e[0] + e[3]; }
    C det() const { return e[0] * e[3] - e[1] * e[2]; }
};

using Mat2 = BasicMat2<Complex>;

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Mat2& a, const Mat2& b);
bool is_unitary(const Mat2& m, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Dense polynomials in one formal variable
// ---------------------------------------------------------------------------

template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) {}

    std::size_t size() const { return c_.size(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coefficients() const { return c_; }

    T coefficient(std::size_t power) const { return power < c_.size() ? c_[power] : T(0); }
    void set(std::size_t power, const T& value) {
        if (power >= c_.size()) c_.resize(power + 1, T(0));
        c_[power] = value;
    }

    template <typename X>
    X operator()(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    Polynomial operator*(const Polynomial& o) const {
        if (c_.empty() || o.c_.empty()) return {};
        std::vector<T> out(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(out));
    }
    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> out(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
        return Polynomial(std::move(out));
    }

private:
    std::vector<T> c_;
};

/// Polynomial in the pulse-error amplitude; entry p is the coefficient of eps^p.
using EpsSeries = Polynomial<Complex>;

// ---------------------------------------------------------------------------
// Cyclotomic integers
// ---------------------------------------------------------------------------

inline constexpr int kMaxCyclotomicOrder = 256;

/// Coefficients of the d-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(int d);

/// Residue of sum counts[e] x^e modulo the d-th cyclotomic polynomial.
/// The result always has length deg(Phi_d).
std::vector<Integer> group_ring_reduce(std::span<const Integer> counts, int d);

/// Integer combination of powers of zeta_d = exp(2 pi i / d).
///
/// counts()[e] is the multiplicity of zeta_d^e. Two elements denote the same
/// complex number iff their canonical residues agree. Only the ring
/// operations needed for identity checking are provided.
class GroupRingElement {
public:
    explicit GroupRingElement(int order);

    static GroupRingElement constant(int order, const Integer& value);
    static GroupRingElement monomial(int order, std::int64_t exponent, const Integer& mult = 1);

    int order() const { return static_cast<int>(counts_.size()); }
    const std::vector<Integer>& counts() const { return counts_; }

    /// Adds mult * zeta^exponent (exponent taken mod d).
    void add_power(std::int64_t exponent, const Integer& mult = 1);

    /// Complex conjugate: exponents negated mod d.
    GroupRingElement conj() const;
    /// Multiplication by zeta^exponent.
    GroupRingElement shifted(std::int64_t exponent) const;

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement scaled(const Integer& s) const;

    std::vector<Integer> residue() const;
    /// Exact equality as complex numbers.
    bool same_value(const GroupRingElement& o) const;
    bool is_zero_value() const;
    /// All raw counts zero (stronger than is_zero_value).
    bool is_empty() const;
    /// Raw sum of all counts (the number of summed roots, with sign).
    Integer total_count() const;

    /// Value at zeta_d^g; g must be coprime to d.
    Complex eval(int g = 1) const;

private:
    std::vector<Integer> counts_;
};

Complex group_ring_eval(const GroupRingElement& elem, int primitive_exponent);

std::string format_residue(const std::vector<Integer>& residue);

// ---------------------------------------------------------------------------
// Exact angles
// ---------------------------------------------------------------------------

/// An angle of the form a*phi2 + b*pi with rational a, b. UR phases are all
/// of this shape, which lets modular statements be checked without rounding.
struct AffineAngle {
    Rational phi2{0};
    Rational pi{0};

    double value(double phi2_value) const;

    AffineAngle operator+(const AffineAngle& o) const { return {phi2 + o.phi2, pi + o.pi}; }
    AffineAngle operator-(const AffineAngle& o) const { return {phi2 - o.phi2, pi - o.pi}; }
    AffineAngle operator-() const { return {-phi2, -pi}; }
    AffineAngle& operator+=(const AffineAngle& o) { return *this = *this + o; }
    AffineAngle operator*(const Rational& s) const { return {phi2 * s, pi * s}; }
    bool operator==(const AffineAngle& o) const = default;

    /// Same angle with the pi-coefficient reduced into [0, period).
    AffineAngle reduced_pi(std::int64_t period) const;
};

/// r mod p into [0, p) for a positive integer period p.
Rational rational_mod(const Rational& r, std::int64_t p);
bool is_integer(const Rational& r);

}  // namespace urdd
