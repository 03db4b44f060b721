#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "urdd/algebra.hpp"
#include "urdd/urphases.hpp"

namespace urdd {

inline constexpr std::uint64_t kDefaultBruteForceCap = 100'000'000;

/// Which increasing 2k-tuples take part in a sum: all of them, those with
/// r_{2k} < n ("internal"), or those with r_{2k} = n ("boundary").
enum class TupleDomain { all, internal, boundary };

/// A_s^{(k)} = sum over tuples with S(r) = s of omega^{W(r)}, stored exactly
/// as an element of Z[zeta_d] (omega = zeta_d^g).
struct FourierSum {
    int n = 0;
    int k = 0;
    int s = 0;
    GroupRingElement element{1};
};

/// Direct enumeration of all C(n, 2k) tuples. Throws ResourceError when the
/// tuple count exceeds the cap.
FourierSum a_s_bruteforce(const URConfig& cfg, int k, int s, TupleDomain domain = TupleDomain::all,
                          std::uint64_t cap = kDefaultBruteForceCap);

/// Position-by-position dynamic program over (rank, partial S, W mod d).
FourierSum a_s_dp(const URConfig& cfg, int k, int s, TupleDomain domain = TupleDomain::all);

/// Every signature class of one (n, k), for all three tuple domains.
struct SignatureSums {
    int n = 0;
    int k = 0;
    int order = 1;
    std::map<int, GroupRingElement> all;
    std::map<int, GroupRingElement> internal;
    std::map<int, GroupRingElement> boundary;
    std::map<int, Integer> tuple_counts;  // number of tuples per signature

    /// A_s for the given domain; the zero element outside [-2k, 2k].
    GroupRingElement at(int s, TupleDomain domain = TupleDomain::all) const;

    /// Fault injection: adds one count to A_s (all domain) so that checks
    /// built on these sums must fail.
    void perturb(int s);
};

SignatureSums signature_sums_dp(const URConfig& cfg, int k);
SignatureSums signature_sums_bruteforce(const URConfig& cfg, int k,
                                        std::uint64_t cap = kDefaultBruteForceCap);

/// Outcome of one exact identity check. lhs/rhs hold canonical residues.
struct IdentityCheck {
    std::string identity;
    int n = 0;
    int k = 0;
    int s = 0;
    Sign sign = Sign::plus;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string note;
};

/// A_s = omega^s conj(A_s).
IdentityCheck verify_reflection(const URConfig& cfg, const SignatureSums& sums, int s);
IdentityCheck verify_reflection(const URConfig& cfg, int k, int s);

/// Report for A_s = -conj(A_{-s}) and the intermediate facts used to prove it.
struct NonzeroSignatureReport {
    bool pass = true;
    std::vector<IdentityCheck> checks;
    std::map<int, GroupRingElement> b_s;  // A_s + conj(A_{-s})
};

NonzeroSignatureReport verify_nonzero_signature(const URConfig& cfg, const SignatureSums& sums);
NonzeroSignatureReport verify_nonzero_signature(const URConfig& cfg, int k);

/// A_0 = conj(A_0) = (-1)^k C(n/2, k).
IdentityCheck verify_zero_signature(const URConfig& cfg, const SignatureSums& sums);
IdentityCheck verify_zero_signature(const URConfig& cfg, int k);

/// omega^s != 1 for every nonzero even s with |s| < n, checked exhaustively.
IdentityCheck verify_no_short_even_period(const URConfig& cfg);

/// omega^n = 1 and omega^2 has order exactly n/2.
IdentityCheck verify_root_orders(const URConfig& cfg);

// ---------------------------------------------------------------------------
// Transfer-matrix generating function
// ---------------------------------------------------------------------------

/// 2x2 matrix whose entries are polynomials in t with coefficients in Z[zeta_D].
class MatrixPoly {
public:
    MatrixPoly(int order, int degree);

    static MatrixPoly identity(int order);
    /// Constant matrix with integer entries.
    static MatrixPoly constant(int order, std::array<int, 4> entries);
    /// I + t K with K antidiagonal, K_12 = zeta^e, K_21 = zeta^{-e}.
    static MatrixPoly transfer_factor(int order, std::int64_t exponent);
    /// (1 - t^2)^power times I.
    static MatrixPoly one_minus_t2_power(int order, int power);

    int order() const { return order_; }
    int degree() const { return degree_; }
    const GroupRingElement& coeff(int row, int col, int power) const;
    GroupRingElement& coeff(int row, int col, int power);

    MatrixPoly operator*(const MatrixPoly& o) const;
    /// Coefficient-wise exact equality.
    bool same_value(const MatrixPoly& o) const;

private:
    int order_;
    int degree_;
    std::array<std::vector<GroupRingElement>, 4> e_;
};

enum class ParityCase { four_m, four_m_plus_two_odd_m, four_m_plus_two_even_m };

const char* to_string(ParityCase c);

struct TransferProduct {
    int n = 0;
    Sign sign = Sign::plus;
    ParityCase parity = ParityCase::four_m;
    Rational gamma{0};
    Rational c{0};
    std::vector<Rational> beta;                // beta_1..beta_n
    int order = 1;                             // D: omega^{beta_j} = zeta_D^{beta_exponent[j]}
    std::vector<std::int64_t> beta_exponent;
    MatrixPoly p{1, 0};
    MatrixPoly q{1, 0};
    std::vector<GroupRingElement> lambda;      // (1,1) coefficients of t^0..t^n
    std::vector<GroupRingElement> mu;          // (1,2) coefficients; recorded only
    std::vector<IdentityCheck> checks;
    bool pass = true;
};

/// Builds P(t) = (I + t K_1) ... (I + t K_n) with the beta_j choice of the
/// matching parity case and checks every factorization step exactly.
TransferProduct transfer_product(const URConfig& cfg);

}  // namespace urdd
