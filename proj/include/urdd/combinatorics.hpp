#pragma once

#include <cassert>
#include <cstdint>
#include <type_traits>
#include <functional>
#include <span>
#include <vector>

#include "urdd/algebra.hpp"
#include "urdd/urphases.hpp"

namespace urdd {

/// Strictly increasing tuple 1 <= r_1 < ... < r_{2k} <= n.
class IndexTuple {
public:
    /// Throws DomainError on a non-increasing or out-of-range tuple, or on
    /// odd length.
    IndexTuple(int n, std::vector<int> entries);

    int n() const { return n_; }
    int k() const { return static_cast<int>(r_.size()) / 2; }
    int size() const { return static_cast<int>(r_.size()); }
    std::span<const int> entries() const { return r_; }
    int operator[](int j) const { return r_.at(j - 1); }  // 1-based
    bool empty() const { return r_.empty(); }
    bool operator==(const IndexTuple&) const = default;

private:
    int n_;
    std::vector<int> r_;
};

/// Visits every strictly increasing tuple of the given length in
/// lexicographic order.
void for_each_tuple(int n, int length, const std::function<void(std::span<const int>)>& visit);

/// +1 / -1 coefficients c_1..c_n of L_r: start at +1, alternate, and repeat
/// the sign once right after each r_j.
std::vector<int> sign_pattern(const IndexTuple& r);

/// Alternating form x_1 - x_2 + x_3 - ...
template <typename T>
T alt_form(std::span<const T> x) {
    T acc{};
    for (std::size_t j = 0; j < x.size(); ++j) acc = (j % 2 == 0) ? acc + x[j] : acc - x[j];
    return acc;
}

template <typename T>
T l_r_blocks(const IndexTuple& r, std::span<const T> x);

/// L_r(X) through the coefficient pattern.
template <typename T>
T l_r(const IndexTuple& r, std::span<const T> x) {
    if (static_cast<int>(x.size()) != r.n()) throw DomainError("L_r: vector length differs from n");
    const auto c = sign_pattern(r);
    T acc{};
    for (std::size_t j = 0; j < x.size(); ++j) acc = c[j] > 0 ? acc + x[j] : acc - x[j];
    if constexpr (std::is_integral_v<T> || std::is_same_v<T, AffineAngle>)
        assert(acc == l_r_blocks(r, x));
    return acc;
}

/// L_r(X) through the block recursion
/// sum_{j=0}^{2k} (-1)^{j + r_j} L(x_{r_j + 1}, ..., x_{r_{j+1}}), r_0 = 0, r_{2k+1} = n.
template <typename T>
T l_r_blocks(const IndexTuple& r, std::span<const T> x) {
    if (static_cast<int>(x.size()) != r.n()) throw DomainError("L_r: vector length differs from n");
    std::vector<int> cuts{0};
    cuts.insert(cuts.end(), r.entries().begin(), r.entries().end());
    cuts.push_back(r.n());
    T acc{};
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
        const T block = alt_form(x.subspan(cuts[j], cuts[j + 1] - cuts[j]));
        acc = ((j + cuts[j]) % 2 == 0) ? acc + block : acc - block;
    }
    return acc;
}

struct Signature {
    int s = 0;           // S(r) = sum (-1)^{j + r_j}
    std::int64_t w = 0;  // W(r) = sum (-1)^{j + r_j} r_j
    bool operator==(const Signature&) const = default;
};

Signature signature_pair(std::span<const int> r);
inline Signature signature_pair(const IndexTuple& r) { return signature_pair(r.entries()); }

enum class InvolutionKind { tau, tau_internal, tau_boundary };

/// tau(r)_j = n + 1 - r_{2k+1-j}; tau_I(r)_j = n - r_{2k+1-j} (needs r_{2k} < n);
/// tau_B(r)_j = n - r_{2k-j} for j < 2k and tau_B(r)_{2k} = n (needs r_{2k} = n).
IndexTuple involution(const IndexTuple& r, InvolutionKind kind);

/// Closed form L_r(X_D) = n phi2 + n(n-2)/2 Phi - (phi2 + n Phi - Phi/2) S + Phi W.
AffineAngle l_r_xd(const URConfig& cfg, const IndexTuple& r);

/// L_r evaluated directly on X_D = (Delta_n, Delta_{n-1}, ..., Delta_1).
AffineAngle l_r_xd_direct(const URConfig& cfg, const IndexTuple& r);

/// (S - n)/2 + W, the closed form of L_r(1, 2, ..., n) for even n.
Rational l_r_xn_closed(const IndexTuple& r);

}  // namespace urdd
