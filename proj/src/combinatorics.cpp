#include "urdd/combinatorics.hpp"

#include <cassert>
#include <string>

namespace urdd {

IndexTuple::IndexTuple(int n, std::vector<int> entries) : n_(n), r_(std::move(entries)) {
    if (n_ < 1) throw DomainError("ambient length must be positive");
    if (r_.size() % 2 != 0) throw DomainError("index tuple must have even length");
    for (std::size_t j = 0; j < r_.size(); ++j) {
        if (r_[j] < 1 || r_[j] > n_)
            throw DomainError("index " + std::to_string(r_[j]) + " outside [1, " +
                              std::to_string(n_) + "]");
        if (j > 0 && r_[j] <= r_[j - 1]) throw DomainError("index tuple must be strictly increasing");
    }
}

void for_each_tuple(int n, int length, const std::function<void(std::span<const int>)>& visit) {
    if (length < 0 || length > n) return;
    std::vector<int> r(length);
    for (int j = 0; j < length; ++j) r[j] = j + 1;
    while (true) {
        visit(r);
        int j = length - 1;
        while (j >= 0 && r[j] == n - length + j + 1) --j;
        if (j < 0) return;
        ++r[j];
        for (int i = j + 1; i < length; ++i) r[i] = r[i - 1] + 1;
    }
}

std::vector<int> sign_pattern(const IndexTuple& r) {
    std::vector<int> c(r.n());
    int sign = 1;
    std::size_t next = 0;
    for (int i = 1; i <= r.n(); ++i) {
        c[i - 1] = sign;
        if (next < r.entries().size() && r.entries()[next] == i)
            ++next;  // repeat this sign at i + 1
        else
            sign = -sign;
    }
    return c;
}

Signature signature_pair(std::span<const int> r) {
    Signature out;
    for (std::size_t j = 1; j <= r.size(); ++j) {
        const int sgn = ((j + r[j - 1]) % 2 == 0) ? 1 : -1;
        out.s += sgn;
        out.w += sgn * r[j - 1];
    }
    return out;
}

IndexTuple involution(const IndexTuple& r, InvolutionKind kind) {
    const int n = r.n();
    const int len = r.size();
    std::vector<int> out(len);
    switch (kind) {
        case InvolutionKind::tau:
            for (int j = 1; j <= len; ++j) out[j - 1] = n + 1 - r[len + 1 - j];
            break;
        case InvolutionKind::tau_internal:
            if (len > 0 && r[len] == n) throw DomainError("tau_I requires r_{2k} < n");
            for (int j = 1; j <= len; ++j) out[j - 1] = n - r[len + 1 - j];
            break;
        case InvolutionKind::tau_boundary:
            if (len == 0 || r[len] != n) throw DomainError("tau_B requires r_{2k} = n");
            for (int j = 1; j < len; ++j) out[j - 1] = n - r[len - j];
            out[len - 1] = n;
            break;
    }
    return IndexTuple(n, std::move(out));
}

AffineAngle l_r_xd(const URConfig& cfg, const IndexTuple& r) {
    if (r.n() != cfg.n) throw DomainError("tuple ambient length differs from n");
    const auto sw = signature_pair(r);
    const std::int64_t n = cfg.n;
    const Rational& phi = cfg.phi_over_pi;
    AffineAngle out;
    out.phi2 = Rational(n) - Rational(sw.s);
    out.pi = phi * Rational(n * (n - 2), 2) - phi * (Rational(n) - Rational(1, 2)) * Rational(sw.s) +
             phi * Rational(sw.w);
    assert(out == l_r_xd_direct(cfg, r));
    return out;
}

AffineAngle l_r_xd_direct(const URConfig& cfg, const IndexTuple& r) {
    const auto d = exact_deltas(cfg);
    std::vector<AffineAngle> xd(d.rbegin(), d.rend());
    return l_r(r, std::span<const AffineAngle>(xd));
}

Rational l_r_xn_closed(const IndexTuple& r) {
    const auto sw = signature_pair(r);
    return Rational(sw.s - r.n(), 2) + Rational(sw.w);
}

}  // namespace urdd
