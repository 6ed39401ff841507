#pragma once

// Walsh transforms of maps F: GF(2^n) -> GF(2^n) and the spectral
// characterisation of 2-to-1 maps.
//
//   W_F(u, v) = sum_x (-1)^(Tr(v F(x)) + Tr(u x))
//
// W_F(0, .) is the Hadamard transform of the fiber-count vector, so power
// moments of fiber sizes are spectral sums.  The quantity
//
//   T(F) = 2^(-2n) sum_{v1,v2} W(0,v1) W(0,v2) W(0,v1+v2)
//          - 2^(2-n) sum_v W(0,v)^2 + 2^(n+2)
//
// equals sum_b N_b (N_b - 2)^2, hence T(F) >= 0 with equality iff F is
// 2-to-1.  Both the direct convolution and the transform-domain evaluation
// of the triple sum are computed and must agree exactly.

#include <cstdint>
#include <vector>

#include "tto/table.hpp"

namespace tto {

// In-place Hadamard transform, size must be a power of two.
inline void fwht(std::vector<long long>& a) {
    const std::size_t n = a.size();
    for (std::size_t len = 1; len < n; len <<= 1)
        for (std::size_t i = 0; i < n; i += len << 1)
            for (std::size_t j = i; j < i + len; ++j) {
                const long long x = a[j], y = a[j + len];
                a[j] = x + y;
                a[j + len] = x - y;
            }
}

// masks[x] has bit i = Tr(x * alpha^i) where alpha is the class of x in the
// polynomial basis; x -> masks[x] is a GF(2)-linear bijection turning the
// trace pairing Tr(u x) into the dot product masks[u] . x.
inline std::vector<std::uint32_t> trace_masks(const Field& f) {
    if (f.characteristic() != 2) fail("OddCharacteristic", "trace masks need characteristic 2");
    const unsigned n = f.degree();
    std::vector<std::uint32_t> masks(f.order(), 0);
    std::vector<elem_t> basis(n);
    basis[0] = 1;
    if (n >= 2) {
        const elem_t alpha = f.from_coeffs({0, 1});
        for (unsigned i = 1; i < n; ++i) basis[i] = f.pow(alpha, i);
    }
    for (elem_t x = 0; x < f.order(); ++x) {
        std::uint32_t m = 0;
        for (unsigned i = 0; i < n; ++i)
            if (f.trace_abs(f.mul(x, basis[i]))) m |= 1u << i;
        masks[x] = m;
    }
    return masks;
}

namespace walshdetail {

inline void require_square_char2(const MapTable& F) {
    if (F.domain->characteristic() != 2 || F.codomain->characteristic() != 2)
        fail("OddCharacteristic", "Walsh analysis is defined here for characteristic 2");
    if (F.domain->order() != F.codomain->order())
        fail("FieldMismatch", "domain and codomain must have equal order");
}

inline std::vector<long long> fiber_count_vector(const MapTable& F) {
    std::vector<long long> N(F.codomain->order(), 0);
    for (auto v : F.values) ++N[v];
    return N;
}

}  // namespace walshdetail

struct WalshSpectrum {
    unsigned n = 0;
    elem_t v = 0;
    std::vector<long long> values;  // indexed by u in field element order
};

// W_F(u, v) for fixed v, all u.
inline WalshSpectrum walsh_component(const MapTable& F, elem_t v) {
    walshdetail::require_square_char2(F);
    const std::uint64_t q = F.domain->order();
    std::vector<long long> s(q);
    for (elem_t x = 0; x < q; ++x)
        s[x] = F.codomain->trace_abs(F.codomain->mul(v, F.values[x])) ? -1 : 1;
    fwht(s);  // s[w] = sum_x (-1)^(Tr(v F(x)) + w.x)
    const auto masks = trace_masks(*F.domain);
    WalshSpectrum out;
    out.n = F.domain->degree();
    out.v = v;
    out.values.resize(q);
    for (elem_t u = 0; u < q; ++u) out.values[u] = s[masks[u]];
    return out;
}

// W_F(0, v) for all v, in field element order.
inline std::vector<long long> walsh_zero_row(const MapTable& F) {
    walshdetail::require_square_char2(F);
    auto N = walshdetail::fiber_count_vector(F);
    fwht(N);  // N[w] = sum_b N_b (-1)^(w.b)
    const auto masks = trace_masks(*F.codomain);
    std::vector<long long> out(N.size());
    for (elem_t v = 0; v < N.size(); ++v) out[v] = N[masks[v]];
    return out;
}

namespace walshdetail {

// Triple correlation S3 = sum_{v1,v2} W[v1] W[v2] W[v1 ^ v2], evaluated in
// the transform domain; the direct double loop is run alongside whenever it
// is affordable and the two must agree.
inline __int128 triple_sum(const std::vector<long long>& W) {
    const std::size_t q = W.size();
    std::vector<long long> t = W;
    fwht(t);  // t = q * N (Hadamard is an involution up to the factor q)
    __int128 fast = 0;
    for (auto x : t) fast += (__int128)x * x * x;
    fast /= (long long)q;
    if ((std::uint64_t)q * q <= (1ull << 24)) {
        __int128 direct = 0;
        for (std::size_t v1 = 0; v1 < q; ++v1) {
            if (!W[v1]) continue;
            for (std::size_t v2 = 0; v2 < q; ++v2)
                direct += (__int128)W[v1] * W[v2] * W[v1 ^ v2];
        }
        if (direct != fast) fail("OutOfRange", "triple-sum evaluation paths disagree");
    }
    return fast;
}

}  // namespace walshdetail

// sum_b N_b^j via the Walsh identities for j <= 3, by census above that.
inline long long moment_sum(const MapTable& F, unsigned j) {
    walshdetail::require_square_char2(F);
    if (j < 1) fail("OutOfRange", "moment order must be >= 1");
    const std::uint64_t q = F.domain->order();
    if (j == 1) return static_cast<long long>(q);
    if (j >= 4) {
        const auto N = walshdetail::fiber_count_vector(F);
        __int128 acc = 0;
        for (auto c : N) {
            __int128 t = 1;
            for (unsigned i = 0; i < j; ++i) t *= c;
            acc += t;
        }
        return static_cast<long long>(acc);
    }
    auto N = walshdetail::fiber_count_vector(F);
    fwht(N);  // W(0, .) in mask order; moments are permutation-invariant
    if (j == 2) {
        __int128 acc = 0;
        for (auto w : N) acc += (__int128)w * w;
        return static_cast<long long>(acc / (long long)q);
    }
    const __int128 s3 = walshdetail::triple_sum(N);
    return static_cast<long long>(s3 / (long long)q / (long long)q);
}

// The 2-to-1 statistic T(F); T >= 0 and T == 0 iff F is 2-to-1.
inline long long two_to_one_statistic(const MapTable& F) {
    walshdetail::require_square_char2(F);
    const long long q = static_cast<long long>(F.domain->order());
    auto W = walshdetail::fiber_count_vector(F);
    fwht(W);
    __int128 s2 = 0;
    for (auto w : W) s2 += (__int128)w * w;
    const __int128 s3 = walshdetail::triple_sum(W);
    if (s3 % ((__int128)q * q) || s2 % q) fail("OutOfRange", "statistic divisibility check failed");
    const __int128 t = s3 / q / q - 4 * (s2 / q) + 4 * (__int128)q;
    return static_cast<long long>(t);
}

// sum_b phi(N_b) for phi(X) = sum_j A[j] X^j with integer coefficients;
// requires phi(0) = phi(2) = 0 and phi(x) > 0 for natural x not in {0, 2}
// up to the domain order, so that the sum vanishes iff F is 2-to-1.
inline long long general_phi_statistic(const MapTable& F, const std::vector<long long>& A) {
    walshdetail::require_square_char2(F);
    if (A.empty() || A[0] != 0) fail("InvalidPhi", "phi(0) must be 0");
    const std::uint64_t q = F.domain->order();
    auto phi_at = [&](std::uint64_t x) {
        __int128 acc = 0, xp = 1;
        for (std::size_t j = 0; j < A.size(); ++j) {
            acc += (__int128)A[j] * xp;
            xp *= x;
        }
        return acc;
    };
    if (phi_at(2) != 0) fail("InvalidPhi", "phi(2) must be 0");
    for (std::uint64_t x = 1; x <= q; ++x) {
        if (x == 2) continue;
        if (phi_at(x) <= 0) fail("InvalidPhi", "phi must be positive away from {0, 2}");
    }
    __int128 acc = 0;
    for (std::size_t j = 1; j < A.size(); ++j)
        if (A[j]) acc += (__int128)A[j] * moment_sum(F, static_cast<unsigned>(j));
    return static_cast<long long>(acc);
}

}  // namespace tto
