#pragma once

// Exact and asymptotic counts of 2-to-1 mappings from GF(2^n) to itself.
//
//   N_n    = (2^n)!^2 / (2^(2^(n-1)) * ((2^(n-1))!)^2)
//   N_n/B  = (2^n)!   / (2^(2^(n-1)) * ((2^(n-1))!)^2),  B = (2^n)!
//
// Asymptotics:  N ~ 2^(n*2^n + 2^(n-1) + 1) / e^(2^n)
//               N/B ~ 2^(2^(n-1)) / sqrt(pi * 2^(n-1))

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tto/errors.hpp"

namespace tto {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline bigint factorial_big(std::uint64_t n) {
    bigint r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

// Three significant figures, ties rounded half-to-even.  Values in
// [1, 1000) print positionally ("4.38", "50.3", "171"); otherwise "d.dde<E>".
inline std::string format_3sig(const bigrat& v) {
    bigint a = boost::multiprecision::numerator(v);
    bigint b = boost::multiprecision::denominator(v);
    if (a <= 0 || b <= 0) fail("OutOfRange", "format_3sig expects a positive value");
    long long E = 0;
    while (a >= 10 * b) {
        b *= 10;
        ++E;
    }
    while (a < b) {
        a *= 10;
        --E;
    }
    // mantissa in [100, 1000), rounded half-even
    bigint num = a * 100;
    bigint m = num / b, r = num % b;
    if (2 * r > b || (2 * r == b && (m & 1) != 0)) ++m;
    if (m == 1000) {
        m = 100;
        ++E;
    }
    const std::string d = m.convert_to<std::string>();  // exactly 3 digits
    if (E == 0) return d.substr(0, 1) + "." + d.substr(1);
    if (E == 1) return d.substr(0, 2) + "." + d.substr(2);
    if (E == 2) return d;
    return d.substr(0, 1) + "." + d.substr(1) + "e" + std::to_string(E);
}

struct TwoToOneCount {
    bigint count;            // N_n
    bigint bijections;       // (2^n)!
    bigrat ratio;            // N_n / bijections
    std::string ratio_3sig;  // ratio to three significant figures
};

inline TwoToOneCount count_two_to_one_exact(int n) {
    if (n < 1 || n > 12) fail("OutOfRange", "exact count supports 1 <= n <= 12");
    const std::uint64_t q = 1ull << n, h = q / 2;
    const bigint fq = factorial_big(q);
    const bigint fh = factorial_big(h);
    const bigint denom = (bigint(1) << h) * fh * fh;
    TwoToOneCount out;
    out.count = fq * fq / denom;  // exact: denom | fq (N_n is an integer)
    out.bijections = fq;
    out.ratio = bigrat(fq, denom);
    out.ratio_3sig = format_3sig(out.ratio);
    return out;
}

struct TwoToOneCountApprox {
    bool count_overflows = false;
    double count = 0.0;       // valid when !count_overflows
    double count_log2 = 0.0;  // always valid
    bool ratio_overflows = false;
    double ratio = 0.0;
    double ratio_log2 = 0.0;
};

inline TwoToOneCountApprox count_two_to_one_approx(int n) {
    if (n < 1) fail("OutOfRange", "n must be >= 1");
    const double pn = std::ldexp(1.0, n);  // 2^n
    TwoToOneCountApprox out;
    out.count_log2 = n * pn + pn / 2 + 1 - pn * std::log2(std::exp(1.0));
    out.ratio_log2 = pn / 2 - 0.5 * std::log2(3.14159265358979323846 * pn / 2);
    if (out.count_log2 < 1020.0)
        out.count = std::exp2(out.count_log2);
    else
        out.count_overflows = true;
    if (out.ratio_log2 < 1020.0)
        out.ratio = std::exp2(out.ratio_log2);
    else
        out.ratio_overflows = true;
    return out;
}

}  // namespace tto
