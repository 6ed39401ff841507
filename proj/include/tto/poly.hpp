#pragma once

// Sparse univariate polynomials over a Field, linearized polynomials
// (sums of a_i * x^(p^i)), kernel computation, and the unique-root test
// for cubics x^3 + a x + b.

#include <cstdint>
#include <map>
#include <vector>

#include "tto/gf.hpp"

namespace tto {

class Poly {
public:
    // Dense Horner is used up to this degree; above it, evaluation goes
    // term by term with square-and-multiply powers.
    static constexpr std::uint64_t kDenseEvalLimit = 64;

    explicit Poly(FieldPtr f) : field_(std::move(f)) {}

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }

    static Poly monomial(FieldPtr f, elem_t c, std::uint64_t e) {
        Poly p(std::move(f));
        p.set(e, c);
        return p;
    }

    static Poly from_dense(FieldPtr f, const std::vector<elem_t>& coeffs) {
        Poly p(std::move(f));
        for (std::size_t i = 0; i < coeffs.size(); ++i) p.set(i, coeffs[i]);
        return p;
    }

    Poly& set(std::uint64_t e, elem_t c) {
        if (c >= field_->order()) fail("OutOfRange", "coefficient index outside the field");
        if (c == 0)
            terms_.erase(e);
        else
            terms_[e] = c;
        return *this;
    }

    elem_t coeff(std::uint64_t e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    long long degree() const { return terms_.empty() ? -1 : static_cast<long long>(terms_.rbegin()->first); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint64_t, elem_t>& terms() const { return terms_; }
    const FieldPtr& field() const { return field_; }

    Poly plus(const Poly& o) const {
        if (o.field_.get() != field_.get()) fail("FieldMismatch", "polynomial addition across fields");
        Poly r = *this;
        for (auto [e, c] : o.terms_) r.set(e, field_->add(r.coeff(e), c));
        return r;
    }

    Poly scaled(elem_t c) const {
        Poly r(field_);
        for (auto [e, v] : terms_) r.set(e, field_->mul(v, c));
        return r;
    }

    elem_t eval(elem_t x) const {
        if (terms_.empty()) return 0;
        const std::uint64_t deg = terms_.rbegin()->first;
        if (deg <= kDenseEvalLimit) {
            elem_t acc = 0;
            for (std::uint64_t e = deg + 1; e-- > 0;) {
                acc = field_->mul(acc, x);
                auto it = terms_.find(e);
                if (it != terms_.end()) acc = field_->add(acc, it->second);
            }
            return acc;
        }
        elem_t acc = 0;
        for (auto [e, c] : terms_)
            acc = field_->add(acc, field_->mul(c, field_->pow(x, static_cast<long long>(e))));
        return acc;
    }

private:
    FieldPtr field_;
    std::map<std::uint64_t, elem_t> terms_;
};

// sum of coeffs[i] * x^(p^i); additive by construction.
class LinearizedPoly {
public:
    LinearizedPoly(FieldPtr f, std::vector<elem_t> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
        for (auto c : coeffs_)
            if (c >= field_->order()) fail("OutOfRange", "coefficient index outside the field");
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<elem_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    elem_t eval(elem_t x) const {
        elem_t acc = 0, y = x;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i]) acc = field_->add(acc, field_->mul(coeffs_[i], y));
            y = field_->pow(y, field_->characteristic());
        }
        return acc;
    }

    Poly to_poly() const {
        Poly p(field_);
        std::uint64_t e = 1;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i]) p.set(e, field_->add(p.coeff(e), coeffs_[i]));
            e *= field_->characteristic();
        }
        return p;
    }

private:
    FieldPtr field_;
    std::vector<elem_t> coeffs_;
};

struct KernelInfo {
    std::vector<elem_t> kernel;  // ascending
    unsigned dim = 0;            // |kernel| = p^dim
};

// Exhaustive root scan; the kernel of an additive map is a GF(p)-subspace,
// so its size must be a power of p (checked).
inline KernelInfo linearized_kernel(const LinearizedPoly& L) {
    const auto& f = L.field();
    KernelInfo info;
    for (elem_t x = 0; x < f->order(); ++x)
        if (L.eval(x) == 0) info.kernel.push_back(x);
    std::uint64_t s = info.kernel.size();
    while (s > 1) {
        if (s % f->characteristic()) fail("OutOfRange", "kernel size is not a power of p");
        s /= f->characteristic();
        ++info.dim;
    }
    return info;
}

// Whether x^3 + a x + b (b != 0) has exactly one root in the field:
//   p = 2:  Tr(a^3 / b^2) != Tr(1)
//   p = 3:  a = 0, or -a is a non-square
//   p > 3:  -4 a^3 - 27 b^2 is a non-square
inline bool cubic_unique_root(const Field& f, elem_t a, elem_t b) {
    if (b == 0) fail("ZeroConstantTerm", "the test requires b != 0");
    const unsigned p = f.characteristic();
    if (p == 2) {
        const elem_t t = f.mul(f.pow(a, 3), f.inv(f.mul(b, b)));
        return f.trace_abs(t) != f.trace_abs(1);
    }
    if (p == 3) return a == 0 || f.quad_char(f.neg(a)) == -1;
    const elem_t four = static_cast<elem_t>(4 % p);
    const elem_t twenty7 = static_cast<elem_t>(27 % p);
    const elem_t disc = f.neg(f.add(f.mul(four, f.pow(a, 3)), f.mul(twenty7, f.mul(b, b))));
    return f.quad_char(disc) == -1;
}

}  // namespace tto
