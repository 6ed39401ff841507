#pragma once

// Runtime-parameterised finite fields GF(p^n).
//
// Elements are integer indices in [0, p^n): the coefficient vector of the
// polynomial-basis representation read as a base-p number (c0 + c1*p + ...).
// Addition is digitwise mod p (XOR when p = 2); multiplication, inversion and
// powers go through exp/log tables over a fixed primitive element.  The table
// build itself uses schoolbook polynomial arithmetic mod the field modulus,
// which is kept around as an independent reference path (mul_schoolbook).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tto/errors.hpp"

namespace tto {

using elem_t = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace gfdetail {

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * b % m);
        b = static_cast<std::uint64_t>((unsigned __int128)b * b % m);
        e >>= 1;
    }
    return r;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    if (v > 1) out.push_back(v);
    return out;
}

// Dense polynomials over GF(p): coefficients low-to-high, each in [0, p).
using PVec = std::vector<unsigned>;

inline void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PVec pmul(const PVec& a, const PVec& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<unsigned>(((std::uint64_t)c[i + j] + (std::uint64_t)a[i] * b[j]) % p);
    }
    ptrim(c);
    return c;
}

inline PVec psub(const PVec& a, const PVec& b, unsigned p) {
    PVec c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint64_t av = i < a.size() ? a[i] : 0;
        std::uint64_t bv = i < b.size() ? b[i] : 0;
        c[i] = static_cast<unsigned>((av + p - bv) % p);
    }
    ptrim(c);
    return c;
}

// a mod f, f monic.
inline void preduce(PVec& a, const PVec& f, unsigned p) {
    const int df = static_cast<int>(f.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= df; --i) {
        const std::uint64_t c = a[i];
        if (!c) continue;
        a[i] = 0;
        for (int j = 0; j < df; ++j)
            a[i - df + j] = static_cast<unsigned>((a[i - df + j] + c * (p - f[j])) % p);
    }
    ptrim(a);
}

inline PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, unsigned p) {
    PVec c = pmul(a, b, p);
    preduce(c, f, p);
    return c;
}

inline PVec ppowmod(PVec base, std::uint64_t e, const PVec& f, unsigned p) {
    PVec r{1};
    preduce(base, f, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline PVec pgcd(PVec a, PVec b, unsigned p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        unsigned lead = b.back();
        if (lead != 1) {
            const std::uint64_t il = modpow(lead, p - 2, p);
            for (auto& c : b) c = static_cast<unsigned>((std::uint64_t)c * il % p);
        }
        preduce(a, b, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin test: f (monic, degree n) is irreducible over GF(p) iff
// x^(p^n) == x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
inline bool poly_irreducible(const PVec& f, unsigned p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    const PVec x{0, 1};
    PVec t = x;
    for (int i = 0; i < n; ++i) t = ppowmod(std::move(t), p, f, p);
    if (!psub(t, x, p).empty()) return false;
    for (auto r : distinct_prime_factors(static_cast<std::uint64_t>(n))) {
        const int k = n / static_cast<int>(r);
        PVec s = x;
        for (int i = 0; i < k; ++i) s = ppowmod(std::move(s), p, f, p);
        PVec g = pgcd(psub(s, x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace gfdetail

class Field : public std::enable_shared_from_this<Field> {
public:
    static constexpr std::uint64_t kDefaultMaxOrder = 1ull << 20;
    static constexpr std::uint64_t kHardMaxOrder = 1ull << 22;

    // modulus: monic irreducible of degree n, coefficients low-to-high.
    // When omitted, the lexicographically smallest irreducible is chosen,
    // comparing coefficient vectors from the highest degree downwards.
    static FieldPtr make(unsigned p, unsigned n,
                         std::optional<std::vector<unsigned>> modulus = std::nullopt,
                         std::uint64_t max_order = kDefaultMaxOrder) {
        if (!gfdetail::is_prime(p)) fail("NotPrime", "p = " + std::to_string(p));
        if (n < 1) fail("OutOfRange", "n must be >= 1");
        if (max_order > kHardMaxOrder) max_order = kHardMaxOrder;
        std::uint64_t q = 1;
        for (unsigned i = 0; i < n; ++i) {
            q *= p;
            if (q > max_order)
                fail("DomainTooLarge", "p^n exceeds the order cap " + std::to_string(max_order));
        }
        std::vector<unsigned> mod;
        if (modulus) {
            mod = *modulus;
            if (mod.size() != n + 1) fail("ReduciblePolynomial", "modulus degree must equal n");
            for (auto& c : mod) c %= p;
            if (mod.back() != 1) fail("ReduciblePolynomial", "modulus must be monic");
            if (!gfdetail::poly_irreducible(mod, p))
                fail("ReduciblePolynomial", "supplied modulus is reducible over GF(p)");
        } else {
            mod = smallest_irreducible(p, n);
        }
        return FieldPtr(new Field(p, n, q, std::move(mod)));
    }

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    std::uint64_t order() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }
    elem_t generator() const { return gen_; }

    std::string spec_string(bool with_modulus = false) const {
        std::string s = "gf:p=" + std::to_string(p_) + ",n=" + std::to_string(n_);
        if (with_modulus) {
            s += ",mod=";
            for (std::size_t i = 0; i < modulus_.size(); ++i) {
                if (i) s += ":";
                s += std::to_string(modulus_[i]);
            }
        }
        return s;
    }

    elem_t add(elem_t a, elem_t b) const {
        if (p_ == 2) return a ^ b;
        elem_t out = 0;
        std::uint64_t place = 1, x = a, y = b;
        for (unsigned i = 0; i < n_; ++i) {
            std::uint64_t s = x % p_ + y % p_;
            if (s >= p_) s -= p_;
            out += static_cast<elem_t>(s * place);
            x /= p_;
            y /= p_;
            place *= p_;
        }
        return out;
    }

    elem_t neg(elem_t a) const {
        if (p_ == 2) return a;
        elem_t out = 0;
        std::uint64_t place = 1, x = a;
        for (unsigned i = 0; i < n_; ++i) {
            std::uint64_t d = x % p_;
            out += static_cast<elem_t>((d ? p_ - d : 0) * place);
            x /= p_;
            place *= p_;
        }
        return out;
    }

    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

    elem_t mul(elem_t a, elem_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    elem_t inv(elem_t a) const {
        if (a == 0) fail("DivisionByZero", "inverse of zero");
        return exp_[(qm1_ - log_[a]) % qm1_];
    }

    // Integer exponent, reduced mod (q-1) for nonzero bases; 0^0 = 1.
    elem_t pow(elem_t a, long long e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            fail("DivisionByZero", "negative power of zero");
        }
        long long r = e % static_cast<long long>(qm1_);
        if (r < 0) r += static_cast<long long>(qm1_);
        const std::uint64_t le =
            static_cast<std::uint64_t>((unsigned __int128)log_[a] * static_cast<std::uint64_t>(r) % qm1_);
        return exp_[le];
    }

    // a^(p^i)
    elem_t frob(elem_t a, unsigned i) const {
        if (a == 0) return 0;
        const std::uint64_t e = gfdetail::modpow(p_, i, qm1_);
        return exp_[static_cast<std::uint64_t>((unsigned __int128)log_[a] * e % qm1_)];
    }

    // Trace into the degree-m subfield (as a subset of this field): sum of
    // x^(p^(m*i)), i = 0..n/m-1.  Requires m | n.
    elem_t trace_to(elem_t x, unsigned m) const {
        if (m == 0 || n_ % m) fail("NotASubfield", std::to_string(m) + " does not divide " + std::to_string(n_));
        elem_t acc = x, y = x;
        for (unsigned i = 1; i < n_ / m; ++i) {
            y = frob(y, m);
            acc = add(acc, y);
        }
        return acc;
    }

    // Absolute trace to GF(p); prime-subfield elements have index == value.
    unsigned trace_abs(elem_t x) const { return trace_to(x, 1); }

    // Quadratic character: x^((q-1)/2) compared against +-1; eta(0) = 0.
    int quad_char(elem_t x) const {
        if (p_ == 2) fail("EvenCharacteristic", "quadratic character needs odd q");
        if (x == 0) return 0;
        return pow(x, static_cast<long long>(qm1_ / 2)) == 1 ? 1 : -1;
    }

    bool in_subfield(elem_t x, unsigned m) const {
        if (m == 0 || n_ % m) fail("NotASubfield", std::to_string(m) + " does not divide " + std::to_string(n_));
        return frob(x, m) == x;
    }

    // Ascending list of the degree-m subfield as a subset of this field.
    std::vector<elem_t> subfield(unsigned m) const {
        if (m == 0 || n_ % m) fail("NotASubfield", std::to_string(m) + " does not divide " + std::to_string(n_));
        std::vector<elem_t> out;
        out.reserve(static_cast<std::size_t>(gfdetail::modpow(p_, m, ~0ull)));
        for (elem_t x = 0; x < q_; ++x)
            if (frob(x, m) == x) out.push_back(x);
        return out;
    }

    std::vector<unsigned> coeff_vector(elem_t a) const {
        std::vector<unsigned> c(n_);
        std::uint64_t x = a;
        for (unsigned i = 0; i < n_; ++i) {
            c[i] = static_cast<unsigned>(x % p_);
            x /= p_;
        }
        return c;
    }

    elem_t from_coeffs(const std::vector<unsigned>& c) const {
        if (c.size() > n_) fail("OutOfRange", "coefficient vector longer than n");
        std::uint64_t acc = 0, place = 1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= p_) fail("OutOfRange", "coefficient not reduced mod p");
            acc += c[i] * place;
            place *= p_;
        }
        return static_cast<elem_t>(acc);
    }

    std::uint64_t dlog(elem_t a) const {
        if (a == 0) fail("DivisionByZero", "discrete log of zero");
        return log_[a];
    }

    // Table-free reference multiplication (schoolbook + reduction).
    elem_t mul_schoolbook(elem_t a, elem_t b) const {
        gfdetail::PVec pa = to_pvec(a), pb = to_pvec(b);
        gfdetail::PVec c = gfdetail::pmulmod(pa, pb, modulus_, p_);
        return from_pvec(c);
    }

private:
    Field(unsigned p, unsigned n, std::uint64_t q, std::vector<unsigned> mod)
        : p_(p), n_(n), q_(q), qm1_(q - 1), modulus_(std::move(mod)) {
        build_tables();
    }

    static std::vector<unsigned> smallest_irreducible(unsigned p, unsigned n) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < n; ++i) count *= p;
        // k ascending == coefficient vectors compared high degree first.
        for (std::uint64_t k = 0; k < count; ++k) {
            std::vector<unsigned> f(n + 1);
            std::uint64_t t = k;
            for (unsigned j = 0; j < n; ++j) {
                f[j] = static_cast<unsigned>(t % p);
                t /= p;
            }
            f[n] = 1;
            if (gfdetail::poly_irreducible(f, p)) return f;
        }
        fail("ReduciblePolynomial", "no irreducible polynomial found");  // unreachable
    }

    gfdetail::PVec to_pvec(elem_t a) const {
        gfdetail::PVec v(n_);
        std::uint64_t x = a;
        for (unsigned i = 0; i < n_; ++i) {
            v[i] = static_cast<unsigned>(x % p_);
            x /= p_;
        }
        gfdetail::ptrim(v);
        return v;
    }

    elem_t from_pvec(const gfdetail::PVec& v) const {
        std::uint64_t acc = 0, place = 1;
        for (std::size_t i = 0; i < v.size(); ++i) {
            acc += v[i] * place;
            place *= p_;
        }
        return static_cast<elem_t>(acc);
    }

    elem_t slow_pow(elem_t a, std::uint64_t e) const {
        elem_t r = 1;
        while (e) {
            if (e & 1) r = mul_schoolbook(r, a);
            a = mul_schoolbook(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        log_.assign(q_, 0);
        exp_.assign(2 * qm1_, 1);
        elem_t g = 1;
        if (q_ > 2) {
            const auto fac = gfdetail::distinct_prime_factors(qm1_);
            for (elem_t cand = 2;; ++cand) {
                if (cand >= q_) fail("ReduciblePolynomial", "no primitive element (modulus not irreducible?)");
                bool ok = true;
                for (auto r : fac)
                    if (slow_pow(cand, qm1_ / r) == 1) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    g = cand;
                    break;
                }
            }
        }
        gen_ = g;
        elem_t cur = 1;
        for (std::uint64_t k = 0; k < qm1_; ++k) {
            exp_[k] = cur;
            exp_[qm1_ + k] = cur;
            log_[cur] = k;
            cur = mul_schoolbook(cur, g);
        }
        if (cur != 1) fail("ReduciblePolynomial", "generator order check failed");
    }

    unsigned p_, n_;
    std::uint64_t q_, qm1_;
    std::vector<unsigned> modulus_;
    elem_t gen_ = 1;
    std::vector<elem_t> exp_;
    std::vector<std::uint64_t> log_;
};

// Embedding GF(p^m) -> GF(p^n) for m | n, pinned to the lexicographically
// smallest root of the source modulus in the target field.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(FieldPtr sub, FieldPtr target) : sub_(std::move(sub)), super_(std::move(target)) {
        if (sub_->characteristic() != super_->characteristic() || super_->degree() % sub_->degree())
            fail("NotASubfield", "source is not a subfield of the target");
        const auto& f = sub_->modulus();
        std::optional<elem_t> beta;
        for (elem_t y = 0; y < super_->order(); ++y) {
            elem_t acc = 0;
            for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
                acc = super_->add(super_->mul(acc, y), static_cast<elem_t>(f[i]));
            if (acc == 0) {
                beta = y;
                break;
            }
        }
        if (!beta) fail("NotASubfield", "source modulus has no root in the target");
        beta_ = *beta;
        fwd_.resize(sub_->order());
        back_.reserve(sub_->order());
        for (elem_t x = 0; x < sub_->order(); ++x) {
            const auto c = sub_->coeff_vector(x);
            elem_t acc = 0;
            for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
                acc = super_->add(super_->mul(acc, beta_), static_cast<elem_t>(c[i]));
            fwd_[x] = acc;
            back_.emplace(acc, x);
        }
    }

    const FieldPtr& sub() const { return sub_; }
    const FieldPtr& super() const { return super_; }
    elem_t beta() const { return beta_; }

    elem_t embed(elem_t x) const {
        if (x >= fwd_.size()) fail("OutOfRange", "element outside the source field");
        return fwd_[x];
    }

    std::optional<elem_t> project(elem_t y) const {
        auto it = back_.find(y);
        if (it == back_.end()) return std::nullopt;
        return it->second;
    }

private:
    FieldPtr sub_, super_;
    elem_t beta_ = 0;
    std::vector<elem_t> fwd_;
    std::unordered_map<elem_t, elem_t> back_;
};

// Value-type element wrapper; mixing elements of different Field instances
// raises FieldMismatch.  Heavy loops use the raw Field methods instead.
struct Elem {
    FieldPtr field;
    elem_t idx = 0;

    Elem() = default;
    Elem(FieldPtr f, elem_t i) : field(std::move(f)), idx(i) {}

    friend Elem operator+(const Elem& a, const Elem& b) { return {same(a, b), a.field->add(a.idx, b.idx)}; }
    friend Elem operator-(const Elem& a, const Elem& b) { return {same(a, b), a.field->sub(a.idx, b.idx)}; }
    friend Elem operator*(const Elem& a, const Elem& b) { return {same(a, b), a.field->mul(a.idx, b.idx)}; }
    friend Elem operator/(const Elem& a, const Elem& b) {
        return {same(a, b), a.field->mul(a.idx, b.field->inv(b.idx))};
    }
    friend bool operator==(const Elem& a, const Elem& b) { return same(a, b) && a.idx == b.idx; }
    Elem pow(long long e) const { return {field, field->pow(idx, e)}; }
    Elem operator-() const { return {field, field->neg(idx)}; }

private:
    static const FieldPtr& same(const Elem& a, const Elem& b) {
        if (a.field.get() != b.field.get())
            fail("FieldMismatch", "elements belong to different field instances");
        return a.field;
    }
};

}  // namespace tto
