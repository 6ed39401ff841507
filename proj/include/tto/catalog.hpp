#pragma once

// Parametric families of 2-to-1 maps from the classical polynomial classes:
// linearized maps, quadratic-derivative families, monomials, hyperoval
// exponents, low-degree classification, Dickson / reversed Dickson
// polynomials, partial-trace quotients, and trace perturbations.  Builders
// follow the certificate convention of constructions.hpp; a registry exposes
// name -> (build, sweep) for the CLI.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tto/constructions.hpp"

namespace tto {

// An F_p-linear map is 2-to-1 exactly when its kernel has two elements
// (possible only in characteristic 2).
inline bool linearized_two_to_one(const LinearizedPoly& L) {
    return linearized_kernel(L).kernel.size() == 2;
}

namespace catdetail {

inline unsigned ord_mod(unsigned base, unsigned n) {
    // order of base in (Z/n)^*; n > 1, gcd(base, n) = 1
    unsigned v = base % n;
    for (unsigned k = 1; k <= n; ++k) {
        if (v == 1) return k;
        v = static_cast<unsigned>((static_cast<std::uint64_t>(v) * base) % n);
    }
    fail("OutOfRange", "order does not exist");
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    long long t = 0, nt = 1, r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
    while (nr) {
        const long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) fail("OutOfRange", "not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<long long>(m) : t);
}

}  // namespace catdetail

// ---- L_I(x) = sum_{i in I} (x^{2^i} + x^{2^{n-i}}) ----

// order conditions: ord_n(2) = n-1, or n = 2r+1 with r odd and ord_n(2) = r.
inline bool l_i_order_condition(unsigned n) {
    if (n < 3 || n % 2 == 0 || !gfdetail::is_prime(n)) return false;
    const unsigned ord = catdetail::ord_mod(2, n);
    if (ord == n - 1) return true;
    const unsigned r = (n - 1) / 2;
    return r % 2 == 1 && ord == r;
}

struct LinearizedFamilyResult {
    LinearizedPoly poly;
    MapTable map;
    Certificate cert;
};

inline LinearizedFamilyResult l_i_build(unsigned n, const std::set<unsigned>& I) {
    if (n < 3 || n % 2 == 0 || !gfdetail::is_prime(n)) fail("OutOfRange", "n must be an odd prime");
    if (I.empty()) fail("BadIndexSet", "I must be nonempty");
    for (auto i : I)
        if (i < 1 || i > (n - 1) / 2) fail("BadIndexSet", "indices must lie in [1,(n-1)/2]");
    if (!l_i_order_condition(n))
        throw Error("OrderConditionFailed", "neither ord_n(2)=n-1 nor the n=2r+1 condition holds");

    auto F = Field::make(2, n);
    std::vector<elem_t> coeffs(n, 0);
    for (auto i : I) {
        coeffs[i] = 1;
        coeffs[n - i] = 1;  // i <= (n-1)/2 < n-i, so the two slots never clash
    }
    LinearizedFamilyResult out{LinearizedPoly(F, coeffs), {}, {}};
    Certificate& c = out.cert;
    c.construction = "l-i";
    c.param("n", std::to_string(n));
    {
        std::string is;
        for (auto i : I) is += (is.empty() ? "" : ",") + std::to_string(i);
        c.param("I", is);
    }
    const unsigned ord = catdetail::ord_mod(2, n);
    c.check("order condition", true,
            ord == n - 1 ? "ord_n(2) = n-1" : "n = 2r+1, r odd, ord_n(2) = r");

    const auto ker = linearized_kernel(out.poly);
    c.check("kernel = {0,1}", ker.kernel == std::vector<elem_t>({0, 1}));

    out.map = tabulate(out.poly);
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- G_{k,a}(x) = F_k(x+a) + F_k(x), F_k(x) = x^{2^k+1} + x^{2^k+2^m} ----
inline BuildResult gold_derivative_build(unsigned k, unsigned m, elem_t a,
                                         FieldPtr field = nullptr) {
    if (m < 2 || k < 1 || k >= m) fail("OutOfRange", "need 0 < k < m");
    FieldPtr F = field ? std::move(field) : Field::make(2, 2 * m);
    if (F->characteristic() != 2 || F->degree() != 2 * m)
        fail("FieldMismatch", "field must be GF(2^(2m))");
    if (a >= F->order()) fail("OutOfRange", "a outside the field");

    const long long e1 = (1LL << k) + 1;
    const long long e2 = (1LL << k) + (1LL << m);
    auto fk = [&](elem_t x) { return F->add(F->pow(x, e1), F->pow(x, e2)); };

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "gold-derivative";
    c.param("field", F->spec_string());
    c.param("k", std::to_string(k));
    c.param("m", std::to_string(m));
    c.param("a", std::to_string(a));
    c.check("a outside subfield", !F->in_subfield(a, m), "a must not satisfy a^(2^m) = a");
    c.check("gcd(k,m) = 1", std::gcd(k, m) == 1);

    out.map = tabulate(F, [&](elem_t x) { return F->add(fk(F->add(x, a)), fk(x)); });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- monomials: x^d is 2-to-1 iff gcd(d, q-1) = 2 ----
inline bool monomial_two_to_one(std::uint64_t d, const FieldPtr& F) {
    if (d < 1) fail("OutOfRange", "d must be >= 1");
    return std::gcd(d, F->order() - 1) == 2;
}

inline BuildResult monomial_build(std::uint64_t d, const FieldPtr& F) {
    BuildResult out;
    out.cert.construction = "monomial";
    out.cert.param("field", F->spec_string());
    out.cert.param("d", std::to_string(d));
    out.cert.check("gcd(d,q-1) = 2", monomial_two_to_one(d, F));
    out.map = tabulate(F, [&](elem_t x) { return F->pow(x, static_cast<long long>(d)); });
    out.cert.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- hyperoval exponents: x^k + x over GF(2^m), m odd ----
enum class MaschiettiCase { Singer, Segre, Glynn1, Glynn2 };

struct ExponentFamilyResult {
    std::uint64_t k = 0;
    MapTable map;
    Certificate cert;
};

inline const char* maschietti_case_name(MaschiettiCase c) {
    switch (c) {
        case MaschiettiCase::Singer: return "singer";
        case MaschiettiCase::Segre: return "segre";
        case MaschiettiCase::Glynn1: return "glynn1";
        case MaschiettiCase::Glynn2: return "glynn2";
    }
    return "?";
}

inline ExponentFamilyResult maschietti_build(MaschiettiCase cs, unsigned m) {
    if (m % 2 == 0) throw Error("EvenM", "m must be odd");
    if (m < 3) fail("OutOfRange", "m must be >= 3");
    const unsigned sigma = (m + 1) / 2;
    std::uint64_t k = 0;
    switch (cs) {
        case MaschiettiCase::Singer: k = 2; break;
        case MaschiettiCase::Segre: k = 6; break;
        case MaschiettiCase::Glynn1: {
            // pi = 4^{-1} mod m, unique in [1, m-1] since m is odd
            const std::uint64_t pi = catdetail::mod_inverse(4 % m, m);
            if (pi == 0 || (4 * pi) % m != 1) throw Error("NoPiExists", "no pi with 4*pi = 1 mod m");
            k = (1ULL << sigma) + (1ULL << pi);
            break;
        }
        case MaschiettiCase::Glynn2: k = 3 * (1ULL << sigma) + 4; break;
    }
    auto F = Field::make(2, m);

    ExponentFamilyResult out;
    out.k = k;
    Certificate& c = out.cert;
    c.construction = "maschietti";
    c.param("field", F->spec_string());
    c.param("case", maschietti_case_name(cs));
    c.param("k", std::to_string(k));
    c.check("m odd", m % 2 == 1);
    out.map = tabulate(F, [&](elem_t x) { return F->add(F->pow(x, static_cast<long long>(k)), x); });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- low-degree classification (degree <= 4) ----
//
// Decision rules keyed on (degree, characteristic); every rule is exact over
// its stated field range, tiny fields fall back to the census.  Input must
// be reduced: monic with zero constant term, and for quartics in odd
// characteristic additionally a3 = 0 (reachable via normalize_low_degree).
struct ClassifyVerdict {
    bool two_to_one = false;
    std::string rule;
};

// b*f(x+c)+d: scale monic, kill the next-to-top coefficient when the degree
// is invertible in the field, drop the constant.
inline Poly normalize_low_degree(const Poly& f) {
    const FieldPtr& F = f.field();
    const long long deg = f.degree();
    if (deg < 1 || deg > 4) throw Error("UnsupportedDegree", "degree must be 1..4");
    const unsigned p = F->characteristic();

    std::vector<elem_t> a(static_cast<std::size_t>(deg) + 1, 0);
    for (const auto& [e, co] : f.terms()) a[static_cast<std::size_t>(e)] = co;
    const elem_t lead_inv = F->inv(a[deg]);
    for (auto& co : a) co = F->mul(co, lead_inv);

    if (deg % p != 0) {
        // substitute x -> x + c with c = -a_{deg-1} / deg
        const elem_t degf = static_cast<elem_t>(deg % p);
        const elem_t cshift = F->neg(F->mul(a[deg - 1], F->inv(degf)));
        if (cshift != 0) {
            std::vector<elem_t> b(a.size(), 0);
            // binomial expansion of sum a_i (x+c)^i; degree <= 4 keeps this tiny
            static const unsigned binom[5][5] = {
                {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                elem_t cpow = 1;  // c^(i-j), walking j downward from i
                for (std::size_t j = i;; --j) {
                    const elem_t scalar = static_cast<elem_t>(binom[i][i - j] % p);
                    b[j] = F->add(b[j], F->mul(a[i], F->mul(scalar, cpow)));
                    cpow = F->mul(cpow, cshift);
                    if (j == 0) break;
                }
            }
            a = std::move(b);
        }
    }
    a[0] = 0;
    Poly out = Poly::zero(F);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) out.set(i, a[i]);
    return out;
}

inline ClassifyVerdict classify_low_degree(const Poly& f) {
    const FieldPtr& F = f.field();
    const long long deg = f.degree();
    if (deg < 1 || deg > 4) throw Error("UnsupportedDegree", "degree must be 1..4");
    const unsigned p = F->characteristic();
    const unsigned m = F->degree();
    const std::uint64_t q = F->order();

    auto coeff = [&](unsigned e) { return f.coeff(e); };
    if (coeff(static_cast<unsigned>(deg)) != 1 || coeff(0) != 0 ||
        (deg == 4 && p != 2 && coeff(3) != 0))
        throw Error("NotNormalized", "expected monic, zero constant term, a3=0 for odd-char quartics");

    auto census_verdict = [&]() -> ClassifyVerdict {
        return {is_two_to_one(tabulate(f)).value, "census-small-field"};
    };

    switch (deg) {
        case 1:
            return {false, "linear-bijection"};
        case 2:
            if (p == 2) return {coeff(1) != 0, "quadratic-even-char-kernel"};
            return {true, "quadratic-odd-char"};
        case 3: {
            if (q >= 7) return {false, "cubic-large-field-excluded"};
            if (q == 5) {
                static const std::pair<elem_t, elem_t> ten[] = {
                    {0, 2}, {0, 3}, {1, 4}, {4, 4}, {2, 1}, {3, 1},
                    {1, 0}, {2, 0}, {3, 0}, {4, 0}};
                const std::pair<elem_t, elem_t> key{coeff(2), coeff(1)};
                for (const auto& t : ten)
                    if (t == key) return {true, "cubic-f5-list"};
                return {false, "cubic-f5-list"};
            }
            return census_verdict();  // q in {2,3,4}: outside the theorem's range
        }
        default: {  // degree 4
            const elem_t a3 = coeff(3), a2 = coeff(2), a1 = coeff(1);
            if (p == 2) {
                if (a3 == 0 && a1 == 0) return {a2 != 0, "quartic-even-linearized-square"};
                if (a3 == 0) {
                    // x(x^3+a2 x+a1) = 0 must have exactly two roots
                    const elem_t ratio = F->mul(F->pow(a2, 3), F->inv(F->mul(a1, a1)));
                    return {F->trace_abs(ratio) != F->trace_abs(1), "quartic-even-unique-cubic-root"};
                }
                return {m % 2 == 1 && F->mul(a2, a2) == F->mul(a1, a3), "quartic-even-odd-m-resonant"};
            }
            if (p == 3) {
                if (m == 1) return census_verdict();  // GF(3): outside the theorem's range
                return {a1 == 0 && a2 == 0 && m % 2 == 1, "quartic-char3-monomial"};
            }
            // p >= 5
            if (a1 == 0 && a2 == 0) return {q % 4 == 3, "quartic-odd-char-monomial"};
            if (q == 5) {
                static const std::pair<elem_t, elem_t> list5[] = {{1, 2}, {1, 3}, {4, 1}, {4, 4}, {2, 0}, {3, 0}};
                const std::pair<elem_t, elem_t> key{a2, a1};
                for (const auto& t : list5)
                    if (t == key) return {true, "quartic-f5-list"};
                return {false, "quartic-f5-list"};
            }
            if (q == 7) {
                const bool hit = a2 == 0 && (a1 == 2 || a1 == 5);
                return {hit, "quartic-f7-list"};
            }
            return {false, "quartic-odd-char-excluded"};
        }
    }
}

// ---- Dickson polynomials (first kind) ----

// D_0 = 2, D_1 = x, D_k = x D_{k-1} - a D_{k-2}
inline elem_t dickson_eval(const FieldPtr& F, std::uint64_t n, elem_t a, elem_t x) {
    elem_t prev = static_cast<elem_t>(2 % F->characteristic());
    if (n == 0) return prev;
    elem_t cur = x;
    for (std::uint64_t k = 2; k <= n; ++k) {
        const elem_t next = F->sub(F->mul(x, cur), F->mul(a, prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

// Waring form: sum_{i <= n/2} n/(n-i) C(n-i,i) (-a)^i x^{n-2i}
inline Poly dickson_waring(const FieldPtr& F, unsigned n, elem_t a) {
    if (n < 1 || n > 10) fail("OutOfRange", "Waring cross-check path supports n in 1..10");
    const unsigned p = F->characteristic();
    const elem_t na = F->neg(a);
    Poly out = Poly::zero(F);
    for (unsigned i = 0; i <= n / 2; ++i) {
        // n/(n-i) * C(n-i, i) is a positive integer
        std::uint64_t binom = 1;
        for (unsigned j = 1; j <= i; ++j) binom = binom * (n - i - j + 1) / j;
        const std::uint64_t scalar_int = binom * n / (n - i);
        const elem_t scalar = static_cast<elem_t>(scalar_int % p);
        const elem_t co = F->mul(scalar, F->pow(na, i));
        if (co != 0) out.set(n - 2 * i, F->add(out.coeff(n - 2 * i), co));
    }
    return out;
}

inline std::uint64_t dickson_e(std::uint64_t n, const FieldPtr& F) {
    if (n < 1) fail("OutOfRange", "n must be >= 1");
    return std::gcd(n, F->order() * F->order() - 1);
}

inline BuildResult dickson_build(const FieldPtr& F, std::uint64_t n, elem_t a) {
    if (a == 0) throw Error("ZeroParameter", "the e-to-1 criterion requires a != 0");
    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "dickson";
    c.param("field", F->spec_string());
    c.param("n", std::to_string(n));
    c.param("a", std::to_string(a));
    c.param("e", std::to_string(dickson_e(n, F)));
    c.check("odd characteristic", F->characteristic() != 2, "gcd(n,q^2-1) is odd for even q");
    c.check("gcd(n,q^2-1) = 2", dickson_e(n, F) == 2);
    out.map = tabulate(F, [&](elem_t x) { return dickson_eval(F, n, a, x); });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- reversed Dickson: D_n(1,x) permutes GF(2^m) iff y^n + (1+y)^n is
// 2-to-1 on GF(2^m) union V, V = {x in GF(2^{2m}) : x^{2^m} = 1 + x} ----
struct ReversedDicksonVerdict {
    bool permutation = false;
    bool two_to_one_on_union = false;
    bool equivalent = false;
};

inline ReversedDicksonVerdict reversed_dickson_equivalence(std::uint64_t n, unsigned m) {
    auto S = Field::make(2, m);
    auto B = Field::make(2, 2 * m);

    // char-2 recurrence for D_k(1, x): D_0 = 0, D_1 = 1, D_k = D_{k-1} + x D_{k-2}
    std::vector<elem_t> rd(S->order());
    for (elem_t x = 0; x < S->order(); ++x) {
        elem_t prev = 0, cur = 1;
        for (std::uint64_t k = 2; k <= n; ++k) {
            const elem_t next = S->add(cur, S->mul(x, prev));
            prev = cur;
            cur = next;
        }
        rd[x] = n == 0 ? 0 : cur;
    }

    std::vector<elem_t> U;
    for (elem_t x = 0; x < B->order(); ++x) {
        const elem_t fx = B->frob(x, m);
        if (fx == x || fx == B->add(1, x)) U.push_back(x);
    }

    SetMap v;
    v.domain_size = U.size();
    v.codomain_size = B->order();
    v.values.reserve(U.size());
    for (auto y : U)
        v.values.push_back(B->add(B->pow(y, static_cast<long long>(n)),
                                  B->pow(B->add(1, y), static_cast<long long>(n))));

    ReversedDicksonVerdict out;
    out.permutation = is_permutation_values(rd, S->order());
    out.two_to_one_on_union = is_two_to_one(v).value;
    out.equivalent = out.permutation == out.two_to_one_on_union;
    return out;
}

// ---- partial-trace quotients: f(x) = T_k(x)^{2^k+1} / x^{2^k} ----
//
// T_k(x) = sum_{i<k} x^{2^i}; the quotient is a polynomial with zero
// constant term, so f(0) = 0.
inline BuildResult mcm_build(unsigned k, unsigned m) {
    if (k < 2 || k % 2 != 0) throw Error("OddK", "k must be even and positive");
    if (m < 2) fail("OutOfRange", "m must be >= 2");
    if (std::gcd(k, m) != 1) throw Error("GcdFailed", "gcd(k,m) must be 1");
    auto F = Field::make(2, m);

    const long long e = (1LL << k) + 1;
    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "mcm";
    c.param("field", F->spec_string());
    c.param("k", std::to_string(k));
    c.check("k even", true);
    c.check("gcd(k,m) = 1", true);
    out.map = tabulate(F, [&](elem_t x) -> elem_t {
        if (x == 0) return 0;
        elem_t t = 0;
        for (unsigned i = 0; i < k; ++i) t = F->add(t, F->frob(x, i));
        return F->mul(F->pow(t, e), F->inv(F->pow(x, e - 1)));
    });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- trace perturbations of the identity / of monomials ----

// F(y) = y + gamma Tr(delta y^{2^i+1})
inline BuildResult trace_family_gamma_delta(const FieldPtr& F, unsigned i, elem_t gamma,
                                            elem_t delta) {
    if (F->characteristic() != 2) fail("OddCharacteristic", "trace families require char 2");
    if (gamma == 0) fail("ZeroDirection", "gamma must be nonzero");
    const unsigned n = F->degree();
    if (i >= n) fail("OutOfRange", "need 0 <= i <= n-1");

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "trace-gamma-delta";
    c.param("field", F->spec_string());
    c.param("i", std::to_string(i));
    c.param("gamma", std::to_string(gamma));
    c.param("delta", std::to_string(delta));

    c.check("i not 0 or n/2", i != 0 && (n % 2 != 0 || i != n / 2));
    const long long e1 = (1LL << i) - 1;
    const long long e2 = 1 - (1LL << (2 * i));
    c.check("delta-gamma relation", F->pow(delta, e1) == F->pow(gamma, e2),
            "delta^(2^i-1) = gamma^(1-2^(2i))");
    const long long ek = (1LL << i) + 1;
    c.check("trace condition", F->trace_abs(F->mul(delta, F->pow(gamma, ek))) == 1,
            "Tr(delta gamma^(2^i+1)) = 1");

    out.map = tabulate(F, [&](elem_t y) {
        const unsigned bit = F->trace_abs(F->mul(delta, F->pow(y, ek)));
        return bit ? F->add(y, gamma) : y;
    });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// F(x) = x^s + gamma Tr(x^t).  The literal sufficient condition (only
// Tr(gamma) = 1) fails for some exponents; the census verdict is the
// authoritative output and the trace condition is recorded alongside it.
inline BuildResult trace_family_power_sum(const FieldPtr& F, std::uint64_t s, std::uint64_t t,
                                          elem_t gamma) {
    if (F->characteristic() != 2) fail("OddCharacteristic", "trace families require char 2");
    if (gamma == 0) fail("ZeroDirection", "gamma must be nonzero");
    if (s < 1 || t < 1) fail("OutOfRange", "s and t must be positive");

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "trace-power-sum";
    c.param("field", F->spec_string());
    c.param("s", std::to_string(s));
    c.param("t", std::to_string(t));
    c.param("gamma", std::to_string(gamma));
    c.check("trace condition", F->trace_abs(gamma) == 1, "Tr(gamma) = 1");

    out.map = tabulate(F, [&](elem_t x) {
        const elem_t base = F->pow(x, static_cast<long long>(s));
        const unsigned bit = F->trace_abs(F->pow(x, static_cast<long long>(t)));
        return bit ? F->add(base, gamma) : base;
    });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- registry ----

using ParamMap = std::map<std::string, std::string>;

struct FamilyInstance {
    std::string params;
    bool predicate = false;  // the family's applicability criterion
    bool census = false;     // exhaustive 2-to-1 verdict
};

struct FamilyEntry {
    std::string name;
    std::string schema;
    std::function<BuildResult(const ParamMap&)> build;
    std::function<std::vector<FamilyInstance>(std::uint64_t)> sweep;  // max field order
};

namespace catdetail {

inline std::uint64_t want_u64(const ParamMap& pm, const std::string& key) {
    auto it = pm.find(key);
    if (it == pm.end()) fail("OutOfRange", "missing parameter: " + key);
    return std::stoull(it->second);
}

inline std::uint64_t want_u64_or(const ParamMap& pm, const std::string& key, std::uint64_t dflt) {
    auto it = pm.find(key);
    return it == pm.end() ? dflt : std::stoull(it->second);
}

inline std::string kv(std::initializer_list<std::pair<const char*, std::uint64_t>> parts) {
    std::string s;
    for (const auto& [k, v] : parts) {
        if (!s.empty()) s += ",";
        s += std::string(k) + "=" + std::to_string(v);
    }
    return s;
}

inline FieldPtr field_from_params(const ParamMap& pm) {
    return Field::make(static_cast<unsigned>(want_u64(pm, "p")),
                       static_cast<unsigned>(want_u64(pm, "n")));
}

}  // namespace catdetail

inline const std::vector<FamilyEntry>& family_registry() {
    using catdetail::field_from_params;
    using catdetail::kv;
    using catdetail::want_u64;
    using catdetail::want_u64_or;

    static const std::vector<FamilyEntry> registry = [] {
        std::vector<FamilyEntry> fams;

        fams.push_back(FamilyEntry{
            "l-i", "n (odd prime), I (comma-separated indices in [1,(n-1)/2])",
            [](const ParamMap& pm) {
                std::set<unsigned> I;
                auto it = pm.find("I");
                if (it == pm.end()) fail("OutOfRange", "missing parameter: I");
                std::stringstream ss(it->second);
                std::string tok;
                while (std::getline(ss, tok, ',')) I.insert(static_cast<unsigned>(std::stoul(tok)));
                auto r = l_i_build(static_cast<unsigned>(want_u64(pm, "n")), I);
                return BuildResult{std::move(r.map), std::move(r.cert)};
            },
            [](std::uint64_t max_q) {
                std::vector<FamilyInstance> rows;
                for (unsigned n : {3u, 5u, 7u}) {
                    if ((1ULL << n) > max_q) continue;
                    const unsigned h = (n - 1) / 2;
                    for (unsigned mask = 1; mask < (1u << h); ++mask) {
                        std::set<unsigned> I;
                        for (unsigned i = 0; i < h; ++i)
                            if (mask & (1u << i)) I.insert(i + 1);
                        auto r = l_i_build(n, I);
                        std::string ps = "n=" + std::to_string(n) + ",I=";
                        bool first = true;
                        for (auto i : I) {
                            ps += (first ? "" : "+") + std::to_string(i);
                            first = false;
                        }
                        rows.push_back({ps, r.cert.certified(), r.cert.census_two_to_one});
                    }
                }
                return rows;
            }});

        fams.push_back(FamilyEntry{
            "gold-derivative", "m, k (0<k<m), a (element of GF(2^(2m)))",
            [](const ParamMap& pm) {
                return gold_derivative_build(static_cast<unsigned>(want_u64(pm, "k")),
                                             static_cast<unsigned>(want_u64(pm, "m")),
                                             static_cast<elem_t>(want_u64(pm, "a")));
            },
            [](std::uint64_t max_q) {
                std::vector<FamilyInstance> rows;
                for (unsigned m : {2u, 3u}) {
                    if ((1ULL << (2 * m)) > max_q) continue;
                    auto F = Field::make(2, 2 * m);
                    for (unsigned k = 1; k < m; ++k)
                        for (elem_t a = 0; a < F->order(); ++a) {
                            auto r = gold_derivative_build(k, m, a, F);
                            rows.push_back({kv({{"m", m}, {"k", k}, {"a", a}}),
                                            r.cert.certified(), r.cert.census_two_to_one});
                        }
                }
                return rows;
            }});

        fams.push_back(FamilyEntry{
            "monomial", "p, n (field), d (exponent)",
            [](const ParamMap& pm) {
                return monomial_build(want_u64(pm, "d"), field_from_params(pm));
            },
            [](std::uint64_t max_q) {
                std::vector<FamilyInstance> rows;
                static const std::pair<unsigned, unsigned> grid[] = {
                    {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 3},
                    {5, 1}, {5, 2}, {7, 1}, {11, 1}, {13, 1}};
                for (const auto& [p, n] : grid) {
                    std::uint64_t q = 1;
                    for (unsigned i = 0; i < n; ++i) q *= p;
                    if (q > max_q) continue;
                    auto F = Field::make(p, n);
                    for (std::uint64_t d = 1; d < q; ++d) {
                        auto r = monomial_build(d, F);
                        rows.push_back({kv({{"p", p}, {"n", n}, {"d", d}}), r.cert.certified(),
                                        r.cert.census_two_to_one});
                    }
                }
                return rows;
            }});

        fams.push_back(FamilyEntry{
            "maschietti", "case (singer|segre|glynn1|glynn2), m (odd)",
            [](const ParamMap& pm) {
                auto it = pm.find("case");
                if (it == pm.end()) fail("OutOfRange", "missing parameter: case");
                MaschiettiCase cs;
                if (it->second == "singer") cs = MaschiettiCase::Singer;
                else if (it->second == "segre") cs = MaschiettiCase::Segre;
                else if (it->second == "glynn1") cs = MaschiettiCase::Glynn1;
                else if (it->second == "glynn2") cs = MaschiettiCase::Glynn2;
                else fail("OutOfRange", "unknown case: " + it->second);
                auto r = maschietti_build(cs, static_cast<unsigned>(want_u64(pm, "m")));
                return BuildResult{std::move(r.map), std::move(r.cert)};
            },
            [](std::uint64_t max_q) {
                std::vector<FamilyInstance> rows;
                for (unsigned m : {3u, 5u, 7u}) {
                    if ((1ULL << m) > max_q) continue;
                    for (auto cs : {MaschiettiCase::Singer, MaschiettiCase::Segre,
                                    MaschiettiCase::Glynn1, MaschiettiCase::Glynn2}) {
                        auto r = maschietti_build(cs, m);
                        rows.push_back({"case=" + std::string(maschietti_case_name(cs)) +
                                            ",m=" + std::to_string(m) + ",k=" + std::to_string(r.k),
                                        r.cert.certified(), r.cert.census_two_to_one});
                    }
                }
                return rows;
            }});

        fams.push_back(FamilyEntry{
            "dickson", "p, n (field), deg (Dickson degree), a (nonzero)",
            [](const ParamMap& pm) {
                return dickson_build(field_from_params(pm), want_u64(pm, "deg"),
                                     static_cast<elem_t>(want_u64(pm, "a")));
            },
            [](std::uint64_t max_q) {
                std::vector<FamilyInstance> rows;
                static const std::pair<unsigned, unsigned> grid[] = {
                    {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}};
                for (const auto& [p, n] : grid) {
                    std::uint64_t q = 1;
                    for (unsigned i = 0; i < n; ++i) q *= p;
                    if (q > max_q) continue;
                    auto F = Field::make(p, n);
                    for (std::uint64_t deg = 1; deg <= 30; ++deg)
                        for (elem_t a = 1; a < q; ++a) {
                            auto r = dickson_build(F, deg, a);
                            rows.push_back({kv({{"p", p}, {"n", n}, {"deg", deg}, {"a", a}}),
                                            r.cert.certified(), r.cert.census_two_to_one});
                        }
                }
                return rows;
            }});

        fams.push_back(FamilyEntry{
            "mcm", "k (even), m (gcd(k,m)=1)",
            [](const ParamMap& pm) {
                return mcm_build(static_cast<unsigned>(want_u64(pm, "k")),
                                 static_cast<unsigned>(want_u64(pm, "m")));
            },
            [](std::uint64_t max_q) {
                std::vector<FamilyInstance> rows;
                for (unsigned k : {2u, 4u, 6u})
                    for (unsigned m : {3u, 5u, 7u}) {
                        if ((1ULL << m) > max_q || std::gcd(k, m) != 1) continue;
                        auto r = mcm_build(k, m);
                        rows.push_back({kv({{"k", k}, {"m", m}}), r.cert.certified(),
                                        r.cert.census_two_to_one});
                    }
                return rows;
            }});

        fams.push_back(FamilyEntry{
            "trace-gamma-delta", "n, i, gamma, delta (elements of GF(2^n))",
            [](const ParamMap& pm) {
                auto F = Field::make(2, static_cast<unsigned>(want_u64(pm, "n")));
                return trace_family_gamma_delta(F, static_cast<unsigned>(want_u64(pm, "i")),
                                                static_cast<elem_t>(want_u64(pm, "gamma")),
                                                static_cast<elem_t>(want_u64(pm, "delta")));
            },
            [](std::uint64_t max_q) {
                std::vector<FamilyInstance> rows;
                for (unsigned n = 4; n <= 6; ++n) {
                    if ((1ULL << n) > max_q) continue;
                    auto F = Field::make(2, n);
                    for (unsigned i = 1; i < n; ++i) {
                        if (n % 2 == 0 && i == n / 2) continue;
                        for (elem_t g = 1; g < F->order(); ++g)
                            for (elem_t d = 1; d < F->order(); ++d) {
                                auto r = trace_family_gamma_delta(F, i, g, d);
                                rows.push_back({kv({{"n", n}, {"i", i}, {"gamma", g}, {"delta", d}}),
                                                r.cert.certified(), r.cert.census_two_to_one});
                            }
                    }
                }
                return rows;
            }});

        fams.push_back(FamilyEntry{
            "trace-power-sum", "n, s, t (positive exponents), gamma (Tr(gamma)=1)",
            [](const ParamMap& pm) {
                auto F = Field::make(2, static_cast<unsigned>(want_u64(pm, "n")));
                elem_t gamma = static_cast<elem_t>(want_u64_or(pm, "gamma", 0));
                if (pm.find("gamma") == pm.end())
                    for (elem_t g = 1; g < F->order(); ++g)
                        if (F->trace_abs(g) == 1) {
                            gamma = g;
                            break;
                        }
                return trace_family_power_sum(F, want_u64(pm, "s"), want_u64(pm, "t"), gamma);
            },
            [](std::uint64_t max_q) {
                std::vector<FamilyInstance> rows;
                for (unsigned n = 3; n <= 5; ++n) {
                    if ((1ULL << n) > max_q) continue;
                    auto F = Field::make(2, n);
                    elem_t gamma = 0;
                    for (elem_t g = 1; g < F->order(); ++g)
                        if (F->trace_abs(g) == 1) {
                            gamma = g;
                            break;
                        }
                    for (std::uint64_t s = 1; s < F->order(); ++s)
                        for (std::uint64_t t = 1; t < F->order(); ++t) {
                            auto r = trace_family_power_sum(F, s, t, gamma);
                            // census IS the verdict for this family
                            rows.push_back({kv({{"n", n}, {"s", s}, {"t", t}, {"gamma", gamma}}),
                                            r.cert.census_two_to_one, r.cert.census_two_to_one});
                        }
                }
                return rows;
            }});

        fams.push_back(FamilyEntry{
            "linearized", "p=2, n, coeffs (comma-separated c0,...,c_{n-1} of sum c_i x^(2^i))",
            [](const ParamMap& pm) {
                auto F = Field::make(2, static_cast<unsigned>(want_u64(pm, "n")));
                auto it = pm.find("coeffs");
                if (it == pm.end()) fail("OutOfRange", "missing parameter: coeffs");
                std::vector<elem_t> cs;
                std::stringstream ss(it->second);
                std::string tok;
                while (std::getline(ss, tok, ',')) cs.push_back(static_cast<elem_t>(std::stoul(tok)));
                LinearizedPoly L(F, cs);
                BuildResult out;
                out.cert.construction = "linearized";
                out.cert.param("field", F->spec_string());
                out.cert.check("kernel size = 2", linearized_two_to_one(L));
                out.map = tabulate(L);
                out.cert.census_two_to_one = is_two_to_one(out.map).value;
                return out;
            },
            [](std::uint64_t max_q) {
                std::vector<FamilyInstance> rows;
                for (unsigned n : {2u, 3u}) {
                    if ((1ULL << n) > max_q) continue;
                    auto F = Field::make(2, n);
                    const std::uint64_t q = F->order();
                    std::uint64_t total = 1;
                    for (unsigned i = 0; i < n; ++i) total *= q;
                    for (std::uint64_t idx = 0; idx < total; ++idx) {
                        std::vector<elem_t> cs(n);
                        std::uint64_t t = idx;
                        for (unsigned i = 0; i < n; ++i) {
                            cs[i] = static_cast<elem_t>(t % q);
                            t /= q;
                        }
                        LinearizedPoly L(F, cs);
                        std::string ps = "n=" + std::to_string(n) + ",coeffs=";
                        for (unsigned i = 0; i < n; ++i)
                            ps += (i ? "+" : "") + std::to_string(cs[i]);
                        rows.push_back({ps, linearized_two_to_one(L),
                                        is_two_to_one(tabulate(L)).value});
                    }
                }
                return rows;
            }});

        return fams;
    }();
    return registry;
}

inline const FamilyEntry* find_family(const std::string& name) {
    for (const auto& f : family_registry())
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace tto
