#pragma once

// Builders for 2-to-1 maps.  Every builder tabulates its map uncondition-
// ally, evaluates the named hypotheses of the underlying criterion, and
// attaches a certificate carrying those check results plus the census
// verdict.  When all hypotheses pass the census must confirm (soundness);
// a failed hypothesis leaves the map available with the verdict recorded.
//
// Structural parameter errors (malformed splits, zero translators, ...)
// throw; hypothesis outcomes never throw.  require_certified() turns a
// failed check into a HypothesisFailed error for callers that want one.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tto/poly.hpp"
#include "tto/table.hpp"

namespace tto {

struct HypothesisCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Certificate {
    std::string construction;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<HypothesisCheck> checks;
    bool census_two_to_one = false;

    bool certified() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const HypothesisCheck* first_failed() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }

    void check(const std::string& name, bool passed, std::string detail = "") {
        checks.push_back({name, passed, std::move(detail)});
    }

    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
};

struct BuildResult {
    MapTable map;
    Certificate cert;
};

struct SetBuildResult {
    SetMap map;
    Certificate cert;
};

inline void require_certified(const Certificate& c) {
    if (const auto* f = c.first_failed()) throw HypothesisFailed(f->name, f->detail);
}

namespace cdetail {

// 2-to-1 on a plain value list (fiber restriction of a larger map).
inline bool list_two_to_one(const std::vector<elem_t>& vals) {
    std::unordered_map<elem_t, unsigned> cnt;
    for (auto v : vals) ++cnt[v];
    const bool odd = vals.size() % 2 != 0;
    bool seen1 = false;
    for (const auto& [v, c] : cnt) {
        (void)v;
        if (c == 2) continue;
        if (c == 1 && odd && !seen1) {
            seen1 = true;
            continue;
        }
        return false;
    }
    return true;
}

inline std::vector<elem_t> sorted_unique(std::vector<elem_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// values restricted to the given subset permute that subset.
inline bool permutes_subset(const std::vector<elem_t>& subset,
                            const std::function<elem_t(elem_t)>& f) {
    std::unordered_set<elem_t> set(subset.begin(), subset.end()), seen;
    for (auto s : subset) {
        const elem_t y = f(s);
        if (!set.count(y) || !seen.insert(y).second) return false;
    }
    return true;
}

inline std::string elem_str(elem_t e) { return std::to_string(e); }

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() != b.get()) fail("FieldMismatch", "arguments use different field instances");
}

}  // namespace cdetail

// ---- generic AGW criterion over abstract index sets ----
//
// f: A -> A, lambda: A -> S, lambda_bar: A -> S_bar, g: S -> S_bar with
// #S = #S_bar.  Certified when the square commutes, g is bijective, f is
// 2-to-1 on every lambda-fiber, and at most one fiber has odd size.
inline SetBuildResult agw_build(const SetMap& f, const SetMap& lambda, const SetMap& lambda_bar,
                                const SetMap& g) {
    const std::size_t A = f.domain_size;
    if (f.codomain_size != A || lambda.domain_size != A || lambda_bar.domain_size != A)
        fail("DimensionMismatch", "f, lambda, lambda_bar must share the domain A");
    if (g.domain_size != lambda.codomain_size || g.codomain_size != lambda_bar.codomain_size)
        fail("DimensionMismatch", "g must map lambda's codomain to lambda_bar's codomain");
    if (lambda.codomain_size != lambda_bar.codomain_size)
        fail("DimensionMismatch", "#S and #S_bar must be equal");
    if (f.values.size() != A || lambda.values.size() != A || lambda_bar.values.size() != A ||
        g.values.size() != g.domain_size)
        fail("DimensionMismatch", "value table length mismatch");

    SetBuildResult out{f, {}};
    Certificate& c = out.cert;
    c.construction = "agw";
    c.param("domain", std::to_string(A));
    c.param("s", std::to_string(lambda.codomain_size));

    bool commutes = true;
    for (std::size_t a = 0; a < A && commutes; ++a)
        commutes = lambda_bar.values[f.values[a]] == g.values[lambda.values[a]];
    c.check("commutation", commutes, "lambda_bar o f == g o lambda");

    c.check("g bijective", is_permutation_values(g.values, g.codomain_size));

    std::vector<std::vector<elem_t>> fibers(lambda.codomain_size);
    for (std::size_t a = 0; a < A; ++a) fibers[lambda.values[a]].push_back(f.values[a]);
    bool fibers_ok = true;
    std::size_t odd = 0;
    for (const auto& fib : fibers) {
        if (fib.size() % 2) ++odd;
        if (!cdetail::list_two_to_one(fib)) fibers_ok = false;
    }
    c.check("fiber 2-to-1", fibers_ok, "f restricted to every lambda-fiber");
    c.check("odd fiber count", odd <= 1, std::to_string(odd) + " odd fibers");

    c.census_two_to_one = is_two_to_one(f).value;
    return out;
}

// ---- f(x) = h(psi(x)) phi(x) + g(psi(x)) ----
//
// phi, psi additive (linearized), psibar F_q-linear with
// phi o psi == psibar o phi, h(psi image) in F_q^*; certified when
// fbar(x) = h(x) phi(x) + psibar(g(x)) is bijective psi-image -> psibar-
// image, f is 2-to-1 on every psi-fiber and at most one fiber is odd.
inline BuildResult field_gen_build(const Poly& h, const LinearizedPoly& phi, const LinearizedPoly& psi,
                                   const LinearizedPoly& psibar, const Poly& g, unsigned m) {
    const FieldPtr& F = phi.field();
    cdetail::require_same_field(F, psi.field());
    cdetail::require_same_field(F, psibar.field());
    cdetail::require_same_field(F, h.field());
    cdetail::require_same_field(F, g.field());
    const auto fq = F->subfield(m);  // NotASubfield when m does not divide n
    const std::uint64_t q = F->order();

    std::vector<elem_t> Phi(q), Psi(q), Psib(q);
    for (elem_t x = 0; x < q; ++x) {
        Phi[x] = phi.eval(x);
        Psi[x] = psi.eval(x);
        Psib[x] = psibar.eval(x);
    }

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "field-gen";
    c.param("field", F->spec_string());
    c.param("m", std::to_string(m));

    const auto S = cdetail::sorted_unique(Psi);
    const auto Sb = cdetail::sorted_unique(Psib);
    c.check("image sizes equal", S.size() == Sb.size(),
            std::to_string(S.size()) + " vs " + std::to_string(Sb.size()));

    bool hrange = true;
    for (auto s : S) {
        const elem_t hs = h.eval(s);
        if (hs == 0 || !F->in_subfield(hs, m)) {
            hrange = false;
            break;
        }
    }
    c.check("h range", hrange, "h(psi image) subset of F_q*");

    bool linear = true;
    for (auto cc : fq) {
        for (elem_t x = 0; x < q && linear; ++x)
            linear = Psib[F->mul(cc, x)] == F->mul(cc, Psib[x]);
        if (!linear) break;
    }
    c.check("psibar Fq-linear", linear);

    bool commutes = true;
    for (elem_t x = 0; x < q && commutes; ++x) commutes = Phi[Psi[x]] == Psib[Phi[x]];
    c.check("commutation", commutes, "phi o psi == psibar o phi");

    std::unordered_set<elem_t> sbset(Sb.begin(), Sb.end()), seen;
    bool fbar_ok = S.size() == Sb.size();
    for (auto s : S) {
        if (!fbar_ok) break;
        const elem_t y = F->add(F->mul(h.eval(s), Phi[s]), Psib[g.eval(s)]);
        fbar_ok = sbset.count(y) && seen.insert(y).second;
    }
    c.check("fbar bijective", fbar_ok, "fbar: psi image -> psibar image");

    out.map = tabulate(F, [&](elem_t x) {
        const elem_t s = Psi[x];
        return F->add(F->mul(h.eval(s), Phi[x]), g.eval(s));
    });

    std::unordered_map<elem_t, std::vector<elem_t>> fibers;
    for (elem_t x = 0; x < q; ++x) fibers[Psi[x]].push_back(out.map.values[x]);
    bool fibers_ok = true;
    std::size_t odd = 0;
    for (const auto& [s, vals] : fibers) {
        (void)s;
        if (vals.size() % 2) ++odd;
        if (!cdetail::list_two_to_one(vals)) fibers_ok = false;
    }
    c.check("fiber 2-to-1", fibers_ok);
    c.check("odd fiber count", odd <= 1, std::to_string(odd) + " odd fibers");

    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- f(x) = L1(x) + L2(x) g(L3(x)), q even ----
inline BuildResult agw_3l_build(const LinearizedPoly& L1, const LinearizedPoly& L2,
                                const LinearizedPoly& L3, const Poly& g, unsigned m) {
    const FieldPtr& F = L1.field();
    cdetail::require_same_field(F, L2.field());
    cdetail::require_same_field(F, L3.field());
    cdetail::require_same_field(F, g.field());
    if (F->characteristic() != 2) fail("OddCharacteristic", "the three-map criterion requires even q");
    const auto fq = F->subfield(m);
    const std::uint64_t q = F->order();

    std::vector<elem_t> T1(q), T2(q), T3(q);
    for (elem_t x = 0; x < q; ++x) {
        T1[x] = L1.eval(x);
        T2[x] = L2.eval(x);
        T3[x] = L3.eval(x);
    }
    const auto S = cdetail::sorted_unique(T3);

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "agw-3l";
    c.param("field", F->spec_string());
    c.param("m", std::to_string(m));

    bool grange = true;
    for (auto s : S)
        if (!F->in_subfield(g.eval(s), m)) {
            grange = false;
            break;
        }
    c.check("g range", grange, "g(L3 image) subset of F_q");

    // kernel of F_y = L1 + g(y) L2 intersected with ker L3, for every y in
    // the L3-image; each intersection must be exactly {0, c_y}.
    std::vector<elem_t> kerL3;
    for (elem_t x = 0; x < q; ++x)
        if (T3[x] == 0) kerL3.push_back(x);
    bool kcheck = true;
    std::string kdetail;
    for (auto y : S) {
        const elem_t gy = g.eval(y);
        std::size_t cnt = 0;
        for (auto x : kerL3)
            if (F->add(T1[x], F->mul(gy, T2[x])) == 0) ++cnt;
        if (cnt != 2) {
            kcheck = false;
            kdetail = "y=" + cdetail::elem_str(y) + " intersection size " + std::to_string(cnt);
            break;
        }
    }
    c.check("kernel pair", kcheck, kdetail);

    c.check("fbar permutes", cdetail::permutes_subset(S, [&](elem_t s) {
                return F->add(T1[s], F->mul(T2[s], g.eval(s)));
            }),
            "fbar on the L3-image");

    bool commutes = true;
    for (elem_t x = 0; x < q && commutes; ++x) {
        const elem_t fx = F->add(T1[x], F->mul(T2[x], g.eval(T3[x])));
        const elem_t fb = F->add(T1[T3[x]], F->mul(T2[T3[x]], g.eval(T3[x])));
        commutes = T3[fx] == fb;
    }
    c.check("commutation", commutes, "L3 o f == fbar o L3");

    out.map = tabulate(F, [&](elem_t x) { return F->add(T1[x], F->mul(T2[x], g.eval(T3[x]))); });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- psi = Tr_{q^n/q}: f = h(Tr(x)) phi(x) + G(Tr(x)) ----
//
// plain variant: G = g.  frobenius-difference variant: G = g^q - g, whose
// trace vanishes, so fbar reduces to h(x) phi(x).
inline BuildResult case1_trace_build(const Poly& h, const LinearizedPoly& phi, const Poly& g,
                                     unsigned m, bool frobenius_difference) {
    const FieldPtr& F = phi.field();
    cdetail::require_same_field(F, h.field());
    cdetail::require_same_field(F, g.field());
    if (F->characteristic() != 2) fail("OddCharacteristic", "this construction requires q = 2^m");
    const auto fq = F->subfield(m);
    const std::uint64_t q = F->order();
    const long long q0 = static_cast<long long>(fq.size());

    std::vector<elem_t> Phi(q), T(q);
    for (elem_t x = 0; x < q; ++x) {
        Phi[x] = phi.eval(x);
        T[x] = F->trace_to(x, m);
    }

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = frobenius_difference ? "trace-frobdiff" : "trace-plain";
    c.param("field", F->spec_string());
    c.param("m", std::to_string(m));

    bool linear = true;
    for (auto cc : fq) {
        for (elem_t x = 0; x < q && linear; ++x) linear = Phi[F->mul(cc, x)] == F->mul(cc, Phi[x]);
        if (!linear) break;
    }
    c.check("phi Fq-linear", linear);

    bool commutes = true;
    for (elem_t x = 0; x < q && commutes; ++x) commutes = Phi[T[x]] == T[Phi[x]];
    c.check("commutation", commutes, "phi o Tr == Tr o phi");

    bool hrange = true;
    for (auto s : fq) {
        const elem_t hs = h.eval(s);
        if (hs == 0 || !F->in_subfield(hs, m)) {
            hrange = false;
            break;
        }
    }
    c.check("h range", hrange, "h(F_q) subset of F_q*");

    std::size_t kcnt = 0;
    for (elem_t x = 0; x < q; ++x)
        if (Phi[x] == 0 && T[x] == 0) ++kcnt;
    c.check("kernel pair", kcnt == 2, "ker(phi) cap ker(Tr) has size " + std::to_string(kcnt));

    auto gterm = [&](elem_t s) -> elem_t {
        const elem_t gs = g.eval(s);
        if (!frobenius_difference) return gs;
        return F->sub(F->pow(gs, q0), gs);
    };

    if (frobenius_difference) {
        bool vanish = true;
        for (auto s : fq)
            if (T[gterm(s)] != 0) {
                vanish = false;
                break;
            }
        c.check("g-term trace vanishes", vanish);
    }

    c.check("fbar permutes", cdetail::permutes_subset(fq, [&](elem_t s) {
                return F->add(F->mul(h.eval(s), Phi[s]), T[gterm(s)]);
            }),
            "h(x) phi(x) + Tr(G(x)) on F_q");

    out.map = tabulate(F, [&](elem_t x) {
        const elem_t s = T[x];
        return F->add(F->mul(h.eval(s), Phi[x]), gterm(s));
    });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- psi = x^q - x ----
enum class ArtinSchreierVariant { PlainG, TraceU, ExpU };

inline BuildResult case2_artin_schreier_build(const Poly& h, const LinearizedPoly& phi, const Poly& u,
                                              ArtinSchreierVariant variant, unsigned m) {
    const FieldPtr& F = phi.field();
    cdetail::require_same_field(F, h.field());
    cdetail::require_same_field(F, u.field());
    if (F->characteristic() != 2) fail("OddCharacteristic", "this construction requires q = 2^m");
    const auto fq = F->subfield(m);
    const std::uint64_t q = F->order();
    const long long q0 = static_cast<long long>(fq.size());

    std::vector<elem_t> Phi(q), Psi(q), T(q);
    for (elem_t x = 0; x < q; ++x) {
        Phi[x] = phi.eval(x);
        Psi[x] = F->sub(F->frob(x, m), x);
        T[x] = F->trace_to(x, m);
    }
    const auto S = cdetail::sorted_unique(Psi);

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "artin-schreier";
    c.param("field", F->spec_string());
    c.param("m", std::to_string(m));
    c.param("variant", variant == ArtinSchreierVariant::PlainG  ? "plain-g"
                       : variant == ArtinSchreierVariant::TraceU ? "trace-u"
                                                                 : "exp-u");

    bool linear = true;
    for (auto cc : fq) {
        for (elem_t x = 0; x < q && linear; ++x) linear = Phi[F->mul(cc, x)] == F->mul(cc, Phi[x]);
        if (!linear) break;
    }
    c.check("phi Fq-linear", linear);

    bool commutes = true;
    for (elem_t x = 0; x < q && commutes; ++x) commutes = Phi[Psi[x]] == Psi[Phi[x]];
    c.check("commutation", commutes, "phi o psi == psi o phi");

    bool hrange = true;
    for (auto s : S) {
        const elem_t hs = h.eval(s);
        if (hs == 0 || !F->in_subfield(hs, m)) {
            hrange = false;
            break;
        }
    }
    c.check("h range", hrange, "h(psi image) subset of F_q*");

    {
        std::vector<elem_t> restr;
        restr.reserve(fq.size());
        for (auto s : fq) restr.push_back(Phi[s]);
        c.check("phi 2-to-1 on Fq", cdetail::list_two_to_one(restr));
    }

    const long long norm_exp = static_cast<long long>((q - 1) / (q0 - 1));
    auto gval = [&](elem_t s) -> elem_t {
        switch (variant) {
            case ArtinSchreierVariant::PlainG: {
                const elem_t gs = u.eval(s);
                return F->sub(F->pow(gs, q0), gs);
            }
            case ArtinSchreierVariant::TraceU:
                return T[u.eval(s)];
            case ArtinSchreierVariant::ExpU:
                return F->pow(u.eval(s), norm_exp);
        }
        return 0;
    };

    if (variant != ArtinSchreierVariant::PlainG) {
        // g(s) lies in F_q, so psi(g(s)) = 0 and fbar reduces to h phi.
        bool vanish = true;
        for (auto s : S)
            if (Psi[gval(s)] != 0) {
                vanish = false;
                break;
            }
        c.check("g-term psi vanishes", vanish);
    }

    c.check("fbar permutes", cdetail::permutes_subset(S, [&](elem_t s) {
                return F->add(F->mul(h.eval(s), Phi[s]), Psi[gval(s)]);
            }),
            "h(x) phi(x) + psi(g(x)) on the psi-image");

    out.map = tabulate(F, [&](elem_t x) {
        const elem_t s = Psi[x];
        return F->add(F->mul(h.eval(s), Phi[x]), gval(s));
    });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- f(x) = x^r h(x^((q-1)/d)) over odd q ----
enum class CyclotomicMode { Direct, Exponent, Subfield };

inline BuildResult cyclotomic_build(std::uint64_t r, std::uint64_t d, const Poly& h,
                                    CyclotomicMode mode, unsigned q0_degree = 0) {
    const FieldPtr& F = h.field();
    if (F->characteristic() == 2) fail("EvenCharacteristic", "cyclotomic construction requires odd q");
    if (r < 1) fail("OutOfRange", "r must be >= 1");
    const std::uint64_t q = F->order();
    if (d < 1 || (q - 1) % d) fail("OutOfRange", "d must divide q-1");
    const std::uint64_t e = (q - 1) / d;

    std::vector<elem_t> mu;
    for (elem_t x = 1; x < q; ++x)
        if (F->pow(x, static_cast<long long>(d)) == 1) mu.push_back(x);

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "cyclotomic";
    c.param("field", F->spec_string());
    c.param("r", std::to_string(r));
    c.param("d", std::to_string(d));
    c.param("mode", mode == CyclotomicMode::Direct ? "direct" : mode == CyclotomicMode::Exponent ? "exponent" : "subfield");

    bool hnz = true;
    for (auto eps : mu)
        if (h.eval(eps) == 0) {
            hnz = false;
            break;
        }
    c.check("h nonzero on mu_d", hnz);

    auto gmap = [&](elem_t eps) {
        return F->mul(F->pow(eps, static_cast<long long>(r)), F->pow(h.eval(eps), static_cast<long long>(e)));
    };

    if (mode == CyclotomicMode::Direct) {
        bool into = true, inj = true;
        std::unordered_set<elem_t> muset(mu.begin(), mu.end()), seen;
        for (auto eps : mu) {
            const elem_t y = gmap(eps);
            if (!muset.count(y)) into = false;
            if (!seen.insert(y).second) inj = false;
        }
        c.check("g maps mu_d to mu_d", into);
        c.check("g injective on mu_d", inj);
        c.check("gcd(r,(q-1)/d) = 2", std::gcd(r, e) == 2,
                "gcd = " + std::to_string(std::gcd(r, e)));
    } else if (mode == CyclotomicMode::Exponent) {
        std::optional<std::uint64_t> nprime;
        for (std::uint64_t cand = 0; cand < d && !nprime; ++cand) {
            bool all = true;
            for (auto eps : mu)
                if (F->pow(h.eval(eps), static_cast<long long>(e)) !=
                    F->pow(eps, static_cast<long long>(cand))) {
                    all = false;
                    break;
                }
            if (all) nprime = cand;
        }
        if (!nprime) fail("NoSuchExponent", "h^((q-1)/d) is not a power of x on mu_d");
        c.param("n'", std::to_string(*nprime));
        c.check("gcd(r+n',d) = 1", std::gcd(r + *nprime, d) == 1);
        c.check("gcd(r,(q-1)/d) = 2", std::gcd(r, e) == 2);
    } else {
        if (q0_degree == 0 || F->degree() % q0_degree)
            fail("NotASubfield", "subfield mode requires q0_degree dividing n");
        std::uint64_t q0 = 1;
        for (unsigned i = 0; i < q0_degree; ++i) q0 *= F->characteristic();
        const unsigned mm = F->degree() / q0_degree;  // q = q0^mm
        c.param("q0", std::to_string(q0));
        c.check("q0 = 1 mod d", (q0 - 1) % d == 0);
        c.check("d divides m", mm % d == 0, "m = " + std::to_string(mm));
        bool hsub = true;
        for (const auto& [ex, co] : h.terms()) {
            (void)ex;
            if (!F->in_subfield(co, q0_degree)) {
                hsub = false;
                break;
            }
        }
        c.check("h over Fq0", hsub);
        c.check("gcd(r,d) = 1", std::gcd(r, d) == 1);
        c.check("gcd(r,(q-1)/d) = 2", std::gcd(r, e) == 2);
    }

    out.map = tabulate(F, [&](elem_t x) -> elem_t {
        if (x == 0) return 0;
        return F->mul(F->pow(x, static_cast<long long>(r)),
                      h.eval(F->pow(x, static_cast<long long>(e))));
    });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- piecewise from a permutation ----
//
// F = G on S1 and G o phi on S2, phi a bijection S2 -> S1.
inline BuildResult piecewise_explicit(const MapTable& G, const std::vector<elem_t>& S1,
                                      const std::vector<elem_t>& S2,
                                      const std::vector<elem_t>& phi) {
    const FieldPtr& F = G.domain;
    cdetail::require_same_field(F, G.codomain);
    const std::uint64_t q = F->order();
    if (S1.size() != S2.size() || S1.size() + S2.size() != q)
        fail("BadSplit", "S1, S2 must halve the field");
    std::vector<char> seen(q, 0);
    for (auto x : S1) {
        if (x >= q || seen[x]) fail("BadSplit", "S1/S2 is not a partition");
        seen[x] = 1;
    }
    for (auto x : S2) {
        if (x >= q || seen[x]) fail("BadSplit", "S1/S2 is not a partition");
        seen[x] = 1;
    }
    if (phi.size() != S2.size()) fail("BadSplit", "phi must be aligned with S2");
    std::unordered_set<elem_t> s1set(S1.begin(), S1.end()), img;
    for (auto y : phi)
        if (!s1set.count(y) || !img.insert(y).second) fail("BadSplit", "phi must biject S2 onto S1");

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "piecewise";
    c.param("field", F->spec_string());
    c.param("mode", "explicit");
    c.check("G permutation", is_permutation(G));

    std::vector<elem_t> route(q);
    for (auto x : S1) route[x] = x;
    for (std::size_t i = 0; i < S2.size(); ++i) route[S2[i]] = phi[i];
    out.map = tabulate(F, [&](elem_t x) { return G.values[route[x]]; });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// S an F_2-hyperplane (index-2 subgroup), gamma outside S.
// swapped=false: G on S, G(x+gamma) elsewhere; swapped=true: the reverse.
inline BuildResult piecewise_hyperplane(const MapTable& G, const std::vector<elem_t>& S, elem_t gamma,
                                        bool swapped) {
    const FieldPtr& F = G.domain;
    cdetail::require_same_field(F, G.codomain);
    if (F->characteristic() != 2) fail("OddCharacteristic", "hyperplane split requires characteristic 2");
    const std::uint64_t q = F->order();
    if (S.size() != q / 2) fail("BadSplit", "S must have size q/2");
    std::vector<char> inS(q, 0);
    for (auto x : S) {
        if (x >= q || inS[x]) fail("BadSplit", "S has repeats");
        inS[x] = 1;
    }
    if (!inS[0]) fail("BadSplit", "S must contain 0");
    for (auto x : S)
        for (auto y : S)
            if (!inS[F->add(x, y)]) fail("BadSplit", "S is not closed under addition");
    if (gamma >= q || inS[gamma]) fail("BadSplit", "gamma must lie outside S");

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "piecewise";
    c.param("field", F->spec_string());
    c.param("mode", "hyperplane");
    c.param("variant", swapped ? "F2" : "F1");
    c.check("G permutation", is_permutation(G));

    out.map = tabulate(F, [&](elem_t x) {
        const bool shift = swapped ? inS[x] : !inS[x];
        return G.values[shift ? F->add(x, gamma) : x];
    });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// S = the trace-zero hyperplane; requires Tr(gamma) = 1.
inline BuildResult piecewise_trace(const MapTable& G, elem_t gamma, bool swapped) {
    const FieldPtr& F = G.domain;
    if (F->characteristic() != 2) fail("OddCharacteristic", "trace split requires characteristic 2");
    if (F->trace_abs(gamma) != 1) throw Error("TraceZero", "gamma must have absolute trace 1");
    std::vector<elem_t> S;
    for (elem_t x = 0; x < F->order(); ++x)
        if (F->trace_abs(x) == 0) S.push_back(x);
    auto out = piecewise_hyperplane(G, S, gamma, swapped);
    out.cert.params[1].second = "trace";  // mode
    return out;
}

// ---- composition ----
//
// map = outer o inner; certified when one factor permutes and the other is
// 2-to-1.
inline BuildResult compose(const MapTable& outer, const MapTable& inner) {
    if (inner.codomain.get() != outer.domain.get())
        fail("NotComposable", "inner codomain must equal outer domain");
    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "compose";
    c.param("domain", inner.domain->spec_string());

    const bool perm_in = is_permutation(inner), perm_out = is_permutation(outer);
    const bool tt_in = is_two_to_one(inner).value, tt_out = is_two_to_one(outer).value;
    c.check("one factor permutes, the other is 2-to-1",
            (perm_out && tt_in) || (perm_in && tt_out),
            std::string("inner: ") + (perm_in ? "permutation" : tt_in ? "2-to-1" : "neither") +
                ", outer: " + (perm_out ? "permutation" : tt_out ? "2-to-1" : "neither"));

    out.map.domain = inner.domain;
    out.map.codomain = outer.codomain;
    out.map.values.resize(inner.values.size());
    for (std::size_t x = 0; x < inner.values.size(); ++x)
        out.map.values[x] = outer.values[inner.values[x]];
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- linear structures and translators ----
//
// gamma is a b-linear structure of f: GF(p^n) -> GF(p^k) when
// f(x + u*gamma) - f(x) = u*b for all x and all u in GF(p^k).
inline bool is_linear_structure(const MapTable& f, elem_t gamma, elem_t b) {
    if (gamma == 0) fail("ZeroDirection", "gamma must be nonzero");
    const FieldPtr& D = f.domain;
    const FieldPtr& C = f.codomain;
    const SubfieldEmbedding emb(C, D);  // NotASubfield when k does not divide n
    const std::uint64_t q = D->order();
    for (elem_t u = 0; u < C->order(); ++u) {
        const elem_t step = D->mul(emb.embed(u), gamma);
        const elem_t rhs = C->mul(u, b);
        for (elem_t x = 0; x < q; ++x)
            if (C->sub(f.values[D->add(x, step)], f.values[x]) != rhs) return false;
    }
    return true;
}

// ---- Boolean tables (bit-valued maps on GF(2^n)) ----
struct BooleanTable {
    unsigned n = 0;
    std::vector<std::uint8_t> bits;  // length 2^n, values 0/1
};

inline BooleanTable boolean_from_map(const MapTable& t) {
    if (t.codomain->order() != 2) fail("FieldMismatch", "expected a GF(2)-valued map");
    BooleanTable b;
    b.n = t.domain->degree();
    b.bits.assign(t.values.begin(), t.values.end());
    return b;
}

// gamma is a b-linear structure (b in {0,1}) of the Boolean f on GF(2^n).
inline bool boolean_linear_structure(const FieldPtr& F, const BooleanTable& f, elem_t gamma,
                                     unsigned b) {
    if (gamma == 0) fail("ZeroDirection", "gamma must be nonzero");
    if (f.bits.size() != F->order()) fail("DimensionMismatch", "table length != field order");
    for (elem_t x = 0; x < F->order(); ++x)
        if ((f.bits[F->add(x, gamma)] ^ f.bits[x]) != b) return false;
    return true;
}

// F a permutation, gamma a 1-linear structure of Tr(G(x)):
// f(x) = F(x) + gamma Tr(G(F(x))) is 2-to-1.
inline BuildResult translator_build_single(const MapTable& F, const Poly& G, elem_t gamma) {
    const FieldPtr& K = F.domain;
    cdetail::require_same_field(K, F.codomain);
    cdetail::require_same_field(K, G.field());
    if (K->characteristic() != 2) fail("OddCharacteristic", "translator constructions require char 2");
    if (gamma == 0) fail("ZeroDirection", "gamma must be nonzero");
    if (!is_permutation(F)) throw Error("NotPermutation", "F must be a permutation");

    BooleanTable tg;
    tg.n = K->degree();
    tg.bits.resize(K->order());
    for (elem_t x = 0; x < K->order(); ++x) tg.bits[x] = static_cast<std::uint8_t>(K->trace_abs(G.eval(x)));

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "translator-single";
    c.param("field", K->spec_string());
    c.param("gamma", cdetail::elem_str(gamma));
    c.check("linear structure", boolean_linear_structure(K, tg, gamma, 1),
            "gamma must be a 1-linear structure of Tr(G(x))");

    out.map = tabulate(K, [&](elem_t x) {
        const elem_t y = F.values[x];
        return tg.bits[y] ? K->add(y, gamma) : y;
    });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// y + gamma f(y) + delta g(y) for Boolean f, g; the six sufficient linear-
// structure patterns are numbered 1..6.
inline BuildResult translator_build_pair(const FieldPtr& F, const BooleanTable& f,
                                         const BooleanTable& g, elem_t gamma, elem_t delta,
                                         int case_no) {
    if (F->characteristic() != 2) fail("OddCharacteristic", "translator constructions require char 2");
    if (gamma == 0 || delta == 0) fail("ZeroDirection", "gamma and delta must be nonzero");
    if (gamma == delta) fail("EqualGammaDelta", "gamma and delta must differ");
    if (case_no < 1 || case_no > 6) fail("OutOfRange", "case must be 1..6");
    if (f.bits.size() != F->order() || g.bits.size() != F->order())
        fail("DimensionMismatch", "table length != field order");

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "translator-pair";
    c.param("field", F->spec_string());
    c.param("gamma", cdetail::elem_str(gamma));
    c.param("delta", cdetail::elem_str(delta));
    c.param("case", std::to_string(case_no));

    auto ls = [&](const BooleanTable& t, elem_t dir, unsigned b) {
        return boolean_linear_structure(F, t, dir, b);
    };
    const elem_t gd = F->add(gamma, delta);
    switch (case_no) {
        case 1:
            c.check("gamma 1-structure of f", ls(f, gamma, 1));
            c.check("delta 1-structure of f", ls(f, delta, 1));
            c.check("gamma 0-structure of g", ls(g, gamma, 0));
            break;
        case 2:
            c.check("gamma 1-structure of f", ls(f, gamma, 1));
            c.check("gamma 0-structure of g", ls(g, gamma, 0));
            c.check("delta 0-structure of g", ls(g, delta, 0));
            break;
        case 3:
            c.check("gamma 0-structure of f", ls(f, gamma, 0));
            c.check("delta 0-structure of f", ls(f, delta, 0));
            c.check("delta 1-structure of g", ls(g, delta, 1));
            break;
        case 4:
            c.check("delta 0-structure of f", ls(f, delta, 0));
            c.check("gamma 1-structure of g", ls(g, gamma, 1));
            c.check("delta 1-structure of g", ls(g, delta, 1));
            break;
        case 5:
            c.check("gamma 0-structure of f", ls(f, gamma, 0));
            c.check("delta 1-structure of f", ls(f, delta, 1));
            c.check("gamma+delta 1-structure of g", ls(g, gd, 1));
            break;
        case 6:
            c.check("gamma 1-structure of g", ls(g, gamma, 1));
            c.check("delta 0-structure of g", ls(g, delta, 0));
            c.check("gamma+delta 1-structure of f", ls(f, gd, 1));
            break;
    }

    out.map = tabulate(F, [&](elem_t y) {
        elem_t v = y;
        if (f.bits[y]) v = F->add(v, gamma);
        if (g.bits[y]) v = F->add(v, delta);
        return v;
    });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// L a linearized permutation, alpha a nonzero 1-linear structure of f:
// rho(y) = L(y) + L(alpha) f(y) is 2-to-1.
inline BuildResult linear_perm_build(const LinearizedPoly& L, elem_t alpha, const BooleanTable& f) {
    const FieldPtr& F = L.field();
    if (F->characteristic() != 2) fail("OddCharacteristic", "translator constructions require char 2");
    if (alpha == 0) fail("ZeroDirection", "alpha must be nonzero");
    if (f.bits.size() != F->order()) fail("DimensionMismatch", "table length != field order");
    std::vector<elem_t> T(F->order());
    for (elem_t x = 0; x < F->order(); ++x) T[x] = L.eval(x);
    if (!is_permutation_values(T, F->order())) throw Error("NotPermutation", "L must be a linearized permutation");

    BuildResult out;
    Certificate& c = out.cert;
    c.construction = "linear-perm";
    c.param("field", F->spec_string());
    c.param("alpha", cdetail::elem_str(alpha));
    c.check("1-linear structure", boolean_linear_structure(F, f, alpha, 1),
            "alpha must be a 1-linear structure of f");

    const elem_t la = L.eval(alpha);
    out.map = tabulate(F, [&](elem_t y) { return f.bits[y] ? F->add(T[y], la) : T[y]; });
    c.census_two_to_one = is_two_to_one(out.map).value;
    return out;
}

// ---- derivatives and APN maps ----

inline MapTable derivative_map(const MapTable& F, elem_t a) {
    if (F.domain->characteristic() != 2) fail("OddCharacteristic", "derivative maps are defined for char 2");
    if (a == 0) fail("ZeroDirection", "direction must be nonzero");
    MapTable d;
    d.domain = F.domain;
    d.codomain = F.codomain;
    d.values.resize(F.values.size());
    for (elem_t x = 0; x < F.values.size(); ++x)
        d.values[x] = F.codomain->add(F.values[F.domain->add(x, a)], F.values[x]);
    return d;
}

struct ApnVerdict {
    bool apn = false;
    std::optional<elem_t> failing_direction;
};

// F is APN iff every directional derivative is 2-to-1.
inline ApnVerdict is_apn(const MapTable& F) {
    for (elem_t a = 1; a < F.domain->order(); ++a)
        if (!is_two_to_one(derivative_map(F, a)).value) return {false, a};
    return {true, std::nullopt};
}

inline std::vector<BuildResult> apn_derived_family(const MapTable& F) {
    const auto verdict = is_apn(F);
    std::vector<BuildResult> fam;
    fam.reserve(F.domain->order() - 1);
    for (elem_t a = 1; a < F.domain->order(); ++a) {
        BuildResult r;
        r.map = derivative_map(F, a);
        r.cert.construction = "apn-derivative";
        r.cert.param("direction", cdetail::elem_str(a));
        r.cert.check("F is APN", verdict.apn,
                     verdict.apn ? ""
                                 : "derivative in direction " +
                                       cdetail::elem_str(*verdict.failing_direction) + " is not 2-to-1");
        r.cert.census_two_to_one = is_two_to_one(r.map).value;
        fam.push_back(std::move(r));
    }
    return fam;
}

}  // namespace tto
