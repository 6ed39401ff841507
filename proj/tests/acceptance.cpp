// Acceptance gate: nine end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero when any criterion fails.  Uses only the public headers
// plus the independent reference routines in oracle.hpp.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tto/applications.hpp"
#include "tto/catalog.hpp"
#include "tto/corpus.hpp"
#include "tto/counting.hpp"
#include "tto/io.hpp"

using namespace tto;

namespace {

int failures = 0;

using clock_t_ = std::chrono::steady_clock;

long long ms_since(clock_t_::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock_t_::now() - t0).count();
}

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("%s criterion-%d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

// ---- criterion 1: the exact-count ratio table ----

void criterion_counting_table() {
    const auto t0 = clock_t_::now();
    const char* expect[8] = {"1.00", "1.50", "4.38",    "50.3",
                             "9.17e3", "4.27e8", "1.30e18", "1.70e37"};
    bool ok = true;
    std::string bad;
    for (unsigned n = 1; n <= 8; ++n) {
        const auto c = count_two_to_one_exact(static_cast<int>(n));
        if (c.ratio_3sig != expect[n - 1]) {
            ok = false;
            bad += " n=" + std::to_string(n) + " got " + c.ratio_3sig;
        }
    }
    const auto ms = ms_since(t0);
    ok = ok && ms < 1000;
    report(1, "counting-table", ok,
           ok ? "eight ratio strings match (" + std::to_string(ms) + " ms)"
              : "mismatch:" + bad + " (" + std::to_string(ms) + " ms)");
}

// ---- criterion 2: brute-force enumeration cross-check ----

struct BruteCounts {
    std::uint64_t two_to_one = 0, bijections = 0;
};

// odometer over all q^q value tables with incremental fiber-size bookkeeping
BruteCounts brute_force_counts(unsigned n) {
    const std::size_t q = std::size_t{1} << n;
    std::vector<elem_t> v(q, 0);
    std::vector<std::uint32_t> cnt(q, 0);
    cnt[0] = static_cast<std::uint32_t>(q);
    std::size_t bad = (q != 0 && q != 2) ? 1 : 0;  // values with fiber size not in {0,2}
    std::size_t ones = (q == 1) ? 1 : 0;           // values with fiber size exactly 1
    auto adjust = [&](elem_t b, int delta) {
        const auto c0 = cnt[b];
        if (c0 != 0 && c0 != 2) --bad;
        if (c0 == 1) --ones;
        cnt[b] = static_cast<std::uint32_t>(static_cast<int>(c0) + delta);
        const auto c1 = cnt[b];
        if (c1 != 0 && c1 != 2) ++bad;
        if (c1 == 1) ++ones;
    };
    BruteCounts out;
    while (true) {
        if (bad == 0) ++out.two_to_one;
        if (ones == q) ++out.bijections;
        std::size_t i = 0;
        while (i < q) {
            adjust(v[i], -1);
            ++v[i];
            if (v[i] == q) {
                v[i] = 0;
                adjust(0, +1);
                ++i;
            } else {
                adjust(v[i], +1);
                break;
            }
        }
        if (i == q) break;
    }
    return out;
}

void criterion_brute_force() {
    const auto t0 = clock_t_::now();
    const std::uint64_t expect_n[3] = {2, 36, 176400};
    const std::uint64_t expect_b[3] = {2, 24, 40320};
    bool ok = true;
    std::string got;
    for (unsigned n = 1; n <= 3; ++n) {
        const auto b = brute_force_counts(n);
        const auto c = count_two_to_one_exact(static_cast<int>(n));
        ok = ok && b.two_to_one == expect_n[n - 1] && b.bijections == expect_b[n - 1] &&
             c.count == b.two_to_one && c.bijections == b.bijections;
        got += (n > 1 ? "," : "") + std::to_string(b.two_to_one);
    }
    const auto ms = ms_since(t0);
    ok = ok && ms < 120000;
    report(2, "brute-force-count", ok,
           "enumerated counts " + got + " vs closed form (" + std::to_string(ms) + " ms)");
}

// ---- criterion 3: spectral statistic vs census over a mixed corpus ----

void criterion_walsh_corpus() {
    const auto t0 = clock_t_::now();
    std::size_t maps = 0, disagreements = 0;
    auto consider = [&](const MapTable& T) {
        ++maps;
        const bool spectral = two_to_one_statistic(T) == 0;
        const bool census = oracle::two_to_one(T.values, T.codomain->order());
        if (spectral != census) ++disagreements;
    };

    auto g = oracle::rng(0x5eed);
    for (unsigned n = 3; n <= 8; ++n) {
        auto F = Field::make(2, n);
        const std::uint64_t q = F->order();
        for (int i = 0; i < 34; ++i) {
            consider(random_map(g, F));
            consider(random_permutation(g, F));
            consider(random_two_to_one(g, F));
        }
        for (std::uint64_t d = 1; d <= std::min<std::uint64_t>(q - 2, 25); ++d)
            consider(monomial_build(d, F).map);
        for (elem_t c0 = 0; c0 < 4; ++c0)
            for (elem_t c1 = 0; c1 < 4; ++c1) {
                if (c0 == 0 && c1 == 0) continue;
                consider(tabulate(LinearizedPoly(F, {c0, c1})));
            }
    }
    for (unsigned m : {3u, 5u, 7u}) {
        for (auto cs : {MaschiettiCase::Singer, MaschiettiCase::Segre, MaschiettiCase::Glynn1,
                        MaschiettiCase::Glynn2})
            consider(maschietti_build(cs, m).map);
        consider(mcm_build(2, m).map);
        const unsigned h = (m - 1) / 2;
        for (unsigned mask = 1; mask < (1u << h); ++mask) {
            std::set<unsigned> I;
            for (unsigned i = 0; i < h; ++i)
                if (mask & (1u << i)) I.insert(i + 1);
            consider(l_i_build(m, I).map);
        }
    }
    for (unsigned m : {2u, 3u, 4u}) {
        auto F = Field::make(2, 2 * m);
        for (unsigned k = 1; k < m; ++k)
            for (elem_t a = 0; a < F->order(); ++a)
                consider(gold_derivative_build(k, m, a, F).map);
    }

    const auto ms = ms_since(t0);
    const bool ok = maps >= 1000 && disagreements == 0 && ms < 300000;
    report(3, "walsh-census-agreement", ok,
           std::to_string(maps) + " maps, " + std::to_string(disagreements) +
               " disagreements (" + std::to_string(ms) + " ms)");
}

// ---- criterion 4: the exhaustive cubic sweep over the five-element field ----

void criterion_f5_cubics() {
    const auto t0 = clock_t_::now();
    auto F = Field::make(5, 1);
    const std::set<std::pair<elem_t, elem_t>> expect = {{0, 2}, {0, 3}, {1, 0}, {1, 4}, {2, 0},
                                                        {2, 1}, {3, 0}, {3, 1}, {4, 0}, {4, 4}};
    std::set<std::pair<elem_t, elem_t>> by_rule, by_census;
    for (elem_t a2 = 0; a2 < 5; ++a2)
        for (elem_t a1 = 0; a1 < 5; ++a1) {
            Poly f = Poly::zero(F);
            f.set(3, 1);
            f.set(2, a2);
            f.set(1, a1);
            if (classify_low_degree(f).two_to_one) by_rule.insert({a2, a1});
            if (oracle::two_to_one(tabulate(f).values, 5)) by_census.insert({a2, a1});
        }
    const auto ms = ms_since(t0);
    const bool ok = by_rule == expect && by_census == expect && ms < 1000;
    report(4, "quintic-field-cubics", ok,
           std::to_string(by_rule.size()) + " accepted, census set " +
               (by_census == expect ? "matches" : "differs") + " (" + std::to_string(ms) + " ms)");
}

// ---- criterion 5: quartic classification vs census, full sweeps ----

void criterion_quartic_classification() {
    const auto t0 = clock_t_::now();
    std::uint64_t swept = 0, disagreements = 0;
    auto sweep = [&](unsigned p, unsigned n) {
        auto F = Field::make(p, n);
        const elem_t q = static_cast<elem_t>(F->order());
        const bool even = p == 2;
        for (elem_t a3 = 0; a3 < (even ? q : 1); ++a3)
            for (elem_t a2 = 0; a2 < q; ++a2)
                for (elem_t a1 = 0; a1 < q; ++a1) {
                    Poly f = Poly::zero(F);
                    f.set(4, 1);
                    f.set(3, a3);
                    f.set(2, a2);
                    f.set(1, a1);
                    const bool rule = classify_low_degree(f).two_to_one;
                    const bool census = oracle::two_to_one(tabulate(f).values, q);
                    ++swept;
                    if (rule != census) ++disagreements;
                }
    };
    sweep(2, 2);
    sweep(2, 3);
    sweep(2, 4);
    sweep(2, 5);
    sweep(3, 2);
    sweep(3, 3);
    sweep(5, 1);
    sweep(7, 1);
    sweep(5, 2);
    const auto ms = ms_since(t0);
    const bool ok = disagreements == 0 && ms < 600000;
    report(5, "quartic-classification", ok,
           std::to_string(swept) + " quartics, " + std::to_string(disagreements) +
               " disagreements (" + std::to_string(ms) + " ms)");
}

// ---- criterion 6: builder soundness on grids + named negative per builder ----

struct Tally {
    std::uint64_t builds = 0, certified = 0, violations = 0;
};

void feed(Tally& t, const Certificate& c) {
    ++t.builds;
    if (c.certified()) {
        ++t.certified;
        if (!c.census_two_to_one) ++t.violations;
    }
}

bool named_failure(const Certificate& c, const std::string& name) {
    return !c.certified() && c.first_failed()->name == name;
}

BooleanTable trace_bits(const FieldPtr& F, elem_t a) {
    BooleanTable t;
    t.n = F->degree();
    t.bits.resize(F->order());
    for (elem_t x = 0; x < F->order(); ++x)
        t.bits[x] = static_cast<std::uint8_t>(F->trace_abs(F->mul(a, x)));
    return t;
}

void criterion_construction_soundness() {
    const auto t0 = clock_t_::now();
    bool negatives = true;
    std::vector<Tally> tallies;
    auto F4 = Field::make(2, 2);
    auto F8 = Field::make(2, 3);
    auto F16 = Field::make(2, 4);
    auto F9 = Field::make(3, 2);
    auto F49 = Field::make(7, 2);
    auto F343 = Field::make(7, 3);
    const Poly one8 = Poly::monomial(F8, 1, 0);
    const Poly x8 = Poly::monomial(F8, 1, 1);

    {  // set-level commuting squares: all f on a 4-set against a fixed projection
        Tally t;
        const SetMap lam{4, 2, {0, 0, 1, 1}};
        for (unsigned gb = 0; gb < 4; ++gb) {
            const SetMap g{2, 2, {static_cast<elem_t>(gb & 1), static_cast<elem_t>(gb >> 1)}};
            for (unsigned code = 0; code < 256; ++code) {
                const SetMap f{4, 4,
                               {static_cast<elem_t>(code & 3), static_cast<elem_t>((code >> 2) & 3),
                                static_cast<elem_t>((code >> 4) & 3),
                                static_cast<elem_t>(code >> 6)}};
                feed(t, agw_build(f, lam, lam, g).cert);
            }
        }
        negatives = negatives && named_failure(agw_build(SetMap{4, 4, {0, 1, 0, 1}}, lam, lam,
                                                         SetMap{2, 2, {0, 0}})
                                                   .cert,
                                               "g bijective");
        tallies.push_back(t);
    }
    {  // additive-pair builder over GF(4) and GF(16)
        Tally t;
        const Poly g2x = Poly::monomial(F4, 2, 1);
        const Poly gx = Poly::monomial(F4, 1, 1);
        for (elem_t a1 = 0; a1 < 4; ++a1)
            for (elem_t b1 = 0; b1 < 4; ++b1)
                for (elem_t a2 = 0; a2 < 4; ++a2)
                    for (elem_t b2 = 0; b2 < 4; ++b2)
                        for (elem_t a3 = 0; a3 < 4; ++a3)
                            for (elem_t b3 = 0; b3 < 4; ++b3)
                                for (elem_t hc : {1, 2})
                                    feed(t, field_gen_build(Poly::monomial(F4, hc, 0),
                                                            LinearizedPoly(F4, {a1, b1}),
                                                            LinearizedPoly(F4, {a2, b2}),
                                                            LinearizedPoly(F4, {a3, b3}),
                                                            hc == 1 ? g2x : gx, 1)
                                                .cert);
        const elem_t picks[4][2] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
        for (const auto& pa : picks)
            for (const auto& pb : picks)
                for (const auto& pc : picks)
                    for (unsigned m : {1u, 2u})
                        feed(t, field_gen_build(Poly::monomial(F16, 1, 0),
                                                LinearizedPoly(F16, {pa[0], pa[1]}),
                                                LinearizedPoly(F16, {pb[0], pb[1]}),
                                                LinearizedPoly(F16, {pc[0], pc[1]}),
                                                Poly::monomial(F16, 1, 1), m)
                                    .cert);
        const LinearizedPoly tr4(F4, {1, 1});
        negatives = negatives && named_failure(field_gen_build(Poly::monomial(F4, 2, 0), tr4, tr4,
                                                               tr4, g2x, 1)
                                                   .cert,
                                               "h range");
        tallies.push_back(t);
    }
    {  // three-linearized-map builder
        Tally t;
        const Poly gs[3] = {one8, x8, Poly::monomial(F8, 1, 2)};
        for (elem_t a1 = 0; a1 < 2; ++a1)
            for (elem_t b1 = 0; b1 < 2; ++b1)
                for (elem_t a2 = 0; a2 < 2; ++a2)
                    for (elem_t b2 = 0; b2 < 2; ++b2)
                        for (elem_t a3 = 0; a3 < 2; ++a3)
                            for (elem_t b3 = 0; b3 < 2; ++b3)
                                for (const auto& g : gs)
                                    feed(t, agw_3l_build(LinearizedPoly(F8, {a1, b1}),
                                                         LinearizedPoly(F8, {a2, b2}),
                                                         LinearizedPoly(F8, {a3, b3}), g, 1)
                                                .cert);
        const elem_t picks[3][2] = {{1, 0}, {0, 1}, {1, 1}};
        for (const auto& pa : picks)
            for (const auto& pb : picks)
                for (const auto& pc : picks)
                    for (unsigned m : {1u, 2u})
                        for (unsigned gi = 0; gi < 2; ++gi)
                            feed(t, agw_3l_build(LinearizedPoly(F16, {pa[0], pa[1]}),
                                                 LinearizedPoly(F16, {pb[0], pb[1]}),
                                                 LinearizedPoly(F16, {pc[0], pc[1]}),
                                                 Poly::monomial(F16, 1, gi), m)
                                        .cert);
        negatives = negatives &&
                    named_failure(agw_3l_build(LinearizedPoly(F8, {1, 1}), LinearizedPoly(F8, {0}),
                                               LinearizedPoly(F8, {1}), one8, 1)
                                      .cert,
                                  "kernel pair");
        tallies.push_back(t);
    }
    for (const bool frob : {false, true}) {  // trace-fiber builder, both variants
        Tally t;
        for (elem_t a = 0; a < 8; ++a)
            for (elem_t b = 0; b < 8; ++b)
                for (elem_t c = 0; c < 8; ++c)
                    for (elem_t gc : {1, 2})
                        feed(t, case1_trace_build(one8, LinearizedPoly(F8, {a, b, c}),
                                                  Poly::monomial(F8, gc, 1), 1, frob)
                                    .cert);
        for (elem_t a = 0; a < 4; ++a)
            for (elem_t b = 0; b < 4; ++b)
                for (unsigned m : {1u, 2u})
                    feed(t, case1_trace_build(Poly::monomial(F16, 1, 0),
                                              LinearizedPoly(F16, {a, b}),
                                              Poly::monomial(F16, 1, 1), m, frob)
                                .cert);
        negatives = negatives && named_failure(case1_trace_build(one8, LinearizedPoly(F8, {1}),
                                                                 x8, 1, frob)
                                                   .cert,
                                               "kernel pair");
        tallies.push_back(t);
    }
    for (auto variant : {ArtinSchreierVariant::PlainG, ArtinSchreierVariant::TraceU,
                         ArtinSchreierVariant::ExpU}) {  // Artin-Schreier fiber builder
        Tally t;
        for (elem_t a = 0; a < 8; ++a)
            for (elem_t b = 0; b < 8; ++b)
                for (elem_t d = 1; d < 8; ++d)
                    feed(t, case2_artin_schreier_build(one8, LinearizedPoly(F8, {a, b, 1}),
                                                       Poly::monomial(F8, d, 1), variant, 1)
                                .cert);
        for (elem_t a = 0; a < 4; ++a)
            for (elem_t b = 0; b < 4; ++b)
                for (elem_t d = 1; d < 4; ++d)
                    feed(t, case2_artin_schreier_build(Poly::monomial(F16, 1, 0),
                                                       LinearizedPoly(F16, {a, b}),
                                                       Poly::monomial(F16, d, 1), variant, 1)
                                .cert);
        negatives = negatives &&
                    named_failure(case2_artin_schreier_build(one8, LinearizedPoly(F8, {1}), x8,
                                                             variant, 1)
                                      .cert,
                                  "phi 2-to-1 on Fq");
        tallies.push_back(t);
    }
    {  // cyclotomic coset builder, three modes
        Tally direct, expo, sub;
        std::size_t skipped = 0;
        std::vector<Poly> hs;
        for (elem_t c : {1, 2, 3}) hs.push_back(Poly::monomial(F49, c, 0));
        hs.push_back(Poly::monomial(F49, F49->pow(F49->generator(), 3), 0));
        hs.push_back(Poly::monomial(F49, 1, 1).set(0, 2));  // x + 2
        for (std::uint64_t d : {1, 2, 3, 4, 6, 8})
            for (std::uint64_t r = 1; r <= 8; ++r)
                for (const auto& h : hs)
                    for (auto mode : {CyclotomicMode::Direct, CyclotomicMode::Exponent}) {
                        try {
                            feed(mode == CyclotomicMode::Direct ? direct : expo,
                                 cyclotomic_build(r, d, h, mode).cert);
                        } catch (const Error&) {
                            ++skipped;  // no exponent form / structural rejection
                        }
                    }
        for (std::uint64_t d : {1, 2, 3, 6})
            for (std::uint64_t r = 1; r <= 6; ++r)
                for (elem_t c = 1; c < 7; ++c)
                    feed(sub, cyclotomic_build(r, d, Poly::monomial(F343, c, 0),
                                               CyclotomicMode::Subfield, 1)
                                  .cert);
        negatives = negatives && named_failure(cyclotomic_build(2, 4, Poly::monomial(F9, 1, 0),
                                                                CyclotomicMode::Direct)
                                                   .cert,
                                               "g injective on mu_d");
        (void)skipped;
        tallies.push_back(direct);
        tallies.push_back(expo);
        tallies.push_back(sub);
    }
    {  // piecewise splits: explicit halving, hyperplanes, the trace hyperplane
        Tally texp, thyp, ttra;
        for (const auto& F : {F8, F16}) {
            const elem_t q = static_cast<elem_t>(F->order());
            std::vector<elem_t> S1, S2, phi;
            for (elem_t x = 0; x < q / 2; ++x) S1.push_back(x);
            for (elem_t x = q / 2; x < q; ++x) {
                S2.push_back(x);
                phi.push_back(static_cast<elem_t>(x - q / 2));
            }
            for (std::uint64_t d = 1; d < q - 1; ++d) {
                const auto G = tabulate(Poly::monomial(F, 1, d));
                feed(texp, piecewise_explicit(G, S1, S2, phi).cert);
                for (elem_t beta = 1; beta < q; ++beta) {
                    std::vector<elem_t> S;
                    elem_t gamma = 0;
                    for (elem_t x = 0; x < q; ++x) {
                        if (F->trace_abs(F->mul(beta, x)) == 0) S.push_back(x);
                        else if (!gamma) gamma = x;
                    }
                    for (bool sw : {false, true}) feed(thyp, piecewise_hyperplane(G, S, gamma, sw).cert);
                }
                for (elem_t gamma = 1; gamma < q; ++gamma) {
                    if (F->trace_abs(gamma) != 1) continue;
                    for (bool sw : {false, true}) feed(ttra, piecewise_trace(G, gamma, sw).cert);
                }
            }
        }
        const auto const8 = tabulate(F8, [](elem_t) { return elem_t{1}; });
        std::vector<elem_t> S1c, S2c, phic;
        for (elem_t x = 0; x < 4; ++x) S1c.push_back(x);
        for (elem_t x = 4; x < 8; ++x) {
            S2c.push_back(x);
            phic.push_back(static_cast<elem_t>(x - 4));
        }
        negatives = negatives &&
                    named_failure(piecewise_explicit(const8, S1c, S2c, phic).cert, "G permutation") &&
                    named_failure(piecewise_hyperplane(const8, S1c, 4, false).cert, "G permutation") &&
                    named_failure(piecewise_trace(const8, 1, false).cert, "G permutation");
        tallies.push_back(texp);
        tallies.push_back(thyp);
        tallies.push_back(ttra);
    }
    {  // composition
        Tally t;
        for (const auto& F : {F8, F16}) {
            std::vector<MapTable> pool;
            for (std::uint64_t d : {1, 2, 3, 6}) pool.push_back(tabulate(Poly::monomial(F, 1, d)));
            pool.push_back(tabulate(LinearizedPoly(F, {1, 1})));       // 2-to-1
            pool.push_back(tabulate(F, [](elem_t) { return elem_t{0}; }));  // neither
            for (const auto& a : pool)
                for (const auto& b : pool) feed(t, compose(a, b).cert);
        }
        negatives = negatives && named_failure(compose(tabulate(x8), tabulate(x8)).cert,
                                               "one factor permutes, the other is 2-to-1");
        tallies.push_back(t);
    }
    {  // single-translator builder
        Tally t;
        for (const auto& F : {F8, F16}) {
            const elem_t q = static_cast<elem_t>(F->order());
            for (std::uint64_t d = 1; d < q - 1; ++d) {
                if (std::gcd(d, static_cast<std::uint64_t>(q - 1)) != 1) continue;
                const auto P = tabulate(Poly::monomial(F, 1, d));
                for (elem_t c = 1; c < q; ++c)
                    for (elem_t gamma = 1; gamma < q; ++gamma)
                        feed(t, translator_build_single(P, Poly::monomial(F, c, 1), gamma).cert);
            }
        }
        negatives = negatives && named_failure(translator_build_single(tabulate(x8), x8, 2).cert,
                                               "linear structure");
        tallies.push_back(t);
    }
    {  // translator pairs, six patterns
        Tally per_case[6];
        const elem_t dirs[6] = {1, 2, 3, 4, 6, 8};
        for (elem_t a = 1; a < 16; ++a)
            for (elem_t c = 1; c < 16; ++c) {
                const auto fb = trace_bits(F16, a);
                const auto gb = trace_bits(F16, c);
                for (elem_t gamma : dirs)
                    for (elem_t delta : dirs) {
                        if (gamma == delta) continue;
                        for (int cs = 1; cs <= 6; ++cs)
                            feed(per_case[cs - 1],
                                 translator_build_pair(F16, fb, gb, gamma, delta, cs).cert);
                    }
            }
        negatives = negatives &&
                    named_failure(translator_build_pair(F16, trace_bits(F16, 1),
                                                        trace_bits(F16, 1), 1, 2, 1)
                                      .cert,
                                  "gamma 1-structure of f");
        for (const auto& t : per_case) tallies.push_back(t);
    }
    {  // linearized permutation plus Boolean flip
        Tally t;
        for (const auto& F : {F8, F16}) {
            const elem_t q = static_cast<elem_t>(F->order());
            const LinearizedPoly Ls[2] = {LinearizedPoly(F, {1}), LinearizedPoly(F, {0, 1})};
            for (const auto& L : Ls)
                for (elem_t alpha = 1; alpha < q; ++alpha)
                    for (elem_t c = 1; c < q; ++c)
                        feed(t, linear_perm_build(L, alpha, trace_bits(F, c)).cert);
        }
        negatives = negatives && named_failure(linear_perm_build(LinearizedPoly(F8, {0, 1}), 2,
                                                                 trace_bits(F8, 1))
                                                   .cert,
                                               "1-linear structure");
        tallies.push_back(t);
    }
    {  // derivative families
        Tally t;
        for (const auto& F : {F8, F16}) {
            const std::uint64_t q = F->order();
            for (std::uint64_t d = 1; d <= std::min<std::uint64_t>(q - 2, 14); ++d)
                for (const auto& r : apn_derived_family(tabulate(Poly::monomial(F, 1, d))))
                    feed(t, r.cert);
        }
        negatives = negatives &&
                    named_failure(apn_derived_family(tabulate(Poly::monomial(F8, 1, 2)))[0].cert,
                                  "F is APN");
        tallies.push_back(t);
    }

    std::uint64_t builds = 0, certified = 0, violations = 0;
    bool every_grid_has_positive = true;
    for (const auto& t : tallies) {
        builds += t.builds;
        certified += t.certified;
        violations += t.violations;
        every_grid_has_positive = every_grid_has_positive && t.certified >= 1;
    }
    const auto ms = ms_since(t0);
    const bool ok = violations == 0 && every_grid_has_positive && negatives;
    report(6, "construction-soundness", ok,
           std::to_string(tallies.size()) + " grids (" +
               (every_grid_has_positive ? "all" : "NOT all") + " with a certified instance), " +
               std::to_string(builds) + " builds, " + std::to_string(certified) + " certified, " +
               std::to_string(violations) + " violations, negatives " +
               (negatives ? "named" : "MISSING") + " (" + std::to_string(ms) + " ms)");
}

// ---- criterion 7: the parametric family catalog ----

void criterion_catalog_families() {
    const auto t0 = clock_t_::now();
    bool ok = true;
    std::string bad;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            ok = false;
            bad += std::string(" ") + what;
        }
    };

    for (unsigned m : {3u, 5u, 7u})
        for (auto cs : {MaschiettiCase::Singer, MaschiettiCase::Segre, MaschiettiCase::Glynn1,
                        MaschiettiCase::Glynn2}) {
            const auto r = maschietti_build(cs, m);
            expect(r.cert.certified() && r.cert.census_two_to_one, "maschietti");
        }
    for (unsigned n : {3u, 5u, 7u}) {
        const unsigned h = (n - 1) / 2;
        for (unsigned mask = 1; mask < (1u << h); ++mask) {
            std::set<unsigned> I;
            for (unsigned i = 0; i < h; ++i)
                if (mask & (1u << i)) I.insert(i + 1);
            const auto r = l_i_build(n, I);
            expect(r.cert.certified() && r.cert.census_two_to_one, "l-i");
        }
    }
    {
        auto F = Field::make(2, 6);
        for (unsigned k : {1u, 2u})
            for (elem_t a = 0; a < F->order(); ++a) {
                const auto r = gold_derivative_build(k, 3, a, F);
                const bool outside = !F->in_subfield(a, 3);
                expect(r.cert.certified() == outside, "gold-certified");
                expect(r.cert.census_two_to_one == outside, "gold-census");
            }
    }
    for (unsigned m : {3u, 5u}) {
        const auto r = mcm_build(2, m);
        expect(r.cert.certified() && r.cert.census_two_to_one, "mcm");
    }
    for (auto [p, n] : {std::pair<unsigned, unsigned>{5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
        auto F = Field::make(p, n);
        for (std::uint64_t deg = 1; deg <= 40; ++deg) {
            const auto e = dickson_e(deg, F);
            if (e > 2) continue;
            const auto r = dickson_build(F, deg, 1);
            if (e == 2) {
                expect(r.cert.certified() && r.cert.census_two_to_one, "dickson-2to1");
            } else {
                expect(!r.cert.census_two_to_one && is_permutation(r.map), "dickson-perm");
            }
        }
    }
    for (unsigned m : {2u, 3u})
        for (std::uint64_t n = 1; n < (1ull << (2 * m)); ++n)
            expect(reversed_dickson_equivalence(n, m).equivalent, "reversed-dickson");

    const auto ms = ms_since(t0);
    report(7, "catalog-families", ok,
           ok ? "maschietti, l-i, gold, mcm, dickson, reversed-dickson all census-verified (" +
                    std::to_string(ms) + " ms)"
              : "failing:" + bad + " (" + std::to_string(ms) + " ms)");
}

// ---- criterion 8: application builders ----

void criterion_applications() {
    const auto t0 = clock_t_::now();
    bool ok = true;
    std::string bad;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            ok = false;
            bad += std::string(" ") + what;
        }
    };

    {  // bentness equivalence: exhaustive at m = 2, seeded at m = 3
        auto S = Field::make(2, 2);
        for (unsigned code = 0; code < 256; ++code) {
            const MapTable psi{S, S,
                               {static_cast<elem_t>(code & 3), static_cast<elem_t>((code >> 2) & 3),
                                static_cast<elem_t>((code >> 4) & 3),
                                static_cast<elem_t>(code >> 6)}};
            for (elem_t mu = 0; mu < 4; ++mu)
                expect(class_h_equivalence(psi, mu).consistent, "bent-equivalence-m2");
        }
        auto S8 = Field::make(2, 3);
        auto g = oracle::rng(23);
        for (int i = 0; i < 400; ++i) {
            const auto psi = random_map(g, S8);
            for (elem_t mu : {0, 1, 5})
                expect(class_h_equivalence(psi, mu).consistent, "bent-equivalence-m3");
        }
    }
    {  // bivariate builder: 2-to-1 inner maps give semi-bent tables
        auto g = oracle::rng(29);
        for (unsigned m : {2u, 3u, 4u}) {
            auto S = Field::make(2, m);
            BooleanTable zero;
            zero.n = m;
            zero.bits.assign(S->order(), 0);
            for (int i = 0; i < 50; ++i) {
                const auto pi = random_two_to_one(g, S);
                expect(is_semibent(mm_build(pi, zero)), "bivariate-semibent");
                BooleanTable rnd = zero;
                for (auto& b : rnd.bits) b = static_cast<std::uint8_t>(oracle::draw(g, 2));
                expect(is_semibent(mm_build(pi, rnd)), "bivariate-semibent");
            }
            expect(is_semibent(mm_build(tabulate(LinearizedPoly(S, {1, 1})), zero)),
                   "bivariate-semibent");
        }
    }
    {  // squaring over the nine-element field
        auto F = Field::make(3, 2);
        const auto chk = planar_image_check(tabulate(Poly::monomial(F, 1, 2)));
        expect(chk.planar && chk.two_to_one && chk.image_size == 5 && chk.equivalence,
               "planar-squaring");
    }
    {  // permutations lifted from seeded 2-to-1 maps
        auto F = Field::make(2, 4);
        auto g = oracle::rng(31);
        for (int i = 0; i < 50; ++i) {
            const auto T = random_two_to_one(g, F);
            expect(is_permutation(permutation_from_two_to_one(T)), "perm-lift");
        }
    }

    const auto ms = ms_since(t0);
    report(8, "applications", ok,
           ok ? "bent equivalence, semi-bent bivariates, planar squaring, lifts all hold (" +
                    std::to_string(ms) + " ms)"
              : "failing:" + bad + " (" + std::to_string(ms) + " ms)");
}

// ---- criterion 9: property suites ----

void criterion_property_suites() {
    const auto t0 = clock_t_::now();
    bool ok = true;
    std::string bad;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            ok = false;
            bad += std::string(" ") + what;
        }
    };

    auto char2_corpus = [&](const FieldPtr& F, std::uint64_t seed) {
        std::vector<MapTable> maps;
        auto g = oracle::rng(seed);
        for (int i = 0; i < 10; ++i) maps.push_back(random_map(g, F));
        for (int i = 0; i < 5; ++i) maps.push_back(random_permutation(g, F));
        for (int i = 0; i < 5; ++i) maps.push_back(random_two_to_one(g, F));
        for (std::uint64_t d = 1; d <= 6; ++d) maps.push_back(tabulate(Poly::monomial(F, 1, d)));
        maps.push_back(tabulate(LinearizedPoly(F, {1, 1})));
        return maps;
    };

    for (unsigned n : {3u, 4u, 5u, 6u}) {  // Parseval and power moments
        auto F = Field::make(2, n);
        const long long q = static_cast<long long>(F->order());
        for (const auto& T : char2_corpus(F, 100 + n)) {
            for (elem_t v = 0; v < F->order(); ++v) {
                const auto W = walsh_component(T, v);
                long long s = 0;
                for (auto w : W.values) s += w * w;
                expect(s == q * q, "parseval");
            }
            const auto cnt = fiber_sizes(T.values, T.codomain->order());
            for (unsigned j = 1; j <= 3; ++j) {
                long long direct = 0;
                for (auto c : cnt) {
                    long long t = 1;
                    for (unsigned i = 0; i < j; ++i) t *= static_cast<long long>(c);
                    direct += t;
                }
                expect(moment_sum(T, j) == direct, "moment");
            }
        }
    }

    {  // 2-to-1-ness is invariant under outer/inner affine bijections
        auto g = oracle::rng(41);
        for (auto [p, n] : {std::pair<unsigned, unsigned>{2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
            auto F = Field::make(p, n);
            const elem_t q = static_cast<elem_t>(F->order());
            for (int i = 0; i < 15; ++i) {
                const auto T = i % 2 ? random_two_to_one(g, F) : random_map(g, F);
                const bool base = oracle::two_to_one(T.values, q);
                for (int k = 0; k < 3; ++k) {
                    const elem_t a = static_cast<elem_t>(1 + oracle::draw(g, q - 1));
                    const elem_t b = oracle::draw(g, q);
                    const elem_t c = static_cast<elem_t>(1 + oracle::draw(g, q - 1));
                    const elem_t d = oracle::draw(g, q);
                    std::vector<elem_t> comp(q);
                    for (elem_t x = 0; x < q; ++x)
                        comp[x] = F->add(F->mul(a, T.values[F->add(F->mul(c, x), d)]), b);
                    expect(oracle::two_to_one(comp, q) == base, "affine-invariance");
                }
            }
        }
    }

    {  // verdicts survive a change of irreducible modulus for the 16-element field
        auto Fa = Field::make(2, 4);
        auto Fb = Field::make(2, 4, std::vector<unsigned>{1, 0, 0, 1, 1});
        const SubfieldEmbedding iso(Fa, Fb);
        auto transport = [&](const MapTable& T) {
            MapTable out{Fb, Fb, std::vector<elem_t>(16, 0)};
            for (elem_t x = 0; x < 16; ++x) out.values[iso.embed(x)] = iso.embed(T.values[x]);
            return out;
        };
        std::vector<MapTable> maps = char2_corpus(Fa, 43);
        for (std::uint64_t d = 7; d <= 14; ++d) maps.push_back(tabulate(Poly::monomial(Fa, 1, d)));
        for (const auto& Ta : maps) {
            const auto Tb = transport(Ta);
            expect(is_two_to_one(Ta).value == is_two_to_one(Tb).value, "iso-2to1");
            expect(fiber_census(Ta).histogram == fiber_census(Tb).histogram, "iso-census");
            expect(image_size(Ta) == image_size(Tb), "iso-image");
            expect(is_permutation(Ta) == is_permutation(Tb), "iso-perm");
            expect(two_to_one_statistic(Ta) == two_to_one_statistic(Tb), "iso-statistic");
            for (unsigned j = 2; j <= 3; ++j)
                expect(moment_sum(Ta, j) == moment_sum(Tb, j), "iso-moment");
        }
        const auto cube_a = tabulate(Poly::monomial(Fa, 1, 3));
        expect(is_apn(cube_a).apn && is_apn(transport(cube_a)).apn, "iso-apn");
    }

    const auto ms = ms_since(t0);
    report(9, "property-suites", ok,
           ok ? "parseval, moments, affine invariance, modulus independence all hold (" +
                    std::to_string(ms) + " ms)"
              : "failing:" + bad + " (" + std::to_string(ms) + " ms)");
}

}  // namespace

int main() {
    criterion_counting_table();
    criterion_brute_force();
    criterion_walsh_corpus();
    criterion_f5_cubics();
    criterion_quartic_classification();
    criterion_construction_soundness();
    criterion_catalog_families();
    criterion_applications();
    criterion_property_suites();
    if (failures) {
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
}
