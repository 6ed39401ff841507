// tto — census, spectral tests, certified constructions, family catalog,
// low-degree classification, counting, and application builders for 2-to-1
// maps over finite fields.
//
// Exit codes: 0 success / true verdict; 1 false verdict; 2 usage or
// parameter errors; 3 failed construction hypothesis (name on stderr).

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tto/applications.hpp"
#include "tto/catalog.hpp"
#include "tto/corpus.hpp"
#include "tto/io.hpp"

namespace {

using namespace tto;

enum class Format { Pretty, Json, Tsv };

Format parse_format(const std::string& s) {
    if (s == "pretty") return Format::Pretty;
    if (s == "json") return Format::Json;
    if (s == "tsv") return Format::Tsv;
    fail("ParseError", "unknown format: " + s);
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_census(const FiberCensus& c, Format fmt) {
    if (fmt == Format::Json) {
        emit_json(census_json(c));
        return;
    }
    if (fmt == Format::Tsv) {
        for (const auto& [size, count] : c.histogram)
            std::cout << size << "\t" << count << "\n";
        return;
    }
    std::cout << "census:";
    for (const auto& [size, count] : c.histogram) std::cout << " " << size << ":" << count;
    std::cout << "\n";
    if (c.exceptional) {
        std::cout << "exceptional: value " << c.exceptional->first << ", preimage {";
        bool first = true;
        for (auto x : c.exceptional->second) {
            std::cout << (first ? "" : ",") << x;
            first = false;
        }
        std::cout << "}\n";
    }
}

void emit_cert(const Certificate& c, Format fmt) {
    if (fmt == Format::Json) {
        emit_json(cert_json(c));
        return;
    }
    if (fmt == Format::Tsv) {
        for (const auto& ck : c.checks)
            std::cout << ck.name << "\t" << (ck.passed ? "pass" : "fail") << "\n";
        std::cout << "census-2to1\t" << yesno(c.census_two_to_one) << "\n";
        return;
    }
    std::cout << "construction: " << c.construction << "\n";
    for (const auto& [k, v] : c.params) std::cout << "  " << k << " = " << v << "\n";
    for (const auto& ck : c.checks) {
        std::cout << "  check " << ck.name << ": " << (ck.passed ? "pass" : "FAIL");
        if (!ck.detail.empty()) std::cout << " (" << ck.detail << ")";
        std::cout << "\n";
    }
    std::cout << "census 2-to-1: " << yesno(c.census_two_to_one) << "\n";
    std::cout << "certified: " << yesno(c.certified()) << "\n";
}

int finish_cert(const Certificate& c, Format fmt) {
    emit_cert(c, fmt);
    if (!c.certified()) {
        std::cerr << "hypothesis failed: " << c.first_failed()->name << "\n";
        return 3;
    }
    return 0;
}

// ---- json parameter helpers for `construct` ----

json parse_params(const std::string& text) {
    if (text.empty()) return json::object();
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        fail("ParseError", std::string("bad --params json: ") + e.what());
    }
}

const json& want(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) fail("ParseError", "missing parameter: " + key);
    return *it;
}

std::string want_str(const json& j, const std::string& key) {
    const json& v = want(j, key);
    if (!v.is_string()) fail("ParseError", "parameter must be a string: " + key);
    return v.get<std::string>();
}

std::uint64_t want_u64(const json& j, const std::string& key) {
    const json& v = want(j, key);
    if (v.is_number_unsigned() || v.is_number_integer()) return v.get<std::uint64_t>();
    if (v.is_string()) return iodetail::parse_u64(v.get<std::string>());
    fail("ParseError", "parameter must be an integer: " + key);
}

std::uint64_t want_u64_or(const json& j, const std::string& key, std::uint64_t dflt) {
    return j.contains(key) ? want_u64(j, key) : dflt;
}

std::vector<elem_t> want_values(const json& j, const std::string& key) {
    const json& v = want(j, key);
    if (!v.is_array()) fail("ParseError", "parameter must be an array: " + key);
    return v.get<std::vector<elem_t>>();
}

int run_construct(const std::string& method, const std::string& field_spec,
                  const std::string& params_text, Format fmt) {
    const json j = parse_params(params_text);
    auto field = [&]() {
        if (field_spec.empty()) fail("ParseError", "construct " + method + " needs --field");
        return parse_field_spec(field_spec);
    };

    if (method == "agw") {
        const auto fv = want_values(j, "f");
        const auto lv = want_values(j, "lambda");
        const auto lbv = want_values(j, "lambda_bar");
        const auto gv = want_values(j, "g");
        const std::size_t s = static_cast<std::size_t>(want_u64(j, "s"));
        const std::size_t sb = static_cast<std::size_t>(want_u64_or(j, "s_bar", s));
        SetMap f{fv.size(), fv.size(), fv}, lam{lv.size(), s, lv}, lamb{lbv.size(), sb, lbv},
            g{gv.size(), sb, gv};
        return finish_cert(agw_build(f, lam, lamb, g).cert, fmt);
    }
    auto F = field();
    if (method == "field-gen")
        return finish_cert(field_gen_build(parse_poly(F, want_str(j, "h")),
                                           parse_linearized(F, want_str(j, "phi")),
                                           parse_linearized(F, want_str(j, "psi")),
                                           parse_linearized(F, want_str(j, "psibar")),
                                           parse_poly(F, want_str(j, "g")),
                                           static_cast<unsigned>(want_u64(j, "m")))
                               .cert,
                           fmt);
    if (method == "agw-3l")
        return finish_cert(agw_3l_build(parse_linearized(F, want_str(j, "L1")),
                                        parse_linearized(F, want_str(j, "L2")),
                                        parse_linearized(F, want_str(j, "L3")),
                                        parse_poly(F, want_str(j, "g")),
                                        static_cast<unsigned>(want_u64(j, "m")))
                               .cert,
                           fmt);
    if (method == "trace-plain" || method == "trace-frobdiff")
        return finish_cert(case1_trace_build(parse_poly(F, want_str(j, "h")),
                                             parse_linearized(F, want_str(j, "phi")),
                                             parse_poly(F, want_str(j, "g")),
                                             static_cast<unsigned>(want_u64(j, "m")),
                                             method == "trace-frobdiff")
                               .cert,
                           fmt);
    if (method == "artin-schreier") {
        const std::string v = want_str(j, "variant");
        ArtinSchreierVariant variant;
        if (v == "plain-g") variant = ArtinSchreierVariant::PlainG;
        else if (v == "trace-u") variant = ArtinSchreierVariant::TraceU;
        else if (v == "exp-u") variant = ArtinSchreierVariant::ExpU;
        else fail("ParseError", "variant must be plain-g|trace-u|exp-u");
        return finish_cert(case2_artin_schreier_build(parse_poly(F, want_str(j, "h")),
                                                      parse_linearized(F, want_str(j, "phi")),
                                                      parse_poly(F, want_str(j, "u")), variant,
                                                      static_cast<unsigned>(want_u64(j, "m")))
                               .cert,
                           fmt);
    }
    if (method == "cyclotomic") {
        const std::string mode_s = want_str(j, "mode");
        CyclotomicMode mode;
        if (mode_s == "direct") mode = CyclotomicMode::Direct;
        else if (mode_s == "exponent") mode = CyclotomicMode::Exponent;
        else if (mode_s == "subfield") mode = CyclotomicMode::Subfield;
        else fail("ParseError", "mode must be direct|exponent|subfield");
        return finish_cert(cyclotomic_build(want_u64(j, "r"), want_u64(j, "d"),
                                            parse_poly(F, want_str(j, "h")), mode,
                                            static_cast<unsigned>(want_u64_or(j, "q0_degree", 0)))
                               .cert,
                           fmt);
    }
    if (method == "piecewise-explicit")
        return finish_cert(piecewise_explicit(tabulate(parse_poly(F, want_str(j, "G"))),
                                              want_values(j, "S1"), want_values(j, "S2"),
                                              want_values(j, "phi"))
                               .cert,
                           fmt);
    if (method == "piecewise-hyperplane")
        return finish_cert(piecewise_hyperplane(tabulate(parse_poly(F, want_str(j, "G"))),
                                                want_values(j, "S"),
                                                static_cast<elem_t>(want_u64(j, "gamma")),
                                                want_u64_or(j, "swapped", 0) != 0)
                               .cert,
                           fmt);
    if (method == "piecewise-trace")
        return finish_cert(piecewise_trace(tabulate(parse_poly(F, want_str(j, "G"))),
                                           static_cast<elem_t>(want_u64(j, "gamma")),
                                           want_u64_or(j, "swapped", 0) != 0)
                               .cert,
                           fmt);
    if (method == "compose")
        return finish_cert(compose(tabulate(parse_poly(F, want_str(j, "outer"))),
                                   tabulate(parse_poly(F, want_str(j, "inner"))))
                               .cert,
                           fmt);
    if (method == "translator-single")
        return finish_cert(translator_build_single(tabulate(parse_poly(F, want_str(j, "F"))),
                                                   parse_poly(F, want_str(j, "G")),
                                                   static_cast<elem_t>(want_u64(j, "gamma")))
                               .cert,
                           fmt);
    if (method == "translator-pair")
        return finish_cert(
            translator_build_pair(F, boolean_from_hex(F->degree(), want_str(j, "f_hex")),
                                  boolean_from_hex(F->degree(), want_str(j, "g_hex")),
                                  static_cast<elem_t>(want_u64(j, "gamma")),
                                  static_cast<elem_t>(want_u64(j, "delta")),
                                  static_cast<int>(want_u64(j, "case")))
                .cert,
            fmt);
    if (method == "linear-perm")
        return finish_cert(linear_perm_build(parse_linearized(F, want_str(j, "L")),
                                             static_cast<elem_t>(want_u64(j, "alpha")),
                                             boolean_from_hex(F->degree(), want_str(j, "f_hex")))
                               .cert,
                           fmt);
    if (method == "apn") {
        const auto T = tabulate(parse_poly(F, want_str(j, "F")));
        const auto verdict = is_apn(T);
        if (fmt == Format::Json) {
            json out{{"apn", verdict.apn}};
            if (verdict.failing_direction) out["failing_direction"] = *verdict.failing_direction;
            emit_json(out);
        } else {
            std::cout << "apn: " << yesno(verdict.apn) << "\n";
            if (verdict.failing_direction)
                std::cout << "failing direction: " << *verdict.failing_direction << "\n";
        }
        if (!verdict.apn) {
            std::cerr << "hypothesis failed: F is APN\n";
            return 3;
        }
        return 0;
    }
    fail("ParseError", "unknown construct method: " + method);
}

ParamMap params_to_map(const std::string& text) {
    ParamMap pm;
    const json j = parse_params(text);
    for (const auto& [k, v] : j.items())
        pm[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return pm;
}

int run_apps(const std::string& cmd, const json& j, Format fmt) {
    if (cmd == "bent" || cmd == "semibent") {
        BooleanTable f;
        if (j.contains("hex")) {
            f = boolean_from_hex(static_cast<unsigned>(want_u64(j, "n")), want_str(j, "hex"));
        } else {
            auto F = parse_field_spec(want_str(j, "field"));
            const auto P = parse_poly(F, want_str(j, "poly"));
            f.n = F->degree();
            f.bits.resize(F->order());
            for (elem_t x = 0; x < F->order(); ++x)
                f.bits[x] = static_cast<std::uint8_t>(F->trace_abs(P.eval(x)));
        }
        const bool verdict = cmd == "bent" ? is_bent(f) : is_semibent(f);
        if (fmt == Format::Json) emit_json(json{{cmd, verdict}});
        else std::cout << cmd << ": " << yesno(verdict) << "\n";
        return verdict ? 0 : 1;
    }
    if (cmd == "mm-build") {
        auto S = Field::make(2, static_cast<unsigned>(want_u64(j, "m")));
        const auto pi = tabulate(parse_poly(S, want_str(j, "pi")));
        BooleanTable g;
        g.n = S->degree();
        g.bits.assign(S->order(), 0);
        if (j.contains("g_hex")) g = boolean_from_hex(g.n, want_str(j, "g_hex"));
        const auto f = mm_build(pi, g);
        const bool sb = is_semibent(f), bent = is_bent(f);
        if (fmt == Format::Json)
            emit_json(json{{"hex", boolean_to_hex(f)},
                           {"semibent", sb},
                           {"bent", bent},
                           {"pi_two_to_one", is_two_to_one(pi).value},
                           {"pi_permutation", is_permutation(pi)}});
        else {
            std::cout << "table: " << boolean_to_hex(f) << "\n";
            std::cout << "semibent: " << yesno(sb) << "\nbent: " << yesno(bent) << "\n";
        }
        return 0;
    }
    if (cmd == "class-h") {
        auto S = Field::make(2, static_cast<unsigned>(want_u64(j, "m")));
        const auto psi = tabulate(parse_poly(S, want_str(j, "psi")));
        const elem_t mu = static_cast<elem_t>(want_u64_or(j, "mu", 0));
        const auto eq = class_h_equivalence(psi, mu);
        if (fmt == Format::Json)
            emit_json(json{{"bent", eq.bent},
                           {"g_permutation", eq.cond1},
                           {"shifts_two_to_one", eq.cond2},
                           {"consistent", eq.consistent}});
        else
            std::cout << "bent: " << yesno(eq.bent) << "\ng permutation: " << yesno(eq.cond1)
                      << "\nshifts 2-to-1: " << yesno(eq.cond2)
                      << "\nconsistent: " << yesno(eq.consistent) << "\n";
        return eq.consistent ? 0 : 1;
    }
    if (cmd == "vectorial-bent") {
        auto r = vectorial_bent_build(want_u64(j, "k"), static_cast<unsigned>(want_u64(j, "m")));
        const int rc = finish_cert(r.cert, fmt);
        if (fmt != Format::Json) std::cout << "vectorial bent: " << yesno(r.vectorial_bent) << "\n";
        return rc;
    }
    if (cmd == "planar") {
        auto F = parse_field_spec(want_str(j, "field"));
        const auto T = tabulate(parse_poly(F, want_str(j, "poly")));
        const auto chk = planar_image_check(T);
        if (fmt == Format::Json)
            emit_json(json{{"planar", chk.planar},
                           {"two_to_one", chk.two_to_one},
                           {"image_size", chk.image_size},
                           {"equivalence", chk.equivalence}});
        else
            std::cout << "planar: " << yesno(chk.planar) << "\ntwo-to-one: "
                      << yesno(chk.two_to_one) << "\nimage size: " << chk.image_size
                      << "\nequivalence: " << yesno(chk.equivalence) << "\n";
        return chk.equivalence ? 0 : 1;
    }
    if (cmd == "do-check") {
        auto F = parse_field_spec(want_str(j, "field"));
        const auto P = parse_poly(F, want_str(j, "poly"));
        const auto v = do_planar_equiv(P);
        if (fmt == Format::Json)
            emit_json(json{{"dembowski_ostrom", v.dembowski_ostrom},
                           {"planar", v.planar},
                           {"two_to_one", v.two_to_one},
                           {"equivalence", v.equivalence}});
        else
            std::cout << "dembowski-ostrom: " << yesno(v.dembowski_ostrom)
                      << "\nplanar: " << yesno(v.planar) << "\ntwo-to-one: " << yesno(v.two_to_one)
                      << "\nequivalence: " << yesno(v.equivalence) << "\n";
        return v.equivalence ? 0 : 1;
    }
    if (cmd == "perm-lift") {
        auto F = parse_field_spec(want_str(j, "field"));
        const auto T = tabulate(parse_poly(F, want_str(j, "poly")));
        const auto G = permutation_from_two_to_one(T);
        if (fmt == Format::Json)
            emit_json(json{{"values", G.values}, {"permutation", is_permutation(G)}});
        else {
            std::cout << "lift:";
            for (auto v : G.values) std::cout << " " << v;
            std::cout << "\npermutation: " << yesno(is_permutation(G)) << "\n";
        }
        return 0;
    }
    fail("ParseError", "unknown apps command: " + cmd);
}

int run(int argc, char** argv) {
    CLI::App app{"2-to-1 mappings over finite fields: census, spectra, constructions, catalog"};
    app.require_subcommand(1);
    app.fallthrough();  // global --format/--seed usable after any subcommand

    std::string field_spec, poly_text, params_text, format_text = "pretty";
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t max_q = 64;
    app.add_option("--format", format_text, "output format: pretty|json|tsv");
    app.add_option("--seed", seed, "seed for randomized corpora (default fixed)");

    std::function<int()> action;

    auto add_fp = [&](CLI::App* sub, bool need_field, bool need_poly) {
        auto* f = sub->add_option("--field", field_spec, "field spec gf:p=..,n=..[,mod=c0:c1:..]");
        auto* p = sub->add_option("--poly", poly_text, "polynomial literal, terms c*x^e joined by +");
        if (need_field) f->required();
        if (need_poly) p->required();
    };

    // census
    {
        auto* sub = app.add_subcommand("census", "fiber census of a polynomial map");
        add_fp(sub, true, true);
        sub->callback([&] {
            action = [&]() {
                auto F = parse_field_spec(field_spec);
                const auto T = tabulate(parse_poly(F, poly_text));
                const auto fmt = parse_format(format_text);
                if (fmt == Format::Pretty)
                    std::cout << "field " << F->spec_string() << "\npoly "
                              << poly_to_string(parse_poly(F, poly_text)) << "\n";
                emit_census(fiber_census(T), fmt);
                if (fmt == Format::Pretty)
                    std::cout << "two-to-one: " << yesno(is_two_to_one(T).value) << "\n";
                return 0;
            };
        });
    }
    // verify-2to1
    {
        auto* sub = app.add_subcommand("verify-2to1", "exit 0 iff the map is 2-to-1");
        add_fp(sub, true, true);
        sub->callback([&] {
            action = [&]() {
                auto F = parse_field_spec(field_spec);
                const auto T = tabulate(parse_poly(F, poly_text));
                const auto v = is_two_to_one(T);
                const auto fmt = parse_format(format_text);
                if (fmt == Format::Json) emit_json(verdict_json(v));
                else {
                    std::cout << "two-to-one: " << yesno(v.value) << "\n";
                    if (!v.value && v.witness)
                        std::cout << "witness: value " << *v.witness << " has fiber size "
                                  << v.witness_fiber << "\n";
                }
                return v.value ? 0 : 1;
            };
        });
    }
    // walsh-test
    {
        auto* sub = app.add_subcommand("walsh-test", "spectral 2-to-1 statistic (char 2)");
        add_fp(sub, true, true);
        sub->callback([&] {
            action = [&]() {
                auto F = parse_field_spec(field_spec);
                const auto T = tabulate(parse_poly(F, poly_text));
                const auto stat = two_to_one_statistic(T);
                const auto fmt = parse_format(format_text);
                if (fmt == Format::Json)
                    emit_json(json{{"statistic", stat}, {"two_to_one", stat == 0}});
                else
                    std::cout << "statistic: " << stat << "\ntwo-to-one: " << yesno(stat == 0)
                              << "\n";
                return stat == 0 ? 0 : 1;
            };
        });
    }
    // construct
    {
        auto* sub = app.add_subcommand(
            "construct",
            "run a certified builder: agw, field-gen, agw-3l, trace-plain, trace-frobdiff, "
            "artin-schreier, cyclotomic, piecewise-explicit, piecewise-hyperplane, "
            "piecewise-trace, compose, translator-single, translator-pair, linear-perm, apn");
        static std::string method;
        sub->add_option("method", method, "builder name")->required();
        sub->add_option("--params", params_text, "parameter object (json)");
        add_fp(sub, false, false);
        sub->callback([&] {
            action = [&]() {
                return run_construct(method, field_spec, params_text, parse_format(format_text));
            };
        });
    }
    // catalog
    {
        auto* cat = app.add_subcommand("catalog", "parametric 2-to-1 families");
        cat->require_subcommand(1);
        auto* list = cat->add_subcommand("list", "list families and parameter schemas");
        list->callback([&] {
            action = [&]() {
                const auto fmt = parse_format(format_text);
                if (fmt == Format::Json) {
                    json out = json::array();
                    for (const auto& f : family_registry())
                        out.push_back(json{{"name", f.name}, {"schema", f.schema}});
                    emit_json(out);
                } else {
                    for (const auto& f : family_registry())
                        std::cout << f.name << "\t" << f.schema << "\n";
                }
                return 0;
            };
        });
        static std::string family;
        auto* build = cat->add_subcommand("build", "instantiate one family member");
        build->add_option("family", family, "family name")->required();
        build->add_option("--params", params_text, "parameter object (json)");
        build->callback([&] {
            action = [&]() {
                const auto* entry = find_family(family);
                if (!entry) fail("ParseError", "unknown family: " + family);
                return finish_cert(entry->build(params_to_map(params_text)).cert,
                                   parse_format(format_text));
            };
        });
        auto* sweep = cat->add_subcommand("sweep", "emit (params, predicate, census) rows");
        sweep->add_option("family", family, "family name")->required();
        sweep->add_option("--max-q", max_q, "largest field order in the sweep grid");
        sweep->callback([&] {
            action = [&]() {
                const auto* entry = find_family(family);
                if (!entry) fail("ParseError", "unknown family: " + family);
                const auto rows = entry->sweep(max_q);
                const auto fmt = parse_format(format_text);
                bool sound = true;
                if (fmt == Format::Json) {
                    json out = json::array();
                    for (const auto& r : rows)
                        out.push_back(json{{"params", r.params},
                                           {"predicate", r.predicate},
                                           {"census", r.census}});
                    emit_json(out);
                } else {
                    for (const auto& r : rows)
                        std::cout << r.params << "\t" << (r.predicate ? "accept" : "reject") << "\t"
                                  << (r.census ? "2to1" : "not-2to1") << "\n";
                }
                for (const auto& r : rows) sound = sound && (!r.predicate || r.census);
                if (!sound) std::cerr << "soundness violation: predicate accepted a non-2-to-1 map\n";
                return sound ? 0 : 1;
            };
        });
    }
    // classify
    {
        auto* sub = app.add_subcommand("classify", "low-degree (<=4) 2-to-1 classification");
        add_fp(sub, true, true);
        static bool normalize = false;
        sub->add_flag("--normalize", normalize, "normalize before classifying");
        sub->callback([&] {
            action = [&]() {
                auto F = parse_field_spec(field_spec);
                Poly f = parse_poly(F, poly_text);
                if (normalize) f = normalize_low_degree(f);
                const auto v = classify_low_degree(f);
                const bool census = is_two_to_one(tabulate(f)).value;
                const auto fmt = parse_format(format_text);
                if (fmt == Format::Json)
                    emit_json(json{{"poly", poly_to_string(f)},
                                   {"two_to_one", v.two_to_one},
                                   {"rule", v.rule},
                                   {"census_agrees", census == v.two_to_one}});
                else
                    std::cout << "poly: " << poly_to_string(f) << "\ntwo-to-one: "
                              << yesno(v.two_to_one) << "\nrule: " << v.rule
                              << "\ncensus agrees: " << yesno(census == v.two_to_one) << "\n";
                return census == v.two_to_one ? 0 : 1;
            };
        });
    }
    // count-n
    {
        auto* sub = app.add_subcommand("count-n", "count 2-to-1 maps on GF(2^n) exactly");
        static unsigned n = 0;
        static bool approx = false;
        sub->add_option("n", n, "dimension")->required();
        sub->add_flag("--approx", approx, "asymptotic estimate instead of exact count");
        sub->callback([&] {
            action = [&]() {
                const auto fmt = parse_format(format_text);
                if (approx) {
                    const auto a = count_two_to_one_approx(n);
                    if (fmt == Format::Json) emit_json(count_approx_json(a));
                    else {
                        if (a.count_overflows) std::cout << "log2(count) ~ " << a.count_log2 << "\n";
                        else std::cout << "count ~ " << a.count << "\n";
                        if (a.ratio_overflows) std::cout << "log2(ratio) ~ " << a.ratio_log2 << "\n";
                        else std::cout << "ratio ~ " << a.ratio << "\n";
                    }
                    return 0;
                }
                const auto c = count_two_to_one_exact(n);
                if (fmt == Format::Json) emit_json(count_json(c));
                else
                    std::cout << "N = " << c.count.str() << "\nbijections = " << c.bijections.str()
                              << "\nratio = " << c.ratio_3sig << "\n";
                return 0;
            };
        });
    }
    // apps
    {
        auto* sub = app.add_subcommand(
            "apps", "application builders: bent, semibent, mm-build, class-h, vectorial-bent, "
                    "planar, do-check, perm-lift");
        static std::string cmd;
        sub->add_option("cmd", cmd, "application command")->required();
        sub->add_option("--params", params_text, "parameter object (json)");
        add_fp(sub, false, false);
        sub->callback([&] {
            action = [&]() {
                json j = parse_params(params_text);
                // --field/--poly are accepted as flags for convenience
                if (!field_spec.empty()) j["field"] = field_spec;
                if (!poly_text.empty()) j["poly"] = poly_text;
                return run_apps(cmd, j, parse_format(format_text));
            };
        });
    }
    // repro
    {
        auto* sub = app.add_subcommand("repro", "regenerate fixed reference outputs");
        static std::string table;
        sub->add_option("table", table, "ratio-table | f5-cubics")->required();
        sub->callback([&] {
            action = [&]() {
                const auto fmt = parse_format(format_text);
                if (table == "ratio-table") {
                    json rows = json::array();
                    for (unsigned n = 1; n <= 8; ++n) {
                        const auto c = count_two_to_one_exact(n);
                        if (fmt == Format::Json)
                            rows.push_back(json{{"n", n}, {"ratio", c.ratio_3sig}});
                        else std::cout << n << "\t" << c.ratio_3sig << "\n";
                    }
                    if (fmt == Format::Json) emit_json(rows);
                    return 0;
                }
                if (table == "f5-cubics") {
                    auto F = Field::make(5, 1);
                    json rows = json::array();
                    unsigned found = 0;
                    for (elem_t a2 = 0; a2 < 5; ++a2)
                        for (elem_t a1 = 0; a1 < 5; ++a1) {
                            Poly f = Poly::zero(F);
                            f.set(3, 1);
                            if (a2) f.set(2, a2);
                            if (a1) f.set(1, a1);
                            if (!classify_low_degree(f).two_to_one) continue;
                            ++found;
                            if (fmt == Format::Json) rows.push_back(poly_to_string(f));
                            else std::cout << poly_to_string(f) << "\n";
                        }
                    if (fmt == Format::Json) emit_json(rows);
                    return found == 10 ? 0 : 1;
                }
                fail("ParseError", "unknown repro table: " + table);
            };
        });
    }
    // corpus
    {
        auto* sub = app.add_subcommand("corpus", "seeded random map corpus (deterministic)");
        static std::string kind = "map";
        static std::uint64_t count = 10;
        sub->add_option("--kind", kind, "map | perm | 2to1");
        sub->add_option("--count", count, "number of maps");
        add_fp(sub, true, false);
        sub->callback([&] {
            action = [&]() {
                auto F = parse_field_spec(field_spec);
                std::mt19937_64 rng(seed);
                json out = json::array();
                for (std::uint64_t i = 0; i < count; ++i) {
                    std::vector<elem_t> v;
                    if (kind == "map") v = random_map_values(rng, F->order(), F->order());
                    else if (kind == "perm") v = random_permutation_values(rng, F->order());
                    else if (kind == "2to1") v = random_two_to_one_values(rng, F->order());
                    else fail("ParseError", "kind must be map|perm|2to1");
                    out.push_back(v);
                }
                emit_json(out);
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return action ? action() : 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tto::HypothesisFailed& e) {
        std::cerr << "hypothesis failed: " << e.hypothesis() << "\n";
        return 3;
    } catch (const tto::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
