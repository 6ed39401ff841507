#pragma once

// Text and JSON frontends: field specs ("gf:p=2,n=3,mod=1:1:0:1", modulus
// coefficients ascending), polynomial literals ("x^2+3*x", '+'-joined terms,
// coefficients as element indices), hex bitstrings for Boolean tables, and
// stable-key JSON for every result type.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tto/applications.hpp"
#include "tto/catalog.hpp"
#include "tto/counting.hpp"
#include "tto/walsh.hpp"

namespace tto {

using json = nlohmann::json;

namespace iodetail {

inline std::string strip(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        b += 2;
        base = 16;
    }
    const auto res = std::from_chars(b, e, v, base);
    if (res.ec != std::errc{} || res.ptr != e) fail("ParseError", "bad integer: " + s);
    return v;
}

}  // namespace iodetail

// "gf:p=2,n=3" or "gf:p=2,n=3,mod=1:1:0:1" (modulus ascending, constant first)
inline FieldPtr parse_field_spec(const std::string& spec_in) {
    const std::string spec = iodetail::strip(spec_in);
    if (spec.rfind("gf:", 0) != 0) fail("ParseError", "field spec must start with gf:");
    unsigned p = 0, n = 0;
    std::optional<std::vector<unsigned>> modulus;
    for (const auto& part : iodetail::split(spec.substr(3), ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) fail("ParseError", "expected key=value in field spec: " + part);
        const std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        if (key == "p") p = static_cast<unsigned>(iodetail::parse_u64(val));
        else if (key == "n") n = static_cast<unsigned>(iodetail::parse_u64(val));
        else if (key == "mod") {
            std::vector<unsigned> coeffs;
            for (const auto& c : iodetail::split(val, ':'))
                coeffs.push_back(static_cast<unsigned>(iodetail::parse_u64(c)));
            modulus = std::move(coeffs);
        } else fail("ParseError", "unknown field spec key: " + key);
    }
    if (!p || !n) fail("ParseError", "field spec needs p= and n=");
    return Field::make(p, n, modulus);
}

inline elem_t parse_element(const FieldPtr& F, const std::string& s) {
    const std::uint64_t v = iodetail::parse_u64(iodetail::strip(s));
    if (v >= F->order()) fail("ParseError", "element index out of range: " + s);
    return static_cast<elem_t>(v);
}

// terms "c*x^e", "c*x", "x^e", "x", "c" joined by '+'; coefficients are
// element indices
inline Poly parse_poly(const FieldPtr& F, const std::string& text) {
    const std::string s = iodetail::strip(text);
    if (s.empty()) fail("ParseError", "empty polynomial");
    Poly out = Poly::zero(F);
    for (const auto& term : iodetail::split(s, '+')) {
        if (term.empty()) fail("ParseError", "empty term in polynomial");
        elem_t coeff = 1;
        std::uint64_t exp = 0;
        std::string rest = term;
        const auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = parse_element(F, term.substr(0, star));
            rest = term.substr(star + 1);
        }
        if (rest.empty()) fail("ParseError", "empty factor in term: " + term);
        if (rest[0] == 'x') {
            exp = 1;
            if (rest.size() > 1) {
                if (rest[1] != '^') fail("ParseError", "expected x^e in term: " + term);
                exp = iodetail::parse_u64(rest.substr(2));
            }
        } else {
            if (star != std::string::npos) fail("ParseError", "bad term: " + term);
            coeff = parse_element(F, rest);
            exp = 0;
        }
        out.set(exp, F->add(out.coeff(exp), coeff));
    }
    return out;
}

inline std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    // terms() is exponent-ascending; render descending
    std::vector<std::pair<std::uint64_t, elem_t>> ts(f.terms().begin(), f.terms().end());
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const auto [e, c] = *it;
        if (!out.empty()) out += "+";
        if (e == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += e == 1 ? "x" : "x^" + std::to_string(e);
    }
    return out;
}

// "c0,c1,..." -> sum c_i x^(p^i)
inline LinearizedPoly parse_linearized(const FieldPtr& F, const std::string& text) {
    std::vector<elem_t> coeffs;
    for (const auto& c : iodetail::split(iodetail::strip(text), ','))
        coeffs.push_back(parse_element(F, c));
    return LinearizedPoly(F, coeffs);
}

// ---- Boolean hex bitstrings ----
//
// digit j encodes bits 4j..4j+3 with bit 4j in the MSB of the digit
inline std::string boolean_to_hex(const BooleanTable& f) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    const std::size_t len = f.bits.size();
    for (std::size_t j = 0; 4 * j < len; ++j) {
        unsigned d = 0;
        for (unsigned b = 0; b < 4; ++b) {
            d <<= 1;
            if (4 * j + b < len && f.bits[4 * j + b]) d |= 1;
        }
        out += digits[d];
    }
    return out;
}

inline BooleanTable boolean_from_hex(unsigned n, const std::string& hex) {
    BooleanTable f;
    f.n = n;
    const std::size_t len = std::size_t{1} << n;
    f.bits.assign(len, 0);
    const std::size_t want = (len + 3) / 4;
    if (hex.size() != want)
        fail("ParseError", "expected " + std::to_string(want) + " hex digits, got " +
                               std::to_string(hex.size()));
    for (std::size_t j = 0; j < hex.size(); ++j) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[j])));
        unsigned d;
        if (c >= '0' && c <= '9') d = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') d = static_cast<unsigned>(c - 'a' + 10);
        else fail("ParseError", "bad hex digit");
        for (unsigned b = 0; b < 4; ++b)
            if (4 * j + b < len) f.bits[4 * j + b] = static_cast<std::uint8_t>((d >> (3 - b)) & 1);
    }
    return f;
}

// ---- JSON (nlohmann::json object keys are sorted, so dumps are stable) ----

inline json field_json(const FieldPtr& F) {
    return json{{"p", F->characteristic()},
                {"n", F->degree()},
                {"order", F->order()},
                {"modulus", F->modulus()},
                {"spec", F->spec_string()}};
}

inline json census_json(const FiberCensus& c) {
    json hist = json::object();
    for (const auto& [size, count] : c.histogram) hist[std::to_string(size)] = count;
    json out{{"histogram", hist}};
    if (c.exceptional) {
        out["exceptional"] = json{{"value", c.exceptional->first},
                                  {"fiber", c.exceptional->second}};
    }
    return out;
}

inline json map_json(const MapTable& t) {
    return json{{"field", t.domain->spec_string()},
                {"codomain", t.codomain->spec_string()},
                {"values", t.values}};
}

inline json cert_json(const Certificate& c) {
    json checks = json::array();
    for (const auto& ck : c.checks) {
        json e{{"name", ck.name}, {"passed", ck.passed}};
        if (!ck.detail.empty()) e["detail"] = ck.detail;
        checks.push_back(e);
    }
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    return json{{"construction", c.construction},
                {"params", params},
                {"checks", checks},
                {"certified", c.certified()},
                {"census_two_to_one", c.census_two_to_one}};
}

inline json spectrum_json(const WalshSpectrum& s) {
    return json{{"n", s.n}, {"v", s.v}, {"values", s.values}};
}

inline json count_json(const TwoToOneCount& c) {
    return json{{"count", c.count.str()},
                {"bijections", c.bijections.str()},
                {"ratio_3sig", c.ratio_3sig}};
}

inline json count_approx_json(const TwoToOneCountApprox& c) {
    json out{{"count_overflows", c.count_overflows}, {"ratio_overflows", c.ratio_overflows}};
    if (c.count_overflows) out["count_log2"] = c.count_log2;
    else out["count"] = c.count;
    if (c.ratio_overflows) out["ratio_log2"] = c.ratio_log2;
    else out["ratio"] = c.ratio;
    return out;
}

inline json verdict_json(const TwoToOneVerdict& v) {
    json out{{"two_to_one", v.value}};
    if (!v.value && v.witness) {
        out["witness_value"] = *v.witness;
        out["witness_fiber"] = v.witness_fiber;
    }
    return out;
}

}  // namespace tto
