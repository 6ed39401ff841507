#pragma once

// Exhaustive value tables for maps between finite index sets, fiber censuses
// and the 2-to-1 / k-to-1 predicates.
//
// A map F: A -> B on finite sets is 2-to-1 when
//   |A| even: every fiber has size 0 or 2;
//   |A| odd:  every fiber has size 0 or 2 except exactly one of size 1.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tto/gf.hpp"
#include "tto/poly.hpp"

namespace tto {

// Map between two fields, tabulated on the whole domain; values are
// codomain element indices.
struct MapTable {
    FieldPtr domain, codomain;
    std::vector<elem_t> values;
};

// Map between plain index sets {0..domain_size-1} -> {0..codomain_size-1}.
struct SetMap {
    std::size_t domain_size = 0, codomain_size = 0;
    std::vector<elem_t> values;
};

inline SetMap to_setmap(const MapTable& t) {
    return SetMap{t.values.size(), static_cast<std::size_t>(t.codomain->order()), t.values};
}

inline MapTable tabulate(FieldPtr domain, FieldPtr codomain, const std::function<elem_t(elem_t)>& f) {
    MapTable t;
    t.domain = std::move(domain);
    t.codomain = std::move(codomain);
    t.values.resize(t.domain->order());
    for (elem_t x = 0; x < t.domain->order(); ++x) {
        const elem_t y = f(x);
        if (y >= t.codomain->order()) fail("ImageOutsideCodomain", "value " + std::to_string(y));
        t.values[x] = y;
    }
    return t;
}

inline MapTable tabulate(FieldPtr domain, const std::function<elem_t(elem_t)>& f) {
    FieldPtr cod = domain;
    return tabulate(std::move(domain), std::move(cod), f);
}

inline MapTable tabulate(const Poly& p) {
    return tabulate(p.field(), [&](elem_t x) { return p.eval(x); });
}

inline MapTable tabulate(const LinearizedPoly& L) {
    return tabulate(L.field(), [&](elem_t x) { return L.eval(x); });
}

// Evaluate inside `domain`, then project every value into `codomain`
// through the pinned subfield embedding.  Values outside the embedded
// subfield raise ImageOutsideCodomain.
inline MapTable tabulate_project(FieldPtr domain, FieldPtr codomain,
                                 const std::function<elem_t(elem_t)>& f) {
    const SubfieldEmbedding emb(codomain, domain);
    MapTable t;
    t.domain = std::move(domain);
    t.codomain = std::move(codomain);
    t.values.resize(t.domain->order());
    for (elem_t x = 0; x < t.domain->order(); ++x) {
        const auto back = emb.project(f(x));
        if (!back) fail("ImageOutsideCodomain", "value not in the embedded subfield");
        t.values[x] = *back;
    }
    return t;
}

struct FiberCensus {
    // fiber size -> number of codomain elements with that fiber size;
    // includes the size-0 entry when some element is missed.
    std::map<std::uint64_t, std::uint64_t> histogram;
    // the unique size-1 fiber (codomain element, preimage), when there is
    // exactly one
    std::optional<std::pair<elem_t, std::vector<elem_t>>> exceptional;
};

inline std::vector<std::uint64_t> fiber_sizes(const std::vector<elem_t>& values, std::size_t codomain_size) {
    std::vector<std::uint64_t> cnt(codomain_size, 0);
    for (auto v : values) {
        if (v >= codomain_size) fail("ImageOutsideCodomain", "value " + std::to_string(v));
        ++cnt[v];
    }
    return cnt;
}

inline FiberCensus fiber_census_values(const std::vector<elem_t>& values, std::size_t codomain_size) {
    const auto cnt = fiber_sizes(values, codomain_size);
    FiberCensus c;
    std::vector<elem_t> ones;
    for (std::size_t b = 0; b < codomain_size; ++b) {
        ++c.histogram[cnt[b]];
        if (cnt[b] == 1) ones.push_back(static_cast<elem_t>(b));
    }
    if (ones.size() == 1) {
        std::vector<elem_t> fiber;
        for (std::size_t x = 0; x < values.size(); ++x)
            if (values[x] == ones[0]) fiber.push_back(static_cast<elem_t>(x));
        c.exceptional = std::make_pair(ones[0], fiber);
    }
    return c;
}

inline FiberCensus fiber_census(const MapTable& t) {
    return fiber_census_values(t.values, static_cast<std::size_t>(t.codomain->order()));
}

inline FiberCensus fiber_census(const SetMap& t) { return fiber_census_values(t.values, t.codomain_size); }

struct TwoToOneVerdict {
    bool value = false;
    std::optional<elem_t> witness;       // codomain element with an offending fiber
    std::uint64_t witness_fiber = 0;
    explicit operator bool() const { return value; }
};

inline TwoToOneVerdict is_two_to_one_values(const std::vector<elem_t>& values, std::size_t codomain_size) {
    const auto cnt = fiber_sizes(values, codomain_size);
    const bool odd = values.size() % 2 != 0;
    bool seen_one = false;
    for (std::size_t b = 0; b < codomain_size; ++b) {
        const std::uint64_t s = cnt[b];
        if (s == 0 || s == 2) continue;
        if (s == 1 && odd && !seen_one) {
            seen_one = true;
            continue;
        }
        return {false, static_cast<elem_t>(b), s};
    }
    if (odd && !seen_one) return {false, std::nullopt, 0};  // cannot happen for integer fibers
    return {true, std::nullopt, 0};
}

inline TwoToOneVerdict is_two_to_one(const MapTable& t) {
    return is_two_to_one_values(t.values, static_cast<std::size_t>(t.codomain->order()));
}

inline TwoToOneVerdict is_two_to_one(const SetMap& t) {
    return is_two_to_one_values(t.values, t.codomain_size);
}

// Every nonempty fiber has size k, except at most one fiber of size
// (|A| mod k) when k does not divide |A|.
inline bool is_k_to_1_values(const std::vector<elem_t>& values, std::size_t codomain_size, std::uint64_t k) {
    if (k < 1) fail("InvalidK", "k must be >= 1");
    const auto cnt = fiber_sizes(values, codomain_size);
    const std::uint64_t r = values.size() % k;
    bool seen_r = false;
    for (std::size_t b = 0; b < codomain_size; ++b) {
        const std::uint64_t s = cnt[b];
        if (s == 0 || s == k) continue;
        if (s == r && !seen_r) {
            seen_r = true;
            continue;
        }
        return false;
    }
    return true;
}

inline bool is_k_to_1(const MapTable& t, std::uint64_t k) {
    return is_k_to_1_values(t.values, static_cast<std::size_t>(t.codomain->order()), k);
}

inline bool is_k_to_1(const SetMap& t, std::uint64_t k) {
    return is_k_to_1_values(t.values, t.codomain_size, k);
}

inline std::uint64_t image_size_values(const std::vector<elem_t>& values, std::size_t codomain_size) {
    const auto cnt = fiber_sizes(values, codomain_size);
    std::uint64_t n = 0;
    for (auto c : cnt)
        if (c) ++n;
    return n;
}

inline std::uint64_t image_size(const MapTable& t) {
    return image_size_values(t.values, static_cast<std::size_t>(t.codomain->order()));
}

inline bool is_permutation_values(const std::vector<elem_t>& values, std::size_t codomain_size) {
    if (values.size() != codomain_size) return false;
    return image_size_values(values, codomain_size) == codomain_size;
}

inline bool is_permutation(const MapTable& t) {
    return is_permutation_values(t.values, static_cast<std::size_t>(t.codomain->order()));
}

}  // namespace tto
