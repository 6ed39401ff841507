#pragma once

// Seeded map corpora for spectral cross-checks.  mt19937_64 has a fixed
// standard-defined sequence; index draws use plain modulo so the corpora are
// byte-identical across platforms (no uniform_int_distribution, no
// std::shuffle — both are implementation-defined).

#include <cstdint>
#include <random>
#include <vector>

#include "tto/table.hpp"

namespace tto {

inline constexpr std::uint64_t kDefaultSeed = 0x746f746f2d31ULL;

namespace corpusdetail {

inline std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

inline std::vector<elem_t> shuffled_range(std::mt19937_64& rng, std::size_t n) {
    std::vector<elem_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<elem_t>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
    return v;
}

}  // namespace corpusdetail

inline std::vector<elem_t> random_map_values(std::mt19937_64& rng, std::size_t domain,
                                             std::size_t codomain) {
    std::vector<elem_t> v(domain);
    for (auto& x : v) x = static_cast<elem_t>(corpusdetail::draw(rng, codomain));
    return v;
}

inline std::vector<elem_t> random_permutation_values(std::mt19937_64& rng, std::size_t q) {
    return corpusdetail::shuffled_range(rng, q);
}

// pair up a shuffled domain, send each pair to a distinct image point; odd
// domains get one singleton fiber
inline std::vector<elem_t> random_two_to_one_values(std::mt19937_64& rng, std::size_t q) {
    const auto order = corpusdetail::shuffled_range(rng, q);
    const auto images = corpusdetail::shuffled_range(rng, q);
    std::vector<elem_t> v(q);
    const std::size_t pairs = q / 2;
    for (std::size_t i = 0; i < pairs; ++i) {
        v[order[2 * i]] = images[i];
        v[order[2 * i + 1]] = images[i];
    }
    if (q % 2) v[order[q - 1]] = images[pairs];
    return v;
}

inline MapTable random_map(std::mt19937_64& rng, const FieldPtr& F) {
    return MapTable{F, F, random_map_values(rng, F->order(), F->order())};
}

inline MapTable random_permutation(std::mt19937_64& rng, const FieldPtr& F) {
    return MapTable{F, F, random_permutation_values(rng, F->order())};
}

inline MapTable random_two_to_one(std::mt19937_64& rng, const FieldPtr& F) {
    return MapTable{F, F, random_two_to_one_values(rng, F->order())};
}

}  // namespace tto
