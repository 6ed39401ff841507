#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "tto/corpus.hpp"
#include "tto/counting.hpp"
#include "tto/table.hpp"

using namespace tto;

TEST_CASE("fiber census of x^2 over GF(5)") {
    auto F = Field::make(5, 1);
    const auto T = tabulate(F, [&](elem_t x) { return F->mul(x, x); });
    const auto c = fiber_census(T);
    REQUIRE(c.histogram.size() == 3);
    CHECK(c.histogram.at(0) == 2);
    CHECK(c.histogram.at(1) == 1);
    CHECK(c.histogram.at(2) == 2);
    REQUIRE(c.exceptional.has_value());
    CHECK(c.exceptional->first == 0);  // 0 is the only value hit once
    CHECK(c.exceptional->second == std::vector<elem_t>{0});
    const auto v = is_two_to_one(T);
    CHECK(v.value);
}

TEST_CASE("fiber census of x^2+x over GF(8)") {
    auto F = Field::make(2, 3);
    const auto T = tabulate(F, [&](elem_t x) { return F->add(F->mul(x, x), x); });
    const auto c = fiber_census(T);
    CHECK(c.histogram == std::map<std::uint64_t, std::uint64_t>{{0, 4}, {2, 4}});
    CHECK_FALSE(c.exceptional.has_value());
    CHECK(is_two_to_one(T).value);
    CHECK(image_size(T) == 4);
    CHECK_FALSE(is_permutation(T));
}

TEST_CASE("witness names an offending fiber") {
    auto F = Field::make(2, 2);
    const auto T = tabulate(F, [&](elem_t x) { return F->mul(F->mul(x, x), x); });  // x^3
    const auto v = is_two_to_one(T);
    REQUIRE_FALSE(v.value);
    REQUIRE(v.witness.has_value());
    // x^3 maps the three nonzero elements of GF(4) to 1
    const bool ok = (*v.witness == 1 && v.witness_fiber == 3) || (*v.witness == 0 && v.witness_fiber == 1);
    CHECK(ok);
}

TEST_CASE("relative trace is 4-to-1 from GF(16) onto GF(4)") {
    auto F = Field::make(2, 4);
    auto S = Field::make(2, 2);
    const auto T = tabulate_project(F, S, [&](elem_t x) { return F->trace_to(x, 2); });
    CHECK(is_k_to_1(T, 4));
    CHECK_FALSE(is_k_to_1(T, 2));
    CHECK(image_size(T) == 4);
    const auto c = fiber_census(T);
    CHECK(c.histogram == std::map<std::uint64_t, std::uint64_t>{{4, 4}});
}

TEST_CASE("census matches the independent oracle on random maps") {
    auto F = Field::make(2, 4);
    auto g = oracle::rng(101);
    for (int t = 0; t < 200; ++t) {
        const auto T = random_map(g, F);
        const auto lib = fiber_census(T);
        CHECK(lib.histogram == oracle::census(T.values, F->order()));
        CHECK(is_two_to_one(T).value == oracle::two_to_one(T.values, F->order()));
    }
    for (int t = 0; t < 200; ++t) {
        const auto T = random_two_to_one(g, F);
        REQUIRE(oracle::two_to_one(T.values, F->order()));
        CHECK(is_two_to_one(T).value);
        CHECK(is_k_to_1(T, 2));
    }
    for (int t = 0; t < 100; ++t) {
        const auto T = random_permutation(g, F);
        CHECK(is_permutation(T));
        CHECK(is_k_to_1(T, 1));
        CHECK_FALSE(is_two_to_one(T).value);
    }
}

TEST_CASE("odd-size domains carry exactly one exceptional point") {
    auto F = Field::make(3, 2);
    const auto T = tabulate(F, [&](elem_t x) { return F->mul(x, x); });
    const auto v = is_two_to_one(T);
    CHECK(v.value);
    const auto c = fiber_census(T);
    CHECK(c.histogram.at(1) == 1);
    CHECK(c.histogram.at(2) == 4);
    REQUIRE(c.exceptional.has_value());
    CHECK(c.exceptional->first == 0);
    // a second size-1 fiber disqualifies: identity on GF(3)
    auto P = Field::make(3, 1);
    const auto I = tabulate(P, [](elem_t x) { return x; });
    CHECK_FALSE(is_two_to_one(I).value);
    CHECK(is_k_to_1(I, 1));
}

TEST_CASE("k must be positive") {
    auto F = Field::make(2, 2);
    const auto T = tabulate(F, [](elem_t x) { return x; });
    CHECK_THROWS_AS(is_k_to_1(T, 0), Error);
}

TEST_CASE("2-to-1 is invariant under bijections on either side") {
    auto F = Field::make(2, 4);
    auto g = oracle::rng(77);
    const auto T = random_two_to_one(g, F);
    for (int t = 0; t < 30; ++t) {
        const auto a = random_permutation(g, F);
        const auto b = random_permutation(g, F);
        MapTable conj{F, F, std::vector<elem_t>(F->order())};
        for (elem_t x = 0; x < F->order(); ++x) conj.values[x] = b.values[T.values[a.values[x]]];
        CHECK(is_two_to_one(conj).value);
    }
}

TEST_CASE("set-level maps census identically to field tables") {
    SetMap s{6, 3, {0, 0, 1, 1, 2, 2}};
    CHECK(is_two_to_one(s).value);
    CHECK(fiber_census(s).histogram == std::map<std::uint64_t, std::uint64_t>{{2, 3}});
    SetMap bad{4, 4, {0, 0, 0, 1}};
    CHECK_FALSE(is_two_to_one(bad).value);
    CHECK_THROWS_AS(fiber_census(SetMap{2, 2, {0, 5}}), Error);  // image outside codomain
}

TEST_CASE("exact counts for tiny dimensions match brute force formulas") {
    const auto c1 = count_two_to_one_exact(1);
    CHECK(c1.count == 2);
    const auto c2 = count_two_to_one_exact(2);
    CHECK(c2.count == 36);
    const auto c3 = count_two_to_one_exact(3);
    CHECK(c3.count == 176400);
    CHECK(c3.bijections == 40320);
    CHECK(c1.ratio_3sig == "1.00");
    CHECK(c2.ratio_3sig == "1.50");
    CHECK(c3.ratio_3sig == "4.38");
}

TEST_CASE("ratio strings for the published table") {
    const char* expect[] = {"1.00", "1.50", "4.38", "50.3", "9.17e3", "4.27e8", "1.30e18", "1.70e37"};
    for (int n = 1; n <= 8; ++n) CHECK(count_two_to_one_exact(n).ratio_3sig == expect[n - 1]);
    CHECK_THROWS_AS(count_two_to_one_exact(0), Error);
    CHECK_THROWS_AS(count_two_to_one_exact(13), Error);
}

TEST_CASE("three-significant-digit formatting rounds half to even") {
    CHECK(format_3sig(bigrat(1)) == "1.00");
    CHECK(format_3sig(bigrat(3, 2)) == "1.50");
    CHECK(format_3sig(bigrat(503, 10)) == "50.3");
    CHECK(format_3sig(bigrat(1005, 1000)) == "1.00");   // ties to even
    CHECK(format_3sig(bigrat(1015, 1000)) == "1.02");   // ties to even
    CHECK(format_3sig(bigrat(9999, 10)) == "1.00e3");   // rounds up a decade
    CHECK(format_3sig(bigrat(12345, 1)) == "1.23e4");
    CHECK(format_3sig(bigrat(999, 1)) == "999");
    CHECK_THROWS_AS(format_3sig(bigrat(0)), Error);
}

TEST_CASE("asymptotic estimates track the exact values") {
    // ratio approximation 2^(2^(n-1)) / sqrt(pi 2^(n-1))
    const auto a1 = count_two_to_one_approx(1);
    REQUIRE_FALSE(a1.ratio_overflows);
    CHECK(a1.ratio == Catch::Approx(1.128).margin(0.001));
    const auto a3 = count_two_to_one_approx(3);
    REQUIRE_FALSE(a3.ratio_overflows);
    CHECK(a3.ratio == Catch::Approx(4.51).margin(0.01));
    const auto a8 = count_two_to_one_approx(8);
    REQUIRE_FALSE(a8.ratio_overflows);
    const double exact_ratio8 = count_two_to_one_exact(8).ratio.convert_to<double>();
    CHECK(std::abs(a8.ratio - exact_ratio8) / exact_ratio8 < 0.05);
    const auto a4 = count_two_to_one_approx(4);
    REQUIRE_FALSE(a4.count_overflows);
    const double exact_count4 = count_two_to_one_exact(4).count.convert_to<double>();
    CHECK(std::abs(a4.count - exact_count4) / exact_count4 < 0.05);
    // n = 8 count exceeds double range; the log estimate stays truthful
    CHECK(a8.count_overflows);
    const double exact_log2 =
        static_cast<double>(boost::multiprecision::msb(count_two_to_one_exact(8).count));
    CHECK(std::abs(a8.count_log2 - exact_log2) < 2.0);
    // large n falls back to logs everywhere
    const auto big = count_two_to_one_approx(64);
    CHECK(big.count_overflows);
    CHECK(big.ratio_overflows);
    CHECK(big.count_log2 > 0);
}
