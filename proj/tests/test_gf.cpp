#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracle.hpp"
#include "tto/gf.hpp"
#include "tto/poly.hpp"

using namespace tto;

TEST_CASE("default moduli are the lexicographically smallest irreducibles") {
    CHECK(Field::make(2, 1)->modulus() == std::vector<unsigned>{0, 1});           // x
    CHECK(Field::make(2, 3)->modulus() == std::vector<unsigned>{1, 1, 0, 1});     // x^3+x+1
    CHECK(Field::make(3, 2)->modulus() == std::vector<unsigned>{1, 0, 1});        // x^2+1
    CHECK(Field::make(2, 4)->modulus() == std::vector<unsigned>{1, 1, 0, 0, 1});  // x^4+x+1
    CHECK(Field::make(5, 1)->modulus() == std::vector<unsigned>{0, 1});
}

TEST_CASE("arithmetic matches hand calculations") {
    auto f8 = Field::make(2, 3);
    CHECK(f8->mul(2, 3) == 6);  // x * (x+1) = x^2 + x
    CHECK(f8->add(5, 3) == 6);  // coefficientwise xor
    auto f5 = Field::make(5, 1);
    CHECK(f5->inv(2) == 3);
    CHECK(f5->neg(2) == 3);
    CHECK(f5->add(4, 3) == 2);
    CHECK(f5->pow(2, 4) == 1);
    CHECK(f5->pow(2, -1) == 3);
}

TEST_CASE("prime field behaves as integers mod p") {
    auto f7 = Field::make(7, 1);
    for (elem_t a = 0; a < 7; ++a)
        for (elem_t b = 0; b < 7; ++b) {
            CHECK(f7->add(a, b) == (a + b) % 7);
            CHECK(f7->mul(a, b) == (a * b) % 7);
        }
}

TEST_CASE("field axioms hold on sampled triples") {
    for (auto F : {Field::make(2, 4), Field::make(3, 3), Field::make(7, 2)}) {
        auto g = oracle::rng(11);
        for (int t = 0; t < 300; ++t) {
            const elem_t a = oracle::draw(g, F->order());
            const elem_t b = oracle::draw(g, F->order());
            const elem_t c = oracle::draw(g, F->order());
            CHECK(F->add(a, b) == F->add(b, a));
            CHECK(F->mul(a, b) == F->mul(b, a));
            CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
            CHECK(F->add(a, F->add(b, c)) == F->add(F->add(a, b), c));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->sub(a, a) == 0);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
        }
    }
}

TEST_CASE("log table product agrees with schoolbook reduction") {
    for (auto F : {Field::make(2, 4), Field::make(3, 3), Field::make(7, 2)}) {
        for (elem_t a = 0; a < F->order(); ++a)
            for (elem_t b = 0; b < F->order(); ++b)
                REQUIRE(F->mul(a, b) == F->mul_schoolbook(a, b));
    }
}

TEST_CASE("generator has full multiplicative order") {
    for (auto F : {Field::make(2, 6), Field::make(3, 4), Field::make(13, 1)}) {
        const elem_t g = F->generator();
        const std::uint64_t qm1 = F->order() - 1;
        CHECK(F->pow(g, static_cast<long long>(qm1)) == 1);
        for (auto r : gfdetail::distinct_prime_factors(qm1))
            CHECK(F->pow(g, static_cast<long long>(qm1 / r)) != 1);
    }
}

TEST_CASE("dlog inverts the power map") {
    auto F = Field::make(2, 5);
    for (elem_t a = 1; a < F->order(); ++a)
        CHECK(F->pow(F->generator(), static_cast<long long>(F->dlog(a))) == a);
}

TEST_CASE("trace takes known values and is additive onto the subfield") {
    auto f4 = Field::make(2, 2);
    const std::vector<unsigned> expect{0, 0, 1, 1};
    for (elem_t a = 0; a < 4; ++a) CHECK(f4->trace_abs(a) == expect[a]);

    auto F = Field::make(2, 6);
    auto g = oracle::rng(5);
    for (int t = 0; t < 200; ++t) {
        const elem_t a = oracle::draw(g, F->order());
        const elem_t b = oracle::draw(g, F->order());
        CHECK(F->trace_abs(F->add(a, b)) == (F->trace_abs(a) ^ F->trace_abs(b)));
        // relative trace to GF(8) lands in GF(8) and is Frobenius-stable
        const elem_t t3 = F->trace_to(a, 3);
        CHECK(F->in_subfield(t3, 3));
        CHECK(F->trace_to(F->frob(a, 3), 3) == t3);
    }
    // surjectivity of the absolute trace
    std::set<unsigned> seen;
    for (elem_t a = 0; a < F->order(); ++a) seen.insert(F->trace_abs(a));
    CHECK(seen == std::set<unsigned>{0, 1});
}

TEST_CASE("frobenius is the p-power map") {
    auto F = Field::make(3, 3);
    for (elem_t a = 0; a < F->order(); ++a) {
        CHECK(F->frob(a, 1) == F->pow(a, 3));
        CHECK(F->frob(a, 2) == F->pow(a, 9));
        CHECK(F->frob(a, 3) == a);
    }
}

TEST_CASE("quadratic character distinguishes squares") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->quad_char(0) == 0);
    CHECK(f5->quad_char(1) == 1);
    CHECK(f5->quad_char(4) == 1);
    CHECK(f5->quad_char(2) == -1);
    CHECK(f5->quad_char(3) == -1);
    auto f9 = Field::make(3, 2);
    CHECK(f9->quad_char(f9->neg(1)) == 1);  // q = 9 = 1 mod 4
    for (auto F : {Field::make(3, 2), Field::make(7, 1), Field::make(5, 2)}) {
        int plus = 0, minus = 0;
        for (elem_t a = 1; a < F->order(); ++a) {
            const int chi = F->quad_char(a);
            CHECK(chi == F->quad_char(F->mul(a, 1)));
            CHECK(F->quad_char(F->mul(a, a)) == 1);
            (chi == 1 ? plus : minus)++;
        }
        CHECK(plus == minus);  // squares and non-squares split evenly
    }
    CHECK_THROWS_AS(Field::make(2, 3)->quad_char(1), Error);
}

TEST_CASE("coefficient vectors round-trip") {
    auto F = Field::make(3, 3);
    for (elem_t a = 0; a < F->order(); ++a) {
        const auto c = F->coeff_vector(a);
        REQUIRE(c.size() == 3);
        CHECK(F->from_coeffs(c) == a);
    }
}

TEST_CASE("subfield membership and enumeration") {
    auto F = Field::make(2, 4);
    const auto sub = F->subfield(2);
    REQUIRE(sub.size() == 4);
    for (auto x : sub) {
        CHECK(F->in_subfield(x, 2));
        CHECK(F->frob(x, 2) == x);
    }
    std::size_t members = 0;
    for (elem_t x = 0; x < F->order(); ++x) members += F->in_subfield(x, 2);
    CHECK(members == 4);
    CHECK_THROWS_AS(F->subfield(3), Error);
}

TEST_CASE("constructor rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(6, 1), Error);
    CHECK_THROWS_AS(Field::make(2, 0), Error);
    CHECK_THROWS_AS(Field::make(2, 21), Error);                          // default cap 2^20
    CHECK_THROWS_AS(Field::make(2, 23, {}, 1ull << 22), Error);          // hard cap 2^22
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<unsigned>{0, 0, 1}, 1ull << 20), Error);  // x^2 reducible
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<unsigned>{1, 1, 2}, 1ull << 20), Error);  // not reduced
    auto F = Field::make(2, 2, std::vector<unsigned>{1, 1, 1}, 1ull << 20);
    CHECK(F->order() == 4);
}

TEST_CASE("division by zero and log of zero are rejected") {
    auto F = Field::make(2, 3);
    CHECK_THROWS_AS(F->inv(0), Error);
    CHECK_THROWS_AS(F->pow(0, -1), Error);
    CHECK_THROWS_AS(F->dlog(0), Error);
    CHECK(F->pow(0, 0) == 1);  // empty product convention
    CHECK(F->pow(0, 5) == 0);
}

TEST_CASE("subfield embedding is a ring homomorphism") {
    auto sub = Field::make(2, 2);
    auto top = Field::make(2, 4);
    SubfieldEmbedding e(sub, top);
    for (elem_t a = 0; a < 4; ++a) {
        for (elem_t b = 0; b < 4; ++b) {
            CHECK(e.embed(sub->add(a, b)) == top->add(e.embed(a), e.embed(b)));
            CHECK(e.embed(sub->mul(a, b)) == top->mul(e.embed(a), e.embed(b)));
        }
        auto back = e.project(e.embed(a));
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    CHECK(e.embed(0) == 0);
    CHECK(e.embed(1) == 1);
    // elements outside the embedded copy do not project
    std::size_t projectable = 0;
    for (elem_t y = 0; y < 16; ++y) projectable += e.project(y).has_value();
    CHECK(projectable == 4);
    CHECK_THROWS_AS(SubfieldEmbedding(Field::make(2, 3), top), Error);
}

TEST_CASE("embedding between equal-degree fields is an isomorphism") {
    auto A = Field::make(2, 4);                                                // x^4+x+1
    auto B = Field::make(2, 4, std::vector<unsigned>{1, 0, 0, 1, 1}, 1 << 20);  // x^4+x^3+1
    REQUIRE(A->modulus() != B->modulus());
    SubfieldEmbedding iso(A, B);
    std::set<elem_t> image;
    for (elem_t a = 0; a < 16; ++a) {
        image.insert(iso.embed(a));
        for (elem_t b = 0; b < 16; ++b) {
            CHECK(iso.embed(A->add(a, b)) == B->add(iso.embed(a), iso.embed(b)));
            CHECK(iso.embed(A->mul(a, b)) == B->mul(iso.embed(a), iso.embed(b)));
        }
    }
    CHECK(image.size() == 16);
}

TEST_CASE("spec strings name the field") {
    auto F = Field::make(2, 3);
    CHECK(F->spec_string() == "gf:p=2,n=3");
    CHECK(F->spec_string(true) == "gf:p=2,n=3,mod=1:1:0:1");
}

TEST_CASE("linearized kernels come out exactly") {
    auto f8 = Field::make(2, 3);
    const auto k1 = linearized_kernel(LinearizedPoly(f8, {1, 1}));  // x + x^2
    CHECK(k1.kernel == std::vector<elem_t>{0, 1});
    CHECK(k1.dim == 1);
    const auto k2 = linearized_kernel(LinearizedPoly(f8, {1, 0, 1}));  // x + x^4
    CHECK(k2.kernel == std::vector<elem_t>{0, 1});

    auto f16 = Field::make(2, 4);
    const auto k3 = linearized_kernel(LinearizedPoly(f16, {1, 0, 1}));  // x + x^4, kernel GF(4)
    CHECK(k3.kernel.size() == 4);
    CHECK(k3.dim == 2);
    for (auto x : k3.kernel) CHECK(f16->in_subfield(x, 2));
}

TEST_CASE("unique-root criterion for cubics matches exhaustive root counts") {
    // every field order up to 128 plus three larger spot checks
    std::vector<FieldPtr> fields;
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        for (unsigned n = 1;; ++n) {
            std::uint64_t q = 1;
            for (unsigned i = 0; i < n; ++i) q *= p;
            if (q > 128) break;
            fields.push_back(Field::make(p, n));
        }
    }
    for (unsigned p : {17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u, 61u, 67u, 71u,
                       73u, 79u, 83u, 89u, 97u, 101u, 103u, 107u, 109u, 113u, 127u})
        fields.push_back(Field::make(p, 1));
    fields.push_back(Field::make(13, 2));   // 169
    fields.push_back(Field::make(3, 5));    // 243
    fields.push_back(Field::make(7, 3));    // 343

    for (const auto& F : fields) {
        for (elem_t a = 0; a < F->order(); ++a)
            for (elem_t b = 1; b < F->order(); ++b) {
                const bool unique = cubic_unique_root(*F, a, b);
                const unsigned roots = oracle::cubic_root_count(*F, a, b);
                if (unique != (roots == 1))
                    FAIL("mismatch at q=" << F->order() << " a=" << a << " b=" << b
                                          << " roots=" << roots);
            }
    }
    CHECK_THROWS_AS(cubic_unique_root(*fields[0], 1, 0), Error);
}

TEST_CASE("polynomial evaluation and arithmetic") {
    auto F = Field::make(5, 1);
    Poly f = Poly::zero(F);
    f.set(3, 1).set(1, 2);  // x^3 + 2x
    CHECK(f.degree() == 3);
    CHECK(f.eval(0) == 0);
    CHECK(f.eval(1) == 3);
    CHECK(f.eval(2) == (8 + 4) % 5);
    const Poly g = Poly::monomial(F, 3, 3);  // 3x^3
    const Poly s = f.plus(g);                // 4x^3 + 2x
    CHECK(s.eval(2) == (4 * 8 + 4) % 5);
    CHECK(f.scaled(0).is_zero());
    CHECK(f.scaled(2).eval(1) == 1);
    Poly cancel = f.plus(f.scaled(4));  // f - f
    CHECK(cancel.is_zero());
}
