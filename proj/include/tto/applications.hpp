#pragma once

// Consumers of 2-to-1 maps: bent and semi-bent Boolean functions (bivariate
// constructions), planar maps in odd characteristic, and permutations lifted
// from 2-to-1 maps by re-routing half of each fiber.

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tto/constructions.hpp"
#include "tto/walsh.hpp"

namespace tto {

// ---- Boolean spectra ----
//
// Sign-vector FWHT over the hypercube.  The value multiset agrees with the
// trace-pairing spectrum up to reindexing, so threshold verdicts (bent,
// semi-bent) do not depend on the pairing.
inline std::vector<long long> boolean_walsh(const BooleanTable& f) {
    if (f.bits.size() != (std::size_t{1} << f.n)) fail("DimensionMismatch", "bit table length != 2^n");
    std::vector<long long> w(f.bits.size());
    for (std::size_t x = 0; x < f.bits.size(); ++x) w[x] = f.bits[x] ? -1 : 1;
    fwht(w);
    return w;
}

// spectrum indexed by a with pairing Tr(a x); for cross-checks against
// naive transforms
inline std::vector<long long> boolean_walsh_traced(const FieldPtr& F, const BooleanTable& f) {
    if (F->characteristic() != 2 || F->order() != f.bits.size())
        fail("FieldMismatch", "table does not match the field");
    auto w = boolean_walsh(f);
    const auto masks = trace_masks(*F);
    std::vector<long long> out(w.size());
    for (elem_t a = 0; a < F->order(); ++a) out[a] = w[masks[a]];
    return out;
}

inline bool is_bent(const BooleanTable& f) {
    if (f.n % 2) throw Error("OddDimension", "bent functions need even dimension");
    const std::int64_t target = std::int64_t{1} << (f.n / 2);
    for (auto v : boolean_walsh(f))
        if (v != target && v != -target) return false;
    return true;
}

inline bool is_semibent(const BooleanTable& f) {
    if (f.n % 2) throw Error("OddDimension", "semi-bent functions need even dimension");
    const std::int64_t target = std::int64_t{1} << ((f.n + 2) / 2);
    for (auto v : boolean_walsh(f))
        if (v != 0 && v != target && v != -target) return false;
    return true;
}

// ---- bivariate tables over GF(2^m) x GF(2^m) ----
struct BivariateMap {
    unsigned m = 0;
    std::vector<elem_t> values;  // index x*2^m + y
};

inline std::size_t biv_index(unsigned m, elem_t x, elem_t y) {
    return (static_cast<std::size_t>(x) << m) | y;
}

// bivariate table with 0/1 values -> flat Boolean table on 2m variables
inline BooleanTable boolean_from_bivariate(const BivariateMap& g) {
    BooleanTable f;
    f.n = 2 * g.m;
    f.bits.resize(g.values.size());
    if (g.values.size() != (std::size_t{1} << f.n)) fail("DimensionMismatch", "bivariate length != 2^(2m)");
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        if (g.values[i] > 1) fail("OutOfRange", "expected a 0/1-valued bivariate table");
        f.bits[i] = static_cast<std::uint8_t>(g.values[i]);
    }
    return f;
}

// ---- the bivariate family g(x,y) = Tr(x psi(y/x)), g(0,y) = Tr(mu y) ----

inline BivariateMap class_h_build(const MapTable& psi, elem_t mu) {
    const FieldPtr& S = psi.domain;
    cdetail::require_same_field(S, psi.codomain);
    if (S->characteristic() != 2) fail("OddCharacteristic", "bivariate Boolean family requires char 2");
    const std::uint64_t q = S->order();
    BivariateMap g;
    g.m = S->degree();
    g.values.resize(q * q);
    for (elem_t x = 0; x < q; ++x)
        for (elem_t y = 0; y < q; ++y) {
            elem_t bit;
            if (x == 0) bit = S->trace_abs(S->mul(mu, y));
            else bit = S->trace_abs(S->mul(x, psi.values[S->mul(y, S->inv(x))]));
            g.values[biv_index(g.m, x, y)] = bit;
        }
    return g;
}

struct ClassHConditions {
    bool g_permutation = false;      // G(z) = psi(z) + mu z permutes
    bool shifted_two_to_one = false; // G(z) + beta z is 2-to-1 for every beta != 0
};

inline ClassHConditions class_h_conditions(const MapTable& psi, elem_t mu) {
    const FieldPtr& S = psi.domain;
    const std::uint64_t q = S->order();
    std::vector<elem_t> G(q);
    for (elem_t z = 0; z < q; ++z) G[z] = S->add(psi.values[z], S->mul(mu, z));
    ClassHConditions out;
    out.g_permutation = is_permutation_values(G, q);
    out.shifted_two_to_one = true;
    std::vector<elem_t> shifted(q);
    for (elem_t beta = 1; beta < q && out.shifted_two_to_one; ++beta) {
        for (elem_t z = 0; z < q; ++z) shifted[z] = S->add(G[z], S->mul(beta, z));
        out.shifted_two_to_one = is_two_to_one_values(shifted, q).value;
    }
    return out;
}

struct ClassHEquivalence {
    bool bent = false;
    bool cond1 = false;
    bool cond2 = false;
    bool consistent = false;  // bent == (cond1 && cond2)
};

inline ClassHEquivalence class_h_equivalence(const MapTable& psi, elem_t mu) {
    ClassHEquivalence out;
    out.bent = is_bent(boolean_from_bivariate(class_h_build(psi, mu)));
    const auto c = class_h_conditions(psi, mu);
    out.cond1 = c.g_permutation;
    out.cond2 = c.shifted_two_to_one;
    out.consistent = out.bent == (out.cond1 && out.cond2);
    return out;
}

// ---- vectorial bent F(x,y) = y^k x^{k(2^m-2)+1} ----

inline bool is_vectorial_bent(const FieldPtr& S, const BivariateMap& F) {
    if (S->order() != (std::uint64_t{1} << F.m)) fail("FieldMismatch", "field does not match m");
    for (elem_t v = 1; v < S->order(); ++v) {
        BooleanTable comp;
        comp.n = 2 * F.m;
        comp.bits.resize(F.values.size());
        for (std::size_t i = 0; i < F.values.size(); ++i)
            comp.bits[i] = static_cast<std::uint8_t>(S->trace_abs(S->mul(v, F.values[i])));
        if (!is_bent(comp)) return false;
    }
    return true;
}

struct VectorialBentResult {
    BivariateMap map;
    Certificate cert;
    bool vectorial_bent = false;
};

inline VectorialBentResult vectorial_bent_build(std::uint64_t k, unsigned m) {
    if (k < 1) fail("OutOfRange", "k must be >= 1");
    auto S = Field::make(2, m);
    const std::uint64_t q = S->order();

    VectorialBentResult out;
    Certificate& c = out.cert;
    c.construction = "vectorial-bent";
    c.param("field", S->spec_string());
    c.param("k", std::to_string(k));
    c.check("gcd(k,2^m-1) = 1", std::gcd(k, q - 1) == 1);

    // the proof shifts z^k by arbitrary b, so all b != 0 are required; the
    // count of passing b is recorded for the weaker single-b reading
    unsigned passing = 0;
    std::vector<elem_t> shifted(q);
    for (elem_t b = 1; b < q; ++b) {
        for (elem_t z = 0; z < q; ++z)
            shifted[z] = S->add(S->pow(z, static_cast<long long>(k)), S->mul(b, z));
        if (is_two_to_one_values(shifted, q).value) ++passing;
    }
    c.param("shifts passing", std::to_string(passing) + "/" + std::to_string(q - 1));
    c.check("z^k+bz 2-to-1 for all b", passing == q - 1);

    const long long outer = static_cast<long long>(k * (q - 2) + 1);
    out.map.m = m;
    out.map.values.resize(q * q);
    for (elem_t x = 0; x < q; ++x)
        for (elem_t y = 0; y < q; ++y)
            out.map.values[biv_index(m, x, y)] =
                S->mul(S->pow(y, static_cast<long long>(k)), S->pow(x, outer));
    out.vectorial_bent = is_vectorial_bent(S, out.map);
    c.census_two_to_one = out.vectorial_bent;  // verdict slot reused: bentness of the output
    return out;
}

// ---- f(x,y) = Tr(x pi(y)) + g(y); semi-bent when pi is 2-to-1,
// bent when pi permutes ----
inline BooleanTable mm_build(const MapTable& pi, const BooleanTable& g) {
    const FieldPtr& S = pi.domain;
    cdetail::require_same_field(S, pi.codomain);
    if (S->characteristic() != 2) fail("OddCharacteristic", "bivariate Boolean family requires char 2");
    const std::uint64_t q = S->order();
    if (g.bits.size() != q) fail("DimensionMismatch", "g must be a Boolean table on GF(2^m)");
    const unsigned m = S->degree();
    BooleanTable f;
    f.n = 2 * m;
    f.bits.resize(q * q);
    for (elem_t x = 0; x < q; ++x)
        for (elem_t y = 0; y < q; ++y)
            f.bits[biv_index(m, x, y)] =
                static_cast<std::uint8_t>(S->trace_abs(S->mul(x, pi.values[y])) ^ g.bits[y]);
    return f;
}

// ---- planar maps (odd characteristic) ----

inline bool is_planar(const MapTable& F) {
    const FieldPtr& D = F.domain;
    cdetail::require_same_field(D, F.codomain);
    if (D->characteristic() == 2) fail("EvenCharacteristic", "planar maps require odd characteristic");
    const std::uint64_t q = D->order();
    std::vector<elem_t> diff(q);
    for (elem_t a = 1; a < q; ++a) {
        for (elem_t x = 0; x < q; ++x) diff[x] = D->sub(F.values[D->add(x, a)], F.values[x]);
        if (!is_permutation_values(diff, q)) return false;
    }
    return true;
}

// For planar F: 2-to-1 holds exactly when the image has minimal size (q+1)/2.
struct PlanarImageCheck {
    bool planar = false;
    bool two_to_one = false;
    std::uint64_t image_size = 0;
    bool equivalence = false;  // vacuously true for non-planar F

    explicit operator bool() const { return equivalence; }
};

inline PlanarImageCheck planar_image_check(const MapTable& F) {
    PlanarImageCheck out;
    out.planar = is_planar(F);
    out.two_to_one = is_two_to_one(F).value;
    out.image_size = image_size(F);
    out.equivalence = !out.planar || (out.two_to_one == (out.image_size == (F.domain->order() + 1) / 2));
    return out;
}

// ---- shape test: every exponent is p^i + p^j ----
inline bool is_dembowski_ostrom(const Poly& P) {
    const unsigned p = P.field()->characteristic();
    const unsigned n = P.field()->degree();
    std::unordered_set<std::uint64_t> shapes;
    std::uint64_t pi = 1;
    for (unsigned i = 0; i < n; ++i, pi *= p) {
        std::uint64_t pj = 1;
        for (unsigned j = 0; j < n; ++j, pj *= p) shapes.insert(pi + pj);
    }
    for (const auto& [e, co] : P.terms()) {
        (void)co;
        if (!shapes.count(e)) return false;
    }
    return true;
}

struct DoPlanarVerdict {
    bool dembowski_ostrom = false;
    bool planar = false;
    bool two_to_one = false;
    bool equivalence = false;  // planar == two_to_one, claimed for DO shapes
};

inline DoPlanarVerdict do_planar_equiv(const Poly& P) {
    DoPlanarVerdict out;
    out.dembowski_ostrom = is_dembowski_ostrom(P);
    const auto T = tabulate(P);
    out.planar = is_planar(T);
    out.two_to_one = is_two_to_one(T).value;
    out.equivalence = !out.dembowski_ostrom || (out.planar == out.two_to_one);
    return out;
}

// ---- permutations from 2-to-1 maps ----
//
// G = F on S1 and phi o F on S2, where F(S1) = F(S2) = Im(F) and
// phi: Im(F) -> complement is a bijection.
inline MapTable permutation_from_two_to_one(const MapTable& F, const std::vector<elem_t>& S1,
                                            const std::vector<elem_t>& S2,
                                            const std::vector<std::pair<elem_t, elem_t>>& phi) {
    const FieldPtr& D = F.domain;
    cdetail::require_same_field(D, F.codomain);
    if (D->characteristic() != 2) fail("OddCharacteristic", "the lift needs all fibers of size 2");
    const std::uint64_t q = D->order();
    if (!is_two_to_one(F).value) throw Error("NotTwoToOne", "F must be 2-to-1");

    std::vector<char> side(q, 0);  // 1 => S1, 2 => S2
    for (auto x : S1) {
        if (x >= q || side[x]) throw Error("BadSplit", "S1/S2 is not a partition");
        side[x] = 1;
    }
    for (auto x : S2) {
        if (x >= q || side[x]) throw Error("BadSplit", "S1/S2 is not a partition");
        side[x] = 2;
    }
    if (S1.size() + S2.size() != q) throw Error("BadSplit", "S1/S2 must cover the field");

    std::unordered_set<elem_t> image(F.values.begin(), F.values.end());
    std::unordered_set<elem_t> im1, im2;
    for (auto x : S1) im1.insert(F.values[x]);
    for (auto x : S2) im2.insert(F.values[x]);
    if (im1 != image || im2 != image)
        throw Error("BadSplit", "both halves must cover the full image");

    std::vector<elem_t> route(q, 0);
    std::vector<char> have(q, 0);
    std::unordered_set<elem_t> targets;
    for (const auto& [src, dst] : phi) {
        if (src >= q || dst >= q || !image.count(src) || image.count(dst) || have[src] ||
            !targets.insert(dst).second)
            throw Error("BadPhi", "phi must biject the image onto its complement");
        route[src] = dst;
        have[src] = 1;
    }
    if (phi.size() != image.size() || targets.size() != q - image.size())
        throw Error("BadPhi", "phi must biject the image onto its complement");

    MapTable G;
    G.domain = D;
    G.codomain = D;
    G.values.resize(q);
    for (elem_t x = 0; x < q; ++x)
        G.values[x] = side[x] == 1 ? F.values[x] : route[F.values[x]];
    if (!is_permutation(G)) throw Error("BadPhi", "lift failed to produce a permutation");
    return G;
}

// canonical data: S1 = smaller preimage of each image point, phi matches
// sorted image to sorted complement
inline MapTable permutation_from_two_to_one(const MapTable& F) {
    const FieldPtr& D = F.domain;
    cdetail::require_same_field(D, F.codomain);
    if (D->characteristic() != 2) fail("OddCharacteristic", "the lift needs all fibers of size 2");
    const std::uint64_t q = D->order();
    if (!is_two_to_one(F).value) throw Error("NotTwoToOne", "F must be 2-to-1");

    std::vector<std::vector<elem_t>> fibers(q);
    for (elem_t x = 0; x < q; ++x) fibers[F.values[x]].push_back(x);

    std::vector<elem_t> S1, S2, img, comp;
    for (elem_t b = 0; b < q; ++b) {
        if (fibers[b].empty()) {
            comp.push_back(b);
            continue;
        }
        img.push_back(b);
        S1.push_back(fibers[b][0]);  // preimages collected in ascending x order
        S2.push_back(fibers[b][1]);
    }
    std::vector<std::pair<elem_t, elem_t>> phi;
    phi.reserve(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) phi.emplace_back(img[i], comp[i]);
    return permutation_from_two_to_one(F, S1, S2, phi);
}

}  // namespace tto
