#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fullerene.hpp"

using namespace gcf;

namespace {

std::mt19937_64 rng(550620);

FullereneDims edges_only(std::vector<Eisenstein> edges) {
    return FullereneDims(std::move(edges));
}

std::vector<Eisenstein> repeat(Eisenstein e, size_t count) {
    return std::vector<Eisenstein>(count, e);
}

FullereneDims icosahedral_c140() {
    return FullereneDims(repeat({2, 1}, 10),
                         std::vector<FacetDims>(5, FacetDims(2, 1, 2, 1)),
                         "C140");
}

FullereneDims random_dims(size_t max_edges = 6) {
    std::uniform_int_distribution<size_t> dn(1, max_edges);
    std::uniform_int_distribution<long long> dc(0, 10);
    size_t n = dn(rng);
    std::vector<Eisenstein> edges;
    while (edges.size() < n) {
        Eisenstein e{dc(rng), dc(rng)};
        if (!is_zero(e)) edges.push_back(e);
    }
    return edges_only(std::move(edges));
}

FullereneDims random_dims_with_facets() {
    FullereneDims base = random_dims();
    std::uniform_int_distribution<size_t> dm(1, 3);
    std::uniform_int_distribution<long long> dc(0, 6);
    std::vector<FacetDims> facets;
    size_t m = dm(rng);
    while (facets.size() < m) {
        i128 k = dc(rng), l = dc(rng), p = dc(rng), q = dc(rng);
        if (k * p + k * q + l * q >= 1) facets.emplace_back(k, l, p, q);
    }
    return FullereneDims(base.edges(), std::move(facets));
}

GcTransform random_basic() {
    // prime inflations and prime-norm transforms with norm <= 50
    static const std::vector<GcTransform> pool = [] {
        std::vector<GcTransform> p;
        for (u128 q : {2, 3, 5, 7}) p.emplace_back(static_cast<i128>(q), 0);
        for (u128 q = 3; q <= 50; ++q) {
            if (!is_prime(q)) continue;
            for (const GcTransform& c : enumerate_candidates(q)) p.push_back(c);
        }
        return p;
    }();
    std::uniform_int_distribution<size_t> d(0, pool.size() - 1);
    return pool[d(rng)];
}

}  // namespace

TEST_CASE("dimension invariants") {
    CHECK_THROWS_AS(edges_only({}), std::domain_error);
    CHECK_THROWS_AS(edges_only({{0, 0}}), std::domain_error);
    CHECK_THROWS_AS(edges_only({{-1, 2}}), std::domain_error);
    CHECK_THROWS_AS(FacetDims(0, 1, 0, 0), std::domain_error);  // zero area
    CHECK_THROWS_AS(FacetDims(1, -1, 1, 0), std::domain_error);
    CHECK(facet_area(FacetDims(1, 0, 0, 1)) == 1);
}

TEST_CASE("edge squares") {
    CHECK(edge_square({1, 0}) == 1);
    CHECK(edge_square({2, 1}) == 7);
    CHECK(edge_square({5, 1}) == 31);
    CHECK_THROWS_AS(edge_square({0, 0}), std::domain_error);
}

TEST_CASE("facet areas") {
    CHECK(facet_area(FacetDims(1, 0, 1, 0)) == 1);
    CHECK(facet_area(FacetDims(2, 1, 2, 1)) == 7);
    CHECK(facet_area(FacetDims(5, 0, 3, 0)) == 15);
}

TEST_CASE("a facet spanned by (k, l) twice has the edge-square area") {
    for (i128 k = 0; k <= 12; ++k) {
        for (i128 l = 0; l <= 12; ++l) {
            if (k == 0 && l == 0) continue;
            CHECK(facet_area(FacetDims(k, l, k, l)) == edge_square({k, l}));
        }
    }
}

TEST_CASE("inflation detection") {
    CHECK(detect_inflation(edges_only({{2, 4}, {6, 2}, {2, 0}})) == 2);
    CHECK(detect_inflation(edges_only(repeat({2, 1}, 10))) == 1);
    CHECK(detect_inflation(edges_only({{3, 0}, {6, 3}})) == 3);
}

TEST_CASE("deflation") {
    FullereneDims d = deflate(edges_only({{2, 4}}), 2);
    CHECK(d.edges()[0] == Eisenstein{1, 2});
    CHECK(deflate(edges_only({{3, 0}}), 3).edges()[0] == Eisenstein{1, 0});
    CHECK_THROWS_AS(deflate(edges_only({{2, 1}}), 2), std::domain_error);
    CHECK_THROWS_AS(deflate(edges_only({{2, 4}}), 1), std::domain_error);
}

TEST_CASE("leapfrog test") {
    CHECK(leapfrog_test(edges_only({{1, 1}, {4, 1}})));
    CHECK_FALSE(leapfrog_test(edges_only({{2, 1}})));
    CHECK_FALSE(leapfrog_test(edges_only({{1, 0}})));
}

TEST_CASE("leapfrog test is exactly (1,1)-invertibility") {
    GcTransform leapfrog(1, 1);
    for (int i = 0; i < 500; ++i) {
        FullereneDims d = random_dims();
        bool invertible = true;
        for (const Eisenstein& e : d.edges()) {
            if (!invert(leapfrog, e)) invertible = false;
        }
        CHECK(leapfrog_test(d) == invertible);
    }
}

TEST_CASE("area scale factor") {
    CHECK(area_scale_factor(icosahedral_c140()) == 7);
    CHECK(area_scale_factor(edges_only({{1, 0}})) == 1);
    CHECK(area_scale_factor(edges_only({{1, 4}, {4, 1}})) == 21);
}

TEST_CASE("area scale factor picks up every transform applied") {
    for (int i = 0; i < 300; ++i) {
        FullereneDims d = random_dims();
        GcTransform t = random_basic();
        FullereneDims after = transform_dims(d, t);
        CHECK(area_scale_factor(after) % t.norm() == 0);
    }
}

TEST_CASE("transforming dims keeps Coxeter form and scales squares") {
    FullereneDims d = icosahedral_c140();
    GcTransform t(1, 1);
    FullereneDims after = transform_dims(d, t);
    for (const Eisenstein& e : after.edges()) {
        CHECK(e == Eisenstein{1, 4});
    }
    for (const FacetDims& f : after.facets()) {
        CHECK(facet_area(f) == 21);
    }
    // an edge pushed out of the sextant comes back canonicalized
    FullereneDims skew = transform_dims(edges_only({{0, 1}}), t);
    CHECK(skew.edges()[0] == Eisenstein{1, 1});
}

TEST_CASE("identify: icosahedral example") {
    IdentificationReport r = identify(icosahedral_c140());
    REQUIRE(r.chain.size() == 1);
    CHECK(r.chain[0] == GcTransform(2, 1));
    CHECK(r.inflation_factor == 1);
    CHECK(r.area_scale_factor == 7);
    CHECK(r.norm_product() == 7);
    CHECK(r.residual_primes.empty());
    for (const Eisenstein& e : r.archetype.edges()) CHECK(e == Eisenstein{1, 0});
    for (const FacetDims& f : r.archetype.facets()) CHECK(facet_area(f) == 1);
}

TEST_CASE("identify: doubled icosahedral example adds the 2-inflation") {
    FullereneDims doubled(repeat({4, 2}, 10),
                          std::vector<FacetDims>(5, FacetDims(4, 2, 4, 2)));
    IdentificationReport r = identify(doubled);
    CHECK(r.inflation_factor == 2);
    CHECK(r.area_scale_factor == 28);
    REQUIRE(r.chain.size() == 2);
    CHECK(r.chain[0] == GcTransform(2, 0));
    CHECK(r.chain[1] == GcTransform(2, 1));
    for (const Eisenstein& e : r.archetype.edges()) CHECK(e == Eisenstein{1, 0});
}

TEST_CASE("identify: leapfrog then primary") {
    IdentificationReport r = identify(edges_only(repeat({1, 4}, 10)));
    CHECK(r.area_scale_factor == 21);
    REQUIRE(r.chain.size() == 2);
    CHECK(r.chain[0] == GcTransform(1, 1));
    CHECK(r.chain[1] == GcTransform(2, 1));
    for (const Eisenstein& e : r.archetype.edges()) CHECK(e == Eisenstein{1, 0});
}

TEST_CASE("identify: an archetype input yields an empty chain") {
    FullereneDims mixed = edges_only({{1, 0}, {2, 1}, {1, 1}});
    IdentificationReport r = identify(mixed);
    CHECK(r.chain.empty());
    CHECK(r.inflation_factor == 1);
    CHECK(r.archetype == mixed);
    CHECK(r.area_scale_factor == 1);
}

TEST_CASE("identify: a chirally mixed pair is irreducible with residual 7") {
    IdentificationReport r = identify(edges_only({{1, 2}, {2, 1}}));
    CHECK(r.chain.empty());
    CHECK(r.area_scale_factor == 7);
    REQUIRE(r.residual_primes.size() == 1);
    CHECK(r.residual_primes[0] == 7);
}

TEST_CASE("identify: unit repairs are recorded in the notes") {
    // (7, 0) = (2, 1) * (3, -1): inverting by (2, 1) needs a rotation on edge 0
    IdentificationReport r = identify(edges_only({{7, 0}, {3, 5}}));
    REQUIRE(r.chain.size() == 1);
    CHECK(r.chain[0] == GcTransform(2, 1));
    REQUIRE(r.archetype.edges().size() == 2);
    CHECK(r.archetype.edges()[0] == Eisenstein{1, 2});
    CHECK(r.archetype.edges()[1] == Eisenstein{2, 1});
    bool noted = false;
    for (const std::string& n : r.notes) {
        if (n.find("edge 0") != std::string::npos) noted = true;
    }
    CHECK(noted);
    REQUIRE(r.residual_primes.size() == 1);
    CHECK(r.residual_primes[0] == 7);
}

TEST_CASE("identify: inert primes left by facet-blocked inflation are residual") {
    // edge gcd is 2 but the facet is not divisible by 2, so the inflation is
    // blocked; the leftover 2 in the area scale factor has no candidates.
    FullereneDims d({{2, 0}}, {FacetDims(2, 1, 2, 2)});
    CHECK(area_scale_factor(d) == 2);
    IdentificationReport r = identify(d);
    CHECK(r.chain.empty());
    REQUIRE(r.residual_primes.size() == 1);
    CHECK(r.residual_primes[0] == 2);
    bool noted = false;
    for (const std::string& n : r.notes) {
        if (n.find("facet coordinates") != std::string::npos) noted = true;
    }
    CHECK(noted);
}

TEST_CASE("identify: every chain step strictly reduces the edge squares") {
    for (int i = 0; i < 200; ++i) {
        FullereneDims base = identify(random_dims()).archetype;
        FullereneDims grown = base;
        for (int s = 0; s < 3; ++s) grown = transform_dims(grown, random_basic());
        IdentificationReport r = identify(grown);
        for (const GcTransform& t : r.chain) CHECK(t.norm() >= 3);
    }
}

TEST_CASE("identify round-trips randomized chains") {
    for (int i = 0; i < 300; ++i) {
        FullereneDims archetype = identify(random_dims()).archetype;
        std::uniform_int_distribution<int> dlen(1, 3);
        int len = dlen(rng);
        u128 expected = 1;
        FullereneDims grown = archetype;
        for (int s = 0; s < len; ++s) {
            GcTransform t = random_basic();
            expected = checked_mul(expected, t.norm());
            grown = transform_dims(grown, t);
        }
        IdentificationReport r = identify(grown);
        CHECK(r.norm_product() == expected);
        REQUIRE(r.archetype.edges().size() == archetype.edges().size());
        for (size_t e = 0; e < archetype.edges().size(); ++e) {
            CHECK(canonical_sextant(r.archetype.edges()[e]).value ==
                  canonical_sextant(archetype.edges()[e]).value);
        }
    }
}

TEST_CASE("chain norm product divides every input square and area") {
    for (int i = 0; i < 200; ++i) {
        FullereneDims grown = transform_dims(
            transform_dims(random_dims(), random_basic()), random_basic());
        IdentificationReport r = identify(grown);
        u128 product = r.norm_product();
        for (const Eisenstein& e : grown.edges()) {
            CHECK(edge_square(e) % product == 0);
        }
    }
}

TEST_CASE("re-identifying the reconstructed input reproduces the report") {
    FullereneDims d = icosahedral_c140();
    IdentificationReport r = identify(d);
    FullereneDims rebuilt = r.archetype;
    for (const GcTransform& t : r.chain) rebuilt = transform_dims(rebuilt, t);
    IdentificationReport again = identify(rebuilt);
    CHECK(again.chain == r.chain);
    CHECK(again.archetype.edges() == r.archetype.edges());
}
