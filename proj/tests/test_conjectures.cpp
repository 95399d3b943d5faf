#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "conjectures.hpp"

using namespace gcf;

TEST_CASE("oracle on published rows") {
    CHECK(oracle_decomposable(GcTransform(4, 1)));
    CHECK_FALSE(oracle_decomposable(GcTransform(3, 1)));
    CHECK_FALSE(oracle_decomposable(GcTransform(2, 0)));
    CHECK(oracle_decomposable(GcTransform(5, 3)));
    CHECK(oracle_decomposable(GcTransform(9, 1)));
}

TEST_CASE("oracle agrees with decompose for every norm up to 1000") {
    for (const GcTransform& t : conjecture2_grid(1000)) {
        CHECK(oracle_decomposable(t) == (decompose(t).size() >= 2));
    }
    // transforms with content are always decomposable for norms >= 12
    for (i128 k = 2; k <= 15; ++k) {
        GcTransform t(k, k);
        if (t.norm() > 1000) break;
        CHECK(oracle_decomposable(t));
        CHECK(decompose(t).size() >= 2);
    }
}

TEST_CASE("conjecture 1 holds through the published ranges") {
    ConjectureReport r100 = check_conjecture1(100);
    CHECK(r100.holds());
    CHECK(r100.checked > 0);

    ConjectureReport r200 = check_conjecture1(200);
    CHECK(r200.holds());
    CHECK(r200.checked > r100.checked);
}

TEST_CASE("conjecture 1 rejects bounds below 3") {
    CHECK_THROWS_AS(check_conjecture1(2), std::domain_error);
    CHECK_THROWS_AS(check_conjecture2(2), std::domain_error);
}

TEST_CASE("scan grids grow monotonically") {
    auto small1 = conjecture1_grid(50);
    auto large1 = conjecture1_grid(120);
    CHECK(small1.size() < large1.size());
    for (const GcTransform& t : small1) {
        CHECK(std::find(large1.begin(), large1.end(), t) != large1.end());
    }
    auto small2 = conjecture2_grid(50);
    auto large2 = conjecture2_grid(120);
    CHECK(small2.size() < large2.size());
    for (const GcTransform& t : small2) {
        CHECK(std::find(large2.begin(), large2.end(), t) != large2.end());
    }
}

TEST_CASE("conjecture 1 grid covers one representative per chiral pair") {
    auto grid = conjecture1_grid(100);
    for (const GcTransform& t : grid) {
        CHECK(t.l() >= 1);
        CHECK((t.k() > t.l() || t == GcTransform(1, 1)));
        // the partner is never scanned twice
        if (t.k() != t.l()) {
            CHECK(std::find(grid.begin(), grid.end(), t.chiral_partner()) == grid.end());
        }
    }
}

TEST_CASE("conjecture 2 factor multiplicities on published rows") {
    auto f65 = decompose(GcTransform(6, 5));
    REQUIRE(f65.size() == 2);
    CHECK(f65[0].norm() == 7);
    CHECK(f65[1].norm() == 13);

    auto f21 = decompose(GcTransform(2, 1));
    REQUIRE(f21.size() == 1);
    CHECK(f21[0].norm() == 7);

    auto f53 = decompose(GcTransform(5, 3));
    REQUIRE(f53.size() == 2);
    CHECK(f53[0].norm() == 7);
    CHECK(f53[1].norm() == 7);
}

TEST_CASE("the prime 3 has a single self-chiral candidate") {
    auto c3 = enumerate_candidates(3);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0] == GcTransform(1, 1));
    CHECK(c3[0].chiral_partner() == c3[0]);
}

TEST_CASE("conjecture 2 holds to 300") {
    ConjectureReport r = check_conjecture2(300);
    CHECK(r.holds());
    CHECK(r.checked > 0);
}
