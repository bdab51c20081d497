#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wheels/counting.hpp"
#include "wheels/dihedral.hpp"

using namespace wheels;

TEST_CASE("count128 checked arithmetic") {
    const Count128 big = checked_pow(Count128{2}, 127);
    CHECK(big.str() == "170141183460469231731687303715884105728");
    CHECK_THROWS_AS(big * Count128{2}, OverflowError);
    CHECK_THROWS_AS(big + big, OverflowError);
    CHECK_THROWS_AS(Count128{3} - Count128{4}, OverflowError);
    CHECK_THROWS_AS(Count128{7}.div_exact(Count128{2}), Error);
    CHECK(Count128{7}.floor_div(Count128{2}) == Count128{3});
    CHECK(Count128{0}.str() == "0");
    CHECK(checked_pow(Count128{10}, 0) == Count128{1});
    CHECK_THROWS_AS(checked_pow(Count128{2}, 128), OverflowError);
    CHECK_THROWS_AS(Count128{1}.div_exact(Count128{0}), InvalidArgument);
    CHECK_THROWS_AS((checked_pow(Count128{2}, 70)).to_u64(), OverflowError);
}

TEST_CASE("euler phi") {
    const std::uint64_t expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (std::uint64_t m = 1; m <= 12; ++m) CHECK(euler_phi(m) == expected[m - 1]);
    CHECK(euler_phi(97) == 96);
    CHECK(euler_phi(360) == 96);
    CHECK_THROWS_AS(euler_phi(0), InvalidArgument);
}

TEST_CASE("binomial64") {
    CHECK(binomial64(10, 5) == 252);
    CHECK(binomial64(24, 12) == 2704156);
    CHECK(binomial64(64, 0) == 1);
    for (int n = 1; n <= 64; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(binomial64(n, k) == binomial64(n - 1, k - 1) + binomial64(n - 1, k));
    CHECK_THROWS_AS(binomial64(65, 1), InvalidArgument);
    CHECK_THROWS_AS(binomial64(5, 6), InvalidArgument);
}

TEST_CASE("necklace counts") {
    for (int n : {1, 5, 13, 20}) CHECK(necklaces(n, 1) == Count128{1});
    CHECK(necklaces(4, 2) == Count128{6});
    CHECK(necklaces(10, 2) == Count128{108});

    SUBCASE("divisor form equals gcd form") {
        for (int n = 1; n <= 20; ++n)
            for (int k = 1; k <= 5; ++k) CHECK(necklaces(n, k) == necklaces_gcd_form(n, k));
    }
    SUBCASE("matches the rotation-orbit oracle") {
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= 3; ++k)
                CHECK(necklaces(n, k) == Count128{oracles::necklace_orbits(n, k)});
    }
    CHECK_THROWS_AS(necklaces(0, 2), InvalidArgument);
    CHECK_THROWS_AS(necklaces(5, 0), InvalidArgument);
    CHECK_THROWS_AS(necklaces(400, 3), OverflowError);
}

TEST_CASE("bracelet counts") {
    for (int k = 1; k <= 6; ++k) CHECK(bracelets(1, k) == Count128{static_cast<std::uint64_t>(k)});
    CHECK(bracelets(10, 2) == Count128{78});

    SUBCASE("matches the dihedral-orbit oracle") {
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= 3; ++k)
                CHECK(bracelets(n, k) == Count128{oracles::bracelet_orbits(n, k)});
    }
    SUBCASE("matches the canonical-word enumeration") {
        for (int n : {4, 7, 10, 13, 16})
            CHECK(bracelets(n, 2) == Count128{enumerate_representatives(n).size()});
    }
    SUBCASE("the halving divisions stay exact wherever counts are representable") {
        for (int n = 1; n <= 64; ++n) {
            for (int k = 1; k <= 6; ++k) {
                try {
                    necklaces(n, k);
                    bracelets(n, k);  // div_exact would throw on a non-integer count
                } catch (const OverflowError&) {
                    // k^n beyond 128 bits is a reported error, not a wraparound
                }
            }
        }
    }
}

TEST_CASE("partition counts") {
    CHECK(partition_count(3, 3) == Count128{1});
    CHECK(partition_count(7, 3) == Count128{4});
    CHECK(partition_count(0, 1) == Count128{0});
    for (int n = 0; n < 8; ++n) CHECK(partition_count(n, n + 1) == Count128{0});

    SUBCASE("matches the enumeration oracle") {
        for (int n = 0; n <= 30; ++n)
            for (int k = 1; k <= 5; ++k)
                CHECK(partition_count(n, k) == Count128{oracles::partitions_exact(n, k)});
    }
    CHECK_THROWS_AS(partition_count(-1, 2), InvalidArgument);
    CHECK_THROWS_AS(partition_count(5, 0), InvalidArgument);
}

TEST_CASE("nearest twelfth") {
    CHECK(nearest_twelfth(Count128{36}) == Count128{3});
    CHECK(nearest_twelfth(Count128{49}) == Count128{4});
    CHECK(nearest_twelfth(Count128{0}) == Count128{0});
    CHECK(nearest_twelfth(Count128{(9 - 3) * (9 - 3)}) == Count128{3});
    // p(m;3) = [m^2/12], the identity behind the psi_3 closed form
    for (std::int64_t m = 0; m <= 60; ++m)
        CHECK(partition_count(m, 3) ==
              nearest_twelfth(Count128{static_cast<std::uint64_t>(m * m)}));
}

TEST_CASE("psi closed forms") {
    SUBCASE("pinned small values") {
        CHECK(psi_closed(2, 10) == Count128{5});
        CHECK(psi_closed(4, 8) == Count128{8});
        CHECK(psi_closed(4, 9) == Count128{10});
        CHECK(psi_closed(6, 10) == Count128{16});
        CHECK(psi_closed(3, 9) == Count128{7});
    }
    SUBCASE("reproduces the full small-n census where covered") {
        const int table[7][11] = {
            {1, 1, 2, 1, 1, 0, 0, 0, 0, 0, 0},
            {1, 1, 2, 2, 1, 1, 0, 0, 0, 0, 0},
            {1, 1, 3, 3, 3, 1, 1, 0, 0, 0, 0},
            {1, 1, 3, 4, 4, 3, 1, 1, 0, 0, 0},
            {1, 1, 4, 5, 8, 5, 4, 1, 1, 0, 0},
            {1, 1, 4, 7, 10, 10, 7, 4, 1, 1, 0},
            {1, 1, 5, 8, 16, 16, 16, 8, 5, 1, 1},
        };
        for (int n = 4; n <= 10; ++n)
            for (int p = 0; p <= n; ++p)
                if (psi_closed_defined(p, n))
                    CHECK(psi_closed(p, n) ==
                          Count128{static_cast<std::uint64_t>(table[n - 4][p])});
    }
    SUBCASE("symmetry in p") {
        for (std::int64_t n = 4; n <= 60; ++n)
            for (std::int64_t p = 0; p <= 4 && p <= n; ++p)
                CHECK(psi_closed(p, n) == psi_closed(n - p, n));
    }
    SUBCASE("uncovered p is an explicit error, not a silent fallback") {
        CHECK_THROWS_AS(psi_closed(5, 10), NoClosedFormError);
        CHECK_THROWS_AS(psi_closed(12, 30), NoClosedFormError);
        CHECK(psi_closed_defined(4, 9));
        CHECK(psi_closed_defined(26, 30));
        CHECK_FALSE(psi_closed_defined(5, 10));
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(psi_closed(2, 3), InvalidArgument);
        CHECK_THROWS_AS(psi_closed(-1, 6), InvalidArgument);
        CHECK_THROWS_AS(psi_closed(7, 6), InvalidArgument);
    }
}

TEST_CASE("psi4 case counts") {
    CHECK(psi4_case_counts(10, 0) == Count128{13});
    CHECK(psi4_case_counts(10, 1) == Count128{3});
    CHECK(psi4_case_counts(9, 1) == Count128{1});

    SUBCASE("cases sum to the closed form") {
        for (std::int64_t n = 8; n <= 40; ++n) {
            Count128 total{0};
            for (std::int64_t r = 0; r <= (n - 4) / 4; ++r) total += psi4_case_counts(n, r);
            CHECK(total == psi_closed(4, n));
        }
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(psi4_case_counts(7, 0), InvalidArgument);
        CHECK_THROWS_AS(psi4_case_counts(10, -1), InvalidArgument);
        CHECK_THROWS_AS(psi4_case_counts(10, 2), InvalidArgument);  // floor((10-4)/4) = 1
    }
}

TEST_CASE("psi totals") {
    CHECK(psi_total(4) == Count128{6});
    CHECK(psi_total(9) == Count128{46});
    CHECK(psi_total(12) == bracelets(12, 2));
    CHECK(psi_total(12) == Count128{enumerate_representatives(12).size()});
    CHECK_THROWS_AS(psi_total(3), InvalidArgument);
}
