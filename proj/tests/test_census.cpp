#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "wheels/census.hpp"
#include "wheels/counting.hpp"

using namespace wheels;

namespace {

// psi_p(n) for n = 4..10, cross-checked by enumeration.
const int kExpectedPsi[7][11] = {
    {1, 1, 2, 1, 1, 0, 0, 0, 0, 0, 0},
    {1, 1, 2, 2, 1, 1, 0, 0, 0, 0, 0},
    {1, 1, 3, 3, 3, 1, 1, 0, 0, 0, 0},
    {1, 1, 3, 4, 4, 3, 1, 1, 0, 0, 0},
    {1, 1, 4, 5, 8, 5, 4, 1, 1, 0, 0},
    {1, 1, 4, 7, 10, 10, 7, 4, 1, 1, 0},
    {1, 1, 5, 8, 16, 16, 16, 8, 5, 1, 1},
};
const int kExpectedPsiTotal[7] = {6, 8, 13, 18, 30, 46, 78};

}  // namespace

TEST_CASE("psi_enumerated") {
    CHECK(psi_enumerated(5, 10) == Count128{16});
    CHECK(psi_enumerated(3, 7) == Count128{4});
    for (int n = 4; n <= 12; ++n) CHECK(psi_enumerated(n, n) == Count128{1});
    CHECK_THROWS_AS(psi_enumerated(1, 25), BudgetError);
    CHECK_THROWS_AS(psi_enumerated(1, 3), InvalidArgument);
    CHECK_THROWS_AS(psi_enumerated(9, 8), InvalidArgument);
}

TEST_CASE("census table") {
    const CensusTable table = build_table(4, 10);

    SUBCASE("reproduces the small-n census cell by cell") {
        for (int n = 4; n <= 10; ++n) {
            for (int p = 0; p <= n; ++p) {
                const CensusCell& cell = table.cell(p, n);
                CHECK(cell.value ==
                      Count128{static_cast<std::uint64_t>(kExpectedPsi[n - 4][p])});
                CHECK_FALSE(cell.discrepancy.has_value());
                if (psi_closed_defined(p, n))
                    CHECK(cell.method == CellMethod::BothAgree);
                else
                    CHECK(cell.method == CellMethod::Enumerated);
            }
            CHECK(table.totals.at(n).sum ==
                  Count128{static_cast<std::uint64_t>(kExpectedPsiTotal[n - 4])});
            CHECK(table.totals.at(n).sum == table.totals.at(n).bracelet);
        }
        CHECK(table.verified());
    }
    SUBCASE("single column n=4") {
        const CensusTable t44 = build_table(4, 4);
        int expected[] = {1, 1, 2, 1, 1};
        for (int p = 0; p <= 4; ++p)
            CHECK(t44.cell(p, 4).value == Count128{static_cast<std::uint64_t>(expected[p])});
        CHECK(t44.totals.at(4).sum == Count128{6});
    }
    SUBCASE("columns beyond the published range still cross-check") {
        const CensusTable t = build_table(11, 12);
        CHECK(t.verified());
        for (int n = 11; n <= 12; ++n)
            for (int p = 0; p <= n; ++p)
                CHECK(t.cell(p, n).method == (psi_closed_defined(p, n)
                                                  ? CellMethod::BothAgree
                                                  : CellMethod::Enumerated));
        CHECK(t.totals.at(12).sum == bracelets(12, 2));
    }
    SUBCASE("argument and budget validation") {
        CHECK_THROWS_AS(build_table(4, 25), BudgetError);
        CHECK_THROWS_AS(build_table(3, 10), InvalidArgument);
        CHECK_THROWS_AS(build_table(9, 8), InvalidArgument);
        CHECK_THROWS_AS(table.cell(5, 4), InvalidArgument);
    }
}

TEST_CASE("table serialization") {
    const CensusTable small = build_table(4, 5);

    SUBCASE("csv bytes") {
        CHECK(to_csv(small) ==
              "p,4,5\n"
              "0,1,1\n"
              "1,1,1\n"
              "2,2,2\n"
              "3,1,2\n"
              "4,1,1\n"
              "5,,1\n"
              "psi(n),6,8\n");
    }
    SUBCASE("markdown has one row per p plus the totals row") {
        const std::string md = to_markdown(small);
        CHECK(md.find("| p | 4 | 5 |") == 0);
        CHECK(md.find("| 5 |  | 1 |") != std::string::npos);
        CHECK(md.find("| psi(n) | 6 | 8 |") != std::string::npos);
    }
    SUBCASE("json carries values, methods, and totals") {
        auto j = nlohmann::json::parse(to_json(small));
        CHECK(j.at("min_n") == 4);
        CHECK(j.at("max_n") == 5);
        CHECK(j.at("cells").size() == 11);  // 5 + 6 populated cells
        for (const auto& cell : j.at("cells")) {
            CHECK(cell.at("method") == "both-agree");
            CHECK_FALSE(cell.contains("discrepancy"));
        }
        CHECK(j.at("totals")[0].at("psi") == 6);
        CHECK(j.at("totals")[1].at("bracelets") == 8);
    }
    SUBCASE("serialization is deterministic, independent of worker count") {
        const std::string baseline = to_csv(build_table(4, 9));
        const std::string json_baseline = to_json(build_table(4, 9));
        for (const char* threads : {"1", "4"}) {
            setenv("CENSUS_THREADS", threads, 1);
            CHECK(to_csv(build_table(4, 9)) == baseline);
            CHECK(to_json(build_table(4, 9)) == json_baseline);
        }
        unsetenv("CENSUS_THREADS");
    }
}

TEST_CASE("representative exports") {
    SUBCASE("the sixteen weight-5 classes of W_10") {
        const auto docs = export_representatives(10, 5, DocFormat::Json);
        REQUIRE(docs.size() == 16);
        CHECK(docs.front().name == "rep_0000011111.json");
        for (const Document& doc : docs) {
            const Representative rep = representative_from_json(doc.body);
            CHECK(rep.n == 10);
            CHECK(rep.p == 5);
            CHECK(rep.word.word.popcount() == 5);
        }
    }
    SUBCASE("round trip through JSON preserves the in-memory value") {
        const auto reps = class_representatives(8, 4);
        const auto docs = export_representatives(8, 4, DocFormat::Json);
        REQUIRE(reps.size() == docs.size());
        for (std::size_t i = 0; i < reps.size(); ++i)
            CHECK(representative_from_json(docs[i].body) == reps[i]);
        const auto array = nlohmann::json::parse(representatives_to_json_array(8, 4));
        CHECK(array.size() == 8);
    }
    SUBCASE("the empty signature gives one all-solid drawing") {
        const auto docs = export_representatives(9, 0, DocFormat::Dot);
        REQUIRE(docs.size() == 1);
        CHECK(docs.front().name == "rep_000000000.dot");
        CHECK(docs.front().body.find("dashed") == std::string::npos);
        CHECK(docs.front().body.find("graph W9_000000000 {") == 0);
    }
    SUBCASE("the reference W_8 tuple appears among the weight-4 classes") {
        bool found = false;
        for (const Representative& rep : class_representatives(8, 4))
            if (rep.tuple.counts == std::vector<int>{1, 2, 3, 0, 0}) found = true;
        CHECK(found);
    }
    SUBCASE("orbit sizes in the documents add up to C(n,p)") {
        std::uint64_t total = 0;
        for (const Representative& rep : class_representatives(10, 5))
            total += static_cast<std::uint64_t>(rep.orbit);
        CHECK(total == binomial64(10, 5));
    }
}

TEST_CASE("verify_all") {
    SUBCASE("reports the known checks, including the honest tuple-completeness failure") {
        const VerificationReport report = verify_all(10);
        REQUIRE(report.checks.size() == 9);
        for (const VerificationCheck& check : report.checks) {
            if (check.name == "distance-tuple-completeness") {
                // Two non-isomorphic weight-4 signatures of C_8 share a tuple
                // (a homometric pair), so completeness genuinely fails.
                CHECK_FALSE(check.passed);
                CHECK(check.detail.find("n=8, p=4") != std::string::npos);
                CHECK(check.detail.find("00011011") != std::string::npos);
                CHECK(check.detail.find("00100111") != std::string::npos);
            } else {
                INFO(check.name, ": ", check.detail);
                CHECK(check.passed);
            }
        }
        CHECK_FALSE(report.all_passed());
    }
    SUBCASE("a corrupted closed form is pinpointed at its first cell") {
        const ClosedPsiFn corrupted = [](std::int64_t p, std::int64_t n) {
            Count128 v = psi_closed(p, n);
            if (p == 3 && n == 9) v += Count128{1};
            return v;
        };
        const VerificationReport report = verify_all(10, corrupted);
        bool found = false;
        for (const VerificationCheck& check : report.checks) {
            if (check.name != "closed-vs-enumerated") continue;
            found = true;
            CHECK_FALSE(check.passed);
            CHECK(check.detail.find("first mismatch at psi(p=3, n=9)") != std::string::npos);
            CHECK(check.detail.find("closed=8") != std::string::npos);
            CHECK(check.detail.find("enumerated=7") != std::string::npos);
        }
        CHECK(found);
    }
    SUBCASE("budget validation") {
        CHECK_THROWS_AS(verify_all(25), BudgetError);
        CHECK_THROWS_AS(verify_all(3), InvalidArgument);
    }
}
