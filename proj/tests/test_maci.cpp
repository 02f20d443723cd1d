#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monlef/maci.hpp"
#include "monlef/parse.hpp"

#include "oracles.hpp"

using namespace monlef;

namespace {
MonomialIdeal I3(const std::string& text) { return parse_ideal(text, 3); }
} // namespace

TEST_CASE("maci_ideal") {
    CHECK(maci_ideal(MaciParams(1, 1, 1)) == I3("x^3, y^3, z^3, x*y*z"));
    CHECK(maci_ideal(MaciParams(4, 3, 2)) ==
          I3("x^9, y^9, z^9, x^4*y^3*z^2"));
    CHECK(maci_ideal(MaciParams(5, 2, 2)) ==
          I3("x^9, y^9, z^9, x^5*y^2*z^2"));
    CHECK_THROWS_AS(MaciParams(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(MaciParams(2, 1, 0), std::invalid_argument);
}

TEST_CASE("thm51_ideal") {
    CHECK(thm51_ideal(3, 2) == I3("x^2, y^2, z^2, x*y"));
    CHECK(check_lefschetz(thm51_ideal(3, 3), LefschetzProperty::strong)
              .verdict);
    CHECK_THROWS_AS(thm51_ideal(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(thm51_ideal(3, 1), std::invalid_argument);
}

TEST_CASE("predicted WLP verdicts") {
    CHECK_FALSE(predict_wlp(MaciParams(1, 1, 1))); // d=3, k=0, a=1<2, equal
    CHECK(predict_wlp(MaciParams(4, 3, 2)));       // all distinct
    CHECK_FALSE(predict_wlp(MaciParams(4, 4, 1)));
    CHECK_FALSE(predict_wlp(MaciParams(5, 2, 2)));
    CHECK(predict_wlp(MaciParams(7, 1, 1))); // a = 7 >= 4k+2 = 6
    CHECK(predict_wlp(MaciParams(2, 1, 1))); // d = 4 is not 6k+3
}

TEST_CASE("predicted SLP verdicts") {
    CHECK(predict_slp(5, {2, 2, 1}));
    CHECK(predict_slp(7, {3, 2, 2}));
    CHECK_FALSE(predict_slp(3, {1, 1, 1}));
    CHECK(predict_slp(4, {3, 1, 0}));       // x1^{a-1} x2 pattern
    CHECK(predict_slp(4, {0, 1, 3}));       // permutation-invariant
    CHECK(predict_slp(6, {4, 1, 1}));       // x1^{a-2} x2 x3 with a >= 4
    CHECK(predict_slp(3, {1, 2, 0}));       // (2,1,0) after sorting
    CHECK_FALSE(predict_slp(6, {3, 2, 1})); // not on the list
    CHECK_FALSE(predict_slp(5, {2, 1, 1})); // does not sum to 5
    CHECK_FALSE(predict_slp(MaciParams(1, 1, 1)));
    CHECK(predict_slp(MaciParams(2, 2, 1)));
}

TEST_CASE("twin peak values") {
    CHECK(twin_peak_values(MaciParams(1, 1, 1)) == std::pair<long long, long long>{6, 6});
    CHECK(twin_peak_values(MaciParams(4, 4, 1)) == std::pair<long long, long long>{54, 54});
    CHECK(twin_peak_values(MaciParams(5, 2, 2)) == std::pair<long long, long long>{54, 54});
    // every hypothesis-satisfying triple at d = 9
    for (const auto& p : {MaciParams(3, 3, 3), MaciParams(4, 3, 2),
                          MaciParams(5, 3, 1)})
        CHECK(twin_peak_values(p) == std::pair<long long, long long>{54, 54});
    CHECK_THROWS_AS(twin_peak_values(MaciParams(2, 1, 1)),
                    std::invalid_argument); // d = 4
    CHECK_THROWS_AS(twin_peak_values(MaciParams(7, 1, 1)),
                    std::invalid_argument); // a >= 4k+2
}

TEST_CASE("twin peaks agree with direct enumeration") {
    for (const auto& p : {MaciParams(1, 1, 1), MaciParams(4, 4, 1)}) {
        Exponent k = (p.common_degree() - 3) / 6;
        MonomialIdeal ideal = maci_ideal(p);
        auto values = twin_peak_values(p);
        CHECK(values.first ==
              (long long)standard_monomials(ideal, 8 * k + 2).size());
        CHECK(values.second ==
              (long long)standard_monomials(ideal, 8 * k + 3).size());
        CHECK(values.first == 6 * (2 * k + 1) * (2 * k + 1));
    }
}

TEST_CASE("fixed-monomial counts") {
    CHECK(fixed_count(MaciParams(5, 2, 2), 10, {1, 2}) -
              fixed_count(MaciParams(5, 2, 2), 11, {1, 2}) == 2);
    CHECK(fixed_count(MaciParams(4, 4, 1), 10, {0, 1}) -
              fixed_count(MaciParams(4, 4, 1), 11, {0, 1}) == 2);
    CHECK(fixed_count(MaciParams(2, 1, 1), 0, {0, 1}) == 1);
    CHECK_THROWS_AS(fixed_count(MaciParams(1, 1, 1), 2, {1, 1}),
                    std::invalid_argument);
}

TEST_CASE("open-case flag") {
    CHECK(open_case(MaciParams(4, 3, 2)));
    CHECK(open_case(MaciParams(5, 3, 1)));
    CHECK_FALSE(open_case(MaciParams(4, 4, 1))); // not strictly decreasing
    CHECK_FALSE(open_case(MaciParams(6, 2, 1))); // a >= 4k+2
    CHECK_FALSE(open_case(MaciParams(2, 1, 1))); // d = 4
}

TEST_CASE("scan at d = 3") {
    ScanReport report = scan({3});
    REQUIRE(report.rows.size() == 1);
    const ScanRow& row = report.rows[0];
    CHECK(row.params.a == 1);
    CHECK_FALSE(row.computed_wlp);
    CHECK_FALSE(row.predicted_wlp);
    CHECK(row.agree_wlp);
    CHECK_FALSE(row.open_case);
    CHECK(report.disagreements == 0);
}

TEST_CASE("scan enumerates triples in a deterministic order") {
    ScanReport report = scan({9});
    REQUIRE(report.rows.size() == 7);
    std::vector<std::array<Exponent, 3>> expected{
        {3, 3, 3}, {4, 3, 2}, {4, 4, 1}, {5, 2, 2},
        {5, 3, 1}, {6, 2, 1}, {7, 1, 1}};
    for (std::size_t r = 0; r < expected.size(); ++r) {
        CHECK(report.rows[r].params.a == expected[r][0]);
        CHECK(report.rows[r].params.b == expected[r][1]);
        CHECK(report.rows[r].params.c == expected[r][2]);
    }
}

TEST_CASE("scan honours the verdict cache") {
    ScanOptions options;
    int hits = 0;
    options.lookup = [&hits](const MaciParams& p, const std::string& property)
        -> std::optional<bool> {
        if (property == "wlp" && p.a == 1) {
            ++hits;
            return true; // deliberately wrong: must surface as disagreement
        }
        return std::nullopt;
    };
    ScanReport report = scan({3}, options);
    CHECK(hits == 1);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].computed_wlp);
    CHECK(report.rows[0].from_cache_wlp);
    CHECK_FALSE(report.rows[0].agree_wlp);
    CHECK(report.disagreements == 1);
}

TEST_CASE("scan with SLP verdicts at d = 5") {
    ScanOptions options;
    options.slp = true;
    ScanReport report = scan({5}, options);
    REQUIRE(report.rows.size() == 2); // (2,2,1), (3,1,1)
    for (const ScanRow& row : report.rows) {
        REQUIRE(row.computed_slp.has_value());
        CHECK(row.computed_wlp); // d = 5 is not 6k+3
    }
    // (2,2,1) is the sporadic SLP case and must agree.
    CHECK(*report.rows[0].computed_slp);
    CHECK(*report.rows[0].predicted_slp);
    CHECK(*report.rows[0].agree_slp);
}

TEST_CASE("SLP rows beyond the degree cap are skipped") {
    ScanOptions options;
    options.slp = true;
    options.slp_degree_cap = 4;
    ScanReport report = scan({5}, options);
    for (const ScanRow& row : report.rows)
        CHECK_FALSE(row.computed_slp.has_value());
}

TEST_CASE("failure of the weak property across the twin-peak family") {
    // every triple satisfying both conjecture conditions at d in {3, 9, 15}
    for (Exponent d : {3LL, 9LL, 15LL}) {
        Exponent k = (d - 3) / 6;
        for (Exponent a = (d + 2) / 3; a <= d - 2; ++a)
            for (Exponent b = (d - a + 1) / 2; b <= std::min(a, d - a - 1);
                 ++b) {
                MaciParams p(a, b, d - a - b);
                bool conditions = p.a < 4 * k + 2 &&
                                  (p.a == p.b || p.b == p.c || p.a == p.c);
                if (!conditions)
                    continue;
                CHECK_FALSE(check_lefschetz(maci_ideal(p),
                                            LefschetzProperty::weak)
                                .verdict);
            }
    }
}
