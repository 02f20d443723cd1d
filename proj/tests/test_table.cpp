#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "monlef/json_io.hpp"
#include "monlef/lefschetz.hpp"
#include "monlef/parse.hpp"
#include "monlef/table.hpp"

using namespace monlef;

namespace {

MonomialIdeal I3(const std::string& text) { return parse_ideal(text, 3); }

// Random valid table: sample alpha first, solve the path condition for
// d_1..d_s, draw the free d_j, reject when a column sum exceeds its d_j.
std::optional<Table> random_table(std::mt19937_64& rng, int s, int n,
                                  Exponent max_entry) {
    Table t;
    t.s = s;
    t.n = n;
    t.alpha.assign((std::size_t)s, std::vector<Exponent>((std::size_t)n, 0));
    for (int i = 1; i <= s; ++i)
        for (int j = i; j <= n; ++j)
            t.alpha[(std::size_t)(i - 1)][(std::size_t)(j - 1)] =
                (Exponent)(rng() % (max_entry + 1));
    t.d.assign((std::size_t)n, 0);
    for (int k = 1; k <= s; ++k) {
        Exponent sum = 0;
        for (int i = 1; i <= k - 1; ++i)
            sum += t.alpha[(std::size_t)(i - 1)][(std::size_t)(k - 1)];
        for (int j = k + 1; j <= n; ++j)
            sum += t.alpha[(std::size_t)(k - 1)][(std::size_t)(j - 1)];
        if (k + 1 <= s)
            sum += t.alpha[(std::size_t)k][(std::size_t)k];
        t.d[(std::size_t)(k - 1)] = sum;
    }
    for (int j = s + 1; j <= n; ++j)
        t.d[(std::size_t)(j - 1)] = 1 + (Exponent)(rng() % max_entry);
    if (!validate(t).empty())
        return std::nullopt;
    return t;
}

} // namespace

TEST_CASE("validate accepts the worked tables and rejects a broken one") {
    Table fig2{1, 3, {6, 7, 4}, {{2, 6, 0}}};
    CHECK(validate(fig2).empty());

    Table fig4{1, 3, {4, 2, 4}, {{1, 1, 3}}};
    CHECK(validate(fig4).empty());

    Table broken{1, 3, {6, 7, 4}, {{2, 5, 0}}};
    auto violations = validate(broken);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].condition == 3);

    Table lower{2, 3, {5, 3, 2}, {{1, 2, 3}, {1, 0, 3}}};
    bool has_condition1 = false;
    for (const auto& v : validate(lower))
        has_condition1 = has_condition1 || v.condition == 1;
    CHECK(has_condition1);

    Table colsum{1, 3, {2, 1, 4}, {{3, 1, 1}}};
    bool has_condition2 = false;
    for (const auto& v : validate(colsum))
        has_condition2 = has_condition2 || v.condition == 2;
    CHECK(has_condition2);

    CHECK_THROWS_AS(validate(Table{1, 3, {6, 7}, {{2, 6, 0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate(Table{3, 3, {1, 1, 1}, {}}),
                    std::invalid_argument);
}

TEST_CASE("ideal_of on the worked tables") {
    CHECK(ideal_of(Table{1, 3, {6, 7, 4}, {{2, 6, 0}}}) ==
          I3("x^6, y^7, z^4, x^4*y"));
    CHECK(ideal_of(Table{1, 4, {12, 7, 5, 4}, {{3, 7, 3, 2}}}) ==
          parse_ideal("x^9, y^7, z^5, w^4"));
    CHECK(ideal_of(Table{0, 2, {2, 3}, {}}) == parse_ideal("x^2, y^3"));
}

TEST_CASE("the three tables of the same ideal") {
    MonomialIdeal expected = parse_ideal("x^9, y^7, z^5, w^4");
    CHECK(ideal_of(Table{2, 4, {12, 7, 5, 4}, {{3, 4, 3, 2}, {0, 3, 2, 1}}}) ==
          expected);
    CHECK(ideal_of(Table{1, 4, {12, 7, 5, 4}, {{3, 7, 3, 2}}}) == expected);
    CHECK(ideal_of(Table{0, 4, {9, 7, 5, 4}, {}}) == expected);
}

TEST_CASE("predicted socle degree") {
    CHECK(predicted_socle(Table{1, 3, {6, 7, 4}, {{2, 6, 0}}}) == 12);
    CHECK(predicted_socle(Table{1, 3, {4, 2, 4}, {{1, 1, 3}}}) == 6);
    // alpha_{1,1} = 0 gives the complete-intersection socle degree.
    Table ci{1, 3, {3, 2, 3}, {{0, 1, 2}}};
    REQUIRE(validate(ci).empty());
    CHECK(predicted_socle(ci) == 3 + 2 + 3 - 0 - 3);
    CHECK_THROWS_AS(predicted_socle(Table{0, 2, {2, 3}, {}}),
                    std::invalid_argument);
    // K(T) = R: prediction is void.
    Table unit{1, 2, {1, 1}, {{1, 1}}};
    REQUIRE(validate(unit).empty());
    CHECK(ideal_of(unit).is_unit());
    CHECK_THROWS_AS(predicted_socle(unit), std::invalid_argument);
}

TEST_CASE("one-row ideals") {
    CHECK(lemma31_ideal({6, 7, 4}, {2, 6, 0}) == I3("x^6, y^7, z^4, x^4*y"));
    CHECK(lemma31_ideal({2, 3, 4}, {0, 1, 1}) == I3("x^2, y^3, z^4"));
    CHECK(lemma31_ideal({3, 2, 1}, {1, 2, 1}) == I3("x^2, y^2, z"));
    CHECK(lemma31_ideal({2, 3, 4}, {2, 1, 1}) == I3("x^2, y^2, z^3"));
    CHECK(lemma31_ideal({3, 2, 1}, {3, 2, 1}).is_unit());
    CHECK_THROWS_AS(lemma31_ideal({3, 2, 1}, {1, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lemma31_ideal({2, 2, 2}, {3, 1, 1}),
                    std::invalid_argument);
}

TEST_CASE("lemma31_ideal matches the one-row table") {
    std::mt19937_64 rng(67);
    int done = 0;
    while (done < 40) {
        auto t = random_table(rng, 1, 3, 4);
        if (!t)
            continue;
        CHECK(lemma31_ideal(t->d, t->alpha[0]) == ideal_of(*t));
        ++done;
    }
}

TEST_CASE("narrow SLP and socle prediction on a small sweep") {
    // Exhaustive for n = 3, s = 1, entries <= 3; the full-depth sweep runs in
    // the acceptance suite.
    std::set<std::string> seen;
    for (Exponent a11 = 0; a11 <= 3; ++a11)
        for (Exponent a12 = 0; a12 <= 3; ++a12)
            for (Exponent a13 = 0; a13 <= 3; ++a13)
                for (Exponent d2 = a12; d2 <= 3; ++d2)
                    for (Exponent d3 = a13; d3 <= 3; ++d3) {
                        Table t{1, 3, {a12 + a13, d2, d3}, {{a11, a12, a13}}};
                        if (a11 > t.d[0])
                            continue;
                        if (!validate(t).empty())
                            continue;
                        MonomialIdeal k = ideal_of(t);
                        if (!k.is_proper())
                            continue;
                        if (!seen.insert(render_ideal(k) + "#" +
                                         std::to_string(predicted_socle(t)))
                                 .second)
                            continue;
                        CHECK(has_narrow_slp(k));
                        CHECK(hilbert_data(k).socle_degree ==
                              predicted_socle(t));
                    }
}

TEST_CASE("randomized two-row sweep at n = 4") {
    std::mt19937_64 rng(71);
    int done = 0;
    while (done < 15) {
        auto t = random_table(rng, 2, 4, 3);
        if (!t)
            continue;
        MonomialIdeal k = ideal_of(*t);
        if (!k.is_proper())
            continue;
        CHECK(has_narrow_slp(k));
        CHECK(hilbert_data(k).socle_degree == predicted_socle(*t));
        ++done;
    }
}

TEST_CASE("table JSON round-trip") {
    Table t{1, 3, {6, 7, 4}, {{2, 6, 0}}};
    Json j = table_to_json(t);
    CHECK(j == Json::parse(R"({"s":1,"n":3,"d":[6,7,4],"alpha":[[2,6,0]]})"));
    Table back = table_from_json(j);
    CHECK(back.s == t.s);
    CHECK(back.d == t.d);
    CHECK(back.alpha == t.alpha);
}
