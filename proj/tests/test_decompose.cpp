#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "monlef/decompose.hpp"
#include "monlef/errors.hpp"
#include "monlef/lefschetz.hpp"
#include "monlef/parse.hpp"
#include "monlef/table.hpp"

#include "oracles.hpp"

using namespace monlef;

namespace {

MonomialIdeal I3(const std::string& text) { return parse_ideal(text, 3); }

// Random (I, J, m) triples that admit a gluing: I from a random Artinian
// ideal, m one of its generators, J a random ideal containing I_m : (m).
std::optional<GluingSpec> random_gluing(std::mt19937_64& rng) {
    MonomialIdeal i = oracles::random_artinian_ideal(rng, 3, 4, 2);
    if (!i.is_proper() || i.gens().empty())
        return std::nullopt;
    const Monomial m = i.gens()[rng() % i.gens().size()];
    MonomialIdeal j =
        colon_by_monomial(generators_without(i, m), m);
    // Enlarge J a little while keeping it proper.
    for (int extra = 0; extra < 2; ++extra) {
        std::vector<Exponent> exps;
        for (int v = 0; v < 3; ++v)
            exps.push_back((Exponent)(rng() % 3));
        Monomial candidate(exps);
        if (candidate.is_one())
            continue;
        j = add(j, MonomialIdeal::principal(candidate));
    }
    if (!j.is_proper() || j.is_zero())
        return std::nullopt;
    if (!can_glue(i, j, m))
        return std::nullopt;
    return glue(i, j, m);
}

} // namespace

TEST_CASE("split on the worked examples") {
    Decomposition squares =
        split(family_squares_squared(3), parse_monomial("x^2", 3));
    CHECK(squares.I == I3("x^2, y^4, y^2*z^2, z^4"));
    CHECK(squares.J == I3("x^2, y^2, z^2"));

    Decomposition glued =
        split(I3("x^4, y^2, z^4, x^3*y, x^3*z"), parse_monomial("x^3", 3));
    CHECK(glued.I == I3("x^3, y^2, z^4"));
    CHECK(glued.J == I3("x, y, z"));

    Decomposition trivial = split(I3("x^2, y^2, z^2"), Monomial::one(3));
    CHECK(trivial.I.is_unit());
    CHECK(trivial.J == I3("x^2, y^2, z^2"));

    CHECK_THROWS_AS(split(MonomialIdeal::unit(3), Monomial::one(3)),
                    std::invalid_argument);
}

TEST_CASE("Hilbert compatibility") {
    MonomialIdeal glued = I3("x^4, y^2, z^4, x^3*y, x^3*z");
    Monomial m = parse_monomial("x^3", 3);
    for (Exponent d = 1; d <= hilbert_data(glued).socle_degree; ++d)
        CHECK(hilbert_compatible(glued, m, d));

    // No monomial works for every d on the lex-dual fixture.
    MonomialIdeal fixture = I3("x^3, y^3, z^5, x^2*y^2, x*z, y*z");
    Exponent socle = hilbert_data(fixture).socle_degree;
    for (Exponent deg = 1; deg <= socle; ++deg) {
        for (const Monomial& candidate : standard_monomials(fixture, deg)) {
            bool all = true;
            for (Exponent d = 1; d <= socle && all; ++d)
                all = hilbert_compatible(fixture, candidate, d);
            CHECK_FALSE(all);
        }
    }

    // J the unit ideal: the right-hand side is identically zero.
    MonomialIdeal k = parse_ideal("x, y^2");
    for (Exponent d = 1; d <= 4; ++d)
        CHECK(hilbert_compatible(k, parse_monomial("x", 2), d));
}

TEST_CASE("centre-to-centre") {
    CHECK(centre_to_centre(I3("x^4, y^2, z^4, x^3*y, x^3*z"),
                           parse_monomial("x^3", 3)));

    // One-row family instance, m = x1^{d1-a1}.
    MonomialIdeal lemma = lemma31_ideal({2, 3, 4}, {1, 1, 1});
    CHECK(centre_to_centre(lemma, parse_monomial("x", 3)));

    CHECK_FALSE(centre_to_centre(parse_ideal("x^2, y^2"),
                                 parse_monomial("x", 2)));

    CHECK_THROWS_AS(centre_to_centre(parse_ideal("x^2, y^2"),
                                     Monomial::one(2)),
                    inapplicable_error);
    CHECK_THROWS_AS(centre_to_centre(parse_ideal("x^2, y^2"),
                                     parse_monomial("x^2", 2)),
                    inapplicable_error);
}

TEST_CASE("witness search") {
    CHECK_FALSE(find_witness(I3("x^3, y^3, z^5, x^2*y^2, x*z, y*z"),
                             std::nullopt)
                    .has_value());

    auto glued = find_witness(I3("x^4, y^2, z^4, x^3*y, x^3*z"), std::nullopt);
    REQUIRE(glued.has_value());
    Exponent socle = hilbert_data(glued->K).socle_degree;
    for (Exponent d = 1; d <= socle; ++d)
        CHECK(hilbert_compatible(glued->K, glued->m, d));

    auto squares = find_witness(parse_ideal("x^2, y^2"), 1);
    REQUIRE(squares.has_value());
    CHECK(squares->m == parse_monomial("x", 2)); // first hit in canonical order
}

TEST_CASE("generators_without") {
    CHECK(generators_without(I3("x^3, y^2, z^4"), parse_monomial("x^3", 3)) ==
          I3("y^2, z^4"));
    CHECK(generators_without(parse_ideal("x", 1), parse_monomial("x", 1))
              .is_zero());
    CHECK(generators_without(parse_ideal("x^2, y"), parse_monomial("y", 2)) ==
          parse_ideal("x^2", 2));
    CHECK_THROWS_AS(generators_without(parse_ideal("x^2, y"),
                                       parse_monomial("x", 2)),
                    std::invalid_argument);
}

TEST_CASE("gluing admissibility") {
    CHECK(can_glue(I3("x^3, y^2, z^4"), I3("x, y, z"),
                   parse_monomial("x^3", 3)));
    CHECK_FALSE(can_glue(parse_ideal("x^2, y^2"), parse_ideal("x", 2),
                         parse_monomial("x^2", 2)));
    CHECK(can_glue(MonomialIdeal::principal(parse_monomial("x^2", 2)),
                   parse_ideal("x, y"), parse_monomial("x^2", 2)));
    CHECK_FALSE(can_glue(parse_ideal("x^2, y^2"), parse_ideal("x", 2),
                         parse_monomial("x", 2))); // m not a generator
}

TEST_CASE("glue on the worked examples") {
    GluingSpec a = glue(I3("x^3, y^2, z^4"), I3("x, y, z"),
                        parse_monomial("x^3", 3));
    CHECK(a.K == I3("x^4, y^2, z^4, x^3*y, x^3*z"));
    CHECK(a.I_m == I3("y^2, z^4"));

    GluingSpec b = glue(I3("x, y^3, z^4"), I3("x, y^2, z^3, y*z"),
                        parse_monomial("x", 3));
    CHECK(b.K == I3("x^2, y^3, z^4, x*y^2, x*z^3, x*y*z"));

    GluingSpec c = glue(MonomialIdeal::principal(parse_monomial("x", 3)),
                        I3("x, y, z"), parse_monomial("x", 3));
    CHECK(c.K == I3("x^2, x*y, x*z"));

    CHECK_THROWS_AS(glue(parse_ideal("x^2, y^2"), parse_ideal("x", 2),
                         parse_monomial("x^2", 2)),
                    std::invalid_argument);
}

TEST_CASE("glue candidates") {
    CHECK(glue_candidates(I3("x^3, y^2, z^4"), I3("x, y, z")).size() == 3);
    auto only = glue_candidates(parse_ideal("x^2, y^2"), parse_ideal("x", 2));
    REQUIRE(only.size() == 1);
    CHECK(only[0] == parse_monomial("y^2", 2));
    auto principal = glue_candidates(parse_ideal("x", 2), parse_ideal("x, y"));
    REQUIRE(principal.size() == 1);
    CHECK(principal[0] == parse_monomial("x", 2));
}

TEST_CASE("gluing roundtrip recovers I and J") {
    std::mt19937_64 rng(47);
    int done = 0;
    while (done < 50) {
        auto spec = random_gluing(rng);
        if (!spec)
            continue;
        Decomposition dec = split(spec->K, spec->m);
        CHECK(dec.I == spec->I);
        CHECK(dec.J == spec->J);
        // Both ends of the interval [I_m, K] give the same gluing.
        std::vector<Monomial> mj;
        for (const Monomial& g : spec->J.gens())
            mj.push_back(g * spec->m);
        MonomialIdeal mj_ideal(spec->K.vars(), mj);
        CHECK(add(spec->I_m, mj_ideal) == spec->K);
        CHECK(add(spec->K, mj_ideal) == spec->K);
        ++done;
    }
}

TEST_CASE("distinct admissible monomials give distinct gluings") {
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 50) {
        MonomialIdeal i = oracles::random_artinian_ideal(rng, 3, 4, 2);
        MonomialIdeal j = oracles::random_artinian_ideal(rng, 3, 4, 2);
        if (!i.is_proper() || !j.is_proper())
            continue;
        auto candidates = glue_candidates(i, j);
        if (candidates.size() < 2)
            continue;
        for (std::size_t s = 0; s + 1 < candidates.size(); ++s)
            for (std::size_t t = s + 1; t < candidates.size(); ++t)
                CHECK(glue(i, j, candidates[s]).K !=
                      glue(i, j, candidates[t]).K);
        ++done;
    }
}

TEST_CASE("maximal rank transfers along compatible splits") {
    std::mt19937_64 rng(59);
    int done = 0;
    while (done < 50) {
        MonomialIdeal k = oracles::random_artinian_ideal(rng, 3, 3, 2);
        auto m = oracles::random_standard_monomial(rng, k);
        if (!m)
            continue;
        if (!hilbert_compatible(k, *m, 1))
            continue;
        Decomposition dec = split(k, *m);
        auto passes_wlp = [](const MonomialIdeal& ideal) {
            if (ideal.is_unit())
                return true;
            return check_lefschetz(ideal, LefschetzProperty::weak).verdict;
        };
        if (!passes_wlp(dec.I) || !passes_wlp(dec.J))
            continue;
        CHECK(passes_wlp(k));
        ++done;
    }
}

TEST_CASE("narrow SLP transfers along centre-to-centre splits") {
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 25) {
        std::vector<Exponent> d(3), alpha(3);
        for (int v = 0; v < 3; ++v)
            d[(std::size_t)v] = 1 + (Exponent)(rng() % 4);
        alpha[1] = (Exponent)(rng() % (d[1] + 1));
        alpha[2] = (Exponent)(rng() % (d[2] + 1));
        d[0] = alpha[1] + alpha[2];
        if (d[0] < 1)
            continue;
        alpha[0] = (Exponent)(rng() % (d[0] + 1));
        MonomialIdeal k = lemma31_ideal(d, alpha);
        if (k.is_unit())
            continue;
        Monomial m = Monomial::variable(3, 0, d[0] - alpha[0]);
        if (m.is_one() || contains(k, m))
            continue;
        Decomposition dec = split(k, m);
        if (dec.I.is_unit() || dec.J.is_unit())
            continue;
        if (!centre_to_centre(k, m))
            continue;
        if (!has_narrow_slp(dec.I) || !has_narrow_slp(dec.J))
            continue;
        CHECK(has_narrow_slp(k));
        CHECK(hilbert_data(k).socle_degree == hilbert_data(dec.I).socle_degree);
        ++done;
    }
}

TEST_CASE("product-of-linear-forms family") {
    CHECK(family_product_linear({3}) == parse_ideal("x^4", 1));
    CHECK(family_product_linear({1, 1}) == parse_ideal("x^2, x*y, y^3"));
    MonomialIdeal k = family_product_linear({1, 1, 1});
    CHECK(has_narrow_slp(k));
    CHECK(hilbert_data(k).socle_degree == 3);
    CHECK_THROWS_AS(family_product_linear({0, 1}), std::invalid_argument);
}

TEST_CASE("squares-squared family") {
    CHECK(family_squares_squared(1) == parse_ideal("x^4", 1));
    MonomialIdeal k = family_squares_squared(3);
    CHECK(k.gens().size() == 6);
    CHECK(k == I3("x^4, y^4, z^4, x^2*y^2, x^2*z^2, y^2*z^2"));
    CHECK(check_lefschetz(k, LefschetzProperty::weak).verdict);
}
