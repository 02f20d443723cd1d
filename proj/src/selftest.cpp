#include "monlef/selftest.hpp"

#include <functional>

#include "monlef/binomial.hpp"
#include "monlef/decompose.hpp"
#include "monlef/lefschetz.hpp"
#include "monlef/maci.hpp"
#include "monlef/parse.hpp"
#include "monlef/table.hpp"

namespace monlef {

namespace {

MonomialIdeal I3(const std::string& text) { return parse_ideal(text, 3); }

} // namespace

std::vector<SelftestResult> run_selftest(int threads) {
    std::vector<std::pair<std::string, std::function<bool()>>> checks;
    auto put = [&](std::string name, std::function<bool()> fn) {
        checks.emplace_back(std::move(name), std::move(fn));
    };

    put("minimalize collapses the three-table generating set", [] {
        return parse_ideal("x^12, y^7, z^5, w^4, x^9, x^9*z^2, x^9*w^2") ==
               parse_ideal("x^9, y^7, z^5, w^4");
    });
    put("ideal sum x^2 + (x^2,y^2,z^2)^2", [] {
        MonomialIdeal k0 = family_squares_squared(3);
        MonomialIdeal expected =
            add(MonomialIdeal::principal(parse_monomial("x^2", 3)),
                I3("y^4, y^2*z^2, z^4"));
        return add(k0, MonomialIdeal::principal(parse_monomial("x^2", 3))) ==
               expected;
    });
    put("colon (x^2,y^3,z^4,xy^2,xz^3,xyz) : x", [] {
        return colon_by_monomial(I3("x^2, y^3, z^4, x*y^2, x*z^3, x*y*z"),
                                 parse_monomial("x", 3)) ==
               I3("x, y^2, z^3, y*z");
    });
    put("membership x^4*z^4 in (x^6,y^7,z^4,x^4*y)", [] {
        return contains(I3("x^6, y^7, z^4, x^4*y"),
                        parse_monomial("x^4*z^4", 3));
    });
    put("Artinian test", [] {
        return is_artinian(I3("x^3, y^3, z^5, x^2*y^2, x*z, y*z")) &&
               !is_artinian(parse_ideal("x*y", 2));
    });
    put("degree-2 standard monomials of the lex dual fixture", [] {
        auto basis = standard_monomials(I3("x^3, y^3, z^5, x^2*y^2, x*z, y*z"), 2);
        return basis.size() == 4;
    });
    put("Hilbert series 1+3t+4t^2+3t^3+t^4", [] {
        HilbertData h = hilbert_data(I3("x^3, y^3, z^5, x^2*y^2, x*z, y*z"));
        return h.values == std::vector<long long>{1, 3, 4, 3, 1} &&
               h.symmetric && h.unimodal;
    });
    put("basis splitting identity at K=(x^4,y^2,z^4,x^3y,x^3z), m=x^3", [] {
        return verify_split(I3("x^4, y^2, z^4, x^3*y, x^3*z"),
                            parse_monomial("x^3", 3));
    });
    put("monomial complete intersections have the SLP", [&] {
        return check_lefschetz(I3("x^2, y^2, z^2"), LefschetzProperty::strong,
                               threads)
            .verdict;
    });
    put("(x^3,y^3,z^3,xyz) fails the WLP", [&] {
        return !check_lefschetz(I3("x^3, y^3, z^3, x*y*z"),
                                LefschetzProperty::weak, threads)
                    .verdict;
    });
    put("(x^2,y^2,z^2)^2 has the WLP for n=3", [&] {
        return check_lefschetz(family_squares_squared(3),
                               LefschetzProperty::weak, threads)
            .verdict;
    });
    put("narrow SLP with socle degree 12 for (x^6,y^7,z^4,x^4*y)", [&] {
        MonomialIdeal k = I3("x^6, y^7, z^4, x^4*y");
        return has_narrow_slp(k, threads) &&
               hilbert_data(k).socle_degree == 12;
    });
    put("split of (x^2,...)^2 along x^2", [] {
        Decomposition dec =
            split(family_squares_squared(3), parse_monomial("x^2", 3));
        return dec.I == add(MonomialIdeal::principal(parse_monomial("x^2", 3)),
                            I3("y^4, y^2*z^2, z^4")) &&
               dec.J == I3("x^2, y^2, z^2");
    });
    put("split of the glued fixture recovers I and J", [] {
        Decomposition dec =
            split(I3("x^4, y^2, z^4, x^3*y, x^3*z"), parse_monomial("x^3", 3));
        return dec.I == I3("x^3, y^2, z^4") && dec.J == I3("x, y, z");
    });
    put("Hilbert compatibility holds for the glued fixture at d=1", [] {
        return hilbert_compatible(I3("x^4, y^2, z^4, x^3*y, x^3*z"),
                                  parse_monomial("x^3", 3), 1);
    });
    put("no witness decomposes the lex dual fixture for all d", [] {
        return !find_witness(I3("x^3, y^3, z^5, x^2*y^2, x*z, y*z"),
                             std::nullopt)
                    .has_value();
    });
    put("a witness decomposes the glued fixture for all d", [] {
        return find_witness(I3("x^4, y^2, z^4, x^3*y, x^3*z"), std::nullopt)
            .has_value();
    });
    put("the glued fixture is centre-to-centre", [] {
        return centre_to_centre(I3("x^4, y^2, z^4, x^3*y, x^3*z"),
                                parse_monomial("x^3", 3));
    });
    put("removing x^3 from (x^3,y^2,z^4)", [] {
        return generators_without(I3("x^3, y^2, z^4"),
                                  parse_monomial("x^3", 3)) == I3("y^2, z^4");
    });
    put("gluing admissibility", [] {
        MonomialIdeal i = I3("x^3, y^2, z^4"), j = I3("x, y, z");
        return can_glue(i, j, parse_monomial("x^3", 3)) &&
               glue_candidates(i, j).size() == 3;
    });
    put("glue (x^3,y^2,z^4) with (x,y,z) along x^3", [] {
        GluingSpec spec = glue(I3("x^3, y^2, z^4"), I3("x, y, z"),
                               parse_monomial("x^3", 3));
        return spec.K == I3("x^4, y^2, z^4, x^3*y, x^3*z");
    });
    put("glue (x,y^3,z^4) with (x,y^2,z^3,yz) along x", [] {
        GluingSpec spec = glue(I3("x, y^3, z^4"), I3("x, y^2, z^3, y*z"),
                               parse_monomial("x", 3));
        return spec.K == I3("x^2, y^3, z^4, x*y^2, x*z^3, x*y*z");
    });
    put("principal gluing K = mJ", [] {
        GluingSpec spec =
            glue(MonomialIdeal::principal(parse_monomial("x", 3)),
                 I3("x, y, z"), parse_monomial("x", 3));
        return spec.K == I3("x^2, x*y, x*z");
    });
    put("product-of-linear-forms family: narrow SLP, socle 3", [&] {
        MonomialIdeal k = family_product_linear({1, 1, 1});
        return has_narrow_slp(k, threads) && hilbert_data(k).socle_degree == 3;
    });
    put("tables of the worked examples validate", [] {
        Table a{1, 3, {6, 7, 4}, {{2, 6, 0}}};
        Table b{1, 3, {4, 2, 4}, {{1, 1, 3}}};
        Table bad{1, 3, {6, 7, 4}, {{2, 5, 0}}};
        return validate(a).empty() && validate(b).empty() &&
               !validate(bad).empty();
    });
    put("table ideals and predicted socle degrees", [] {
        Table a{1, 3, {6, 7, 4}, {{2, 6, 0}}};
        Table b{1, 3, {4, 2, 4}, {{1, 1, 3}}};
        return ideal_of(a) == I3("x^6, y^7, z^4, x^4*y") &&
               predicted_socle(a) == 12 &&
               ideal_of(b) == I3("x^4, y^2, z^4, x^3*y, x^3*z") &&
               predicted_socle(b) == 6;
    });
    put("three tables give the ideal (x^9,y^7,z^5,w^4)", [] {
        MonomialIdeal expected = parse_ideal("x^9, y^7, z^5, w^4");
        Table t1{2, 4, {12, 7, 5, 4}, {{3, 4, 3, 2}, {0, 3, 2, 1}}};
        Table t2{1, 4, {12, 7, 5, 4}, {{3, 7, 3, 2}}};
        Table t3{0, 4, {9, 7, 5, 4}, {}};
        return ideal_of(t1) == expected && ideal_of(t2) == expected &&
               ideal_of(t3) == expected;
    });
    put("one-row ideal special cases", [] {
        return lemma31_ideal({6, 7, 4}, {2, 6, 0}) ==
                   I3("x^6, y^7, z^4, x^4*y") &&
               lemma31_ideal({2, 3, 4}, {0, 1, 1}) == I3("x^2, y^3, z^4") &&
               lemma31_ideal({3, 2, 1}, {1, 2, 1}) == I3("x^2, y^2, z") &&
               lemma31_ideal({2, 3, 4}, {2, 1, 1}) == I3("x^2, y^2, z^3") &&
               lemma31_ideal({3, 2, 1}, {3, 2, 1}).is_unit();
    });
    put("binomial family of the connected-sum fixture", [] {
        BinomialFamily f = kprime_gens({3, 3, 3}, {2, 1, 2}, 1);
        if (f.gens.size() != 5)
            return false;
        return f.gens[0] == parse_polynomial("x^3 + y*z^2") &&
               initial_ideal(f) == I3("x^3, y^3, z^3, x*y^2, x*z");
    });
    put("table-to-binomial generators for the worked table", [] {
        Table a{1, 3, {6, 7, 4}, {{2, 6, 0}}};
        auto gens = kprime_from_table(a, 1);
        return gens.size() == 4 &&
               gens[0] == parse_polynomial("x^6 + y^6", 3) &&
               initial_ideal(gens, 3) == I3("x^6, y^7, z^4, x^4*y");
    });
    put("the displayed generating sets are Groebner bases", [] {
        return s_pair_check(kprime_gens({3, 3, 3}, {2, 1, 2}, 1)) &&
               s_pair_check(kprime_gens({4, 3, 4}, {3, 1, 3}, 1));
    });
    put("x1^{d1} x_i^{d_i-a_i} reduces to zero", [] {
        BinomialFamily f = kprime_gens({3, 3, 3}, {2, 1, 2}, 1);
        Monomial m1 = parse_monomial("x^3*y^2", 3);
        Monomial m2 = parse_monomial("x^3*z", 3);
        return reduce(Polynomial::from_monomial(m1), f).is_zero() &&
               reduce(Polynomial::from_monomial(m2), f).is_zero();
    });
    put("Gorenstein certificate for the connected-sum fixture", [&] {
        GorensteinCertificate cert = gorenstein_certificate(
            {3, 3, 3}, {2, 1, 2}, 1, kDefaultDimensionCap, threads);
        return cert.passed && cert.socle_dim == 1 &&
               cert.hilbert == hilbert_data(I3("x^3, y^3, z^3, x*y^2, x*z")).values;
    });
    put("maci fixtures: WLP verdicts at d = 9", [&] {
        bool fails_441 = !check_lefschetz(maci_ideal(MaciParams(4, 4, 1)),
                                          LefschetzProperty::weak, threads)
                              .verdict;
        bool holds_711 = check_lefschetz(maci_ideal(MaciParams(7, 1, 1)),
                                         LefschetzProperty::weak, threads)
                             .verdict;
        return fails_441 && holds_711;
    });
    put("(x^a,...,x1^{a-1}x2) has the SLP", [&] {
        return check_lefschetz(thm51_ideal(3, 3), LefschetzProperty::strong,
                               threads)
            .verdict;
    });
    put("twin peak values 6 and 54", [] {
        return twin_peak_values(MaciParams(1, 1, 1)) == std::pair<long long, long long>(6, 6) &&
               twin_peak_values(MaciParams(4, 4, 1)) == std::pair<long long, long long>(54, 54) &&
               twin_peak_values(MaciParams(5, 2, 2)) == std::pair<long long, long long>(54, 54);
    });
    put("fixed-monomial count differences equal 2", [] {
        return fixed_count(MaciParams(5, 2, 2), 10, {1, 2}) -
                       fixed_count(MaciParams(5, 2, 2), 11, {1, 2}) == 2 &&
               fixed_count(MaciParams(4, 4, 1), 10, {0, 1}) -
                       fixed_count(MaciParams(4, 4, 1), 11, {0, 1}) == 2;
    });
    put("conjectured SLP list", [] {
        return predict_slp(5, {2, 2, 1}) && predict_slp(7, {3, 2, 2}) &&
               predict_slp(4, {3, 1, 0}) && !predict_slp(3, {1, 1, 1});
    });

    std::vector<SelftestResult> results;
    results.reserve(checks.size());
    for (auto& [name, fn] : checks) {
        SelftestResult r;
        r.name = name;
        try {
            r.passed = fn();
        } catch (...) {
            r.passed = false;
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace monlef
