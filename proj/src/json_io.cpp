#include "monlef/json_io.hpp"

#include <stdexcept>

namespace monlef {

Json ideal_to_json(const MonomialIdeal& I) {
    Json gens = Json::array();
    for (const Monomial& g : I.gens())
        gens.push_back(g.exponents());
    return Json{{"n", I.vars()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const auto& exps : j.at("gens")) {
        std::vector<Exponent> e = exps.get<std::vector<Exponent>>();
        if ((int)e.size() != n)
            throw std::invalid_argument("exponent vector length mismatch");
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(n, std::move(gens));
}

Json hilbert_to_json(const HilbertData& h) {
    return Json{{"values", h.values},
                {"socle_degree", h.socle_degree},
                {"symmetric", h.symmetric},
                {"unimodal", h.unimodal}};
}

Json report_to_json(const LefschetzReport& r) {
    Json failures = Json::array();
    for (const LefschetzFailure& f : r.failures)
        failures.push_back(Json{{"d", f.d},
                                {"i", f.i},
                                {"rank", f.rank},
                                {"expected", f.expected}});
    return Json{{"property", to_string(r.property)},
                {"verdict", r.verdict},
                {"failures", failures},
                {"hilbert", r.hilbert.values}};
}

Json decomposition_to_json(const Decomposition& dec) {
    return Json{{"K", ideal_to_json(dec.K)},
                {"m", render_monomial(dec.m)},
                {"I", ideal_to_json(dec.I)},
                {"J", ideal_to_json(dec.J)}};
}

Json gluing_to_json(const GluingSpec& spec) {
    return Json{{"I", ideal_to_json(spec.I)},
                {"J", ideal_to_json(spec.J)},
                {"m", render_monomial(spec.m)},
                {"I_m", ideal_to_json(spec.I_m)},
                {"K", ideal_to_json(spec.K)}};
}

Json table_to_json(const Table& t) {
    return Json{{"s", t.s}, {"n", t.n}, {"d", t.d}, {"alpha", t.alpha}};
}

Table table_from_json(const Json& j) {
    Table t;
    t.s = j.at("s").get<int>();
    t.n = j.at("n").get<int>();
    t.d = j.at("d").get<std::vector<Exponent>>();
    t.alpha = j.at("alpha").get<std::vector<std::vector<Exponent>>>();
    return t;
}

Json certificate_to_json(const GorensteinCertificate& cert) {
    Json gens = Json::array();
    for (const Polynomial& g : cert.family.gens)
        gens.push_back(render_polynomial(g));
    return Json{{"d", cert.family.d},
                {"alpha", cert.family.alpha},
                {"c", cert.family.c.get_str()},
                {"generators", gens},
                {"proper", cert.proper},
                {"groebner", cert.groebner},
                {"initial_matches_lemma", cert.initial_matches_lemma},
                {"colon_identity", cert.colon_identity},
                {"socle_dimension", cert.socle_dim},
                {"gorenstein", cert.gorenstein},
                {"slp", cert.proper ? report_to_json(cert.slp) : Json()},
                {"hilbert", cert.hilbert},
                {"passed", cert.passed}};
}

Json scan_row_to_json(const ScanRow& row) {
    Json j{{"a", row.params.a},
           {"b", row.params.b},
           {"c", row.params.c},
           {"d", row.params.common_degree()},
           {"computed_wlp", row.computed_wlp},
           {"predicted_wlp", row.predicted_wlp},
           {"agree_wlp", row.agree_wlp},
           {"open_case", row.open_case}};
    if (row.computed_slp) {
        j["computed_slp"] = *row.computed_slp;
        j["predicted_slp"] = *row.predicted_slp;
        j["agree_slp"] = *row.agree_slp;
    }
    if (row.from_cache_wlp)
        j["cached_wlp"] = true;
    if (row.from_cache_slp)
        j["cached_slp"] = true;
    return j;
}

} // namespace monlef
