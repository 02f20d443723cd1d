#include "monlef/cli.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "monlef/binomial.hpp"
#include "monlef/decompose.hpp"
#include "monlef/errors.hpp"
#include "monlef/json_io.hpp"
#include "monlef/lefschetz.hpp"
#include "monlef/maci.hpp"
#include "monlef/parse.hpp"
#include "monlef/selftest.hpp"
#include "monlef/table.hpp"
#include "monlef/version.hpp"

namespace monlef {

using Json = nlohmann::json;

Json ReportEnvelope::to_json() const {
    static const char* names[] = {"ok", "property-failed", "input-error",
                                  "conjecture-disagreement", "cap-exceeded"};
    return Json{{"tool", tool},
                {"version", version},
                {"input", input_echo},
                {"duration_ms", duration_ms},
                {"status", names[(int)status]},
                {"result", result}};
}

namespace {

std::string hilbert_text(const std::vector<long long>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            os << " + ";
        os << values[i];
        if (i == 1)
            os << "t";
        else if (i > 1)
            os << "t^" << i;
    }
    return os.str();
}

Rational parse_rational(const std::string& text) {
    try {
        Rational c(text);
        c.canonicalize();
        return c;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational constant: " + text);
    }
}

struct CacheKey {
    Exponent a, b, c;
    std::string property;
    bool operator<(const CacheKey& o) const {
        return std::tie(a, b, c, property) <
               std::tie(o.a, o.b, o.c, o.property);
    }
};

std::string resolve_cache_path(const CommandRequest& req) {
    if (!req.cache_path.empty())
        return req.cache_path;
    if (const char* dir = std::getenv("MONLEF_CACHE_DIR"))
        return std::string(dir) + "/maci-scan.jsonl";
    return {};
}

std::map<CacheKey, bool> load_cache(const std::string& path) {
    std::map<CacheKey, bool> cache;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("version") ||
            j["version"] != kVersion)
            continue;
        cache[{j.at("a").get<Exponent>(), j.at("b").get<Exponent>(),
               j.at("c").get<Exponent>(), j.at("property").get<std::string>()}] =
            j.at("verdict").get<bool>();
    }
    return cache;
}

void append_cache(const std::string& path, const std::vector<Json>& lines) {
    if (lines.empty())
        return;
    int fd = ::open(path.c_str(), O_CREAT | O_WRONLY | O_APPEND, 0644);
    if (fd < 0)
        throw std::runtime_error("cannot open cache file: " + path);
    ::flock(fd, LOCK_EX);
    std::string blob;
    for (const Json& j : lines)
        blob += j.dump() + "\n";
    ssize_t written = ::write(fd, blob.data(), blob.size());
    ::flock(fd, LOCK_UN);
    ::close(fd);
    if (written != (ssize_t)blob.size())
        throw std::runtime_error("short write to cache file: " + path);
}

void dispatch(const CommandRequest& req, ReportEnvelope& env) {
    if (req.subcommand == "hilbert") {
        MonomialIdeal I = parse_ideal(req.ideal_text, req.n_override);
        env.input_echo = Json{{"ideal", render_ideal(I)}};
        HilbertData h = hilbert_data(I);
        env.result = hilbert_to_json(h);
        env.text = "HS = " + hilbert_text(h.values) + "\nsocle degree " +
                   std::to_string(h.socle_degree) +
                   (h.symmetric ? ", symmetric" : ", not symmetric") +
                   (h.unimodal ? ", unimodal" : ", not unimodal");
        return;
    }
    if (req.subcommand == "wlp" || req.subcommand == "slp") {
        MonomialIdeal I = parse_ideal(req.ideal_text, req.n_override);
        env.input_echo = Json{{"ideal", render_ideal(I)}};
        LefschetzReport r = check_lefschetz(I,
                                            req.subcommand == "wlp"
                                                ? LefschetzProperty::weak
                                                : LefschetzProperty::strong,
                                            req.threads);
        env.result = report_to_json(r);
        env.status = r.verdict ? Status::ok : Status::property_failed;
        std::ostringstream os;
        os << to_string(r.property) << " Lefschetz property: "
           << (r.verdict ? "true" : "false") << "\nHS = "
           << hilbert_text(r.hilbert.values);
        for (const auto& f : r.failures)
            os << "\n  rank drop at d=" << f.d << " i=" << f.i << ": rank "
               << f.rank << " < " << f.expected;
        env.text = os.str();
        return;
    }
    if (req.subcommand == "split") {
        MonomialIdeal K = parse_ideal(req.ideal_text, req.n_override);
        Monomial m = parse_monomial(req.m_text, K.vars());
        env.input_echo =
            Json{{"ideal", render_ideal(K)}, {"m", render_monomial(m)}};
        Decomposition dec = split(K, m);
        Json j = decomposition_to_json(dec);
        if (is_artinian(K) && !K.is_unit()) {
            Exponent socle = hilbert_data(K).socle_degree;
            bool all = true;
            Json per_d = Json::array();
            for (Exponent d = 1; d <= socle; ++d) {
                bool ok = hilbert_compatible(K, m, d);
                per_d.push_back(Json{{"d", d}, {"compatible", ok}});
                all = all && ok;
            }
            j["hilbert_compatible"] = per_d;
            j["hilbert_compatible_all_d"] = all;
            try {
                j["centre_to_centre"] = centre_to_centre(K, m);
            } catch (const inapplicable_error&) {
                j["centre_to_centre"] = nullptr;
            }
        }
        env.result = j;
        env.text = "I = (" + render_ideal(dec.I) + ")\nJ = (" +
                   render_ideal(dec.J) + ")";
        return;
    }
    if (req.subcommand == "witness") {
        MonomialIdeal K = parse_ideal(req.ideal_text, req.n_override);
        env.input_echo = Json{{"ideal", render_ideal(K)}};
        auto dec = find_witness(K, req.witness_d);
        if (dec) {
            env.result = decomposition_to_json(*dec);
            env.text = "witness m = " + render_monomial(dec->m) + "\nI = (" +
                       render_ideal(dec->I) + ")\nJ = (" +
                       render_ideal(dec->J) + ")";
        } else {
            env.result = nullptr;
            env.text = "no witness";
        }
        return;
    }
    if (req.subcommand == "glue") {
        MonomialIdeal I = parse_ideal(req.i_text, req.n_override);
        MonomialIdeal J = parse_ideal(req.j_text, I.vars());
        Monomial m = parse_monomial(req.m_text, I.vars());
        env.input_echo = Json{{"I", render_ideal(I)},
                              {"J", render_ideal(J)},
                              {"m", render_monomial(m)}};
        GluingSpec spec = glue(I, J, m);
        env.result = gluing_to_json(spec);
        env.text = "K = (" + render_ideal(spec.K) + ")";
        return;
    }
    if (req.subcommand == "candidates") {
        MonomialIdeal I = parse_ideal(req.i_text, req.n_override);
        MonomialIdeal J = parse_ideal(req.j_text, I.vars());
        env.input_echo =
            Json{{"I", render_ideal(I)}, {"J", render_ideal(J)}};
        Json out = Json::array();
        std::string text;
        for (const Monomial& m : glue_candidates(I, J)) {
            out.push_back(render_monomial(m));
            if (!text.empty())
                text += ", ";
            text += render_monomial(m);
        }
        env.result = out;
        env.text = text.empty() ? "no admissible m" : text;
        return;
    }
    if (req.subcommand == "table") {
        Table t = table_from_json(Json::parse(req.table_json));
        env.input_echo = table_to_json(t);
        auto violations = validate(t);
        if (!violations.empty()) {
            Json v = Json::array();
            std::string text = "invalid table:";
            for (const auto& viol : violations) {
                v.push_back(Json{{"condition", viol.condition},
                                 {"message", viol.message}});
                text += "\n  " + viol.message;
            }
            env.result = Json{{"valid", false}, {"violations", v}};
            env.status = Status::input_error;
            env.text = text;
            return;
        }
        MonomialIdeal k = ideal_of(t);
        Json j{{"valid", true}, {"ideal", ideal_to_json(k)}};
        std::ostringstream os;
        os << "K(T) = (" << render_ideal(k) << ")";
        if (t.s >= 1 && k.is_proper()) {
            j["predicted_socle"] = predicted_socle(t);
            os << "\npredicted socle degree " << predicted_socle(t);
        }
        if (req.check_slp && k.is_proper()) {
            HilbertData h = hilbert_data(k);
            bool narrow = has_narrow_slp(k, req.threads);
            j["narrow_slp"] = narrow;
            j["computed_socle"] = h.socle_degree;
            os << "\nnarrow SLP: " << (narrow ? "true" : "false")
               << "\ncomputed socle degree " << h.socle_degree;
            if (!narrow)
                env.status = Status::property_failed;
        }
        env.result = j;
        env.text = os.str();
        return;
    }
    if (req.subcommand == "gorenstein") {
        Rational c = parse_rational(req.c_text);
        env.input_echo = Json{{"d", req.family_d},
                              {"alpha", req.family_alpha},
                              {"c", c.get_str()}};
        GorensteinCertificate cert =
            gorenstein_certificate(req.family_d, req.family_alpha, c,
                                   req.dimension_cap, req.threads);
        env.result = certificate_to_json(cert);
        env.status = cert.passed ? Status::ok : Status::property_failed;
        std::ostringstream os;
        os << "Groebner basis: " << (cert.groebner ? "yes" : "no")
           << "\ninitial ideal matches: "
           << (cert.initial_matches_lemma ? "yes" : "no")
           << "\ncolon identity: " << (cert.colon_identity ? "yes" : "no")
           << "\nsocle dimension: " << cert.socle_dim
           << "\nSLP: " << (cert.slp.verdict ? "true" : "false")
           << "\nHS = " << hilbert_text(cert.hilbert)
           << "\ncertificate: " << (cert.passed ? "PASS" : "FAIL");
        env.text = os.str();
        return;
    }
    if (req.subcommand == "maci-scan") {
        env.input_echo = Json{{"d", req.scan_d}, {"slp", req.scan_slp}};
        ScanOptions options;
        options.slp = req.scan_slp;
        options.threads = req.threads;
        std::string cache_path = resolve_cache_path(req);
        std::map<CacheKey, bool> cache;
        if (!cache_path.empty() && !req.force)
            cache = load_cache(cache_path);
        if (!cache.empty())
            options.lookup = [&cache](const MaciParams& p,
                                      const std::string& property)
                -> std::optional<bool> {
                auto it = cache.find({p.a, p.b, p.c, property});
                if (it == cache.end())
                    return std::nullopt;
                return it->second;
            };
        ScanReport report = scan(req.scan_d, options);
        Json rows = Json::array();
        std::vector<Json> new_cache_lines;
        std::ostringstream os;
        for (const ScanRow& row : report.rows) {
            Json row_json = scan_row_to_json(row);
            rows.push_back(row_json);
            os << row_json.dump() << "\n"; // one JSON line per triple
            if (!row.from_cache_wlp)
                new_cache_lines.push_back(Json{{"a", row.params.a},
                                               {"b", row.params.b},
                                               {"c", row.params.c},
                                               {"property", "wlp"},
                                               {"verdict", row.computed_wlp},
                                               {"version", kVersion}});
            if (row.computed_slp && !row.from_cache_slp)
                new_cache_lines.push_back(Json{{"a", row.params.a},
                                               {"b", row.params.b},
                                               {"c", row.params.c},
                                               {"property", "slp"},
                                               {"verdict", *row.computed_slp},
                                               {"version", kVersion}});
        }
        if (!cache_path.empty())
            append_cache(cache_path, new_cache_lines);
        os << report.rows.size() << " rows, " << report.disagreements
           << " disagreement(s)";
        env.result = Json{{"rows", rows},
                          {"disagreements", report.disagreements}};
        env.text = os.str();
        env.status = report.disagreements == 0
                         ? Status::ok
                         : Status::conjecture_disagreement;
        return;
    }
    if (req.subcommand == "selftest") {
        env.input_echo = Json::object();
        auto results = run_selftest(req.threads);
        Json rows = Json::array();
        std::ostringstream os;
        long long failed = 0;
        for (const auto& r : results) {
            rows.push_back(Json{{"name", r.name}, {"passed", r.passed}});
            os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "\n";
            if (!r.passed)
                ++failed;
        }
        os << results.size() - failed << "/" << results.size() << " fixtures passed";
        env.result = rows;
        env.text = os.str();
        env.status = failed == 0 ? Status::ok : Status::property_failed;
        return;
    }
    throw std::invalid_argument("unknown subcommand: " + req.subcommand);
}

} // namespace

ReportEnvelope run(const CommandRequest& req) {
    ReportEnvelope env;
    env.version = kVersion;
    auto start = std::chrono::steady_clock::now();
    try {
        dispatch(req, env);
    } catch (const cap_exceeded_error& e) {
        env.status = Status::cap_exceeded;
        env.result = Json{{"error", e.what()}};
        env.text = std::string("error: ") + e.what();
    } catch (const parse_error& e) {
        env.status = Status::input_error;
        env.result = Json{{"error", e.what()}, {"offset", e.offset()}};
        env.text = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
        env.status = Status::input_error;
        env.result = Json{{"error", e.what()}};
        env.text = std::string("error: ") + e.what();
    }
    env.duration_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    return env;
}

} // namespace monlef
