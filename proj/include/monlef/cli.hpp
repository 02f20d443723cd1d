#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "monlef/monomial.hpp"

namespace monlef {

enum class Status {
    ok = 0,
    property_failed = 1,
    input_error = 2,
    conjecture_disagreement = 3,
    cap_exceeded = 4,
};

/// One parsed invocation; exactly one subcommand, inputs in the text grammars
/// of the owning modules.
struct CommandRequest {
    std::string subcommand; // hilbert | wlp | slp | split | witness | glue |
                            // candidates | table | gorenstein | maci-scan |
                            // selftest
    std::string ideal_text;
    std::optional<int> n_override;
    std::string m_text;
    std::string i_text;
    std::string j_text;
    std::string table_json;
    bool check_slp = false;
    std::optional<Exponent> witness_d; // empty = all d
    std::vector<Exponent> family_d;
    std::vector<Exponent> family_alpha;
    std::string c_text = "1";
    std::vector<Exponent> scan_d;
    bool scan_slp = false;
    std::string cache_path;
    bool force = false;
    std::string format = "text"; // text | json
    int threads = 0;
    std::size_t dimension_cap = 20000;
};

struct ReportEnvelope {
    std::string tool = "monlef";
    std::string version;
    nlohmann::json input_echo;
    double duration_ms = 0.0;
    Status status = Status::ok;
    nlohmann::json result;
    std::string text; // human-readable rendering of result

    nlohmann::json to_json() const;
    int exit_code() const { return (int)status; }
};

ReportEnvelope run(const CommandRequest& request);

} // namespace monlef
