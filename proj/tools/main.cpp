#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "monlef/cli.hpp"
#include "monlef/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for decomposing and gluing "
                 "Artinian monomial algebras and deciding the weak and "
                 "strong Lefschetz properties by integer rank computation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", monlef::kVersion);

    monlef::CommandRequest req;
    app.add_option("--format", req.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--threads", req.threads,
                   "Worker threads (0 = hardware default)");
    app.add_option("--cap", req.dimension_cap,
                   "Quotient dimension cap for binomial computations")
        ->capture_default_str();

    int n_override = 0;
    auto add_n = [&](CLI::App* sub) {
        sub->add_option("--n", n_override,
                        "Variable count (default: inferred from the input)");
    };

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of an "
                                                  "Artinian monomial quotient");
    hilbert->add_option("ideal", req.ideal_text, "Generators, e.g. \"x^2, y^3\"")
        ->required();
    add_n(hilbert);

    auto* wlp = app.add_subcommand("wlp", "Weak Lefschetz property check");
    wlp->add_option("ideal", req.ideal_text)->required();
    add_n(wlp);

    auto* slp = app.add_subcommand("slp", "Strong Lefschetz property check");
    slp->add_option("ideal", req.ideal_text)->required();
    add_n(slp);

    auto* split = app.add_subcommand(
        "split", "Decompose K into I = K+(m) and J = K:(m)");
    split->add_option("ideal", req.ideal_text)->required();
    split->add_option("--m", req.m_text, "The splitting monomial")->required();
    add_n(split);

    auto* witness = app.add_subcommand(
        "witness", "Search standard monomials for a Hilbert-compatible split");
    witness->add_option("ideal", req.ideal_text)->required();
    add_n(witness);
    long long witness_d = 0;
    bool all_d = false;
    witness->add_flag("--all-d", all_d,
                      "Require compatibility for every jump d (default)");
    auto* dopt = witness->add_option("--d", witness_d,
                                     "Require compatibility for this d only");
    dopt->excludes("--all-d");

    auto* glue = app.add_subcommand("glue", "Glue I and J along m in G(I)");
    glue->add_option("--i", req.i_text, "The ideal I")->required();
    glue->add_option("--j", req.j_text, "The ideal J")->required();
    glue->add_option("--m", req.m_text, "A minimal generator of I")->required();
    add_n(glue);

    auto* candidates =
        app.add_subcommand("candidates", "Generators of I admissible for "
                                         "gluing with J");
    candidates->add_option("--i", req.i_text)->required();
    candidates->add_option("--j", req.j_text)->required();
    add_n(candidates);

    auto* table = app.add_subcommand(
        "table", "Validate a table, build its ideal, predict its socle");
    table
        ->add_option("--json", req.table_json,
                     R"(Table as JSON, e.g. {"s":1,"n":3,"d":[6,7,4],"alpha":[[2,6,0]]})")
        ->required();
    table->add_flag("--check-slp", req.check_slp,
                    "Verify the narrow SLP and compare socle degrees");

    auto* gorenstein = app.add_subcommand(
        "gorenstein", "Full verification pipeline for a binomial family");
    gorenstein->add_option("--d", req.family_d, "Degrees d_1,...,d_n")
        ->required()
        ->delimiter(',');
    gorenstein->add_option("--alpha", req.family_alpha, "Exponents a_1,...,a_n")
        ->required()
        ->delimiter(',');
    gorenstein->add_option("--c", req.c_text, "Nonzero rational constant")
        ->capture_default_str();

    auto* maci = app.add_subcommand(
        "maci-scan", "Scan equigenerated almost complete intersections");
    maci->add_option("--d", req.scan_d, "Common degrees to scan")
        ->required()
        ->delimiter(',');
    maci->add_flag("--slp", req.scan_slp, "Also compute SLP verdicts");
    maci->add_option("--cache", req.cache_path,
                     "JSON-lines cache file (default: $MONLEF_CACHE_DIR/"
                     "maci-scan.jsonl when the variable is set)");
    maci->add_flag("--force", req.force, "Recompute cached rows");

    app.add_subcommand("selftest", "Run the built-in fixture suite");

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();
    req.subcommand = sub->get_name();
    if (n_override > 0)
        req.n_override = n_override;
    if (req.subcommand == "witness" && dopt->count() > 0)
        req.witness_d = witness_d;

    monlef::ReportEnvelope env = monlef::run(req);
    if (req.format == "json")
        std::cout << env.to_json().dump(2) << "\n";
    else
        std::cout << env.text << "\n";
    return env.exit_code();
}
