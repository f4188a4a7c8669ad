// corefscore: score coreference annotation pairs.
//
// Subcommands:
//   score <target.tsv> <response.tsv>   link recall/precision + kappa for one pair
//   batch <manifest.tsv>                one row per document plus a sigma row
//   table --counts a,b,c,d              score a pre-tabulated 2x2 link table
//
// Exit codes: 0 success, 2 parse error, 3 incommensurate annotations,
// 4 degenerate-only output (no non-degenerate metric in the report).

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coref/coref.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitIncommensurate = 3;
constexpr int kExitDegenerateOnly = 4;

coref::Format parse_format(const std::string& name) {
    return name == "machine" ? coref::Format::Machine : coref::Format::Text;
}

int run_score(const std::string& target, const std::string& response,
              const std::string& format, const coref::ReportOptions& options) {
    const coref::PairReport report = coref::score_pair(target, response);
    std::cout << coref::render(report, parse_format(format), options);
    return report.all_degenerate() ? kExitDegenerateOnly : 0;
}

int run_batch(const std::string& manifest, const std::string& format,
              const coref::ReportOptions& options) {
    const coref::BatchReport report = coref::score_batch(manifest, options);
    std::cout << coref::render(report, parse_format(format), options);
    return 0;
}

int run_table(const std::string& counts, const std::string& counts_file,
              const std::string& target_name, const std::string& response_name,
              const std::string& format, const coref::ReportOptions& options) {
    const coref::Orientation orientation{target_name, response_name};
    std::vector<coref::LinkTable> tables;
    if (!counts.empty()) {
        std::istringstream in(counts);
        tables = coref::tables_from_stream(in, orientation);
        if (tables.size() != 1)
            throw coref::Error("--counts expects exactly four integers a,b,c,d");
    } else {
        std::ifstream in(counts_file);
        if (!in) throw coref::Error("cannot open counts file: " + counts_file);
        tables = coref::tables_from_stream(in, orientation);
        if (tables.empty()) throw coref::Error("counts file holds no tables");
    }

    std::vector<coref::TableReport> reports;
    for (const auto& table : tables) reports.push_back(coref::make_table_report(table));
    const bool all_degenerate =
        std::all_of(reports.begin(), reports.end(),
                    [](const coref::TableReport& r) { return r.all_degenerate(); });

    if (parse_format(format) == coref::Format::Machine && reports.size() > 1) {
        std::cout << coref::render_machine(reports, options);
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (reports.size() > 1) std::cout << "table " << (i + 1) << ":\n";
            std::cout << coref::render(reports[i], parse_format(format), options);
        }
    }
    return all_degenerate ? kExitDegenerateOnly : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coreference annotation agreement scorer"};
    app.require_subcommand(1);

    std::string format = "text";
    int precision = -1;
    coref::ReportOptions options;

    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--precision", precision,
                   "Decimal places for every metric (default: 2 for kappa/sigma, 3 for "
                   "recall/precision)")
        ->check(CLI::Range(0, 12));

    auto* score = app.add_subcommand("score", "Score a target/response annotation pair");
    std::string target_path, response_path;
    score->add_option("target", target_path, "Target annotation TSV (columns)")->required();
    score->add_option("response", response_path, "Response annotation TSV (rows)")->required();

    auto* batch = app.add_subcommand("batch", "Score every pair in a manifest");
    std::string manifest_path;
    batch->add_option("manifest", manifest_path,
                      "Manifest TSV: doc_id<TAB>target_path<TAB>response_path")
        ->required();
    batch->add_flag("--sample-stddev", options.sample_stddev,
                    "Use the sample convention (divide by n-1) for the sigma row");

    auto* table = app.add_subcommand("table", "Score pre-tabulated 2x2 link tables");
    std::string counts;
    std::string counts_file;
    std::string target_name = "target";
    std::string response_name = "response";
    auto* counts_opt = table->add_option(
        "--counts", counts, "Cells a,b,c,d (both, response-only, target-only, neither)");
    table->add_option("--counts-file", counts_file, "File with one a,b,c,d record per line")
        ->excludes(counts_opt);
    table->add_option("--target-name", target_name, "Label for the column coding");
    table->add_option("--response-name", response_name, "Label for the row coding");

    CLI11_PARSE(app, argc, argv);

    if (precision >= 0) {
        options.kappa_places = precision;
        options.ir_places = precision;
    }

    try {
        if (score->parsed()) return run_score(target_path, response_path, format, options);
        if (batch->parsed()) return run_batch(manifest_path, format, options);
        if (counts.empty() && counts_file.empty())
            throw coref::Error("table needs --counts or --counts-file");
        return run_table(counts, counts_file, target_name, response_name, format, options);
    } catch (const coref::Incommensurate& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIncommensurate;
    } catch (const coref::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    }
}
