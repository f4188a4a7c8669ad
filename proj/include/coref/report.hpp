#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coref/agreement.hpp"
#include "coref/annotation.hpp"
#include "coref/errors.hpp"
#include "coref/link_table.hpp"
#include "coref/muc.hpp"
#include "coref/ratio.hpp"

namespace coref {

enum class Format { Text, Machine };

struct ReportOptions {
    int kappa_places = 2;   // kappa, alpha, sigma
    int ir_places = 3;      // recall, precision, agreement proportions
    bool sample_stddev = false;
};

// Everything known about one scored pair. Exact ratios only; decimals are
// produced from them at render time.
struct PairReport {
    std::string doc_id;
    Orientation orientation;
    std::size_t markable_count = 0;
    Ratio recall;     // link recall of the response against the target
    Ratio precision;  // converse direction
    std::optional<LinkTable> table;              // absent when N < 2
    std::optional<AgreementResult> agreement;    // absent when refused or no table
    std::optional<NeitherDiagnostic> diagnostic;
    std::vector<std::string> flags;

    bool all_degenerate() const {
        return recall.is_degenerate() && precision.is_degenerate() &&
               (!agreement || agreement->degenerate());
    }
};

// A pre-tabulated matrix scored on its own, without annotations. Both
// orientations are reported: the table's row/column roles decide which
// count is recall and which precision, so the labels always travel with
// the numbers.
struct TableReport {
    LinkTable table;
    Ratio recall;              // under the declared orientation
    Ratio precision;
    Ratio swapped_recall;      // under the transposed orientation
    Ratio swapped_precision;
    std::optional<AgreementResult> agreement;
    std::vector<std::string> flags;

    bool all_degenerate() const {
        return recall.is_degenerate() && precision.is_degenerate() &&
               (!agreement || agreement->degenerate());
    }
};

struct BatchRow {
    std::string doc_id;
    std::optional<PairReport> report;  // empty when the row failed validation
    std::string error;
};

struct SigmaColumn {
    std::optional<double> sigma;  // empty when too few usable values
    std::size_t used = 0;
    std::size_t excluded = 0;     // degenerate scores and failed rows
};

struct BatchSigma {
    SigmaColumn kappa;
    SigmaColumn recall;
    SigmaColumn precision;
};

struct BatchReport {
    std::vector<BatchRow> rows;  // manifest order
    bool sample_convention = false;
    BatchSigma sigma;
};

// ---------------------------------------------------------------------------
// Standard deviation over exact ratios

inline Ratio population_variance(const std::vector<Ratio>& values) {
    if (values.empty()) throw EmptyList("population variance");
    Ratio sum;
    Ratio sum_sq;
    for (const Ratio& x : values) {
        sum = sum + x;
        sum_sq = sum_sq + x * x;
    }
    const Ratio n(static_cast<long long>(values.size()), 1);
    const Ratio mean = sum / n;
    return sum_sq / n - mean * mean;
}

inline Ratio sample_variance(const std::vector<Ratio>& values) {
    if (values.empty()) throw EmptyList("sample variance");
    if (values.size() < 2)
        throw Error("sample variance needs at least two values");
    const Ratio n(static_cast<long long>(values.size()), 1);
    return population_variance(values) * n / (n - Ratio(1, 1));
}

// Population standard deviation by default; divide by n - 1 when `sample`.
inline double stddev(const std::vector<Ratio>& values, bool sample = false) {
    const Ratio var = sample ? sample_variance(values) : population_variance(values);
    return std::sqrt(var.to_double());
}

inline std::string render_decimal(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, value);
    return std::string(buf);
}

// ---------------------------------------------------------------------------
// Scoring

inline PairReport score_pair(const Annotation& target, const Annotation& response,
                             std::string doc_id) {
    check_commensurate(target, response);

    PairReport rep;
    rep.doc_id = std::move(doc_id);
    rep.orientation = Orientation{target.doc_id(), response.doc_id()};
    rep.markable_count = target.size();
    rep.recall = muc_recall(target, response);
    rep.precision = muc_precision(target, response);
    if (rep.recall.is_degenerate()) rep.flags.push_back("recall-degenerate");
    if (rep.precision.is_degenerate()) rep.flags.push_back("precision-degenerate");

    if (target.size() < 2) {
        rep.flags.push_back("too-few-markables");
        return rep;
    }

    rep.table = build_link_table(target, response);
    rep.diagnostic = neither_by_intersection(classes_of(target), classes_of(response));
    if (!rep.diagnostic->agrees_with(rep.table->neither))
        rep.flags.push_back("neither-diagnostic-disagrees");

    if (rep.table->negative_cell()) {
        rep.flags.push_back("negative-cell");
        rep.flags.push_back("kappa-refused-negative-cell");
    } else {
        rep.agreement = kappa_from_link_table(*rep.table);
        if (rep.agreement->degenerate()) rep.flags.push_back("kappa-degenerate");
    }
    return rep;
}

inline Annotation parse_annotation_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open annotation file: " + path.string());
    return parse_annotation(in, path.stem().string());
}

inline PairReport score_pair(const std::filesystem::path& target_path,
                             const std::filesystem::path& response_path) {
    const Annotation target = parse_annotation_file(target_path);
    const Annotation response = parse_annotation_file(response_path);
    return score_pair(target, response, target.doc_id() + " vs " + response.doc_id());
}

inline TableReport make_table_report(const LinkTable& table) {
    TableReport rep;
    rep.table = table;
    rep.recall = table_recall(table);
    rep.precision = table_precision(table);
    const LinkTable swapped = table.transposed();
    rep.swapped_recall = table_recall(swapped);
    rep.swapped_precision = table_precision(swapped);
    if (rep.recall.is_degenerate()) rep.flags.push_back("recall-degenerate");
    if (rep.precision.is_degenerate()) rep.flags.push_back("precision-degenerate");

    if (table.negative_cell()) {
        rep.flags.push_back("negative-cell");
        rep.flags.push_back("kappa-refused-negative-cell");
    } else {
        rep.agreement = kappa_from_link_table(table);
        if (rep.agreement->degenerate()) rep.flags.push_back("kappa-degenerate");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Batch manifests

struct ManifestEntry {
    std::string doc_id;
    std::filesystem::path target_path;
    std::filesystem::path response_path;
};

// Manifest TSV: `doc_id<TAB>target_path<TAB>response_path`, `#` comments,
// blank lines skipped. Relative paths are resolved against `base_dir`.
inline std::vector<ManifestEntry> parse_manifest(std::istream& in,
                                                 const std::filesystem::path& base_dir) {
    std::vector<ManifestEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? std::string::npos
                                                    : line.find('\t', tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos ||
            line.find('\t', tab2 + 1) != std::string::npos)
            throw MalformedRecord("expected `doc_id<TAB>target_path<TAB>response_path`",
                                  line_no);

        ManifestEntry e;
        e.doc_id = line.substr(0, tab1);
        std::filesystem::path target = line.substr(tab1 + 1, tab2 - tab1 - 1);
        std::filesystem::path response = line.substr(tab2 + 1);
        if (e.doc_id.empty() || target.empty() || response.empty())
            throw MalformedRecord("manifest fields must be non-empty", line_no);
        e.target_path = target.is_absolute() ? target : base_dir / target;
        e.response_path = response.is_absolute() ? response : base_dir / response;
        entries.push_back(std::move(e));
    }
    return entries;
}

namespace detail {

inline void sigma_from(const std::vector<Ratio>& values, std::size_t excluded,
                       bool sample, SigmaColumn& out) {
    out.used = values.size();
    out.excluded = excluded;
    const std::size_t min_needed = sample ? 2 : 1;
    if (values.size() >= min_needed) out.sigma = stddev(values, sample);
}

}  // namespace detail

inline BatchSigma compute_batch_sigma(const std::vector<BatchRow>& rows, bool sample) {
    std::vector<Ratio> kappas, recalls, precisions;
    std::size_t kappa_excl = 0, recall_excl = 0, precision_excl = 0;
    for (const auto& row : rows) {
        if (!row.report) {
            ++kappa_excl;
            ++recall_excl;
            ++precision_excl;
            continue;
        }
        const PairReport& r = *row.report;
        if (r.agreement && !r.agreement->degenerate())
            kappas.push_back(r.agreement->kappa);
        else
            ++kappa_excl;
        if (!r.recall.is_degenerate()) recalls.push_back(r.recall); else ++recall_excl;
        if (!r.precision.is_degenerate())
            precisions.push_back(r.precision);
        else
            ++precision_excl;
    }
    BatchSigma sigma;
    detail::sigma_from(kappas, kappa_excl, sample, sigma.kappa);
    detail::sigma_from(recalls, recall_excl, sample, sigma.recall);
    detail::sigma_from(precisions, precision_excl, sample, sigma.precision);
    return sigma;
}

// Scores each manifest row independently; a row that fails to parse or
// validate becomes a flagged row and never aborts the batch. Output rows
// keep manifest order.
inline BatchReport score_batch(const std::filesystem::path& manifest_path,
                               const ReportOptions& options = {}) {
    std::ifstream in(manifest_path);
    if (!in) throw Error("cannot open manifest: " + manifest_path.string());
    const auto entries = parse_manifest(in, manifest_path.parent_path());

    BatchReport batch;
    batch.sample_convention = options.sample_stddev;
    for (const auto& e : entries) {
        BatchRow row;
        row.doc_id = e.doc_id;
        try {
            const Annotation target = parse_annotation_file(e.target_path);
            const Annotation response = parse_annotation_file(e.response_path);
            row.report = score_pair(target, response, e.doc_id);
        } catch (const Error& err) {
            row.error = err.what();
        }
        batch.rows.push_back(std::move(row));
    }
    batch.sigma = compute_batch_sigma(batch.rows, options.sample_stddev);
    return batch;
}

// ---------------------------------------------------------------------------
// Rendering: text

namespace detail {

// Degenerate link scores render as zero (their flag still travels with the
// report); degenerate chance-corrected scores render as a marked non-value.
inline std::string ir_decimal(const Ratio& r, int places) {
    return r.is_degenerate() ? Ratio(0, 1).to_decimal_string(places)
                             : r.to_decimal_string(places);
}

inline std::string kappa_decimal(const Ratio& r, int places) {
    return r.is_degenerate() ? "n/a" : r.to_decimal_string(places);
}

inline std::string exact_form(const Ratio& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline void render_grid(std::ostringstream& os, const LinkTable& t) {
    const auto cell = [](long long v) {
        std::ostringstream c;
        c << std::setw(8) << v;
        return c.str();
    };
    os << "                    target\n";
    os << "                    " << std::setw(8) << "+link" << std::setw(8) << "-link"
       << std::setw(8) << "sum" << '\n';
    os << "  response +link    " << cell(t.both) << cell(t.response_only)
       << cell(t.response_links()) << '\n';
    os << "  response -link    " << cell(t.target_only) << cell(t.neither)
       << cell(t.response_nonlinks()) << '\n';
    os << "  sum               " << cell(t.target_links()) << cell(t.target_nonlinks())
       << cell(t.total()) << '\n';
}

inline void render_metric_line(std::ostringstream& os, const std::string& name,
                               const Ratio& value, const std::string& decimal) {
    os << "  " << std::left << std::setw(16) << name << std::right << std::setw(12)
       << exact_form(value) << "  " << decimal << '\n';
}

inline void render_agreement(std::ostringstream& os, const AgreementResult& agr,
                             const ReportOptions& opt) {
    render_metric_line(os, "p_ao", agr.observed_agr,
                       ir_decimal(agr.observed_agr, opt.ir_places));
    render_metric_line(os, "p_ae", agr.expected_agr,
                       ir_decimal(agr.expected_agr, opt.ir_places));
    render_metric_line(os, "p_do", agr.observed_dis,
                       ir_decimal(agr.observed_dis, opt.ir_places));
    render_metric_line(os, "p_de", agr.expected_dis,
                       ir_decimal(agr.expected_dis, opt.ir_places));
    render_metric_line(os, "kappa", agr.kappa, kappa_decimal(agr.kappa, opt.kappa_places));
    render_metric_line(os, "alpha", agr.alpha, kappa_decimal(agr.alpha, opt.kappa_places));
}

inline void render_flags(std::ostringstream& os, const std::vector<std::string>& flags) {
    os << "flags: ";
    if (flags.empty()) {
        os << "none\n";
        return;
    }
    for (std::size_t i = 0; i < flags.size(); ++i) os << (i ? ", " : "") << flags[i];
    os << '\n';
}

}  // namespace detail

inline std::string render_text(const PairReport& rep, const ReportOptions& opt = {}) {
    std::ostringstream os;
    os << "pair: " << rep.doc_id << '\n';
    os << "orientation: target=" << rep.orientation.target
       << " (columns), response=" << rep.orientation.response << " (rows)\n";
    os << "markables: " << rep.markable_count << '\n';
    if (rep.table) {
        os << '\n';
        detail::render_grid(os, *rep.table);
    }
    os << '\n';
    detail::render_metric_line(os, "muc recall", rep.recall,
                               detail::ir_decimal(rep.recall, opt.ir_places));
    detail::render_metric_line(os, "muc precision", rep.precision,
                               detail::ir_decimal(rep.precision, opt.ir_places));
    if (rep.table) {
        detail::render_metric_line(os, "table recall", table_recall(*rep.table),
                                   detail::ir_decimal(table_recall(*rep.table), opt.ir_places));
        detail::render_metric_line(os, "table precision", table_precision(*rep.table),
                                   detail::ir_decimal(table_precision(*rep.table), opt.ir_places));
    }
    if (rep.agreement) detail::render_agreement(os, *rep.agreement, opt);
    if (rep.diagnostic) {
        os << "  neither (diagnostic recomputation): " << rep.diagnostic->from_target
           << " from target, " << rep.diagnostic->from_response << " from response\n";
    }
    detail::render_flags(os, rep.flags);
    return os.str();
}

inline std::string render_text(const TableReport& rep, const ReportOptions& opt = {}) {
    std::ostringstream os;
    os << "orientation: target=" << rep.table.orientation.target
       << " (columns), response=" << rep.table.orientation.response << " (rows)\n\n";
    detail::render_grid(os, rep.table);
    os << '\n';
    os << "declared orientation (target=" << rep.table.orientation.target << "):\n";
    detail::render_metric_line(os, "recall", rep.recall,
                               detail::ir_decimal(rep.recall, opt.ir_places));
    detail::render_metric_line(os, "precision", rep.precision,
                               detail::ir_decimal(rep.precision, opt.ir_places));
    os << "swapped orientation (target=" << rep.table.orientation.response << "):\n";
    detail::render_metric_line(os, "recall", rep.swapped_recall,
                               detail::ir_decimal(rep.swapped_recall, opt.ir_places));
    detail::render_metric_line(os, "precision", rep.swapped_precision,
                               detail::ir_decimal(rep.swapped_precision, opt.ir_places));
    if (rep.agreement) detail::render_agreement(os, *rep.agreement, opt);
    detail::render_flags(os, rep.flags);
    return os.str();
}

inline std::string render_text(const BatchReport& batch, const ReportOptions& opt = {}) {
    std::ostringstream os;
    os << std::left << std::setw(20) << "doc_id" << std::right << std::setw(8) << "kappa"
       << std::setw(10) << "recall" << std::setw(11) << "precision" << "  flags\n";
    for (const auto& row : batch.rows) {
        os << std::left << std::setw(20) << row.doc_id << std::right;
        if (!row.report) {
            os << std::setw(8) << "-" << std::setw(10) << "-" << std::setw(11) << "-"
               << "  error: " << row.error << '\n';
            continue;
        }
        const PairReport& r = *row.report;
        const std::string k = r.agreement
                                  ? detail::kappa_decimal(r.agreement->kappa, opt.kappa_places)
                                  : "n/a";
        os << std::setw(8) << k << std::setw(10)
           << detail::ir_decimal(r.recall, opt.ir_places) << std::setw(11)
           << detail::ir_decimal(r.precision, opt.ir_places);
        os << "  ";
        for (std::size_t i = 0; i < r.flags.size(); ++i) os << (i ? ", " : "") << r.flags[i];
        os << '\n';
    }
    const auto sigma_cell = [&](const SigmaColumn& col, int places) {
        return col.sigma ? render_decimal(*col.sigma, places) : std::string("n/a");
    };
    os << std::left << std::setw(20) << "sigma" << std::right << std::setw(8)
       << sigma_cell(batch.sigma.kappa, opt.kappa_places) << std::setw(10)
       << sigma_cell(batch.sigma.recall, opt.kappa_places) << std::setw(11)
       << sigma_cell(batch.sigma.precision, opt.kappa_places) << "  "
       << (batch.sample_convention ? "sample" : "population") << " convention; excluded: kappa "
       << batch.sigma.kappa.excluded << ", recall " << batch.sigma.recall.excluded
       << ", precision " << batch.sigma.precision.excluded << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Rendering: machine (JSON)

namespace detail {

inline nlohmann::json ratio_json(const Ratio& r, int places) {
    nlohmann::json j;
    j["num"] = r.num();
    j["den"] = r.den();
    j["degenerate"] = r.is_degenerate();
    if (r.is_degenerate())
        j["decimal"] = nullptr;
    else
        j["decimal"] = r.to_decimal_string(places);
    return j;
}

inline Ratio ratio_from_json(const nlohmann::json& j) {
    if (j.at("degenerate").get<bool>()) return Ratio::degenerate();
    return Ratio(j.at("num").get<long long>(), j.at("den").get<long long>());
}

inline nlohmann::json table_json(const LinkTable& t) {
    return nlohmann::json{{"both", t.both},
                          {"response_only", t.response_only},
                          {"target_only", t.target_only},
                          {"neither", t.neither},
                          {"total", t.total()},
                          {"negative_cell", t.negative_cell()},
                          {"orientation",
                           {{"target", t.orientation.target},
                            {"response", t.orientation.response}}}};
}

inline LinkTable table_from_json(const nlohmann::json& j) {
    LinkTable t;
    t.both = j.at("both").get<long long>();
    t.response_only = j.at("response_only").get<long long>();
    t.target_only = j.at("target_only").get<long long>();
    t.neither = j.at("neither").get<long long>();
    t.orientation.target = j.at("orientation").at("target").get<std::string>();
    t.orientation.response = j.at("orientation").at("response").get<std::string>();
    return t;
}

inline nlohmann::json agreement_json(const AgreementResult& a, const ReportOptions& opt) {
    return nlohmann::json{{"p_ao", ratio_json(a.observed_agr, opt.ir_places)},
                          {"p_ae", ratio_json(a.expected_agr, opt.ir_places)},
                          {"p_do", ratio_json(a.observed_dis, opt.ir_places)},
                          {"p_de", ratio_json(a.expected_dis, opt.ir_places)},
                          {"kappa", ratio_json(a.kappa, opt.kappa_places)},
                          {"alpha", ratio_json(a.alpha, opt.kappa_places)}};
}

inline AgreementResult agreement_from_json(const nlohmann::json& j) {
    AgreementResult a;
    a.observed_agr = ratio_from_json(j.at("p_ao"));
    a.expected_agr = ratio_from_json(j.at("p_ae"));
    a.observed_dis = ratio_from_json(j.at("p_do"));
    a.expected_dis = ratio_from_json(j.at("p_de"));
    a.kappa = ratio_from_json(j.at("kappa"));
    a.alpha = ratio_from_json(j.at("alpha"));
    return a;
}

inline nlohmann::json pair_json(const PairReport& rep, const ReportOptions& opt) {
    nlohmann::json j;
    j["doc_id"] = rep.doc_id;
    j["orientation"] = {{"target", rep.orientation.target},
                        {"response", rep.orientation.response}};
    j["markables"] = rep.markable_count;
    j["muc"] = {{"recall", ratio_json(rep.recall, opt.ir_places)},
                {"precision", ratio_json(rep.precision, opt.ir_places)}};
    j["link_table"] = rep.table ? table_json(*rep.table) : nlohmann::json(nullptr);
    j["agreement"] = rep.agreement ? agreement_json(*rep.agreement, opt)
                                   : nlohmann::json(nullptr);
    if (rep.diagnostic)
        j["neither_diagnostic"] = {{"from_target", rep.diagnostic->from_target},
                                   {"from_response", rep.diagnostic->from_response}};
    else
        j["neither_diagnostic"] = nullptr;
    j["flags"] = rep.flags;
    return j;
}

inline PairReport pair_from_json(const nlohmann::json& j) {
    PairReport rep;
    rep.doc_id = j.at("doc_id").get<std::string>();
    rep.orientation.target = j.at("orientation").at("target").get<std::string>();
    rep.orientation.response = j.at("orientation").at("response").get<std::string>();
    rep.markable_count = j.at("markables").get<std::size_t>();
    rep.recall = ratio_from_json(j.at("muc").at("recall"));
    rep.precision = ratio_from_json(j.at("muc").at("precision"));
    if (!j.at("link_table").is_null()) rep.table = table_from_json(j.at("link_table"));
    if (!j.at("agreement").is_null())
        rep.agreement = agreement_from_json(j.at("agreement"));
    if (!j.at("neither_diagnostic").is_null())
        rep.diagnostic =
            NeitherDiagnostic{j.at("neither_diagnostic").at("from_target").get<long long>(),
                              j.at("neither_diagnostic").at("from_response").get<long long>()};
    rep.flags = j.at("flags").get<std::vector<std::string>>();
    return rep;
}

}  // namespace detail

inline std::string render_machine(const PairReport& rep, const ReportOptions& opt = {}) {
    return detail::pair_json(rep, opt).dump(2) + "\n";
}

inline PairReport parse_machine_pair(const std::string& text) {
    return detail::pair_from_json(nlohmann::json::parse(text));
}

inline std::string render_machine(const TableReport& rep, const ReportOptions& opt = {}) {
    nlohmann::json j;
    j["link_table"] = detail::table_json(rep.table);
    j["declared"] = {{"recall", detail::ratio_json(rep.recall, opt.ir_places)},
                     {"precision", detail::ratio_json(rep.precision, opt.ir_places)}};
    j["swapped"] = {{"recall", detail::ratio_json(rep.swapped_recall, opt.ir_places)},
                    {"precision", detail::ratio_json(rep.swapped_precision, opt.ir_places)}};
    j["agreement"] = rep.agreement ? detail::agreement_json(*rep.agreement, opt)
                                   : nlohmann::json(nullptr);
    j["flags"] = rep.flags;
    return j.dump(2) + "\n";
}

inline std::string render_machine(const std::vector<TableReport>& reports,
                                  const ReportOptions& opt = {}) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep : reports)
        arr.push_back(nlohmann::json::parse(render_machine(rep, opt)));
    return arr.dump(2) + "\n";
}

inline std::string render_machine(const BatchReport& batch, const ReportOptions& opt = {}) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : batch.rows) {
        nlohmann::json r;
        r["doc_id"] = row.doc_id;
        if (row.report) {
            r["report"] = detail::pair_json(*row.report, opt);
            r["error"] = nullptr;
        } else {
            r["report"] = nullptr;
            r["error"] = row.error;
        }
        rows.push_back(std::move(r));
    }
    const auto sigma_json = [&](const SigmaColumn& col) {
        nlohmann::json s;
        s["sigma"] = col.sigma ? nlohmann::json(render_decimal(*col.sigma, opt.kappa_places))
                               : nlohmann::json(nullptr);
        s["used"] = col.used;
        s["excluded"] = col.excluded;
        return s;
    };
    nlohmann::json j;
    j["rows"] = std::move(rows);
    j["sigma"] = {{"kappa", sigma_json(batch.sigma.kappa)},
                  {"recall", sigma_json(batch.sigma.recall)},
                  {"precision", sigma_json(batch.sigma.precision)},
                  {"convention", batch.sample_convention ? "sample" : "population"}};
    return j.dump(2) + "\n";
}

inline BatchReport parse_machine_batch(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    BatchReport batch;
    batch.sample_convention =
        j.at("sigma").at("convention").get<std::string>() == "sample";
    for (const auto& r : j.at("rows")) {
        BatchRow row;
        row.doc_id = r.at("doc_id").get<std::string>();
        if (!r.at("report").is_null()) row.report = detail::pair_from_json(r.at("report"));
        if (!r.at("error").is_null()) row.error = r.at("error").get<std::string>();
        batch.rows.push_back(std::move(row));
    }
    batch.sigma = compute_batch_sigma(batch.rows, batch.sample_convention);
    return batch;
}

inline std::string render(const PairReport& rep, Format f, const ReportOptions& opt = {}) {
    return f == Format::Text ? render_text(rep, opt) : render_machine(rep, opt);
}

inline std::string render(const TableReport& rep, Format f, const ReportOptions& opt = {}) {
    return f == Format::Text ? render_text(rep, opt) : render_machine(rep, opt);
}

inline std::string render(const BatchReport& rep, Format f, const ReportOptions& opt = {}) {
    return f == Format::Text ? render_text(rep, opt) : render_machine(rep, opt);
}

}  // namespace coref
