#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "coref/report.hpp"
#include "test_support.hpp"

using namespace coref;
using test_support::load_fixture;
using test_support::make_annotation;

namespace {

const std::filesystem::path kFixtures = COREF_FIXTURES_DIR;

std::vector<Ratio> hundredths(const std::vector<int>& cents) {
    std::vector<Ratio> out;
    for (int c : cents) out.emplace_back(c, 100);
    return out;
}

// Published fifteen-narrative score columns.
const std::vector<int> kKappaColumn = {85, 65, 72, 89, 89, 83, 84, 75,
                                       79, 74, 80, 93, 86, 84, 85};
const std::vector<int> kRecallColumn = {96, 90, 93, 94, 95, 94, 91, 88,
                                        92, 90, 93, 97, 95, 93, 96};
const std::vector<int> kPrecisionColumn = {96, 93, 94, 98, 99, 97, 96, 96,
                                           95, 92, 93, 98, 96, 96, 93};

}  // namespace

TEST_CASE("population standard deviation of the published columns") {
    CHECK(render_decimal(stddev(hundredths(kKappaColumn)), 2) == "0.07");
    CHECK(render_decimal(stddev(hundredths(kRecallColumn)), 2) == "0.02");
    CHECK(render_decimal(stddev(hundredths(kPrecisionColumn)), 2) == "0.02");
    // the sample convention agrees for two of the columns but pushes the
    // recall column over the rounding boundary (0.0256 -> 0.03)
    CHECK(render_decimal(stddev(hundredths(kKappaColumn), true), 2) == "0.07");
    CHECK(render_decimal(stddev(hundredths(kRecallColumn), true), 2) == "0.03");
    CHECK(render_decimal(stddev(hundredths(kPrecisionColumn), true), 2) == "0.02");
}

TEST_CASE("stddev edge cases") {
    CHECK(stddev({Ratio(1, 2), Ratio(1, 2), Ratio(1, 2)}) == 0.0);
    CHECK(stddev({Ratio(0, 1), Ratio(1, 1)}) == 0.5);
    CHECK(stddev({Ratio(3, 4)}) == 0.0);  // single value, population convention
    CHECK_THROWS_AS(stddev({}), EmptyList);
    CHECK_THROWS_AS(sample_variance({Ratio(1, 2)}), Error);
    CHECK(population_variance(hundredths({0, 100})) == Ratio(1, 4));
}

TEST_CASE("score_pair assembles the full report") {
    const PairReport rep = score_pair(kFixtures / "trains_ext_ca1.tsv",
                                      kFixtures / "trains_ext_ca3.tsv");
    CHECK(rep.markable_count == 11);
    CHECK(rep.orientation.target == "trains_ext_ca1");
    CHECK(rep.orientation.response == "trains_ext_ca3");
    CHECK(rep.recall == Ratio(6, 7));
    CHECK(rep.precision == Ratio(6, 7));
    REQUIRE(rep.table.has_value());
    CHECK(rep.table->both == 6);
    REQUIRE(rep.agreement.has_value());
    CHECK(rep.agreement->kappa == Ratio(11, 21));
    CHECK(rep.flags.empty());
    CHECK_FALSE(rep.all_degenerate());
}

TEST_CASE("identical files score perfectly") {
    const PairReport rep =
        score_pair(kFixtures / "trains_ca1.tsv", kFixtures / "trains_ca1.tsv");
    CHECK(rep.recall == Ratio(1, 1));
    CHECK(rep.precision == Ratio(1, 1));
    REQUIRE(rep.agreement.has_value());
    CHECK(rep.agreement->kappa == Ratio(1, 1));
}

TEST_CASE("identical all-singleton files are degenerate everywhere") {
    const PairReport rep =
        score_pair(kFixtures / "singletons.tsv", kFixtures / "singletons.tsv");
    CHECK(rep.recall.is_degenerate());
    CHECK(rep.precision.is_degenerate());
    REQUIRE(rep.agreement.has_value());
    CHECK(rep.agreement->degenerate());
    CHECK(rep.all_degenerate());
}

TEST_CASE("a single-markable pair reports scores but no table") {
    const Annotation a = make_annotation("a", {{"only", "1"}});
    const PairReport rep = score_pair(a, a, "tiny");
    CHECK(rep.recall.is_degenerate());
    CHECK(rep.precision.is_degenerate());
    CHECK_FALSE(rep.table.has_value());
    CHECK_FALSE(rep.agreement.has_value());
    CHECK(std::find(rep.flags.begin(), rep.flags.end(), "too-few-markables") !=
          rep.flags.end());
    CHECK(rep.all_degenerate());
    CHECK(render(rep, Format::Text).find("muc recall") != std::string::npos);
}

TEST_CASE("negative-cell pairs keep the table but refuse kappa") {
    const Annotation t = make_annotation("t", {{"1", "a"}, {"2", "a"}, {"3", "b"}, {"4", "b"}});
    const Annotation r = make_annotation("r", {{"1", "x"}, {"2", "y"}, {"3", "x"}, {"4", "y"}});
    const PairReport rep = score_pair(t, r, "crossing");
    REQUIRE(rep.table.has_value());
    CHECK(rep.table->negative_cell());
    CHECK_FALSE(rep.agreement.has_value());
    CHECK(std::find(rep.flags.begin(), rep.flags.end(), "negative-cell") != rep.flags.end());
    CHECK(std::find(rep.flags.begin(), rep.flags.end(), "kappa-refused-negative-cell") !=
          rep.flags.end());
    CHECK_FALSE(rep.all_degenerate());  // recall/precision are plain zeros here
}

TEST_CASE("text render shows the grid with its marginals") {
    const PairReport rep = score_pair(kFixtures / "trains_ext_ca1.tsv",
                                      kFixtures / "trains_ext_ca3.tsv");
    const std::string text = render(rep, Format::Text);
    for (const char* needle :
         {"target=trains_ext_ca1 (columns)", "response=trains_ext_ca3 (rows)",
          "0.857", "0.52", "kappa"})
        CHECK(text.find(needle) != std::string::npos);
    // marginals 7 / 3 / 7 / 3 and total 10 all present in the grid rows
    CHECK(text.find("       6       1       7") != std::string::npos);
    CHECK(text.find("       1       2       3") != std::string::npos);
    CHECK(text.find("       7       3      10") != std::string::npos);
}

TEST_CASE("published table renders its five marginals") {
    const TableReport rep =
        make_table_report(table_from_counts(166, 19, 13, 44, {"R1", "R2"}));
    const std::string text = render(rep, Format::Text);
    for (const char* needle : {"185", "57", "179", "63", "242", "0.927", "0.897", "0.65"})
        CHECK(text.find(needle) != std::string::npos);
}

TEST_CASE("machine output round-trips to identical ratios") {
    const PairReport rep = score_pair(kFixtures / "trains_ext_ca1.tsv",
                                      kFixtures / "trains_ext_ca3.tsv");
    const PairReport back = parse_machine_pair(render(rep, Format::Machine));
    CHECK(back.recall == rep.recall);
    CHECK(back.precision == rep.precision);
    REQUIRE(back.table.has_value());
    CHECK(*back.table == *rep.table);
    REQUIRE(back.agreement.has_value());
    CHECK(back.agreement->kappa == rep.agreement->kappa);
    CHECK(back.agreement->alpha == rep.agreement->alpha);
    CHECK(back.agreement->observed_agr == rep.agreement->observed_agr);
    CHECK(back.agreement->expected_agr == rep.agreement->expected_agr);
    CHECK(back.flags == rep.flags);
    CHECK(back.doc_id == rep.doc_id);
}

TEST_CASE("machine output round-trips degenerate scores") {
    const PairReport rep =
        score_pair(kFixtures / "singletons.tsv", kFixtures / "singletons.tsv");
    const PairReport back = parse_machine_pair(render(rep, Format::Machine));
    CHECK(back.recall.is_degenerate());
    CHECK(back.agreement->kappa.is_degenerate());
}

TEST_CASE("batch keeps manifest order and computes the sigma row") {
    const BatchReport batch = score_batch(kFixtures / "manifest.tsv");
    REQUIRE(batch.rows.size() == 3);
    CHECK(batch.rows[0].doc_id == "trains");
    CHECK(batch.rows[1].doc_id == "trains_ext");
    CHECK(batch.rows[2].doc_id == "brown_self");
    REQUIRE(batch.rows[0].report.has_value());
    CHECK(batch.rows[0].report->recall == Ratio(6, 7));
    CHECK(batch.rows[2].report->recall == Ratio(1, 1));
    CHECK(batch.sigma.recall.used == 3);
    CHECK(batch.sigma.recall.excluded == 0);
    REQUIRE(batch.sigma.kappa.sigma.has_value());
}

TEST_CASE("failing rows are flagged and excluded, never fatal") {
    const BatchReport batch = score_batch(kFixtures / "manifest_with_errors.tsv");
    REQUIRE(batch.rows.size() == 4);
    CHECK(batch.rows[0].report.has_value());
    CHECK_FALSE(batch.rows[1].report.has_value());  // duplicate markable
    CHECK_FALSE(batch.rows[2].report.has_value());  // missing file
    CHECK_FALSE(batch.rows[3].report.has_value());  // incommensurate
    CHECK(batch.rows[1].error.find("duplicate") != std::string::npos);
    CHECK(batch.rows[3].error.find("incommensurate") != std::string::npos);
    CHECK(batch.sigma.recall.used == 1);
    CHECK(batch.sigma.recall.excluded == 3);
    const std::string text = render(batch, Format::Text);
    CHECK(text.find("error:") != std::string::npos);
}

TEST_CASE("single-document batch has sigma zero") {
    const BatchReport batch = [] {
        BatchReport b;
        BatchRow row;
        row.doc_id = "only";
        row.report = score_pair(kFixtures / "trains_ca1.tsv", kFixtures / "trains_ca2.tsv");
        b.rows.push_back(row);
        b.sigma = compute_batch_sigma(b.rows, false);
        return b;
    }();
    REQUIRE(batch.sigma.kappa.sigma.has_value());
    CHECK(*batch.sigma.kappa.sigma == 0.0);
}

TEST_CASE("empty batch renders a header and nothing else") {
    BatchReport batch;
    batch.sigma = compute_batch_sigma(batch.rows, false);
    const std::string text = render(batch, Format::Text);
    CHECK(text.find("doc_id") != std::string::npos);
    CHECK_FALSE(batch.sigma.kappa.sigma.has_value());
}

TEST_CASE("batch machine output parses back") {
    const BatchReport batch = score_batch(kFixtures / "manifest.tsv");
    const BatchReport back = parse_machine_batch(render(batch, Format::Machine));
    REQUIRE(back.rows.size() == batch.rows.size());
    for (std::size_t i = 0; i < back.rows.size(); ++i) {
        CHECK(back.rows[i].doc_id == batch.rows[i].doc_id);
        CHECK(back.rows[i].report->recall == batch.rows[i].report->recall);
    }
}

TEST_CASE("manifest parser validates records") {
    {
        std::istringstream in("only_two\tfields\n");
        CHECK_THROWS_AS(parse_manifest(in, "."), MalformedRecord);
    }
    {
        std::istringstream in("# comment\n\nid\ta.tsv\tb.tsv\n");
        const auto entries = parse_manifest(in, "/base");
        REQUIRE(entries.size() == 1);
        CHECK(entries[0].doc_id == "id");
        CHECK(entries[0].target_path == std::filesystem::path("/base/a.tsv"));
    }
    {
        std::istringstream in("id\t/abs/a.tsv\tb.tsv\n");
        const auto entries = parse_manifest(in, "/base");
        CHECK(entries[0].target_path == std::filesystem::path("/abs/a.tsv"));
        CHECK(entries[0].response_path == std::filesystem::path("/base/b.tsv"));
    }
}

TEST_CASE("precision options control rendering") {
    const PairReport rep = score_pair(kFixtures / "trains_ca1.tsv",
                                      kFixtures / "trains_ca2.tsv");
    ReportOptions opt;
    opt.ir_places = 2;
    const std::string text = render(rep, Format::Text, opt);
    CHECK(text.find("0.86") != std::string::npos);
    CHECK(text.find("0.857") == std::string::npos);
}
