#pragma once

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coref/annotation.hpp"
#include "coref/errors.hpp"
#include "coref/muc.hpp"
#include "coref/partition.hpp"
#include "coref/ratio.hpp"

namespace coref {

// Names which annotation plays which role in a link table. Columns belong
// to the target, rows to the response. Nothing in this library defaults the
// orientation silently; every table carries its own.
struct Orientation {
    std::string target;    // column coding
    std::string response;  // row coding

    bool operator==(const Orientation&) const = default;
};

// The 2x2 link coincidence matrix over a commensurate pair: of the N - 1
// possible spanning-tree links, how many each side found.
//
//                      target
//                    +link  -link
//   response +link   both          response_only
//            -link   target_only   neither
//
// `neither` is computed as total - both - response_only - target_only and
// can come out negative when the disagreeing links of the two sides exceed
// N - 1; negative_cell() flags that state. Such a table is still returned
// for inspection, but chance-corrected agreement refuses it.
struct LinkTable {
    long long both = 0;           // links found by both codings
    long long response_only = 0;  // found by the response only
    long long target_only = 0;    // found by the target only
    long long neither = 0;        // found by neither coding
    Orientation orientation;

    long long total() const { return both + response_only + target_only + neither; }

    long long response_links() const { return both + response_only; }      // row marginal +link
    long long response_nonlinks() const { return target_only + neither; }  // row marginal -link
    long long target_links() const { return both + target_only; }          // column marginal +link
    long long target_nonlinks() const { return response_only + neither; }  // column marginal -link

    bool negative_cell() const {
        return both < 0 || response_only < 0 || target_only < 0 || neither < 0;
    }

    // Same table with the roles exchanged: (both, response_only,
    // target_only, neither) -> (both, target_only, response_only, neither).
    LinkTable transposed() const {
        return LinkTable{both, target_only, response_only, neither,
                         Orientation{orientation.response, orientation.target}};
    }

    bool operator==(const LinkTable&) const = default;
};

// Builds the link table for a commensurate pair with at least two shared
// markables. `both` is the link count of the common refinement; the rest
// follow from each side's own link count and the fixed total N - 1.
inline LinkTable build_link_table(const Annotation& target, const Annotation& response) {
    check_commensurate(target, response);
    if (target.size() < 2) throw TooFewMarkables(target.size());

    const Partition pt = classes_of(target);
    const Partition pr = classes_of(response);
    const long long agreed = link_count(meet(pt, pr));
    const long long total = static_cast<long long>(target.size()) - 1;

    LinkTable t;
    t.both = agreed;
    t.target_only = link_count(pt) - agreed;
    t.response_only = link_count(pr) - agreed;
    t.neither = total - t.both - t.response_only - t.target_only;
    t.orientation = Orientation{target.doc_id(), response.doc_id()};
    return t;
}

// Wraps pre-tabulated counts (for reproducing published matrices without
// the underlying annotations). Order follows the table rows: both,
// response_only, target_only, neither.
inline LinkTable table_from_counts(long long both, long long response_only,
                                   long long target_only, long long neither,
                                   Orientation orientation) {
    if (both + response_only + target_only + neither < 1)
        throw Error("link table total must be at least 1");
    return LinkTable{both, response_only, target_only, neither, std::move(orientation)};
}

// Link recall under the table's declared orientation: both / (both +
// target_only). Degenerate 0/0 when the target found no links.
inline Ratio table_recall(const LinkTable& t) {
    if (t.target_links() == 0) return Ratio::degenerate();
    return Ratio(t.both, t.target_links());
}

// Link precision: both / (both + response_only); degenerate when the
// response found no links.
inline Ratio table_precision(const LinkTable& t) {
    if (t.response_links() == 0) return Ratio::degenerate();
    return Ratio(t.both, t.response_links());
}

// Reads pre-tabulated tables from a stream: one `a,b,c,d` record per line
// (both, response_only, target_only, neither), `#` comments and blank lines
// skipped. Every table carries the given orientation.
inline std::vector<LinkTable> tables_from_stream(std::istream& in, Orientation orientation) {
    std::vector<LinkTable> tables;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        std::vector<long long> cells;
        std::stringstream record(line);
        std::string field;
        bool bad = false;
        while (std::getline(record, field, ',')) {
            try {
                std::size_t used = 0;
                cells.push_back(std::stoll(field, &used));
                if (used != field.size()) bad = true;
            } catch (const std::exception&) {
                bad = true;
            }
        }
        if (bad || cells.size() != 4)
            throw MalformedRecord("expected four comma-separated integers a,b,c,d", line_no);
        tables.push_back(table_from_counts(cells[0], cells[1], cells[2], cells[3], orientation));
    }
    return tables;
}

// Diagnostic recomputation of `neither` as |classes(x) ∩ classes(meet)| - 1,
// from each side. On some inputs (e.g. target {123}, response {12|3}) the
// two sides disagree with each other and with the normative value, so this
// is reported alongside the table and never overrides it.
struct NeitherDiagnostic {
    long long from_target = 0;
    long long from_response = 0;

    bool agrees_with(long long neither) const {
        return from_target == neither && from_response == neither;
    }
};

inline NeitherDiagnostic neither_by_intersection(const Partition& target,
                                                 const Partition& response) {
    const Partition common = meet(target, response);
    const auto shared_classes = [&common](const Partition& side) {
        long long shared = 0;
        for (const auto& cls : side.classes())
            if (std::binary_search(common.classes().begin(), common.classes().end(), cls))
                ++shared;
        return shared;
    };
    return NeitherDiagnostic{shared_classes(target) - 1, shared_classes(response) - 1};
}

}  // namespace coref
