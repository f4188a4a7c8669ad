#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coref/errors.hpp"

namespace coref {

// Opaque identifier of a referring expression. Compared by exact equality;
// unique within one document's markable set.
struct MarkableId {
    std::string value;

    auto operator<=>(const MarkableId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const MarkableId& id) {
    return os << id.value;
}

// A referring expression selected for annotation. Surface string and
// document position are carried for display only; no metric reads them.
struct Markable {
    MarkableId id;
    std::optional<std::string> surface;
    std::optional<std::size_t> position;
};

// A total assignment of chain labels to one document's markables. Labels
// are opaque strings: "1" and "engine" are equally valid, and no ordering
// or arithmetic is ever applied to them. Immutable after construction.
class Annotation {
public:
    Annotation(std::string doc_id, std::vector<Markable> markables,
               std::map<MarkableId, std::string> chain_of)
        : doc_id_(std::move(doc_id)),
          markables_(std::move(markables)),
          chain_of_(std::move(chain_of)) {
        if (chain_of_.size() != markables_.size())
            throw Error("chain mapping must cover exactly the markable set");
        for (const auto& m : markables_) {
            if (m.id.value.empty()) throw Error("empty markable id");
            auto it = chain_of_.find(m.id);
            if (it == chain_of_.end())
                throw Error("no chain label for markable '" + m.id.value + "'");
            if (it->second.empty())
                throw Error("empty chain label for markable '" + m.id.value + "'");
        }
    }

    const std::string& doc_id() const { return doc_id_; }
    const std::vector<Markable>& markables() const { return markables_; }
    std::size_t size() const { return markables_.size(); }

    bool contains(const MarkableId& id) const { return chain_of_.count(id) != 0; }

    const std::string& chain_label(const MarkableId& id) const {
        auto it = chain_of_.find(id);
        if (it == chain_of_.end()) throw UnknownMarkable(id.value);
        return it->second;
    }

    // Markable ids in sorted order (the chain map's key order).
    std::vector<MarkableId> markable_ids() const {
        std::vector<MarkableId> ids;
        ids.reserve(chain_of_.size());
        for (const auto& [id, label] : chain_of_) ids.push_back(id);
        return ids;
    }

    std::size_t chain_count() const {
        std::set<std::string> labels;
        for (const auto& [id, label] : chain_of_) labels.insert(label);
        return labels.size();
    }

private:
    std::string doc_id_;
    std::vector<Markable> markables_;
    std::map<MarkableId, std::string> chain_of_;
};

// Parses the annotation TSV format: one `markable_id<TAB>chain_label`
// record per line, `#` starts a comment line, blank lines are skipped,
// UTF-8 throughout, no escaping (a tab cannot occur inside a field).
// Markable order follows file order; chain labels are kept verbatim.
inline Annotation parse_annotation(std::istream& in, std::string doc_id) {
    std::vector<Markable> markables;
    std::map<MarkableId, std::string> chain_of;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw MalformedRecord("expected `markable_id<TAB>chain_label`", line_no);
        if (line.find('\t', tab + 1) != std::string::npos)
            throw MalformedRecord("record has more than two fields", line_no);

        std::string id = line.substr(0, tab);
        std::string label = line.substr(tab + 1);
        if (id.empty())
            throw MalformedRecord("empty markable id", line_no);
        if (label.empty())
            throw MalformedRecord("blank chain label for markable '" + id + "'", line_no);

        MarkableId mid{std::move(id)};
        if (chain_of.count(mid)) throw DuplicateMarkable(mid.value, line_no);

        chain_of.emplace(mid, std::move(label));
        markables.push_back(Markable{std::move(mid), std::nullopt, markables.size()});
    }
    return Annotation(std::move(doc_id), std::move(markables), std::move(chain_of));
}

// Two annotations are commensurate iff they cover the identical markable-id
// set. Same cardinality is not enough: classes are compared member-wise, so
// the ids themselves must line up. Throws Incommensurate with the symmetric
// difference otherwise.
inline void check_commensurate(const Annotation& a, const Annotation& b) {
    const auto ids_a = a.markable_ids();
    const auto ids_b = b.markable_ids();

    std::vector<MarkableId> diff_a;
    std::vector<MarkableId> diff_b;
    std::set_difference(ids_a.begin(), ids_a.end(), ids_b.begin(), ids_b.end(),
                        std::back_inserter(diff_a));
    std::set_difference(ids_b.begin(), ids_b.end(), ids_a.begin(), ids_a.end(),
                        std::back_inserter(diff_b));
    if (diff_a.empty() && diff_b.empty()) return;

    std::vector<std::string> only_a;
    std::vector<std::string> only_b;
    for (const auto& id : diff_a) only_a.push_back(id.value);
    for (const auto& id : diff_b) only_b.push_back(id.value);
    throw Incommensurate(std::move(only_a), std::move(only_b));
}

}  // namespace coref

template <>
struct std::hash<coref::MarkableId> {
    std::size_t operator()(const coref::MarkableId& id) const noexcept {
        return std::hash<std::string>{}(id.value);
    }
};
