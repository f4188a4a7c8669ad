#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coref/annotation.hpp"
#include "coref/errors.hpp"

namespace coref {

// A set of disjoint, non-empty equivalence classes covering a universe of
// markables. Stored in canonical form (each class sorted, classes ordered
// by their smallest member) so that structurally equal partitions compare
// equal regardless of construction order. Immutable in practice: build via
// from_classes() or classes_of().
class Partition {
public:
    Partition() = default;

    static Partition from_classes(std::vector<std::vector<MarkableId>> classes) {
        for (auto& cls : classes) {
            if (cls.empty()) throw Error("partition class must be non-empty");
            std::sort(cls.begin(), cls.end());
            if (std::adjacent_find(cls.begin(), cls.end()) != cls.end())
                throw Error("partition class contains a repeated markable");
        }
        std::sort(classes.begin(), classes.end());
        // disjointness: after canonical sort, any overlap shows up between
        // the flattened neighbours
        std::vector<MarkableId> flat;
        for (const auto& cls : classes) flat.insert(flat.end(), cls.begin(), cls.end());
        std::sort(flat.begin(), flat.end());
        if (std::adjacent_find(flat.begin(), flat.end()) != flat.end())
            throw Error("partition classes are not disjoint");

        Partition p;
        p.classes_ = std::move(classes);
        p.universe_ = std::move(flat);
        return p;
    }

    const std::vector<std::vector<MarkableId>>& classes() const { return classes_; }

    // Sorted union of all classes.
    const std::vector<MarkableId>& universe() const { return universe_; }
    std::size_t universe_size() const { return universe_.size(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<std::vector<MarkableId>> classes_;
    std::vector<MarkableId> universe_;
};

// One equivalence class per distinct chain label. Label identity is
// discarded: the partition is a pure set of sets, so relabelling chains by
// any injection yields the same partition.
inline Partition classes_of(const Annotation& a) {
    std::map<std::string, std::vector<MarkableId>> by_label;
    for (const auto& m : a.markables()) by_label[a.chain_label(m.id)].push_back(m.id);

    std::vector<std::vector<MarkableId>> classes;
    classes.reserve(by_label.size());
    for (auto& [label, members] : by_label) classes.push_back(std::move(members));
    return Partition::from_classes(std::move(classes));
}

// Number of spanning-tree links needed to connect every class: a class of
// size k contributes k - 1, so the total is N - |classes|.
inline long long link_count(const Partition& p) {
    return static_cast<long long>(p.universe_size()) -
           static_cast<long long>(p.classes().size());
}

// Common refinement: x and y share a meet class iff they share a class in p
// and share a class in q. Its link count is the number of links both
// partitions agree on.
inline Partition meet(const Partition& p, const Partition& q) {
    if (p.universe() != q.universe())
        throw UniverseMismatch("meet requires identical universes");

    std::map<MarkableId, std::size_t> class_in_q;
    for (std::size_t j = 0; j < q.classes().size(); ++j)
        for (const auto& id : q.classes()[j]) class_in_q.emplace(id, j);

    std::vector<std::vector<MarkableId>> result;
    for (const auto& p_class : p.classes()) {
        std::map<std::size_t, std::vector<MarkableId>> groups;
        for (const auto& id : p_class) groups[class_in_q.at(id)].push_back(id);
        for (auto& [j, members] : groups) result.push_back(std::move(members));
    }
    return Partition::from_classes(std::move(result));
}

// True iff every class of `fine` is contained in some class of `coarse`.
inline bool refines(const Partition& fine, const Partition& coarse) {
    std::map<MarkableId, std::size_t> class_in_coarse;
    for (std::size_t j = 0; j < coarse.classes().size(); ++j)
        for (const auto& id : coarse.classes()[j]) class_in_coarse.emplace(id, j);

    for (const auto& cls : fine.classes()) {
        auto it = class_in_coarse.find(cls.front());
        if (it == class_in_coarse.end()) return false;
        for (const auto& id : cls) {
            auto jt = class_in_coarse.find(id);
            if (jt == class_in_coarse.end() || jt->second != it->second) return false;
        }
    }
    return true;
}

}  // namespace coref
