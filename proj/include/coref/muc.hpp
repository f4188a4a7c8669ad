#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coref/annotation.hpp"
#include "coref/partition.hpp"
#include "coref/ratio.hpp"

namespace coref {

// Link-based score of one target equivalence class against a response
// annotation. A class of size k needs k - 1 spanning-tree links; the
// response's grouping of the class into |p(C)| pieces leaves |p(C)| - 1 of
// them missing.
struct ClassScore {
    std::vector<MarkableId> target_class;  // sorted members of C
    std::size_t partition_size = 0;        // |p(C)|
    long long missing_links = 0;           // |p(C)| - 1
    long long target_links = 0;            // |C| - 1
    Ratio recall;                          // 0/0 degenerate when |C| = 1
};

// Groups the members of a target class by their response chain label,
// yielding the sub-partition p(C). Every member must be a markable of the
// response.
inline std::vector<std::vector<MarkableId>> partition_of_class(
    const std::vector<MarkableId>& target_class, const Annotation& response) {
    std::map<std::string, std::vector<MarkableId>> groups;
    for (const auto& id : target_class) groups[response.chain_label(id)].push_back(id);

    std::vector<std::vector<MarkableId>> result;
    result.reserve(groups.size());
    for (auto& [label, members] : groups) result.push_back(std::move(members));
    return result;
}

// Recall of one class: (|C| - |p(C)|) / (|C| - 1). A singleton class has
// no links to find; its score is the degenerate 0/0 and it contributes
// nothing to either aggregate sum.
inline ClassScore class_recall(const std::vector<MarkableId>& target_class,
                               const Annotation& response) {
    const auto parts = partition_of_class(target_class, response);

    ClassScore score;
    score.target_class = target_class;
    std::sort(score.target_class.begin(), score.target_class.end());
    score.partition_size = parts.size();
    score.missing_links = static_cast<long long>(parts.size()) - 1;
    score.target_links = static_cast<long long>(target_class.size()) - 1;
    score.recall = score.target_links == 0
                       ? Ratio::degenerate()
                       : Ratio(static_cast<long long>(target_class.size()) -
                                   static_cast<long long>(parts.size()),
                               score.target_links);
    return score;
}

// Document recall: sum of found links over sum of target links, taken over
// every target class. Singletons add zero to both sums. When the target is
// all singletons there are no links to find and the result is the
// degenerate 0/0 (rendered as zero, but flagged).
inline Ratio muc_recall(const Annotation& target, const Annotation& response) {
    check_commensurate(target, response);

    long long found = 0;
    long long total = 0;
    const Partition target_classes = classes_of(target);
    for (const auto& cls : target_classes.classes()) {
        const auto parts = partition_of_class(cls, response);
        found += static_cast<long long>(cls.size()) - static_cast<long long>(parts.size());
        total += static_cast<long long>(cls.size()) - 1;
    }
    if (total == 0) return Ratio::degenerate();
    return Ratio(found, total);
}

// Precision is the converse: partition the response classes by the target.
// Identically equal to muc_recall with the arguments swapped.
inline Ratio muc_precision(const Annotation& target, const Annotation& response) {
    return muc_recall(response, target);
}

}  // namespace coref
