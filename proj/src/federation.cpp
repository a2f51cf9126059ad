#include "bradford/federation.hpp"

#include <unordered_set>

#include "bradford/errors.hpp"

namespace bradford {

std::pair<std::vector<Document>, MergeReport>
merge_result_sets(const std::vector<ResultSet> &lists) {
    std::vector<Document> merged;
    MergeReport report;
    std::unordered_set<std::string> seen;

    for (const auto &[database_id, docs] : lists) {
        report.input_counts[database_id] += docs.size();
        std::unordered_set<std::string> within;
        within.reserve(docs.size());
        for (const Document &doc : docs) {
            if (!within.insert(doc.doc_id).second)
                throw DataError("duplicate doc_id \"" + doc.doc_id +
                                "\" within result set \"" + database_id + "\"");
            if (seen.insert(doc.doc_id).second)
                merged.push_back(doc);
            else
                ++report.duplicates_removed;
        }
    }
    report.merged_count = merged.size();
    return {std::move(merged), report};
}

} // namespace bradford
