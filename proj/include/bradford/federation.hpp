#ifndef BRADFORD_FEDERATION_HPP
#define BRADFORD_FEDERATION_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bradford/corpus.hpp"

namespace bradford {

// Accounting for one merge: merged_count + duplicates_removed always
// equals the sum of input_counts.
struct MergeReport {
    std::map<std::string, std::size_t> input_counts;
    std::size_t duplicates_removed = 0;
    std::size_t merged_count = 0;
};

using ResultSet = std::pair<std::string, std::vector<Document>>;

// Combine per-database result lists into one deduplicated document set.
// The first occurrence of a doc_id wins, scanning lists in the given
// order; list order is the caller's database priority and only decides
// which duplicate copy survives. Throws DataError when a doc_id repeats
// within a single input list.
std::pair<std::vector<Document>, MergeReport>
merge_result_sets(const std::vector<ResultSet> &lists);

} // namespace bradford

#endif
