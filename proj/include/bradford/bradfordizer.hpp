#ifndef BRADFORD_BRADFORDIZER_HPP
#define BRADFORD_BRADFORDIZER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bradford/corpus.hpp"

namespace bradford {

struct RankingEntry {
    std::size_t position = 0; // 1-based within the ranking
    std::string doc_id;
    SourceKey source;
    std::size_t source_rank = 0;         // 1-based, most productive first
    std::size_t source_productivity = 0; // block length

    bool operator==(const RankingEntry &) const = default;
};

// A result list reordered into contiguous source blocks by descending
// productivity. Documents without a resolvable source key are listed in
// `skipped` (ascending), not ranked.
struct BradfordizedRanking {
    std::vector<RankingEntry> entries;
    std::vector<std::string> skipped;

    bool operator==(const BradfordizedRanking &) const = default;
};

enum class ZoneMode { strict, snap };

std::string_view to_string(ZoneMode m);

struct Zone {
    std::vector<std::string> doc_ids; // ranking order
    std::size_t source_count = 0;     // distinct sources touching the zone

    std::size_t doc_count() const { return doc_ids.size(); }
    bool operator==(const Zone &) const = default;
};

// The ranking cut into zones (core, z2, z3 for the default three).
// strict: zone document counts differ by at most one, blocks may split.
// snap:   boundaries sit on block boundaries, no source spans two zones.
struct ZonePartition {
    std::vector<Zone> zones;
    ZoneMode mode = ZoneMode::snap;
    // True when a zone came out empty (fewer blocks than zones in snap
    // mode, or fewer documents than zones).
    bool degenerate = false;

    bool operator==(const ZonePartition &) const = default;
};

// White's two-step sort: group documents by source key, order sources by
// descending productivity (ties: ascending key), doc ids ascending inside
// each block. A pure function of the input multiset; input order never
// matters.
BradfordizedRanking bradfordize(const std::vector<Document> &docs, KeyMode key_mode);

// Cut a ranking into `num_zones` zones of (approximately) equal document
// counts. snap mode picks block boundaries minimizing the total distance
// to the ideal cuts at i*N/k, ties resolved toward the earlier boundary.
// Throws DataError on an empty ranking or num_zones < 2.
ZonePartition partition_zones(const BradfordizedRanking &ranking, std::size_t num_zones,
                              ZoneMode mode);

// Zone 1 of the partition: the Bradford nucleus, in ranking order.
std::vector<std::string> core_documents(const ZonePartition &partition);

} // namespace bradford

#endif
