#include "bradford/bradfordizer.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

#include "bradford/errors.hpp"

namespace bradford {

namespace {

// Snap-mode boundary search. `block_ends` are cumulative document counts
// at the end of each source block (last entry = N). Returns the chosen
// cut positions (document counts), strictly increasing, one per internal
// zone boundary actually placed.
//
// The cuts minimize the summed deviation from the ideal boundaries at
// i*N/k; among minimizers the lexicographically smallest cut vector wins
// (ties toward the earlier boundary). Deviations are compared exactly on
// integers scaled by k.
std::vector<std::size_t> snap_cuts(const std::vector<std::size_t> &block_ends,
                                   std::size_t num_zones) {
    const std::size_t total = block_ends.back();
    const std::size_t blocks = block_ends.size();
    const std::size_t slots = num_zones - 1;

    // Internal boundaries only; 0 and N are never valid cuts.
    std::vector<std::size_t> candidates(block_ends.begin(), block_ends.end() - 1);

    if (blocks < num_zones) // too few blocks: one block per zone, rest empty
        return candidates;

    const std::size_t n_cand = candidates.size();
    const auto cost = [&](std::size_t slot, std::size_t cand) -> std::uint64_t {
        // |k*b - (slot+1)*N|, the deviation from ideal scaled by k
        const auto scaled = static_cast<std::int64_t>(num_zones * candidates[cand]);
        const auto ideal = static_cast<std::int64_t>((slot + 1) * total);
        return static_cast<std::uint64_t>(scaled > ideal ? scaled - ideal : ideal - scaled);
    };

    constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();
    // best[s][j]: minimal cost of filling slots s.. with candidates j..,
    // via best[s][j] = min(cost(s,j) + best[s+1][j+1], best[s][j+1])
    std::vector<std::vector<std::uint64_t>> best(slots + 1,
                                                 std::vector<std::uint64_t>(n_cand + 1, kInf));
    std::fill(best[slots].begin(), best[slots].end(), 0);
    for (std::size_t s = slots; s-- > 0;) {
        for (std::size_t j = n_cand - (slots - s) + 1; j-- > 0;) {
            const std::uint64_t take = cost(s, j) + best[s + 1][j + 1];
            const std::uint64_t keep = j + (slots - s) < n_cand ? best[s][j + 1] : kInf;
            best[s][j] = std::min(take, keep);
        }
    }

    std::vector<std::size_t> cuts;
    cuts.reserve(slots);
    std::size_t j = 0;
    for (std::size_t s = 0; s < slots; ++s) {
        while (cost(s, j) + best[s + 1][j + 1] != best[s][j])
            ++j; // first candidate achieving the optimum: lexicographic tie-break
        cuts.push_back(candidates[j]);
        ++j;
    }
    return cuts;
}

std::vector<std::size_t> strict_cuts(std::size_t total, std::size_t num_zones) {
    const std::size_t base = total / num_zones;
    const std::size_t rem = total % num_zones;
    std::vector<std::size_t> cuts;
    cuts.reserve(num_zones - 1);
    std::size_t acc = 0;
    for (std::size_t z = 0; z + 1 < num_zones; ++z) {
        acc += base + (z < rem ? 1 : 0);
        cuts.push_back(acc);
    }
    return cuts;
}

} // namespace

std::string_view to_string(ZoneMode m) { return m == ZoneMode::strict ? "strict" : "snap"; }

BradfordizedRanking bradfordize(const std::vector<Document> &docs, KeyMode key_mode) {
    BradfordizedRanking ranking;
    std::map<SourceKey, std::vector<std::string>> groups;

    for (const Document &doc : docs) {
        if (auto key = source_key(doc, key_mode))
            groups[*key].push_back(doc.doc_id);
        else
            ranking.skipped.push_back(doc.doc_id);
    }
    std::sort(ranking.skipped.begin(), ranking.skipped.end());

    std::vector<const std::pair<const SourceKey, std::vector<std::string>> *> order;
    order.reserve(groups.size());
    for (auto &group : groups) {
        std::sort(group.second.begin(), group.second.end());
        order.push_back(&group);
    }
    // productivity descending; the map already delivers keys ascending
    std::stable_sort(order.begin(), order.end(), [](const auto *a, const auto *b) {
        return a->second.size() > b->second.size();
    });

    std::size_t position = 1;
    std::size_t rank = 1;
    for (const auto *group : order) {
        for (const std::string &doc_id : group->second) {
            ranking.entries.push_back(
                {position++, doc_id, group->first, rank, group->second.size()});
        }
        ++rank;
    }
    return ranking;
}

ZonePartition partition_zones(const BradfordizedRanking &ranking, std::size_t num_zones,
                              ZoneMode mode) {
    if (num_zones < 2)
        throw DataError("num_zones must be at least 2, got " + std::to_string(num_zones));
    if (ranking.entries.empty())
        throw DataError("cannot partition an empty ranking");

    const std::size_t total = ranking.entries.size();
    std::vector<std::size_t> block_ends;
    for (std::size_t i = 0; i < total; ++i) {
        const bool last_of_block = i + 1 == total ||
                                   ranking.entries[i + 1].source_rank !=
                                       ranking.entries[i].source_rank;
        if (last_of_block)
            block_ends.push_back(i + 1);
    }

    std::vector<std::size_t> cuts = mode == ZoneMode::strict
                                        ? strict_cuts(total, num_zones)
                                        : snap_cuts(block_ends, num_zones);

    ZonePartition partition;
    partition.mode = mode;
    partition.zones.resize(num_zones);
    std::size_t begin = 0;
    for (std::size_t z = 0; z < num_zones; ++z) {
        const std::size_t end = z < cuts.size() ? cuts[z] : total;
        Zone &zone = partition.zones[z];
        zone.doc_ids.reserve(end - begin);
        std::size_t prev_rank = 0;
        for (std::size_t i = begin; i < end; ++i) {
            zone.doc_ids.push_back(ranking.entries[i].doc_id);
            if (ranking.entries[i].source_rank != prev_rank) {
                ++zone.source_count;
                prev_rank = ranking.entries[i].source_rank;
            }
        }
        if (zone.doc_ids.empty())
            partition.degenerate = true;
        begin = end;
    }
    return partition;
}

std::vector<std::string> core_documents(const ZonePartition &partition) {
    if (partition.zones.empty())
        return {};
    return partition.zones.front().doc_ids;
}

} // namespace bradford
