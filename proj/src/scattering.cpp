#include "bradford/scattering.hpp"

#include <cmath>

#include "bradford/errors.hpp"

namespace bradford {

BradfordMultipliers bradford_multipliers(const std::vector<double> &zone_source_counts) {
    BradfordMultipliers m;
    const std::size_t k = zone_source_counts.size();
    if (k < 2)
        return m;
    if (zone_source_counts.front() > 0.0 && zone_source_counts.back() > 0.0) {
        m.outer_root = std::pow(zone_source_counts.back() / zone_source_counts.front(),
                                1.0 / static_cast<double>(k - 1));
    }
    m.adjacent.reserve(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (zone_source_counts[i] > 0.0)
            m.adjacent.push_back(zone_source_counts[i + 1] / zone_source_counts[i]);
        else
            m.adjacent.push_back(std::nullopt);
    }
    return m;
}

ScatteringProfile scattering_profile(const BradfordizedRanking &ranking,
                                     const ZonePartition &partition) {
    if (ranking.entries.empty())
        throw DataError("cannot profile an empty ranking");

    std::size_t partition_docs = 0;
    for (const Zone &zone : partition.zones)
        partition_docs += zone.doc_count();
    if (partition_docs != ranking.entries.size())
        throw DataError("partition does not match ranking: " + std::to_string(partition_docs) +
                        " vs " + std::to_string(ranking.entries.size()) + " documents");

    ScatteringProfile profile;
    profile.total_docs = ranking.entries.size();
    for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
        const bool last_of_block = i + 1 == ranking.entries.size() ||
                                   ranking.entries[i + 1].source_rank !=
                                       ranking.entries[i].source_rank;
        if (last_of_block)
            profile.points.emplace_back(ranking.entries[i].source_rank, i + 1);
    }
    profile.total_sources = profile.points.size();

    std::vector<double> counts;
    counts.reserve(partition.zones.size());
    for (const Zone &zone : partition.zones) {
        profile.zone_source_counts.push_back(zone.source_count);
        counts.push_back(static_cast<double>(zone.source_count));
    }
    profile.multipliers = bradford_multipliers(counts);
    return profile;
}

std::vector<std::pair<double, double>> loglog_points(const ScatteringProfile &profile) {
    std::vector<std::pair<double, double>> out;
    out.reserve(profile.points.size());
    for (const auto &[rank, cumulative] : profile.points)
        out.emplace_back(std::log10(static_cast<double>(rank)),
                         std::log10(static_cast<double>(cumulative)));
    return out;
}

ScatteringSummary aggregate_profiles(const std::vector<ScatteringProfile> &profiles) {
    if (profiles.empty())
        throw DataError("cannot aggregate zero scattering profiles");

    ScatteringSummary summary;
    summary.topic_count = profiles.size();
    const std::size_t zones = profiles.front().zone_source_counts.size();
    summary.mean_zone_source_counts.assign(zones, 0.0);

    for (const ScatteringProfile &p : profiles) {
        if (p.zone_source_counts.size() != zones)
            throw DataError("profiles disagree on zone count");
        summary.mean_total_docs += static_cast<double>(p.total_docs);
        summary.mean_total_sources += static_cast<double>(p.total_sources);
        for (std::size_t z = 0; z < zones; ++z)
            summary.mean_zone_source_counts[z] += static_cast<double>(p.zone_source_counts[z]);
    }
    const auto n = static_cast<double>(profiles.size());
    summary.mean_total_docs /= n;
    summary.mean_total_sources /= n;
    for (double &c : summary.mean_zone_source_counts)
        c /= n;
    summary.multipliers = bradford_multipliers(summary.mean_zone_source_counts);
    return summary;
}

} // namespace bradford
