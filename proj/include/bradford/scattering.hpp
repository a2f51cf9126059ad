#ifndef BRADFORD_SCATTERING_HPP
#define BRADFORD_SCATTERING_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bradford/bradfordizer.hpp"

namespace bradford {

// Estimates of the Bradford multiplier n from the 1 : n : n^2 zone law.
// The law fixes the ratio but not the estimator, so two are reported:
// the (k-1)-th root of the outer ratio j_last/j_first, and the raw
// adjacent ratios. Entries are absent when a denominator is zero.
struct BradfordMultipliers {
    std::optional<double> outer_root;           // (j_k / j_1)^(1/(k-1))
    std::vector<std::optional<double>> adjacent; // j_2/j_1, j_3/j_2, ...
};

BradfordMultipliers bradford_multipliers(const std::vector<double> &zone_source_counts);

// Cumulative scattering curve of one bradfordized ranking plus the zone
// source counts the partition induced.
struct ScatteringProfile {
    // (source_rank, cumulative documents), one point per source,
    // strictly increasing in both coordinates.
    std::vector<std::pair<std::size_t, std::size_t>> points;
    std::vector<std::size_t> zone_source_counts; // core, z2, z3, ...
    std::size_t total_sources = 0;
    std::size_t total_docs = 0;
    BradfordMultipliers multipliers;
};

// Throws DataError on an empty ranking or when the partition does not
// belong to the ranking.
ScatteringProfile scattering_profile(const BradfordizedRanking &ranking,
                                     const ZonePartition &partition);

// Base-10 logs of the cumulative curve, ready for log-log plotting.
std::vector<std::pair<double, double>> loglog_points(const ScatteringProfile &profile);

// Cross-topic arithmetic means. Zones are averaged positionally; all
// profiles must have the same zone count. Throws DataError on an empty
// input.
struct ScatteringSummary {
    std::size_t topic_count = 0;
    double mean_total_docs = 0.0;
    double mean_total_sources = 0.0;
    std::vector<double> mean_zone_source_counts;
    BradfordMultipliers multipliers; // computed from the mean zone counts
};

ScatteringSummary aggregate_profiles(const std::vector<ScatteringProfile> &profiles);

} // namespace bradford

#endif
