#ifndef BRADFORD_IR_EVAL_HPP
#define BRADFORD_IR_EVAL_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bradford/bradfordizer.hpp"
#include "bradford/corpus.hpp"

namespace bradford {

// The two document classes evaluated separately throughout: articles are
// keyed by journal, monographs by publisher. Never pooled.
enum class DoctypeClass { articles, monographs };

std::string_view to_string(DoctypeClass c);
DocType doctype_of(DoctypeClass c);
KeyMode key_mode_of(DoctypeClass c);

enum class UnjudgedPolicy { nonrelevant, exclude };

std::string_view to_string(UnjudgedPolicy p);

struct ZoneCounts {
    std::size_t relevant = 0;
    std::size_t total = 0;

    double precision() const {
        return total == 0 ? 0.0
                          : static_cast<double>(relevant) / static_cast<double>(total);
    }
    bool operator==(const ZoneCounts &) const = default;
};

// Per-topic, per-class precision figures. Zone precisions are
// relevant/total; an empty zone reports 0 and is flagged degenerate so
// paired vectors stay aligned across topics. Baseline counts are the
// sums over all zones.
struct ZoneEvaluation {
    int topic_number = 0;
    DoctypeClass doctype_class = DoctypeClass::articles;
    std::vector<ZoneCounts> zones;    // core, z2, z3, ...
    ZoneCounts baseline;
    std::vector<bool> degenerate_zones;

    double zone_precision(std::size_t z) const { return zones.at(z).precision(); }
    double core_precision() const { return zones.front().precision(); }
    double last_zone_precision() const { return zones.back().precision(); }
    double baseline_precision() const { return baseline.precision(); }
};

// Judged-relevant share of each zone. Under the default nonrelevant
// policy every zone document counts toward the total; under exclude,
// unjudged documents leave both counters.
ZoneEvaluation evaluate_topic(const ZonePartition &partition, const Qrels &qrels, int topic,
                              DoctypeClass doctype_class,
                              UnjudgedPolicy policy = UnjudgedPolicy::nonrelevant);

// (p_new - p_ref) / p_ref * 100. Throws UndefinedImprovementError when
// the reference is zero.
double improvement_pct(double p_new, double p_ref);

// Mean of a per-topic ratio over the topics where it is defined.
struct MeanOfImprovements {
    std::optional<double> mean_pct; // absent when no topic qualifies
    std::size_t topics_excluded = 0;
};

struct AggregateEvaluation {
    std::vector<ZoneEvaluation> per_topic;
    DoctypeClass doctype_class = DoctypeClass::articles;

    std::vector<double> macro_zone_precisions; // unweighted means over topics
    double macro_baseline_precision = 0.0;

    // Headline figures: ratio of macro means (absent when the reference
    // macro precision is zero).
    std::optional<double> improvement_core_vs_baseline_pct;
    std::optional<double> improvement_core_vs_z3_pct; // z3 = last zone

    // Alternative aggregation, reported alongside: mean of per-topic
    // improvements over topics with a positive reference precision.
    MeanOfImprovements mean_topic_improvement_core_vs_baseline;
    MeanOfImprovements mean_topic_improvement_core_vs_z3;

    // Per-topic (a, b) precision pairs for the significance tests.
    std::vector<std::pair<double, double>> pairs_core_vs_baseline;
    std::vector<std::pair<double, double>> pairs_core_vs_z3;
};

// Macro means, improvements, and paired vectors over one class's topics.
// Throws DataError on an empty list or mixed doctype classes.
AggregateEvaluation aggregate(const std::vector<ZoneEvaluation> &evals);

} // namespace bradford

#endif
