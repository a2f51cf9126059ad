#ifndef BRADFORD_REPORT_HPP
#define BRADFORD_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bradford/bradfordizer.hpp"
#include "bradford/federation.hpp"
#include "bradford/ir_eval.hpp"
#include "bradford/pipeline.hpp"
#include "bradford/scattering.hpp"
#include "bradford/stat_tests.hpp"

// Serialization with pinned numeric formatting so identical inputs
// produce byte-identical reports: precisions to 3 decimals, percentages
// to 2, p-values and test statistics to 4 significant digits, scattering
// means to 2 decimals.

namespace bradford {

double round_decimals(double x, int decimals);
double round_significant(double x, int digits);
std::string fixed_string(double x, int decimals);

// "core" for zone 0, then "z2", "z3", ...
std::string zone_name(std::size_t index);

nlohmann::json to_json(const MergeReport &report);
nlohmann::json to_json(const TestResult &result);
nlohmann::json to_json(const ZoneEvaluation &eval);
nlohmann::json to_json(const BradfordMultipliers &m);

nlohmann::json ranking_json(const BradfordizedRanking &ranking, int topic, KeyMode key_mode);
nlohmann::json partition_json(const ZonePartition &partition, int topic);

// Core-zone source table, most productive first: "source,documents".
std::string core_sources_csv(const BradfordizedRanking &ranking, const ZonePartition &partition);

// One topic's cumulative curve: "rank,cumulative,log10_rank,log10_cumulative".
std::string scattering_csv(const ScatteringProfile &profile);

struct ClassScatteringSummary {
    DoctypeClass doctype_class = DoctypeClass::articles;
    std::optional<ScatteringSummary> summary; // absent when no topic had data
};
nlohmann::json scattering_summary_json(const std::vector<ClassScatteringSummary> &classes);

// The full evaluation report: accounting, per-class macro precisions,
// improvements, significance tests, per-topic figures. Test failures
// (insufficient data, zero variance, ...) are recorded as {"error": ...}
// instead of aborting the report.
nlohmann::json evaluation_report(const EvaluationRun &run, const PipelineOptions &options);

// Per-topic precision triples, one row per topic and class.
std::string per_topic_precision_csv(const EvaluationRun &run, std::size_t num_zones);

} // namespace bradford

#endif
