#include "bradford/report.hpp"

#include <cmath>
#include <cstdio>

#include "bradford/errors.hpp"

namespace bradford {

namespace {

// Significance tests over one comparison's paired vectors, as JSON.
nlohmann::json test_or_error(TestResult (*test)(const std::vector<std::pair<double, double>> &,
                                                double),
                             const std::vector<std::pair<double, double>> &pairs, double alpha) {
    try {
        return to_json(test(pairs, alpha));
    } catch (const DataError &e) {
        return nlohmann::json{{"error", e.what()}};
    }
}

TestResult wilcoxon_default(const std::vector<std::pair<double, double>> &pairs, double alpha) {
    return wilcoxon_signed_rank(pairs, alpha);
}

} // namespace

double round_decimals(double x, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(x * scale) / scale;
}

double round_significant(double x, int digits) {
    if (x == 0.0)
        return 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

std::string fixed_string(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    return buf;
}

std::string zone_name(std::size_t index) {
    return index == 0 ? std::string("core") : "z" + std::to_string(index + 1);
}

nlohmann::json to_json(const MergeReport &report) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto &[db, n] : report.input_counts)
        counts[db] = n;
    return {{"input_counts", counts},
            {"duplicates_removed", report.duplicates_removed},
            {"merged_count", report.merged_count}};
}

nlohmann::json to_json(const TestResult &result) {
    return {{"method", to_string(result.method)},
            {"statistic", round_significant(result.statistic, 4)},
            {"p_value", round_significant(result.p_value, 4)},
            {"n_effective", result.n_effective},
            {"zeros_dropped", result.zeros_dropped},
            {"alpha", result.alpha},
            {"significant", result.significant}};
}

nlohmann::json to_json(const ZoneEvaluation &eval) {
    nlohmann::json zones = nlohmann::json::array();
    for (std::size_t z = 0; z < eval.zones.size(); ++z) {
        zones.push_back({{"name", zone_name(z)},
                         {"precision", round_decimals(eval.zone_precision(z), 3)},
                         {"relevant", eval.zones[z].relevant},
                         {"total", eval.zones[z].total},
                         {"degenerate", static_cast<bool>(eval.degenerate_zones[z])}});
    }
    return {{"topic", eval.topic_number},
            {"class", to_string(eval.doctype_class)},
            {"baseline",
             {{"precision", round_decimals(eval.baseline_precision(), 3)},
              {"relevant", eval.baseline.relevant},
              {"total", eval.baseline.total}}},
            {"zones", zones}};
}

nlohmann::json to_json(const BradfordMultipliers &m) {
    nlohmann::json adjacent = nlohmann::json::array();
    for (const auto &r : m.adjacent) {
        if (r)
            adjacent.push_back(round_decimals(*r, 2));
        else
            adjacent.push_back(nullptr);
    }
    nlohmann::json out = {{"adjacent", adjacent}};
    if (m.outer_root)
        out["outer_root"] = round_decimals(*m.outer_root, 2);
    else
        out["outer_root"] = nullptr;
    return out;
}

nlohmann::json ranking_json(const BradfordizedRanking &ranking, int topic, KeyMode key_mode) {
    nlohmann::json entries = nlohmann::json::array();
    for (const RankingEntry &e : ranking.entries) {
        entries.push_back({{"position", e.position},
                           {"doc_id", e.doc_id},
                           {"source",
                            {{"kind", to_string(e.source.kind)}, {"key", e.source.key}}},
                           {"source_rank", e.source_rank},
                           {"source_productivity", e.source_productivity}});
    }
    return {{"topic", topic},
            {"key_mode", to_string(key_mode)},
            {"entries", entries},
            {"skipped", ranking.skipped}};
}

nlohmann::json partition_json(const ZonePartition &partition, int topic) {
    nlohmann::json zones = nlohmann::json::array();
    for (std::size_t z = 0; z < partition.zones.size(); ++z) {
        const Zone &zone = partition.zones[z];
        zones.push_back({{"name", zone_name(z)},
                         {"doc_count", zone.doc_count()},
                         {"source_count", zone.source_count},
                         {"doc_ids", zone.doc_ids}});
    }
    return {{"topic", topic},
            {"mode", to_string(partition.mode)},
            {"num_zones", partition.zones.size()},
            {"degenerate", partition.degenerate},
            {"zones", zones}};
}

std::string core_sources_csv(const BradfordizedRanking &ranking,
                             const ZonePartition &partition) {
    std::string csv = "source,documents\n";
    if (partition.zones.empty())
        return csv;
    const std::size_t core_docs = partition.zones.front().doc_count();
    std::size_t prev_rank = 0;
    for (std::size_t i = 0; i < core_docs; ++i) {
        const RankingEntry &e = ranking.entries[i];
        if (e.source_rank != prev_rank) {
            // keys are normalized and never contain quotes; commas do occur
            std::string key = e.source.key;
            if (key.find(',') != std::string::npos)
                key = "\"" + key + "\"";
            csv += key + "," + std::to_string(e.source_productivity) + "\n";
            prev_rank = e.source_rank;
        }
    }
    return csv;
}

std::string scattering_csv(const ScatteringProfile &profile) {
    std::string csv = "rank,cumulative,log10_rank,log10_cumulative\n";
    for (const auto &[rank, cumulative] : profile.points) {
        csv += std::to_string(rank) + "," + std::to_string(cumulative) + "," +
               fixed_string(std::log10(static_cast<double>(rank)), 6) + "," +
               fixed_string(std::log10(static_cast<double>(cumulative)), 6) + "\n";
    }
    return csv;
}

nlohmann::json scattering_summary_json(const std::vector<ClassScatteringSummary> &classes) {
    nlohmann::json out = nlohmann::json::object();
    for (const ClassScatteringSummary &cls : classes) {
        nlohmann::json entry;
        if (!cls.summary) {
            entry = {{"topics", 0}};
        } else {
            const ScatteringSummary &s = *cls.summary;
            nlohmann::json zone_means = nlohmann::json::object();
            for (std::size_t z = 0; z < s.mean_zone_source_counts.size(); ++z)
                zone_means[zone_name(z)] = round_decimals(s.mean_zone_source_counts[z], 2);
            entry = {{"topics", s.topic_count},
                     {"documents_mean", round_decimals(s.mean_total_docs, 2)},
                     {"sources_mean", round_decimals(s.mean_total_sources, 2)},
                     {"zone_sources_mean", zone_means},
                     {"multipliers", to_json(s.multipliers)}};
        }
        out[std::string(to_string(cls.doctype_class))] = entry;
    }
    return out;
}

namespace {

nlohmann::json class_report(const std::vector<const TopicClassResult *> &results,
                            const PipelineOptions &options) {
    std::vector<ZoneEvaluation> evals;
    for (const TopicClassResult *r : results)
        if (r->evaluation)
            evals.push_back(*r->evaluation);

    if (evals.empty())
        return {{"topics_evaluated", 0}};

    const AggregateEvaluation agg = aggregate(evals);
    nlohmann::json out;
    out["topics_evaluated"] = evals.size();
    out["baseline"] = round_decimals(agg.macro_baseline_precision, 3);
    for (std::size_t z = 0; z < agg.macro_zone_precisions.size(); ++z)
        out[zone_name(z)] = round_decimals(agg.macro_zone_precisions[z], 3);

    const auto improvement = [](const std::optional<double> &pct) -> nlohmann::json {
        if (!pct)
            return nullptr;
        return round_decimals(*pct, 2);
    };
    out["improvement_core_vs_baseline_pct"] = improvement(agg.improvement_core_vs_baseline_pct);
    out["improvement_core_vs_z3_pct"] = improvement(agg.improvement_core_vs_z3_pct);
    out["mean_topic_improvement_core_vs_baseline_pct"] =
        improvement(agg.mean_topic_improvement_core_vs_baseline.mean_pct);
    out["mean_topic_improvement_core_vs_z3_pct"] =
        improvement(agg.mean_topic_improvement_core_vs_z3.mean_pct);
    out["topics_excluded_from_mean_improvement"] = {
        {"core_vs_baseline", agg.mean_topic_improvement_core_vs_baseline.topics_excluded},
        {"core_vs_z3", agg.mean_topic_improvement_core_vs_z3.topics_excluded}};

    out["wilcoxon"] = {
        {"core_vs_baseline",
         test_or_error(&wilcoxon_default, agg.pairs_core_vs_baseline, options.alpha)},
        {"core_vs_z3", test_or_error(&wilcoxon_default, agg.pairs_core_vs_z3, options.alpha)}};
    out["paired_t"] = {
        {"core_vs_baseline",
         test_or_error(&paired_t_test, agg.pairs_core_vs_baseline, options.alpha)},
        {"core_vs_z3", test_or_error(&paired_t_test, agg.pairs_core_vs_z3, options.alpha)}};

    nlohmann::json per_topic = nlohmann::json::array();
    for (const ZoneEvaluation &e : agg.per_topic)
        per_topic.push_back(to_json(e));
    out["per_topic"] = per_topic;
    return out;
}

} // namespace

nlohmann::json evaluation_report(const EvaluationRun &run, const PipelineOptions &options) {
    std::vector<const TopicClassResult *> articles;
    std::vector<const TopicClassResult *> monographs;
    for (const TopicResult &t : run.topics) {
        articles.push_back(&t.articles);
        monographs.push_back(&t.monographs);
    }

    return {{"config",
             {{"alpha", options.alpha},
              {"num_zones", options.num_zones},
              {"unjudged", to_string(options.unjudged)},
              {"zone_mode", to_string(options.zone_mode)}}},
            {"accounting",
             {{"documents_total", run.accounting.documents_total},
              {"documents_bradfordized", run.accounting.documents_bradfordized},
              {"journal_articles", run.accounting.journal_articles},
              {"monographs", run.accounting.monographs},
              {"skipped", run.accounting.skipped},
              {"judged_missing_from_corpus", run.accounting.judged_missing_from_corpus}}},
            {"articles", class_report(articles, options)},
            {"monographs", class_report(monographs, options)}};
}

std::string per_topic_precision_csv(const EvaluationRun &run, std::size_t num_zones) {
    std::string csv = "topic,class";
    for (std::size_t z = 0; z < num_zones; ++z)
        csv += "," + zone_name(z);
    csv += ",baseline\n";

    const auto add_row = [&](const TopicClassResult &r) {
        if (!r.evaluation)
            return;
        const ZoneEvaluation &e = *r.evaluation;
        csv += std::to_string(e.topic_number) + "," + std::string(to_string(e.doctype_class));
        for (std::size_t z = 0; z < e.zones.size(); ++z)
            csv += "," + fixed_string(e.zone_precision(z), 3);
        csv += "," + fixed_string(e.baseline_precision(), 3) + "\n";
    };
    for (const TopicResult &t : run.topics)
        add_row(t.articles);
    for (const TopicResult &t : run.topics)
        add_row(t.monographs);
    return csv;
}

} // namespace bradford
