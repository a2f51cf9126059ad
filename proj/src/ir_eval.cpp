#include "bradford/ir_eval.hpp"

#include "bradford/errors.hpp"

namespace bradford {

std::string_view to_string(DoctypeClass c) {
    return c == DoctypeClass::articles ? "articles" : "monographs";
}

DocType doctype_of(DoctypeClass c) {
    return c == DoctypeClass::articles ? DocType::journal_article : DocType::monograph;
}

KeyMode key_mode_of(DoctypeClass c) {
    return c == DoctypeClass::articles ? KeyMode::journal : KeyMode::publisher;
}

std::string_view to_string(UnjudgedPolicy p) {
    return p == UnjudgedPolicy::nonrelevant ? "nonrelevant" : "exclude";
}

ZoneEvaluation evaluate_topic(const ZonePartition &partition, const Qrels &qrels, int topic,
                              DoctypeClass doctype_class, UnjudgedPolicy policy) {
    ZoneEvaluation eval;
    eval.topic_number = topic;
    eval.doctype_class = doctype_class;
    eval.zones.reserve(partition.zones.size());

    for (const Zone &zone : partition.zones) {
        ZoneCounts counts;
        for (const std::string &doc_id : zone.doc_ids) {
            const auto grade = qrels.grade(topic, doc_id);
            if (!grade && policy == UnjudgedPolicy::exclude)
                continue;
            ++counts.total;
            if (grade && *grade > 0)
                ++counts.relevant;
        }
        eval.baseline.relevant += counts.relevant;
        eval.baseline.total += counts.total;
        eval.degenerate_zones.push_back(counts.total == 0);
        eval.zones.push_back(counts);
    }
    return eval;
}

double improvement_pct(double p_new, double p_ref) {
    if (p_ref <= 0.0)
        throw UndefinedImprovementError("improvement undefined for reference precision " +
                                        std::to_string(p_ref));
    return (p_new - p_ref) / p_ref * 100.0;
}

namespace {

std::optional<double> checked_improvement(double p_new, double p_ref) {
    if (p_ref <= 0.0)
        return std::nullopt;
    return improvement_pct(p_new, p_ref);
}

MeanOfImprovements mean_of_improvements(const std::vector<std::pair<double, double>> &pairs) {
    MeanOfImprovements out;
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto &[p_new, p_ref] : pairs) {
        if (p_ref > 0.0) {
            sum += improvement_pct(p_new, p_ref);
            ++n;
        } else {
            ++out.topics_excluded;
        }
    }
    if (n > 0)
        out.mean_pct = sum / static_cast<double>(n);
    return out;
}

} // namespace

AggregateEvaluation aggregate(const std::vector<ZoneEvaluation> &evals) {
    if (evals.empty())
        throw DataError("cannot aggregate zero topic evaluations");
    const std::size_t zones = evals.front().zones.size();
    const DoctypeClass cls = evals.front().doctype_class;

    AggregateEvaluation agg;
    agg.per_topic = evals;
    agg.doctype_class = cls;
    agg.macro_zone_precisions.assign(zones, 0.0);

    for (const ZoneEvaluation &e : evals) {
        if (e.doctype_class != cls)
            throw DataError("cannot aggregate mixed doctype classes");
        if (e.zones.size() != zones)
            throw DataError("cannot aggregate evaluations with differing zone counts");
        for (std::size_t z = 0; z < zones; ++z)
            agg.macro_zone_precisions[z] += e.zone_precision(z);
        agg.macro_baseline_precision += e.baseline_precision();
        agg.pairs_core_vs_baseline.emplace_back(e.core_precision(), e.baseline_precision());
        agg.pairs_core_vs_z3.emplace_back(e.core_precision(), e.last_zone_precision());
    }

    const auto n = static_cast<double>(evals.size());
    for (double &p : agg.macro_zone_precisions)
        p /= n;
    agg.macro_baseline_precision /= n;

    agg.improvement_core_vs_baseline_pct =
        checked_improvement(agg.macro_zone_precisions.front(), agg.macro_baseline_precision);
    agg.improvement_core_vs_z3_pct =
        checked_improvement(agg.macro_zone_precisions.front(), agg.macro_zone_precisions.back());
    agg.mean_topic_improvement_core_vs_baseline = mean_of_improvements(agg.pairs_core_vs_baseline);
    agg.mean_topic_improvement_core_vs_z3 = mean_of_improvements(agg.pairs_core_vs_z3);
    return agg;
}

} // namespace bradford
