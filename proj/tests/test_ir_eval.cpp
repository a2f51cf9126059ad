#include <doctest.h>

#include <algorithm>
#include <random>

#include "bradford/errors.hpp"
#include "bradford/ir_eval.hpp"

using namespace bradford;

namespace {

// partition with the given zones of doc ids
ZonePartition partition_of(const std::vector<std::vector<std::string>> &zones) {
    ZonePartition p;
    for (const auto &ids : zones) {
        Zone z;
        z.doc_ids = ids;
        z.source_count = 1;
        p.zones.push_back(z);
    }
    return p;
}

std::vector<std::string> zone_ids(const std::string &prefix, int n) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i)
        ids.push_back(prefix + std::to_string(i));
    return ids;
}

} // namespace

TEST_CASE("uniform relevance extremes") {
    const ZonePartition p =
        partition_of({zone_ids("a", 4), zone_ids("b", 4), zone_ids("c", 4)});
    Qrels all, none;
    for (const Zone &z : p.zones)
        for (const std::string &id : z.doc_ids) {
            all.add(7, id, 1);
            none.add(7, id, 0);
        }

    const ZoneEvaluation rel = evaluate_topic(p, all, 7, DoctypeClass::articles);
    for (std::size_t z = 0; z < 3; ++z)
        CHECK(rel.zone_precision(z) == doctest::Approx(1.0));
    CHECK(rel.baseline_precision() == doctest::Approx(1.0));

    const ZoneEvaluation irr = evaluate_topic(p, none, 7, DoctypeClass::articles);
    for (std::size_t z = 0; z < 3; ++z)
        CHECK(irr.zone_precision(z) == doctest::Approx(0.0));
}

TEST_CASE("counting fixture: 30 documents, 6/3/1 relevant per zone of 10") {
    const ZonePartition p =
        partition_of({zone_ids("a", 10), zone_ids("b", 10), zone_ids("c", 10)});
    Qrels qrels;
    for (int i = 0; i < 10; ++i) {
        qrels.add(5, "a" + std::to_string(i), i < 6 ? 1 : 0);
        qrels.add(5, "b" + std::to_string(i), i < 3 ? 1 : 0);
        qrels.add(5, "c" + std::to_string(i), i < 1 ? 1 : 0);
    }
    const ZoneEvaluation eval = evaluate_topic(p, qrels, 5, DoctypeClass::articles);
    CHECK(eval.zone_precision(0) == doctest::Approx(0.6));
    CHECK(eval.zone_precision(1) == doctest::Approx(0.3));
    CHECK(eval.zone_precision(2) == doctest::Approx(0.1));
    CHECK(eval.baseline_precision() == doctest::Approx(10.0 / 30.0));
    CHECK(eval.baseline.relevant == 10);
    CHECK(eval.baseline.total == 30);
}

TEST_CASE("unjudged documents") {
    const ZonePartition p = partition_of({{"a0", "a1"}, {"b0", "b1"}, {"c0", "c1"}});
    Qrels qrels;
    qrels.add(9, "a0", 1);
    qrels.add(9, "b0", 1);
    qrels.add(9, "c0", 0);

    SUBCASE("count as nonrelevant by default") {
        const ZoneEvaluation eval = evaluate_topic(p, qrels, 9, DoctypeClass::articles);
        CHECK(eval.zones[0].total == 2);
        CHECK(eval.zone_precision(0) == doctest::Approx(0.5));
        CHECK(eval.zone_precision(2) == doctest::Approx(0.0));
    }
    SUBCASE("exclude policy drops them") {
        const ZoneEvaluation eval =
            evaluate_topic(p, qrels, 9, DoctypeClass::articles, UnjudgedPolicy::exclude);
        CHECK(eval.zones[0].total == 1);
        CHECK(eval.zone_precision(0) == doctest::Approx(1.0));
        CHECK(eval.zones[2].total == 1);
        CHECK(eval.baseline.total == 3);
    }
    SUBCASE("adding an unjudged document never raises precision") {
        std::mt19937 rng(3);
        for (int round = 0; round < 50; ++round) {
            ZonePartition base = partition_of({zone_ids("x", 5), zone_ids("y", 5)});
            Qrels q;
            for (const Zone &z : base.zones)
                for (const std::string &id : z.doc_ids)
                    q.add(1, id, std::uniform_int_distribution<int>(0, 1)(rng));
            const double before =
                evaluate_topic(base, q, 1, DoctypeClass::articles).zone_precision(0);
            base.zones[0].doc_ids.push_back("unjudged-extra");
            const double after =
                evaluate_topic(base, q, 1, DoctypeClass::articles).zone_precision(0);
            CHECK(after <= before);
        }
    }
}

TEST_CASE("degenerate zone reports zero precision with a flag") {
    const ZonePartition p = partition_of({{"a0", "a1"}, {}, {}});
    Qrels qrels;
    qrels.add(2, "a0", 1);
    const ZoneEvaluation eval = evaluate_topic(p, qrels, 2, DoctypeClass::monographs);
    CHECK(eval.zone_precision(1) == 0.0);
    CHECK(eval.degenerate_zones[1]);
    CHECK_FALSE(eval.degenerate_zones[0]);
}

TEST_CASE("improvement percentage arithmetic") {
    CHECK(improvement_pct(0.310, 0.239) == doctest::Approx(29.71).epsilon(0.001));
    CHECK(improvement_pct(0.310, 0.174) == doctest::Approx(78.16).epsilon(0.001));
    CHECK(improvement_pct(0.42, 0.42) == doctest::Approx(0.0));
    CHECK(improvement_pct(0.1, 0.2) == doctest::Approx(-50.0));
    CHECK_THROWS_AS(improvement_pct(0.3, 0.0), UndefinedImprovementError);
}

TEST_CASE("baseline is bounded by the zone precisions") {
    std::mt19937 rng(17);
    for (int round = 0; round < 100; ++round) {
        ZonePartition p;
        Qrels q;
        int id = 0;
        for (int z = 0; z < 3; ++z) {
            Zone zone;
            const int n = std::uniform_int_distribution<int>(1, 12)(rng);
            for (int i = 0; i < n; ++i) {
                const std::string doc = "d" + std::to_string(id++);
                zone.doc_ids.push_back(doc);
                q.add(4, doc, std::uniform_int_distribution<int>(0, 1)(rng));
            }
            p.zones.push_back(zone);
        }
        const ZoneEvaluation eval = evaluate_topic(p, q, 4, DoctypeClass::articles);
        std::vector<double> precisions = {eval.zone_precision(0), eval.zone_precision(1),
                                          eval.zone_precision(2)};
        const auto [lo, hi] = std::minmax_element(precisions.begin(), precisions.end());
        CHECK(eval.baseline_precision() >= *lo - 1e-12);
        CHECK(eval.baseline_precision() <= *hi + 1e-12);
    }
}

TEST_CASE("precision ignores document order within zones") {
    ZonePartition p = partition_of({zone_ids("a", 6), zone_ids("b", 6)});
    Qrels q;
    for (int i = 0; i < 6; ++i) {
        q.add(3, "a" + std::to_string(i), i % 2);
        q.add(3, "b" + std::to_string(i), (i + 1) % 2);
    }
    const ZoneEvaluation before = evaluate_topic(p, q, 3, DoctypeClass::articles);
    std::mt19937 rng(1);
    std::shuffle(p.zones[0].doc_ids.begin(), p.zones[0].doc_ids.end(), rng);
    std::shuffle(p.zones[1].doc_ids.begin(), p.zones[1].doc_ids.end(), rng);
    const ZoneEvaluation after = evaluate_topic(p, q, 3, DoctypeClass::articles);
    CHECK(before.zone_precision(0) == after.zone_precision(0));
    CHECK(before.zone_precision(1) == after.zone_precision(1));
}

TEST_CASE("aggregation over topics") {
    const auto make_eval = [](int topic, std::vector<std::pair<int, int>> zone_rel_total) {
        ZoneEvaluation e;
        e.topic_number = topic;
        e.doctype_class = DoctypeClass::articles;
        for (const auto &[rel, total] : zone_rel_total) {
            e.zones.push_back({static_cast<std::size_t>(rel), static_cast<std::size_t>(total)});
            e.degenerate_zones.push_back(total == 0);
            e.baseline.relevant += rel;
            e.baseline.total += total;
        }
        return e;
    };

    SUBCASE("single topic aggregates to itself") {
        const auto e = make_eval(1, {{6, 10}, {3, 10}, {1, 10}});
        const AggregateEvaluation agg = aggregate({e});
        CHECK(agg.macro_zone_precisions[0] == doctest::Approx(0.6));
        CHECK(agg.macro_baseline_precision == doctest::Approx(1.0 / 3.0));
        REQUIRE(agg.improvement_core_vs_baseline_pct.has_value());
        CHECK(*agg.improvement_core_vs_baseline_pct == doctest::Approx(80.0));
        CHECK(agg.pairs_core_vs_z3.size() == 1);
    }
    SUBCASE("macro means are unweighted") {
        const auto e1 = make_eval(1, {{2, 10}, {2, 10}, {2, 10}}); // baseline 0.2
        const auto e2 = make_eval(2, {{30, 100}, {30, 100}, {30, 100}}); // baseline 0.3
        const AggregateEvaluation agg = aggregate({e1, e2});
        CHECK(agg.macro_baseline_precision == doctest::Approx(0.25));
    }
    SUBCASE("mean of per-topic improvements excludes undefined references") {
        const auto e1 = make_eval(1, {{5, 10}, {1, 10}, {2, 10}});
        const auto e2 = make_eval(2, {{5, 10}, {1, 10}, {0, 10}}); // z3 precision 0
        const AggregateEvaluation agg = aggregate({e1, e2});
        CHECK(agg.mean_topic_improvement_core_vs_z3.topics_excluded == 1);
        REQUIRE(agg.mean_topic_improvement_core_vs_z3.mean_pct.has_value());
        CHECK(*agg.mean_topic_improvement_core_vs_z3.mean_pct == doctest::Approx(150.0));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(aggregate({}), DataError);
        auto mixed1 = make_eval(1, {{1, 2}, {1, 2}, {1, 2}});
        auto mixed2 = make_eval(2, {{1, 2}, {1, 2}, {1, 2}});
        mixed2.doctype_class = DoctypeClass::monographs;
        CHECK_THROWS_AS(aggregate({mixed1, mixed2}), DataError);
    }
}
