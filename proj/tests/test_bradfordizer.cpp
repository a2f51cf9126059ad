#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bradford/bradfordizer.hpp"
#include "bradford/errors.hpp"
#include "support/oracles.hpp"

using namespace bradford;

namespace {

Document article(const std::string &id, const std::string &issn) {
    Document d;
    d.doc_id = id;
    d.doctype = DocType::journal_article;
    d.issn = issn;
    return d;
}

// n articles per journal, ids derived from the journal tag
std::vector<Document> corpus_with_counts(const std::vector<std::pair<std::string, int>> &counts) {
    std::vector<Document> docs;
    for (const auto &[journal, n] : counts)
        for (int i = 0; i < n; ++i)
            docs.push_back(article(journal + "-" + std::to_string(i), journal));
    return docs;
}

std::vector<std::size_t> block_sizes_of(const BradfordizedRanking &ranking) {
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
        if (i == 0 || ranking.entries[i].source_rank != ranking.entries[i - 1].source_rank)
            sizes.push_back(0);
        ++sizes.back();
    }
    return sizes;
}

// A ranking with the given block sizes, descending, for partition tests.
BradfordizedRanking ranking_with_blocks(std::vector<std::size_t> sizes) {
    std::sort(sizes.rbegin(), sizes.rend());
    std::vector<Document> docs;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        char journal[16];
        std::snprintf(journal, sizeof(journal), "j%03zu", b);
        for (std::size_t i = 0; i < sizes[b]; ++i) {
            char id[32];
            std::snprintf(id, sizeof(id), "%s-d%03zu", journal, i);
            docs.push_back(article(id, journal));
        }
    }
    return bradfordize(docs, KeyMode::journal);
}

std::vector<std::size_t> zone_sizes(const ZonePartition &p) {
    std::vector<std::size_t> sizes;
    for (const Zone &z : p.zones)
        sizes.push_back(z.doc_count());
    return sizes;
}

} // namespace

TEST_CASE("productivity ordering matches the classic core-journal table") {
    // journal counts as in the informetrics core-journal example
    const auto docs = corpus_with_counts({{"Scientometrics", 1413},
                                          {"JASIS", 218},
                                          {"Nauchno", 110},
                                          {"REDC", 96},
                                          {"JIS", 87}});
    const BradfordizedRanking ranking = bradfordize(docs, KeyMode::journal);
    REQUIRE(ranking.entries.size() == 1924);
    CHECK(ranking.skipped.empty());
    CHECK(ranking.entries.front().source.key == "scientometrics");
    CHECK(ranking.entries.front().source_rank == 1);
    CHECK(ranking.entries.front().source_productivity == 1413);
    const RankingEntry &second_block = ranking.entries[1413];
    CHECK(second_block.source.key == "jasis");
    CHECK(second_block.source_rank == 2);
    CHECK(second_block.source_productivity == 218);
}

TEST_CASE("single journal and tie-breaking") {
    const auto one = bradfordize(corpus_with_counts({{"Only", 4}}), KeyMode::journal);
    for (const RankingEntry &e : one.entries)
        CHECK(e.source_rank == 1);

    const auto tied = bradfordize(corpus_with_counts({{"B", 2}, {"A", 2}}), KeyMode::journal);
    CHECK(tied.entries[0].source.key == "a"); // lexicographic tie-break
    CHECK(tied.entries[2].source.key == "b");
}

TEST_CASE("documents without keys are skipped, in order") {
    std::vector<Document> docs = corpus_with_counts({{"J", 2}});
    Document bare;
    bare.doc_id = "zz-no-source";
    bare.doctype = DocType::journal_article;
    docs.push_back(bare);
    Document bare2 = bare;
    bare2.doc_id = "aa-no-source";
    docs.push_back(bare2);

    const BradfordizedRanking ranking = bradfordize(docs, KeyMode::journal);
    CHECK(ranking.entries.size() == 2);
    CHECK(ranking.skipped == std::vector<std::string>{"aa-no-source", "zz-no-source"});
}

TEST_CASE("bradfordize equals the count-and-sort oracle on random corpora") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> n_docs(1, 400);
    std::uniform_int_distribution<int> n_sources(1, 60);

    for (int round = 0; round < 50; ++round) {
        const int docs_n = n_docs(rng);
        const int sources_n = n_sources(rng);
        std::vector<Document> docs;
        std::vector<std::pair<SourceKey, std::string>> assignments;
        for (int i = 0; i < docs_n; ++i) {
            const int s = std::uniform_int_distribution<int>(0, sources_n - 1)(rng);
            char issn[16];
            std::snprintf(issn, sizeof(issn), "1000-%04d", s);
            char id[16];
            std::snprintf(id, sizeof(id), "d%05d", i);
            docs.push_back(article(id, issn));
            assignments.push_back({SourceKey{SourceKind::journal, issn}, id});
        }

        const BradfordizedRanking ranking = bradfordize(docs, KeyMode::journal);
        const auto expected = oracles::bradford_blocks(assignments);

        std::size_t pos = 0;
        REQUIRE(ranking.entries.size() == static_cast<std::size_t>(docs_n));
        for (std::size_t b = 0; b < expected.size(); ++b) {
            for (const std::string &doc_id : expected[b].doc_ids) {
                const RankingEntry &e = ranking.entries[pos];
                REQUIRE(e.doc_id == doc_id);
                REQUIRE(e.source == expected[b].source);
                REQUIRE(e.source_rank == b + 1);
                REQUIRE(e.source_productivity == expected[b].doc_ids.size());
                REQUIRE(e.position == pos + 1);
                ++pos;
            }
        }

        // permutation invariance
        std::shuffle(docs.begin(), docs.end(), rng);
        CHECK(bradfordize(docs, KeyMode::journal) == ranking);
    }
}

TEST_CASE("re-bradfordizing preserves the block structure") {
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        std::vector<std::size_t> sizes;
        const int blocks = std::uniform_int_distribution<int>(1, 12)(rng);
        for (int b = 0; b < blocks; ++b)
            sizes.push_back(std::uniform_int_distribution<std::size_t>(1, 9)(rng));
        const BradfordizedRanking ranking = ranking_with_blocks(sizes);

        // feed the ranked documents back through with identical keys
        std::vector<Document> docs;
        for (const RankingEntry &e : ranking.entries)
            docs.push_back(article(e.doc_id, e.source.key));
        const BradfordizedRanking again = bradfordize(docs, KeyMode::journal);
        CHECK(again.entries == ranking.entries);
    }
}

TEST_CASE("strict partition sizes") {
    const BradfordizedRanking nine = ranking_with_blocks({1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(zone_sizes(partition_zones(nine, 3, ZoneMode::strict)) ==
          std::vector<std::size_t>{3, 3, 3});
    CHECK(zone_sizes(partition_zones(nine, 3, ZoneMode::snap)) ==
          std::vector<std::size_t>{3, 3, 3});

    const BradfordizedRanking ten = ranking_with_blocks(std::vector<std::size_t>(10, 1));
    CHECK(zone_sizes(partition_zones(ten, 3, ZoneMode::strict)) ==
          std::vector<std::size_t>{4, 3, 3});

    std::mt19937 rng(3);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 500)(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        const auto sizes = zone_sizes(
            partition_zones(ranking_with_blocks(std::vector<std::size_t>(n, 1)), k,
                            ZoneMode::strict));
        CHECK(sizes.size() == k);
        CHECK(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) == n);
        const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
        CHECK(*hi - *lo <= 1);
    }
}

TEST_CASE("snap partition matches the exhaustive boundary oracle") {
    std::mt19937 rng(41);
    for (int round = 0; round < 200; ++round) {
        const std::size_t blocks = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
        std::vector<std::size_t> sizes;
        for (std::size_t b = 0; b < blocks; ++b)
            sizes.push_back(std::uniform_int_distribution<std::size_t>(1, 12)(rng));

        const BradfordizedRanking ranking = ranking_with_blocks(sizes);
        const ZonePartition partition = partition_zones(ranking, k, ZoneMode::snap);

        std::sort(sizes.rbegin(), sizes.rend()); // ranking_with_blocks sorts too
        const auto expected_cuts = oracles::snap_cuts_exhaustive(sizes, k);

        std::vector<std::size_t> actual_cuts;
        std::size_t acc = 0;
        for (std::size_t z = 0; z + 1 < partition.zones.size(); ++z) {
            acc += partition.zones[z].doc_count();
            actual_cuts.push_back(acc);
        }
        // trailing empty zones collapse onto N; drop cuts at N for comparison
        const std::size_t total = ranking.entries.size();
        while (!actual_cuts.empty() && actual_cuts.back() == total)
            actual_cuts.pop_back();
        CHECK(actual_cuts == expected_cuts);

        // no block spans two zones: every zone starts on a block boundary
        std::size_t begin = 0;
        for (const Zone &zone : partition.zones) {
            if (!zone.doc_ids.empty() && begin > 0)
                CHECK(ranking.entries[begin].source_rank !=
                      ranking.entries[begin - 1].source_rank);
            begin += zone.doc_count();
        }
        if (blocks >= k)
            CHECK_FALSE(partition.degenerate);
    }
}

TEST_CASE("figure-shaped corpus snaps to roughly equal zones") {
    // 142 documents, skewed like the published article sample: a handful
    // of productive journals, then a long tail of single-hit ones
    std::vector<std::size_t> sizes = {16, 12, 9, 7, 6, 5, 5, 4, 4, 3,
                                      3,  3,  2, 2, 2, 2, 2, 2};
    const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    sizes.insert(sizes.end(), 142 - total, 1);

    const BradfordizedRanking ranking = ranking_with_blocks(sizes);
    REQUIRE(ranking.entries.size() == 142);
    const ZonePartition partition = partition_zones(ranking, 3, ZoneMode::snap);

    for (const Zone &zone : partition.zones) {
        CHECK(zone.doc_count() >= 40);
        CHECK(zone.doc_count() <= 55);
    }
    // the nucleus: a few very productive sources holding about a third
    // of the documents
    CHECK(partition.zones[0].source_count >= 4);
    CHECK(partition.zones[0].source_count <= 6);
    CHECK(partition.zones[0].doc_count() >= 45);
    CHECK(partition.zones[0].doc_count() <= 52);
    // scattering grows outward when productivities decrease
    CHECK(partition.zones[0].source_count <= partition.zones[1].source_count);
    CHECK(partition.zones[1].source_count <= partition.zones[2].source_count);
}

TEST_CASE("snap zone source counts never shrink outward on skewed decreasing blocks") {
    // geometric decay plus a tail of single-document sources, the shape
    // the scattering law describes
    std::mt19937 rng(59);
    for (int round = 0; round < 100; ++round) {
        std::vector<std::size_t> sizes;
        double size = std::uniform_real_distribution<double>(25.0, 60.0)(rng);
        while (size >= 2.0) {
            sizes.push_back(static_cast<std::size_t>(size));
            size *= std::uniform_real_distribution<double>(0.45, 0.7)(rng);
        }
        const std::size_t tail = std::uniform_int_distribution<std::size_t>(20, 60)(rng);
        sizes.insert(sizes.end(), tail, 1);

        const ZonePartition partition =
            partition_zones(ranking_with_blocks(sizes), 3, ZoneMode::snap);
        REQUIRE_FALSE(partition.degenerate);
        CHECK(partition.zones[0].source_count <= partition.zones[1].source_count);
        CHECK(partition.zones[1].source_count <= partition.zones[2].source_count);
    }
}

TEST_CASE("partition bookkeeping and errors") {
    const BradfordizedRanking ranking = ranking_with_blocks({5, 3, 2});
    const ZonePartition partition = partition_zones(ranking, 3, ZoneMode::snap);

    std::vector<std::string> concatenated;
    for (const Zone &zone : partition.zones)
        concatenated.insert(concatenated.end(), zone.doc_ids.begin(), zone.doc_ids.end());
    std::vector<std::string> ranked;
    for (const RankingEntry &e : ranking.entries)
        ranked.push_back(e.doc_id);
    CHECK(concatenated == ranked);

    CHECK(core_documents(partition) == partition.zones.front().doc_ids);

    BradfordizedRanking empty;
    CHECK_THROWS_AS(partition_zones(empty, 3, ZoneMode::snap), DataError);
    CHECK_THROWS_AS(partition_zones(ranking, 1, ZoneMode::snap), DataError);

    // fewer blocks than zones: trailing zones empty and flagged
    const ZonePartition degenerate =
        partition_zones(ranking_with_blocks({4}), 3, ZoneMode::snap);
    CHECK(degenerate.degenerate);
    CHECK(degenerate.zones[0].doc_count() == 4);
    CHECK(degenerate.zones[1].doc_count() == 0);
    CHECK(degenerate.zones[2].doc_count() == 0);
    CHECK(core_documents(degenerate).size() == 4);
}

TEST_CASE("zone totals plus skips cover the input") {
    std::mt19937 rng(67);
    for (int round = 0; round < 30; ++round) {
        std::vector<Document> docs;
        const int n = std::uniform_int_distribution<int>(3, 80)(rng);
        for (int i = 0; i < n; ++i) {
            Document d;
            d.doc_id = "d" + std::to_string(i);
            d.doctype = DocType::journal_article;
            if (std::uniform_int_distribution<int>(0, 3)(rng) != 0)
                d.issn = "20" + std::to_string(i % 5);
            docs.push_back(d);
        }
        const BradfordizedRanking ranking = bradfordize(docs, KeyMode::journal);
        if (ranking.entries.empty())
            continue;
        const ZonePartition partition = partition_zones(ranking, 3, ZoneMode::snap);
        std::size_t zoned = 0;
        for (const Zone &zone : partition.zones)
            zoned += zone.doc_count();
        CHECK(zoned + ranking.skipped.size() == docs.size());
    }
}
