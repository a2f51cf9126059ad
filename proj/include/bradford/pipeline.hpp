#ifndef BRADFORD_PIPELINE_HPP
#define BRADFORD_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bradford/bradfordizer.hpp"
#include "bradford/corpus.hpp"
#include "bradford/federation.hpp"
#include "bradford/ir_eval.hpp"
#include "bradford/scattering.hpp"

namespace bradford {

struct PipelineOptions {
    ZoneMode zone_mode = ZoneMode::snap;
    std::size_t num_zones = 3;
    UnjudgedPolicy unjudged = UnjudgedPolicy::nonrelevant;
    double alpha = 0.05;
    int workers = 0; // 0 = all hardware threads, 1 = serial reference path
};

// One topic, one document class, run through the whole chain. partition,
// profile and evaluation are absent when nothing was bradfordizable.
struct TopicClassResult {
    int topic = 0;
    DoctypeClass doctype_class = DoctypeClass::articles;
    std::size_t pool_docs = 0; // class documents in this topic's pool
    BradfordizedRanking ranking;
    std::optional<ZonePartition> partition;
    std::optional<ScatteringProfile> profile;
    std::optional<ZoneEvaluation> evaluation;
};

struct TopicResult {
    int topic = 0;
    std::size_t pool_size = 0; // judged documents found in the corpus
    TopicClassResult articles;
    TopicClassResult monographs;
};

// Table-2-style corpus accounting over all processed topics.
// documents_total = documents_bradfordized + skipped always holds.
struct CorpusAccounting {
    std::size_t documents_total = 0;
    std::size_t documents_bradfordized = 0;
    std::size_t journal_articles = 0; // bradfordized articles
    std::size_t monographs = 0;       // bradfordized monographs
    std::size_t skipped = 0;
    std::size_t judged_missing_from_corpus = 0;
};

struct EvaluationRun {
    std::vector<TopicResult> topics; // ascending topic number
    CorpusAccounting accounting;
};

// Deterministic parallel map over [0, n): every index is processed by
// exactly one worker into caller-owned slots; the first exception (by
// index) is rethrown after the loop. workers == 1 stays on the calling
// thread and is the serial reference the parallel path is tested
// against.
template <typename Fn>
void parallel_for_index(std::size_t n, int workers, Fn &&fn) {
    if (n == 0)
        return;
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
#ifdef _OPENMP
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const std::exception_ptr &e : errors)
        if (e)
            std::rethrow_exception(e);
}

// Build each topic's document pool (its judged documents found in the
// corpus), bradfordize and partition both doctype classes, compute
// scattering profiles and zone evaluations. Topics run in parallel;
// the result is independent of the worker count.
//
// Throws DataError when the corpus has duplicate doc ids or when the
// qrels cover none of the given topics.
EvaluationRun run_topics(const std::vector<Document> &corpus, const std::vector<Topic> &topics,
                         const Qrels &qrels, const PipelineOptions &options);

// Pools a topic's judged documents out of a merged corpus. Built once,
// queried per topic; what the browsing commands use directly.
class TopicPooler {
public:
    // Throws DataError on duplicate doc ids in the corpus.
    explicit TopicPooler(const std::vector<Document> &corpus);

    // Judged documents of `topic` found in the corpus, ascending doc_id.
    // `missing` (optional) receives the count of judged ids the corpus
    // does not contain.
    std::vector<Document> pool(const Qrels &qrels, int topic,
                               std::size_t *missing = nullptr) const;

private:
    std::unordered_map<std::string, const Document *> index_;
};

} // namespace bradford

#endif
