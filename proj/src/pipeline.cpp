#include "bradford/pipeline.hpp"

#include <algorithm>
#include <unordered_map>

#include "bradford/errors.hpp"

namespace bradford {

TopicPooler::TopicPooler(const std::vector<Document> &corpus) {
    index_.reserve(corpus.size());
    for (const Document &doc : corpus) {
        if (!index_.emplace(doc.doc_id, &doc).second)
            throw DataError("corpus has duplicate doc_id \"" + doc.doc_id +
                            "\"; merge result sets first");
    }
}

std::vector<Document> TopicPooler::pool(const Qrels &qrels, int topic,
                                        std::size_t *missing) const {
    std::vector<Document> out;
    std::size_t not_found = 0;
    for (const std::string &doc_id : qrels.judged_docs(topic)) {
        const auto it = index_.find(doc_id);
        if (it == index_.end())
            ++not_found;
        else
            out.push_back(*it->second);
    }
    if (missing)
        *missing = not_found;
    return out;
}

namespace {

TopicClassResult run_class(const std::vector<Document> &pool, int topic, DoctypeClass cls,
                           const Qrels &qrels, const PipelineOptions &options) {
    TopicClassResult result;
    result.topic = topic;
    result.doctype_class = cls;

    std::vector<Document> class_docs;
    for (const Document &doc : pool)
        if (doc.doctype == doctype_of(cls))
            class_docs.push_back(doc);
    result.pool_docs = class_docs.size();

    result.ranking = bradfordize(class_docs, key_mode_of(cls));
    if (result.ranking.entries.empty())
        return result;

    result.partition = partition_zones(result.ranking, options.num_zones, options.zone_mode);
    result.profile = scattering_profile(result.ranking, *result.partition);
    result.evaluation =
        evaluate_topic(*result.partition, qrels, topic, cls, options.unjudged);
    return result;
}

} // namespace

EvaluationRun run_topics(const std::vector<Document> &corpus, const std::vector<Topic> &topics,
                         const Qrels &qrels, const PipelineOptions &options) {
    const TopicPooler pooler(corpus);

    std::vector<int> topic_numbers;
    topic_numbers.reserve(topics.size());
    for (const Topic &t : topics)
        topic_numbers.push_back(t.number);
    std::sort(topic_numbers.begin(), topic_numbers.end());

    bool any_covered = false;
    for (const int t : topic_numbers)
        if (qrels.has_topic(t))
            any_covered = true;
    if (!any_covered)
        throw DataError("qrels cover none of the " + std::to_string(topic_numbers.size()) +
                        " topics");

    EvaluationRun run;
    run.topics.resize(topic_numbers.size());

    std::vector<std::size_t> missing_per_topic(topic_numbers.size(), 0);
    parallel_for_index(topic_numbers.size(), options.workers, [&](std::size_t i) {
        const int topic = topic_numbers[i];
        TopicResult &result = run.topics[i];
        result.topic = topic;

        const std::vector<Document> pool =
            pooler.pool(qrels, topic, &missing_per_topic[i]);
        result.pool_size = pool.size();
        result.articles = run_class(pool, topic, DoctypeClass::articles, qrels, options);
        result.monographs = run_class(pool, topic, DoctypeClass::monographs, qrels, options);
    });

    // single-threaded accounting fold, in topic order
    for (std::size_t i = 0; i < run.topics.size(); ++i) {
        const TopicResult &t = run.topics[i];
        run.accounting.documents_total += t.pool_size;
        run.accounting.journal_articles += t.articles.ranking.entries.size();
        run.accounting.monographs += t.monographs.ranking.entries.size();
        run.accounting.judged_missing_from_corpus += missing_per_topic[i];
    }
    run.accounting.documents_bradfordized =
        run.accounting.journal_articles + run.accounting.monographs;
    run.accounting.skipped =
        run.accounting.documents_total - run.accounting.documents_bradfordized;
    return run;
}

} // namespace bradford
