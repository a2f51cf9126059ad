#ifndef BRADFORD_CORPUS_HPP
#define BRADFORD_CORPUS_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bradford {

enum class DocType { journal_article, monograph, other };

std::string_view to_string(DocType t);

// One bibliographic record. Immutable after parsing; safe to share
// across threads.
struct Document {
    std::string doc_id;
    std::string title;
    DocType doctype = DocType::other;
    std::optional<std::string> source_field; // journal title or publisher
    std::optional<std::string> issn;
    std::optional<int> year;
    std::string database_id;
    std::optional<std::string> language_code;
    std::vector<std::string> controlled_terms;

    bool operator==(const Document &) const = default;
};

// A standardized query statement in the CLEF style.
struct Topic {
    int number = 0;
    std::string title;
    std::string description;
    std::string narrative;

    bool operator==(const Topic &) const = default;
};

// Relevance judgments. Binary view: relevant <=> grade > 0.
class Qrels {
public:
    void add(int topic, const std::string &doc_id, int grade);

    std::optional<int> grade(int topic, const std::string &doc_id) const;
    bool is_judged(int topic, const std::string &doc_id) const;
    bool is_relevant(int topic, const std::string &doc_id) const;
    bool has_topic(int topic) const;

    // Judged doc ids of one topic, ascending. Empty if the topic is unknown.
    std::vector<std::string> judged_docs(int topic) const;
    std::vector<int> topics() const;
    std::size_t size() const;

private:
    std::map<int, std::map<std::string, int>> by_topic_;
};

enum class SourceKind { journal, publisher };
enum class KeyMode { journal, publisher, auto_by_doctype };

std::string_view to_string(SourceKind k);
std::string_view to_string(KeyMode m);

// Normalized identity of a document's source (a journal or a publisher).
struct SourceKey {
    SourceKind kind = SourceKind::journal;
    std::string key;

    friend auto operator<=>(const SourceKey &a, const SourceKey &b) {
        return std::tie(a.key, a.kind) <=> std::tie(b.key, b.kind);
    }
    bool operator==(const SourceKey &) const = default;
};

// Case fold (ASCII + Latin-1 range of UTF-8), trim, and collapse internal
// whitespace runs to single spaces. Idempotent. No diacritic stripping:
// distinct sources must not merge.
std::string normalize_source_text(std::string_view raw);

// Resolve the sorting key for one document. Absence is a value, not an
// error: documents without a resolvable key are skipped by the
// bradfordizer and surface in the skip report.
//
// journal mode    - ISSN when present, else the SOURCE string.
// publisher mode  - the SOURCE string (publisher for monographs).
// auto mode       - journal rule for articles, publisher rule for
//                   monographs, absent for anything else.
std::optional<SourceKey> source_key(const Document &doc, KeyMode mode);

enum class DocumentFormat { girt_xml };

// Parse a GIRT-style tagged document stream: one Document per <DOC>
// element, in file order. Unknown tags are skipped, unknown DOCTYPE
// strings map to DocType::other, missing optional tags yield absent
// fields. `database_id` stamps every parsed document.
//
// Throws ParseError (with byte offset) on malformed markup and
// DataError when a DOCID repeats within the stream.
std::vector<Document> parse_documents(std::string_view input,
                                      DocumentFormat format,
                                      std::string_view database_id = {});
std::vector<Document> parse_documents(std::istream &input,
                                      DocumentFormat format,
                                      std::string_view database_id = {});

// As parse_documents, but also returns the [begin, end) byte range of
// each <DOC> element so callers can copy records verbatim.
struct ParsedDocument {
    Document doc;
    std::size_t begin = 0;
    std::size_t end = 0;
};
std::vector<ParsedDocument> parse_documents_with_spans(
    std::string_view input, DocumentFormat format,
    std::string_view database_id = {});

// Parse <top> elements (num, EN-title, EN-desc, EN-narr). Throws on a
// missing <num>, a non-positive number, or a duplicate number.
std::vector<Topic> parse_topics(std::string_view input);
std::vector<Topic> parse_topics(std::istream &input);

// Parse 4-column qrels lines: topic, iteration (ignored), doc id, grade.
// LF or CRLF. Throws ParseError with the offending line number, and
// DataError on a duplicate (topic, doc) pair.
Qrels parse_qrels(std::string_view input);
Qrels parse_qrels(std::istream &input);

} // namespace bradford

#endif
