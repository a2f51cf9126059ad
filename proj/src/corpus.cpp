#include "bradford/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

#include "bradford/errors.hpp"

namespace bradford {

namespace {

bool is_ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_ascii_space(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && is_ascii_space(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::optional<int> parse_int(std::string_view s) {
    const std::string t = trim(s);
    int value = 0;
    const char *first = t.data();
    const char *last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || t.empty())
        return std::nullopt;
    return value;
}

std::string decode_entities(std::string_view s) {
    if (s.find('&') == std::string_view::npos)
        return std::string(s);
    static constexpr std::pair<std::string_view, char> kEntities[] = {
        {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&apos;", '\''},
    };
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == '&') {
            bool matched = false;
            for (const auto &[name, ch] : kEntities) {
                if (s.substr(i, name.size()) == name) {
                    out.push_back(ch);
                    i += name.size();
                    matched = true;
                    break;
                }
            }
            if (matched)
                continue;
        }
        out.push_back(s[i]);
        ++i;
    }
    return out;
}

// Minimal scanner for the flat tagged format of GIRT documents and CLEF
// topics: elements hold plain text, never attributes or nesting we care
// about. Content is taken verbatim up to the matching close tag, so
// quotes and stray ampersands in abstracts survive.
class TagScanner {
public:
    explicit TagScanner(std::string_view in) : in_(in) {}

    struct Tag {
        std::string name;
        bool closing = false;
        bool self_closing = false;
        std::size_t offset = 0; // of the '<'
    };

    // Advance to the next tag, ignoring any text before it.
    // Returns nullopt at end of input.
    std::optional<Tag> next_tag() {
        const std::size_t lt = in_.find('<', pos_);
        if (lt == std::string_view::npos) {
            pos_ = in_.size();
            return std::nullopt;
        }
        Tag tag;
        tag.offset = lt;
        std::size_t p = lt + 1;
        if (p < in_.size() && in_[p] == '/') {
            tag.closing = true;
            ++p;
        }
        const std::size_t name_begin = p;
        while (p < in_.size() && is_name_char(in_[p]))
            ++p;
        if (p == name_begin)
            throw ParseError("malformed tag: missing element name", lt);
        tag.name.assign(in_.substr(name_begin, p - name_begin));
        while (p < in_.size() && is_ascii_space(static_cast<unsigned char>(in_[p])))
            ++p;
        if (p < in_.size() && in_[p] == '/' && !tag.closing) {
            tag.self_closing = true;
            ++p;
        }
        if (p >= in_.size() || in_[p] != '>')
            throw ParseError("malformed tag <" + tag.name + ">: expected '>'", lt);
        pos_ = p + 1;
        return tag;
    }

    // Content of an element just opened by `tag`, up to its close tag.
    std::string read_content(const Tag &tag) {
        if (tag.self_closing)
            return {};
        const std::string close = "</" + tag.name + ">";
        const std::size_t end = in_.find(close, pos_);
        if (end == std::string_view::npos)
            throw ParseError("unterminated <" + tag.name + "> element", tag.offset);
        std::string content = decode_entities(in_.substr(pos_, end - pos_));
        pos_ = end + close.size();
        return content;
    }

    bool text_until_next_tag_is_blank() const {
        std::size_t p = pos_;
        while (p < in_.size() && in_[p] != '<') {
            if (!is_ascii_space(static_cast<unsigned char>(in_[p])))
                return false;
            ++p;
        }
        return true;
    }

    std::size_t pos() const { return pos_; }

private:
    static bool is_name_char(char c) {
        const auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || c == '-' || c == '_' || c == '.';
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

DocType doctype_from_raw(std::string_view raw) {
    std::string t = trim(raw);
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "journalarticle")
        return DocType::journal_article;
    if (t == "monograph")
        return DocType::monograph;
    return DocType::other;
}

void split_controlled_terms(std::string_view content, std::vector<std::string> *out) {
    std::size_t begin = 0;
    while (begin <= content.size()) {
        const std::size_t hash = content.find('#', begin);
        const std::size_t end = (hash == std::string_view::npos) ? content.size() : hash;
        std::string term = trim(content.substr(begin, end - begin));
        if (!term.empty())
            out->push_back(std::move(term));
        if (hash == std::string_view::npos)
            break;
        begin = hash + 1;
    }
}

std::string slurp(std::istream &in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::string_view to_string(DocType t) {
    switch (t) {
    case DocType::journal_article:
        return "journal_article";
    case DocType::monograph:
        return "monograph";
    case DocType::other:
        return "other";
    }
    return "other";
}

std::string_view to_string(SourceKind k) {
    return k == SourceKind::journal ? "journal" : "publisher";
}

std::string_view to_string(KeyMode m) {
    switch (m) {
    case KeyMode::journal:
        return "journal";
    case KeyMode::publisher:
        return "publisher";
    case KeyMode::auto_by_doctype:
        return "auto";
    }
    return "auto";
}

void Qrels::add(int topic, const std::string &doc_id, int grade) {
    auto [it, inserted] = by_topic_[topic].emplace(doc_id, grade);
    if (!inserted)
        throw DataError("duplicate qrels entry for topic " + std::to_string(topic) +
                        ", document \"" + doc_id + "\"");
}

std::optional<int> Qrels::grade(int topic, const std::string &doc_id) const {
    const auto t = by_topic_.find(topic);
    if (t == by_topic_.end())
        return std::nullopt;
    const auto d = t->second.find(doc_id);
    if (d == t->second.end())
        return std::nullopt;
    return d->second;
}

bool Qrels::is_judged(int topic, const std::string &doc_id) const {
    return grade(topic, doc_id).has_value();
}

bool Qrels::is_relevant(int topic, const std::string &doc_id) const {
    const auto g = grade(topic, doc_id);
    return g.has_value() && *g > 0;
}

bool Qrels::has_topic(int topic) const { return by_topic_.count(topic) != 0; }

std::vector<std::string> Qrels::judged_docs(int topic) const {
    std::vector<std::string> out;
    const auto t = by_topic_.find(topic);
    if (t == by_topic_.end())
        return out;
    out.reserve(t->second.size());
    for (const auto &[doc, grade] : t->second)
        out.push_back(doc);
    return out;
}

std::vector<int> Qrels::topics() const {
    std::vector<int> out;
    out.reserve(by_topic_.size());
    for (const auto &[topic, docs] : by_topic_)
        out.push_back(topic);
    return out;
}

std::size_t Qrels::size() const {
    std::size_t n = 0;
    for (const auto &[topic, docs] : by_topic_)
        n += docs.size();
    return n;
}

std::string normalize_source_text(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (std::size_t i = 0; i < raw.size();) {
        const auto c = static_cast<unsigned char>(raw[i]);
        if (is_ascii_space(c)) {
            pending_space = !out.empty();
            ++i;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        if (c < 0x80) {
            out.push_back(static_cast<char>(std::tolower(c)));
            ++i;
        } else if (c == 0xC3 && i + 1 < raw.size()) {
            // Latin-1 supplement: fold U+00C0..00DE to lowercase, except
            // the multiplication sign. Other scripts pass through.
            auto c2 = static_cast<unsigned char>(raw[i + 1]);
            if (c2 >= 0x80 && c2 <= 0x9E && c2 != 0x97)
                c2 = static_cast<unsigned char>(c2 + 0x20);
            out.push_back(static_cast<char>(c));
            out.push_back(static_cast<char>(c2));
            i += 2;
        } else {
            out.push_back(static_cast<char>(c));
            ++i;
        }
    }
    return out;
}

std::optional<SourceKey> source_key(const Document &doc, KeyMode mode) {
    const auto make = [](SourceKind kind,
                         const std::optional<std::string> &raw) -> std::optional<SourceKey> {
        if (!raw)
            return std::nullopt;
        std::string key = normalize_source_text(*raw);
        if (key.empty())
            return std::nullopt;
        return SourceKey{kind, std::move(key)};
    };
    switch (mode) {
    case KeyMode::journal:
        if (auto k = make(SourceKind::journal, doc.issn))
            return k;
        return make(SourceKind::journal, doc.source_field);
    case KeyMode::publisher:
        return make(SourceKind::publisher, doc.source_field);
    case KeyMode::auto_by_doctype:
        if (doc.doctype == DocType::journal_article)
            return source_key(doc, KeyMode::journal);
        if (doc.doctype == DocType::monograph)
            return source_key(doc, KeyMode::publisher);
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<ParsedDocument> parse_documents_with_spans(std::string_view input,
                                                       DocumentFormat format,
                                                       std::string_view database_id) {
    if (format != DocumentFormat::girt_xml)
        throw UsageError("unsupported document format");

    std::vector<ParsedDocument> out;
    std::map<std::string, std::size_t> seen; // doc_id -> index
    TagScanner scan(input);

    while (auto tag = scan.next_tag()) {
        if (tag->closing || tag->name != "DOC")
            throw ParseError("expected <DOC>, found <" + std::string(tag->closing ? "/" : "") +
                                 tag->name + ">",
                             tag->offset);
        if (tag->self_closing)
            throw ParseError("empty <DOC/> element", tag->offset);

        ParsedDocument parsed;
        parsed.begin = tag->offset;
        Document &doc = parsed.doc;
        doc.database_id.assign(database_id);
        bool saw_docid = false;

        for (;;) {
            auto child = scan.next_tag();
            if (!child)
                throw ParseError("unterminated <DOC> element", tag->offset);
            if (child->closing) {
                if (child->name != "DOC")
                    throw ParseError("unexpected </" + child->name + "> inside <DOC>",
                                     child->offset);
                parsed.end = scan.pos();
                break;
            }
            const std::string content = scan.read_content(*child);
            if (child->name == "DOCID") {
                doc.doc_id = trim(content);
                saw_docid = true;
            } else if (child->name == "TITLE-DE") {
                doc.title = trim(content);
            } else if (child->name == "DOCTYPE") {
                doc.doctype = doctype_from_raw(content);
            } else if (child->name == "SOURCE") {
                std::string s = trim(content);
                if (!s.empty())
                    doc.source_field = std::move(s);
            } else if (child->name == "ISSN") {
                std::string s = trim(content);
                if (!s.empty())
                    doc.issn = std::move(s);
            } else if (child->name == "PUBLICATION-YEAR") {
                doc.year = parse_int(content); // non-numeric years stay absent
            } else if (child->name == "LANGUAGE-CODE") {
                std::string s = trim(content);
                if (!s.empty())
                    doc.language_code = std::move(s);
            } else if (child->name == "CONTROLLED-TERM-DE") {
                split_controlled_terms(content, &doc.controlled_terms);
            }
            // Anything else (AUTHOR, ABSTRACT-DE, TEXT, IDENTIFIER1, ...)
            // is consumed and dropped.
        }

        if (!saw_docid || doc.doc_id.empty())
            throw ParseError("<DOC> element without a DOCID", parsed.begin);
        auto [it, inserted] = seen.emplace(doc.doc_id, out.size());
        if (!inserted)
            throw DataError("duplicate DOCID \"" + doc.doc_id + "\"");
        out.push_back(std::move(parsed));
    }
    return out;
}

std::vector<Document> parse_documents(std::string_view input, DocumentFormat format,
                                      std::string_view database_id) {
    std::vector<Document> docs;
    for (auto &parsed : parse_documents_with_spans(input, format, database_id))
        docs.push_back(std::move(parsed.doc));
    return docs;
}

std::vector<Document> parse_documents(std::istream &input, DocumentFormat format,
                                      std::string_view database_id) {
    return parse_documents(slurp(input), format, database_id);
}

std::vector<Topic> parse_topics(std::string_view input) {
    std::vector<Topic> out;
    std::map<int, std::size_t> seen;
    TagScanner scan(input);

    while (auto tag = scan.next_tag()) {
        if (tag->closing || tag->name != "top")
            throw ParseError("expected <top>, found <" + std::string(tag->closing ? "/" : "") +
                                 tag->name + ">",
                             tag->offset);
        if (tag->self_closing)
            throw ParseError("empty <top/> element", tag->offset);

        Topic topic;
        bool saw_num = false;
        for (;;) {
            auto child = scan.next_tag();
            if (!child)
                throw ParseError("unterminated <top> element", tag->offset);
            if (child->closing) {
                if (child->name != "top")
                    throw ParseError("unexpected </" + child->name + "> inside <top>",
                                     child->offset);
                break;
            }
            const std::string content = scan.read_content(*child);
            if (child->name == "num") {
                const auto num = parse_int(content);
                if (!num)
                    throw DataError("topic <num> is not an integer: \"" + trim(content) + "\"");
                topic.number = *num;
                saw_num = true;
            } else if (child->name == "EN-title") {
                topic.title = trim(content);
            } else if (child->name == "EN-desc") {
                topic.description = trim(content);
            } else if (child->name == "EN-narr") {
                topic.narrative = trim(content);
            }
        }
        if (!saw_num)
            throw DataError("<top> element without a <num>");
        if (topic.number <= 0)
            throw DataError("topic number must be positive, got " +
                            std::to_string(topic.number));
        auto [it, inserted] = seen.emplace(topic.number, out.size());
        if (!inserted)
            throw DataError("duplicate topic number " + std::to_string(topic.number));
        out.push_back(std::move(topic));
    }
    return out;
}

std::vector<Topic> parse_topics(std::istream &input) { return parse_topics(slurp(input)); }

Qrels parse_qrels(std::string_view input) {
    Qrels qrels;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin < input.size()) {
        std::size_t end = input.find('\n', begin);
        if (end == std::string_view::npos)
            end = input.size();
        ++line_no;
        const std::size_t line_start = begin;
        std::string_view line = input.substr(begin, end - begin);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        begin = end + 1;

        std::vector<std::string_view> cols;
        std::size_t p = 0;
        while (p < line.size()) {
            while (p < line.size() && is_ascii_space(static_cast<unsigned char>(line[p])))
                ++p;
            const std::size_t tok = p;
            while (p < line.size() && !is_ascii_space(static_cast<unsigned char>(line[p])))
                ++p;
            if (p > tok)
                cols.push_back(line.substr(tok, p - tok));
        }
        if (cols.empty())
            continue; // blank line
        if (cols.size() != 4)
            throw ParseError("qrels line " + std::to_string(line_no) + ": expected 4 columns, got " +
                                 std::to_string(cols.size()),
                             line_start, line_no);
        const auto topic = parse_int(cols[0]);
        if (!topic)
            throw ParseError("qrels line " + std::to_string(line_no) + ": topic \"" +
                                 std::string(cols[0]) + "\" is not an integer",
                             line_start, line_no);
        const auto grade = parse_int(cols[3]);
        if (!grade)
            throw ParseError("qrels line " + std::to_string(line_no) + ": grade \"" +
                                 std::string(cols[3]) + "\" is not an integer",
                             line_start, line_no);
        if (*grade < 0)
            throw ParseError("qrels line " + std::to_string(line_no) +
                                 ": grade must be non-negative",
                             line_start, line_no);
        qrels.add(*topic, std::string(cols[2]), *grade);
    }
    return qrels;
}

Qrels parse_qrels(std::istream &input) { return parse_qrels(slurp(input)); }

} // namespace bradford
