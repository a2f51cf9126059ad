// bradford: re-rank bibliographic search results by source productivity,
// cut rankings into Bradford zones, and evaluate per-zone precision.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bradford/bradfordizer.hpp"
#include "bradford/corpus.hpp"
#include "bradford/errors.hpp"
#include "bradford/federation.hpp"
#include "bradford/ir_eval.hpp"
#include "bradford/pipeline.hpp"
#include "bradford/report.hpp"
#include "bradford/scattering.hpp"
#include "bradford/stat_tests.hpp"

namespace fs = std::filesystem;
using namespace bradford;

namespace {

struct Options {
    std::vector<std::string> docs; // db=path, in priority order
    std::string topics_path;
    std::string qrels_path;
    std::string key_mode = "auto";
    std::string zone_mode = "snap";
    std::size_t zones = 3;
    std::string unjudged = "nonrelevant";
    double alpha = 0.05;
    std::string out_dir = ".";
    int workers = 0;
    std::vector<int> only_topics;
    std::string pairs_path; // stats input
};

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path &path, std::string_view content) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write " + path.string());
    out << content;
}

void write_json(const fs::path &path, const nlohmann::json &j) {
    write_file(path, j.dump(2) + "\n");
}

std::pair<std::string, std::string> split_docs_spec(const std::string &spec) {
    const std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
        throw UsageError("--docs expects db=path, got \"" + spec + "\"");
    return {spec.substr(0, eq), spec.substr(eq + 1)};
}

KeyMode parse_key_mode(const std::string &s) {
    if (s == "journal")
        return KeyMode::journal;
    if (s == "publisher")
        return KeyMode::publisher;
    if (s == "auto")
        return KeyMode::auto_by_doctype;
    throw UsageError("unknown key mode \"" + s + "\"");
}

ZoneMode parse_zone_mode(const std::string &s) {
    if (s == "strict")
        return ZoneMode::strict;
    if (s == "snap")
        return ZoneMode::snap;
    throw UsageError("unknown zone mode \"" + s + "\"");
}

UnjudgedPolicy parse_unjudged(const std::string &s) {
    if (s == "nonrelevant")
        return UnjudgedPolicy::nonrelevant;
    if (s == "exclude")
        return UnjudgedPolicy::exclude;
    throw UsageError("unknown unjudged policy \"" + s + "\"");
}

void validate_common(const Options &opt) {
    if (opt.zones < 2)
        throw UsageError("--zones must be at least 2");
    if (!(opt.alpha > 0.0 && opt.alpha < 1.0))
        throw UsageError("--alpha must lie strictly between 0 and 1");
}

PipelineOptions pipeline_options(const Options &opt) {
    PipelineOptions p;
    p.zone_mode = parse_zone_mode(opt.zone_mode);
    p.num_zones = opt.zones;
    p.unjudged = parse_unjudged(opt.unjudged);
    p.alpha = opt.alpha;
    p.workers = opt.workers;
    return p;
}

struct ParsedFile {
    std::string database_id;
    std::string content;
    std::vector<ParsedDocument> docs;
};

std::vector<ParsedFile> parse_doc_files(const Options &opt) {
    if (opt.docs.empty())
        throw UsageError("at least one --docs db=path is required");
    std::vector<ParsedFile> files;
    for (const std::string &spec : opt.docs) {
        const auto [db, path] = split_docs_spec(spec);
        ParsedFile file;
        file.database_id = db;
        file.content = read_file(path);
        try {
            file.docs = parse_documents_with_spans(file.content, DocumentFormat::girt_xml, db);
        } catch (const ParseError &e) {
            throw ParseError(path + ": " + e.what(), e.byte_offset(), e.line());
        } catch (const DataError &e) {
            throw DataError(path + ": " + e.what());
        }
        files.push_back(std::move(file));
    }
    return files;
}

std::pair<std::vector<Document>, MergeReport> load_merged_corpus(const Options &opt) {
    std::vector<ResultSet> lists;
    for (ParsedFile &file : parse_doc_files(opt)) {
        std::vector<Document> docs;
        docs.reserve(file.docs.size());
        for (ParsedDocument &p : file.docs)
            docs.push_back(std::move(p.doc));
        lists.push_back({file.database_id, std::move(docs)});
    }
    return merge_result_sets(lists);
}

std::vector<Topic> load_topics(const Options &opt) {
    if (opt.topics_path.empty())
        throw UsageError("--topics is required for this command");
    try {
        return parse_topics(read_file(opt.topics_path));
    } catch (const ParseError &e) {
        throw ParseError(opt.topics_path + ": " + e.what(), e.byte_offset(), e.line());
    } catch (const DataError &e) {
        throw DataError(opt.topics_path + ": " + e.what());
    }
}

Qrels load_qrels(const Options &opt) {
    if (opt.qrels_path.empty())
        throw UsageError("--qrels is required for this command");
    try {
        return parse_qrels(read_file(opt.qrels_path));
    } catch (const ParseError &e) {
        throw ParseError(opt.qrels_path + ": " + e.what(), e.byte_offset(), e.line());
    } catch (const DataError &e) {
        throw DataError(opt.qrels_path + ": " + e.what());
    }
}

// Topic numbers to process: --topic selections (validated) or the whole
// topic file, ascending.
std::vector<int> selected_topics(const Options &opt, const std::vector<Topic> &topics) {
    std::set<int> known;
    for (const Topic &t : topics)
        known.insert(t.number);
    if (opt.only_topics.empty())
        return {known.begin(), known.end()};
    std::set<int> chosen;
    for (const int t : opt.only_topics) {
        if (!known.count(t))
            throw DataError("topic " + std::to_string(t) + " is not in the topic file");
        chosen.insert(t);
    }
    return {chosen.begin(), chosen.end()};
}

int cmd_merge(const Options &opt) {
    const std::vector<ParsedFile> files = parse_doc_files(opt);

    // verbatim record slices, first occurrence of each id wins
    std::vector<ResultSet> lists;
    std::string merged_xml;
    std::set<std::string> seen;
    for (const ParsedFile &file : files) {
        std::vector<Document> docs;
        for (const ParsedDocument &p : file.docs) {
            docs.push_back(p.doc);
            if (seen.insert(p.doc.doc_id).second) {
                merged_xml.append(file.content, p.begin, p.end - p.begin);
                merged_xml.push_back('\n');
            }
        }
        lists.push_back({file.database_id, std::move(docs)});
    }
    const auto [merged, report] = merge_result_sets(lists);

    const fs::path out(opt.out_dir);
    write_file(out / "merged.xml", merged_xml);
    write_json(out / "merge_report.json", to_json(report));
    return 0;
}

struct TopicRun {
    int topic = 0;
    std::vector<Document> pool;
    BradfordizedRanking ranking;
    std::optional<ZonePartition> partition;
};

// Shared pool->rank->partition step for the browsing commands.
std::vector<TopicRun> run_rankings(const Options &opt, KeyMode key_mode) {
    const auto [corpus, merge_report] = load_merged_corpus(opt);
    const std::vector<Topic> topics = load_topics(opt);
    const Qrels qrels = load_qrels(opt);
    const std::vector<int> chosen = selected_topics(opt, topics);
    const TopicPooler pooler(corpus);

    std::vector<TopicRun> runs(chosen.size());
    parallel_for_index(chosen.size(), opt.workers, [&](std::size_t i) {
        TopicRun &run = runs[i];
        run.topic = chosen[i];
        run.pool = pooler.pool(qrels, run.topic);
        run.ranking = bradfordize(run.pool, key_mode);
        if (!run.ranking.entries.empty())
            run.partition =
                partition_zones(run.ranking, opt.zones, parse_zone_mode(opt.zone_mode));
    });
    return runs;
}

int cmd_bradfordize(const Options &opt) {
    const KeyMode key_mode = parse_key_mode(opt.key_mode);
    const fs::path out(opt.out_dir);
    for (const TopicRun &run : run_rankings(opt, key_mode)) {
        const std::string tag = std::to_string(run.topic);
        write_json(out / ("ranking_" + tag + ".json"),
                   ranking_json(run.ranking, run.topic, key_mode));
        if (!run.partition) {
            std::cerr << "warning: topic " << run.topic
                      << " has no bradfordizable documents\n";
            continue;
        }
        std::string core_ids;
        for (const std::string &doc_id : core_documents(*run.partition))
            core_ids += doc_id + "\n";
        write_file(out / ("core_docids_" + tag + ".txt"), core_ids);
        write_file(out / ("core_sources_" + tag + ".csv"),
                   core_sources_csv(run.ranking, *run.partition));
    }
    return 0;
}

int cmd_zones(const Options &opt) {
    const KeyMode key_mode = parse_key_mode(opt.key_mode);
    const fs::path out(opt.out_dir);
    for (const TopicRun &run : run_rankings(opt, key_mode)) {
        if (!run.partition) {
            std::cerr << "warning: topic " << run.topic
                      << " has no bradfordizable documents\n";
            continue;
        }
        write_json(out / ("zones_" + std::to_string(run.topic) + ".json"),
                   partition_json(*run.partition, run.topic));
    }
    return 0;
}

// analyze and eval run the full two-class pipeline
EvaluationRun full_run(const Options &opt) {
    const auto [corpus, merge_report] = load_merged_corpus(opt);
    const std::vector<Topic> all_topics = load_topics(opt);
    const Qrels qrels = load_qrels(opt);

    std::vector<Topic> topics;
    const std::vector<int> chosen = selected_topics(opt, all_topics);
    for (const Topic &t : all_topics)
        if (std::find(chosen.begin(), chosen.end(), t.number) != chosen.end())
            topics.push_back(t);
    return run_topics(corpus, topics, qrels, pipeline_options(opt));
}

int cmd_analyze(const Options &opt) {
    const EvaluationRun run = full_run(opt);
    const fs::path out(opt.out_dir);

    std::vector<ScatteringProfile> article_profiles;
    std::vector<ScatteringProfile> monograph_profiles;
    for (const TopicResult &t : run.topics) {
        const std::string tag = std::to_string(t.topic);
        if (t.articles.profile) {
            write_file(out / ("scattering_articles_" + tag + ".csv"),
                       scattering_csv(*t.articles.profile));
            article_profiles.push_back(*t.articles.profile);
        } else {
            std::cerr << "warning: topic " << t.topic << " has no article scattering data\n";
        }
        if (t.monographs.profile) {
            write_file(out / ("scattering_monographs_" + tag + ".csv"),
                       scattering_csv(*t.monographs.profile));
            monograph_profiles.push_back(*t.monographs.profile);
        }
    }

    std::vector<ClassScatteringSummary> classes(2);
    classes[0].doctype_class = DoctypeClass::articles;
    if (!article_profiles.empty())
        classes[0].summary = aggregate_profiles(article_profiles);
    classes[1].doctype_class = DoctypeClass::monographs;
    if (!monograph_profiles.empty())
        classes[1].summary = aggregate_profiles(monograph_profiles);
    write_json(out / "scattering_summary.json", scattering_summary_json(classes));
    return 0;
}

int cmd_eval(const Options &opt) {
    const EvaluationRun run = full_run(opt);
    const fs::path out(opt.out_dir);
    write_json(out / "evaluation.json", evaluation_report(run, pipeline_options(opt)));
    write_file(out / "per_topic_precision.csv", per_topic_precision_csv(run, opt.zones));
    return 0;
}

std::vector<std::pair<double, double>> read_pairs(const std::string &path) {
    const std::string content = read_file(path);
    std::vector<std::pair<double, double>> pairs;
    std::istringstream lines(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        for (char &c : line)
            if (c == ',')
                c = ' ';
        std::istringstream fields(line);
        double a = 0.0, b = 0.0;
        if (!(fields >> a)) {
            if (line_no == 1 || line.find_first_not_of(" \t") == std::string::npos)
                continue; // header or blank
            throw ParseError(path + " line " + std::to_string(line_no) +
                                 ": expected two numbers",
                             0, line_no);
        }
        std::string extra;
        if (!(fields >> b) || (fields >> extra))
            throw ParseError(path + " line " + std::to_string(line_no) +
                                 ": expected exactly two numbers",
                             0, line_no);
        pairs.push_back({a, b});
    }
    return pairs;
}

int cmd_stats(const Options &opt) {
    if (opt.pairs_path.empty())
        throw UsageError("stats requires a pairs file (CSV or whitespace separated, 2 columns)");
    const auto pairs = read_pairs(opt.pairs_path);

    nlohmann::json out;
    out["pairs"] = pairs.size();
    try {
        out["wilcoxon"] = to_json(wilcoxon_signed_rank(pairs, opt.alpha));
    } catch (const DataError &e) {
        out["wilcoxon"] = {{"error", e.what()}};
    }
    try {
        out["paired_t"] = to_json(paired_t_test(pairs, opt.alpha));
    } catch (const DataError &e) {
        out["paired_t"] = {{"error", e.what()}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Bradfordizing toolkit: productivity re-ranking, Bradford zones, "
                 "and zone-precision evaluation for bibliographic result sets"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; command-line flags override it");

    Options opt;
    app.add_option("--docs", opt.docs,
                   "db=path document file in GIRT format (repeatable; order = priority)");
    app.add_option("--topics", opt.topics_path, "topic file (tagged <top> elements)");
    app.add_option("--qrels", opt.qrels_path, "relevance judgments (4-column qrels)");
    app.add_option("--key-mode", opt.key_mode, "source key: journal|publisher|auto")
        ->check(CLI::IsMember({"journal", "publisher", "auto"}));
    app.add_option("--zone-mode", opt.zone_mode, "zone boundary rule: strict|snap")
        ->check(CLI::IsMember({"strict", "snap"}));
    app.add_option("--zones", opt.zones, "number of zones (default 3)");
    app.add_option("--unjudged", opt.unjudged, "unjudged documents: nonrelevant|exclude")
        ->check(CLI::IsMember({"nonrelevant", "exclude"}));
    app.add_option("--alpha", opt.alpha, "significance level (default 0.05)");
    app.add_option("--out", opt.out_dir, "output directory (default .)");
    app.add_option("--workers", opt.workers, "parallel workers; 0 = all cores, 1 = serial");

    CLI::App *merge = app.add_subcommand("merge", "combine per-database result lists");
    CLI::App *bradfordize_cmd =
        app.add_subcommand("bradfordize", "re-rank each topic by source productivity");
    CLI::App *zones_cmd = app.add_subcommand("zones", "cut each topic's ranking into zones");
    CLI::App *analyze =
        app.add_subcommand("analyze", "emit scattering curves and aggregate means");
    CLI::App *eval = app.add_subcommand("eval", "per-zone precision and significance tests");
    CLI::App *stats =
        app.add_subcommand("stats", "run the significance tests on a file of (a,b) pairs");

    for (CLI::App *sub : {merge, bradfordize_cmd, zones_cmd, analyze, eval, stats})
        sub->fallthrough();
    for (CLI::App *sub : {bradfordize_cmd, zones_cmd, analyze})
        sub->add_option("--topic", opt.only_topics, "restrict to these topic numbers");
    stats->add_option("pairs_file", opt.pairs_path, "two-column file of paired values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        validate_common(opt);
        if (merge->parsed())
            return cmd_merge(opt);
        if (bradfordize_cmd->parsed())
            return cmd_bradfordize(opt);
        if (zones_cmd->parsed())
            return cmd_zones(opt);
        if (analyze->parsed())
            return cmd_analyze(opt);
        if (eval->parsed())
            return cmd_eval(opt);
        if (stats->parsed())
            return cmd_stats(opt);
        throw UsageError("no subcommand given");
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << " (byte offset " << e.byte_offset() << ")\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
