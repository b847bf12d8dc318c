#include "termkit/cli.hpp"

#include "termkit/corpus.hpp"
#include "termkit/crawl.hpp"
#include "termkit/errors.hpp"
#include "termkit/eval.hpp"
#include "termkit/extract.hpp"
#include "termkit/glossary.hpp"
#include "termkit/io.hpp"
#include "termkit/matcher.hpp"
#include "termkit/names.hpp"
#include "termkit/project.hpp"
#include "termkit/stream.hpp"
#include "termkit/tagger.hpp"
#include "termkit/textutil.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace termkit::cli {

namespace {

/// Missing input that neither the command line nor the project config
/// supplies. Reported as a usage problem (exit 2), not an operation error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string config_path;
    std::uint64_t seed = 0; // reserved for randomized components; recorded only
    bool verbose = false;
    project::ProjectConfig config;

    void load_config() {
        if (!config_path.empty()) config = project::load_config(config_path);
    }
    void note(const std::string& line) {
        if (verbose) err << line << "\n";
    }
};

using Action = std::function<int(Context&)>;

std::string resolve(const std::string& flag_value, const std::string& config_value,
                    const std::string& what) {
    if (!flag_value.empty()) return flag_value;
    if (!config_value.empty()) return config_value;
    throw UsageError(what + " is required (pass the flag or set it in the project config)");
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> items;
    for (const auto& part : text::split(csv, ',')) {
        const auto trimmed = std::string(text::trim(part));
        if (!trimmed.empty()) items.push_back(trimmed);
    }
    return items;
}

std::unique_ptr<crawl::PageFetcher> make_fetcher(const std::string& mock_site) {
    if (mock_site.empty()) return std::make_unique<crawl::HttpFetcher>();
    return std::make_unique<crawl::DirectoryFetcher>(mock_site);
}

std::unordered_set<std::string> optional_word_set(const std::string& path) {
    if (path.empty()) return {};
    return extract::load_word_set(path);
}

// ---------------------------------------------------------------------------
// Extraction chain shared by `extract` and `pipeline`.

struct ExtractArgs {
    std::string corpus_dir;
    std::string lang;
    std::string stoplist;
    std::string common_unigrams;
    std::size_t top_n = 0;
    double unigram_constant = 0.0;
    std::size_t max_len = 5;
    bool no_subset_filter = false;
    CLI::Option* top_n_opt = nullptr;
    CLI::Option* constant_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--corpus", corpus_dir, "corpus directory (default: config corpus_dir)");
        cmd->add_option("--lang", lang, "source language (default: config source_lang)");
        cmd->add_option("--stoplist", stoplist,
                        "stop-word file; terms containing one are dropped");
        cmd->add_option("--common-unigrams", common_unigrams,
                        "common-word file; such unigrams are dropped");
        top_n_opt = cmd->add_option("--top-n", top_n, "how many terms to keep (default 100)");
        constant_opt = cmd->add_option("--unigram-constant", unigram_constant,
                                       "C-value length constant (default 1.0)");
        cmd->add_option("--max-len", max_len, "longest candidate in words (default 5)");
        cmd->add_flag("--no-subset-filter", no_subset_filter,
                      "keep terms that are anchored subsets of longer terms");
    }

    std::vector<extract::ScoredTerm> run(Context& ctx) const {
        const std::string dir = resolve(corpus_dir, ctx.config.corpus_dir, "--corpus");
        const std::string language = lang.empty() ? ctx.config.source_lang : lang;
        const std::size_t n = top_n_opt->count() ? top_n : ctx.config.top_n;
        const double constant =
            constant_opt->count() ? unigram_constant : ctx.config.unigram_constant;
        if (n == 0) throw UsageError("--top-n must be at least 1");

        const corpus::Corpus corpus = corpus::load_corpus(dir);
        std::vector<std::vector<tagger::TaggedToken>> tagged;
        std::size_t used = 0;
        for (const auto& doc : corpus.documents) {
            if (doc.language != language) continue;
            ++used;
            for (const auto& sentence : tagger::tokenize(doc.text, language))
                tagged.push_back(tagger::pos_tag(sentence, language));
        }
        if (used == 0)
            throw EmptyCorpusError("corpus at " + dir + " has no documents in language \"" +
                                   language + "\"");
        ctx.note("extract: " + std::to_string(used) + " documents, " +
                 std::to_string(tagged.size()) + " sentences");

        auto candidates = extract::generate_candidates(tagged, language, max_len);
        candidates = extract::merge_morphology(candidates, language);
        auto scored = extract::cvalue_scores(candidates, constant);
        scored = extract::filter_terms(std::move(scored), optional_word_set(resolve_stoplist(ctx)),
                                       optional_word_set(resolve_common(ctx)),
                                       !no_subset_filter);
        return extract::rank_top_n(std::move(scored), n);
    }

    std::string resolve_stoplist(const Context& ctx) const {
        return stoplist.empty() ? ctx.config.stoplist_file : stoplist;
    }
    std::string resolve_common(const Context& ctx) const {
        return common_unigrams.empty() ? ctx.config.common_unigrams_file : common_unigrams;
    }
    std::string resolve_lang(const Context& ctx) const {
        return lang.empty() ? ctx.config.source_lang : lang;
    }
};

// ---------------------------------------------------------------------------
// Translation chain shared by `translate`, `glossary translate` and
// `pipeline`.

struct TranslateArgs {
    std::string targets_csv;
    std::string dict;
    std::string source_lang;
    std::string name;
    std::string existing;

    void attach(CLI::App* cmd) {
        cmd->add_option("--targets", targets_csv,
                        "comma-separated target languages (default: config target_langs)");
        cmd->add_option("--dict", dict,
                        "offline dictionary TSV backing the translation client");
        cmd->add_option("--source-lang", source_lang,
                        "source language (default: config source_lang)");
        cmd->add_option("--name", name, "glossary name (default: config name)");
        cmd->add_option("--existing", existing,
                        "glossary whose edited/user entries must be preserved");
    }

    glossary::Glossary run(Context& ctx, const std::vector<extract::ScoredTerm>& terms,
                           const std::string& out_path) const {
        const auto targets =
            targets_csv.empty() ? ctx.config.target_langs : split_csv(targets_csv);
        if (targets.empty())
            throw UsageError(
                "--targets is required (pass the flag or set target_langs in the config)");
        const std::string lang = source_lang.empty() ? ctx.config.source_lang : source_lang;
        const std::string dict_path = dict.empty() ? ctx.config.dictionary_file : dict;
        glossary::DictionaryClient client;
        if (!dict_path.empty()) client = glossary::DictionaryClient::load(dict_path);

        std::optional<glossary::Glossary> base;
        if (!existing.empty()) base = glossary::load_glossary(existing);

        try {
            return glossary::translate_terms(terms, lang, targets, client,
                                             base ? &*base : nullptr,
                                             name.empty() ? ctx.config.name : name);
        } catch (const glossary::TranslationFailedError& e) {
            // Keep the partial result: every entry is there, just untranslated.
            glossary::save_glossary(e.partial_glossary, out_path);
            ctx.note("translate: wrote partial glossary to " + out_path);
            throw;
        }
    }
};

void print_glossary_summary(Context& ctx, const glossary::Glossary& g,
                            const std::string& out_path) {
    std::size_t review = 0;
    for (const auto& entry : g.entries)
        if (entry.needs_review()) ++review;
    ctx.out << "glossary \"" << g.name << "\": " << g.entries.size() << " entries (" << review
            << " to review) -> " << out_path << "\n";
}

// ---------------------------------------------------------------------------
// Subcommands.

struct CrawlCmd {
    std::string seed, out_dir, lang, mock_site;
    std::size_t depth = 1;
    std::size_t max_bytes = 1 << 20;

    void attach(CLI::App* cmd, Action& action) {
        cmd->add_option("--seed", seed, "start URL")->required();
        cmd->add_option("--out", out_dir, "corpus output directory (default: config corpus_dir)");
        cmd->add_option("--depth", depth, "maximum link depth from the seed (default 1)");
        cmd->add_option("--max-bytes", max_bytes,
                        "stop once the corpus reaches this many bytes (default 1048576)");
        cmd->add_option("--lang", lang, "language recorded for fetched pages");
        cmd->add_option("--mock-site", mock_site,
                        "serve URLs from files in this directory instead of live HTTP");
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        const std::string dir = resolve(out_dir, ctx.config.corpus_dir, "--out");
        const std::string language = lang.empty() ? ctx.config.source_lang : lang;
        auto fetcher = make_fetcher(mock_site);
        crawl::CrawlConfig config;
        config.seed_url = seed;
        config.max_depth = depth;
        config.max_bytes = max_bytes;
        config.fetcher = fetcher.get();
        config.language = language;
        const auto result = crawl::crawl(config);
        corpus::save_corpus(result.corpus, dir);
        for (const auto& e : result.errors) ctx.note("crawl: " + e);
        ctx.out << "crawled " << result.corpus.documents.size() << " documents ("
                << result.corpus.total_bytes << " bytes) -> " << dir << "\n";
        return 0;
    }
};

struct BootstrapCmd {
    std::string seeds_csv, out_dir, search_results, lang, mock_site;
    std::size_t pages_per_query = 3;

    void attach(CLI::App* cmd, Action& action) {
        cmd->add_option("--seeds", seeds_csv, "comma-separated seed words")->required();
        cmd->add_option("--search-results", search_results,
                        "JSON file mapping each query to its result URLs")
            ->required();
        cmd->add_option("--out", out_dir, "corpus output directory (default: config corpus_dir)");
        cmd->add_option("--pages-per-query", pages_per_query,
                        "how many result URLs to fetch per query (default 3)");
        cmd->add_option("--lang", lang, "language recorded for fetched pages");
        cmd->add_option("--mock-site", mock_site,
                        "serve URLs from files in this directory instead of live HTTP");
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        const std::string dir = resolve(out_dir, ctx.config.corpus_dir, "--out");
        const std::string language = lang.empty() ? ctx.config.source_lang : lang;
        const auto seeds = split_csv(seeds_csv);
        if (seeds.empty()) throw UsageError("--seeds must name at least one word");
        auto client = crawl::StaticSearchClient::load_json(search_results);
        auto fetcher = make_fetcher(mock_site);
        try {
            const auto corpus = crawl::bootstrap_from_seeds(seeds, client, *fetcher,
                                                            pages_per_query, language);
            corpus::save_corpus(corpus, dir);
            ctx.out << "bootstrapped " << corpus.documents.size() << " documents ("
                    << corpus.total_bytes << " bytes) -> " << dir << "\n";
            return 0;
        } catch (const crawl::BootstrapFailedError& e) {
            if (!e.partial_corpus.documents.empty()) {
                corpus::save_corpus(e.partial_corpus, dir);
                ctx.note("bootstrap: saved partial corpus (" +
                         std::to_string(e.partial_corpus.documents.size()) + " documents) to " +
                         dir);
            }
            throw;
        }
    }
};

struct IngestCmd {
    std::vector<std::string> files;
    std::string out_dir, lang;

    void attach(CLI::App* cmd, Action& action) {
        cmd->add_option("files", files, "text files to ingest")->required()->expected(-1);
        cmd->add_option("--out", out_dir, "corpus output directory (default: config corpus_dir)");
        cmd->add_option("--lang", lang, "document language (default: config source_lang)");
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        const std::string dir = resolve(out_dir, ctx.config.corpus_dir, "--out");
        const std::string language = lang.empty() ? ctx.config.source_lang : lang;
        std::vector<std::filesystem::path> paths(files.begin(), files.end());
        const auto result = corpus::ingest_documents(paths, language);
        corpus::save_corpus(result.corpus, dir);
        for (const auto& e : result.errors) ctx.err << "ingest: " << e << "\n";
        ctx.out << "ingested " << result.corpus.documents.size() << " documents ("
                << result.corpus.total_bytes << " bytes) -> " << dir << "\n";
        return 0;
    }
};

struct ExtractCmd {
    ExtractArgs extract_args;
    std::string out_file;

    void attach(CLI::App* cmd, Action& action) {
        extract_args.attach(cmd);
        cmd->add_option("--out", out_file, "term list TSV to write")->required();
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        const auto terms = extract_args.run(ctx);
        io::write_file_atomic(out_file, extract::terms_to_tsv(terms));
        ctx.out << "extracted " << terms.size() << " terms -> " << out_file << "\n";
        return 0;
    }
};

struct TranslateCmd {
    TranslateArgs translate_args;
    std::string terms_file, out_file;

    void attach(CLI::App* cmd, Action& action) {
        cmd->add_option("--terms", terms_file, "ranked term list TSV (from extract)")->required();
        cmd->add_option("--out", out_file,
                        "glossary file to write, .tsv or .json (default: config glossary_file)");
        translate_args.attach(cmd);
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        const std::string out_path = resolve(out_file, ctx.config.glossary_file, "--out");
        const auto terms = extract::terms_from_tsv(io::read_file(terms_file));
        const auto g = translate_args.run(ctx, terms, out_path);
        glossary::save_glossary(g, out_path);
        print_glossary_summary(ctx, g, out_path);
        return 0;
    }
};

struct GlossaryEditCmd {
    std::string glossary_file, edits_file, out_file;

    void attach(CLI::App* cmd, Action& action) {
        cmd->add_option("--glossary", glossary_file,
                        "glossary to edit (default: config glossary_file)");
        cmd->add_option("--edits", edits_file, "JSONL edit script")->required();
        cmd->add_option("--out", out_file, "output file (default: edit in place)");
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        const std::string in_path = resolve(glossary_file, ctx.config.glossary_file, "--glossary");
        const std::string out_path = out_file.empty() ? in_path : out_file;
        const auto g = glossary::load_glossary(in_path);
        const auto edits = glossary::load_edits(edits_file);
        const auto result = glossary::apply_edits(g, edits);
        glossary::save_glossary(result.glossary, out_path);
        for (const auto& e : result.errors) ctx.err << "edit: " << e << "\n";
        print_glossary_summary(ctx, result.glossary, out_path);
        if (!result.errors.empty())
            throw Error("edit_failed", std::to_string(result.errors.size()) + " of " +
                                           std::to_string(edits.size()) +
                                           " edits failed; the rest were applied");
        return 0;
    }
};

struct GlossaryMergeCmd {
    std::vector<std::string> inputs;
    std::string out_file;

    void attach(CLI::App* cmd, Action& action) {
        cmd->add_option("inputs", inputs, "glossaries to merge, first wins conflicts")
            ->required()
            ->expected(-2);
        cmd->add_option("--out", out_file,
                        "merged glossary file (default: config glossary_file)");
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        const std::string out_path = resolve(out_file, ctx.config.glossary_file, "--out");
        auto merged = glossary::load_glossary(inputs.front());
        for (std::size_t i = 1; i < inputs.size(); ++i)
            merged = glossary::merge_glossaries(merged, glossary::load_glossary(inputs[i]));
        glossary::save_glossary(merged, out_path);
        print_glossary_summary(ctx, merged, out_path);
        return 0;
    }
};

struct GlossaryExportCmd {
    std::string glossary_file, out_file;

    void attach(CLI::App* cmd, Action& action) {
        cmd->add_option("--glossary", glossary_file,
                        "glossary to export (default: config glossary_file)");
        cmd->add_option("--out", out_file, "output file; .tsv and .json convert")->required();
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        const std::string in_path = resolve(glossary_file, ctx.config.glossary_file, "--glossary");
        const auto g = glossary::load_glossary(in_path);
        glossary::save_glossary(g, out_file);
        ctx.out << "exported \"" << g.name << "\" -> " << out_file << "\n";
        return 0;
    }
};

struct RunStreamCmd {
    std::vector<std::string> glossary_files;
    std::string gazetteer_file, transcript_file, out_file, lang;
    std::int64_t suppression_window_ms = 0;
    bool realtime = false;
    bool no_term_precedence = false;
    CLI::Option* window_opt = nullptr;

    void attach(CLI::App* cmd, Action& action) {
        cmd->add_option("--glossary", glossary_files,
                        "glossary file(s); repeat for more (default: config glossary_file)");
        cmd->add_option("--gazetteer", gazetteer_file,
                        "proper-name list (default: config gazetteer_file)");
        cmd->add_option("--transcript", transcript_file, "timed transcript JSONL")->required();
        cmd->add_option("--out", out_file, "suggestions JSONL to write")->required();
        cmd->add_option("--lang", lang,
                        "matcher language (default: the first glossary's source language)");
        window_opt = cmd->add_option("--suppression-window-ms", suppression_window_ms,
                                     "repeat-suggestion window (default 30000)");
        cmd->add_flag("--realtime", realtime, "sleep to honor each segment's t_emit_ms");
        cmd->add_flag("--no-term-precedence", no_term_precedence,
                      "emit proper names even on spans already matched as terms");
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        auto paths = glossary_files;
        if (paths.empty() && !ctx.config.glossary_file.empty())
            paths.push_back(ctx.config.glossary_file);
        if (paths.empty())
            throw UsageError("--glossary is required (pass the flag or set glossary_file in "
                             "the project config)");
        std::vector<glossary::Glossary> glossaries;
        glossaries.reserve(paths.size());
        for (const auto& p : paths) glossaries.push_back(glossary::load_glossary(p));

        const std::string language = !lang.empty() ? lang : glossaries.front().source_lang;
        const auto matcher = stream::CompiledMatcher::compile(glossaries, language);

        stream::Gazetteer gazetteer;
        const std::string gaz_path =
            gazetteer_file.empty() ? ctx.config.gazetteer_file : gazetteer_file;
        if (!gaz_path.empty()) gazetteer = stream::Gazetteer::load(gaz_path);

        const auto transcript = stream::load_transcript(transcript_file);
        stream::SessionConfig session;
        session.suppression_window_ms =
            window_opt->count() ? suppression_window_ms : ctx.config.suppression_window_ms;
        session.term_wins_identical_span = !no_term_precedence;

        const auto suggestions =
            stream::replay_transcript(transcript, matcher, gazetteer, session, realtime);
        stream::save_suggestions(suggestions, out_file);
        ctx.out << "emitted " << suggestions.size() << " suggestions -> " << out_file << "\n";
        return 0;
    }
};

struct EvaluateCmd {
    std::string expected_file, suggestions_file, transcript_file, glossary_file, report_file;
    std::string file_id;

    void attach(CLI::App* cmd, Action& action) {
        cmd->add_option("--expected", expected_file, "expected-item annotations JSONL")
            ->required();
        cmd->add_option("--suggestions", suggestions_file, "emitted suggestions JSONL")
            ->required();
        cmd->add_option("--transcript", transcript_file, "transcript the stream ran on")
            ->required();
        cmd->add_option("--glossary", glossary_file,
                        "glossary used by the stream (default: config glossary_file)");
        cmd->add_option("--report", report_file, "JSON report to write")->required();
        cmd->add_option("--file-id", file_id,
                        "label for this file in the report (default: expected file stem)");
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        const std::string glossary_path =
            resolve(glossary_file, ctx.config.glossary_file, "--glossary");
        const auto expected = eval::load_expected(expected_file);
        const auto suggestions = stream::load_suggestions(suggestions_file);
        const auto transcript = stream::load_transcript(transcript_file);
        const auto g = glossary::load_glossary(glossary_path);
        const std::string id =
            file_id.empty() ? std::filesystem::path(expected_file).stem().string() : file_id;

        const auto file = eval::evaluate_file(id, expected, suggestions, transcript, g);
        const auto report = eval::build_report({file});
        eval::save_report(report, report_file);
        ctx.out << eval::render_report_table(report);
        return 0;
    }
};

struct PipelineCmd {
    ExtractArgs extract_args;
    TranslateArgs translate_args;
    std::string out_file;

    void attach(CLI::App* cmd, Action& action) {
        extract_args.attach(cmd);
        translate_args.attach(cmd);
        cmd->add_option("--out", out_file,
                        "glossary file to write (default: config glossary_file)");
        cmd->callback([this, &action] { action = [this](Context& c) { return execute(c); }; });
    }

    int execute(Context& ctx) const {
        const std::string out_path = resolve(out_file, ctx.config.glossary_file, "--out");
        const auto terms = extract_args.run(ctx);
        ctx.out << "extracted " << terms.size() << " terms\n";
        const auto g = translate_args.run(ctx, terms, out_path);
        glossary::save_glossary(g, out_path);
        print_glossary_summary(ctx, g, out_path);
        return 0;
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{out, err, {}, 0, false, {}};

    CLI::App app{"terminology toolkit for remote simultaneous interpreting", "termkit"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", "termkit 0.1.0");
    app.add_option("--config", ctx.config_path, "project config file (JSON)");
    app.add_option("--seed", ctx.seed, "random seed for reproducible runs");
    app.add_flag("--verbose", ctx.verbose, "explain skipped inputs and intermediate counts");

    Action action;
    CrawlCmd crawl_cmd;
    crawl_cmd.attach(app.add_subcommand("crawl", "breadth-first crawl from a seed URL"), action);
    BootstrapCmd bootstrap_cmd;
    bootstrap_cmd.attach(
        app.add_subcommand("bootstrap", "build a corpus from seed-word search queries"), action);
    IngestCmd ingest_cmd;
    ingest_cmd.attach(app.add_subcommand("ingest", "build a corpus from local text files"),
                      action);
    ExtractCmd extract_cmd;
    extract_cmd.attach(app.add_subcommand("extract", "extract and rank candidate terms"), action);
    TranslateCmd translate_cmd;
    translate_cmd.attach(
        app.add_subcommand("translate", "translate a ranked term list into a glossary"), action);

    auto* glossary_cmd = app.add_subcommand("glossary", "glossary management");
    glossary_cmd->require_subcommand(1);
    TranslateCmd glossary_translate_cmd;
    glossary_translate_cmd.attach(
        glossary_cmd->add_subcommand("translate", "translate a ranked term list"), action);
    GlossaryEditCmd glossary_edit_cmd;
    glossary_edit_cmd.attach(glossary_cmd->add_subcommand("edit", "apply a JSONL edit script"),
                             action);
    GlossaryMergeCmd glossary_merge_cmd;
    glossary_merge_cmd.attach(glossary_cmd->add_subcommand("merge", "merge glossaries"), action);
    GlossaryExportCmd glossary_export_cmd;
    glossary_export_cmd.attach(
        glossary_cmd->add_subcommand("export", "convert between .tsv and .json"), action);

    RunStreamCmd run_stream_cmd;
    run_stream_cmd.attach(
        app.add_subcommand("run-stream", "replay a transcript and emit suggestions"), action);
    EvaluateCmd evaluate_cmd;
    evaluate_cmd.attach(
        app.add_subcommand("evaluate", "score suggestions against annotations"), action);
    PipelineCmd pipeline_cmd;
    pipeline_cmd.attach(
        app.add_subcommand("pipeline", "extract terms and translate them in one go"), action);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        ctx.load_config();
        return action ? action(ctx) : 2;
    } catch (const UsageError& e) {
        err << "termkit: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << nlohmann::json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc) - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

} // namespace termkit::cli
