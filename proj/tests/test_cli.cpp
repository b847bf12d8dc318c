#include "termkit/cli.hpp"

#include "termkit/crawl.hpp"
#include "termkit/errors.hpp"
#include "termkit/eval.hpp"
#include "termkit/extract.hpp"
#include "termkit/glossary.hpp"
#include "termkit/io.hpp"
#include "termkit/project.hpp"
#include "termkit/stream.hpp"

#include "support/testutil.hpp"

#include <doctest.h>

#include <sstream>

using namespace termkit;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult result;
    result.code = cli::run(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

// Content words adjacent to the key terms are function words or prepositions,
// so "interest rate" etc. survive as standalone terms instead of being
// swallowed into longer candidates and dropped by the anchored-subset filter.
const char* kSampleA =
    "The interest rate was high. The interest rate is a tool of the central bank. "
    "Monetary policy is about the interest rate and the euro area.\n";
const char* kSampleB =
    "Officials spoke of the interest rate and of the inflation target. The "
    "inflation target was set. Monetary policy was tight in the euro area.\n";

struct Workspace {
    testutil::TempDir tmp;
    std::filesystem::path file_a, file_b, corpus_dir, terms_tsv, dict_tsv, glossary_tsv;

    Workspace() {
        file_a = tmp.path / "a.txt";
        file_b = tmp.path / "b.txt";
        corpus_dir = tmp.path / "corpus";
        terms_tsv = tmp.path / "terms.tsv";
        dict_tsv = tmp.path / "dict.tsv";
        glossary_tsv = tmp.path / "glossary.tsv";
        io::write_file_atomic(file_a, kSampleA);
        io::write_file_atomic(file_b, kSampleB);
        io::write_file_atomic(dict_tsv,
                              "# demo dictionary\n"
                              "interest rate\tit\ttasso di interesse\n"
                              "monetary policy\tit\tpolitica monetaria\n"
                              "inflation target\tit\tobiettivo di inflazione\n");
    }

    void ingest() {
        const auto r = run_cli({"ingest", "--lang", "en", "--out", corpus_dir.string(),
                                file_a.string(), file_b.string()});
        REQUIRE(r.code == 0);
    }
};

} // namespace

TEST_CASE("usage errors exit with 2 and help exits with 0") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"crawl"}).code == 2);            // missing --seed
    CHECK(run_cli({"glossary"}).code == 2);         // missing subcommand
    CHECK(run_cli({"extract", "--corpus", "x"}).code == 2); // missing --out

    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("termkit") != std::string::npos);
    CHECK(help.out.find("run-stream") != std::string::npos);
}

TEST_CASE("ingest, extract, translate, edit, merge and export chain together") {
    Workspace ws;
    ws.ingest();
    CHECK(std::filesystem::exists(ws.corpus_dir / "manifest.json"));

    const auto extract_result =
        run_cli({"extract", "--corpus", ws.corpus_dir.string(), "--out", ws.terms_tsv.string(),
                 "--top-n", "6"});
    REQUIRE(extract_result.code == 0);
    CHECK(extract_result.out.find("extracted") != std::string::npos);
    const auto terms = extract::terms_from_tsv(io::read_file(ws.terms_tsv));
    REQUIRE(!terms.empty());
    CHECK(terms.size() <= 6);

    SUBCASE("re-running extract reproduces the artifact byte for byte") {
        const std::string first = io::read_file(ws.terms_tsv);
        REQUIRE(run_cli({"extract", "--corpus", ws.corpus_dir.string(), "--out",
                         ws.terms_tsv.string(), "--top-n", "6"})
                    .code == 0);
        CHECK(io::read_file(ws.terms_tsv) == first);
    }

    const auto translate_result =
        run_cli({"translate", "--terms", ws.terms_tsv.string(), "--targets", "it", "--dict",
                 ws.dict_tsv.string(), "--out", ws.glossary_tsv.string(), "--name", "demo"});
    REQUIRE(translate_result.code == 0);
    auto g = glossary::load_glossary(ws.glossary_tsv);
    CHECK(g.name == "demo");
    CHECK(g.entries.size() == terms.size());
    const auto* rate = g.find("interest rate");
    REQUIRE(rate != nullptr);
    CHECK(rate->translations.at("it") == "tasso di interesse");

    SUBCASE("edits apply and failures surface as exit 1 with the work still done") {
        const auto edits_path = ws.tmp.path / "edits.jsonl";
        io::write_file_atomic(
            edits_path,
            R"({"op":"set_translation","source_term":"interest rate","target_lang":"it","translation":"tasso"})"
            "\n"
            R"({"op":"delete_entry","source_term":"no such term"})"
            "\n");
        const auto out2 = ws.tmp.path / "edited.tsv";
        const auto r = run_cli({"glossary", "edit", "--glossary", ws.glossary_tsv.string(),
                                "--edits", edits_path.string(), "--out", out2.string()});
        CHECK(r.code == 1);
        CHECK(r.err.find("edit_failed") != std::string::npos);
        const auto edited = glossary::load_glossary(out2);
        const auto* entry = edited.find("interest rate");
        REQUIRE(entry != nullptr);
        CHECK(entry->translations.at("it") == "tasso");
        CHECK(entry->provenance == glossary::Provenance::Edited);
    }

    SUBCASE("merge unions glossaries and export converts formats") {
        glossary::Glossary extra{"extra", "en", {}};
        glossary::GlossaryEntry entry;
        entry.source_term = "deposit facility";
        entry.source_lang = "en";
        entry.translations["it"] = "deposito presso la banca centrale";
        entry.provenance = glossary::Provenance::UserAdded;
        extra.entries.push_back(entry);
        const auto extra_path = ws.tmp.path / "extra.tsv";
        glossary::save_tsv(extra, extra_path);

        const auto merged_path = ws.tmp.path / "merged.tsv";
        REQUIRE(run_cli({"glossary", "merge", ws.glossary_tsv.string(), extra_path.string(),
                         "--out", merged_path.string()})
                    .code == 0);
        const auto merged = glossary::load_glossary(merged_path);
        CHECK(merged.entries.size() == g.entries.size() + 1);
        CHECK(merged.find("deposit facility") != nullptr);

        const auto json_path = ws.tmp.path / "merged.json";
        REQUIRE(run_cli({"glossary", "export", "--glossary", merged_path.string(), "--out",
                         json_path.string()})
                    .code == 0);
        CHECK(glossary::load_glossary(json_path) == merged);
    }
}

TEST_CASE("pipeline produces a translated glossary in one command") {
    Workspace ws;
    ws.ingest();
    const auto out = ws.tmp.path / "pipeline.tsv";
    const auto r = run_cli({"pipeline", "--corpus", ws.corpus_dir.string(), "--targets", "it",
                            "--dict", ws.dict_tsv.string(), "--out", out.string(), "--top-n",
                            "4"});
    REQUIRE(r.code == 0);
    const auto g = glossary::load_glossary(out);
    CHECK(g.entries.size() <= 4);
    CHECK(!g.entries.empty());
}

TEST_CASE("project config supplies defaults and flags override it") {
    Workspace ws;
    ws.ingest();

    project::ProjectConfig config;
    config.name = "configured";
    config.source_lang = "en";
    config.target_langs = {"it"};
    config.top_n = 3;
    config.corpus_dir = ws.corpus_dir.string();
    config.glossary_file = (ws.tmp.path / "from-config.tsv").string();
    config.dictionary_file = ws.dict_tsv.string();
    const auto config_path = ws.tmp.path / "project.json";
    project::save_config(config, config_path);

    // No --corpus / --targets / --out anywhere: everything from the config.
    const auto r = run_cli({"--config", config_path.string(), "pipeline"});
    REQUIRE(r.code == 0);
    const auto g = glossary::load_glossary(ws.tmp.path / "from-config.tsv");
    CHECK(g.name == "configured");
    CHECK(g.entries.size() <= 3);

    // Flag wins over config.
    const auto out2 = ws.tmp.path / "override.tsv";
    REQUIRE(run_cli({"--config", config_path.string(), "pipeline", "--top-n", "1", "--out",
                     out2.string()})
                .code == 0);
    CHECK(glossary::load_glossary(out2).entries.size() == 1);

    SUBCASE("a malformed config is an operation failure with a JSON error") {
        io::write_file_atomic(ws.tmp.path / "bad.json", "{\"topn\": 3}\n");
        const auto bad = run_cli({"--config", (ws.tmp.path / "bad.json").string(), "extract",
                                  "--out", "x.tsv"});
        CHECK(bad.code == 1);
        const auto j = nlohmann::json::parse(bad.err);
        CHECK(j["error"] == "format_error");
    }
}

TEST_CASE("project config JSON round-trips and rejects bad values") {
    project::ProjectConfig config;
    config.name = "ecb";
    config.target_langs = {"it", "fr"};
    config.top_n = 50;
    config.suppression_window_ms = 10000;
    CHECK(project::config_from_json(project::config_to_json(config)) == config);
    CHECK(project::config_from_json(nlohmann::json::object()) == project::ProjectConfig{});

    CHECK_THROWS_AS(project::config_from_json({{"top_n", 0}}), FormatError);
    CHECK_THROWS_AS(project::config_from_json({{"unigram_constant", 0.0}}), FormatError);
    CHECK_THROWS_AS(project::config_from_json({{"suppression_window_ms", -5}}), FormatError);
    CHECK_THROWS_AS(project::config_from_json({{"no_such_key", 1}}), FormatError);
    CHECK_THROWS_AS(project::config_from_json(nlohmann::json::array()), FormatError);
}

TEST_CASE("crawl and bootstrap work against a mock site directory") {
    testutil::TempDir tmp;
    const auto site = tmp.path / "site";
    std::filesystem::create_directories(site);
    const std::string page_one =
        "<html><body><p>Central bank policy discussion, long enough to keep.</p>"
        "<a href=\"https://site.test/two\">more</a></body></html>";
    const std::string page_two =
        "<html><body><p>Interest rate outlook for the euro area economy.</p></body></html>";
    io::write_file_atomic(site / crawl::DirectoryFetcher::file_name_for("https://site.test/"),
                          page_one);
    io::write_file_atomic(site / crawl::DirectoryFetcher::file_name_for("https://site.test/two"),
                          page_two);

    const auto corpus_dir = tmp.path / "crawled";
    const auto r = run_cli({"crawl", "--seed", "https://site.test/", "--mock-site", site.string(),
                            "--out", corpus_dir.string(), "--depth", "1"});
    REQUIRE(r.code == 0);
    const auto crawled = corpus::load_corpus(corpus_dir);
    CHECK(crawled.documents.size() == 2);

    const auto results_path = tmp.path / "results.json";
    io::write_file_atomic(results_path, R"({"alpha beta": ["https://site.test/two"]})" "\n");
    const auto boot_dir = tmp.path / "boot";
    const auto boot = run_cli({"bootstrap", "--seeds", "alpha,beta", "--search-results",
                               results_path.string(), "--mock-site", site.string(), "--out",
                               boot_dir.string()});
    REQUIRE(boot.code == 0);
    CHECK(corpus::load_corpus(boot_dir).documents.size() == 1);

    SUBCASE("a dead seed is an operation failure") {
        const auto dead = run_cli({"crawl", "--seed", "https://nowhere.test/", "--mock-site",
                                   site.string(), "--out", (tmp.path / "dead").string()});
        CHECK(dead.code == 1);
        CHECK(nlohmann::json::parse(dead.err)["error"] == "crawl_failed");
    }
}

TEST_CASE("run-stream and evaluate close the loop deterministically") {
    testutil::TempDir tmp;

    glossary::Glossary g{"stream-demo", "en", {}};
    glossary::GlossaryEntry entry;
    entry.source_term = "interest rate";
    entry.source_lang = "en";
    entry.translations["it"] = "tasso di interesse";
    g.entries.push_back(entry);
    const auto glossary_path = tmp.path / "glossary.tsv";
    glossary::save_tsv(g, glossary_path);

    io::write_file_atomic(tmp.path / "gazetteer.txt", "Christine Lagarde\n");

    std::vector<stream::TranscriptSegment> transcript{
        {0, "the interest rates remain low", 0, 2500, 3000, true},
        {1, "Christine Lagarde expects growth of 2.5 percent", 3000, 5500, 6000, true},
    };
    const auto transcript_path = tmp.path / "transcript.jsonl";
    stream::save_transcript(transcript, transcript_path);

    const auto suggestions_path = tmp.path / "suggestions.jsonl";
    const auto stream_result =
        run_cli({"run-stream", "--glossary", glossary_path.string(), "--gazetteer",
                 (tmp.path / "gazetteer.txt").string(), "--transcript", transcript_path.string(),
                 "--out", suggestions_path.string()});
    REQUIRE(stream_result.code == 0);
    const auto suggestions = stream::load_suggestions(suggestions_path);
    REQUIRE(suggestions.size() == 3); // term, proper name, number

    SUBCASE("identical reruns produce byte-identical suggestion files") {
        const std::string first = io::read_file(suggestions_path);
        REQUIRE(run_cli({"run-stream", "--glossary", glossary_path.string(), "--gazetteer",
                         (tmp.path / "gazetteer.txt").string(), "--transcript",
                         transcript_path.string(), "--out", suggestions_path.string()})
                    .code == 0);
        CHECK(io::read_file(suggestions_path) == first);
    }

    std::vector<eval::ExpectedItem> expected(3);
    expected[0].kind = eval::Kind::Term;
    expected[0].surface = "interest rates";
    expected[0].glossary_form = "interest rate";
    expected[0].segment_index = 0;
    expected[1].kind = eval::Kind::Entity;
    expected[1].surface = "Christine Lagarde";
    expected[1].segment_index = 1;
    expected[2].kind = eval::Kind::Entity;
    expected[2].surface = "2.5 percent";
    expected[2].value = 2.5;
    expected[2].segment_index = 1;
    const auto expected_path = tmp.path / "expected.jsonl";
    eval::save_expected(expected, expected_path);

    const auto report_path = tmp.path / "report.json";
    const auto eval_result =
        run_cli({"evaluate", "--expected", expected_path.string(), "--suggestions",
                 suggestions_path.string(), "--transcript", transcript_path.string(),
                 "--glossary", glossary_path.string(), "--report", report_path.string()});
    REQUIRE(eval_result.code == 0);
    CHECK(eval_result.out.find("Entities") != std::string::npos);
    CHECK(eval_result.out.find("100.00%") != std::string::npos);
    const auto report = nlohmann::json::parse(io::read_file(report_path));
    CHECK(report["macro"]["terms"]["f1"] == 1.0);
    CHECK(report["macro"]["entities"]["f1"] == 1.0);
    CHECK(report["counts"]["entities"]["pass"] == 2);

    SUBCASE("mismatched segment indices are an alignment failure") {
        expected[0].segment_index = 40;
        eval::save_expected(expected, expected_path);
        const auto bad =
            run_cli({"evaluate", "--expected", expected_path.string(), "--suggestions",
                     suggestions_path.string(), "--transcript", transcript_path.string(),
                     "--glossary", glossary_path.string(), "--report", report_path.string()});
        CHECK(bad.code == 1);
        CHECK(nlohmann::json::parse(bad.err)["error"] == "alignment_error");
    }
}

TEST_CASE("global seed and verbose flags are accepted") {
    Workspace ws;
    ws.ingest();
    const auto r = run_cli({"--seed", "7", "--verbose", "extract", "--corpus",
                            ws.corpus_dir.string(), "--out", ws.terms_tsv.string()});
    CHECK(r.code == 0);
    CHECK(r.err.find("extract:") != std::string::npos); // verbose note
}
