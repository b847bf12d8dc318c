#include "termkit/eval.hpp"

#include "termkit/errors.hpp"
#include "termkit/io.hpp"
#include "termkit/matcher.hpp"

#include "support/testutil.hpp"

#include <doctest.h>

#include <random>

using namespace termkit;
using eval::Category;
using eval::ExpectedItem;
using eval::Histogram;
using eval::Kind;
using eval::Outcome;
using stream::Suggestion;
using stream::SuggestionKind;
using stream::TranscriptSegment;

namespace {

glossary::Glossary make_glossary() {
    glossary::Glossary g{"eval-demo", "en", {}};
    for (const char* term : {"interest rate", "e-mail", "address", "organization", "inflation"}) {
        glossary::GlossaryEntry e;
        e.source_term = term;
        e.source_lang = "en";
        g.entries.push_back(std::move(e));
    }
    return g;
}

TranscriptSegment segment(std::size_t index, const std::string& text) {
    const auto t0 = static_cast<std::int64_t>(index) * 3000;
    return TranscriptSegment{index, text, t0, t0 + 2500, t0 + 3000, true};
}

Suggestion term_suggestion(const std::string& surface, const std::string& source_term,
                           std::size_t segment_index) {
    Suggestion s;
    s.kind = SuggestionKind::Term;
    s.surface = surface;
    s.payload = {{"source_term", source_term}, {"translations", nlohmann::json::object()}};
    s.segment_index = segment_index;
    s.t_detected_ms = static_cast<std::int64_t>(segment_index) * 3000 + 3000;
    s.latency_ms = 500;
    return s;
}

Suggestion number_suggestion(const std::string& surface, double value, const std::string& unit,
                             std::size_t segment_index) {
    Suggestion s;
    s.kind = SuggestionKind::Number;
    s.surface = surface;
    s.payload = {{"value", value}, {"unit", unit}};
    s.segment_index = segment_index;
    s.latency_ms = 500;
    return s;
}

Suggestion name_suggestion(const std::string& surface, const std::string& canonical,
                           std::size_t segment_index) {
    Suggestion s;
    s.kind = SuggestionKind::ProperName;
    s.surface = surface;
    s.payload = {{"canonical", canonical}};
    s.segment_index = segment_index;
    s.latency_ms = 500;
    return s;
}

ExpectedItem expect_term(const std::string& surface, const std::string& glossary_form,
                         std::size_t segment_index) {
    ExpectedItem item;
    item.kind = Kind::Term;
    item.surface = surface;
    item.glossary_form = glossary_form;
    item.segment_index = segment_index;
    return item;
}

ExpectedItem expect_entity(const std::string& surface, std::size_t segment_index,
                           std::optional<double> value = std::nullopt) {
    ExpectedItem item;
    item.kind = Kind::Entity;
    item.surface = surface;
    item.value = value;
    item.segment_index = segment_index;
    return item;
}

Category category_of(const std::vector<Outcome>& outcomes, std::size_t expected_index) {
    for (const auto& o : outcomes)
        if (o.expected_index && *o.expected_index == expected_index) return o.category;
    FAIL("no outcome for expected item ", expected_index);
    return Category::FalsePositive;
}

} // namespace

TEST_CASE("exact and variant matches become passes") {
    const auto transcript = std::vector<TranscriptSegment>{
        segment(0, "the interest rates remain low"), segment(1, "send an e mail today")};
    const auto expected = std::vector<ExpectedItem>{
        expect_term("interest rates", "interest rate", 0),
        expect_term("e-mail", "e-mail", 1),
    };
    const auto suggestions = std::vector<Suggestion>{
        term_suggestion("interest rates", "interest rate", 0),
        term_suggestion("e mail", "e-mail", 1),
    };
    const auto outcomes = eval::categorize(expected, suggestions, transcript, make_glossary());
    REQUIRE(outcomes.size() == 2);
    CHECK(category_of(outcomes, 0) == Category::Pass);
    CHECK(category_of(outcomes, 1) == Category::PassDifferentSpelling);
}

TEST_CASE("matching tolerates one segment of drift and prefers the exact segment") {
    const auto transcript = std::vector<TranscriptSegment>{
        segment(0, "the interest rate part one"), segment(1, "and more talk"),
        segment(5, "far away")};
    SUBCASE("one off is accepted") {
        const auto outcomes = eval::categorize(
            {expect_term("interest rate", "interest rate", 1)},
            {term_suggestion("interest rate", "interest rate", 0)}, transcript, make_glossary());
        REQUIRE(outcomes.size() == 1);
        CHECK(outcomes[0].category == Category::Pass);
    }
    SUBCASE("two off is not") {
        // Surface absent from segments 4..6 -> scored as an ASR miss, and
        // the stranded suggestion becomes a false positive.
        const auto outcomes = eval::categorize(
            {expect_term("interest rate", "interest rate", 5)},
            {term_suggestion("interest rate", "interest rate", 0)}, transcript, make_glossary());
        REQUIRE(outcomes.size() == 2);
        CHECK(outcomes[0].category == Category::FailASR);
        CHECK(outcomes[1].category == Category::FalsePositive);
    }
    SUBCASE("exact segment wins over the neighbor") {
        const auto outcomes = eval::categorize(
            {expect_term("interest rate", "interest rate", 0)},
            {term_suggestion("interest rate", "interest rate", 1),
             term_suggestion("interest rate", "interest rate", 0)},
            transcript, make_glossary());
        REQUIRE(outcomes.size() == 2);
        CHECK(outcomes[0].suggestion_index == 1);
    }
}

TEST_CASE("misses split into ASR, not-matched, lemma and spelling failures") {
    const auto transcript = std::vector<TranscriptSegment>{
        segment(0, "we addressed this problem"),
        segment(1, "the organisation met"),
        segment(2, "the inflation stays high"),
        segment(3, "totally unrelated words"),
    };
    const auto expected = std::vector<ExpectedItem>{
        expect_term("addressed", "address", 0),       // inflection of the lemma
        expect_term("organisation", "organization", 1), // spelling variant
        expect_term("inflation", "inflation", 2),     // verbatim but unmatched
        expect_term("interest rate", "interest rate", 3), // not in the transcript
    };
    const auto outcomes = eval::categorize(expected, {}, transcript, make_glossary());
    REQUIRE(outcomes.size() == 4);
    CHECK(category_of(outcomes, 0) == Category::FailLemmaNotMatched);
    CHECK(category_of(outcomes, 1) == Category::FailDifferentSpelling);
    CHECK(category_of(outcomes, 2) == Category::FailTermNotMatched);
    CHECK(category_of(outcomes, 3) == Category::FailASR);
}

TEST_CASE("entities pass on value or canonical and fail as ASR or REC") {
    const auto transcript = std::vector<TranscriptSegment>{
        segment(0, "they spent eleven hundred euros"),
        segment(1, "a leaven hundred more was promised"),
        segment(2, "Angela Merkel disagreed"),
    };
    const auto expected = std::vector<ExpectedItem>{
        expect_entity("1,100", 0, 1100.0),
        expect_entity("1,100", 1, 1100.0),
        expect_entity("Angela Merkel", 2),
    };
    const auto suggestions = std::vector<Suggestion>{
        number_suggestion("eleven hundred", 1100.0, "EUR", 0),
    };
    const auto outcomes = eval::categorize(expected, suggestions, transcript, make_glossary());
    REQUIRE(outcomes.size() == 3);
    CHECK(category_of(outcomes, 0) == Category::Pass); // value match despite other surface
    CHECK(category_of(outcomes, 1) == Category::FailASR);
    CHECK(category_of(outcomes, 2) == Category::FailREC);
}

TEST_CASE("unconsumed suggestions are false positives in their own group") {
    const auto transcript = std::vector<TranscriptSegment>{segment(0, "fee and John spoke")};
    const auto outcomes = eval::categorize(
        {}, {term_suggestion("fee", "fee", 0), name_suggestion("John", "John", 0)}, transcript,
        make_glossary());
    REQUIRE(outcomes.size() == 2);
    CHECK(outcomes[0].kind == Kind::Term);
    CHECK(outcomes[0].category == Category::FalsePositive);
    CHECK(outcomes[0].surface == "fee");
    CHECK(outcomes[1].kind == Kind::Entity);
    CHECK(outcomes[1].category == Category::FalsePositive);
}

TEST_CASE("each suggestion satisfies at most one expected item") {
    const auto transcript =
        std::vector<TranscriptSegment>{segment(0, "interest rate and interest rate again")};
    const auto outcomes = eval::categorize(
        {expect_term("interest rate", "interest rate", 0),
         expect_term("interest rate", "interest rate", 0)},
        {term_suggestion("interest rate", "interest rate", 0)}, transcript, make_glossary());
    REQUIRE(outcomes.size() == 2);
    CHECK(category_of(outcomes, 0) == Category::Pass);
    CHECK(category_of(outcomes, 1) == Category::FailTermNotMatched);
}

TEST_CASE("segment indices outside the transcript raise AlignmentError") {
    const auto transcript = std::vector<TranscriptSegment>{segment(0, "hello")};
    CHECK_THROWS_AS(eval::categorize({expect_term("interest rate", "interest rate", 7)}, {},
                                     transcript, make_glossary()),
                    AlignmentError);
    CHECK_THROWS_AS(eval::categorize({}, {term_suggestion("interest rate", "interest rate", 7)},
                                     transcript, make_glossary()),
                    AlignmentError);
}

TEST_CASE("inflection and spelling-variant predicates") {
    CHECK(eval::inflection_of("rates", "rate", "en"));
    CHECK(eval::inflection_of("addressed", "address", "en"));
    CHECK(eval::inflection_of("studying", "study", "en"));
    CHECK(eval::inflection_of("ran", "run", "en"));
    CHECK(eval::inflection_of("monetary policies", "monetary policy", "en"));
    CHECK_FALSE(eval::inflection_of("rate", "rate", "en"));
    CHECK_FALSE(eval::inflection_of("organisation", "organization", "en"));
    CHECK_FALSE(eval::inflection_of("fiscal rates", "interest rate", "en"));

    CHECK(eval::spelling_variant("e-mail", "email"));
    CHECK(eval::spelling_variant("e mail", "e-mail"));
    CHECK(eval::spelling_variant("organisation", "organization"));
    CHECK(eval::spelling_variant("colour", "color"));
    CHECK_FALSE(eval::spelling_variant("rate", "rate"));
    CHECK_FALSE(eval::spelling_variant("rates", "notes"));
    // String-wise "rates"/"rate" is one edit apart, so the predicate says
    // variant; categorize() checks inflection first, keeping it a lemma miss.
    CHECK(eval::spelling_variant("rates", "rate"));
}

TEST_CASE("metrics reproduce the worked histogram") {
    Histogram h{{Category::Pass, 89},
                {Category::FailASR, 5},
                {Category::FailREC, 4},
                {Category::FalsePositive, 10}};
    const auto m = eval::compute_metrics(h);
    CHECK(m.precision == doctest::Approx(89.0 / 99.0));
    CHECK(m.recall == doctest::Approx(89.0 / 98.0));
    CHECK(m.precision == doctest::Approx(0.8990).epsilon(0.0005));
    CHECK(m.recall == doctest::Approx(0.9082).epsilon(0.0005));
    CHECK(m.f1 == doctest::Approx(0.9036).epsilon(0.0005));
    CHECK_FALSE(m.degenerate);
}

TEST_CASE("metric boundaries") {
    SUBCASE("all pass, no false positives") {
        const auto m = eval::compute_metrics({{Category::Pass, 7}});
        CHECK(m.precision == 1.0);
        CHECK(m.recall == 1.0);
        CHECK(m.f1 == 1.0);
        CHECK_FALSE(m.degenerate);
    }
    SUBCASE("zero passes, some expected, false positives present") {
        const auto m =
            eval::compute_metrics({{Category::FailASR, 3}, {Category::FalsePositive, 2}});
        CHECK(m.precision == 0.0);
        CHECK(m.recall == 0.0);
        CHECK(m.f1 == 0.0);
        CHECK_FALSE(m.degenerate);
    }
    SUBCASE("zero passes, some expected, nothing emitted") {
        const auto m = eval::compute_metrics({{Category::FailTermNotMatched, 3}});
        CHECK(m.recall == 0.0);
        CHECK(m.f1 == 0.0);
        CHECK(m.degenerate); // vacuous precision
    }
    SUBCASE("nothing expected, nothing emitted") {
        const auto m = eval::compute_metrics({});
        CHECK(m.precision == 1.0);
        CHECK(m.recall == 1.0);
        CHECK(m.f1 == 1.0);
        CHECK(m.degenerate);
    }
}

TEST_CASE("metrics stay in bounds and improve when a miss becomes a pass") {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> small(0, 12);
    const Category fails[] = {Category::FailASR, Category::FailDifferentSpelling,
                              Category::FailTermNotMatched, Category::FailLemmaNotMatched,
                              Category::FailREC};
    for (int iteration = 0; iteration < 500; ++iteration) {
        Histogram h;
        h[Category::Pass] = static_cast<std::size_t>(small(rng));
        h[Category::PassDifferentSpelling] = static_cast<std::size_t>(small(rng));
        h[Category::FalsePositive] = static_cast<std::size_t>(small(rng));
        for (Category c : fails) h[c] = static_cast<std::size_t>(small(rng));

        const auto m = eval::compute_metrics(h);
        REQUIRE(m.precision >= 0.0);
        REQUIRE(m.precision <= 1.0);
        REQUIRE(m.recall >= 0.0);
        REQUIRE(m.recall <= 1.0);
        REQUIRE(m.f1 >= 0.0);
        REQUIRE(m.f1 <= 1.0);

        for (Category c : fails) {
            if (h[c] == 0) continue;
            Histogram promoted = h;
            --promoted[c];
            ++promoted[Category::Pass];
            const auto better = eval::compute_metrics(promoted);
            REQUIRE(better.precision >= m.precision - 1e-12);
            REQUIRE(better.recall >= m.recall - 1e-12);
            REQUIRE(better.f1 >= m.f1 - 1e-12);
            break;
        }
    }
}

TEST_CASE("latency statistics") {
    const auto stats = eval::latency_stats(std::vector<std::int64_t>{1100, 2300, 1400});
    CHECK(stats.min_ms == 1100);
    CHECK(stats.max_ms == 2300);
    CHECK(stats.mean_ms == doctest::Approx(1600.0));

    const auto single = eval::latency_stats(std::vector<std::int64_t>{500});
    CHECK(single.min_ms == 500);
    CHECK(single.max_ms == 500);
    CHECK(single.mean_ms == doctest::Approx(500.0));

    CHECK_THROWS_AS(eval::latency_stats(std::vector<std::int64_t>{}), EmptyStatsError);
    CHECK_THROWS_AS(eval::latency_stats(std::vector<Suggestion>{}), EmptyStatsError);
}

TEST_CASE("macro averages each column; macro F1 is not the harmonic of macro P and R") {
    // File A: P=1, R=1/2; file B: P=1/2, R=1. Both have F1 = 2/3.
    eval::FileEvaluation a;
    a.file_id = "a";
    a.outcomes = {
        Outcome{Kind::Term, Category::Pass, "x", 0, 0},
        Outcome{Kind::Term, Category::FailTermNotMatched, "y", 1, std::nullopt},
    };
    eval::FileEvaluation b;
    b.file_id = "b";
    b.outcomes = {
        Outcome{Kind::Term, Category::Pass, "x", 0, 0},
        Outcome{Kind::Term, Category::FalsePositive, "z", std::nullopt, 1},
    };
    const auto report = eval::build_report({a, b});
    CHECK(report.macro_terms.precision == doctest::Approx(0.75));
    CHECK(report.macro_terms.recall == doctest::Approx(0.75));
    CHECK(report.macro_terms.f1 == doctest::Approx(2.0 / 3.0));
    const double harmonic = 2.0 * 0.75 * 0.75 / (0.75 + 0.75);
    CHECK(harmonic == doctest::Approx(0.75));
    CHECK(report.macro_terms.f1 < harmonic - 0.05);

    CHECK(report.per_file.size() == 2);
    CHECK(report.per_file[0].terms.f1 == doctest::Approx(2.0 / 3.0));
    CHECK(report.per_file[1].terms.f1 == doctest::Approx(2.0 / 3.0));
    CHECK(report.term_counts.at(Category::Pass) == 2);
    CHECK(report.term_counts.at(Category::FalsePositive) == 1);
}

TEST_CASE("report JSON and table carry all groups, counts and latency") {
    eval::FileEvaluation file;
    file.file_id = "demo";
    for (int i = 0; i < 89; ++i)
        file.outcomes.push_back(Outcome{Kind::Entity, Category::Pass, "e", std::nullopt, std::nullopt});
    for (int i = 0; i < 5; ++i)
        file.outcomes.push_back(Outcome{Kind::Entity, Category::FailASR, "e", std::nullopt, std::nullopt});
    for (int i = 0; i < 4; ++i)
        file.outcomes.push_back(Outcome{Kind::Entity, Category::FailREC, "e", std::nullopt, std::nullopt});
    for (int i = 0; i < 10; ++i)
        file.outcomes.push_back(
            Outcome{Kind::Entity, Category::FalsePositive, "e", std::nullopt, std::nullopt});
    file.latencies_ms = {1100, 2300, 1400};

    const auto report = eval::build_report({file});
    const auto j = eval::report_to_json(report);
    CHECK(j["macro"]["entities"]["precision"] == doctest::Approx(89.0 / 99.0));
    CHECK(j["macro"]["terms"]["degenerate"] == true);
    CHECK(j["counts"]["entities"]["pass"] == 89);
    CHECK(j["counts"]["entities"]["fail_rec"] == 4);
    CHECK(j["counts"]["terms"]["pass"] == 0);
    CHECK(j["latency"]["min_ms"] == 1100);
    CHECK(j["latency"]["max_ms"] == 2300);
    CHECK(j["latency"]["mean_ms"] == doctest::Approx(1600.0));

    const auto table = eval::render_report_table(report);
    CHECK(table.find("Entities") != std::string::npos);
    CHECK(table.find("89.90%") != std::string::npos);
    CHECK(table.find("90.82%") != std::string::npos);
    CHECK(table.find("mean 1600.0 ms") != std::string::npos);

    testutil::TempDir tmp;
    eval::save_report(report, tmp.path / "report.json");
    const auto reread = nlohmann::json::parse(io::read_file(tmp.path / "report.json"));
    CHECK(reread == j);
}

TEST_CASE("expected items round-trip through JSONL and are validated") {
    testutil::TempDir tmp;
    const std::vector<ExpectedItem> items{
        expect_term("interest rates", "interest rate", 0),
        expect_entity("1,100", 1, 1100.0),
        expect_entity("Angela Merkel", 2),
    };
    const auto path = tmp.path / "expected.jsonl";
    eval::save_expected(items, path);
    CHECK(eval::load_expected(path) == items);

    io::write_file_atomic(tmp.path / "bad_kind.jsonl",
                          R"({"kind":"verb","surface":"x","segment_index":0})" "\n");
    CHECK_THROWS_AS(eval::load_expected(tmp.path / "bad_kind.jsonl"), FormatError);
    io::write_file_atomic(tmp.path / "no_form.jsonl",
                          R"({"kind":"term","surface":"x","segment_index":0})" "\n");
    CHECK_THROWS_AS(eval::load_expected(tmp.path / "no_form.jsonl"), FormatError);
    io::write_file_atomic(tmp.path / "bad_json.jsonl", "{nope\n");
    CHECK_THROWS_AS(eval::load_expected(tmp.path / "bad_json.jsonl"), FormatError);
}

TEST_CASE("evaluate_file integrates replay output end to end") {
    glossary::Glossary g{"g", "en", {}};
    glossary::GlossaryEntry e;
    e.source_term = "interest rate";
    e.source_lang = "en";
    e.translations["it"] = "tasso di interesse";
    g.entries.push_back(e);
    const auto matcher = stream::CompiledMatcher::compile({g}, "en");
    const stream::Gazetteer gazetteer;

    const std::vector<TranscriptSegment> transcript{
        segment(0, "the interest rates remain low"),
        segment(1, "nothing of note here"),
    };
    const auto suggestions = stream::replay_transcript(transcript, matcher, gazetteer);
    const auto file = eval::evaluate_file(
        "fixture", {expect_term("interest rates", "interest rate", 0)}, suggestions, transcript,
        g);
    const auto report = eval::build_report({file});
    CHECK(report.per_file.size() == 1);
    CHECK(report.per_file[0].terms.precision == 1.0);
    CHECK(report.per_file[0].terms.recall == 1.0);
    CHECK(report.per_file[0].terms.f1 == 1.0);
    CHECK_FALSE(report.per_file[0].terms.degenerate);
    REQUIRE(report.latency.has_value());
    CHECK(report.latency->min_ms == 500); // t_emit 3000 - t_audio_end 2500
}
