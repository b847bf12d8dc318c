#pragma once

#include "termkit/glossary.hpp"
#include "termkit/stream.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace termkit::eval {

/// Annotation categories: glossary terms vs everything else the stream can
/// surface (numbers, proper names).
enum class Kind { Term, Entity };

std::string kind_name(Kind kind);
Kind kind_from_name(const std::string& name); // FormatError

/// One human annotation: what should have been suggested, and where.
/// JSONL field names match the struct. Term items must carry the glossary
/// lemma they are expected to hit.
struct ExpectedItem {
    Kind kind = Kind::Term;
    std::string surface;                      // the form actually spoken
    std::optional<double> value;              // normalized value, numbers only
    std::optional<std::string> glossary_form; // lemma as it appears in the glossary
    std::size_t segment_index = 0;

    bool operator==(const ExpectedItem&) const = default;
};

nlohmann::json expected_to_json(const ExpectedItem& item);
ExpectedItem expected_from_json(const nlohmann::json& j); // FormatError
std::vector<ExpectedItem> load_expected(const std::filesystem::path& path);
void save_expected(const std::vector<ExpectedItem>& items, const std::filesystem::path& path);

/// Outcome taxonomy. Entity items only ever receive Pass, FailASR, FailREC
/// or FalsePositive; the finer-grained categories are for terms.
enum class Category {
    Pass,
    PassDifferentSpelling,
    FailASR,
    FailDifferentSpelling,
    FailTermNotMatched,
    FailREC,
    FailLemmaNotMatched,
    FalsePositive,
};

std::string category_name(Category category);
Category category_from_name(const std::string& name); // FormatError

/// Judgement for one expected item, or for one emitted-but-unexpected
/// suggestion (FalsePositive).
struct Outcome {
    Kind kind = Kind::Term;
    Category category = Category::Pass;
    std::string surface; // expected surface; emitted surface for FalsePositive
    std::optional<std::size_t> expected_index;   // into the expected list
    std::optional<std::size_t> suggestion_index; // matched / spurious suggestion

    bool operator==(const Outcome&) const = default;
};

/// True when the two strings differ only by spelling: identical once
/// hyphens/spaces are dropped ("e-mail" / "email" / "e mail"), or word by
/// word within Levenshtein distance 1 for words of length >= 3 sharing the
/// first letter ("organisation" / "organization"). Case-insensitive;
/// identical strings are not variants.
bool spelling_variant(const std::string& a, const std::string& b);

/// True when `surface` inflects `lemma`: all words equal except the last,
/// which differs by number ("rates" / "rate") or by regular or irregular
/// verb morphology ("addressed" / "address", "ran" / "run").
bool inflection_of(const std::string& surface, const std::string& lemma,
                   const std::string& language);

/// Aligns annotations against emitted suggestions (same segment, +/-1
/// tolerance; each suggestion satisfies at most one item) and assigns every
/// expected item exactly one category; leftover suggestions become
/// FalsePositive outcomes. The glossary supplies the source language for
/// morphology. Throws AlignmentError when an expected item or suggestion
/// references a segment index missing from the transcript.
std::vector<Outcome> categorize(const std::vector<ExpectedItem>& expected,
                                const std::vector<stream::Suggestion>& suggestions,
                                const std::vector<stream::TranscriptSegment>& transcript,
                                const glossary::Glossary& glossary);

using Histogram = std::map<Category, std::size_t>;

/// Counts the outcomes of one kind group (FalsePositive rows carry the kind
/// of the spurious suggestion).
Histogram make_histogram(const std::vector<Outcome>& outcomes, Kind kind);

struct Metrics {
    double precision = 1.0;
    double recall = 1.0;
    double f1 = 1.0;
    /// Set when a denominator was empty (nothing expected and/or nothing
    /// emitted); the affected metrics are reported as vacuous 1.0.
    bool degenerate = false;

    bool operator==(const Metrics&) const = default;
};

/// recall    = passes / all expected items
/// precision = passes / (passes + false positives)
/// f1        = 2PR/(P+R), 0 when P+R = 0
/// where passes = Pass + PassDifferentSpelling. Empty denominators yield
/// vacuous 1.0 plus the degenerate flag.
Metrics compute_metrics(const Histogram& counts);

struct LatencyStats {
    std::int64_t min_ms = 0;
    std::int64_t max_ms = 0;
    double mean_ms = 0.0;

    bool operator==(const LatencyStats&) const = default;
};

LatencyStats latency_stats(const std::vector<std::int64_t>& latencies_ms); // EmptyStatsError
LatencyStats latency_stats(const std::vector<stream::Suggestion>& suggestions);

/// Everything the report needs from one evaluated file.
struct FileEvaluation {
    std::string file_id;
    std::vector<Outcome> outcomes;
    std::vector<std::int64_t> latencies_ms;
};

/// Convenience wrapper: categorize + collect latencies.
FileEvaluation evaluate_file(const std::string& file_id,
                             const std::vector<ExpectedItem>& expected,
                             const std::vector<stream::Suggestion>& suggestions,
                             const std::vector<stream::TranscriptSegment>& transcript,
                             const glossary::Glossary& glossary);

struct FileMetrics {
    std::string file_id;
    Metrics entities;
    Metrics terms;

    bool operator==(const FileMetrics&) const = default;
};

struct EvalReport {
    std::vector<FileMetrics> per_file;
    /// Arithmetic means of the per-file precision, recall AND f1 columns.
    /// Macro f1 is NOT 2PR/(P+R) of the macro precision/recall.
    Metrics macro_entities;
    Metrics macro_terms;
    Histogram entity_counts; // aggregated over all files
    Histogram term_counts;
    std::optional<LatencyStats> latency; // absent when nothing was emitted
};

EvalReport build_report(const std::vector<FileEvaluation>& files);

nlohmann::json report_to_json(const EvalReport& report);

/// Plain-text table: one macro row per group with percent-formatted
/// P/R/F1 columns, then a per-file breakdown and the latency line.
std::string render_report_table(const EvalReport& report);

void save_report(const EvalReport& report, const std::filesystem::path& path);

} // namespace termkit::eval
