#include "termkit/eval.hpp"

#include "termkit/errors.hpp"
#include "termkit/io.hpp"
#include "termkit/tagger.hpp"
#include "termkit/textutil.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <sstream>

namespace termkit::eval {

namespace {

constexpr std::array<Category, 4> kEntityCategories = {
    Category::Pass,
    Category::FailASR,
    Category::FailREC,
    Category::FalsePositive,
};

constexpr std::array<Category, 7> kTermCategories = {
    Category::Pass,
    Category::PassDifferentSpelling,
    Category::FailASR,
    Category::FailDifferentSpelling,
    Category::FailTermNotMatched,
    Category::FailLemmaNotMatched,
    Category::FalsePositive,
};

std::size_t count(const Histogram& h, Category c) {
    auto it = h.find(c);
    return it == h.end() ? 0 : it->second;
}

/// Lowercased word sequence; hyphens split so "e-mail" and "e mail"
/// tokenize identically for containment and variant checks.
std::vector<std::string> simple_words(const std::string& text) {
    std::vector<std::string> words;
    std::string current;
    for (char c : text) {
        if (text::is_ascii_alnum(c) || c == '\'' ||
            static_cast<unsigned char>(c) >= 0x80) {
            current += c;
        } else if (!current.empty()) {
            words.push_back(text::to_lower(current));
            current.clear();
        }
    }
    if (!current.empty()) words.push_back(text::to_lower(current));
    return words;
}

bool contains_word_sequence(const std::vector<std::string>& haystack,
                            const std::vector<std::string>& needle) {
    if (needle.empty() || needle.size() > haystack.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        bool all = true;
        for (std::size_t k = 0; k < needle.size(); ++k) {
            if (haystack[i + k] != needle[k]) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

bool payload_matches(const ExpectedItem& item, const stream::Suggestion& s) {
    if (item.kind == Kind::Term) {
        if (s.kind != stream::SuggestionKind::Term) return false;
        if (!s.payload.contains("source_term") || !s.payload["source_term"].is_string())
            return false;
        const std::string form = item.glossary_form.value_or(item.surface);
        return text::normalize_key(s.payload["source_term"].get<std::string>()) ==
               text::normalize_key(form);
    }
    if (s.kind == stream::SuggestionKind::Number) {
        if (item.value.has_value())
            return s.payload.contains("value") && s.payload["value"].is_number() &&
                   s.payload["value"].get<double>() == *item.value;
        return text::iequals(s.surface, item.surface);
    }
    if (s.kind == stream::SuggestionKind::ProperName) {
        if (s.payload.contains("canonical") && s.payload["canonical"].is_string() &&
            text::iequals(s.payload["canonical"].get<std::string>(), item.surface))
            return true;
        return text::iequals(s.surface, item.surface);
    }
    return false;
}

Category classify_miss(const ExpectedItem& item, const std::vector<std::string>& window_words,
                       const std::string& language) {
    if (!contains_word_sequence(window_words, simple_words(item.surface)))
        return Category::FailASR;
    if (item.kind == Kind::Entity) return Category::FailREC;
    const std::string form = item.glossary_form.value_or(item.surface);
    if (text::normalize_key(item.surface) == text::normalize_key(form))
        return Category::FailTermNotMatched;
    if (inflection_of(item.surface, form, language)) return Category::FailLemmaNotMatched;
    if (spelling_variant(item.surface, form)) return Category::FailDifferentSpelling;
    // Transcribed and annotated, but the surface has no systematic relation
    // to the lemma: count it with the plain not-matched misses.
    return Category::FailTermNotMatched;
}

Metrics macro_of(const std::vector<Metrics>& files) {
    Metrics m;
    if (files.empty()) {
        m.degenerate = true;
        return m;
    }
    m.precision = m.recall = m.f1 = 0.0;
    m.degenerate = false;
    for (const auto& f : files) {
        m.precision += f.precision;
        m.recall += f.recall;
        m.f1 += f.f1;
        m.degenerate = m.degenerate || f.degenerate;
    }
    const double n = static_cast<double>(files.size());
    m.precision /= n;
    m.recall /= n;
    m.f1 /= n;
    return m;
}

nlohmann::json metrics_to_json(const Metrics& m) {
    return nlohmann::json{{"precision", m.precision},
                          {"recall", m.recall},
                          {"f1", m.f1},
                          {"degenerate", m.degenerate}};
}

template <std::size_t N>
nlohmann::json histogram_to_json(const Histogram& h, const std::array<Category, N>& categories) {
    nlohmann::json j = nlohmann::json::object();
    for (Category c : categories) j[category_name(c)] = count(h, c);
    return j;
}

std::string percent(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", value * 100.0);
    return buf;
}

void table_row(std::ostringstream& out, const std::string& label, const Metrics& m) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-14s%-12s%-12s%-12s\n", label.c_str(),
                  percent(m.precision).c_str(), percent(m.recall).c_str(),
                  percent(m.f1).c_str());
    out << buf;
}

} // namespace

std::string kind_name(Kind kind) {
    return kind == Kind::Term ? "term" : "entity";
}

Kind kind_from_name(const std::string& name) {
    if (name == "term") return Kind::Term;
    if (name == "entity") return Kind::Entity;
    throw FormatError("unknown expected-item kind: \"" + name + "\"");
}

std::string category_name(Category category) {
    switch (category) {
    case Category::Pass: return "pass";
    case Category::PassDifferentSpelling: return "pass_different_spelling";
    case Category::FailASR: return "fail_asr";
    case Category::FailDifferentSpelling: return "fail_different_spelling";
    case Category::FailTermNotMatched: return "fail_term_not_matched";
    case Category::FailREC: return "fail_rec";
    case Category::FailLemmaNotMatched: return "fail_lemma_not_matched";
    case Category::FalsePositive: return "false_positive";
    }
    return "unknown";
}

Category category_from_name(const std::string& name) {
    for (Category c : kTermCategories)
        if (category_name(c) == name) return c;
    if (name == category_name(Category::FailREC)) return Category::FailREC;
    throw FormatError("unknown outcome category: \"" + name + "\"");
}

nlohmann::json expected_to_json(const ExpectedItem& item) {
    nlohmann::json j{{"kind", kind_name(item.kind)},
                     {"surface", item.surface},
                     {"segment_index", item.segment_index}};
    if (item.value) j["value"] = *item.value;
    if (item.glossary_form) j["glossary_form"] = *item.glossary_form;
    return j;
}

ExpectedItem expected_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw FormatError("expected item must be a JSON object");
    for (const char* field : {"kind", "surface", "segment_index"})
        if (!j.contains(field))
            throw FormatError(std::string("expected item missing field \"") + field + "\"");
    ExpectedItem item;
    try {
        item.kind = kind_from_name(j["kind"].get<std::string>());
        item.surface = j["surface"].get<std::string>();
        item.segment_index = j["segment_index"].get<std::size_t>();
        if (j.contains("value") && !j["value"].is_null())
            item.value = j["value"].get<double>();
        if (j.contains("glossary_form") && !j["glossary_form"].is_null())
            item.glossary_form = j["glossary_form"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed expected item: ") + e.what());
    }
    if (item.surface.empty()) throw FormatError("expected item surface must be non-empty");
    if (item.kind == Kind::Term && !item.glossary_form)
        throw FormatError("expected term \"" + item.surface + "\" lacks glossary_form");
    return item;
}

std::vector<ExpectedItem> load_expected(const std::filesystem::path& path) {
    const std::string content = io::read_file(path);
    std::vector<ExpectedItem> items;
    std::size_t line_no = 0;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (text::trim(line).empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(path.string() + ":" + std::to_string(line_no) +
                              ": invalid JSON: " + e.what());
        }
        try {
            items.push_back(expected_from_json(j));
        } catch (const FormatError& e) {
            throw FormatError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return items;
}

void save_expected(const std::vector<ExpectedItem>& items, const std::filesystem::path& path) {
    std::string out;
    for (const auto& item : items) out += expected_to_json(item).dump() + "\n";
    io::write_file_atomic(path, out);
}

bool spelling_variant(const std::string& a, const std::string& b) {
    if (text::iequals(a, b)) return false;
    auto squash = [](const std::string& s) {
        std::string r;
        for (const auto& w : simple_words(s)) r += w;
        return r;
    };
    const std::string sa = squash(a), sb = squash(b);
    if (!sa.empty() && sa == sb) return true;
    const auto aw = simple_words(a), bw = simple_words(b);
    if (aw.empty() || aw.size() != bw.size()) return false;
    bool any_diff = false;
    for (std::size_t i = 0; i < aw.size(); ++i) {
        if (aw[i] == bw[i]) continue;
        any_diff = true;
        if (aw[i].size() < 3 || bw[i].size() < 3) return false;
        if (aw[i][0] != bw[i][0]) return false;
        if (text::edit_distance(aw[i], bw[i]) > 1) return false;
    }
    return any_diff;
}

bool inflection_of(const std::string& surface, const std::string& lemma,
                   const std::string& language) {
    const auto sw = simple_words(surface);
    const auto lw = simple_words(lemma);
    if (sw.empty() || sw.size() != lw.size()) return false;
    for (std::size_t i = 0; i + 1 < sw.size(); ++i)
        if (sw[i] != lw[i]) return false;
    const std::string& s = sw.back();
    const std::string& l = lw.back();
    if (s == l) return false;
    if (tagger::singularize(s, language) == l) return true;
    if (tagger::pluralize(l, language) == s) return true;
    if (tagger::singularize(s, language) == tagger::singularize(l, language)) return true;
    if (language == "en") {
        for (const auto& form : tagger::verb_inflections(l))
            if (form == s) return true;
        auto it = tagger::irregular_verb_bases().find(s);
        if (it != tagger::irregular_verb_bases().end() && it->second == l) return true;
    }
    return false;
}

std::vector<Outcome> categorize(const std::vector<ExpectedItem>& expected,
                                const std::vector<stream::Suggestion>& suggestions,
                                const std::vector<stream::TranscriptSegment>& transcript,
                                const glossary::Glossary& glossary) {
    const std::string language = glossary.source_lang.empty() ? "en" : glossary.source_lang;

    std::map<std::size_t, const stream::TranscriptSegment*> by_index;
    for (const auto& segment : transcript) by_index.emplace(segment.index, &segment);
    for (const auto& item : expected)
        if (!by_index.count(item.segment_index))
            throw AlignmentError("expected item \"" + item.surface + "\" references segment " +
                                 std::to_string(item.segment_index) +
                                 " which is not in the transcript");
    for (const auto& s : suggestions)
        if (!by_index.count(s.segment_index))
            throw AlignmentError("suggestion \"" + s.surface + "\" references segment " +
                                 std::to_string(s.segment_index) +
                                 " which is not in the transcript");

    // Text of segments i-1..i+1, pre-tokenized, for the ASR-presence test.
    auto window_words = [&](std::size_t index) {
        std::vector<std::string> words;
        for (std::size_t candidate : {index - 1, index, index + 1}) {
            if (candidate == static_cast<std::size_t>(-1)) continue;
            auto it = by_index.find(candidate);
            if (it == by_index.end()) continue;
            auto segment_words = simple_words(it->second->text);
            words.insert(words.end(), segment_words.begin(), segment_words.end());
        }
        return words;
    };

    std::vector<bool> consumed(suggestions.size(), false);
    std::vector<Outcome> outcomes;
    outcomes.reserve(expected.size());

    for (std::size_t ei = 0; ei < expected.size(); ++ei) {
        const auto& item = expected[ei];
        std::optional<std::size_t> best;
        std::size_t best_delta = 2;
        for (std::size_t si = 0; si < suggestions.size(); ++si) {
            if (consumed[si]) continue;
            const auto& s = suggestions[si];
            const std::size_t delta = s.segment_index > item.segment_index
                                          ? s.segment_index - item.segment_index
                                          : item.segment_index - s.segment_index;
            if (delta > 1) continue;
            if (!payload_matches(item, s)) continue;
            if (delta < best_delta) {
                best = si;
                best_delta = delta;
            }
        }

        Outcome outcome;
        outcome.kind = item.kind;
        outcome.surface = item.surface;
        outcome.expected_index = ei;
        if (best) {
            consumed[*best] = true;
            outcome.suggestion_index = *best;
            const bool same_surface = text::iequals(suggestions[*best].surface, item.surface);
            outcome.category = (item.kind == Kind::Term && !same_surface)
                                   ? Category::PassDifferentSpelling
                                   : Category::Pass;
        } else {
            outcome.category = classify_miss(item, window_words(item.segment_index), language);
        }
        outcomes.push_back(std::move(outcome));
    }

    for (std::size_t si = 0; si < suggestions.size(); ++si) {
        if (consumed[si]) continue;
        Outcome outcome;
        outcome.kind =
            suggestions[si].kind == stream::SuggestionKind::Term ? Kind::Term : Kind::Entity;
        outcome.category = Category::FalsePositive;
        outcome.surface = suggestions[si].surface;
        outcome.suggestion_index = si;
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

Histogram make_histogram(const std::vector<Outcome>& outcomes, Kind kind) {
    Histogram h;
    for (const auto& outcome : outcomes)
        if (outcome.kind == kind) ++h[outcome.category];
    return h;
}

Metrics compute_metrics(const Histogram& counts) {
    const std::size_t passes =
        count(counts, Category::Pass) + count(counts, Category::PassDifferentSpelling);
    std::size_t expected_total = 0;
    for (const auto& [category, n] : counts)
        if (category != Category::FalsePositive) expected_total += n;
    const std::size_t emitted = passes + count(counts, Category::FalsePositive);

    Metrics m;
    m.degenerate = expected_total == 0 || emitted == 0;
    m.recall = expected_total == 0
                   ? 1.0
                   : static_cast<double>(passes) / static_cast<double>(expected_total);
    m.precision =
        emitted == 0 ? 1.0 : static_cast<double>(passes) / static_cast<double>(emitted);
    m.f1 = (m.precision + m.recall) == 0.0
               ? 0.0
               : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

LatencyStats latency_stats(const std::vector<std::int64_t>& latencies_ms) {
    if (latencies_ms.empty())
        throw EmptyStatsError("latency statistics require at least one suggestion");
    LatencyStats stats;
    stats.min_ms = *std::min_element(latencies_ms.begin(), latencies_ms.end());
    stats.max_ms = *std::max_element(latencies_ms.begin(), latencies_ms.end());
    double sum = 0.0;
    for (auto v : latencies_ms) sum += static_cast<double>(v);
    stats.mean_ms = sum / static_cast<double>(latencies_ms.size());
    return stats;
}

LatencyStats latency_stats(const std::vector<stream::Suggestion>& suggestions) {
    std::vector<std::int64_t> latencies;
    latencies.reserve(suggestions.size());
    for (const auto& s : suggestions) latencies.push_back(s.latency_ms);
    return latency_stats(latencies);
}

FileEvaluation evaluate_file(const std::string& file_id,
                             const std::vector<ExpectedItem>& expected,
                             const std::vector<stream::Suggestion>& suggestions,
                             const std::vector<stream::TranscriptSegment>& transcript,
                             const glossary::Glossary& glossary) {
    FileEvaluation file;
    file.file_id = file_id;
    file.outcomes = categorize(expected, suggestions, transcript, glossary);
    file.latencies_ms.reserve(suggestions.size());
    for (const auto& s : suggestions) file.latencies_ms.push_back(s.latency_ms);
    return file;
}

EvalReport build_report(const std::vector<FileEvaluation>& files) {
    EvalReport report;
    std::vector<Metrics> entity_metrics, term_metrics;
    std::vector<std::int64_t> latencies;
    for (const auto& file : files) {
        const Histogram eh = make_histogram(file.outcomes, Kind::Entity);
        const Histogram th = make_histogram(file.outcomes, Kind::Term);
        FileMetrics fm;
        fm.file_id = file.file_id;
        fm.entities = compute_metrics(eh);
        fm.terms = compute_metrics(th);
        entity_metrics.push_back(fm.entities);
        term_metrics.push_back(fm.terms);
        report.per_file.push_back(std::move(fm));
        for (const auto& [category, n] : eh) report.entity_counts[category] += n;
        for (const auto& [category, n] : th) report.term_counts[category] += n;
        latencies.insert(latencies.end(), file.latencies_ms.begin(), file.latencies_ms.end());
    }
    report.macro_entities = macro_of(entity_metrics);
    report.macro_terms = macro_of(term_metrics);
    if (!latencies.empty()) report.latency = latency_stats(latencies);
    return report;
}

nlohmann::json report_to_json(const EvalReport& report) {
    nlohmann::json files = nlohmann::json::array();
    for (const auto& fm : report.per_file)
        files.push_back(nlohmann::json{{"file", fm.file_id},
                                       {"entities", metrics_to_json(fm.entities)},
                                       {"terms", metrics_to_json(fm.terms)}});
    nlohmann::json j{
        {"per_file", files},
        {"macro",
         {{"entities", metrics_to_json(report.macro_entities)},
          {"terms", metrics_to_json(report.macro_terms)}}},
        {"counts",
         {{"entities", histogram_to_json(report.entity_counts, kEntityCategories)},
          {"terms", histogram_to_json(report.term_counts, kTermCategories)}}},
    };
    if (report.latency)
        j["latency"] = nlohmann::json{{"min_ms", report.latency->min_ms},
                                      {"max_ms", report.latency->max_ms},
                                      {"mean_ms", report.latency->mean_ms}};
    else
        j["latency"] = nullptr;
    return j;
}

std::string render_report_table(const EvalReport& report) {
    std::ostringstream out;
    char header[128];
    std::snprintf(header, sizeof(header), "%-14s%-12s%-12s%-12s\n", "", "Precision", "Recall",
                  "F1");
    out << header;
    table_row(out, "Entities", report.macro_entities);
    table_row(out, "Terms", report.macro_terms);
    if (report.per_file.size() > 1) {
        out << "\nPer file:\n";
        for (const auto& fm : report.per_file) {
            out << fm.file_id << "\n";
            table_row(out, "  Entities", fm.entities);
            table_row(out, "  Terms", fm.terms);
        }
    }
    if (report.latency) {
        char line[128];
        std::snprintf(line, sizeof(line), "\nLatency: min %lld ms, max %lld ms, mean %.1f ms\n",
                      static_cast<long long>(report.latency->min_ms),
                      static_cast<long long>(report.latency->max_ms), report.latency->mean_ms);
        out << line;
    }
    return out.str();
}

void save_report(const EvalReport& report, const std::filesystem::path& path) {
    io::write_file_atomic(path, report_to_json(report).dump(2) + "\n");
}

} // namespace termkit::eval
