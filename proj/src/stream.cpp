#include "termkit/stream.hpp"

#include "termkit/errors.hpp"
#include "termkit/io.hpp"
#include "termkit/textutil.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace termkit::stream {

namespace {

std::int64_t steady_now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename T>
T json_field(const nlohmann::json& j, const char* field) {
    try {
        return j.at(field).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad or missing field '") + field + "': " + e.what());
    }
}

} // namespace

nlohmann::json segment_to_json(const TranscriptSegment& segment) {
    nlohmann::json j;
    j["index"] = segment.index;
    j["text"] = segment.text;
    j["t_audio_start_ms"] = segment.t_audio_start_ms;
    j["t_audio_end_ms"] = segment.t_audio_end_ms;
    j["t_emit_ms"] = segment.t_emit_ms;
    j["is_final"] = segment.is_final;
    return j;
}

TranscriptSegment segment_from_json(const nlohmann::json& j) {
    TranscriptSegment segment;
    segment.index = json_field<std::size_t>(j, "index");
    segment.text = json_field<std::string>(j, "text");
    segment.t_audio_start_ms = json_field<std::int64_t>(j, "t_audio_start_ms");
    segment.t_audio_end_ms = json_field<std::int64_t>(j, "t_audio_end_ms");
    segment.t_emit_ms = json_field<std::int64_t>(j, "t_emit_ms");
    segment.is_final = j.contains("is_final") ? json_field<bool>(j, "is_final") : true;
    if (segment.t_audio_start_ms > segment.t_audio_end_ms ||
        segment.t_audio_end_ms > segment.t_emit_ms)
        throw FormatError("segment " + std::to_string(segment.index) +
                          ": timestamps must satisfy t_audio_start <= t_audio_end <= t_emit");
    return segment;
}

std::vector<TranscriptSegment> load_transcript(const std::filesystem::path& path) {
    std::vector<TranscriptSegment> segments;
    std::size_t line_no = 0;
    for (const auto& raw : text::split(io::read_file(path), '\n')) {
        ++line_no;
        const std::string_view line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(path.string() + " line " + std::to_string(line_no) + ": " +
                              e.what());
        }
        try {
            segments.push_back(segment_from_json(j));
        } catch (const FormatError& e) {
            throw FormatError(path.string() + " line " + std::to_string(line_no) + ": " +
                              e.what());
        }
        if (segments.size() > 1 &&
            segments[segments.size() - 2].index >= segments.back().index)
            throw FormatError(path.string() + " line " + std::to_string(line_no) +
                              ": segment indices must be strictly increasing");
    }
    return segments;
}

void save_transcript(const std::vector<TranscriptSegment>& segments,
                     const std::filesystem::path& path) {
    std::string out;
    for (const auto& segment : segments) out += segment_to_json(segment).dump() + "\n";
    io::write_file_atomic(path, out);
}

std::string suggestion_kind_name(SuggestionKind kind) {
    switch (kind) {
    case SuggestionKind::Term: return "term";
    case SuggestionKind::Number: return "number";
    case SuggestionKind::ProperName: return "proper_name";
    }
    return "term";
}

SuggestionKind suggestion_kind_from_name(const std::string& name) {
    if (name == "term") return SuggestionKind::Term;
    if (name == "number") return SuggestionKind::Number;
    if (name == "proper_name") return SuggestionKind::ProperName;
    throw FormatError("unknown suggestion kind '" + name + "'");
}

nlohmann::json suggestion_to_json(const Suggestion& suggestion) {
    nlohmann::json j;
    j["kind"] = suggestion_kind_name(suggestion.kind);
    j["surface"] = suggestion.surface;
    j["payload"] = suggestion.payload;
    j["segment_index"] = suggestion.segment_index;
    j["t_detected_ms"] = suggestion.t_detected_ms;
    j["latency_ms"] = suggestion.latency_ms;
    return j;
}

Suggestion suggestion_from_json(const nlohmann::json& j) {
    Suggestion suggestion;
    suggestion.kind = suggestion_kind_from_name(json_field<std::string>(j, "kind"));
    suggestion.surface = json_field<std::string>(j, "surface");
    if (!j.contains("payload")) throw FormatError("bad or missing field 'payload'");
    suggestion.payload = j.at("payload");
    suggestion.segment_index = json_field<std::size_t>(j, "segment_index");
    suggestion.t_detected_ms = json_field<std::int64_t>(j, "t_detected_ms");
    suggestion.latency_ms = json_field<std::int64_t>(j, "latency_ms");
    return suggestion;
}

std::string suggestions_to_jsonl(const std::vector<Suggestion>& suggestions) {
    std::string out;
    for (const auto& suggestion : suggestions) out += suggestion_to_json(suggestion).dump() + "\n";
    return out;
}

std::vector<Suggestion> suggestions_from_jsonl(const std::string& jsonl) {
    std::vector<Suggestion> out;
    std::size_t line_no = 0;
    for (const auto& raw : text::split(jsonl, '\n')) {
        ++line_no;
        const std::string_view line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        try {
            out.push_back(suggestion_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw FormatError("suggestions line " + std::to_string(line_no) + ": " + e.what());
        } catch (const FormatError& e) {
            throw FormatError("suggestions line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

void save_suggestions(const std::vector<Suggestion>& suggestions,
                      const std::filesystem::path& path) {
    io::write_file_atomic(path, suggestions_to_jsonl(suggestions));
}

std::vector<Suggestion> load_suggestions(const std::filesystem::path& path) {
    try {
        return suggestions_from_jsonl(io::read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

SystemClock::SystemClock() : epoch_ms_(steady_now_ms()) {}

std::int64_t SystemClock::now_ms() { return steady_now_ms() - epoch_ms_; }

StreamSession::StreamSession(const CompiledMatcher& matcher, const Gazetteer& gazetteer,
                             Clock& clock, SessionConfig config)
    : matcher_(matcher), gazetteer_(gazetteer), clock_(clock), config_(config) {}

std::vector<Suggestion> StreamSession::process_segment(const TranscriptSegment& segment) {
    if (last_index_ && segment.index <= *last_index_)
        throw OrderingError("segment " + std::to_string(segment.index) +
                            " arrived after segment " + std::to_string(*last_index_));
    last_index_ = segment.index;
    if (!segment.is_final) return {}; // partials display through unmatched

    struct Candidate {
        std::size_t start = 0;
        std::size_t end = 0;
        int order = 0; // Term < Number < ProperName at equal start
        Suggestion suggestion;
        std::string key; // suppression identity: kind + canonical payload
    };
    std::vector<Candidate> candidates;

    const auto term_matches = matcher_.match(segment.text);
    for (const auto& match : term_matches) {
        Candidate c;
        c.start = match.start;
        c.end = match.end;
        c.order = 0;
        c.suggestion.kind = SuggestionKind::Term;
        c.suggestion.surface = match.surface;
        c.suggestion.payload = {{"source_term", match.entry->source_term},
                                {"translations", match.entry->translations}};
        c.key = "term\x1f" + text::normalize_key(match.entry->source_term);
        candidates.push_back(std::move(c));
    }
    for (const auto& number : detect_numbers(segment.text, matcher_.language())) {
        Candidate c;
        c.start = number.start;
        c.end = number.end;
        c.order = 1;
        c.suggestion.kind = SuggestionKind::Number;
        c.suggestion.surface = number.surface;
        c.suggestion.payload = {{"value", number.value}, {"unit", number.unit}};
        c.key = "number\x1f" + c.suggestion.payload.dump();
        candidates.push_back(std::move(c));
    }
    for (const auto& name :
         detect_proper_names(segment.text, gazetteer_, matcher_.language())) {
        if (config_.term_wins_identical_span) {
            bool shadowed = false;
            for (const auto& match : term_matches)
                if (match.start == name.start && match.end == name.end) {
                    shadowed = true;
                    break;
                }
            if (shadowed) continue;
        }
        Candidate c;
        c.start = name.start;
        c.end = name.end;
        c.order = 2;
        c.suggestion.kind = SuggestionKind::ProperName;
        c.suggestion.surface = name.surface;
        c.suggestion.payload = {{"canonical", name.canonical}};
        c.key = "proper_name\x1f" + name.canonical;
        candidates.push_back(std::move(c));
    }

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.start != b.start) return a.start < b.start;
        if (a.order != b.order) return a.order < b.order;
        return a.end < b.end;
    });

    const std::int64_t t_detected = clock_.now_ms();
    const std::int64_t latency = std::max<std::int64_t>(0, t_detected - segment.t_audio_end_ms);
    std::vector<Suggestion> out;
    for (auto& candidate : candidates) {
        auto it = last_emitted_.find(candidate.key);
        if (it != last_emitted_.end() && t_detected - it->second < config_.suppression_window_ms)
            continue;
        last_emitted_[candidate.key] = t_detected;
        candidate.suggestion.segment_index = segment.index;
        candidate.suggestion.t_detected_ms = t_detected;
        candidate.suggestion.latency_ms = latency;
        out.push_back(std::move(candidate.suggestion));
    }
    return out;
}

std::vector<Suggestion> replay_transcript(const std::vector<TranscriptSegment>& segments,
                                          const CompiledMatcher& matcher,
                                          const Gazetteer& gazetteer, SessionConfig config,
                                          bool realtime) {
    std::vector<Suggestion> out;
    if (realtime) {
        SystemClock clock;
        StreamSession session(matcher, gazetteer, clock, config);
        for (const auto& segment : segments) {
            const std::int64_t wait = segment.t_emit_ms - clock.now_ms();
            if (wait > 0) std::this_thread::sleep_for(std::chrono::milliseconds(wait));
            auto suggestions = session.process_segment(segment);
            out.insert(out.end(), suggestions.begin(), suggestions.end());
        }
        return out;
    }
    SimulatedClock clock;
    StreamSession session(matcher, gazetteer, clock, config);
    for (const auto& segment : segments) {
        clock.advance_to(segment.t_emit_ms);
        auto suggestions = session.process_segment(segment);
        out.insert(out.end(), suggestions.begin(), suggestions.end());
    }
    return out;
}

} // namespace termkit::stream
