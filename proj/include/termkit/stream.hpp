#pragma once

#include "termkit/matcher.hpp"
#include "termkit/names.hpp"
#include "termkit/numbers.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace termkit::stream {

/// One timed ASR hypothesis. Replay input is JSON-lines with the same
/// field names; is_final defaults to true when omitted.
struct TranscriptSegment {
    std::size_t index = 0;
    std::string text;
    std::int64_t t_audio_start_ms = 0;
    std::int64_t t_audio_end_ms = 0;
    std::int64_t t_emit_ms = 0; // when the (simulated) ASR produced the segment
    bool is_final = true;

    bool operator==(const TranscriptSegment&) const = default;
};

nlohmann::json segment_to_json(const TranscriptSegment& segment);
TranscriptSegment segment_from_json(const nlohmann::json& j); // FormatError

/// Loads and validates a JSONL transcript: monotone timestamps within each
/// segment and strictly increasing indices. Throws FormatError.
std::vector<TranscriptSegment> load_transcript(const std::filesystem::path& path);
void save_transcript(const std::vector<TranscriptSegment>& segments,
                     const std::filesystem::path& path);

enum class SuggestionKind { Term, Number, ProperName };

std::string suggestion_kind_name(SuggestionKind kind);
SuggestionKind suggestion_kind_from_name(const std::string& name); // FormatError

struct Suggestion {
    SuggestionKind kind = SuggestionKind::Term;
    std::string surface; // matched text
    // Term: {"source_term", "translations"}; Number: {"value", "unit"};
    // ProperName: {"canonical"}.
    nlohmann::json payload;
    std::size_t segment_index = 0;
    std::int64_t t_detected_ms = 0;
    std::int64_t latency_ms = 0; // t_detected_ms - t_audio_end_ms of the segment

    bool operator==(const Suggestion&) const = default;
};

nlohmann::json suggestion_to_json(const Suggestion& suggestion);
Suggestion suggestion_from_json(const nlohmann::json& j); // FormatError

std::string suggestions_to_jsonl(const std::vector<Suggestion>& suggestions);
std::vector<Suggestion> suggestions_from_jsonl(const std::string& jsonl); // FormatError
void save_suggestions(const std::vector<Suggestion>& suggestions,
                      const std::filesystem::path& path);
std::vector<Suggestion> load_suggestions(const std::filesystem::path& path);

class Clock {
public:
    virtual ~Clock() = default;
    virtual std::int64_t now_ms() = 0;
};

/// Replay clock pinned to the transcript timeline; makes replays fully
/// deterministic.
class SimulatedClock : public Clock {
public:
    std::int64_t now_ms() override { return now_; }
    void advance_to(std::int64_t t_ms) {
        if (t_ms > now_) now_ = t_ms;
    }

private:
    std::int64_t now_ = 0;
};

/// Monotonic wall clock for live mode, measured from construction.
class SystemClock : public Clock {
public:
    SystemClock();
    std::int64_t now_ms() override;

private:
    std::int64_t epoch_ms_ = 0;
};

struct SessionConfig {
    std::int64_t suppression_window_ms = 30000;
    /// Drop a ProperName suggestion whose span is identical to a Term
    /// match: the glossary knows more about that span than the heuristic.
    bool term_wins_identical_span = true;
};

/// Per-stream cascade state: term matching, number and proper-name
/// detection on final segments, duplicate suppression, ordering check.
/// Confine each session to one logical stream.
class StreamSession {
public:
    StreamSession(const CompiledMatcher& matcher, const Gazetteer& gazetteer, Clock& clock,
                  SessionConfig config = {});

    /// Segments must arrive in strictly increasing index order; anything
    /// else throws OrderingError. Non-final segments produce no
    /// suggestions.
    std::vector<Suggestion> process_segment(const TranscriptSegment& segment);

private:
    const CompiledMatcher& matcher_;
    const Gazetteer& gazetteer_;
    Clock& clock_;
    SessionConfig config_;
    std::optional<std::size_t> last_index_;
    std::unordered_map<std::string, std::int64_t> last_emitted_; // suppression key -> time
};

/// Replays a transcript through a fresh session. Default: as fast as
/// possible under the simulated clock (deterministic). With
/// realtime=true, sleeps to honor each segment's t_emit_ms against the
/// wall clock.
std::vector<Suggestion> replay_transcript(const std::vector<TranscriptSegment>& segments,
                                          const CompiledMatcher& matcher,
                                          const Gazetteer& gazetteer,
                                          SessionConfig config = {}, bool realtime = false);

} // namespace termkit::stream
