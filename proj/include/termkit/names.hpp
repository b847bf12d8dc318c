#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace termkit::stream {

/// Event-specific proper-name list (participants, organizations,
/// products). One name per line; '#' starts a comment.
struct Gazetteer {
    std::vector<std::string> names;

    static Gazetteer load(const std::filesystem::path& path);
};

struct DetectedName {
    std::string surface; // exact text span
    std::size_t start = 0; // byte span in the input text
    std::size_t end = 0;
    std::string canonical; // gazetteer form, or the surface for heuristic hits
};

/// Union of (1) gazetteer matches — longest match, case-sensitive on each
/// word's first letter, case-insensitive after it — and (2) heuristic
/// spans: maximal runs of capitalized tokens that are not sentence-initial
/// and not function words. Gazetteer wins where the two overlap.
std::vector<DetectedName> detect_proper_names(const std::string& text,
                                              const Gazetteer& gazetteer,
                                              const std::string& language = "en");

} // namespace termkit::stream
