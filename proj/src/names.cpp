#include "termkit/names.hpp"

#include "termkit/io.hpp"
#include "termkit/tagger.hpp"
#include "termkit/textutil.hpp"

#include <algorithm>

namespace termkit::stream {

namespace {

/// First letter case-sensitive, the rest ASCII-case-insensitive.
bool word_matches(const std::string& pattern, const std::string& token) {
    if (pattern.empty() || token.empty()) return false;
    if (pattern[0] != token[0]) return false;
    return text::iequals(pattern, token);
}

std::vector<std::string> name_words(const std::string& name, const std::string& language) {
    std::vector<std::string> words;
    for (const auto& sentence : tagger::tokenize(name, language))
        for (const auto& token : sentence) words.push_back(token.surface);
    return words;
}

} // namespace

Gazetteer Gazetteer::load(const std::filesystem::path& path) {
    Gazetteer gazetteer;
    for (const auto& raw : text::split(io::read_file(path), '\n')) {
        const std::string_view line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        gazetteer.names.emplace_back(line);
    }
    return gazetteer;
}

std::vector<DetectedName> detect_proper_names(const std::string& input,
                                              const Gazetteer& gazetteer,
                                              const std::string& language) {
    struct GazPattern {
        std::vector<std::string> words;
        const std::string* canonical = nullptr;
    };
    std::vector<GazPattern> patterns;
    for (const auto& name : gazetteer.names) {
        auto words = name_words(name, language);
        if (!words.empty()) patterns.push_back({std::move(words), &name});
    }

    const tagger::LanguagePack* pack =
        language == "en" ? &tagger::LanguagePack::english() : nullptr;
    auto is_function_word = [&](const std::string& surface) {
        if (!pack) return false;
        const std::string lower = text::to_lower(surface);
        return pack->function_words.count(lower) > 0 || pack->prepositions.count(lower) > 0;
    };

    std::vector<DetectedName> out;
    for (const auto& sentence : tagger::tokenize(input, language)) {
        std::vector<bool> covered(sentence.size(), false);

        // Gazetteer pass: leftmost-longest, canonical from the gazetteer.
        for (std::size_t i = 0; i < sentence.size();) {
            std::size_t best_len = 0;
            const GazPattern* best = nullptr;
            for (const auto& pattern : patterns) {
                if (pattern.words.size() <= best_len ||
                    i + pattern.words.size() > sentence.size())
                    continue;
                bool ok = true;
                for (std::size_t k = 0; k < pattern.words.size(); ++k)
                    if (!word_matches(pattern.words[k], sentence[i + k].surface)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    best_len = pattern.words.size();
                    best = &pattern;
                }
            }
            if (!best) {
                ++i;
                continue;
            }
            DetectedName d;
            d.start = sentence[i].start;
            const auto& last = sentence[i + best_len - 1];
            d.end = last.start + last.surface.size();
            d.surface = input.substr(d.start, d.end - d.start);
            d.canonical = *best->canonical;
            out.push_back(std::move(d));
            for (std::size_t k = 0; k < best_len; ++k) covered[i + k] = true;
            i += best_len;
        }

        // Heuristic pass: capitalized runs, skipping the sentence-initial
        // token, function words and anything the gazetteer already claimed.
        auto qualifies = [&](std::size_t k) {
            if (k == 0 || covered[k]) return false;
            const std::string& w = sentence[k].surface;
            if (w.empty() || !text::is_ascii_upper(w[0])) return false;
            return !is_function_word(w);
        };
        for (std::size_t i = 0; i < sentence.size();) {
            if (!qualifies(i)) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j + 1 < sentence.size() && qualifies(j + 1)) ++j;
            DetectedName d;
            d.start = sentence[i].start;
            d.end = sentence[j].start + sentence[j].surface.size();
            d.surface = input.substr(d.start, d.end - d.start);
            d.canonical = d.surface;
            out.push_back(std::move(d));
            i = j + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](const DetectedName& a, const DetectedName& b) {
        return a.start != b.start ? a.start < b.start : a.end < b.end;
    });
    return out;
}

} // namespace termkit::stream
