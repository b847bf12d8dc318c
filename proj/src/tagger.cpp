#include "termkit/tagger.hpp"

#include "termkit/errors.hpp"
#include "termkit/io.hpp"
#include "termkit/textutil.hpp"

#include <json.hpp>

#include <algorithm>

namespace termkit::tagger {

namespace {

using text::is_ascii_alnum;
using text::is_ascii_alpha;
using text::is_ascii_digit;

// Non-ASCII code points treated as whitespace or punctuation; every other
// non-ASCII code point counts as a word character.
bool is_wide_space(char32_t cp) {
    return cp == 0x3000 || cp == 0x00A0 || cp == 0x2028 || cp == 0x2029;
}

bool is_wide_terminal(char32_t cp) {
    return cp == 0x3002 /* 。 */ || cp == 0xFF01 /* ！ */ || cp == 0xFF1F /* ？ */;
}

bool is_wide_punct(char32_t cp) {
    switch (cp) {
        case 0x3001: // 、
        case 0xFF0C: // ，
        case 0xFF1B: // ；
        case 0xFF1A: // ：
        case 0xFF08: case 0xFF09: // （）
        case 0x300C: case 0x300D: // 「」
        case 0x300E: case 0x300F: // 『』
        case 0x300A: case 0x300B: // 《》
        case 0x3008: case 0x3009: // 〈〉
        case 0x3010: case 0x3011: // 【】
        case 0x30FB: // ・
        case 0x2013: case 0x2014: // – —
        case 0x2026: // …
        case 0x201C: case 0x201D: // “ ”
        case 0x2018: // ‘
        case 0x00AB: case 0x00BB: // « »
            return true;
        default:
            return false;
    }
}

bool is_word_cp(char32_t cp) {
    if (cp < 0x80) {
        return is_ascii_alnum(static_cast<char>(cp));
    }
    return !is_wide_space(cp) && !is_wide_terminal(cp) && !is_wide_punct(cp) && cp != 0xFFFD;
}

// Apostrophe code points that may join word characters ("don't").
bool is_apostrophe(char32_t cp) {
    return cp == '\'' || cp == 0x2019;
}

struct Scanned {
    char32_t cp;
    std::size_t offset; // byte offset of the code point
    std::size_t width;  // byte width
};

std::vector<Scanned> scan(const std::string& text) {
    std::vector<Scanned> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t at = i;
        char32_t cp = text::utf8_next(text, i);
        out.push_back({cp, at, i - at});
    }
    return out;
}

} // namespace

char pos_symbol(Pos p) {
    switch (p) {
        case Pos::N: return 'N';
        case Pos::Adj: return 'A';
        case Pos::PP: return 'P';
        case Pos::Other: return 'O';
    }
    return 'O';
}

const std::vector<std::string>& supported_languages() {
    static const std::vector<std::string> langs = {"ar", "zh", "en", "fr", "de",
                                                   "it", "pt", "es", "ja", "ru"};
    return langs;
}

bool is_supported_language(const std::string& lang) {
    const auto& langs = supported_languages();
    return std::find(langs.begin(), langs.end(), lang) != langs.end();
}

std::vector<Sentence> tokenize(const std::string& text, const std::string& language) {
    if (!is_supported_language(language)) {
        throw UnsupportedLanguageError(language);
    }
    std::vector<Sentence> sentences;
    Sentence current;

    auto cps = scan(text);
    const std::size_t n = cps.size();

    auto flush_sentence = [&] {
        if (!current.empty()) {
            sentences.push_back(std::move(current));
            current.clear();
        }
    };

    std::size_t i = 0;
    while (i < n) {
        char32_t cp = cps[i].cp;

        if (is_word_cp(cp)) {
            std::size_t start_byte = cps[i].offset;
            std::string surface;
            while (i < n) {
                char32_t c = cps[i].cp;
                if (is_word_cp(c)) {
                    surface.append(text, cps[i].offset, cps[i].width);
                    ++i;
                    continue;
                }
                // Joiners kept inside a token when flanked by word chars:
                // hyphen and apostrophe between letters/digits; '.' and ','
                // between digits ("2.5", "1,100").
                bool word_before = i > 0 && is_word_cp(cps[i - 1].cp);
                bool word_after = i + 1 < n && is_word_cp(cps[i + 1].cp);
                if (word_before && word_after) {
                    bool digit_ctx = cps[i - 1].cp < 0x80 && cps[i + 1].cp < 0x80 &&
                                     is_ascii_digit(static_cast<char>(cps[i - 1].cp)) &&
                                     is_ascii_digit(static_cast<char>(cps[i + 1].cp));
                    bool joiner = (c == '-') || is_apostrophe(c) ||
                                  ((c == '.' || c == ',') && digit_ctx);
                    if (joiner) {
                        surface.append(text, cps[i].offset, cps[i].width);
                        ++i;
                        continue;
                    }
                }
                break;
            }
            current.push_back(Token{std::move(surface), start_byte, sentences.size()});
            continue;
        }

        bool terminal = (cp == '.' || cp == '!' || cp == '?') || is_wide_terminal(cp);
        ++i;
        if (terminal) flush_sentence();
    }
    flush_sentence();
    return sentences;
}

LanguagePack LanguagePack::load(const std::filesystem::path& json_file) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(io::read_file(json_file));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("language pack " + json_file.string() + ": " + e.what());
    }

    LanguagePack pack;
    pack.language = j.value("language", std::string{});
    auto read_set = [&](const char* key, std::unordered_set<std::string>& out) {
        if (!j.contains(key)) return;
        for (const auto& v : j.at(key)) out.insert(text::to_lower(v.get<std::string>()));
    };
    read_set("prepositions", pack.prepositions);
    read_set("function_words", pack.function_words);
    read_set("adjectives", pack.adjectives);
    read_set("plural_exceptions", pack.plural_exceptions);
    if (j.contains("adjective_suffixes")) {
        for (const auto& v : j.at("adjective_suffixes"))
            pack.adjective_suffixes.push_back(text::to_lower(v.get<std::string>()));
    }
    if (j.contains("plural_rules")) {
        for (const auto& v : j.at("plural_rules")) {
            if (!v.is_array() || v.size() != 2)
                throw FormatError("language pack " + json_file.string() +
                                  ": plural_rules entries must be [suffix, replacement]");
            pack.plural_rules.emplace_back(v.at(0).get<std::string>(),
                                           v.at(1).get<std::string>());
        }
    }
    return pack;
}

RuleTagger::RuleTagger() : pack_(LanguagePack::english()) {}
RuleTagger::RuleTagger(LanguagePack pack) : pack_(std::move(pack)) {}

std::vector<TaggedToken> RuleTagger::tag(const Sentence& sentence,
                                         const std::string& language) const {
    if (language != pack_.language) {
        throw UnsupportedLanguageError(language + " (tagger pack is " + pack_.language + ")");
    }
    std::vector<TaggedToken> out;
    out.reserve(sentence.size());
    for (const Token& tok : sentence) {
        std::string lower = text::to_lower(tok.surface);
        Pos pos;
        bool has_alpha = std::any_of(lower.begin(), lower.end(), [](char c) {
            return is_ascii_alpha(c) || static_cast<unsigned char>(c) >= 0x80;
        });
        if (pack_.prepositions.count(lower)) {
            pos = Pos::PP;
        } else if (pack_.function_words.count(lower)) {
            pos = Pos::Other;
        } else if (!has_alpha) {
            pos = Pos::Other; // numbers, stray symbols
        } else if (pack_.adjectives.count(lower)) {
            pos = Pos::Adj;
        } else {
            pos = Pos::N;
            for (const auto& suf : pack_.adjective_suffixes) {
                // Require a couple of stem characters so "al" itself or "ic"
                // does not classify as an adjective.
                if (lower.size() >= suf.size() + 2 && lower.ends_with(suf)) {
                    pos = Pos::Adj;
                    break;
                }
            }
        }
        out.push_back(TaggedToken{tok, pos});
    }
    return out;
}

std::vector<TaggedToken> pos_tag(const Sentence& sentence, const std::string& language,
                                 const TaggerInterface& tagger) {
    if (!is_supported_language(language)) {
        throw UnsupportedLanguageError(language);
    }
    return tagger.tag(sentence, language);
}

std::vector<TaggedToken> pos_tag(const Sentence& sentence, const std::string& language) {
    if (language != "en") {
        throw UnsupportedLanguageError(language +
                                       " (bundled tagger is English; inject a TaggerInterface)");
    }
    static const RuleTagger english;
    return english.tag(sentence, language);
}

std::string singularize(const std::string& word, const LanguagePack& pack) {
    if (word.size() < 3) return word;
    std::string lower = text::to_lower(word);
    if (lower.back() != 's') return word;
    if (pack.plural_exceptions.count(lower)) return word;

    // Acronyms ("CDS") are left alone.
    if (std::all_of(word.begin(), word.end(),
                    [](char c) { return text::is_ascii_upper(c) || is_ascii_digit(c); })) {
        return word;
    }
    // Protected endings: "class", "status", "analysis", "economics".
    for (const char* suf : {"ss", "us", "is", "ics"}) {
        if (lower.ends_with(suf)) return word;
    }
    if (lower.ends_with("'s") || lower.ends_with("\xE2\x80\x99s")) {
        std::size_t cut = lower.ends_with("'s") ? 2 : 4;
        return word.substr(0, word.size() - cut);
    }

    for (const auto& [suffix, replacement] : pack.plural_rules) {
        if (!lower.ends_with(suffix)) continue;
        std::size_t stem = word.size() - suffix.size();
        if (stem + replacement.size() < 2) continue; // keep at least two chars
        // "-ies" -> "-y" misfires on short words like "ties"; let the plain
        // "-s" rule handle those.
        if (suffix == "ies" && word.size() < 5) continue;
        return word.substr(0, stem) + replacement;
    }
    return word;
}

std::string singularize(const std::string& word, const std::string& language) {
    if (word.empty()) return word;
    if (language != "en") return word; // identity without a language pack
    return singularize(word, LanguagePack::english());
}

std::string pluralize(const std::string& word, const std::string& language) {
    if (word.empty() || language != "en") return word;
    std::string lower = text::to_lower(word);
    const LanguagePack& pack = LanguagePack::english();
    if (pack.plural_exceptions.count(lower)) return word;
    if (lower.ends_with("s") || lower.ends_with("x") || lower.ends_with("z") ||
        lower.ends_with("ch") || lower.ends_with("sh")) {
        return word + "es";
    }
    auto is_vowel = [](char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; };
    if (lower.size() >= 2 && lower.back() == 'y' && !is_vowel(lower[lower.size() - 2])) {
        return word.substr(0, word.size() - 1) + "ies";
    }
    return word + "s";
}

std::vector<std::string> verb_inflections(const std::string& word) {
    std::string lower = text::to_lower(word);
    if (lower.size() < 2 ||
        !std::all_of(lower.begin(), lower.end(), [](char c) { return is_ascii_alpha(c); })) {
        return {};
    }
    auto is_vowel = [](char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; };
    const std::size_t n = lower.size();
    char last = lower[n - 1];
    char prev = lower[n - 2];

    std::string s_form = pluralize(lower, "en"); // same suffix rules as noun plural

    std::string ed, ing;
    bool cvc = n >= 3 && !is_vowel(last) && last != 'w' && last != 'x' && last != 'y' &&
               is_vowel(prev) && !is_vowel(lower[n - 3]);
    bool doubles = cvc && n <= 4; // plan -> planned; stressed longer stems skipped
    if (last == 'e') {
        ed = lower + 'd';
        ing = (prev == 'e' || prev == 'y' || prev == 'o') ? lower + "ing"
                                                          : lower.substr(0, n - 1) + "ing";
    } else if (last == 'y' && !is_vowel(prev)) {
        ed = lower.substr(0, n - 1) + "ied";
        ing = lower + "ing";
    } else if (doubles) {
        ed = lower + last + "ed";
        ing = lower + last + "ing";
    } else {
        ed = lower + "ed";
        ing = lower + "ing";
    }
    return {s_form, ed, ing};
}

} // namespace termkit::tagger
