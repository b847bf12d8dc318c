#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace termkit::tagger {

/// The four-symbol tag alphabet consumed by the term-extraction patterns.
/// Everything that is not a noun, adjective or preposition maps to Other.
enum class Pos { N, Adj, PP, Other };

/// Single-character symbol used when rendering tag sequences: N, A, P, O.
char pos_symbol(Pos p);

struct Token {
    std::string surface;
    std::size_t start = 0; // byte offset into the original text
    std::size_t sentence_index = 0;
};

struct TaggedToken {
    Token token;
    Pos pos = Pos::Other;
};

using Sentence = std::vector<Token>;

const std::vector<std::string>& supported_languages();
bool is_supported_language(const std::string& lang);

/// Splits text into sentences (terminal . ! ? and CJK equivalents) and
/// sentences into word tokens. Punctuation is a boundary, not a token;
/// hyphens, apostrophes and digit-internal separators stay inside tokens
/// ("state-of-the-art", "don't", "1,100", "2.5").
std::vector<Sentence> tokenize(const std::string& text, const std::string& language);

/// Lexicon + suffix rules driving the bundled rule tagger and the
/// singular/plural normalizer. Loadable from JSON:
///   {prepositions: [...], adjective_suffixes: [...],
///    plural_rules: [[suffix, replacement], ...], plural_exceptions: [...],
///    function_words: [...], adjectives: [...]}   (last two optional)
struct LanguagePack {
    std::string language;
    std::unordered_set<std::string> prepositions;
    std::unordered_set<std::string> function_words;
    std::unordered_set<std::string> adjectives;
    std::vector<std::string> adjective_suffixes;
    std::vector<std::pair<std::string, std::string>> plural_rules;
    std::unordered_set<std::string> plural_exceptions;

    static LanguagePack load(const std::filesystem::path& json_file);
    static const LanguagePack& english();
};

class TaggerInterface {
public:
    virtual ~TaggerInterface() = default;
    /// Must return exactly one TaggedToken per input token, in order.
    virtual std::vector<TaggedToken> tag(const Sentence& sentence,
                                         const std::string& language) const = 0;
};

/// Rule-based tagger: closed-class lexicon for prepositions and other
/// function words, a small closed adjective list plus suffix rules, and a
/// default-noun fallback for unknown content words.
class RuleTagger : public TaggerInterface {
public:
    RuleTagger(); // bundled English pack
    explicit RuleTagger(LanguagePack pack);

    std::vector<TaggedToken> tag(const Sentence& sentence,
                                 const std::string& language) const override;

private:
    LanguagePack pack_;
};

std::vector<TaggedToken> pos_tag(const Sentence& sentence, const std::string& language,
                                 const TaggerInterface& tagger);

/// Convenience overload using the bundled rule tagger (English only;
/// throws UnsupportedLanguageError otherwise).
std::vector<TaggedToken> pos_tag(const Sentence& sentence, const std::string& language);

std::string singularize(const std::string& word, const LanguagePack& pack);
/// Identity for languages without a bundled pack.
std::string singularize(const std::string& word, const std::string& language);

/// Best-effort plural of a singular English word (rate -> rates,
/// policy -> policies, tax -> taxes). Identity outside English.
std::string pluralize(const std::string& word, const std::string& language);

/// English -s / -ed / -ing forms with e-drop, y->ie and final-consonant
/// doubling. Regular morphology only.
std::vector<std::string> verb_inflections(const std::string& word);

/// Irregular past / past-participle forms mapped to their base ("ran" ->
/// "run"). Used when deciding whether a surface form inflects a lemma.
const std::unordered_map<std::string, std::string>& irregular_verb_bases();

} // namespace termkit::tagger
