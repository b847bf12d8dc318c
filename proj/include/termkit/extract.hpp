#pragma once

#include "termkit/tagger.hpp"

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace termkit::extract {

/// POS pattern over the tag alphabet {N, Adj, PP} with the regex
/// operators ( ) | * + ?.
struct PosPattern {
    std::string language;
    std::string pattern;
};

/// Built-in pattern table covering the ten supported languages. Throws
/// UnsupportedLanguageError for anything else.
const PosPattern& builtin_pattern(const std::string& language);

struct CandidateTerm {
    std::vector<std::string> words; // surface forms, case preserved
    std::int64_t freq = 0;          // f(a): total occurrences
    std::int64_t nested_freq = 0;   // occurrences lying strictly inside a longer candidate's occurrence
    std::int64_t superterm_count = 0; // |T_a|: distinct longer candidates containing the words
};

/// Aggregated candidates in first-seen order, with the distinct-superterm
/// key sets kept alongside so merge_morphology can recompute |T_a|.
struct CandidateSet {
    std::vector<CandidateTerm> terms;
    std::vector<std::set<std::string>> superterm_keys; // parallel to terms
    std::unordered_map<std::string, std::size_t> index; // key -> position in terms

    static std::string key_of(const std::vector<std::string>& words);
    const CandidateTerm* find(const std::string& key) const;
};

/// Emits every contiguous token window (1..max_len words) whose tag string
/// matches the pattern, aggregated by exact surface word sequence.
CandidateSet generate_candidates(const std::vector<std::vector<tagger::TaggedToken>>& sentences,
                                 const PosPattern& pattern, std::size_t max_len = 5);

/// Same, using the built-in pattern for `language`.
CandidateSet generate_candidates(const std::vector<std::vector<tagger::TaggedToken>>& sentences,
                                 const std::string& language, std::size_t max_len = 5);

/// Plural-onto-singular and first-letter-case merging; counts are summed,
/// superterm sets unioned, and |T_a| recomputed for every candidate.
CandidateSet merge_morphology(const CandidateSet& set, const std::string& language);

struct ScoredTerm {
    CandidateTerm candidate;
    double score = 0.0;
};

/// Modified C-value: w(a) = log2(|a| + unigram_constant);
/// score = w * freq when the candidate has no superterms, otherwise
/// w * (freq - nested_freq / superterm_count).
std::vector<ScoredTerm> cvalue_scores(const CandidateSet& set, double unigram_constant = 1.0);

/// Removes, in order: terms containing a stoplist word; common unigrams;
/// terms whose word sequence is a proper prefix or suffix of another term
/// surviving the first two steps (skippable via anchored_subset_filter).
std::vector<ScoredTerm> filter_terms(std::vector<ScoredTerm> scored,
                                     const std::unordered_set<std::string>& stoplist,
                                     const std::unordered_set<std::string>& common_unigrams,
                                     bool anchored_subset_filter = true);

/// Descending score; ties by descending freq, then ascending surface form.
std::vector<ScoredTerm> rank_top_n(std::vector<ScoredTerm> scored, std::size_t n = 100);

/// One lowercased word per line; '#' starts a comment line.
std::unordered_set<std::string> load_word_set(const std::filesystem::path& path);

/// TSV with header "term<TAB>score<TAB>freq<TAB>length"; scores printed
/// with four decimal places.
std::string terms_to_tsv(const std::vector<ScoredTerm>& terms);
std::vector<ScoredTerm> terms_from_tsv(const std::string& tsv);

} // namespace termkit::extract
