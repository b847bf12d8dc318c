#pragma once

#include "termkit/glossary.hpp"

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace termkit::stream {

/// Surface forms a glossary entry should match in running text: the term
/// itself, singular/plural of the final word, hyphen/space alternations
/// ("e-mail" / "email" / "e mail"), and -s/-ed/-ing inflections for
/// single-word entries.
std::set<std::string> expand_variants(const glossary::GlossaryEntry& entry,
                                      const std::string& language);

struct TermMatch {
    std::string surface; // exact text span
    std::size_t start = 0; // byte span in the input text
    std::size_t end = 0;
    const glossary::GlossaryEntry* entry = nullptr; // owned by the matcher
    std::string variant; // normalized pattern that fired
};

/// Token-trie multi-pattern matcher over every variant of every entry in
/// one or more glossaries. Matching is case-insensitive, token-anchored,
/// leftmost-longest and non-overlapping, and never crosses a sentence
/// boundary. Immutable after compile(); safe to share across threads.
class CompiledMatcher {
public:
    /// Throws CompileError when no glossary/entry is given or when the
    /// glossaries' source languages disagree with `language`.
    static CompiledMatcher compile(const std::vector<glossary::Glossary>& glossaries,
                                   const std::string& language);

    std::vector<TermMatch> match(const std::string& text) const;

    std::size_t entry_count() const { return entries_.size(); }
    std::size_t pattern_count() const { return pattern_count_; }
    const std::string& language() const { return language_; }

private:
    struct Node {
        std::unordered_map<std::string, std::size_t> children;
        int entry = -1; // terminal: index into entries_
    };

    CompiledMatcher() = default;

    std::string language_;
    std::vector<glossary::GlossaryEntry> entries_;
    std::vector<Node> nodes_; // nodes_[0] is the root
    std::size_t pattern_count_ = 0;
    std::size_t max_pattern_words_ = 0;
};

} // namespace termkit::stream
