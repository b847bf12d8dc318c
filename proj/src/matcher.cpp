#include "termkit/matcher.hpp"

#include "termkit/tagger.hpp"
#include "termkit/textutil.hpp"

#include <algorithm>

namespace termkit::stream {

namespace {

std::vector<std::string> pattern_words(const std::string& variant, const std::string& language) {
    std::vector<std::string> words;
    for (const auto& sentence : tagger::tokenize(variant, language))
        for (const auto& token : sentence) words.push_back(text::to_lower(token.surface));
    return words;
}

} // namespace

std::set<std::string> expand_variants(const glossary::GlossaryEntry& entry,
                                      const std::string& language) {
    std::set<std::string> out;
    const std::string term(text::trim(entry.source_term));
    if (term.empty()) return out;

    // Hyphen/space alternations of the whole phrase.
    std::set<std::string> bases{term};
    if (term.find('-') != std::string::npos) {
        std::string collapsed, spaced;
        for (const char c : term) {
            if (c == '-') {
                spaced += ' ';
            } else {
                collapsed += c;
                spaced += c;
            }
        }
        bases.insert(collapsed);
        bases.insert(spaced);
    }

    for (const auto& base : bases) {
        out.insert(base);
        // Singular and plural of the final word.
        auto words = text::split(base, ' ');
        const std::string last = words.back();
        const std::string singular = tagger::singularize(last, language);
        const std::string plural = tagger::pluralize(singular, language);
        for (const std::string& form : {singular, plural}) {
            if (form.empty() || form == last) continue;
            words.back() = form;
            out.insert(text::join(words, " "));
        }
        // Verb-style inflections for single-word entries ("address" ->
        // "addressed", "addressing", "addresses"); English morphology only.
        if (language == "en" && base.find(' ') == std::string::npos)
            for (const auto& form : tagger::verb_inflections(base)) out.insert(form);
    }
    return out;
}

CompiledMatcher CompiledMatcher::compile(const std::vector<glossary::Glossary>& glossaries,
                                         const std::string& language) {
    if (glossaries.empty()) throw CompileError("compile_matcher: no glossaries given");
    for (const auto& g : glossaries)
        if (g.source_lang != language)
            throw CompileError("compile_matcher: glossary '" + g.name + "' has source language '" +
                               g.source_lang + "', expected '" + language + "'");

    CompiledMatcher m;
    m.language_ = language;
    m.nodes_.emplace_back(); // root

    for (const auto& g : glossaries) {
        for (const auto& entry : g.entries) {
            if (entry.source_term.empty()) continue;
            const std::size_t entry_index = m.entries_.size();
            m.entries_.push_back(entry);
            for (const auto& variant : expand_variants(entry, language)) {
                const auto words = pattern_words(variant, language);
                if (words.empty()) continue;
                std::size_t node = 0;
                for (const auto& word : words) {
                    auto it = m.nodes_[node].children.find(word);
                    if (it == m.nodes_[node].children.end()) {
                        m.nodes_.emplace_back();
                        const std::size_t next = m.nodes_.size() - 1;
                        m.nodes_[node].children.emplace(word, next);
                        node = next;
                    } else {
                        node = it->second;
                    }
                }
                if (m.nodes_[node].entry < 0) { // first glossary wins on collisions
                    m.nodes_[node].entry = static_cast<int>(entry_index);
                    ++m.pattern_count_;
                    m.max_pattern_words_ = std::max(m.max_pattern_words_, words.size());
                }
            }
        }
    }
    if (m.entries_.empty()) throw CompileError("compile_matcher: glossaries contain no entries");
    return m;
}

std::vector<TermMatch> CompiledMatcher::match(const std::string& input) const {
    std::vector<TermMatch> out;
    for (const auto& sentence : tagger::tokenize(input, language_)) {
        std::size_t i = 0;
        while (i < sentence.size()) {
            std::size_t node = 0;
            int best_entry = -1;
            std::size_t best_len = 0;
            for (std::size_t k = 0; i + k < sentence.size(); ++k) {
                auto it = nodes_[node].children.find(text::to_lower(sentence[i + k].surface));
                if (it == nodes_[node].children.end()) break;
                node = it->second;
                if (nodes_[node].entry >= 0) {
                    best_entry = nodes_[node].entry;
                    best_len = k + 1;
                }
            }
            if (best_entry < 0) {
                ++i;
                continue;
            }
            TermMatch match;
            match.start = sentence[i].start;
            const auto& last = sentence[i + best_len - 1];
            match.end = last.start + last.surface.size();
            match.surface = input.substr(match.start, match.end - match.start);
            match.entry = &entries_[static_cast<std::size_t>(best_entry)];
            std::string variant;
            for (std::size_t k = 0; k < best_len; ++k) {
                if (k) variant += ' ';
                variant += text::to_lower(sentence[i + k].surface);
            }
            match.variant = std::move(variant);
            out.push_back(std::move(match));
            i += best_len;
        }
    }
    return out;
}

} // namespace termkit::stream
