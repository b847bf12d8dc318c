#include "termkit/glossary.hpp"

#include "termkit/io.hpp"
#include "termkit/tagger.hpp"
#include "termkit/textutil.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace termkit::glossary {

namespace {

constexpr std::size_t kBatchSize = 32;

} // namespace

DictionaryClient DictionaryClient::load(const std::filesystem::path& file) {
    DictionaryClient client;
    const std::string content = io::read_file(file);
    std::size_t line_no = 0;
    for (const auto& raw : text::split(content, '\n')) {
        ++line_no;
        std::string_view line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto cols = text::split(std::string(line), '\t');
        if (cols.size() != 3)
            throw FormatError("dictionary " + file.string() + " line " +
                              std::to_string(line_no) + ": expected 3 tab-separated columns");
        client.add(cols[0], cols[1], cols[2]);
    }
    return client;
}

void DictionaryClient::add(const std::string& source, const std::string& target_lang,
                           const std::string& translation) {
    entries_[text::normalize_key(source)][target_lang] = translation;
}

std::vector<std::string> DictionaryClient::translate(const std::vector<std::string>& terms,
                                                     const std::string& /*source_lang*/,
                                                     const std::string& target_lang) {
    std::vector<std::string> out;
    out.reserve(terms.size());
    for (const auto& term : terms) {
        auto it = entries_.find(text::normalize_key(term));
        if (it == entries_.end()) {
            out.emplace_back();
            continue;
        }
        auto lang_it = it->second.find(target_lang);
        out.push_back(lang_it == it->second.end() ? std::string() : lang_it->second);
    }
    return out;
}

Glossary translate_terms(const std::vector<extract::ScoredTerm>& terms,
                         const std::string& source_lang,
                         const std::vector<std::string>& targets,
                         TranslationClient& client, const Glossary* existing,
                         const std::string& name) {
    if (targets.empty())
        throw UnsupportedLanguageError("translate_terms: no target languages given");
    for (const auto& target : targets)
        if (!tagger::is_supported_language(target))
            throw UnsupportedLanguageError("translate_terms: unsupported target language '" +
                                           target + "'");

    // Protected entries survive re-translation untouched.
    std::unordered_map<std::string, const GlossaryEntry*> protected_entries;
    if (existing) {
        for (const auto& entry : existing->entries)
            if (entry.provenance != Provenance::Auto)
                protected_entries[text::normalize_key(entry.source_term)] = &entry;
    }

    Glossary out;
    out.name = name;
    out.source_lang = source_lang;
    std::unordered_set<std::string> seen;
    std::vector<std::size_t> to_translate; // indices into out.entries
    for (const auto& term : terms) {
        const std::string surface = text::join(term.candidate.words, " ");
        const std::string key = text::normalize_key(surface);
        if (!seen.insert(key).second) continue;
        auto prot = protected_entries.find(key);
        if (prot != protected_entries.end()) {
            out.entries.push_back(*prot->second);
            continue;
        }
        GlossaryEntry entry;
        entry.source_term = surface;
        entry.source_lang = source_lang;
        entry.score = term.score;
        entry.provenance = Provenance::Auto;
        for (const auto& target : targets) entry.translations[target] = "";
        to_translate.push_back(out.entries.size());
        out.entries.push_back(std::move(entry));
    }
    // Protected entries not covered by the ranked list keep their place at
    // the tail, in their original order.
    if (existing) {
        for (const auto& entry : existing->entries)
            if (entry.provenance != Provenance::Auto &&
                seen.insert(text::normalize_key(entry.source_term)).second)
                out.entries.push_back(entry);
    }

    std::size_t attempted_calls = 0;
    std::size_t failed_calls = 0;
    for (const auto& target : targets) {
        for (std::size_t begin = 0; begin < to_translate.size(); begin += kBatchSize) {
            const std::size_t end = std::min(begin + kBatchSize, to_translate.size());
            std::vector<std::string> batch;
            batch.reserve(end - begin);
            for (std::size_t i = begin; i < end; ++i)
                batch.push_back(out.entries[to_translate[i]].source_term);

            ++attempted_calls;
            std::vector<std::string> result;
            bool ok = false;
            for (int attempt = 0; attempt < 2 && !ok; ++attempt) {
                try {
                    result = client.translate(batch, source_lang, target);
                    ok = result.size() == batch.size();
                } catch (const std::exception&) {
                    ok = false;
                }
            }
            if (!ok) {
                ++failed_calls; // translations stay empty: entry flags itself for review
                continue;
            }
            for (std::size_t i = begin; i < end; ++i)
                out.entries[to_translate[i]].translations[target] = result[i - begin];
        }
    }
    if (attempted_calls > 0 && failed_calls == attempted_calls)
        throw TranslationFailedError("translation client unreachable: all " +
                                         std::to_string(attempted_calls) + " batches failed",
                                     std::move(out));
    return out;
}

} // namespace termkit::glossary
