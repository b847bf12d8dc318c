#pragma once

#include "termkit/errors.hpp"
#include "termkit/extract.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace termkit::glossary {

enum class Provenance {
    Auto,     // produced by machine translation
    Edited,   // human reviewed / changed an existing entry
    UserAdded // human created the entry from scratch
};

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name); // FormatError on unknown

struct GlossaryEntry {
    std::string source_term;
    std::string source_lang;
    std::map<std::string, std::string> translations; // target language -> translation
    double score = 0.0;
    Provenance provenance = Provenance::Auto;

    /// An Auto entry still missing at least one translation awaits review.
    bool needs_review() const;

    bool operator==(const GlossaryEntry&) const = default;
};

/// Immutable snapshot; every operation below returns a new Glossary.
/// Entries are unique under text::normalize_key(source_term). Auto entries
/// keep ranked (descending-score) order; user-added ones sit where the user
/// put them.
struct Glossary {
    std::string name;
    std::string source_lang;
    std::vector<GlossaryEntry> entries;

    const GlossaryEntry* find(const std::string& source_term) const;

    bool operator==(const Glossary&) const = default;
};

/// Pluggable machine-translation backend. Must return exactly one string
/// per input term; an empty string means "no translation known".
class TranslationClient {
public:
    virtual ~TranslationClient() = default;
    virtual std::vector<std::string> translate(const std::vector<std::string>& terms,
                                               const std::string& source_lang,
                                               const std::string& target_lang) = 0;
};

/// Offline stub backed by a dictionary file with lines
/// "source<TAB>target_lang<TAB>translation" ('#' starts a comment).
/// Unknown terms translate to the empty string.
class DictionaryClient : public TranslationClient {
public:
    DictionaryClient() = default;
    static DictionaryClient load(const std::filesystem::path& file);

    void add(const std::string& source, const std::string& target_lang,
             const std::string& translation);

    std::vector<std::string> translate(const std::vector<std::string>& terms,
                                       const std::string& source_lang,
                                       const std::string& target_lang) override;

private:
    // normalized source term -> target language -> translation
    std::map<std::string, std::map<std::string, std::string>> entries_;
};

/// Thrown when every translation batch failed: the client is unreachable.
/// Carries the glossary built so far (all translations empty, for review).
class TranslationFailedError : public Error {
public:
    TranslationFailedError(const std::string& message, Glossary partial)
        : Error("translation_failed", message), partial_glossary(std::move(partial)) {}

    Glossary partial_glossary;
};

/// Builds one Auto entry per ranked term with every target filled in via
/// `client` (batched, one retry per batch; a batch that still fails leaves
/// its translations empty for review). When `existing` is given, its
/// Edited/UserAdded entries are preserved verbatim: terms that already have
/// one are not re-translated, and protected entries outside `terms` are
/// appended after the ranked list. Throws UnsupportedLanguageError for an
/// unknown target, EmptyCorpusError-style empty input is fine (empty
/// glossary), and TranslationFailedError when no batch at all succeeded.
Glossary translate_terms(const std::vector<extract::ScoredTerm>& terms,
                         const std::string& source_lang,
                         const std::vector<std::string>& targets,
                         TranslationClient& client,
                         const Glossary* existing = nullptr,
                         const std::string& name = "glossary");

enum class EditOp { SetTranslation, AddEntry, DeleteEntry, RenameSource };

struct Edit {
    EditOp op = EditOp::SetTranslation;
    std::string source_term; // entry the edit refers to (or creates)
    std::string target_lang;                         // SetTranslation
    std::string translation;                         // SetTranslation
    std::map<std::string, std::string> translations; // AddEntry
    std::string new_source;                          // RenameSource
};

struct EditResult {
    Glossary glossary;
    std::vector<std::string> errors; // one message per failed edit
};

/// Applies edits in order; a failing edit (missing entry, duplicate key)
/// contributes an error message and the remaining edits still run.
/// SetTranslation / RenameSource mark the entry Edited; AddEntry appends a
/// UserAdded entry.
EditResult apply_edits(const Glossary& glossary, const std::vector<Edit>& edits);

/// JSON-lines, one edit per line:
///   {"op":"set_translation","source_term":..,"target_lang":..,"translation":..}
///   {"op":"add_entry","source_term":..,"translations":{..}}
///   {"op":"delete_entry","source_term":..}
///   {"op":"rename_source","source_term":..,"new_source":..}
std::vector<Edit> load_edits(const std::filesystem::path& file);

/// Union keyed by normalized source term. Conflicts resolve by provenance
/// priority Edited > UserAdded > Auto, then higher score, then the entry
/// from `a`. Order: a's surviving entries first, b-only entries after, each
/// in their original order. Throws MergeError when source languages differ.
Glossary merge_glossaries(const Glossary& a, const Glossary& b);

/// TSV form: two comment lines carrying name and source language, then a
/// header "source_term<TAB>score<TAB>provenance" plus one column per target
/// language (union over entries, sorted); scores use four decimal places.
std::string to_tsv(const Glossary& glossary);
Glossary from_tsv(const std::string& tsv); // FormatError on malformed input

nlohmann::json to_json(const Glossary& glossary);
Glossary from_json(const nlohmann::json& j); // FormatError on malformed input

/// save_* write atomically; load_glossary/save_glossary dispatch on the
/// ".json" / ".tsv" extension (FormatError otherwise).
void save_tsv(const Glossary& glossary, const std::filesystem::path& path);
Glossary load_tsv(const std::filesystem::path& path);
void save_json(const Glossary& glossary, const std::filesystem::path& path);
Glossary load_json(const std::filesystem::path& path);
void save_glossary(const Glossary& glossary, const std::filesystem::path& path);
Glossary load_glossary(const std::filesystem::path& path);

} // namespace termkit::glossary
