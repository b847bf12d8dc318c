#pragma once

#include "termkit/errors.hpp"

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace termkit::corpus {

struct FileSource {
    std::string path;
};
struct UrlSource {
    std::string address;
};
struct SeedQuerySource {
    std::string query;
};
using Source = std::variant<FileSource, UrlSource, SeedQuerySource>;

std::string source_kind(const Source& source);  // "file" | "url" | "seed_query"
std::string source_value(const Source& source);

struct Document {
    std::string id;
    std::string text; // cleaned plain text, no markup
    std::string language;
    Source source;
    std::size_t byte_len = 0; // == text.size()
};

struct Corpus {
    std::vector<Document> documents; // unique ids, input/visit order
    std::size_t total_bytes = 0;     // == sum of byte_len
};

/// Appends a document with the next sequential id ("doc-0001", ...),
/// keeping byte_len/total_bytes consistent.
void append_document(Corpus& corpus, std::string text, const std::string& language,
                     Source source);

struct IngestResult {
    Corpus corpus;
    std::vector<std::string> errors; // per-file failures, ingest continues
};

/// One Document per readable file, in input order, whitespace-normalized.
/// Throws EmptyCorpusError when nothing could be ingested.
IngestResult ingest_documents(const std::vector<std::filesystem::path>& paths,
                              const std::string& language);

/// Persists as <id>.txt files plus manifest.json; loading rebuilds the
/// corpus in manifest order. Writes are atomic and deterministic.
void save_corpus(const Corpus& corpus, const std::filesystem::path& dir);
Corpus load_corpus(const std::filesystem::path& dir);

} // namespace termkit::corpus
