#include "termkit/corpus.hpp"

#include "termkit/io.hpp"
#include "termkit/tagger.hpp"
#include "termkit/textutil.hpp"

#include <json.hpp>

#include <cstdio>

namespace termkit::corpus {

std::string source_kind(const Source& source) {
    if (std::holds_alternative<FileSource>(source)) return "file";
    if (std::holds_alternative<UrlSource>(source)) return "url";
    return "seed_query";
}

std::string source_value(const Source& source) {
    if (const auto* f = std::get_if<FileSource>(&source)) return f->path;
    if (const auto* u = std::get_if<UrlSource>(&source)) return u->address;
    return std::get<SeedQuerySource>(source).query;
}

void append_document(Corpus& corpus, std::string text, const std::string& language,
                     Source source) {
    Document doc;
    char id[16];
    std::snprintf(id, sizeof(id), "doc-%04zu", corpus.documents.size() + 1);
    doc.id = id;
    doc.text = std::move(text);
    doc.language = language;
    doc.source = std::move(source);
    doc.byte_len = doc.text.size();
    corpus.total_bytes += doc.byte_len;
    corpus.documents.push_back(std::move(doc));
}

IngestResult ingest_documents(const std::vector<std::filesystem::path>& paths,
                              const std::string& language) {
    if (!tagger::is_supported_language(language)) {
        throw UnsupportedLanguageError(language);
    }
    IngestResult result;
    for (const auto& path : paths) {
        std::string raw;
        try {
            raw = io::read_file(path);
        } catch (const Error& e) {
            result.errors.push_back(path.string() + ": " + e.what());
            continue;
        }
        append_document(result.corpus, text::normalize_whitespace(raw), language,
                        FileSource{path.string()});
    }
    if (result.corpus.documents.empty()) {
        std::string detail = paths.empty() ? "no input files" : "no readable input files";
        if (!result.errors.empty()) detail += " (first error: " + result.errors.front() + ")";
        throw EmptyCorpusError(detail);
    }
    return result;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
    nlohmann::json manifest;
    manifest["documents"] = nlohmann::json::array();
    for (const Document& doc : corpus.documents) {
        manifest["documents"].push_back({
            {"id", doc.id},
            {"language", doc.language},
            {"source", {{"kind", source_kind(doc.source)}, {"value", source_value(doc.source)}}},
            {"byte_len", doc.byte_len},
        });
        io::write_file_atomic(dir / (doc.id + ".txt"), doc.text);
    }
    manifest["total_bytes"] = corpus.total_bytes;
    io::write_file_atomic(dir / "manifest.json", manifest.dump(2) + "\n");
}

Corpus load_corpus(const std::filesystem::path& dir) {
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(io::read_file(dir / "manifest.json"));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("corpus manifest " + (dir / "manifest.json").string() + ": " + e.what());
    }
    Corpus corpus;
    std::vector<std::string> seen;
    for (const auto& entry : manifest.at("documents")) {
        Document doc;
        doc.id = entry.at("id").get<std::string>();
        doc.language = entry.at("language").get<std::string>();
        const auto& src = entry.at("source");
        const std::string kind = src.at("kind").get<std::string>();
        const std::string value = src.at("value").get<std::string>();
        if (kind == "file") doc.source = FileSource{value};
        else if (kind == "url") doc.source = UrlSource{value};
        else if (kind == "seed_query") doc.source = SeedQuerySource{value};
        else throw FormatError("corpus manifest: unknown source kind '" + kind + "'");
        if (std::find(seen.begin(), seen.end(), doc.id) != seen.end()) {
            throw FormatError("corpus manifest: duplicate document id '" + doc.id + "'");
        }
        seen.push_back(doc.id);
        doc.text = io::read_file(dir / (doc.id + ".txt"));
        doc.byte_len = doc.text.size();
        corpus.total_bytes += doc.byte_len;
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

} // namespace termkit::corpus
