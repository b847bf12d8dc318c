#pragma once

#include "termkit/corpus.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace termkit::crawl {

/// Page-fetch abstraction so crawling is testable offline.
class PageFetcher {
public:
    virtual ~PageFetcher() = default;
    /// Raw page markup, or nullopt when the fetch fails.
    virtual std::optional<std::string> fetch(const std::string& url) = 0;
};

/// Live HTTP(S) fetcher (follows redirects, small timeout).
class HttpFetcher : public PageFetcher {
public:
    explicit HttpFetcher(int timeout_seconds = 10);
    std::optional<std::string> fetch(const std::string& url) override;

private:
    int timeout_seconds_;
};

/// Serves URLs from files under a root directory; the file name is the URL
/// without its scheme, with every non [a-zA-Z0-9._-] character replaced by
/// '_' and ".html" appended unless an extension is already present.
/// Lets the CLI crawl a bundled mock site offline.
class DirectoryFetcher : public PageFetcher {
public:
    explicit DirectoryFetcher(std::filesystem::path root);
    std::optional<std::string> fetch(const std::string& url) override;

    static std::string file_name_for(const std::string& url);

private:
    std::filesystem::path root_;
};

struct CrawlConfig {
    std::string seed_url;
    std::size_t max_depth = 1;
    std::size_t max_bytes = 1 << 20;
    PageFetcher* fetcher = nullptr;
    std::string language = "en";
};

struct CrawlResult {
    corpus::Corpus corpus;          // one Document per kept page, visit order
    std::vector<std::string> errors; // skipped non-seed fetch failures
};

/// Breadth-first crawl: strict depth order; within a depth level the
/// frontier is ordered same-seed-prefix links, then same registered
/// domain, then external; normalized URLs fetched at most once; stops on
/// empty frontier, depth, or the byte cap (the crossing page is kept).
/// Seed fetch failure throws CrawlFailedError.
CrawlResult crawl(const CrawlConfig& config);

/// Search abstraction for seed-word bootstrapping; implementations return
/// result URLs for a query and throw on hard failure.
class SearchClient {
public:
    virtual ~SearchClient() = default;
    virtual std::vector<std::string> search(const std::string& query) = 0;
};

/// Offline stub returning canned URL lists (load_json reads a
/// {"query": ["url", ...]} object).
class StaticSearchClient : public SearchClient {
public:
    StaticSearchClient() = default;
    explicit StaticSearchClient(std::map<std::string, std::vector<std::string>> results);
    static StaticSearchClient load_json(const std::filesystem::path& path);

    std::vector<std::string> search(const std::string& query) override;

private:
    std::map<std::string, std::vector<std::string>> results_;
};

/// Thrown when the search client fails mid-bootstrap; carries whatever was
/// collected before the failure.
class BootstrapFailedError : public Error {
public:
    BootstrapFailedError(const std::string& message, corpus::Corpus partial)
        : Error("bootstrap_failed", message), partial_corpus(std::move(partial)) {}

    corpus::Corpus partial_corpus;
};

/// Queries built from the seed words: all unordered pairs, or the lone
/// seed itself. Deterministic order.
std::vector<std::string> seed_queries(const std::vector<std::string>& seed_words);

/// Top pages_per_query URLs of every query fetched and cleaned into
/// documents, deduplicated by normalized URL. Empty outcome throws
/// EmptyCorpusError.
corpus::Corpus bootstrap_from_seeds(const std::vector<std::string>& seed_words,
                                    SearchClient& search_client, PageFetcher& fetcher,
                                    std::size_t pages_per_query,
                                    const std::string& language = "en");

} // namespace termkit::crawl
