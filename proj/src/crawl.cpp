#include "termkit/crawl.hpp"

#include "termkit/html.hpp"
#include "termkit/io.hpp"
#include "termkit/textutil.hpp"
#include "termkit/url.hpp"

#include <httplib.h>
#include <json.hpp>

#include <unordered_set>

namespace termkit::crawl {

HttpFetcher::HttpFetcher(int timeout_seconds) : timeout_seconds_(timeout_seconds) {}

std::optional<std::string> HttpFetcher::fetch(const std::string& address) {
    auto parts = url::parse(address);
    if (!parts) return std::nullopt;
    if (parts->scheme != "http" && parts->scheme != "https") return std::nullopt;
#ifndef TERMKIT_HAVE_OPENSSL
    if (parts->scheme == "https") return std::nullopt;
#endif
    std::string origin = parts->scheme + "://" + parts->host;
    if (!parts->port.empty()) origin += ":" + parts->port;
    httplib::Client client(origin);
    client.set_connection_timeout(timeout_seconds_, 0);
    client.set_read_timeout(timeout_seconds_, 0);
    client.set_follow_location(true);
    client.set_default_headers({{"User-Agent", "termkit-crawler/1.0"}});
    std::string target = parts->path;
    if (!parts->query.empty()) target += "?" + parts->query;
    auto res = client.Get(target);
    if (!res || res->status < 200 || res->status >= 300) return std::nullopt;
    return res->body;
}

DirectoryFetcher::DirectoryFetcher(std::filesystem::path root) : root_(std::move(root)) {}

std::string DirectoryFetcher::file_name_for(const std::string& address) {
    std::string norm = url::normalize(address);
    std::size_t scheme_end = norm.find("://");
    std::string rest = scheme_end == std::string::npos ? norm : norm.substr(scheme_end + 3);
    while (!rest.empty() && rest.back() == '/') rest.pop_back();
    std::string name;
    for (char c : rest) {
        name += (text::is_ascii_alnum(c) || c == '.' || c == '_' || c == '-') ? c : '_';
    }
    std::size_t dot = name.rfind('.');
    std::size_t slashish = name.rfind('_');
    bool has_ext = dot != std::string::npos && (slashish == std::string::npos || dot > slashish) &&
                   name.size() - dot <= 6 && name.find('.', dot + 1) == std::string::npos &&
                   dot + 1 < name.size() && !text::is_ascii_digit(name[dot + 1]);
    if (!has_ext) name += ".html";
    return name;
}

std::optional<std::string> DirectoryFetcher::fetch(const std::string& address) {
    auto path = root_ / file_name_for(address);
    try {
        return io::read_file(path);
    } catch (const Error&) {
        return std::nullopt;
    }
}

CrawlResult crawl(const CrawlConfig& config) {
    if (config.fetcher == nullptr) {
        throw CrawlFailedError("no page fetcher configured");
    }
    auto seed_parts = url::parse(config.seed_url);
    if (!seed_parts) {
        throw CrawlFailedError("seed URL is not a well-formed absolute address: " +
                               config.seed_url);
    }
    const std::string seed = url::normalize(config.seed_url);
    const std::string prefix = url::seed_prefix(seed);
    const std::string domain = url::registered_domain(seed_parts->host);

    CrawlResult result;
    std::unordered_set<std::string> scheduled; // normalized URLs ever enqueued
    scheduled.insert(seed);

    auto seed_html = config.fetcher->fetch(seed);
    if (!seed_html) {
        throw CrawlFailedError("seed fetch failed: " + seed);
    }
    corpus::append_document(result.corpus, html::clean_page(*seed_html), config.language,
                            corpus::UrlSource{seed});
    if (result.corpus.total_bytes >= config.max_bytes) return result;

    // Pages fetched at the previous depth, paired with their raw markup so
    // links are discovered in visit order.
    std::vector<std::pair<std::string, std::string>> previous = {{seed, *seed_html}};

    for (std::size_t depth = 1; depth <= config.max_depth && !previous.empty(); ++depth) {
        // Collect new normalized links in discovery order.
        std::vector<std::string> discovered;
        for (const auto& [page_url, markup] : previous) {
            for (const std::string& href : html::extract_links(markup)) {
                std::string resolved = url::resolve(page_url, href);
                if (resolved.empty()) continue;
                auto parts = url::parse(resolved);
                if (!parts || (parts->scheme != "http" && parts->scheme != "https")) continue;
                if (scheduled.insert(resolved).second) discovered.push_back(resolved);
            }
        }
        // Frontier partition: seed-prefix matches, same registered domain,
        // external — keeping discovery order inside each class.
        std::vector<std::string> frontier;
        frontier.reserve(discovered.size());
        for (const auto& u : discovered) {
            if (u.rfind(prefix, 0) == 0) frontier.push_back(u);
        }
        for (const auto& u : discovered) {
            if (u.rfind(prefix, 0) == 0) continue;
            auto parts = url::parse(u);
            if (parts && url::registered_domain(parts->host) == domain) frontier.push_back(u);
        }
        for (const auto& u : discovered) {
            if (u.rfind(prefix, 0) == 0) continue;
            auto parts = url::parse(u);
            if (parts && url::registered_domain(parts->host) == domain) continue;
            frontier.push_back(u);
        }

        previous.clear();
        for (const std::string& u : frontier) {
            auto html_body = config.fetcher->fetch(u);
            if (!html_body) {
                result.errors.push_back("fetch failed, skipped: " + u);
                continue;
            }
            corpus::append_document(result.corpus, html::clean_page(*html_body), config.language,
                                    corpus::UrlSource{u});
            previous.emplace_back(u, std::move(*html_body));
            if (result.corpus.total_bytes >= config.max_bytes) return result;
        }
    }
    return result;
}

StaticSearchClient::StaticSearchClient(std::map<std::string, std::vector<std::string>> results)
    : results_(std::move(results)) {}

StaticSearchClient StaticSearchClient::load_json(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(io::read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("search index " + path.string() + ": " + e.what());
    }
    if (!j.is_object()) {
        throw FormatError("search index " + path.string() +
                          ": expected an object mapping queries to URL arrays");
    }
    std::map<std::string, std::vector<std::string>> results;
    for (const auto& [query, urls] : j.items()) {
        if (!urls.is_array()) {
            throw FormatError("search index " + path.string() + ": query \"" + query +
                              "\" must map to an array of URLs");
        }
        auto& list = results[query];
        for (const auto& url : urls) {
            if (!url.is_string()) {
                throw FormatError("search index " + path.string() + ": query \"" + query +
                                  "\" contains a non-string URL");
            }
            list.push_back(url.get<std::string>());
        }
    }
    return StaticSearchClient(std::move(results));
}

std::vector<std::string> StaticSearchClient::search(const std::string& query) {
    auto it = results_.find(query);
    return it == results_.end() ? std::vector<std::string>{} : it->second;
}

std::vector<std::string> seed_queries(const std::vector<std::string>& seed_words) {
    std::vector<std::string> queries;
    if (seed_words.size() == 1) {
        queries.push_back(seed_words[0]);
        return queries;
    }
    for (std::size_t i = 0; i < seed_words.size(); ++i) {
        for (std::size_t j = i + 1; j < seed_words.size(); ++j) {
            queries.push_back(seed_words[i] + " " + seed_words[j]);
        }
    }
    return queries;
}

corpus::Corpus bootstrap_from_seeds(const std::vector<std::string>& seed_words,
                                    SearchClient& search_client, PageFetcher& fetcher,
                                    std::size_t pages_per_query, const std::string& language) {
    if (seed_words.empty()) {
        throw EmptyCorpusError("bootstrap needs at least one seed word");
    }
    corpus::Corpus result;
    std::unordered_set<std::string> fetched;
    for (const std::string& query : seed_queries(seed_words)) {
        std::vector<std::string> urls;
        try {
            urls = search_client.search(query);
        } catch (const std::exception& e) {
            throw BootstrapFailedError("search failed for query '" + query + "': " + e.what(),
                                       std::move(result));
        }
        std::size_t taken = 0;
        for (const std::string& u : urls) {
            if (taken >= pages_per_query) break;
            ++taken;
            std::string norm = url::normalize(u);
            if (!fetched.insert(norm).second) continue;
            auto body = fetcher.fetch(norm);
            if (!body) continue; // skipped, like non-seed crawl failures
            corpus::append_document(result, html::clean_page(*body), language,
                                    corpus::SeedQuerySource{query});
        }
    }
    if (result.documents.empty()) {
        throw EmptyCorpusError("bootstrap produced no documents");
    }
    return result;
}

} // namespace termkit::crawl
