#pragma once

#include <optional>
#include <string>

namespace termkit::url {

struct Parts {
    std::string scheme;
    std::string host;
    std::string port;  // empty when absent
    std::string path;  // always starts with '/' (default "/")
    std::string query; // without '?', empty when absent
};

/// Parses an absolute http(s) URL. Fragment is dropped. Returns nullopt
/// for anything that is not scheme://host...
std::optional<Parts> parse(const std::string& url);

/// Lowercases scheme and host, drops the fragment, keeps the query.
/// Returns the input unchanged when it does not parse.
std::string normalize(const std::string& url);

/// Resolves `href` against `base` (absolute, protocol-relative, root- and
/// path-relative forms, "." and ".." segments). Empty result for
/// non-fetchable schemes (mailto:, javascript:, ...).
std::string resolve(const std::string& base, const std::string& href);

/// Last two host labels: "www.who.int" -> "who.int". Hosts with fewer
/// labels (or IP-like hosts) are returned unchanged.
std::string registered_domain(const std::string& host);

/// The normalized URL up to and including its last path segment's
/// directory: ".../docs/intro?x" -> ".../docs/". Used for the crawl
/// frontier's same-prefix preference.
std::string seed_prefix(const std::string& seed_url);

} // namespace termkit::url
