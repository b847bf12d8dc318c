#include "termkit/url.hpp"

#include "termkit/textutil.hpp"

#include <algorithm>
#include <vector>

namespace termkit::url {

namespace {

// Collapses "." and ".." path segments. Keeps a leading '/'.
std::string normalize_path(const std::string& path) {
    std::vector<std::string> stack;
    for (const auto& seg : text::split(path, '/')) {
        if (seg.empty() || seg == ".") continue;
        if (seg == "..") {
            if (!stack.empty()) stack.pop_back();
            continue;
        }
        stack.push_back(seg);
    }
    std::string out = "/" + text::join(stack, "/");
    if (out.size() > 1 && path.size() > 1 && path.back() == '/') out += '/';
    return out;
}

} // namespace

std::optional<Parts> parse(const std::string& url) {
    std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos || scheme_end == 0) return std::nullopt;
    Parts p;
    p.scheme = text::to_lower(url.substr(0, scheme_end));
    for (char c : p.scheme) {
        if (!text::is_ascii_alnum(c) && c != '+' && c != '-' && c != '.') return std::nullopt;
    }
    std::size_t rest = scheme_end + 3;
    std::size_t path_start = url.find_first_of("/?#", rest);
    std::string authority =
        url.substr(rest, path_start == std::string::npos ? std::string::npos : path_start - rest);
    if (authority.empty()) return std::nullopt;
    std::size_t colon = authority.rfind(':');
    if (colon != std::string::npos &&
        std::all_of(authority.begin() + static_cast<std::ptrdiff_t>(colon) + 1, authority.end(),
                    [](char c) { return text::is_ascii_digit(c); }) &&
        colon + 1 < authority.size()) {
        p.host = text::to_lower(authority.substr(0, colon));
        p.port = authority.substr(colon + 1);
    } else {
        p.host = text::to_lower(authority);
    }
    if (p.host.empty()) return std::nullopt;

    p.path = "/";
    if (path_start != std::string::npos) {
        std::string tail = url.substr(path_start);
        std::size_t frag = tail.find('#');
        if (frag != std::string::npos) tail = tail.substr(0, frag);
        std::size_t q = tail.find('?');
        if (q != std::string::npos) {
            p.query = tail.substr(q + 1);
            tail = tail.substr(0, q);
        }
        if (!tail.empty() && tail[0] == '/') {
            p.path = tail;
        } else if (tail.empty()) {
            p.path = "/";
        }
    }
    return p;
}

std::string normalize(const std::string& url) {
    auto p = parse(url);
    if (!p) return url;
    std::string out = p->scheme + "://" + p->host;
    if (!p->port.empty()) out += ":" + p->port;
    out += p->path;
    if (!p->query.empty()) out += "?" + p->query;
    return out;
}

std::string resolve(const std::string& base, const std::string& href) {
    std::string h = std::string(text::trim(href));
    if (h.empty()) return {};
    // Non-fetchable schemes.
    static const char* const bad[] = {"mailto:", "javascript:", "tel:", "data:", "ftp:"};
    std::string lower = text::to_lower(h);
    for (const char* b : bad) {
        if (lower.rfind(b, 0) == 0) return {};
    }
    if (lower.rfind("http://", 0) == 0 || lower.rfind("https://", 0) == 0) {
        return normalize(h);
    }
    auto bp = parse(base);
    if (!bp) return {};
    std::string origin = bp->scheme + "://" + bp->host + (bp->port.empty() ? "" : ":" + bp->port);

    if (h.rfind("//", 0) == 0) return normalize(bp->scheme + ":" + h);
    if (h[0] == '#') return normalize(base); // same page
    if (h[0] == '?') return normalize(origin + bp->path + h);
    if (h[0] == '/') return normalize(origin + normalize_path(h));

    // Path-relative: resolve against the base directory.
    std::string dir = bp->path.substr(0, bp->path.rfind('/') + 1);
    return normalize(origin + normalize_path(dir + h));
}

std::string registered_domain(const std::string& host) {
    std::string h = text::to_lower(host);
    bool numeric = !h.empty() && std::all_of(h.begin(), h.end(), [](char c) {
        return text::is_ascii_digit(c) || c == '.';
    });
    if (numeric) return h;
    auto labels = text::split(h, '.');
    if (labels.size() <= 2) return h;
    return labels[labels.size() - 2] + "." + labels.back();
}

std::string seed_prefix(const std::string& seed_url) {
    auto p = parse(seed_url);
    if (!p) return normalize(seed_url);
    std::string base = p->scheme + "://" + p->host + (p->port.empty() ? "" : ":" + p->port);
    std::string dir = p->path.substr(0, p->path.rfind('/') + 1);
    return base + dir;
}

} // namespace termkit::url
