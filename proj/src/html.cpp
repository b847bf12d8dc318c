#include "termkit/html.hpp"

#include "termkit/textutil.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace termkit::html {

namespace {

using text::is_ascii_alpha;

std::string lower_tag(const std::string& s) { return text::to_lower(s); }

const std::unordered_set<std::string>& skip_elements() {
    static const std::unordered_set<std::string> set = {"script", "style",  "head",
                                                        "nav",    "header", "footer"};
    return set;
}

// Elements whose boundaries separate paragraphs in the extracted text.
const std::unordered_set<std::string>& block_elements() {
    static const std::unordered_set<std::string> set = {
        "p",       "div",     "br",    "li",    "ul",      "ol",      "dl",      "dt",
        "dd",      "h1",      "h2",    "h3",    "h4",      "h5",      "h6",      "tr",
        "td",      "th",      "table", "thead", "tbody",   "tfoot",   "section", "article",
        "aside",   "blockquote", "pre", "hr",   "form",    "fieldset","main",    "figure",
        "figcaption", "details", "summary", "address", "title", "body", "html"};
    return set;
}

const std::unordered_map<std::string, std::string>& named_entities() {
    static const std::unordered_map<std::string, std::string> map = {
        {"amp", "&"},        {"lt", "<"},         {"gt", ">"},         {"quot", "\""},
        {"apos", "'"},       {"nbsp", " "},       {"copy", "\xC2\xA9"},{"reg", "\xC2\xAE"},
        {"trade", "\xE2\x84\xA2"}, {"mdash", "\xE2\x80\x94"}, {"ndash", "\xE2\x80\x93"},
        {"hellip", "\xE2\x80\xA6"}, {"rsquo", "\xE2\x80\x99"}, {"lsquo", "\xE2\x80\x98"},
        {"rdquo", "\xE2\x80\x9D"}, {"ldquo", "\xE2\x80\x9C"}, {"laquo", "\xC2\xAB"},
        {"raquo", "\xC2\xBB"}, {"deg", "\xC2\xB0"}, {"euro", "\xE2\x82\xAC"},
        {"pound", "\xC2\xA3"}, {"yen", "\xC2\xA5"}, {"cent", "\xC2\xA2"},
        {"sect", "\xC2\xA7"},  {"middot", "\xC2\xB7"}, {"times", "\xC3\x97"},
        {"shy", ""},           {"bull", "\xE2\x80\xA2"},
    };
    return map;
}

// Decodes the entity starting at s[i] (which is '&'). On success appends the
// replacement and returns the index after the ';'; otherwise returns i.
std::size_t try_decode_entity(const std::string& s, std::size_t i, std::string& out) {
    std::size_t semi = s.find(';', i + 1);
    if (semi == std::string::npos || semi - i > 12 || semi == i + 1) return i;
    std::string body = s.substr(i + 1, semi - i - 1);
    if (body[0] == '#') {
        char32_t cp = 0;
        bool ok = body.size() > 1;
        if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
            for (std::size_t k = 2; k < body.size() && ok; ++k) {
                char c = static_cast<char>(std::tolower(static_cast<unsigned char>(body[k])));
                if (c >= '0' && c <= '9') cp = cp * 16 + static_cast<char32_t>(c - '0');
                else if (c >= 'a' && c <= 'f') cp = cp * 16 + static_cast<char32_t>(c - 'a' + 10);
                else ok = false;
            }
            ok = ok && body.size() > 2;
        } else {
            for (std::size_t k = 1; k < body.size() && ok; ++k) {
                if (body[k] >= '0' && body[k] <= '9') cp = cp * 10 + static_cast<char32_t>(body[k] - '0');
                else ok = false;
            }
        }
        if (!ok) return i;
        out += text::encode_utf8(cp);
        return semi + 1;
    }
    auto it = named_entities().find(text::to_lower(body));
    if (it == named_entities().end()) return i;
    out += it->second;
    return semi + 1;
}

// '<' opens a tag only when followed by a letter, '/', '!' or '?'.
bool opens_tag(const std::string& s, std::size_t i) {
    if (i + 1 >= s.size()) return false;
    char c = s[i + 1];
    return is_ascii_alpha(c) || c == '/' || c == '!' || c == '?';
}

struct Tag {
    std::string name;     // lowercased
    bool closing = false;
    bool self_closing = false;
    std::size_t end = 0;  // index just past '>'
};

// Parses the tag starting at s[i] == '<'. Malformed tags without '>' run to
// the end of the input.
Tag parse_tag(const std::string& s, std::size_t i) {
    Tag tag;
    std::size_t j = i + 1;
    if (j < s.size() && s[j] == '/') {
        tag.closing = true;
        ++j;
    }
    // Comments: <!-- ... -->
    if (s.compare(i, 4, "<!--") == 0) {
        std::size_t close = s.find("-->", i + 4);
        tag.name = "!--";
        tag.end = close == std::string::npos ? s.size() : close + 3;
        return tag;
    }
    std::size_t name_start = j;
    while (j < s.size() && (text::is_ascii_alnum(s[j]) || s[j] == '!' || s[j] == '?')) ++j;
    tag.name = lower_tag(s.substr(name_start, j - name_start));
    std::size_t close = s.find('>', j);
    if (close == std::string::npos) {
        tag.end = s.size();
        return tag;
    }
    // Quoted attribute values may contain '>'; a simple scan is enough for
    // boilerplate removal purposes.
    std::size_t scan = j;
    char quote = 0;
    for (; scan < s.size(); ++scan) {
        char c = s[scan];
        if (quote) {
            if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '>') {
            break;
        }
    }
    close = scan == s.size() ? s.size() : scan;
    tag.self_closing = close > i && close <= s.size() && close > 0 && s[close - 1] == '/';
    tag.end = close == s.size() ? s.size() : close + 1;
    return tag;
}

std::string strip_once(const std::string& input) {
    std::string out;
    out.reserve(input.size());
    int skip_depth = 0;

    std::size_t i = 0;
    const std::size_t n = input.size();
    while (i < n) {
        char c = input[i];
        if (c == '<' && opens_tag(input, i)) {
            Tag tag = parse_tag(input, i);
            i = tag.end;
            if (tag.name == "!--" || tag.name.empty() || tag.name[0] == '!' ||
                tag.name[0] == '?') {
                continue; // comments, doctype, processing instructions
            }
            // Raw-text elements: drop everything up to the matching close tag.
            if (!tag.closing && !tag.self_closing &&
                (tag.name == "script" || tag.name == "style")) {
                std::string close = "</" + tag.name;
                std::size_t pos = i;
                std::size_t found = std::string::npos;
                while (pos < n) {
                    std::size_t cand = input.find('<', pos);
                    if (cand == std::string::npos) break;
                    if (cand + close.size() <= n) {
                        bool match = true;
                        for (std::size_t k = 0; k < close.size(); ++k) {
                            char a = input[cand + k];
                            if (a >= 'A' && a <= 'Z') a = static_cast<char>(a - 'A' + 'a');
                            if (a != close[k]) { match = false; break; }
                        }
                        if (match) { found = cand; break; }
                    }
                    pos = cand + 1;
                }
                if (found == std::string::npos) {
                    i = n; // unterminated: drop the rest
                } else {
                    Tag closer = parse_tag(input, found);
                    i = closer.end;
                }
                if (skip_depth == 0) out += '\n';
                continue;
            }
            bool is_skip = skip_elements().count(tag.name) > 0;
            if (is_skip && !tag.self_closing) {
                if (tag.closing) {
                    if (skip_depth > 0) --skip_depth;
                    if (skip_depth == 0) out += '\n';
                } else {
                    if (skip_depth == 0) out += '\n';
                    ++skip_depth;
                }
                continue;
            }
            if (skip_depth == 0 && block_elements().count(tag.name)) out += '\n';
            continue;
        }
        if (skip_depth > 0) {
            ++i;
            continue;
        }
        if (c == '&') {
            std::size_t next = try_decode_entity(input, i, out);
            if (next != i) {
                i = next;
                continue;
            }
        }
        out += c;
        ++i;
    }
    return text::normalize_whitespace(out);
}

} // namespace

std::string clean_page(const std::string& html) {
    // Iterate to a fixed point so the cleaner is idempotent even when
    // decoded entities re-form markup (&lt;p&gt; -> <p>).
    std::string current = strip_once(html);
    for (int guard = 0; guard < 64; ++guard) {
        std::string next = strip_once(current);
        if (next == current) break;
        current = std::move(next);
    }
    return current;
}

std::vector<std::string> extract_links(const std::string& html) {
    std::vector<std::string> out;
    std::size_t i = 0;
    const std::size_t n = html.size();
    while (i < n) {
        std::size_t lt = html.find('<', i);
        if (lt == std::string::npos) break;
        if (!opens_tag(html, lt)) {
            i = lt + 1;
            continue;
        }
        Tag tag = parse_tag(html, lt);
        if (tag.name == "a" && !tag.closing) {
            std::string inside = html.substr(lt, tag.end - lt);
            std::string lower = text::to_lower(inside);
            std::size_t at = lower.find("href");
            if (at != std::string::npos) {
                std::size_t eq = inside.find('=', at + 4);
                if (eq != std::string::npos) {
                    std::size_t v = eq + 1;
                    while (v < inside.size() && text::is_space(inside[v])) ++v;
                    if (v < inside.size()) {
                        std::string value;
                        if (inside[v] == '"' || inside[v] == '\'') {
                            char q = inside[v];
                            std::size_t end = inside.find(q, v + 1);
                            if (end != std::string::npos) value = inside.substr(v + 1, end - v - 1);
                        } else {
                            std::size_t end = v;
                            while (end < inside.size() && !text::is_space(inside[end]) &&
                                   inside[end] != '>') {
                                ++end;
                            }
                            value = inside.substr(v, end - v);
                        }
                        value = std::string(text::trim(value));
                        if (!value.empty()) out.push_back(value);
                    }
                }
            }
        }
        i = tag.end;
    }
    return out;
}

} // namespace termkit::html
