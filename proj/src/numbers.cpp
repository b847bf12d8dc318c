#include "termkit/numbers.hpp"

#include "termkit/textutil.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace termkit::stream {

namespace {

enum class TokKind { Word, Number, Ordinal, Symbol };

struct Tok {
    TokKind kind = TokKind::Word;
    std::string text;
    std::string lower;
    std::size_t start = 0;
    std::size_t end = 0;
};

const std::unordered_map<std::string, int>& small_numbers() {
    static const std::unordered_map<std::string, int> m = {
        {"zero", 0},     {"one", 1},       {"two", 2},       {"three", 3},    {"four", 4},
        {"five", 5},     {"six", 6},       {"seven", 7},     {"eight", 8},    {"nine", 9},
        {"ten", 10},     {"eleven", 11},   {"twelve", 12},   {"thirteen", 13},
        {"fourteen", 14}, {"fifteen", 15}, {"sixteen", 16},  {"seventeen", 17},
        {"eighteen", 18}, {"nineteen", 19}};
    return m;
}

const std::unordered_map<std::string, int>& tens_numbers() {
    static const std::unordered_map<std::string, int> m = {
        {"twenty", 20}, {"thirty", 30}, {"forty", 40},  {"fifty", 50},
        {"sixty", 60},  {"seventy", 70}, {"eighty", 80}, {"ninety", 90}};
    return m;
}

double big_magnitude(const std::string& w) {
    if (w == "thousand") return 1e3;
    if (w == "million") return 1e6;
    if (w == "billion") return 1e9;
    if (w == "trillion") return 1e12;
    return 0.0;
}

bool is_number_word(const std::string& w) {
    return small_numbers().count(w) || tens_numbers().count(w) || w == "hundred" ||
           big_magnitude(w) > 0.0;
}

bool is_symbol_cp(char32_t cp) {
    return cp == U'$' || cp == U'%' || cp == 0x20AC /* € */ || cp == 0xA3 /* £ */ ||
           cp == 0xA5 /* ¥ */ || cp == 0xB0 /* ° */;
}

/// Unit words that may be glued straight onto digits ("90kg").
const std::unordered_set<std::string>& glued_units() {
    static const std::unordered_set<std::string> u = {"kg", "km", "cm", "mm"};
    return u;
}

void classify_and_append(std::vector<Tok>& out, const std::string& run, std::size_t start) {
    std::string lower = text::to_lower(run);
    if (text::is_ascii_digit(run.front())) {
        std::size_t k = 0;
        while (k < run.size() &&
               (text::is_ascii_digit(run[k]) || run[k] == ',' || run[k] == '.'))
            ++k;
        std::string digits = run.substr(0, k);
        std::string rest = lower.substr(k);
        if (rest.empty()) {
            out.push_back({TokKind::Number, digits, digits, start, start + k});
            return;
        }
        if (rest == "st" || rest == "nd" || rest == "rd" || rest == "th") {
            out.push_back({TokKind::Ordinal, run, lower, start, start + run.size()});
            return;
        }
        if (glued_units().count(rest)) {
            out.push_back({TokKind::Number, digits, digits, start, start + k});
            out.push_back({TokKind::Word, run.substr(k), rest, start + k, start + run.size()});
            return;
        }
        out.push_back({TokKind::Word, run, lower, start, start + run.size()});
        return;
    }
    if (run.find('-') != std::string::npos) {
        auto parts = text::split(run, '-');
        bool all_number_words = true;
        for (const auto& part : parts)
            if (part.empty() || !is_number_word(text::to_lower(part))) {
                all_number_words = false;
                break;
            }
        if (all_number_words) {
            std::size_t offset = start;
            for (const auto& part : parts) {
                out.push_back({TokKind::Word, part, text::to_lower(part), offset,
                               offset + part.size()});
                offset += part.size() + 1; // skip the hyphen
            }
            return;
        }
    }
    out.push_back({TokKind::Word, run, lower, start, start + run.size()});
}

std::vector<Tok> lex(const std::string& s) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t cp_start = i;
        const char32_t cp = text::utf8_next(s, i);
        if (cp < 128 && text::is_ascii_alnum(static_cast<char>(cp))) {
            std::size_t end = i;
            while (end < s.size()) {
                const char c = s[end];
                if (text::is_ascii_alnum(c)) {
                    ++end;
                    continue;
                }
                if ((c == '-' || c == '\'') && end + 1 < s.size() &&
                    text::is_ascii_alnum(s[end + 1])) {
                    ++end;
                    continue;
                }
                if ((c == '.' || c == ',') && text::is_ascii_digit(s[end - 1]) &&
                    end + 1 < s.size() && text::is_ascii_digit(s[end + 1])) {
                    ++end;
                    continue;
                }
                break;
            }
            classify_and_append(out, s.substr(cp_start, end - cp_start), cp_start);
            i = end;
        } else if (is_symbol_cp(cp)) {
            Tok t;
            t.kind = TokKind::Symbol;
            t.text = s.substr(cp_start, i - cp_start);
            t.lower = t.text;
            t.start = cp_start;
            t.end = i;
            out.push_back(std::move(t));
        }
        // anything else is a boundary
    }
    return out;
}

std::optional<double> parse_digit_token(const std::string& t) {
    const std::size_t dot = t.find('.');
    if (dot != std::string::npos && t.find('.', dot + 1) != std::string::npos)
        return std::nullopt; // "1.2.3" is a version, not a number
    const std::string int_part = dot == std::string::npos ? t : t.substr(0, dot);
    const std::string frac = dot == std::string::npos ? std::string() : t.substr(dot + 1);
    if (int_part.empty() || (dot != std::string::npos && frac.empty())) return std::nullopt;
    if (frac.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;

    std::string digits;
    auto groups = text::split(int_part, ',');
    if (groups.size() == 1) {
        digits = groups[0];
        if (digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    } else {
        if (groups[0].empty() || groups[0].size() > 3 ||
            groups[0].find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        digits = groups[0];
        for (std::size_t k = 1; k < groups.size(); ++k) {
            if (groups[k].size() != 3 ||
                groups[k].find_first_not_of("0123456789") != std::string::npos)
                return std::nullopt;
            digits += groups[k];
        }
    }
    if (digits.size() > 15) return std::nullopt; // beyond exact double range
    double value = 0.0;
    for (const char c : digits) value = value * 10.0 + (c - '0');
    if (!frac.empty()) value += std::stod("0." + frac);
    return value;
}

struct WordParse {
    double value = 0.0;
    std::size_t next = 0; // token index after the last consumed one
};

std::optional<WordParse> parse_word_number(const std::vector<Tok>& toks, std::size_t i) {
    const auto& small = small_numbers();
    const auto& tens = tens_numbers();
    double total = 0.0;
    double group = 0.0;
    bool group_units = false, group_tens = false, group_hundred = false;
    bool any = false;
    bool after_magnitude = false;
    double last_magnitude = 1e18;
    std::size_t j = i;
    while (j < toks.size() && toks[j].kind == TokKind::Word) {
        const std::string& w = toks[j].lower;
        if (w == "and") {
            // "and" glues a magnitude word to the group that follows it:
            // "two hundred and five", "one thousand and twenty".
            if (!any || !after_magnitude) break;
            if (j + 1 >= toks.size() || toks[j + 1].kind != TokKind::Word) break;
            const std::string& next = toks[j + 1].lower;
            if (next == "zero" || (!small.count(next) && !tens.count(next))) break;
            ++j;
            after_magnitude = false;
            continue;
        }
        if (auto it = small.find(w); it != small.end()) {
            if (w == "zero") {
                if (any) break;
                return WordParse{0.0, j + 1};
            }
            if (it->second >= 10) { // teens fill both slots
                if (group_tens || group_units) break;
                group += it->second;
                group_tens = group_units = true;
            } else {
                if (group_units) break;
                group += it->second;
                group_units = true;
            }
            any = true;
            after_magnitude = false;
            ++j;
            continue;
        }
        if (auto it = tens.find(w); it != tens.end()) {
            if (group_tens || group_units) break;
            group += it->second;
            group_tens = true;
            any = true;
            after_magnitude = false;
            ++j;
            continue;
        }
        if (w == "hundred") {
            if (!group_units || group_tens || group_hundred) break;
            group *= 100.0;
            group_hundred = true;
            group_units = group_tens = false;
            any = true;
            after_magnitude = true;
            ++j;
            continue;
        }
        if (const double mag = big_magnitude(w); mag > 0.0) {
            if (group <= 0.0 || mag >= last_magnitude) break;
            total += group * mag;
            group = 0.0;
            group_units = group_tens = group_hundred = false;
            last_magnitude = mag;
            any = true;
            after_magnitude = true;
            ++j;
            continue;
        }
        break;
    }
    if (!any) return std::nullopt;
    return WordParse{total + group, j};
}

struct UnitMatch {
    std::string unit;
    std::size_t next = 0;
};

std::string currency_for_symbol(const std::string& symbol) {
    if (symbol == "$") return "USD";
    if (symbol == "€") return "EUR";
    if (symbol == "£") return "GBP";
    if (symbol == "¥") return "JPY";
    return "";
}

std::optional<UnitMatch> match_unit(const std::vector<Tok>& toks, std::size_t j) {
    if (j >= toks.size()) return std::nullopt;
    const Tok& t = toks[j];
    if (t.kind == TokKind::Symbol) {
        if (t.text == "%") return UnitMatch{"%", j + 1};
        if (const std::string cur = currency_for_symbol(t.text); !cur.empty())
            return UnitMatch{cur, j + 1};
        if (t.text == "°" && j + 1 < toks.size() && toks[j + 1].kind == TokKind::Word &&
            toks[j + 1].lower == "c")
            return UnitMatch{"°C", j + 2};
        return std::nullopt;
    }
    if (t.kind != TokKind::Word) return std::nullopt;
    const std::string& w = t.lower;
    const bool has_next_word =
        j + 1 < toks.size() && toks[j + 1].kind == TokKind::Word;
    if (w == "percent") return UnitMatch{"%", j + 1};
    if (w == "per" && has_next_word && toks[j + 1].lower == "cent") return UnitMatch{"%", j + 2};
    if (w == "euro" || w == "euros") return UnitMatch{"EUR", j + 1};
    if (w == "dollar" || w == "dollars") return UnitMatch{"USD", j + 1};
    if (w == "pound" || w == "pounds") return UnitMatch{"GBP", j + 1};
    if (w == "yen") return UnitMatch{"JPY", j + 1};
    if (w == "kg" || w == "kilogram" || w == "kilograms") return UnitMatch{"kg", j + 1};
    if (w == "km" || w == "kilometre" || w == "kilometres" || w == "kilometer" ||
        w == "kilometers")
        return UnitMatch{"km", j + 1};
    if (w == "cm") return UnitMatch{"cm", j + 1};
    if (w == "mm") return UnitMatch{"mm", j + 1};
    if ((w == "degrees" || w == "degree") && has_next_word && toks[j + 1].lower == "celsius")
        return UnitMatch{"°C", j + 2};
    if (w == "celsius") return UnitMatch{"°C", j + 1};
    return std::nullopt;
}

} // namespace

std::vector<DetectedNumber> detect_numbers(const std::string& input,
                                           const std::string& /*language*/) {
    const auto toks = lex(input);
    std::vector<DetectedNumber> out;
    std::size_t i = 0;
    std::size_t floor = 0; // first token not consumed by a previous match
    while (i < toks.size()) {
        double value = 0.0;
        std::size_t value_end = 0;
        bool matched = false;
        if (toks[i].kind == TokKind::Number) {
            if (auto v = parse_digit_token(toks[i].text)) {
                value = *v;
                value_end = i + 1;
                matched = true;
                // mixed form: "2.5 million"
                if (value_end < toks.size() && toks[value_end].kind == TokKind::Word) {
                    if (const double mag = big_magnitude(toks[value_end].lower); mag > 0.0) {
                        value *= mag;
                        ++value_end;
                    }
                }
            }
        } else if (toks[i].kind == TokKind::Word &&
                   (small_numbers().count(toks[i].lower) || tens_numbers().count(toks[i].lower))) {
            if (auto p = parse_word_number(toks, i)) {
                value = p->value;
                value_end = p->next;
                matched = true;
            }
        }
        if (!matched) {
            ++i;
            continue;
        }

        std::size_t span_begin = i;
        std::size_t span_end = value_end;
        std::string unit;
        if (i > floor && toks[i - 1].kind == TokKind::Symbol) {
            if (const std::string cur = currency_for_symbol(toks[i - 1].text); !cur.empty()) {
                unit = cur;
                span_begin = i - 1;
            }
        }
        if (unit.empty()) {
            if (auto u = match_unit(toks, value_end)) {
                unit = u->unit;
                span_end = u->next;
            }
        }

        DetectedNumber d;
        d.start = toks[span_begin].start;
        d.end = toks[span_end - 1].end;
        d.surface = input.substr(d.start, d.end - d.start);
        d.value = value;
        d.unit = unit;
        out.push_back(std::move(d));
        floor = span_end;
        i = span_end;
    }
    return out;
}

} // namespace termkit::stream
