#include "number_oracle.hpp"

#include <array>

namespace testutil {

namespace {

const char* const kUnits[] = {"zero",    "one",     "two",       "three",    "four",
                              "five",    "six",     "seven",     "eight",    "nine",
                              "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
                              "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

const char* const kTens[] = {"",      "",      "twenty",  "thirty", "forty",
                             "fifty", "sixty", "seventy", "eighty", "ninety"};

std::string sub_hundred(int n) { // 1..99
    if (n < 20) return kUnits[n];
    std::string s = kTens[n / 10];
    if (n % 10) s += std::string("-") + kUnits[n % 10];
    return s;
}

std::string three_digits(int n) { // 1..999
    if (n < 100) return sub_hundred(n);
    std::string s = std::string(kUnits[n / 100]) + " hundred";
    if (n % 100) s += " and " + sub_hundred(n % 100);
    return s;
}

} // namespace

std::string render_words(std::int64_t n) {
    if (n == 0) return "zero";
    struct Magnitude {
        std::int64_t value;
        const char* word;
    };
    constexpr std::array<Magnitude, 4> magnitudes{{{1000000000000LL, "trillion"},
                                                   {1000000000LL, "billion"},
                                                   {1000000LL, "million"},
                                                   {1000LL, "thousand"}}};
    std::string out;
    for (const auto& magnitude : magnitudes) {
        if (n < magnitude.value) continue;
        const auto group = static_cast<int>(n / magnitude.value);
        if (!out.empty()) out += ' ';
        out += three_digits(group) + ' ' + magnitude.word;
        n %= magnitude.value;
    }
    if (n > 0) {
        if (!out.empty()) out += n < 100 ? " and " : " ";
        out += three_digits(static_cast<int>(n));
    }
    return out;
}

} // namespace testutil
