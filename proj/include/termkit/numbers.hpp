#pragma once

#include <string>
#include <vector>

namespace termkit::stream {

struct DetectedNumber {
    std::string surface; // exact text span, including any attached unit
    std::size_t start = 0; // byte span in the input text
    std::size_t end = 0;
    double value = 0.0;
    std::string unit; // "%", "EUR", "USD", "GBP", "JPY", "kg", "km", "°C", ... or ""
};

/// Finds numeric mentions: digit forms with grouping separators and
/// decimals ("1,100", "3.14"), spelled-out numbers with magnitude words up
/// to one trillion ("two hundred and five", "three million"), and mixed
/// forms ("2.5 million"). Percent signs/words, currency words and symbols
/// ($, €, £, ¥) and common measurement units attach as `unit`. Ordinals
/// ("21st", "third") are excluded; years parse as plain values.
std::vector<DetectedNumber> detect_numbers(const std::string& text,
                                           const std::string& language = "en");

} // namespace termkit::stream
