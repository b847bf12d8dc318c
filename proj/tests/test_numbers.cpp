#include "termkit/numbers.hpp"

#include "support/number_oracle.hpp"

#include <doctest.h>

#include <random>

using namespace termkit;
using stream::detect_numbers;

namespace {

stream::DetectedNumber only(const std::string& text) {
    auto found = detect_numbers(text);
    REQUIRE(found.size() == 1);
    return found[0];
}

} // namespace

TEST_CASE("digit sequences with grouping and decimals") {
    auto n = only("the index fell to 1,100 today");
    CHECK(n.value == 1100.0);
    CHECK(n.unit == "");
    CHECK(n.surface == "1,100");

    CHECK(only("pi is roughly 3.14 indeed").value == doctest::Approx(3.14));
    CHECK(only("total of 1,234,567 items").value == 1234567.0);
    CHECK(only("balance 1,100.50 at close").value == doctest::Approx(1100.50));
    CHECK(only("year 1999 was notable").value == 1999.0);
}

TEST_CASE("malformed digit groupings and versions do not match") {
    CHECK(detect_numbers("version 1.2.3 shipped").empty());
    CHECK(detect_numbers("code 1,23 here").empty());
    CHECK(detect_numbers("id 12,3456 here").empty());
    CHECK(detect_numbers("nothing numeric here").empty());
}

TEST_CASE("spelled-out numbers with magnitude words") {
    CHECK(only("we sold three million units").value == 3000000.0);
    CHECK(only("two hundred and five people came").value == 205.0);
    CHECK(only("one thousand and twenty entries").value == 1020.0);
    CHECK(only("twenty-five laps remain").value == 25.0);
    CHECK(only("it scored zero points").value == 0.0);
    CHECK(only("one hundred and five thousand and six votes").value == 105006.0);
}

TEST_CASE("a trailing 'and' stays outside the match") {
    auto n = only("two hundred and then some");
    CHECK(n.value == 200.0);
    CHECK(n.surface == "two hundred");
}

TEST_CASE("mixed digit-word forms") {
    auto n = only("GDP reached 2.5 million euros last year");
    CHECK(n.value == 2500000.0);
    CHECK(n.unit == "EUR");
    CHECK(n.surface == "2.5 million euros");
}

TEST_CASE("percent in all spellings") {
    auto a = only("it grew by 2.5% overall");
    CHECK(a.value == doctest::Approx(2.5));
    CHECK(a.unit == "%");
    CHECK(a.surface == "2.5%");

    CHECK(only("it grew by 2.5 percent overall").unit == "%");
    CHECK(only("rates rose 3 per cent there").unit == "%");
    CHECK(only("twenty-five percent voted").value == 25.0);
}

TEST_CASE("currency words and symbols") {
    auto euros = only("they spent three million euros on it");
    CHECK(euros.value == 3000000.0);
    CHECK(euros.unit == "EUR");

    auto shorthand = only("a $5 million deal closed");
    CHECK(shorthand.value == 5000000.0);
    CHECK(shorthand.unit == "USD");
    CHECK(shorthand.surface == "$5 million");

    CHECK(only("price €90 per night").unit == "EUR");
    CHECK(only("fee of £12 applies").unit == "GBP");
    CHECK(only("about 500 yen each").unit == "JPY");
    CHECK(only("three pounds of pressure").unit == "GBP");
    CHECK(only("two dollars more").unit == "USD");
}

TEST_CASE("measurement units attach") {
    auto kg = only("it weighs 90kg fully loaded");
    CHECK(kg.value == 90.0);
    CHECK(kg.unit == "kg");
    CHECK(kg.surface == "90kg");

    CHECK(only("a 12 km route").unit == "km");
    CHECK(only("it was 25°C outside").unit == "°C");
    CHECK(only("it was 25 degrees celsius outside").unit == "°C");
    CHECK(only("about 30 cm wide").unit == "cm");
}

TEST_CASE("ordinals are excluded") {
    CHECK(detect_numbers("the 21st century began").empty());
    CHECK(detect_numbers("her third attempt succeeded").empty());
    CHECK(detect_numbers("the twenty-first amendment").empty());
    CHECK(detect_numbers("1st and 2nd and 3rd and 4th").empty());
}

TEST_CASE("several numbers in one text keep document order") {
    auto found = detect_numbers("CPI rose 2.5% while GDP added three million euros in 2024");
    REQUIRE(found.size() == 3);
    CHECK(found[0].value == doctest::Approx(2.5));
    CHECK(found[0].unit == "%");
    CHECK(found[1].value == 3000000.0);
    CHECK(found[1].unit == "EUR");
    CHECK(found[2].value == 2024.0);
    CHECK(found[0].start < found[1].start);
    CHECK(found[1].start < found[2].start);
}

TEST_CASE("byte spans reconstruct the surface") {
    const std::string text = "they spent €90 and twenty-five percent more";
    auto found = detect_numbers(text);
    REQUIRE(found.size() == 2);
    for (const auto& n : found) CHECK(text.substr(n.start, n.end - n.start) == n.surface);
}

TEST_CASE("words-to-value inverts the independent renderer") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::int64_t> pick(0, 1000000000LL);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t n = pick(rng);
        const std::string words = testutil::render_words(n);
        auto found = detect_numbers("they counted " + words + " in total");
        REQUIRE_MESSAGE(found.size() == 1, "words: " << words);
        CHECK_MESSAGE(found[0].value == static_cast<double>(n), "words: " << words);
        CHECK(found[0].surface == words);
    }
    // Boundary values of the documented range.
    for (std::int64_t n : {0LL, 1LL, 19LL, 20LL, 100LL, 105LL, 999LL, 1000LL, 1005LL, 999999LL,
                           1000000LL, 999999999LL, 1000000000LL}) {
        auto found = detect_numbers(testutil::render_words(n));
        REQUIRE(found.size() == 1);
        CHECK(found[0].value == static_cast<double>(n));
    }
}
