#include "termkit/matcher.hpp"

#include "termkit/errors.hpp"

#include <doctest.h>

#include <set>

using namespace termkit;
using stream::CompiledMatcher;
using stream::expand_variants;

namespace {

glossary::GlossaryEntry entry(const std::string& term, const std::string& translation = "") {
    glossary::GlossaryEntry e;
    e.source_term = term;
    e.source_lang = "en";
    if (!translation.empty()) e.translations["it"] = translation;
    return e;
}

glossary::Glossary make_glossary(const std::vector<std::string>& terms,
                                 const std::string& name = "g") {
    glossary::Glossary g{name, "en", {}};
    for (const auto& term : terms) g.entries.push_back(entry(term));
    return g;
}

} // namespace

TEST_CASE("expand_variants adds the final-word plural") {
    auto variants = expand_variants(entry("interest rate"), "en");
    CHECK(variants == std::set<std::string>{"interest rate", "interest rates"});
}

TEST_CASE("expand_variants maps a plural entry back to its singular") {
    auto variants = expand_variants(entry("interest rates"), "en");
    CHECK(variants.count("interest rate") == 1);
    CHECK(variants.count("interest rates") == 1);
}

TEST_CASE("expand_variants generates hyphen and space alternations") {
    auto variants = expand_variants(entry("e-mail"), "en");
    CHECK(variants.count("e-mail") == 1);
    CHECK(variants.count("email") == 1);
    CHECK(variants.count("e mail") == 1);
    CHECK(variants.count("e-mails") == 1);
    CHECK(variants.count("emails") == 1);
    CHECK(variants.count("e mails") == 1);
}

TEST_CASE("expand_variants inflects single-word entries like verbs") {
    auto variants = expand_variants(entry("address"), "en");
    CHECK(variants ==
          std::set<std::string>{"address", "addresses", "addressed", "addressing"});
}

TEST_CASE("compile rejects degenerate inputs") {
    CHECK_THROWS_AS(CompiledMatcher::compile({}, "en"), CompileError);
    CHECK_THROWS_AS(CompiledMatcher::compile({glossary::Glossary{"g", "en", {}}}, "en"),
                    CompileError);
    glossary::Glossary german{"g", "de", {entry("zins")}};
    CHECK_THROWS_AS(CompiledMatcher::compile({german}, "en"), CompileError);
}

TEST_CASE("variant matching finds inflected surfaces") {
    auto matcher = CompiledMatcher::compile({make_glossary({"interest rate"})}, "en");
    auto matches = matcher.match("the interest rates remain low");
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].surface == "interest rates");
    CHECK(matches[0].entry->source_term == "interest rate");
}

TEST_CASE("matching is case-insensitive") {
    auto matcher = CompiledMatcher::compile({make_glossary({"interest rate"})}, "en");
    CHECK(matcher.match("Interest Rates went up").size() == 1);
    CHECK(matcher.match("INTEREST RATE!").size() == 1);
}

TEST_CASE("longest match wins at overlapping positions") {
    auto matcher = CompiledMatcher::compile(
        {make_glossary({"central bank", "European central bank"})}, "en");
    auto matches = matcher.match("the European central bank raised rates");
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].surface == "European central bank");
    CHECK(matches[0].entry->source_term == "European central bank");
}

TEST_CASE("matches are non-overlapping and leftmost") {
    auto matcher = CompiledMatcher::compile({make_glossary({"bank rate", "rate cut"})}, "en");
    auto matches = matcher.match("the bank rate cut was expected");
    REQUIRE(matches.size() == 1); // "bank rate" consumes "rate"
    CHECK(matches[0].surface == "bank rate");
}

TEST_CASE("matches never cross sentence boundaries") {
    auto matcher = CompiledMatcher::compile({make_glossary({"interest rate"})}, "en");
    CHECK(matcher.match("they have an interest. rate decisions follow").empty());
}

TEST_CASE("token anchoring prevents substring matches") {
    auto matcher = CompiledMatcher::compile({make_glossary({"interest rate"})}, "en");
    CHECK(matcher.match("pinterest rates are not relevant").empty());
}

TEST_CASE("hyphen alternations match all written forms") {
    auto matcher = CompiledMatcher::compile({make_glossary({"e-mail"})}, "en");
    CHECK(matcher.match("send an e-mail now").size() == 1);
    CHECK(matcher.match("send an email now").size() == 1);
    CHECK(matcher.match("send an e mail now").size() == 1);
    CHECK(matcher.match("send an E-Mail now").size() == 1);
}

TEST_CASE("several glossaries compile together, first wins on collisions") {
    auto a = make_glossary({"interest rate"}, "a");
    a.entries[0].translations["it"] = "from-a";
    auto b = make_glossary({"interest rate", "central bank"}, "b");
    b.entries[0].translations["it"] = "from-b";
    auto matcher = CompiledMatcher::compile({a, b}, "en");
    auto matches = matcher.match("the interest rate and the central bank");
    REQUIRE(matches.size() == 2);
    CHECK(matches[0].entry->translations.at("it") == "from-a");
    CHECK(matches[1].entry->source_term == "central bank");
}

TEST_CASE("multi-word patterns up to five words match") {
    auto matcher = CompiledMatcher::compile(
        {make_glossary({"european central bank rate decision"})}, "en");
    auto matches = matcher.match("the european central bank rate decision surprised");
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].surface == "european central bank rate decision");
}

TEST_CASE("variant reports which pattern fired") {
    auto matcher = CompiledMatcher::compile({make_glossary({"interest rate"})}, "en");
    auto matches = matcher.match("Interest Rates again");
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].variant == "interest rates");
}
