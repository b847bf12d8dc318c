#include "termkit/html.hpp"

#include <doctest.h>

#include <random>

using namespace termkit;

TEST_CASE("clean_page keeps body text and drops head") {
    CHECK(html::clean_page(
              "<html><head><title>T</title></head><body><p>Solar power</p></body></html>") ==
          "Solar power");
}

TEST_CASE("clean_page drops nav and footer, decodes entities") {
    CHECK(html::clean_page("<body><nav>Menu</nav><p>A &amp; B</p><footer>\xC2\xA9</footer></body>") ==
          "A & B");
}

TEST_CASE("clean_page is the identity on plain text") {
    CHECK(html::clean_page("plain text no tags") == "plain text no tags");
}

TEST_CASE("clean_page strips script and style with their content") {
    CHECK(html::clean_page("<p>keep</p><script>var x = '<p>no</p>';</script><style>p{}</style>"
                           "<p>also</p>") == "keep\nalso");
}

TEST_CASE("clean_page separates block elements with paragraph breaks") {
    CHECK(html::clean_page("<h1>Title</h1><p>One</p><p>Two</p>") == "Title\nOne\nTwo");
    CHECK(html::clean_page("first<br>second") == "first\nsecond");
    CHECK(html::clean_page("<ul><li>a</li><li>b</li></ul>") == "a\nb");
}

TEST_CASE("clean_page keeps inline elements without extra spaces") {
    CHECK(html::clean_page("So<b>lar</b> power") == "Solar power");
    CHECK(html::clean_page("<em>solar</em> <strong>panel</strong>") == "solar panel");
}

TEST_CASE("clean_page literal angle brackets survive") {
    CHECK(html::clean_page("2 < 3 and 5 > 4") == "2 < 3 and 5 > 4");
    CHECK(html::clean_page("x <3 y") == "x <3 y");
}

TEST_CASE("clean_page decodes numeric entities") {
    CHECK(html::clean_page("caf&#233;") == "caf\xC3\xA9");
    CHECK(html::clean_page("caf&#xE9;") == "caf\xC3\xA9");
    CHECK(html::clean_page("&unknown; stays") == "&unknown; stays");
}

TEST_CASE("clean_page handles comments, doctype and malformed markup") {
    CHECK(html::clean_page("<!DOCTYPE html><!-- note --><p>ok</p>") == "ok");
    CHECK(html::clean_page("broken <p unterminated") == "broken");
    CHECK(html::clean_page("<script>never closed") == "");
    CHECK(html::clean_page("") == "");
}

TEST_CASE("clean_page handles nested skip elements") {
    CHECK(html::clean_page("<nav>a<nav>b</nav>c</nav>visible") == "visible");
    CHECK(html::clean_page("<header><div>x</div></header>rest") == "rest");
}

TEST_CASE("clean_page is idempotent, entity re-forming included") {
    const char* samples[] = {
        "<html><head><title>T</title></head><body><p>Solar power</p></body></html>",
        "<body><nav>Menu</nav><p>A &amp; B</p><footer>c</footer></body>",
        "plain text no tags",
        "&lt;p&gt;looks like a tag&lt;/p&gt;",
        "&amp;amp; double encoded",
        "2 < 3 and A &amp; B",
        "<div>blocks<br>and<br>breaks</div>",
    };
    for (const char* s : samples) {
        std::string once = html::clean_page(s);
        CHECK(html::clean_page(once) == once);
    }
}

TEST_CASE("clean_page idempotence on random tag soup") {
    std::mt19937 rng(5);
    const char* pieces[] = {"<p>", "</p>", "text", "&amp;", "&lt;b&gt;", "<script>x</script>",
                            " ",   "<br>", "word", "<nav>", "</nav>",   "2<3",
                            "<b>", "</b>", "\n\n", "&#65;"};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(pieces) - 1);
    std::uniform_int_distribution<int> len(0, 20);
    for (int iter = 0; iter < 300; ++iter) {
        std::string soup;
        int n = len(rng);
        for (int i = 0; i < n; ++i) soup += pieces[pick(rng)];
        std::string once = html::clean_page(soup);
        CHECK(html::clean_page(once) == once);
    }
}

TEST_CASE("extract_links finds hrefs in document order") {
    auto links = html::extract_links(
        "<a href=\"/a\">A</a> text <A HREF='b.html'>B</A> <a href=https://x.example/c>C</a>"
        " <a name=\"anchor\">no href</a>");
    CHECK(links == std::vector<std::string>{"/a", "b.html", "https://x.example/c"});
}
