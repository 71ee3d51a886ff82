#include <doctest.h>

#include "chartalt/text_format.hpp"

using namespace chartalt;

TEST_CASE("format_number renders 4 significant figures with trimming") {
    CHECK(format_number(7.500909) == "7.501");
    CHECK(format_number(0.98341) == "0.9834");
    CHECK(format_number(1234567) == "1235000");
    CHECK(format_number(1.937024) == "1.937");
    CHECK(format_number(0.9500365) == "0.95");
    CHECK(format_number(234421) == "234400");
    CHECK(format_number(166300) == "166300");
    CHECK(format_number(2.5) == "2.5");
    CHECK(format_number(15) == "15");
    CHECK(format_number(-0.06) == "-0.06");
    CHECK(format_number(0) == "0");
    CHECK(format_number(5.0) == "5");
    CHECK(format_number(-46.08) == "-46.08");
    CHECK(format_number(8.33333333) == "8.333");
    CHECK(format_number(180.16666) == "180.2");
    CHECK(format_number(-0.0001916) == "-0.0001916");
    CHECK(format_number(9.9999) == "10");
}

TEST_CASE("capitalize_sentences uppercases after periods only") {
    CHECK(capitalize_sentences("a line plot. the data has 12 points.", true) ==
          "A line plot. The data has 12 points.");
    // '#' blocks the capital; the next word stays lowercase.
    CHECK(capitalize_sentences("average of y=0. # bikes has a min.", true) ==
          "Average of y=0. # bikes has a min.");
    // Abbreviations inside extracted text get the same treatment.
    CHECK(capitalize_sentences("titled 'sunshine vs. number of bikes'.", true) ==
          "Titled 'sunshine vs. Number of bikes'.");
    // Newlines do not start a capitalized sentence.
    CHECK(capitalize_sentences("a figure.\nsubplot 1: a line plot.", true) ==
          "A figure.\nsubplot 1: a line plot.");
    CHECK(capitalize_sentences("subplot 2: a line plot. the x-axis.", false) ==
          "subplot 2: a line plot. The x-axis.");
}

TEST_CASE("oxford_join") {
    CHECK(oxford_join({}) == "");
    CHECK(oxford_join({"a"}) == "a");
    CHECK(oxford_join({"a", "b"}) == "a and b");
    CHECK(oxford_join({"a", "b", "c"}) == "a, b, and c");
}

TEST_CASE("html attribute escaping round-trips") {
    const std::string nasty = "a \"quoted\" <tag> & 'apostrophe'";
    const std::string escaped = html_escape_attr(nasty);
    CHECK(escaped == "a &quot;quoted&quot; &lt;tag&gt; &amp; &#39;apostrophe&#39;");
    CHECK(html_unescape(escaped) == nasty);
}
