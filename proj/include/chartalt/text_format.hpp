#pragma once

#include <string>
#include <vector>

namespace chartalt {

// Renders a number the way captions print values: 4 significant figures,
// trailing zeros trimmed, integers without a decimal point, and plain
// (non-scientific) notation for magnitudes below 1e7.
std::string format_number(double x);

// Lowercases ASCII letters; text extracted from figures (titles, labels,
// tick labels, annotations) passes through this before templating.
std::string lowercase(const std::string& s);

// Uppercases the first alphabetic character after every ". " occurrence.
// When `capitalize_start` is set, also uppercases the first alphabetic
// character of the string itself.
std::string capitalize_sentences(const std::string& s, bool capitalize_start);

// "a" / "a and b" / "a, b, and c"
std::string oxford_join(const std::vector<std::string>& items);

std::string html_escape_attr(const std::string& s);
std::string html_unescape(const std::string& s);

}  // namespace chartalt
