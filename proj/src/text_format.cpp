#include "chartalt/text_format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace chartalt {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";

    const bool negative = x < 0;
    const double a = std::fabs(x);

    if (a >= 1e7) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.4g", x);
        return buf;
    }

    // Number of digits before the decimal point, then pad with fractional
    // digits until 4 significant figures are shown.
    const int int_digits = static_cast<int>(std::ceil(std::log10(a)));
    int decimals = 4 - int_digits;
    if (decimals < 0) {
        // Round to a power of ten: 234421 -> 234400.
        const double scale = std::pow(10.0, -decimals);
        const double rounded = std::round(a / scale) * scale;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.0f", rounded);
        return negative ? "-" + std::string(buf) : std::string(buf);
    }
    if (decimals > 17) decimals = 17;

    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, a);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
    }
    // Rounding can bump the integer width (9.9999 -> 10.000): that is fine,
    // the trim above already removed the excess zeros.
    if (s == "0") return "0";
    return negative ? "-" + s : s;
}

std::string lowercase(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string capitalize_sentences(const std::string& s, bool capitalize_start) {
    std::string out = s;
    if (capitalize_start) {
        if (!out.empty() && std::isalpha(static_cast<unsigned char>(out[0]))) {
            out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
        }
    }
    for (std::size_t i = 0; i + 2 < out.size(); ++i) {
        if (out[i] == '.' && out[i + 1] == ' ' &&
            std::isalpha(static_cast<unsigned char>(out[i + 2]))) {
            out[i + 2] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[i + 2])));
        }
    }
    return out;
}

std::string oxford_join(const std::vector<std::string>& items) {
    if (items.empty()) return {};
    if (items.size() == 1) return items[0];
    if (items.size() == 2) return items[0] + " and " + items[1];
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        if (i + 1 == items.size()) out += "and ";
        out += items[i];
    }
    return out;
}

std::string html_escape_attr(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&#39;"; break;
            default: out += c; break;
        }
    }
    return out;
}

std::string html_unescape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == '&') {
            auto starts = [&](const char* e) { return s.compare(i, std::char_traits<char>::length(e), e) == 0; };
            if (starts("&amp;")) { out += '&'; i += 5; continue; }
            if (starts("&lt;")) { out += '<'; i += 4; continue; }
            if (starts("&gt;")) { out += '>'; i += 4; continue; }
            if (starts("&quot;")) { out += '"'; i += 6; continue; }
            if (starts("&#39;")) { out += '\''; i += 5; continue; }
        }
        out += s[i++];
    }
    return out;
}

}  // namespace chartalt
