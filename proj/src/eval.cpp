#include "chartalt/eval.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chartalt/errors.hpp"
#include "chartalt/stats_kernels.hpp"

namespace chartalt::eval {

namespace {

struct Rule {
    std::regex pattern;
    const char* replacement;
};

// The classic Treebank tokenizer rule cascade.
const std::vector<Rule>& starting_quote_rules() {
    static const std::vector<Rule> rules = {
        {std::regex(R"(^")"), "``"},
        {std::regex(R"((``))"), " $1 "},
        {std::regex(R"(([ \(\[{<])("|'{2}))"), "$1 `` "},
    };
    return rules;
}

const std::vector<Rule>& punctuation_rules() {
    static const std::vector<Rule> rules = {
        {std::regex(R"(([:,])([^\d]))"), " $1 $2"},
        {std::regex(R"(([:,])$)"), " $1 "},
        {std::regex(R"(\.\.\.)"), " ... "},
        {std::regex(R"([;@#$%&])"), " $& "},
        // Sentence boundaries inside multi-sentence captions (the classic
        // cascade only handles the final period).
        {std::regex(R"(([^\.])(\.)(\s))"), "$1 $2$3"},
        {std::regex(R"(([^\.])(\.)([\]\)}>"']*)\s*$)"), "$1 $2$3 "},
        {std::regex(R"([?!])"), " $& "},
        {std::regex(R"(([^'])' )"), "$1 ' "},
        {std::regex(R"([\]\[\(\)\{\}<>])"), " $& "},
        {std::regex(R"(--)"), " -- "},
    };
    return rules;
}

const std::vector<Rule>& ending_quote_rules() {
    static const std::vector<Rule> rules = {
        {std::regex(R"(")"), " '' "},
        {std::regex(R"((\S)(''))"), "$1 $2 "},
        {std::regex(R"(([^' ])('[sS]|'[mM]|'[dD]|') )"), "$1 $2 "},
        {std::regex(R"(([^' ])('ll|'LL|'re|'RE|'ve|'VE|n't|N'T) )"), "$1 $2 "},
    };
    return rules;
}

const std::vector<Rule>& contraction_rules() {
    static const std::vector<Rule> rules = {
        {std::regex(R"(\b(can)(not)\b)", std::regex::icase), "$1 $2"},
        {std::regex(R"(\b(gon)(na)\b)", std::regex::icase), "$1 $2"},
        {std::regex(R"(\b(got)(ta)\b)", std::regex::icase), "$1 $2"},
        {std::regex(R"(\b(lem)(me)\b)", std::regex::icase), "$1 $2"},
        {std::regex(R"(\b(gim)(me)\b)", std::regex::icase), "$1 $2"},
        {std::regex(R"(\b(wan)(na) )", std::regex::icase), "$1 $2 "},
    };
    return rules;
}

std::string apply(const std::vector<Rule>& rules, std::string text) {
    for (const auto& rule : rules) text = std::regex_replace(text, rule.pattern, rule.replacement);
    return text;
}

}  // namespace

const char* error_type_name(ErrorType t) {
    switch (t) {
        case ErrorType::value: return "value";
        case ErrorType::identity: return "identity";
        case ErrorType::chart_type: return "chart_type";
        case ErrorType::axis: return "axis";
        case ErrorType::label: return "label";
        case ErrorType::trend: return "trend";
        case ErrorType::cutoff: return "cutoff";
        case ErrorType::missing_data_context: return "missing_data_context";
        case ErrorType::unnecessary_context: return "unnecessary_context";
        case ErrorType::number_name: return "number_name";
        case ErrorType::repetition: return "repetition";
        case ErrorType::nonsense: return "nonsense";
        case ErrorType::deceptive: return "deceptive";
    }
    return "?";
}

std::optional<ErrorType> error_type_from_string(const std::string& name) {
    for (int i = 0; i < kErrorTypeCount; ++i) {
        const auto t = static_cast<ErrorType>(i);
        if (name == error_type_name(t)) return t;
    }
    return std::nullopt;
}

bool is_factual_error(ErrorType t) {
    switch (t) {
        case ErrorType::value:
        case ErrorType::identity:
        case ErrorType::axis:
        case ErrorType::trend:
        case ErrorType::chart_type:
        case ErrorType::label:
        case ErrorType::deceptive:
        case ErrorType::nonsense:
            return true;
        default:
            return false;
    }
}

bool AnnotationRecord::value_correct() const {
    return std::none_of(errors.begin(), errors.end(), is_factual_error);
}

std::vector<std::string> tokenize(const std::string& text) {
    if (text.empty()) return {};
    std::string s = apply(starting_quote_rules(), text);
    s = apply(punctuation_rules(), s);
    s = " " + s + " ";
    s = apply(ending_quote_rules(), s);
    s = apply(contraction_rules(), s);

    std::vector<std::string> tokens;
    std::istringstream in(s);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

LengthSummary length_summary(const std::vector<std::string>& corpus) {
    if (corpus.empty()) throw EmptyCorpusError();
    std::vector<double> lengths;
    lengths.reserve(corpus.size());
    LengthSummary summary;
    summary.min = tokenize(corpus.front()).size();
    for (const auto& text : corpus) {
        const std::size_t n = tokenize(text).size();
        lengths.push_back(static_cast<double>(n));
        summary.min = std::min(summary.min, n);
        summary.max = std::max(summary.max, n);
        summary.histogram[n / 10] += 1;
    }
    summary.mean = kernels::mean(lengths);
    summary.median = kernels::quantile(lengths, 0.5);
    return summary;
}

std::optional<ErrorType> assign_primary_error(const std::vector<ErrorType>& errors) {
    std::optional<ErrorType> best;
    for (ErrorType t : errors) {
        if (!best || static_cast<int>(t) < static_cast<int>(*best)) best = t;
    }
    return best;
}

std::map<std::string, MethodCounts> summarize_annotations(const std::vector<AnnotationRecord>& records) {
    std::set<std::pair<std::string, std::string>> seen;
    std::map<std::string, MethodCounts> summary;
    for (const auto& r : records) {
        if (!seen.insert({r.figure_id, r.method_id}).second) {
            throw DuplicateRecordError("duplicate record for figure '" + r.figure_id +
                                       "' method '" + r.method_id + "'");
        }
        MethodCounts& c = summary[r.method_id];
        ++c.records;
        if (r.correct()) ++c.correct;
        if (r.value_correct()) ++c.value_correct;
        for (ErrorType t : r.errors) ++c.per_error[t];
    }
    return summary;
}

std::vector<AnnotationRecord> parse_annotations(const std::string& json_text) {
    nlohmann::json json;
    try {
        json = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("annotation JSON parse failed: ") + e.what());
    }
    if (!json.is_array()) throw ParseError("annotation file must be a JSON array");
    std::vector<AnnotationRecord> records;
    for (const auto& item : json) {
        AnnotationRecord r;
        r.figure_id = item.value("figure_id", "");
        r.method_id = item.value("method_id", "");
        if (r.figure_id.empty() || r.method_id.empty()) {
            throw ParseError("annotation records need figure_id and method_id");
        }
        if (item.contains("errors")) {
            for (const auto& name : item.at("errors")) {
                const auto t = error_type_from_string(name.get<std::string>());
                if (!t) throw ParseError("unknown error type: " + name.get<std::string>());
                r.errors.insert(*t);
            }
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::string summary_markdown(const std::map<std::string, MethodCounts>& summary) {
    std::string out = "| method | records | correct | value_correct |";
    for (int i = 0; i < kErrorTypeCount; ++i) {
        out += " ";
        out += error_type_name(static_cast<ErrorType>(i));
        out += " |";
    }
    out += "\n|";
    for (int i = 0; i < kErrorTypeCount + 4; ++i) out += " --- |";
    out += "\n";
    for (const auto& [method, c] : summary) {
        out += "| " + method + " | " + std::to_string(c.records) + " | " + std::to_string(c.correct) +
               " | " + std::to_string(c.value_correct) + " |";
        for (int i = 0; i < kErrorTypeCount; ++i) {
            const auto it = c.per_error.find(static_cast<ErrorType>(i));
            out += " " + std::to_string(it == c.per_error.end() ? 0 : it->second) + " |";
        }
        out += "\n";
    }
    return out;
}

}  // namespace chartalt::eval
