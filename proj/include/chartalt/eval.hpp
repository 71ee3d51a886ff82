#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chartalt::eval {

// The 13 annotation error types, ordered by priority (value highest).
enum class ErrorType {
    value,
    identity,
    chart_type,
    axis,
    label,
    trend,
    cutoff,
    missing_data_context,
    unnecessary_context,
    number_name,
    repetition,
    nonsense,
    deceptive,
};

constexpr int kErrorTypeCount = 13;

const char* error_type_name(ErrorType t);
std::optional<ErrorType> error_type_from_string(const std::string& name);

// Factual errors; a record free of these is "value-correct".
bool is_factual_error(ErrorType t);

struct AnnotationRecord {
    std::string figure_id;
    std::string method_id;  // e.g. "heuristic", "turbo+heuristic"
    std::set<ErrorType> errors;

    bool correct() const { return errors.empty(); }
    bool value_correct() const;
};

// Treebank-style word tokenization: punctuation split off, contractions
// split, deterministic.
std::vector<std::string> tokenize(const std::string& text);

struct LengthSummary {
    double mean = 0.0;
    double median = 0.0;
    std::size_t min = 0;
    std::size_t max = 0;
    // Fixed-width bins of 10 tokens: histogram[k] counts lengths in
    // [10k, 10k+10).
    std::map<std::size_t, std::size_t> histogram;
};

// Token-length statistics over a corpus; throws EmptyCorpusError.
LengthSummary length_summary(const std::vector<std::string>& corpus);

// Highest-priority member of the set; nullopt for no errors.
std::optional<ErrorType> assign_primary_error(const std::vector<ErrorType>& errors);

struct MethodCounts {
    int records = 0;
    int correct = 0;
    int value_correct = 0;
    std::map<ErrorType, int> per_error;
};

// Per-method tallies; throws DuplicateRecordError on a repeated
// (figure_id, method_id) pair.
std::map<std::string, MethodCounts> summarize_annotations(const std::vector<AnnotationRecord>& records);

// JSON annotation file: an array of {figure_id, method_id, errors:[names]}.
std::vector<AnnotationRecord> parse_annotations(const std::string& json_text);

// Counts table as a markdown pipe table (one row per method).
std::string summary_markdown(const std::map<std::string, MethodCounts>& summary);

}  // namespace chartalt::eval
