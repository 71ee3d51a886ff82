#pragma once

#include <string>

#include "chartalt/figure_facts.hpp"

namespace chartalt {

enum class ChartType {
    line,
    bar,
    scatter,
    radial_line,
    pie,
    strip,
    contour,
    heatmap,
    image,
    boxplot,
    blank,
    unknown,
};

// Short name as used in captions ("bar" renders as "bar chart" etc. in the
// template layer; this is the identifier form).
const char* chart_type_id(ChartType t);

struct TypeInference {
    ChartType type = ChartType::unknown;
    // Set when marks from more than one chart family are present; the
    // returned type is the highest-priority match.
    bool mixed_type = false;
};

// Total and deterministic: applies an ordered decision table over the mark
// inventory, falling back to `unknown` (never throws).
ChartType infer_chart_type(const SubplotFacts& subplot);
TypeInference infer_chart_type_detailed(const SubplotFacts& subplot);

}  // namespace chartalt
