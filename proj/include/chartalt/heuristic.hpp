#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chartalt/chart_type.hpp"
#include "chartalt/figure_facts.hpp"
#include "chartalt/stats.hpp"

namespace chartalt {

enum class TrendKind { pivot, overall_change, direction_changes };

struct DescriptionOptions {
    int desc_level = 2;  // 1..3 for heuristic generation
    std::optional<std::vector<StatKind>> stats;   // override of default_statistics
    std::optional<std::vector<TrendKind>> trends; // override of the default trend sentences
    bool include_table = false;
    int max_table_rows = 20;
    int max_table_cols = 8;
    bool include_color_encodings = true;
};

struct SubplotSegments {
    std::string l1, l2, l3;  // slots above the requested level stay empty
};

struct AltText {
    std::string text;  // concatenation of the segments in subplot order
    int level = 1;
    std::vector<SubplotSegments> segments;
    std::optional<std::string> table_markdown;
};

// Renders the full description for a snapshotted figure: L1 always, L2 when
// desc_level >= 2, L3 when desc_level == 3 (except chart types with no trend
// semantics). Missing titles and labels never fail; their slots are omitted.
AltText generate_alt_text(const FigureFacts& figure, const DescriptionOptions& options);

// Raw (uncapitalized) per-level renderings; generate_alt_text applies the
// sentence-casing pass over the assembled text.
std::string render_l1(const SubplotFacts& subplot, ChartType chart_type,
                      const DescriptionOptions& options);
std::string render_l2(const SubplotFacts& subplot, ChartType chart_type,
                      const DescriptionOptions& options);
std::string render_l3(const SubplotFacts& subplot, ChartType chart_type,
                      const DescriptionOptions& options);

// Pipe-delimited markdown table of the subplot's data, head-truncated to the
// caps with a trailing ellipsis row/column. Throws NoTabularDataError when
// the subplot has nothing tabular.
std::string render_data_table(const SubplotFacts& subplot, int max_rows, int max_cols);

// Label for a series: explicit label, else the chart-type fallback
// ("the data", "strip N", "boxplot N").
std::string series_display_label(const SeriesFacts& series, ChartType chart_type,
                                 std::size_t index_in_type);

}  // namespace chartalt
