#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chartalt/surface.hpp"
#include "chartalt/vlm.hpp"

namespace chartalt {

// A parsed notebook file (nbformat v4 JSON). Object keys are normalized
// (sorted) on write; unknown keys and values round-trip verbatim.
struct NotebookDocument {
    nlohmann::json root;

    static NotebookDocument from_string(const std::string& text);  // throws ParseError
    std::string to_string() const;

    nlohmann::json& cells() { return root["cells"]; }
    const nlohmann::json& cells() const { return root.at("cells"); }
};

NotebookDocument parse_notebook(const std::filesystem::path& path);
void write_notebook(const NotebookDocument& doc, const std::filesystem::path& path);

// Joins a cell source that may be a string or a list of lines.
std::string cell_source_text(const nlohmann::json& cell);

// Executes code cells written in the plotting DSL: one command per line,
// `#` comments, quoted strings, key=value arguments with comma-separated
// lists. Figures are built through the host facade; `show` hands the
// current figure to the harness and closes it.
class Interpreter {
public:
    using ShowHandler = std::function<void(const host::Figure&)>;

    // Starts from a fresh figure registry; figure state then carries across
    // execute() calls for the interpreter's lifetime.
    explicit Interpreter(ShowHandler on_show = {});
    ~Interpreter();

    void set_show_handler(ShowHandler on_show) { on_show_ = std::move(on_show); }

    // Throws CellExecutionError with the offending line number.
    void execute(const std::string& source);

private:
    void execute_line(const std::string& line, int line_number);
    ShowHandler on_show_;
    int strip_bands_ = 0;
};

struct CliOptions {
    std::filesystem::path input_path;
    std::filesystem::path output_path;
    int desc_level = 2;  // -l; 4 requires use_api
    std::set<SurfaceMethod> methods = {SurfaceMethod::html};
    bool use_api = false;
    ApiConfig api;
    Augmentation augmentation = Augmentation::heuristic_and_table;
    bool include_table = false;
    int max_table_rows = 20;
    int max_table_cols = 8;
    bool strict = false;
    bool trust = false;
    std::optional<std::filesystem::path> out_dir;  // defaults next to the output notebook
};

struct CellRecord {
    int cell_index = 0;
    int figures_found = 0;
    std::vector<std::string> methods_applied;
    std::vector<std::string> warnings;
    std::vector<std::string> errors;
};

struct RunReport {
    std::vector<CellRecord> cells;
    struct Totals {
        int cells_executed = 0;
        int figures_found = 0;
        int files_written = 0;
        int errors = 0;
    } totals;
    bool aborted = false;

    std::string to_string() const;
};

// Executes the notebook in a fresh interpreter, attaches generated alt text
// to every shown figure per the options, and writes the annotated notebook
// to options.output_path. Re-running on its own output is byte-stable.
// Throws ParseError for malformed input (no output written). The optional
// backend overrides the HTTPS transport for --use-api runs (tests inject a
// stub).
RunReport alttextify(const CliOptions& options, VlmBackend* backend = nullptr);

}  // namespace chartalt
