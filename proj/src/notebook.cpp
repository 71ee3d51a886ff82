#include "chartalt/notebook.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "chartalt/base64.hpp"
#include "chartalt/errors.hpp"
#include "chartalt/text_format.hpp"

namespace chartalt {

namespace {

// ---- DSL tokenizing -------------------------------------------------------

std::vector<std::string> tokenize_line(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    bool in_quotes = false;
    bool any = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '\\' && i + 1 < line.size()) {
                const char n = line[i + 1];
                current += n == 'n' ? '\n' : n;
                ++i;
                continue;
            }
            if (c == '"') {
                in_quotes = false;
                continue;
            }
            current += c;
            continue;
        }
        if (c == '"') {
            in_quotes = true;
            any = true;
            continue;
        }
        if (c == '#') break;  // comment to end of line
        if (c == ' ' || c == '\t') {
            if (!current.empty() || any) tokens.push_back(current);
            current.clear();
            any = false;
            continue;
        }
        current += c;
    }
    if (in_quotes) throw CellExecutionError("unterminated string");
    if (!current.empty() || any) tokens.push_back(current);
    return tokens;
}

struct Args {
    std::vector<std::string> positional;
    std::vector<std::pair<std::string, std::string>> keyed;
    std::set<std::string> flags;

    std::optional<std::string> get(const std::string& key) const {
        for (const auto& [k, v] : keyed) {
            if (k == key) return v;
        }
        return std::nullopt;
    }
};

Args parse_args(const std::vector<std::string>& tokens) {
    Args args;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        const auto eq = t.find('=');
        if (eq != std::string::npos && eq > 0) {
            args.keyed.emplace_back(t.substr(0, eq), t.substr(eq + 1));
        } else {
            args.positional.push_back(t);
            args.flags.insert(t);
        }
    }
    return args;
}

double parse_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw CellExecutionError("not a number: '" + s + "'");
    }
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_double(item));
    }
    return out;
}

std::vector<std::string> parse_string_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

// Semicolon-separated groups of comma-separated numbers.
std::vector<std::vector<double>> parse_grid(const std::string& s) {
    std::vector<std::vector<double>> out;
    std::string group;
    std::stringstream ss(s);
    while (std::getline(ss, group, ';')) out.push_back(parse_list(group));
    return out;
}

}  // namespace

// ---- NotebookDocument -----------------------------------------------------

NotebookDocument NotebookDocument::from_string(const std::string& text) {
    NotebookDocument doc;
    try {
        doc.root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("notebook JSON parse failed at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
    if (!doc.root.is_object() || !doc.root.contains("cells") || !doc.root["cells"].is_array()) {
        throw ParseError("notebook JSON has no cells array");
    }
    return doc;
}

std::string NotebookDocument::to_string() const { return root.dump(1) + "\n"; }

NotebookDocument parse_notebook(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open notebook: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return NotebookDocument::from_string(buf.str());
}

void write_notebook(const NotebookDocument& doc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw WriteError("cannot open " + path.string() + " for writing");
    const std::string text = doc.to_string();
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw WriteError("failed writing " + path.string());
}

std::string cell_source_text(const nlohmann::json& cell) {
    if (!cell.contains("source")) return {};
    const auto& src = cell.at("source");
    if (src.is_string()) return src.get<std::string>();
    std::string out;
    if (src.is_array()) {
        for (const auto& line : src) {
            if (line.is_string()) out += line.get<std::string>();
        }
    }
    return out;
}

// ---- Interpreter ----------------------------------------------------------

Interpreter::Interpreter(ShowHandler on_show) : on_show_(std::move(on_show)) {
    host::close_all();
}

Interpreter::~Interpreter() { host::close_all(); }

void Interpreter::execute(const std::string& source) {
    std::stringstream ss(source);
    std::string line;
    int line_number = 0;
    while (std::getline(ss, line)) {
        ++line_number;
        try {
            execute_line(line, line_number);
        } catch (const CellExecutionError&) {
            throw;
        } catch (const Error& e) {
            throw CellExecutionError("line " + std::to_string(line_number) + ": " + e.what());
        }
    }
}

void Interpreter::execute_line(const std::string& line, int line_number) {
    std::vector<std::string> tokens;
    try {
        tokens = tokenize_line(line);
    } catch (const CellExecutionError& e) {
        throw CellExecutionError("line " + std::to_string(line_number) + ": " + e.what());
    }
    if (tokens.empty()) return;
    const std::string& cmd = tokens[0];
    const Args args = parse_args(tokens);

    auto fail = [&](const std::string& msg) -> void {
        throw CellExecutionError("line " + std::to_string(line_number) + ": " + msg);
    };
    auto need = [&](const char* key) -> std::string {
        const auto v = args.get(key);
        if (!v) fail(std::string(cmd) + " needs " + key + "=");
        return *v;
    };

    if (cmd == "figure") {
        const int rows = args.get("rows") ? static_cast<int>(parse_double(*args.get("rows"))) : 1;
        const int cols = args.get("cols") ? static_cast<int>(parse_double(*args.get("cols"))) : 1;
        host::Figure& f = host::figure(rows, cols);
        if (args.get("width")) f.width_inches = parse_double(*args.get("width"));
        if (args.get("height")) f.height_inches = parse_double(*args.get("height"));
        if (args.get("dpi")) f.dpi = parse_double(*args.get("dpi"));
        strip_bands_ = 0;
        return;
    }
    if (cmd == "subplot") {
        if (args.positional.empty()) fail("subplot needs an index");
        host::select_subplot(static_cast<int>(parse_double(args.positional[0])) - 1);
        return;
    }
    if (cmd == "suptitle") {
        host::Figure* f = host::current_figure();
        if (!f) fail("no current figure");
        f->suptitle = args.positional.empty() ? "" : args.positional[0];
        return;
    }
    if (cmd == "title") {
        host::gca().title = args.positional.empty() ? "" : args.positional[0];
        return;
    }
    if (cmd == "xlabel") {
        host::gca().x.label = args.positional.empty() ? "" : args.positional[0];
        return;
    }
    if (cmd == "ylabel") {
        host::gca().y.label = args.positional.empty() ? "" : args.positional[0];
        return;
    }
    if (cmd == "xlim" || cmd == "ylim") {
        if (args.positional.size() < 2) fail(cmd + " needs min and max");
        host::Axis& axis = cmd == "xlim" ? host::gca().x : host::gca().y;
        axis.min = parse_double(args.positional[0]);
        axis.max = parse_double(args.positional[1]);
        return;
    }
    if (cmd == "xscale" || cmd == "yscale") {
        if (args.positional.empty()) fail(cmd + " needs log|linear");
        host::Axis& axis = cmd == "xscale" ? host::gca().x : host::gca().y;
        axis.log_scale = args.positional[0] == "log";
        return;
    }
    if (cmd == "xticks" || cmd == "yticks") {
        const auto positions = parse_list(need("positions"));
        const auto labels = parse_string_list(args.get("labels").value_or(""));
        if (cmd == "xticks") {
            host::gca().set_xticks(positions, labels);
        } else {
            host::gca().set_yticks(positions, labels);
        }
        return;
    }
    if (cmd == "line" || cmd == "scatter") {
        const auto xs = parse_list(need("x"));
        const auto ys = parse_list(need("y"));
        if (xs.size() != ys.size()) fail("x and y lengths differ");
        auto& ax = host::gca();
        if (cmd == "line") {
            auto& m = ax.plot(xs, ys, args.get("label").value_or(""));
            if (args.get("color")) m.color = host::parse_color(*args.get("color"));
        } else {
            auto& m = ax.scatter(xs, ys, args.get("label").value_or(""));
            if (args.get("color")) m.color = host::parse_color(*args.get("color"));
        }
        return;
    }
    if (cmd == "bar") {
        const auto cats = parse_string_list(need("cats"));
        const auto ys = parse_list(need("y"));
        if (cats.size() != ys.size()) fail("cats and y lengths differ");
        auto& m = host::gca().bar(cats, ys, args.flags.count("horizontal") > 0,
                                  args.get("label").value_or(""));
        if (args.get("color")) m.color = host::parse_color(*args.get("color"));
        return;
    }
    if (cmd == "pie") {
        const auto labels = parse_string_list(need("labels"));
        const auto ys = parse_list(need("y"));
        if (labels.size() != ys.size()) fail("labels and y lengths differ");
        host::gca().pie(ys, labels);
        return;
    }
    if (cmd == "strip") {
        const auto xs = parse_list(need("x"));
        auto& ax = host::gca();
        auto& m = ax.scatter(xs, std::vector<double>(xs.size(), static_cast<double>(strip_bands_)),
                             args.get("label").value_or(""));
        if (args.get("color")) m.color = host::parse_color(*args.get("color"));
        ++strip_bands_;
        return;
    }
    if (cmd == "box") {
        host::gca().boxplot(parse_list(need("y")));
        return;
    }
    if (cmd == "heatmap") {
        // z groups are x-major: z=col0;col1;... with one value per y cell.
        host::gca().pcolormesh(parse_list(need("xedges")), parse_list(need("yedges")),
                               parse_grid(need("z")));
        return;
    }
    if (cmd == "image") {
        host::gca().imshow(parse_grid(need("z")));
        return;
    }
    if (cmd == "contour") {
        const double level = parse_double(need("level"));
        std::vector<std::pair<double, double>> vertices;
        for (const std::string& pt : parse_string_list(need("path"))) {
            const auto colon = pt.find(':');
            if (colon == std::string::npos) fail("contour path points are x:y");
            vertices.emplace_back(parse_double(pt.substr(0, colon)),
                                  parse_double(pt.substr(colon + 1)));
        }
        host::gca().contour_path(level, std::move(vertices));
        return;
    }
    if (cmd == "annotate") {
        host::gca().annotate(need("text"), parse_double(args.get("x").value_or("0")),
                             parse_double(args.get("y").value_or("0")));
        return;
    }
    if (cmd == "hline") {
        host::gca().axhline(parse_double(need("y")));
        return;
    }
    if (cmd == "vline") {
        host::gca().axvline(parse_double(need("x")));
        return;
    }
    if (cmd == "colorbar") {
        host::Colorbar cb;
        if (args.get("label")) cb.label = *args.get("label");
        if (args.get("min")) cb.min = parse_double(*args.get("min"));
        if (args.get("max")) cb.max = parse_double(*args.get("max"));
        host::gca().colorbar = cb;
        return;
    }
    if (cmd == "polar") {
        host::gca().polar = true;
        return;
    }
    if (cmd == "show") {
        host::Figure* f = host::current_figure();
        if (!f) fail("no current figure to show");
        if (on_show_) on_show_(*f);
        host::close_all();
        strip_bands_ = 0;
        return;
    }
    if (cmd == "let") {
        // String binding kept for generated cells; nothing to evaluate.
        return;
    }
    fail("unknown command '" + cmd + "'");
}

// ---- alttextify -----------------------------------------------------------

namespace {

constexpr const char* kGeneratedCellMarker = "generated_alt";

bool is_generated_cell(const nlohmann::json& cell) {
    return cell.contains("metadata") && cell["metadata"].contains("chartalt") &&
           cell["metadata"]["chartalt"].value(kGeneratedCellMarker, false);
}

// Output collector for one cell.
class CellSink : public DisplayContext {
public:
    void display_html(const std::string& html) override {
        nlohmann::json out = {{"output_type", "display_data"},
                              {"data", {{"text/html", html}}},
                              {"metadata", {{"chartalt", true}}}};
        outputs.push_back(std::move(out));
    }
    void display_markdown(const std::string& markdown) override {
        nlohmann::json out = {{"output_type", "display_data"},
                              {"data", {{"text/markdown", markdown}}},
                              {"metadata", {{"chartalt", true}}}};
        outputs.push_back(std::move(out));
    }
    void display_png(const std::vector<std::uint8_t>& png, std::size_t figure_number) {
        nlohmann::json out = {{"output_type", "display_data"},
                              {"data",
                               {{"image/png", base64_encode(png)},
                                {"text/plain", "<figure " + std::to_string(figure_number) + ">"}}},
                              {"metadata", nlohmann::json::object()}};
        outputs.push_back(std::move(out));
    }
    void schedule_new_cell(const std::string& source) override { scheduled.push_back(source); }

    nlohmann::json outputs = nlohmann::json::array();
    std::vector<std::string> scheduled;
};

nlohmann::json make_generated_cell(const std::string& source) {
    return {{"cell_type", "code"},
            {"execution_count", nullptr},
            {"metadata", {{"chartalt", {{kGeneratedCellMarker, true}}}}},
            {"outputs", nlohmann::json::array()},
            {"source", source}};
}

}  // namespace

std::string RunReport::to_string() const {
    std::ostringstream out;
    for (const auto& c : cells) {
        out << "cell " << c.cell_index << ": figures=" << c.figures_found;
        if (!c.methods_applied.empty()) {
            out << " methods=";
            for (std::size_t i = 0; i < c.methods_applied.size(); ++i) {
                if (i) out << ",";
                out << c.methods_applied[i];
            }
        }
        for (const auto& w : c.warnings) out << " warning: " << w;
        for (const auto& e : c.errors) out << " error: " << e;
        out << "\n";
    }
    out << "total: cells_executed=" << totals.cells_executed
        << " figures_found=" << totals.figures_found << " files_written=" << totals.files_written
        << " errors=" << totals.errors << (aborted ? " (aborted)" : "") << "\n";
    return out.str();
}

RunReport alttextify(const CliOptions& options, VlmBackend* backend) {
    if (options.desc_level < 1 || options.desc_level > 4) {
        throw Error("desc_level must be in 1..4");
    }
    if (options.desc_level == 4 && !options.use_api) {
        throw Error("desc_level 4 requires the API generator (--use-api)");
    }

    NotebookDocument doc = parse_notebook(options.input_path);

    if (!options.trust) {
        std::cerr << "warning: " << options.input_path.string()
                  << " will be executed; pass --trust to silence this warning\n";
    }

    // Strip cells generated by a previous run so re-running replaces them.
    nlohmann::json cleaned = nlohmann::json::array();
    for (auto& cell : doc.cells()) {
        if (!is_generated_cell(cell)) cleaned.push_back(cell);
    }
    doc.root["cells"] = std::move(cleaned);

    const std::filesystem::path out_dir =
        options.out_dir.value_or(options.output_path.parent_path().empty()
                                     ? std::filesystem::path(".")
                                     : options.output_path.parent_path());

    RunReport report;
    std::size_t figure_counter = 0;
    HttpBackend default_backend;
    VlmBackend& vlm = backend ? *backend : static_cast<VlmBackend&>(default_backend);

    DescriptionOptions heuristic_options;
    heuristic_options.desc_level = std::min(options.desc_level, 3);
    heuristic_options.include_table = options.include_table;
    heuristic_options.max_table_rows = options.max_table_rows;
    heuristic_options.max_table_cols = options.max_table_cols;

    struct PendingInsertion {
        std::size_t after_cell;
        std::string source;
    };
    std::vector<PendingInsertion> insertions;

    Interpreter interpreter;
    auto& cells = doc.cells();
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        auto& cell = cells[ci];
        if (!cell.is_object() || cell.value("cell_type", "") != "code") continue;

        CellRecord record;
        record.cell_index = static_cast<int>(ci);
        CellSink sink;

        auto on_show = [&](const host::Figure& fig) {
            const FigureFacts facts = snapshot_figure(fig);
            ++figure_counter;
            ++record.figures_found;

            AltText alt;
            if (options.use_api) {
                VlmOptions vopts;
                vopts.desc_level = options.desc_level;
                vopts.heuristic_options = heuristic_options;
                Augmentation aug = options.augmentation;
                try {
                    alt = generate_api_alt_text(facts, vopts, aug, options.api, vlm);
                } catch (const MissingAugmentationError&) {
                    alt = generate_api_alt_text(facts, vopts, Augmentation::heuristic, options.api, vlm);
                } catch (const ApiError& e) {
                    record.warnings.push_back("figure " + std::to_string(figure_counter) +
                                              ": api failed (" + std::string(e.what()) +
                                              "); heuristic fallback");
                    alt = generate_alt_text(facts, heuristic_options);
                }
            } else {
                alt = generate_alt_text(facts, heuristic_options);
            }

            // The html method replaces the default figure display.
            if (!options.methods.count(SurfaceMethod::html)) {
                sink.display_png(facts.image_bytes, figure_counter);
            }
            SurfaceResult res = add_alt_text(facts, alt, options.methods, out_dir, &sink, figure_counter);
            for (const auto& e : res.errors) record.errors.push_back(e);
            for (const auto& w : res.warnings) record.warnings.push_back(w);
            report.totals.files_written += static_cast<int>(res.written_files.size());
            for (SurfaceMethod m : options.methods) {
                const std::string name = surface_method_name(m);
                if (std::find(record.methods_applied.begin(), record.methods_applied.end(), name) ==
                    record.methods_applied.end()) {
                    record.methods_applied.push_back(name);
                }
            }
        };

        interpreter.set_show_handler(on_show);
        bool failed = false;
        try {
            interpreter.execute(cell_source_text(cell));
        } catch (const CellExecutionError& e) {
            failed = true;
            record.errors.push_back(e.what());
        }

        if (!failed && !sink.outputs.empty()) {
            cell["outputs"] = sink.outputs;
        }
        for (const auto& src : sink.scheduled) insertions.push_back({ci, src});

        ++report.totals.cells_executed;
        report.totals.figures_found += record.figures_found;
        report.totals.errors += static_cast<int>(record.errors.size());
        report.cells.push_back(std::move(record));

        if (failed && options.strict) {
            report.aborted = true;
            return report;  // no output written in strict failure
        }
    }

    // Insert scheduled cells back to front so indices stay valid.
    for (auto it = insertions.rbegin(); it != insertions.rend(); ++it) {
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(it->after_cell) + 1,
                     make_generated_cell(it->source));
    }

    if (!doc.root.contains("metadata") || !doc.root["metadata"].is_object()) {
        doc.root["metadata"] = nlohmann::json::object();
    }
    doc.root["metadata"]["chartalt"] = {{"annotated", true}};

    write_notebook(doc, options.output_path);
    return report;
}

}  // namespace chartalt
