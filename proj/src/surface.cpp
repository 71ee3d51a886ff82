#include "chartalt/surface.hpp"

#include <fstream>

#include "chartalt/base64.hpp"
#include "chartalt/errors.hpp"
#include "chartalt/png_io.hpp"
#include "chartalt/text_format.hpp"

namespace chartalt {

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw WriteError("cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw WriteError("failed writing " + path.string());
}

}  // namespace

std::optional<SurfaceMethod> surface_method_from_string(const std::string& name) {
    if (name == "html") return SurfaceMethod::html;
    if (name == "markdown") return SurfaceMethod::markdown;
    if (name == "new_cell") return SurfaceMethod::new_cell;
    if (name == "img_file") return SurfaceMethod::img_file;
    if (name == "txt_file") return SurfaceMethod::txt_file;
    return std::nullopt;
}

const char* surface_method_name(SurfaceMethod m) {
    switch (m) {
        case SurfaceMethod::html: return "html";
        case SurfaceMethod::markdown: return "markdown";
        case SurfaceMethod::new_cell: return "new_cell";
        case SurfaceMethod::img_file: return "img_file";
        case SurfaceMethod::txt_file: return "txt_file";
    }
    return "?";
}

std::string figure_html(const FigureFacts& figure, const std::string& alt_text) {
    return "<img src=\"data:image/png;base64," + base64_encode(figure.image_bytes) + "\" alt=\"" +
           html_escape_attr(alt_text) + "\"/>";
}

std::string new_cell_source(const AltText& alt, std::size_t figure_number) {
    std::string source = "# alt text for figure " + std::to_string(figure_number) + "\n";
    std::string escaped;
    for (char c : alt.text) {
        if (c == '\\' || c == '"') escaped += '\\';
        if (c == '\n') {
            escaped += "\\n";
            continue;
        }
        escaped += c;
    }
    source += "let figure_" + std::to_string(figure_number) + "_alt = \"" + escaped + "\"";
    return source;
}

SurfaceResult add_alt_text(const FigureFacts& figure, const AltText& alt,
                           const std::set<SurfaceMethod>& methods,
                           const std::optional<std::filesystem::path>& output_dir,
                           DisplayContext* context, std::size_t figure_number) {
    SurfaceResult result;
    if (alt.text.empty()) {
        result.errors.push_back("empty alt text");
        return result;
    }
    if (figure_number == 0) figure_number = std::max<std::size_t>(1, host::figures_created());

    if (methods.count(SurfaceMethod::html)) {
        result.html = figure_html(figure, alt.text);
        if (context) context->display_html(*result.html);
    }
    if (methods.count(SurfaceMethod::markdown)) {
        std::string md = alt.text;
        if (alt.table_markdown) md += "\n\n" + *alt.table_markdown;
        result.markdown = md;
        if (context) {
            context->display_markdown(md);
        } else {
            result.errors.push_back("markdown: not in a notebook context");
        }
    }
    if (methods.count(SurfaceMethod::new_cell)) {
        result.new_cell_source = new_cell_source(alt, figure_number);
        if (context) {
            context->schedule_new_cell(*result.new_cell_source);
        } else {
            result.errors.push_back("new_cell: not in a notebook context");
        }
    }

    const bool wants_files =
        methods.count(SurfaceMethod::img_file) || methods.count(SurfaceMethod::txt_file);
    if (wants_files) {
        const std::filesystem::path dir = output_dir.value_or(std::filesystem::current_path());
        const std::string stem = "figure_" + std::to_string(figure_number);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (methods.count(SurfaceMethod::img_file)) {
            try {
                const auto png = png::with_text(figure.image_bytes, "alt", alt.text);
                const auto path = dir / (stem + ".png");
                write_file(path, std::string(png.begin(), png.end()));
                result.written_files.push_back(path);
            } catch (const Error& e) {
                result.errors.push_back(std::string("img_file: ") + e.what());
            }
        }
        if (methods.count(SurfaceMethod::txt_file)) {
            try {
                const auto path = dir / (stem + ".txt");
                write_file(path, alt.text);
                result.written_files.push_back(path);
            } catch (const Error& e) {
                result.errors.push_back(std::string("txt_file: ") + e.what());
            }
        }
    }
    return result;
}

SurfaceResult show_with_alt(const DescriptionOptions& options,
                            const std::set<SurfaceMethod>& methods,
                            const std::optional<std::filesystem::path>& output_dir,
                            DisplayContext* context) {
    const FigureFacts facts = snapshot_current_figure();
    const AltText alt = generate_alt_text(facts, options);
    return add_alt_text(facts, alt, methods, output_dir, context);
}

SurfaceResult show_with_api_alt(const VlmOptions& options, Augmentation augmentation,
                                const ApiConfig& config, const std::set<SurfaceMethod>& methods,
                                VlmBackend& backend,
                                const std::optional<std::filesystem::path>& output_dir,
                                DisplayContext* context) {
    const FigureFacts facts = snapshot_current_figure();
    AltText alt;
    std::string failure;
    try {
        alt = generate_api_alt_text(facts, options, augmentation, config, backend);
    } catch (const ApiError& e) {
        failure = e.what();
    }
    SurfaceResult result;
    if (!failure.empty()) {
        DescriptionOptions h = options.heuristic_options;
        h.desc_level = std::min(options.desc_level, 3);
        alt = generate_alt_text(facts, h);
        result = add_alt_text(facts, alt, methods, output_dir, context);
        result.used_fallback = true;
        result.warnings.push_back("vlm request failed (" + failure + "); surfaced heuristic alt text");
        return result;
    }
    return add_alt_text(facts, alt, methods, output_dir, context);
}

}  // namespace chartalt
