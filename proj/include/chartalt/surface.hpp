#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chartalt/figure_facts.hpp"
#include "chartalt/heuristic.hpp"
#include "chartalt/vlm.hpp"

namespace chartalt {

enum class SurfaceMethod { html, markdown, new_cell, img_file, txt_file };

std::optional<SurfaceMethod> surface_method_from_string(const std::string& name);
const char* surface_method_name(SurfaceMethod m);

struct SurfaceResult {
    std::optional<std::string> html;             // inline image element with alt attribute
    std::optional<std::string> markdown;         // text (and table) for the cell output
    std::optional<std::string> new_cell_source;  // commented string assignment
    std::vector<std::filesystem::path> written_files;
    std::vector<std::string> errors;    // per-method failures; other methods still run
    std::vector<std::string> warnings;  // e.g. the VLM fallback marker
    bool used_fallback = false;         // VLM transport failed, heuristic text used
};

// Where notebook-only methods deliver their output. Absent context means
// markdown/new_cell record an EnvironmentError in the result.
class DisplayContext {
public:
    virtual ~DisplayContext() = default;
    virtual void display_html(const std::string& html) = 0;
    virtual void display_markdown(const std::string& markdown) = 0;
    virtual void schedule_new_cell(const std::string& source) = 0;
};

// Builds the <img> element that replaces the figure's default display: same
// image bytes, alt attribute carrying the escaped text.
std::string figure_html(const FigureFacts& figure, const std::string& alt_text);

// Source of the generated code cell: the description as a comment block plus
// a string binding, so the notebook still executes cleanly.
std::string new_cell_source(const AltText& alt, std::size_t figure_number);

// Surfaces the description via each requested method. File methods write
// figure_<k>.png / figure_<k>.txt under output_dir (PNG alt lives in a tEXt
// chunk). Per-method errors are recorded, never thrown.
SurfaceResult add_alt_text(const FigureFacts& figure, const AltText& alt,
                           const std::set<SurfaceMethod>& methods,
                           const std::optional<std::filesystem::path>& output_dir = std::nullopt,
                           DisplayContext* context = nullptr, std::size_t figure_number = 0);

// snapshot + generate + surface for the current host figure.
SurfaceResult show_with_alt(const DescriptionOptions& options,
                            const std::set<SurfaceMethod>& methods,
                            const std::optional<std::filesystem::path>& output_dir = std::nullopt,
                            DisplayContext* context = nullptr);

// Same via the VLM backend; transport failures fall back to heuristic text
// with a visible warning in the result.
SurfaceResult show_with_api_alt(const VlmOptions& options, Augmentation augmentation,
                                const ApiConfig& config, const std::set<SurfaceMethod>& methods,
                                VlmBackend& backend,
                                const std::optional<std::filesystem::path>& output_dir = std::nullopt,
                                DisplayContext* context = nullptr);

}  // namespace chartalt
