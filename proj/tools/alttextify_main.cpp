#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "chartalt/errors.hpp"
#include "chartalt/notebook.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Execute a notebook and embed generated alt text for every figure"};

    std::string input, output;
    int desc_level = 2;
    std::vector<std::string> methods = {"html"};
    std::string api_key, model = "gpt-4-turbo", endpoint = "https://api.openai.com/v1/chat/completions";
    bool use_api = false, include_table = false, strict = false, trust = false;
    int max_rows = 20, max_cols = 8;
    std::string out_dir;

    app.add_option("input", input, "input notebook (.ipynb)")->required();
    app.add_option("output", output, "annotated notebook to write")->required();
    app.add_option("-l,--desc-level", desc_level, "semantic level 1-4 (4 requires --use-api)")
        ->check(CLI::Range(1, 4));
    app.add_option("-s,--surface", methods,
                   "surface methods: html markdown new_cell img_file txt_file")
        ->expected(-1);
    app.add_flag("--use-api", use_api, "generate descriptions with the VLM API");
    app.add_option("--api-key", api_key, "API key (or set ALT_API_KEY)");
    app.add_option("--model", model, "model name for API generation");
    app.add_option("--endpoint", endpoint, "chat-completions endpoint URL");
    app.add_flag("--include-table", include_table, "append a markdown data table");
    app.add_option("--max-rows", max_rows, "table row cap")->check(CLI::PositiveNumber);
    app.add_option("--max-cols", max_cols, "table column cap")->check(CLI::PositiveNumber);
    app.add_flag("--strict", strict, "abort on the first cell execution error");
    app.add_flag("--trust", trust, "suppress the arbitrary-code-execution warning");
    app.add_option("--out-dir", out_dir, "directory for img_file/txt_file exports");

    CLI11_PARSE(app, argc, argv);

    chartalt::CliOptions options;
    options.input_path = input;
    options.output_path = output;
    options.desc_level = desc_level;
    options.methods.clear();
    for (const auto& name : methods) {
        const auto m = chartalt::surface_method_from_string(name);
        if (!m) {
            std::cerr << "unknown surface method: " << name << "\n";
            return 1;
        }
        options.methods.insert(*m);
    }
    options.use_api = use_api;
    options.api.api_key = api_key;
    options.api.model_name = model;
    options.api.endpoint_url = endpoint;
    options.include_table = include_table;
    options.max_table_rows = max_rows;
    options.max_table_cols = max_cols;
    options.strict = strict;
    options.trust = trust;
    if (!out_dir.empty()) options.out_dir = out_dir;

    try {
        const chartalt::RunReport report = chartalt::alttextify(options);
        std::cout << report.to_string();
        if (report.aborted) return 2;
        return 0;
    } catch (const chartalt::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const chartalt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
