#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "chartalt/errors.hpp"
#include "chartalt/eval.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Evaluation utilities for annotated alt-text corpora"};
    app.require_subcommand(1);

    std::string annotations_path;
    CLI::App* summarize = app.add_subcommand("summarize", "tally an annotation file");
    summarize->add_option("annotations", annotations_path, "JSON array of annotation records")
        ->required();

    std::string corpus_path;
    CLI::App* lengths = app.add_subcommand("lengths", "token-length statistics for a caption file "
                                                      "(one caption per line)");
    lengths->add_option("corpus", corpus_path, "text file, one caption per line")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (summarize->parsed()) {
            std::ifstream in(annotations_path, std::ios::binary);
            if (!in) {
                std::cerr << "cannot open " << annotations_path << "\n";
                return 1;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            const auto records = chartalt::eval::parse_annotations(buf.str());
            const auto summary = chartalt::eval::summarize_annotations(records);
            std::cout << chartalt::eval::summary_markdown(summary);
            return 0;
        }
        if (lengths->parsed()) {
            std::ifstream in(corpus_path);
            if (!in) {
                std::cerr << "cannot open " << corpus_path << "\n";
                return 1;
            }
            std::vector<std::string> corpus;
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty()) corpus.push_back(line);
            }
            const auto s = chartalt::eval::length_summary(corpus);
            std::cout << "captions: " << corpus.size() << "\nmean: " << s.mean
                      << "\nmedian: " << s.median << "\nmin: " << s.min << "\nmax: " << s.max << "\n";
            return 0;
        }
    } catch (const chartalt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
