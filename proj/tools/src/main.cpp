#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "halpha/cli.hpp"

namespace {

using halpha::cli::Command;
using halpha::cli::OutputFormat;
using halpha::cli::RunConfig;

void add_corpus_options(CLI::App& cmd, RunConfig& config) {
    cmd.add_option("--papers", config.papers_path, "papers file (one JSON record per line)")
        ->required();
    cmd.add_option("--events", [&config](const std::vector<std::string>& values) {
           config.events_path = values.back();
           return true;
       },
       "events file (CSV: paper_id,t,delta)");
}

void add_output_options(CLI::App& cmd, RunConfig& config, std::string& format,
                        std::string& indicators) {
    cmd.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json-lines"}))
        ->default_val("csv");
    cmd.add_option("--indicators", indicators,
                   "comma-separated indicator names (h,h_alpha,r_alpha,h_bar,p_top10,p_top10_rate)");
    cmd.add_option("--out", [&config](const std::vector<std::string>& values) {
           config.out = values.back();
           return true;
       },
       "output path (default: standard output)");
    cmd.add_option("--eval-year", [&config](const std::vector<std::string>& values) {
           config.eval_year = std::stoi(values.back());
           return true;
       },
       "evaluation year for age normalization (default: latest publication year)")
        ->check(CLI::Number);
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"co-authorship-sensitive citation indicators over snapshot-able corpora"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "csv";
    std::string indicators;
    std::string grid_text;

    CLI::App* compute = app.add_subcommand("compute", "indicator reports at one time point");
    add_corpus_options(*compute, config);
    compute->add_option("--at", [&config](const std::vector<std::string>& values) {
               config.at = std::stoll(values.back());
               return true;
           },
           "snapshot time (months)")
        ->required()
        ->check(CLI::Number);
    add_output_options(*compute, config, format, indicators);

    CLI::App* replay_cmd = app.add_subcommand("replay", "indicator time series over a grid");
    add_corpus_options(*replay_cmd, config);
    replay_cmd->add_option("--grid", grid_text, "comma-separated ascending times, e.g. 0,2,3")
        ->required();
    add_output_options(*replay_cmd, config, format, indicators);

    CLI::App* scenario = app.add_subcommand("scenario", "emit the built-in instability corpus");
    scenario->add_option("--out-dir", config.out_dir, "directory for papers.jsonl and events.csv")
        ->required();

    CLI::App* validate = app.add_subcommand("validate", "load and validate a corpus");
    add_corpus_options(*validate, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 1; // bad invocation is a validation failure
    }

    if (compute->parsed())
        config.command = Command::compute;
    else if (replay_cmd->parsed())
        config.command = Command::replay;
    else if (scenario->parsed())
        config.command = Command::scenario;
    else
        config.command = Command::validate;

    config.format = (format == "json-lines") ? OutputFormat::json_lines : OutputFormat::csv;

    if (!indicators.empty()) {
        for (const auto& name : split_csv(indicators))
            config.indicators.insert(name);
    }
    if (replay_cmd->parsed()) {
        for (const auto& part : split_csv(grid_text)) {
            try {
                std::size_t pos = 0;
                const long long t = std::stoll(part, &pos);
                if (pos != part.size())
                    throw std::invalid_argument(part);
                config.grid.push_back(t);
            } catch (const std::exception&) {
                std::cerr << "error: bad grid entry \"" << part << "\"\n";
                return 1;
            }
        }
    }

    return halpha::cli::run(config, std::cout, std::cerr);
}
