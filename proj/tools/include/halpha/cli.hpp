#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "halpha/corpus.hpp"
#include "halpha/indicators.hpp"
#include "halpha/timeline.hpp"

namespace halpha::cli {

enum class Command { compute, replay, scenario, validate };
enum class OutputFormat { csv, json_lines };

struct RunConfig {
    Command command = Command::compute;
    std::string papers_path;
    std::optional<std::string> events_path;
    std::optional<Time> at;        // compute
    std::vector<Time> grid;        // replay
    std::set<std::string> indicators; // empty = command default
    std::optional<int> eval_year;  // default: latest publication year
    OutputFormat format = OutputFormat::csv;
    std::optional<std::string> out; // default: standard output
    std::string out_dir;            // scenario
};

// Executes one command. Output is assembled fully before anything is
// written, so a failing run never leaves partial output. Diagnostics go
// to `diag` with file/line context.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O failure,
// 3 computation guard.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

// Deterministic tabular rendering. Reports must be sorted by author id.
// CSV columns are fixed (`author,h,h_alpha,r_alpha,h_bar,p_top10,
// p_top10_rate`); ratios use 4 decimal places with half-up rounding;
// unselected indicators render as empty fields (CSV) or null (JSON
// lines); lines end with a single line feed.
std::string format_report(const std::vector<IndicatorReport>& reports, OutputFormat format,
                          const std::set<std::string>& selection);

// Same contract for replay output, with a `t` column after `author`;
// rows ordered by (author id, grid time).
std::string format_series(const std::map<std::string, TimeSeries>& series, OutputFormat format,
                          const std::set<std::string>& selection);

} // namespace halpha::cli
