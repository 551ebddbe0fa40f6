#include "halpha/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace halpha::cli {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string escaped = "\"";
    for (char c : field) {
        if (c == '"')
            escaped += '"';
        escaped += c;
    }
    escaped += '"';
    return escaped;
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

bool is_ratio_indicator(const std::string& name) {
    return name == "r_alpha" || name == "p_top10_rate";
}

// One output cell: integer indicators render bare, ratios with 4
// decimals, absent (unselected) values as "" in CSV and null in JSONL.
std::string render_value(const std::string& name, const std::optional<Rational>& value,
                         OutputFormat format) {
    if (!value)
        return format == OutputFormat::csv ? "" : "null";
    if (is_ratio_indicator(name))
        return value->to_decimal(4);
    return std::to_string(value->numerator());
}

std::optional<Rational> report_value(const IndicatorReport& report, const std::string& name,
                                     const std::set<std::string>& selection) {
    if (!selection.count(name))
        return std::nullopt;
    if (name == "h")
        return Rational(report.h);
    if (name == "h_alpha")
        return Rational(report.h_alpha);
    if (name == "r_alpha")
        return report.r_alpha;
    if (name == "h_bar")
        return Rational(report.h_bar);
    if (name == "p_top10")
        return Rational(report.p_top10);
    if (name == "p_top10_rate")
        return report.p_top10_rate;
    throw LookupError("unknown indicator name \"" + name + "\"");
}

void check_selection(const std::set<std::string>& selection) {
    for (const auto& name : selection)
        if (!is_indicator_name(name))
            throw LookupError("unknown indicator name \"" + name + "\"");
}

std::string csv_header(bool with_time) {
    std::string header = "author";
    if (with_time)
        header += ",t";
    for (const auto& name : all_indicator_names())
        header += "," + name;
    return header + "\n";
}

} // namespace

std::string format_report(const std::vector<IndicatorReport>& reports, OutputFormat format,
                          const std::set<std::string>& selection) {
    check_selection(selection);
    std::string out;
    if (format == OutputFormat::csv)
        out = csv_header(false);
    for (const auto& report : reports) {
        if (format == OutputFormat::csv) {
            out += csv_escape(report.author);
            for (const auto& name : all_indicator_names())
                out += "," + render_value(name, report_value(report, name, selection), format);
        } else {
            out += "{\"author\":" + json_string(report.author);
            for (const auto& name : all_indicator_names())
                out += ",\"" + name +
                       "\":" + render_value(name, report_value(report, name, selection), format);
            out += "}";
        }
        out += "\n";
    }
    return out;
}

std::string format_series(const std::map<std::string, TimeSeries>& series, OutputFormat format,
                          const std::set<std::string>& selection) {
    check_selection(selection);
    std::string out;
    if (format == OutputFormat::csv)
        out = csv_header(true);
    for (const auto& [author, s] : series) {
        for (std::size_t i = 0; i < s.grid.size(); ++i) {
            std::map<std::string, std::optional<Rational>> row;
            for (const auto& name : all_indicator_names()) {
                const auto it = s.values.find(name);
                if (selection.count(name) && it != s.values.end())
                    row[name] = it->second[i];
                else
                    row[name] = std::nullopt;
            }
            if (format == OutputFormat::csv) {
                out += csv_escape(author) + "," + std::to_string(s.grid[i]);
                for (const auto& name : all_indicator_names())
                    out += "," + render_value(name, row[name], format);
            } else {
                out += "{\"author\":" + json_string(author) +
                       ",\"t\":" + std::to_string(s.grid[i]);
                for (const auto& name : all_indicator_names())
                    out += ",\"" + name + "\":" + render_value(name, row[name], format);
                out += "}";
            }
            out += "\n";
        }
    }
    return out;
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream)
        throw IoError("cannot open " + path);
    return stream;
}

Corpus load_from_config(const RunConfig& config) {
    std::ifstream papers = open_input(config.papers_path);
    if (config.events_path) {
        std::ifstream events = open_input(*config.events_path);
        return load_corpus(papers, &events, config.papers_path, *config.events_path);
    }
    return load_corpus(papers, nullptr, config.papers_path);
}

int resolve_eval_year(const RunConfig& config, const Corpus& corpus) {
    if (config.eval_year)
        return *config.eval_year;
    int latest = 0;
    for (const auto& [id, paper] : corpus.papers())
        latest = std::max(latest, paper.year);
    return latest;
}

std::set<std::string> resolve_selection(const RunConfig& config) {
    if (!config.indicators.empty()) {
        for (const auto& name : config.indicators)
            if (!is_indicator_name(name))
                throw LookupError("unknown indicator name \"" + name + "\"");
        return config.indicators;
    }
    if (config.command == Command::replay)
        return default_replay_indicators();
    const auto& names = all_indicator_names();
    return {names.begin(), names.end()};
}

void write_output(const RunConfig& config, std::ostream& fallback, const std::string& payload) {
    if (config.out) {
        std::ofstream file(*config.out, std::ios::binary);
        if (!file)
            throw IoError("cannot open " + *config.out + " for writing");
        file << payload;
        file.flush();
        if (!file)
            throw IoError("failed writing " + *config.out);
    } else {
        fallback << payload;
        fallback.flush();
    }
}

std::string run_compute(const RunConfig& config) {
    const Corpus corpus = load_from_config(config);
    if (!config.at)
        throw ValidationError("compute requires a time point (--at)");
    const Snapshot snapshot = snapshot_at(corpus, *config.at);
    const auto partition = ReferencePartition::from_snapshot(snapshot);
    const int eval_year = resolve_eval_year(config, corpus);
    const auto selection = resolve_selection(config);

    std::vector<IndicatorReport> reports;
    for (const auto& author : corpus.authors())
        reports.push_back(report(snapshot, partition, author, eval_year));
    return format_report(reports, config.format, selection);
}

std::string run_replay(const RunConfig& config) {
    const Corpus corpus = load_from_config(config);
    const auto selection = resolve_selection(config);
    const auto series = replay(corpus, config.grid, selection,
                               config.eval_year ? config.eval_year
                                                : std::optional<int>(resolve_eval_year(config, corpus)));
    return format_series(series, config.format, selection);
}

std::string run_validate(const RunConfig& config) {
    const Corpus corpus = load_from_config(config);
    std::ostringstream summary;
    summary << "ok: " << corpus.papers().size() << " papers, " << corpus.events().size()
            << " events, " << corpus.authors().size() << " authors\n";
    return summary.str();
}

void run_scenario(const RunConfig& config) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec)
        throw IoError("cannot create directory " + config.out_dir + ": " + ec.message());

    std::ostringstream papers;
    write_scenario_papers(papers);
    std::ostringstream events;
    write_scenario_events(events);

    const fs::path papers_path = fs::path(config.out_dir) / "papers.jsonl";
    const fs::path events_path = fs::path(config.out_dir) / "events.csv";
    for (const auto& [path, payload] :
         {std::pair{papers_path, papers.str()}, std::pair{events_path, events.str()}}) {
        std::ofstream file(path, std::ios::binary);
        if (!file)
            throw IoError("cannot open " + path.string() + " for writing");
        file << payload;
        file.flush();
        if (!file)
            throw IoError("failed writing " + path.string());
    }
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    try {
        switch (config.command) {
        case Command::compute:
            write_output(config, out, run_compute(config));
            break;
        case Command::replay:
            write_output(config, out, run_replay(config));
            break;
        case Command::validate:
            write_output(config, out, run_validate(config));
            break;
        case Command::scenario:
            run_scenario(config);
            diag << "wrote " << config.out_dir << "/papers.jsonl and " << config.out_dir
                 << "/events.csv\n";
            break;
        }
        return 0;
    } catch (const IoError& e) {
        diag << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        diag << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace halpha::cli
