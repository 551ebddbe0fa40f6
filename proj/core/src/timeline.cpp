#include "halpha/timeline.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace halpha {

namespace {

void check_grid(const std::vector<Time>& grid) {
    if (grid.empty())
        throw ValidationError("replay grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0)
            throw ValidationError("replay grid contains a negative time");
        if (i > 0 && grid[i] <= grid[i - 1])
            throw ValidationError("replay grid must be strictly ascending");
    }
}

void check_selection(const std::set<std::string>& indicators) {
    if (indicators.empty())
        throw ValidationError("no indicators selected");
    for (const auto& name : indicators)
        if (!is_indicator_name(name))
            throw LookupError("unknown indicator name \"" + name + "\"");
}

} // namespace

std::map<std::string, TimeSeries> replay(const Corpus& corpus, const std::vector<Time>& grid,
                                         const std::set<std::string>& indicators,
                                         std::optional<int> eval_year) {
    check_grid(grid);
    check_selection(indicators);

    const bool want_top10 = indicators.count("p_top10") || indicators.count("p_top10_rate");
    const bool want_h_bar = indicators.count("h_bar") > 0;

    int resolved_eval_year = 0;
    if (eval_year) {
        resolved_eval_year = *eval_year;
    } else {
        for (const auto& [id, paper] : corpus.papers())
            resolved_eval_year = std::max(resolved_eval_year, paper.year);
    }

    std::map<std::string, TimeSeries> series;
    for (const auto& author : corpus.authors()) {
        TimeSeries s;
        s.author = author;
        s.grid = grid;
        for (const auto& name : indicators)
            s.values[name] = {};
        series.emplace(author, std::move(s));
    }

    for (const Time t : grid) {
        const Snapshot snapshot = snapshot_at(corpus, t);
        std::optional<ReferencePartition> partition;
        if (want_top10)
            partition = ReferencePartition::from_snapshot(snapshot);
        std::map<std::string, Count> h_bar_values;
        if (want_h_bar)
            h_bar_values = h_bar_all(snapshot);

        for (const auto& author : corpus.authors()) {
            TimeSeries& s = series.at(author);
            const Count h = h_index(author_profile(snapshot, author));
            std::optional<Count> h_alpha_value;
            if (indicators.count("h_alpha") || indicators.count("r_alpha"))
                h_alpha_value = h_alpha(snapshot, author);
            std::optional<Count> top10;
            if (want_top10)
                top10 = p_top10(snapshot, *partition, author);

            for (const auto& name : indicators) {
                Rational value;
                if (name == "h")
                    value = Rational(h);
                else if (name == "h_alpha")
                    value = Rational(*h_alpha_value);
                else if (name == "r_alpha")
                    value = r_alpha(*h_alpha_value, h);
                else if (name == "h_bar")
                    value = Rational(h_bar_values.at(author));
                else if (name == "p_top10")
                    value = Rational(*top10);
                else // p_top10_rate
                    value = age_normalized(*top10, first_publication_year(snapshot, author),
                                           resolved_eval_year);
                s.values[name].push_back(value);
            }
        }
    }

    for (auto& [author, s] : series) {
        for (const auto& [name, values] : s.values) {
            auto& deltas = s.deltas[name];
            for (std::size_t i = 1; i < values.size(); ++i)
                deltas.push_back(values[i] - values[i - 1]);
        }
    }
    return series;
}

const std::set<std::string>& default_replay_indicators() {
    static const std::set<std::string> defaults = {"h", "h_alpha", "r_alpha"};
    return defaults;
}

std::optional<InstabilityFinding> max_drop(const TimeSeries& series, const std::string& indicator) {
    if (!is_indicator_name(indicator))
        throw LookupError("unknown indicator name \"" + indicator + "\"");
    const auto it = series.values.find(indicator);
    if (it == series.values.end())
        throw LookupError("indicator \"" + indicator + "\" not present in series");

    std::optional<InstabilityFinding> worst;
    const auto& values = it->second;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[i - 1]) {
            const Rational drop = values[i - 1] - values[i];
            if (!worst || drop > worst->drop) { // strict: earliest step wins ties
                worst = InstabilityFinding{series.author, indicator, series.grid[i], drop};
            }
        }
    }
    return worst;
}

namespace {

constexpr int kScenarioYear = 2010;
constexpr const char* kScenarioField = "physics";

std::string shared_paper_id(int k) {
    std::ostringstream id;
    id << "shared-" << (k < 10 ? "0" : "") << k;
    return id.str();
}

} // namespace

Corpus paper_scenario() {
    std::vector<PaperRecord> papers;
    std::vector<CitationEvent> events;

    // 50 papers shared by all three authors; paper #k starts at 111-k
    // citations (110 for #1 down to 61 for #50).
    for (int k = 1; k <= 50; ++k) {
        papers.push_back({shared_paper_id(k), {"A", "B", "C"}, kScenarioYear, kScenarioField, {}});
        events.push_back({shared_paper_id(k), 0, 111 - k});
    }
    // One solo paper per author, 49 citations each.
    for (const std::string author : {"A", "B", "C"}) {
        papers.push_back({"solo-" + author, {author}, kScenarioYear, kScenarioField, {}});
        events.push_back({"solo-" + author, 0, 49});
    }
    // Two months later A's solo paper gets two citations; one month after
    // that, B's does.
    events.push_back({"solo-A", 2, 2});
    events.push_back({"solo-B", 3, 2});

    return Corpus::from_records(std::move(papers), std::move(events));
}

void write_scenario_papers(std::ostream& out) { write_papers(out, paper_scenario()); }

void write_scenario_events(std::ostream& out) { write_events(out, paper_scenario()); }

} // namespace halpha
