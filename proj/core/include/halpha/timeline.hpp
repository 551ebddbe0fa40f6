#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "halpha/corpus.hpp"
#include "halpha/indicators.hpp"
#include "halpha/rational.hpp"

namespace halpha {

// Per-author indicator values over a time grid. `values[name][i]` is the
// indicator at `grid[i]`; `deltas[name][i]` is values[i+1] - values[i].
struct TimeSeries {
    std::string author;
    std::vector<Time> grid;
    std::map<std::string, std::vector<Rational>> values;
    std::map<std::string, std::vector<Rational>> deltas;
};

// A single-step decrease of one indicator: values dropped by `drop` > 0
// at grid time `at`.
struct InstabilityFinding {
    std::string author;
    std::string indicator;
    Time at = 0;
    Rational drop;
};

// Computes the selected indicators for every author at every grid point.
// The grid must be nonempty and strictly ascending; indicator names must
// be known. `eval_year` defaults to the corpus's latest publication year.
std::map<std::string, TimeSeries> replay(const Corpus& corpus, const std::vector<Time>& grid,
                                         const std::set<std::string>& indicators,
                                         std::optional<int> eval_year = std::nullopt);

// Default replay selection. h_bar and the top-10% indicators are opt-in;
// h_bar is the costly fixed point.
const std::set<std::string>& default_replay_indicators();

// Largest single-step decrease of one indicator, earliest step on ties;
// nullopt when the series never decreases.
std::optional<InstabilityFinding> max_drop(const TimeSeries& series, const std::string& indicator);

// The built-in three-author instability corpus: 50 papers shared by
// {A, B, C} with initial counts 110 down to 61, one 49-citation solo
// paper per author, then two citations for A's solo paper at t=2 and two
// for B's at t=3. A's h rises to 51 at t=2 and the shared core stops
// counting for B and C until B catches up at t=3.
Corpus paper_scenario();

// Emits the scenario in the corpus file formats, byte-stable across runs.
void write_scenario_papers(std::ostream& out);
void write_scenario_events(std::ostream& out);

} // namespace halpha
