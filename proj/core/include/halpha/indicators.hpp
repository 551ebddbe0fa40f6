#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "halpha/corpus.hpp"
#include "halpha/rational.hpp"

namespace halpha {

// Largest k such that at least k papers of the profile have >= k citations.
Count h_index(const AuthorProfile& profile);

// The first h papers of the profile under the deterministic ordering;
// |result| == h and every member has >= h citations.
std::vector<std::string> h_core(const AuthorProfile& profile);

// Which of a paper's authors hold the maximal h at snapshot time. Ties
// keep every tied author in the set.
struct AlphaStatus {
    std::string paper;
    std::set<std::string> alpha_set;

    bool is_alpha(const std::string& author) const { return alpha_set.count(author) > 0; }
};

AlphaStatus alpha_authors(const Snapshot& snapshot, const std::string& paper_id);

// Number of papers in the author's h-core for which no co-author has
// strictly higher snapshot-time h. Counts survivors of the elimination
// pass; it is not a recomputed h over the filtered list.
Count h_alpha(const Snapshot& snapshot, const std::string& author);

// h_alpha / h, or 0 when h == 0. Throws ValidationError if h_alpha > h.
Rational r_alpha(Count h_alpha_value, Count h_value);

// Advanced knobs for the h-bar fixed-point computation. Defaults follow
// the documented policy; tests override them to exercise the guard.
struct HBarPolicy {
    // <0 means the default budget of sum(h_a) + |authors| applications.
    std::int64_t max_iterations = -1;
    // Exhaustive fallback runs only while prod(h_a + 1) stays below this.
    std::int64_t enumeration_limit = 1'000'000;
};

// Simultaneous solution of the mutually recursive core-membership
// condition: v_a = max{k : at least k of a's papers have >= k citations
// and >= v_b for every co-author b}. Iterates from v0 = h; falls back to
// exhaustive enumeration on a cycle or budget trip; throws GuardError
// when the fallback is infeasible.
std::map<std::string, Count> h_bar_all(const Snapshot& snapshot, const HBarPolicy& policy = {});

// Citation counts of all corpus papers, grouped by (field, publication
// year) and sorted ascending. Thresholds for the top-10% indicator are
// read from these cells.
class ReferencePartition {
public:
    static ReferencePartition from_snapshot(const Snapshot& snapshot);

    const std::vector<Count>& cell(const std::string& field, int year) const; // throws LookupError
    // Nearest-rank 90th percentile: element at rank ceil(0.9 * N),
    // 1-based, in ascending order.
    Count p90_threshold(const std::string& field, int year) const;
    std::size_t cell_count() const { return cells_.size(); }

private:
    std::map<std::pair<std::string, int>, std::vector<Count>> cells_;
};

// Number of the author's papers strictly above the nearest-rank 90th
// percentile of their (field, year) cell.
Count p_top10(const Snapshot& snapshot, const ReferencePartition& partition,
              const std::string& author);

// count / max(1, eval_year - first_year + 1). Throws ValidationError
// when eval_year < first_year.
Rational age_normalized(Count count, int first_year, int eval_year);

// Year of the author's earliest paper.
int first_publication_year(const Snapshot& snapshot, const std::string& author);

// Full per-author indicator bundle.
struct IndicatorReport {
    std::string author;
    Count h = 0;
    Count h_bar = 0;
    Count h_alpha = 0;
    Rational r_alpha;
    Count p_top10 = 0;
    Rational p_top10_rate;
};

IndicatorReport report(const Snapshot& snapshot, const ReferencePartition& partition,
                       const std::string& author, int eval_year);

// Canonical indicator names accepted by replay and the CLI, in report
// column order.
const std::vector<std::string>& all_indicator_names();
bool is_indicator_name(const std::string& name);

} // namespace halpha
