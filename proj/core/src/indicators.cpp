#include "halpha/indicators.hpp"

#include <algorithm>
#include <set>

namespace halpha {

Count h_index(const AuthorProfile& profile) {
    // Profile is sorted by citations descending, so h is the longest
    // prefix whose i-th entry (1-based) has >= i citations.
    Count h = 0;
    for (const auto& entry : profile.papers()) {
        if (entry.citations >= h + 1)
            ++h;
        else
            break;
    }
    return h;
}

std::vector<std::string> h_core(const AuthorProfile& profile) {
    const Count h = h_index(profile);
    std::vector<std::string> core;
    core.reserve(static_cast<std::size_t>(h));
    for (Count i = 0; i < h; ++i)
        core.push_back(profile.papers()[static_cast<std::size_t>(i)].paper_id);
    return core;
}

namespace {

std::map<std::string, Count> h_by_author(const Snapshot& snapshot) {
    std::map<std::string, Count> values;
    for (const auto& [author, profile] : snapshot.profiles())
        values.emplace(author, h_index(profile));
    return values;
}

AlphaStatus alpha_of(const PaperRecord& paper, const std::map<std::string, Count>& h_values) {
    AlphaStatus status;
    status.paper = paper.id;
    Count best = -1;
    for (const auto& author : paper.authors)
        best = std::max(best, h_values.at(author));
    for (const auto& author : paper.authors)
        if (h_values.at(author) == best)
            status.alpha_set.insert(author);
    return status;
}

} // namespace

AlphaStatus alpha_authors(const Snapshot& snapshot, const std::string& paper_id) {
    const PaperRecord& paper = snapshot.paper(paper_id);
    return alpha_of(paper, h_by_author(snapshot));
}

Count h_alpha(const Snapshot& snapshot, const std::string& author) {
    const AuthorProfile& profile = author_profile(snapshot, author);
    const auto h_values = h_by_author(snapshot);
    const Count own_h = h_values.at(author);

    Count survivors = 0;
    const Count h = h_index(profile);
    for (Count i = 0; i < h; ++i) {
        const auto& entry = profile.papers()[static_cast<std::size_t>(i)];
        const PaperRecord& paper = snapshot.paper(entry.paper_id);
        bool eliminated = false;
        for (const auto& coauthor : paper.authors) {
            if (coauthor != author && h_values.at(coauthor) > own_h) {
                eliminated = true;
                break;
            }
        }
        if (!eliminated)
            ++survivors;
    }
    return survivors;
}

Rational r_alpha(Count h_alpha_value, Count h_value) {
    if (h_alpha_value > h_value)
        throw ValidationError("r_alpha: h_alpha exceeds h");
    if (h_alpha_value < 0 || h_value < 0)
        throw ValidationError("r_alpha: negative input");
    if (h_value == 0)
        return Rational(0);
    return Rational(h_alpha_value, h_value);
}

namespace {

// One author's side of the coupled definition: papers, citations, and
// for every paper the positions of its co-authors in the value vector.
struct CoupledAuthor {
    std::string id;
    Count h = 0;
    // (citations, co-author indices) per paper of this author
    std::vector<std::pair<Count, std::vector<std::size_t>>> papers;
};

// v_a = max{k : at least k papers with citations >= k and >= v_b for
// every co-author b}.
Count coupled_value(const CoupledAuthor& author, const std::vector<Count>& values) {
    std::vector<Count> qualifying;
    qualifying.reserve(author.papers.size());
    for (const auto& [citations, coauthors] : author.papers) {
        bool ok = true;
        for (std::size_t b : coauthors) {
            if (citations < values[b]) {
                ok = false;
                break;
            }
        }
        if (ok)
            qualifying.push_back(citations);
    }
    std::sort(qualifying.begin(), qualifying.end(), std::greater<>());
    Count k = 0;
    for (Count c : qualifying) {
        if (c >= k + 1)
            ++k;
        else
            break;
    }
    return k;
}

std::vector<Count> apply_coupled(const std::vector<CoupledAuthor>& authors,
                                 const std::vector<Count>& values) {
    std::vector<Count> next(authors.size());
    for (std::size_t i = 0; i < authors.size(); ++i)
        next[i] = coupled_value(authors[i], values);
    return next;
}

} // namespace

std::map<std::string, Count> h_bar_all(const Snapshot& snapshot, const HBarPolicy& policy) {
    if (snapshot.profiles().empty())
        return {};

    // Index authors by id order so value vectors are deterministic.
    std::vector<CoupledAuthor> authors;
    std::map<std::string, std::size_t> index;
    for (const auto& [author, profile] : snapshot.profiles()) {
        index.emplace(author, authors.size());
        authors.push_back({author, h_index(profile), {}});
    }
    for (const auto& [author, profile] : snapshot.profiles()) {
        auto& coupled = authors[index.at(author)];
        for (const auto& entry : profile.papers()) {
            std::vector<std::size_t> coauthors;
            for (const auto& other : snapshot.paper(entry.paper_id).authors)
                if (other != author)
                    coauthors.push_back(index.at(other));
            coupled.papers.emplace_back(entry.citations, std::move(coauthors));
        }
    }

    std::vector<Count> h_vector(authors.size());
    Count h_sum = 0;
    for (std::size_t i = 0; i < authors.size(); ++i) {
        h_vector[i] = authors[i].h;
        h_sum += authors[i].h;
    }

    const std::int64_t budget = policy.max_iterations >= 0
                                    ? policy.max_iterations
                                    : h_sum + static_cast<std::int64_t>(authors.size());

    // Iterate from v0 = h. The map is antitone and bounded by h, so the
    // iterates sandwich every solution; a revisited state means a cycle.
    std::set<std::vector<Count>> visited;
    std::vector<Count> state = h_vector;
    visited.insert(state);
    bool converged = false;
    std::vector<std::vector<Count>> trail{state};
    for (std::int64_t step = 0; step < budget; ++step) {
        std::vector<Count> next = apply_coupled(authors, state);
        if (next == state) {
            converged = true;
            break;
        }
        if (visited.count(next)) {
            // Cycle: collapse to the componentwise minimum over the cycle
            // states and continue from there.
            auto begin = std::find(trail.begin(), trail.end(), next);
            std::vector<Count> floor = next;
            for (auto it = begin; it != trail.end(); ++it)
                for (std::size_t i = 0; i < floor.size(); ++i)
                    floor[i] = std::min(floor[i], (*it)[i]);
            if (visited.count(floor)) {
                converged = false;
                break; // the floor was already tried; iteration cannot settle
            }
            state = std::move(floor);
        } else {
            state = std::move(next);
        }
        visited.insert(state);
        trail.push_back(state);
    }

    if (!converged) {
        // Exhaustive fallback over all value vectors in prod [0, h_a],
        // keeping fixed points and selecting max sum, then lexicographic
        // greatest in author-id order.
        std::int64_t space = 1;
        bool feasible = true;
        for (Count h : h_vector) {
            space *= h + 1;
            if (space > policy.enumeration_limit) {
                feasible = false;
                break;
            }
        }
        if (!feasible)
            throw GuardError("h_bar iteration budget exceeded and enumeration space too large");

        std::optional<std::vector<Count>> best;
        Count best_sum = -1;
        std::vector<Count> candidate(authors.size(), 0);
        while (true) {
            if (apply_coupled(authors, candidate) == candidate) {
                Count sum = 0;
                for (Count v : candidate)
                    sum += v;
                if (sum > best_sum || (sum == best_sum && candidate > *best)) {
                    best = candidate;
                    best_sum = sum;
                }
            }
            std::size_t i = 0;
            while (i < candidate.size() && candidate[i] == h_vector[i])
                candidate[i++] = 0;
            if (i == candidate.size())
                break;
            ++candidate[i];
        }
        if (!best)
            throw GuardError("h_bar: no simultaneous solution found by enumeration");
        state = *best;
    }

    std::map<std::string, Count> result;
    for (std::size_t i = 0; i < authors.size(); ++i)
        result.emplace(authors[i].id, state[i]);
    return result;
}

ReferencePartition ReferencePartition::from_snapshot(const Snapshot& snapshot) {
    ReferencePartition partition;
    for (const auto& [id, count] : snapshot.counts()) {
        const PaperRecord& paper = snapshot.paper(id);
        partition.cells_[{paper.field, paper.year}].push_back(count);
    }
    for (auto& [cell, counts] : partition.cells_)
        std::sort(counts.begin(), counts.end());
    return partition;
}

const std::vector<Count>& ReferencePartition::cell(const std::string& field, int year) const {
    const auto it = cells_.find({field, year});
    if (it == cells_.end())
        throw LookupError("no reference cell for field \"" + field + "\", year " +
                          std::to_string(year));
    return it->second;
}

Count ReferencePartition::p90_threshold(const std::string& field, int year) const {
    const std::vector<Count>& counts = cell(field, year);
    // Nearest rank: ceil(0.9 * N), 1-based in ascending order.
    const std::size_t n = counts.size();
    const std::size_t rank = (9 * n + 9) / 10;
    return counts[rank - 1];
}

Count p_top10(const Snapshot& snapshot, const ReferencePartition& partition,
              const std::string& author) {
    const AuthorProfile& profile = author_profile(snapshot, author);
    Count qualifying = 0;
    for (const auto& entry : profile.papers()) {
        const PaperRecord& paper = snapshot.paper(entry.paper_id);
        if (entry.citations > partition.p90_threshold(paper.field, paper.year))
            ++qualifying;
    }
    return qualifying;
}

Rational age_normalized(Count count, int first_year, int eval_year) {
    if (eval_year < first_year)
        throw ValidationError("evaluation year " + std::to_string(eval_year) +
                              " precedes first publication year " + std::to_string(first_year));
    if (count < 0)
        throw ValidationError("age_normalized: negative count");
    const std::int64_t career = std::max<std::int64_t>(1, eval_year - first_year + 1);
    return Rational(count, career);
}

int first_publication_year(const Snapshot& snapshot, const std::string& author) {
    const AuthorProfile& profile = author_profile(snapshot, author);
    int first = 0;
    bool seen = false;
    for (const auto& entry : profile.papers()) {
        const int year = snapshot.paper(entry.paper_id).year;
        if (!seen || year < first) {
            first = year;
            seen = true;
        }
    }
    if (!seen)
        throw LookupError("author \"" + author + "\" has no papers");
    return first;
}

IndicatorReport report(const Snapshot& snapshot, const ReferencePartition& partition,
                       const std::string& author, int eval_year) {
    const AuthorProfile& profile = author_profile(snapshot, author);

    IndicatorReport out;
    out.author = author;
    out.h = h_index(profile);
    out.h_alpha = h_alpha(snapshot, author);
    out.r_alpha = r_alpha(out.h_alpha, out.h);
    out.h_bar = h_bar_all(snapshot).at(author);
    out.p_top10 = p_top10(snapshot, partition, author);
    out.p_top10_rate =
        age_normalized(out.p_top10, first_publication_year(snapshot, author), eval_year);
    return out;
}

const std::vector<std::string>& all_indicator_names() {
    static const std::vector<std::string> names = {"h",     "h_alpha", "r_alpha",
                                                   "h_bar", "p_top10", "p_top10_rate"};
    return names;
}

bool is_indicator_name(const std::string& name) {
    const auto& names = all_indicator_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

} // namespace halpha
