// Deterministic random-corpus generation shared by the property tests
// and the acceptance suite.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "halpha/corpus.hpp"

namespace test_util {

struct CorpusShape {
    int max_authors = 6;
    int max_papers = 15;
    halpha::Count max_count = 20;
    bool event_style = false; // static counts by default
};

inline std::string author_name(int i) { return "a" + std::to_string(i + 1); }

inline std::string paper_name(int i) {
    return "p" + std::string(i + 1 < 10 ? "0" : "") + std::to_string(i + 1);
}

inline halpha::Corpus random_corpus(std::mt19937& rng, const CorpusShape& shape = {}) {
    std::uniform_int_distribution<int> author_count(1, shape.max_authors);
    std::uniform_int_distribution<int> paper_count(1, shape.max_papers);
    const int n_authors = author_count(rng);
    const int n_papers = paper_count(rng);

    std::uniform_int_distribution<halpha::Count> citations(0, shape.max_count);
    std::uniform_int_distribution<int> year(2000, 2003);
    std::uniform_int_distribution<int> field(0, 1);

    std::vector<halpha::PaperRecord> papers;
    std::vector<halpha::CitationEvent> events;
    for (int p = 0; p < n_papers; ++p) {
        std::vector<int> pool(n_authors);
        for (int i = 0; i < n_authors; ++i)
            pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::uniform_int_distribution<int> byline(1, n_authors);
        const int n_byline = byline(rng);

        halpha::PaperRecord paper;
        paper.id = paper_name(p);
        for (int i = 0; i < n_byline; ++i)
            paper.authors.push_back(author_name(pool[i]));
        paper.year = year(rng);
        paper.field = field(rng) == 0 ? "f1" : "f2";

        const halpha::Count count = citations(rng);
        if (shape.event_style) {
            if (count > 0)
                events.push_back({paper.id, 0, count});
        } else {
            paper.static_citations = count;
        }
        papers.push_back(std::move(paper));
    }

    if (shape.event_style)
        return halpha::Corpus::from_records(std::move(papers), std::move(events));
    return halpha::Corpus::from_records(std::move(papers), std::nullopt);
}

// A uniformly random event targeting an existing paper.
inline halpha::CitationEvent random_event(std::mt19937& rng, const halpha::Corpus& corpus,
                                          halpha::Time max_t = 4) {
    std::uniform_int_distribution<std::size_t> pick(0, corpus.papers().size() - 1);
    auto it = corpus.papers().begin();
    std::advance(it, pick(rng));
    std::uniform_int_distribution<halpha::Time> when(0, max_t);
    std::uniform_int_distribution<halpha::Count> how_much(1, 3);
    return {it->first, when(rng), how_much(rng)};
}

} // namespace test_util
