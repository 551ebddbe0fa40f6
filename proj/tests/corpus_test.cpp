#include "halpha/corpus.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "halpha/timeline.hpp"
#include "test_util.hpp"

using namespace halpha;

namespace {

Corpus load(const std::string& papers, const std::string* events = nullptr) {
    std::istringstream papers_stream(papers);
    if (!events)
        return load_corpus(papers_stream, nullptr);
    std::istringstream events_stream(*events);
    return load_corpus(papers_stream, &events_stream);
}

const std::string kThreePapers =
    R"({"id":"p1","authors":["alice","bob"],"year":2001,"field":"physics"}
{"id":"p2","authors":["alice"],"year":2002,"field":"physics"}
{"id":"p3","authors":["bob"],"year":2003,"field":"biology"}
)";

} // namespace

TEST(LoadCorpus, PreservesPaperAndEventCounts) {
    const std::string events = "paper_id,t,delta\np1,0,5\np2,0,3\np1,2,1\np3,4,2\n";
    const Corpus corpus = load(kThreePapers, &events);
    EXPECT_EQ(corpus.papers().size(), 3u);
    EXPECT_EQ(corpus.events().size(), 4u);
    EXPECT_EQ(corpus.authors(), (std::vector<std::string>{"alice", "bob"}));
}

TEST(LoadCorpus, AcceptsAnyKeyOrder) {
    const Corpus corpus =
        load(R"({"year":2001,"id":"p1","field":"physics","authors":["alice"],"citations":7})"
             "\n");
    EXPECT_EQ(corpus.papers().at("p1").static_citations, 7);
}

TEST(LoadCorpus, RejectsEmptyAuthorListNamingThePaper) {
    try {
        load(R"({"id":"p9","authors":[],"year":2001,"field":"physics"})" "\n");
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("p9"), std::string::npos);
    }
}

TEST(LoadCorpus, RejectsDuplicatePaperId) {
    const std::string papers =
        R"({"id":"p1","authors":["alice"],"year":2001,"field":"physics"}
{"id":"p1","authors":["bob"],"year":2002,"field":"physics"}
)";
    try {
        load(papers);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("p1"), std::string::npos);
    }
}

TEST(LoadCorpus, RejectsDuplicateAuthorWithinPaper) {
    EXPECT_THROW(load(R"({"id":"p1","authors":["alice","alice"],"year":2001,"field":"x"})" "\n"),
                 ValidationError);
}

TEST(LoadCorpus, ReportsLineNumberOfMalformedRecord) {
    const std::string papers =
        R"({"id":"p1","authors":["alice"],"year":2001,"field":"physics"}
not json at all
)";
    try {
        load(papers);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(LoadCorpus, ReportsLineNumberOfBadEventRow) {
    const std::string events = "paper_id,t,delta\np1,0,5\np2,oops,3\n";
    try {
        load(kThreePapers, &events);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(LoadCorpus, RejectsBadEventsHeader) {
    const std::string events = "paper,when,count\np1,0,5\n";
    EXPECT_THROW(load(kThreePapers, &events), ValidationError);
}

TEST(LoadCorpus, RejectsUnknownPaperInEvents) {
    const std::string events = "paper_id,t,delta\nnope,0,5\n";
    try {
        load(kThreePapers, &events);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("nope"), std::string::npos);
    }
}

TEST(LoadCorpus, RejectsNonPositiveDeltaAndNegativeTime) {
    const std::string zero_delta = "paper_id,t,delta\np1,0,0\n";
    EXPECT_THROW(load(kThreePapers, &zero_delta), ValidationError);
    const std::string negative_t = "paper_id,t,delta\np1,-1,2\n";
    EXPECT_THROW(load(kThreePapers, &negative_t), ValidationError);
}

TEST(LoadCorpus, RejectsMixedCitationSources) {
    // Static counts alongside an events source.
    const std::string statics =
        R"({"id":"p1","authors":["alice"],"year":2001,"field":"x","citations":4}
)";
    const std::string events = "paper_id,t,delta\np1,0,5\n";
    EXPECT_THROW(load(statics, &events), ValidationError);

    // Some papers static, some not.
    const std::string half =
        R"({"id":"p1","authors":["alice"],"year":2001,"field":"x","citations":4}
{"id":"p2","authors":["bob"],"year":2001,"field":"x"}
)";
    EXPECT_THROW(load(half), ValidationError);
}

TEST(LoadCorpus, StaticCountsBecomeImplicitEvents) {
    const std::string statics =
        R"({"id":"p1","authors":["alice"],"year":2001,"field":"x","citations":4}
{"id":"p2","authors":["alice"],"year":2001,"field":"x","citations":0}
)";
    const Corpus corpus = load(statics);
    ASSERT_EQ(corpus.events().size(), 1u); // zero counts produce no event
    EXPECT_EQ(corpus.events()[0].paper_id, "p1");
    EXPECT_EQ(corpus.events()[0].t, 0);
    EXPECT_EQ(corpus.events()[0].delta, 4);

    const Snapshot snapshot = snapshot_at(corpus, 0);
    EXPECT_EQ(snapshot.count_of("p1"), 4);
    EXPECT_EQ(snapshot.count_of("p2"), 0);
}

TEST(LoadCorpus, ScenarioFilesRoundTrip) {
    std::ostringstream papers;
    write_scenario_papers(papers);
    std::ostringstream events;
    write_scenario_events(events);

    const std::string events_text = events.str();
    const Corpus corpus = load(papers.str(), &events_text);
    EXPECT_EQ(corpus.papers().size(), 53u); // 50 shared + 3 solo
    EXPECT_EQ(corpus.events().size(), 55u); // 53 at t=0 + 2 later
}

TEST(SnapshotAt, ScenarioBaselineCounts) {
    const Snapshot snapshot = snapshot_at(paper_scenario(), 0);
    for (int k = 1; k <= 50; ++k) {
        std::ostringstream id;
        id << "shared-" << (k < 10 ? "0" : "") << k;
        EXPECT_EQ(snapshot.count_of(id.str()), 111 - k);
    }
    EXPECT_EQ(snapshot.count_of("solo-A"), 49);
    EXPECT_EQ(snapshot.count_of("solo-B"), 49);
    EXPECT_EQ(snapshot.count_of("solo-C"), 49);
}

TEST(SnapshotAt, ScenarioAtTwoMonthsOnlyMovesASolo) {
    const Corpus corpus = paper_scenario();
    const Snapshot before = snapshot_at(corpus, 0);
    const Snapshot after = snapshot_at(corpus, 2);
    for (const auto& [id, count] : after.counts()) {
        if (id == "solo-A")
            EXPECT_EQ(count, 51);
        else
            EXPECT_EQ(count, before.count_of(id));
    }
}

TEST(SnapshotAt, EmptyCorpus) {
    const Snapshot snapshot = snapshot_at(Corpus(), 100);
    EXPECT_TRUE(snapshot.empty());
    EXPECT_TRUE(snapshot.profiles().empty());
}

TEST(SnapshotAt, ZeroCitationPapersStayInProfiles) {
    const Corpus corpus = load(kThreePapers); // no citation source at all
    const Snapshot snapshot = snapshot_at(corpus, 10);
    EXPECT_EQ(author_profile(snapshot, "alice").size(), 2u);
    EXPECT_EQ(author_profile(snapshot, "bob").size(), 2u);
    for (const auto& entry : author_profile(snapshot, "alice").papers())
        EXPECT_EQ(entry.citations, 0);
}

TEST(AuthorProfile, ScenarioAuthorAAtBaseline) {
    const Snapshot snapshot = snapshot_at(paper_scenario(), 0);
    const AuthorProfile& profile = author_profile(snapshot, "A");
    ASSERT_EQ(profile.size(), 51u);
    for (int i = 0; i < 50; ++i)
        EXPECT_EQ(profile.papers()[i].citations, 110 - i);
    EXPECT_EQ(profile.papers()[50].citations, 49);
    EXPECT_EQ(profile.papers()[50].paper_id, "solo-A");
}

TEST(AuthorProfile, UnknownAuthorIsAnError) {
    const Snapshot snapshot = snapshot_at(paper_scenario(), 0);
    EXPECT_THROW(author_profile(snapshot, "nobody"), LookupError);
}

TEST(AuthorProfile, EqualCountsOrderByPaperIdAscending) {
    // Direct enumeration of the documented tie rule on a 3-way tie.
    const std::string papers =
        R"({"id":"z","authors":["alice"],"year":2001,"field":"x","citations":2}
{"id":"x","authors":["alice"],"year":2001,"field":"x","citations":2}
{"id":"y","authors":["alice"],"year":2001,"field":"x","citations":2}
)";
    const Snapshot snapshot = snapshot_at(load(papers), 0);
    const auto& entries = author_profile(snapshot, "alice").papers();
    ASSERT_EQ(entries.size(), 3u);
    EXPECT_EQ(entries[0].paper_id, "x");
    EXPECT_EQ(entries[1].paper_id, "y");
    EXPECT_EQ(entries[2].paper_id, "z");
}

TEST(CorpusProperties, CountsAreMonotoneOverTime) {
    std::mt19937 rng(7001);
    for (int round = 0; round < 50; ++round) {
        test_util::CorpusShape shape;
        shape.event_style = true;
        Corpus corpus = test_util::random_corpus(rng, shape);
        for (int extra = 0; extra < 5; ++extra)
            corpus = corpus.with_event(test_util::random_event(rng, corpus, 6));

        Snapshot previous = snapshot_at(corpus, 0);
        for (Time t = 1; t <= 7; ++t) {
            const Snapshot current = snapshot_at(corpus, t);
            for (const auto& [id, count] : current.counts())
                EXPECT_GE(count, previous.count_of(id));
            previous = current;
        }
    }
}

TEST(CorpusProperties, FinalCountsEqualSumOfDeltas) {
    std::mt19937 rng(7002);
    test_util::CorpusShape shape;
    shape.event_style = true;
    for (int round = 0; round < 50; ++round) {
        Corpus corpus = test_util::random_corpus(rng, shape);
        for (int extra = 0; extra < 4; ++extra)
            corpus = corpus.with_event(test_util::random_event(rng, corpus, 9));

        std::map<std::string, Count> sums;
        for (const auto& [id, paper] : corpus.papers())
            sums[id] = 0;
        Time last = 0;
        for (const auto& event : corpus.events()) {
            sums[event.paper_id] += event.delta;
            last = std::max(last, event.t);
        }
        const Snapshot final_state = snapshot_at(corpus, last);
        for (const auto& [id, total] : sums)
            EXPECT_EQ(final_state.count_of(id), total);
    }
}

TEST(CorpusProperties, LoadingSameBytesTwiceIsIdentical) {
    std::ostringstream papers;
    write_scenario_papers(papers);
    std::ostringstream events;
    write_scenario_events(events);
    const std::string events_text = events.str();

    const Corpus first = load(papers.str(), &events_text);
    const Corpus second = load(papers.str(), &events_text);

    std::ostringstream first_papers, second_papers, first_events, second_events;
    write_papers(first_papers, first);
    write_papers(second_papers, second);
    write_events(first_events, first);
    write_events(second_events, second);
    EXPECT_EQ(first_papers.str(), second_papers.str());
    EXPECT_EQ(first_events.str(), second_events.str());
    // And emission reproduces the input bytes.
    EXPECT_EQ(first_papers.str(), papers.str());
    EXPECT_EQ(first_events.str(), events.str());
}

TEST(CorpusProperties, ProfileOrderingIsTotal) {
    std::mt19937 rng(7003);
    for (int round = 0; round < 30; ++round) {
        const Corpus corpus = test_util::random_corpus(rng);
        const Snapshot snapshot = snapshot_at(corpus, 0);
        for (const auto& [author, profile] : snapshot.profiles()) {
            for (std::size_t i = 1; i < profile.papers().size(); ++i) {
                const auto& a = profile.papers()[i - 1];
                const auto& b = profile.papers()[i];
                const bool strictly_before =
                    a.citations > b.citations || (a.citations == b.citations && a.paper_id < b.paper_id);
                EXPECT_TRUE(strictly_before);
            }
        }
    }
}
