#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "halpha/errors.hpp"

namespace halpha {

using Count = std::int64_t; // citation count
using Time = std::int64_t;  // abstract time, months

// One publication. `authors` keeps byline order; `static_citations` is
// the alternative to event sourcing (a corpus uses one style, never both).
struct PaperRecord {
    std::string id;
    std::vector<std::string> authors;
    int year = 0;
    std::string field;
    std::optional<Count> static_citations;
};

// A timestamped positive citation increment for one paper.
struct CitationEvent {
    std::string paper_id;
    Time t = 0;
    Count delta = 0;
};

// Per-author list of (paper id, citations), sorted by citations
// descending, ties by paper id ascending. The ordering is total, so
// h-cores are reproducible.
class AuthorProfile {
public:
    struct Entry {
        std::string paper_id;
        Count citations = 0;
    };

    AuthorProfile() = default;
    AuthorProfile(std::string author, std::vector<Entry> papers);

    const std::string& author() const { return author_; }
    const std::vector<Entry>& papers() const { return papers_; }
    std::size_t size() const { return papers_.size(); }

private:
    std::string author_;
    std::vector<Entry> papers_;
};

// Validated, immutable bibliographic corpus. Copies share the data.
class Corpus {
public:
    Corpus();

    // Validates all corpus invariants. `events == nullopt` means no
    // events source was given, which is required for static-count
    // corpora; an empty vector is a present-but-empty events table.
    static Corpus from_records(std::vector<PaperRecord> papers,
                               std::optional<std::vector<CitationEvent>> events);

    const std::map<std::string, PaperRecord>& papers() const;
    // Normalized event list, sorted by time (stable). Static-count
    // corpora appear here as one implicit t=0 event per cited paper.
    const std::vector<CitationEvent>& events() const;
    // Sorted unique author ids across all papers.
    const std::vector<std::string>& authors() const;

    bool has_paper(const std::string& id) const;
    bool has_author(const std::string& id) const;
    bool empty() const;

    // Same corpus plus one more event; validates the event.
    Corpus with_event(const CitationEvent& event) const;

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

class Snapshot;

// Parses and validates the papers stream (one JSON object per line) and
// the optional events stream (CSV with header `paper_id,t,delta`).
// Errors carry 1-based line numbers; `papers_name`/`events_name` only
// label diagnostics.
Corpus load_corpus(std::istream& papers_source, std::istream* events_source,
                   const std::string& papers_name = "papers",
                   const std::string& events_name = "events");

// Corpus state at time t: citation counts (events with time <= t) and
// author profiles. Zero-citation papers stay in profiles.
Snapshot snapshot_at(const Corpus& corpus, Time t);

// Immutable view of the corpus at one time.
class Snapshot {
public:
    Time t() const { return t_; }
    const std::map<std::string, Count>& counts() const { return counts_; }
    const std::map<std::string, AuthorProfile>& profiles() const { return profiles_; }

    Count count_of(const std::string& paper_id) const; // throws LookupError
    const PaperRecord& paper(const std::string& paper_id) const; // throws LookupError
    bool has_author(const std::string& author) const;
    bool empty() const { return counts_.empty(); }

private:
    friend Snapshot snapshot_at(const Corpus&, Time);

    Time t_ = 0;
    std::map<std::string, Count> counts_;
    std::map<std::string, AuthorProfile> profiles_;
    Corpus corpus_;
};

// Profile lookup with an unknown-author error.
const AuthorProfile& author_profile(const Snapshot& snapshot, const std::string& author);

// Writers for the corpus file formats. Key order and separators are
// fixed so emission is byte-stable.
void write_papers(std::ostream& out, const Corpus& corpus);
void write_events(std::ostream& out, const Corpus& corpus);

} // namespace halpha
