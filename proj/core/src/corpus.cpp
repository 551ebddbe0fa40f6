#include "halpha/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace halpha {

namespace {

using nlohmann::json;

std::string quoted(const std::string& s) {
    return "\"" + s + "\"";
}

void validate_paper(const PaperRecord& paper) {
    if (paper.id.empty())
        throw ValidationError("paper with empty id");
    if (paper.authors.empty())
        throw ValidationError("paper " + quoted(paper.id) + ": empty author list");
    std::set<std::string> seen;
    for (const auto& author : paper.authors) {
        if (author.empty())
            throw ValidationError("paper " + quoted(paper.id) + ": empty author id");
        if (!seen.insert(author).second)
            throw ValidationError("paper " + quoted(paper.id) + ": duplicate author " + quoted(author));
    }
    if (paper.static_citations && *paper.static_citations < 0)
        throw ValidationError("paper " + quoted(paper.id) + ": negative citation count");
}

} // namespace

AuthorProfile::AuthorProfile(std::string author, std::vector<Entry> papers)
    : author_(std::move(author)), papers_(std::move(papers)) {
    // Citations descending, ties by paper id ascending: a total order, so
    // the h-core boundary is reproducible.
    std::sort(papers_.begin(), papers_.end(), [](const Entry& a, const Entry& b) {
        if (a.citations != b.citations)
            return a.citations > b.citations;
        return a.paper_id < b.paper_id;
    });
}

struct Corpus::Data {
    std::map<std::string, PaperRecord> papers;
    std::vector<CitationEvent> events; // sorted by t, stable
    std::vector<std::string> authors;  // sorted unique
};

Corpus::Corpus() : data_(std::make_shared<Data>()) {}

Corpus Corpus::from_records(std::vector<PaperRecord> papers,
                            std::optional<std::vector<CitationEvent>> events) {
    auto data = std::make_shared<Data>();

    std::size_t with_static = 0;
    for (auto& paper : papers) {
        validate_paper(paper);
        if (paper.static_citations)
            ++with_static;
        const std::string id = paper.id;
        if (!data->papers.emplace(id, std::move(paper)).second)
            throw ValidationError("duplicate paper id " + quoted(id));
    }

    if (with_static > 0 && with_static < data->papers.size())
        throw ValidationError("mixed citation sources: some papers carry static counts, others do not");
    if (with_static > 0 && events.has_value())
        throw ValidationError("mixed citation sources: papers carry static counts and an events source is present");

    if (events) {
        for (const auto& event : *events) {
            if (!data->papers.count(event.paper_id))
                throw ValidationError("unknown paper_id " + quoted(event.paper_id) + " in events");
            if (event.t < 0)
                throw ValidationError("event for " + quoted(event.paper_id) + ": negative time");
            if (event.delta < 1)
                throw ValidationError("event for " + quoted(event.paper_id) + ": delta must be >= 1");
        }
        data->events = std::move(*events);
    } else {
        // Static counts become one implicit event at t=0 per cited paper,
        // so everything downstream is uniformly event-sourced.
        for (const auto& [id, paper] : data->papers) {
            if (paper.static_citations && *paper.static_citations > 0)
                data->events.push_back({id, 0, *paper.static_citations});
        }
    }

    std::stable_sort(data->events.begin(), data->events.end(),
                     [](const CitationEvent& a, const CitationEvent& b) { return a.t < b.t; });

    std::set<std::string> authors;
    for (const auto& [id, paper] : data->papers)
        authors.insert(paper.authors.begin(), paper.authors.end());
    data->authors.assign(authors.begin(), authors.end());

    Corpus corpus;
    corpus.data_ = std::move(data);
    return corpus;
}

const std::map<std::string, PaperRecord>& Corpus::papers() const { return data_->papers; }
const std::vector<CitationEvent>& Corpus::events() const { return data_->events; }
const std::vector<std::string>& Corpus::authors() const { return data_->authors; }

bool Corpus::has_paper(const std::string& id) const { return data_->papers.count(id) > 0; }

bool Corpus::has_author(const std::string& id) const {
    return std::binary_search(data_->authors.begin(), data_->authors.end(), id);
}

bool Corpus::empty() const { return data_->papers.empty(); }

Corpus Corpus::with_event(const CitationEvent& event) const {
    std::vector<PaperRecord> papers;
    papers.reserve(data_->papers.size());
    for (const auto& [id, paper] : data_->papers) {
        PaperRecord copy = paper;
        copy.static_citations.reset();
        papers.push_back(std::move(copy));
    }
    std::vector<CitationEvent> events = data_->events;
    events.push_back(event);
    return from_records(std::move(papers), std::move(events));
}

namespace {

PaperRecord parse_paper_line(const std::string& line, std::size_t line_no,
                             const std::string& source_name) {
    json parsed;
    try {
        parsed = json::parse(line);
    } catch (const json::exception& e) {
        throw ValidationError(source_name + " line " + std::to_string(line_no) +
                                  ": malformed record: " + e.what(),
                              line_no);
    }
    auto fail = [&](const std::string& what) -> ValidationError {
        return ValidationError(source_name + " line " + std::to_string(line_no) + ": " + what,
                               line_no);
    };
    if (!parsed.is_object())
        throw fail("record is not an object");
    for (const auto& key : {"id", "authors", "year", "field"})
        if (!parsed.contains(key))
            throw fail(std::string("missing key \"") + key + "\"");
    for (const auto& [key, value] : parsed.items()) {
        (void)value;
        if (key != "id" && key != "authors" && key != "year" && key != "field" && key != "citations")
            throw fail("unknown key " + quoted(key));
    }

    PaperRecord paper;
    if (!parsed["id"].is_string())
        throw fail("\"id\" must be a string");
    paper.id = parsed["id"].get<std::string>();
    if (!parsed["authors"].is_array())
        throw fail("\"authors\" must be an array");
    for (const auto& author : parsed["authors"]) {
        if (!author.is_string())
            throw fail("\"authors\" entries must be strings");
        paper.authors.push_back(author.get<std::string>());
    }
    if (!parsed["year"].is_number_integer())
        throw fail("\"year\" must be an integer");
    paper.year = parsed["year"].get<int>();
    if (!parsed["field"].is_string())
        throw fail("\"field\" must be a string");
    paper.field = parsed["field"].get<std::string>();
    if (parsed.contains("citations")) {
        if (!parsed["citations"].is_number_integer() || parsed["citations"].get<Count>() < 0)
            throw fail("\"citations\" must be a non-negative integer");
        paper.static_citations = parsed["citations"].get<Count>();
    }
    return paper;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

Time parse_integer(const std::string& text, const std::string& what, std::size_t line_no,
                   const std::string& source_name) {
    std::size_t pos = 0;
    Time value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (text.empty() || pos != text.size())
        throw ValidationError(source_name + " line " + std::to_string(line_no) + ": " + what +
                                  " is not a decimal integer: " + quoted(text),
                              line_no);
    return value;
}

std::vector<CitationEvent> parse_events(std::istream& source, const std::string& source_name) {
    std::vector<CitationEvent> events;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!saw_header) {
            if (line != "paper_id,t,delta")
                throw ValidationError(source_name + " line 1: expected header \"paper_id,t,delta\"",
                                      1);
            saw_header = true;
            continue;
        }
        if (line.empty())
            continue;
        const auto fields = split_fields(line);
        if (fields.size() != 3)
            throw ValidationError(source_name + " line " + std::to_string(line_no) +
                                      ": expected 3 fields, got " + std::to_string(fields.size()),
                                  line_no);
        CitationEvent event;
        event.paper_id = fields[0];
        event.t = parse_integer(fields[1], "t", line_no, source_name);
        event.delta = parse_integer(fields[2], "delta", line_no, source_name);
        if (event.t < 0)
            throw ValidationError(
                source_name + " line " + std::to_string(line_no) + ": t must be >= 0", line_no);
        if (event.delta < 1)
            throw ValidationError(
                source_name + " line " + std::to_string(line_no) + ": delta must be >= 1", line_no);
        events.push_back(std::move(event));
    }
    if (!saw_header)
        throw ValidationError(source_name + ": empty events source, expected header", 1);
    return events;
}

} // namespace

Corpus load_corpus(std::istream& papers_source, std::istream* events_source,
                   const std::string& papers_name, const std::string& events_name) {
    std::vector<PaperRecord> papers;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(papers_source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        papers.push_back(parse_paper_line(line, line_no, papers_name));
    }
    if (papers_source.bad())
        throw IoError("failed reading " + papers_name);

    std::optional<std::vector<CitationEvent>> events;
    if (events_source) {
        events = parse_events(*events_source, events_name);
        if (events_source->bad())
            throw IoError("failed reading " + events_name);
    }
    return Corpus::from_records(std::move(papers), std::move(events));
}

Snapshot snapshot_at(const Corpus& corpus, Time t) {
    if (t < 0)
        throw ValidationError("snapshot time must be >= 0");

    Snapshot snapshot;
    snapshot.t_ = t;
    snapshot.corpus_ = corpus;
    for (const auto& [id, paper] : corpus.papers())
        snapshot.counts_[id] = 0;
    for (const auto& event : corpus.events()) {
        if (event.t > t)
            break; // events are sorted by time
        snapshot.counts_[event.paper_id] += event.delta;
    }

    std::map<std::string, std::vector<AuthorProfile::Entry>> by_author;
    for (const auto& [id, paper] : corpus.papers()) {
        const Count count = snapshot.counts_[id];
        for (const auto& author : paper.authors)
            by_author[author].push_back({id, count});
    }
    for (auto& [author, entries] : by_author)
        snapshot.profiles_.emplace(author, AuthorProfile(author, std::move(entries)));
    return snapshot;
}

Count Snapshot::count_of(const std::string& paper_id) const {
    const auto it = counts_.find(paper_id);
    if (it == counts_.end())
        throw LookupError("unknown paper id \"" + paper_id + "\"");
    return it->second;
}

const PaperRecord& Snapshot::paper(const std::string& paper_id) const {
    const auto it = corpus_.papers().find(paper_id);
    if (it == corpus_.papers().end())
        throw LookupError("unknown paper id \"" + paper_id + "\"");
    return it->second;
}

bool Snapshot::has_author(const std::string& author) const {
    return profiles_.count(author) > 0;
}

const AuthorProfile& author_profile(const Snapshot& snapshot, const std::string& author) {
    const auto it = snapshot.profiles().find(author);
    if (it == snapshot.profiles().end())
        throw LookupError("unknown author id \"" + author + "\"");
    return it->second;
}

void write_papers(std::ostream& out, const Corpus& corpus) {
    for (const auto& [id, paper] : corpus.papers()) {
        // Assembled by hand to pin the documented key order.
        out << "{\"id\":" << json(paper.id).dump() << ",\"authors\":" << json(paper.authors).dump()
            << ",\"year\":" << paper.year << ",\"field\":" << json(paper.field).dump();
        if (paper.static_citations)
            out << ",\"citations\":" << *paper.static_citations;
        out << "}\n";
    }
    if (!out)
        throw IoError("failed writing papers");
}

void write_events(std::ostream& out, const Corpus& corpus) {
    out << "paper_id,t,delta\n";
    for (const auto& event : corpus.events())
        out << event.paper_id << "," << event.t << "," << event.delta << "\n";
    if (!out)
        throw IoError("failed writing events");
}

} // namespace halpha
