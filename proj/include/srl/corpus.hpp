#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "srl/utf8.hpp"

namespace srl {

// Column positions of the fixed fields in a corpus row. The canonical
// layout has nine fixed columns (ID FORM LEMMA POS FEAT HEAD DEPREL
// FILLPRED PRED) followed by one role column per predicate. The
// conll2009_paper layout maps files that carry an extra predicted-POS
// column and put the dependency relation in the PHEAD slot.
struct ColumnLayout {
    int id = 0;
    int form = 1;
    int lemma = 2;
    int pos = 3;
    int feat = 4;
    int head = 5;
    int deprel = 6;
    int fillpred = 7;
    int pred = 8;
    int first_role = 9;

    static ColumnLayout canonical() { return {}; }

    static ColumnLayout conll2009_paper() {
        ColumnLayout l;
        l.id = 0;
        l.form = 1;
        l.lemma = 2;
        l.pos = 3;   // gold POS; the predicted POS in column 4 is dropped
        l.feat = 5;
        l.head = 6;
        l.deprel = 7;  // the PHEAD column holds relation values in this data
        l.fillpred = 8;
        l.pred = 9;
        l.first_role = 10;
        return l;
    }
};

struct TokenRecord {
    int id = 0;           // 1-based position in the sentence
    std::string form;
    std::string lemma;
    std::string pos;
    std::string feat = "_";
    int head = 0;         // 0 = root; -1 marks an unparseable cell
    std::string deprel;
    bool fill_pred = false;          // raw cell was "Y"
    std::string pred_sense_raw = "_";
    std::vector<std::string> roles;  // one cell per predicate column

    bool operator==(const TokenRecord&) const = default;
};

struct Sentence {
    std::vector<TokenRecord> tokens;
    long source_line = 0;  // first line in the source file, for diagnostics

    // source_line is bookkeeping, not content.
    bool operator==(const Sentence& o) const { return tokens == o.tokens; }
};

struct Corpus {
    std::vector<Sentence> sentences;
    bool operator==(const Corpus&) const = default;
};

enum class DiagCode {
    unreadable,        // line is not valid UTF-8
    bad_column_count,  // fewer cells than the fixed schema requires
    bad_id,            // ID cell is not a positive integer
    bad_head,          // HEAD cell is not a non-negative integer
};

inline const char* to_string(DiagCode c) {
    switch (c) {
        case DiagCode::unreadable: return "unreadable";
        case DiagCode::bad_column_count: return "bad_column_count";
        case DiagCode::bad_id: return "bad_id";
        case DiagCode::bad_head: return "bad_head";
    }
    return "?";
}

struct ParseDiagnostic {
    long line = 0;           // 1-based line number in the input
    int sentence_index = 0;  // index of the affected sentence in the corpus
    DiagCode code{};
    std::string message;
};

struct ParseResult {
    Corpus corpus;
    std::vector<ParseDiagnostic> diagnostics;
};

namespace detail {

inline bool parse_int(std::string_view s, int& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto r = std::from_chars(begin, end, out);
    return r.ec == std::errc{} && r.ptr == end;
}

inline std::vector<std::string> split_tabs(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            cells.emplace_back(line.substr(start));
            return cells;
        }
        cells.emplace_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

}  // namespace detail

// Parses a tab-separated, blank-line-delimited corpus. Never throws on bad
// data: malformed rows are kept with sentinel field values and reported as
// diagnostics so the cleaner can decide their fate. Lines starting with '#'
// are provenance comments and are skipped.
inline ParseResult parse_corpus(std::istream& in,
                                const ColumnLayout& layout = ColumnLayout::canonical()) {
    ParseResult result;
    std::vector<TokenRecord> tokens;
    long first_line = 0;
    std::vector<ParseDiagnostic> pending;  // diagnostics for the open sentence

    auto flush = [&] {
        if (tokens.empty()) return;
        const int index = static_cast<int>(result.corpus.sentences.size());
        for (auto& d : pending) d.sentence_index = index;
        result.diagnostics.insert(result.diagnostics.end(), pending.begin(), pending.end());
        pending.clear();
        result.corpus.sentences.push_back(Sentence{std::move(tokens), first_line});
        tokens.clear();
    };

    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        if (line.front() == '#') continue;
        if (tokens.empty()) first_line = line_no;

        if (!utf8::valid(line)) {
            pending.push_back({line_no, 0, DiagCode::unreadable, "line is not valid UTF-8"});
        }

        auto cells = detail::split_tabs(line);
        if (static_cast<int>(cells.size()) < layout.first_role) {
            pending.push_back({line_no, 0, DiagCode::bad_column_count,
                               "expected at least " + std::to_string(layout.first_role) +
                                   " columns, got " + std::to_string(cells.size())});
            cells.resize(static_cast<std::size_t>(layout.first_role));
        }

        TokenRecord t;
        if (!detail::parse_int(cells[layout.id], t.id) || t.id < 1) {
            pending.push_back({line_no, 0, DiagCode::bad_id,
                               "ID cell \"" + cells[layout.id] + "\" is not a positive integer"});
            t.id = 0;
        }
        t.form = cells[layout.form];
        t.lemma = cells[layout.lemma];
        t.pos = cells[layout.pos];
        t.feat = cells[layout.feat];
        if (!detail::parse_int(cells[layout.head], t.head) || t.head < 0) {
            pending.push_back({line_no, 0, DiagCode::bad_head,
                               "HEAD cell \"" + cells[layout.head] +
                                   "\" is not a non-negative integer"});
            t.head = -1;
        }
        t.deprel = cells[layout.deprel];
        t.fill_pred = cells[layout.fillpred] == "Y";
        t.pred_sense_raw = cells[layout.pred];
        t.roles.assign(cells.begin() + layout.first_role, cells.end());
        tokens.push_back(std::move(t));
    }
    flush();
    return result;
}

inline ParseResult parse_corpus(std::string_view text,
                                const ColumnLayout& layout = ColumnLayout::canonical()) {
    std::istringstream in{std::string(text)};
    return parse_corpus(in, layout);
}

// Writes the canonical nine-fixed-column layout; conceptually empty cells
// come out as "_". Each sentence ends with one blank line, so serializing
// and reparsing a cleaned corpus is the identity.
inline void serialize_corpus(const Corpus& corpus, std::ostream& out) {
    auto cell = [](const std::string& s) -> const std::string& {
        static const std::string underscore = "_";
        return s.empty() ? underscore : s;
    };
    for (const auto& sentence : corpus.sentences) {
        for (const auto& t : sentence.tokens) {
            out << t.id << '\t' << cell(t.form) << '\t' << cell(t.lemma) << '\t'
                << cell(t.pos) << '\t' << cell(t.feat) << '\t' << t.head << '\t'
                << cell(t.deprel) << '\t' << (t.fill_pred ? "Y" : "_") << '\t'
                << cell(t.pred_sense_raw);
            for (const auto& r : t.roles) out << '\t' << cell(r);
            out << '\n';
        }
        out << '\n';
    }
}

inline std::string serialize_corpus(const Corpus& corpus) {
    std::ostringstream out;
    serialize_corpus(corpus, out);
    return out.str();
}

}  // namespace srl
