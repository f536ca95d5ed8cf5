#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "srl/corpus.hpp"

namespace srl {

// Cleaning rules. Repairs (R2 column drop, R3, R4, R5) run first; the
// deletion checks then run in ascending rule order and the first failing
// rule claims the sentence.
//
//   R1  rows must fit the schema after repairs (ids 1..n, valid heads,
//       uniform role-column count, no parser structure diagnostics)
//   R2  role-column count must equal the predicate count; a surplus of
//       trailing all-"_" columns is dropped, anything else is fatal
//   R3  empty cells become "_"
//   R4  stray "." cells become "_" (FORM/LEMMA of punctuation stay)
//   R5  spaces inside FORM or LEMMA become "_"
//   R6  at least one predicate per sentence
//   R7  at least one non-"_" role cell per sentence
//   R8  sentences with unreadable (encoding) diagnostics are dropped
//   R9  FILLPRED and PRED must agree: "Y" iff a sense is present

enum class CleanAction { repaired, deleted };

struct CleanEvent {
    int sentence_index = 0;  // index in the input corpus
    int rule = 0;            // 1..9
    CleanAction action{};
    std::string detail;

    bool operator==(const CleanEvent&) const = default;
};

struct CleaningReport {
    long total_sentences = 0;
    long repaired_sentences = 0;  // retained sentences that needed a repair
    long deleted_sentences = 0;
    long retained_sentences = 0;
    std::vector<CleanEvent> actions;
};

struct CleanerOptions {
    std::vector<std::string> punct_pos_tags{"PUNC", "PUNCT"};
};

struct CleanResult {
    Corpus corpus;
    CleaningReport report;
};

namespace detail {

inline bool is_punct_pos(const std::string& pos, const CleanerOptions& opt) {
    return std::find(opt.punct_pos_tags.begin(), opt.punct_pos_tags.end(), pos) !=
           opt.punct_pos_tags.end();
}

// R3: every conceptually-empty text cell becomes "_".
inline int repair_empty_cells(Sentence& s) {
    int fixed = 0;
    auto fix = [&fixed](std::string& cell) {
        if (cell.empty()) {
            cell = "_";
            ++fixed;
        }
    };
    for (auto& t : s.tokens) {
        fix(t.form);
        fix(t.lemma);
        fix(t.pos);
        fix(t.feat);
        fix(t.deprel);
        fix(t.pred_sense_raw);
        for (auto& r : t.roles) fix(r);
    }
    return fixed;
}

// R4: "." anywhere but the FORM/LEMMA of a punctuation token is noise.
inline int repair_stray_periods(Sentence& s, const CleanerOptions& opt) {
    int fixed = 0;
    auto fix = [&fixed](std::string& cell) {
        if (cell == ".") {
            cell = "_";
            ++fixed;
        }
    };
    for (auto& t : s.tokens) {
        fix(t.feat);
        fix(t.deprel);
        fix(t.pred_sense_raw);
        for (auto& r : t.roles) fix(r);
        if (!is_punct_pos(t.pos, opt)) {
            fix(t.form);
            fix(t.lemma);
        }
    }
    return fixed;
}

// R5: internal spaces in FORM/LEMMA, e.g. unmerged multi-word forms.
inline int repair_internal_spaces(Sentence& s) {
    int fixed = 0;
    auto fix = [&fixed](std::string& cell) {
        bool touched = false;
        for (auto& ch : cell) {
            if (ch == ' ') {
                ch = '_';
                touched = true;
            }
        }
        if (touched) ++fixed;
    };
    for (auto& t : s.tokens) {
        fix(t.form);
        fix(t.lemma);
    }
    return fixed;
}

inline std::size_t predicate_count(const Sentence& s) {
    std::size_t n = 0;
    for (const auto& t : s.tokens)
        if (t.fill_pred) ++n;
    return n;
}

inline bool role_columns_uniform(const Sentence& s) {
    for (const auto& t : s.tokens)
        if (t.roles.size() != s.tokens.front().roles.size()) return false;
    return true;
}

// R2 repair: drop trailing role columns that are "_" on every token while
// there are more columns than predicates. Returns the number dropped.
inline int drop_trailing_empty_columns(Sentence& s) {
    const std::size_t npred = predicate_count(s);
    int dropped = 0;
    while (!s.tokens.empty() && s.tokens.front().roles.size() > npred) {
        const std::size_t last = s.tokens.front().roles.size() - 1;
        const bool all_empty = std::all_of(s.tokens.begin(), s.tokens.end(),
                                           [&](const TokenRecord& t) { return t.roles[last] == "_"; });
        if (!all_empty) break;
        for (auto& t : s.tokens) t.roles.pop_back();
        ++dropped;
    }
    return dropped;
}

inline bool structure_ok(const Sentence& s, bool has_structural_diag) {
    if (has_structural_diag || s.tokens.empty()) return false;
    const int n = static_cast<int>(s.tokens.size());
    for (int i = 0; i < n; ++i) {
        const auto& t = s.tokens[i];
        if (t.id != i + 1) return false;
        if (t.head < 0 || t.head > n || t.head == t.id) return false;
    }
    return role_columns_uniform(s);
}

}  // namespace detail

// Applies the rule set to every sentence and reports each action. The
// parse diagnostics feed R1 (structural codes) and R8 (encoding codes).
// Cleaning a cleaned corpus again is a no-op: the report of the second
// pass carries zero actions.
inline CleanResult clean_corpus(const Corpus& corpus,
                                const std::vector<ParseDiagnostic>& diagnostics = {},
                                const CleanerOptions& options = {}) {
    CleanResult result;
    auto& report = result.report;
    report.total_sentences = static_cast<long>(corpus.sentences.size());

    std::set<int> structural, unreadable;
    for (const auto& d : diagnostics) {
        if (d.code == DiagCode::unreadable)
            unreadable.insert(d.sentence_index);
        else
            structural.insert(d.sentence_index);
    }

    for (int idx = 0; idx < static_cast<int>(corpus.sentences.size()); ++idx) {
        Sentence s = corpus.sentences[idx];
        bool repaired = false;

        auto note_repair = [&](int rule, int count, const char* what) {
            if (count <= 0) return;
            repaired = true;
            report.actions.push_back({idx, rule, CleanAction::repaired,
                                      std::to_string(count) + " " + what});
        };
        note_repair(3, detail::repair_empty_cells(s), "empty cell(s) set to \"_\"");
        note_repair(4, detail::repair_stray_periods(s, options), "stray \".\" cell(s) set to \"_\"");
        note_repair(5, detail::repair_internal_spaces(s), "FORM/LEMMA cell(s) with spaces repaired");
        if (detail::role_columns_uniform(s))
            note_repair(2, detail::drop_trailing_empty_columns(s), "trailing all-\"_\" role column(s) dropped");

        const std::size_t npred = detail::predicate_count(s);
        int delete_rule = 0;
        std::string why;
        if (!detail::structure_ok(s, structural.count(idx) > 0)) {
            delete_rule = 1;
            why = "row structure violates the schema";
        } else if (s.tokens.front().roles.size() != npred) {
            delete_rule = 2;
            why = "role-column count " + std::to_string(s.tokens.front().roles.size()) +
                  " != predicate count " + std::to_string(npred);
        } else if (npred == 0) {
            delete_rule = 6;
            why = "no predicate in sentence";
        } else if (std::all_of(s.tokens.begin(), s.tokens.end(), [](const TokenRecord& t) {
                       return std::all_of(t.roles.begin(), t.roles.end(),
                                          [](const std::string& r) { return r == "_"; });
                   })) {
            delete_rule = 7;
            why = "no semantic role annotation";
        } else if (unreadable.count(idx) > 0) {
            delete_rule = 8;
            why = "sentence contains unreadable byte sequences";
        } else {
            for (const auto& t : s.tokens) {
                if (t.fill_pred != (t.pred_sense_raw != "_")) {
                    delete_rule = 9;
                    why = "token " + std::to_string(t.id) +
                          ": FILLPRED and PRED columns disagree";
                    break;
                }
            }
        }

        if (delete_rule != 0) {
            report.actions.push_back({idx, delete_rule, CleanAction::deleted, why});
            ++report.deleted_sentences;
        } else {
            if (repaired) ++report.repaired_sentences;
            result.corpus.sentences.push_back(std::move(s));
        }
    }
    report.retained_sentences = report.total_sentences - report.deleted_sentences;
    return result;
}

// Plain-text report: the four counters followed by the action log.
inline std::string render_cleaning_report(const CleaningReport& r) {
    std::ostringstream out;
    out << "Number of all sentences in the dataset\t" << r.total_sentences << '\n'
        << "Number of repaired sentences\t" << r.repaired_sentences << '\n'
        << "Number of deleted sentences\t" << r.deleted_sentences << '\n'
        << "Number of sentences used as input data\t" << r.retained_sentences << '\n'
        << '\n';
    for (const auto& a : r.actions) {
        out << "sentence " << a.sentence_index << "\tR" << a.rule << '\t'
            << (a.action == CleanAction::repaired ? "repaired" : "deleted") << '\t'
            << a.detail << '\n';
    }
    return out.str();
}

}  // namespace srl
