#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "srl/corpus.hpp"
#include "srl/error.hpp"

#include "json.hpp"

namespace srl {

// One predicate's view of a sentence: the word sequence, a single-token
// role label per word, and the predicate's position and sense.
struct SrlSample {
    std::vector<std::string> seq_words;
    std::vector<std::string> bio;  // "O", "B-V", "B-NVE" or "B-"+role
    int pred_index = 0;            // 0-based position of the predicate
    std::string pred_sense;        // final '#'-segment of the raw sense
    int sentence_ref = 0;          // index into the source corpus
    int predicate_column = 0;      // which role column this sample realizes

    bool operator==(const SrlSample&) const = default;
};

enum class PredicateMode { verbs_only, all_predicates };

struct SampleGenOptions {
    std::vector<std::string> verb_pos_tags{"V"};
};

struct SampleCounts {
    long verbs_only = 0;
    long all_predicates = 0;
};

// "B-N-V" is an accepted alias for the canonical noun/adjective-predicate
// label "B-NVE"; the "O" label is case-insensitive on input.
inline std::string canonical_bio_label(std::string label) {
    if (label == "B-N-V") return "B-NVE";
    if (label.size() == 1 && (label[0] == 'o' || label[0] == 'O')) return "O";
    return label;
}

// Sense segment after the last '#', e.g. the raw lemma decomposition
// root#past#present keeps only the final segment.
inline std::string last_sense_segment(const std::string& raw) {
    const auto pos = raw.rfind('#');
    return pos == std::string::npos ? raw : raw.substr(pos + 1);
}

namespace detail {

inline bool is_verb_pos(const std::string& pos, const SampleGenOptions& opt) {
    return std::find(opt.verb_pos_tags.begin(), opt.verb_pos_tags.end(), pos) !=
           opt.verb_pos_tags.end();
}

}  // namespace detail

// Explodes each cleaned sentence into one sample per predicate column.
// Requires the cleaner post-conditions: role-column count equals the
// predicate count on every sentence.
inline std::vector<SrlSample> generate_samples(const Corpus& corpus, PredicateMode mode,
                                               const SampleGenOptions& options = {}) {
    std::vector<SrlSample> samples;
    for (int s_i = 0; s_i < static_cast<int>(corpus.sentences.size()); ++s_i) {
        const auto& sentence = corpus.sentences[s_i];
        std::vector<int> predicate_positions;
        for (int i = 0; i < static_cast<int>(sentence.tokens.size()); ++i)
            if (sentence.tokens[i].fill_pred) predicate_positions.push_back(i);

        const std::size_t columns =
            sentence.tokens.empty() ? 0 : sentence.tokens.front().roles.size();
        if (columns != predicate_positions.size())
            throw ContractError("sentence " + std::to_string(s_i) + " has " +
                                std::to_string(columns) + " role columns but " +
                                std::to_string(predicate_positions.size()) +
                                " predicates; run the cleaner first");

        for (int col = 0; col < static_cast<int>(columns); ++col) {
            const int pred_pos = predicate_positions[col];
            const auto& pred_tok = sentence.tokens[pred_pos];
            const bool is_verb = detail::is_verb_pos(pred_tok.pos, options);
            if (mode == PredicateMode::verbs_only && !is_verb) continue;

            SrlSample sample;
            sample.sentence_ref = s_i;
            sample.predicate_column = col;
            sample.pred_index = pred_pos;
            sample.pred_sense = last_sense_segment(pred_tok.pred_sense_raw);
            sample.seq_words.reserve(sentence.tokens.size());
            sample.bio.reserve(sentence.tokens.size());
            for (const auto& t : sentence.tokens) {
                sample.seq_words.push_back(t.form);
                const auto& role = t.roles[col];
                sample.bio.push_back(role == "_" ? "O" : "B-" + role);
            }
            sample.bio[pred_pos] = is_verb ? "B-V" : "B-NVE";
            samples.push_back(std::move(sample));
        }
    }
    return samples;
}

inline SampleCounts count_samples(const Corpus& corpus, const SampleGenOptions& options = {}) {
    SampleCounts counts;
    for (const auto& sentence : corpus.sentences) {
        for (const auto& t : sentence.tokens) {
            if (!t.fill_pred) continue;
            ++counts.all_predicates;
            if (detail::is_verb_pos(t.pos, options)) ++counts.verbs_only;
        }
    }
    return counts;
}

// --- samples file (JSON lines) ----------------------------------------
//
// First line: {"format":"srl-samples","version":1,"config":{...}}
// Then one object per sample.

inline constexpr int kSamplesFormatVersion = 1;

inline void write_samples(std::ostream& out, const std::vector<SrlSample>& samples,
                          const nlohmann::json& config = nlohmann::json::object()) {
    nlohmann::json header{{"format", "srl-samples"},
                          {"version", kSamplesFormatVersion},
                          {"config", config}};
    out << header.dump() << '\n';
    for (const auto& s : samples) {
        nlohmann::json row{{"seq_words", s.seq_words},     {"bio", s.bio},
                           {"pred_index", s.pred_index},   {"pred_sense", s.pred_sense},
                           {"sentence_ref", s.sentence_ref},
                           {"predicate_column", s.predicate_column}};
        out << row.dump() << '\n';
    }
}

inline std::vector<SrlSample> read_samples(std::istream& in,
                                           nlohmann::json* config_out = nullptr) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("samples file is empty");
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("samples file header is not JSON: ") + e.what());
    }
    if (header.value("format", "") != "srl-samples")
        throw FormatError("not a srl-samples file (format tag \"" +
                          header.value("format", std::string{}) + "\")");
    if (header.value("version", -1) != kSamplesFormatVersion)
        throw FormatError("srl-samples version mismatch: file has " +
                          std::to_string(header.value("version", -1)) + ", expected " +
                          std::to_string(kSamplesFormatVersion));
    if (config_out) *config_out = header.value("config", nlohmann::json::object());

    std::vector<SrlSample> samples;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json row;
        try {
            row = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw FormatError("samples file line " + std::to_string(line_no) +
                              " is not JSON: " + e.what());
        }
        SrlSample s;
        s.seq_words = row.at("seq_words").get<std::vector<std::string>>();
        s.bio = row.at("bio").get<std::vector<std::string>>();
        for (auto& label : s.bio) label = canonical_bio_label(std::move(label));
        s.pred_index = row.at("pred_index").get<int>();
        s.pred_sense = row.at("pred_sense").get<std::string>();
        s.sentence_ref = row.value("sentence_ref", 0);
        s.predicate_column = row.value("predicate_column", 0);
        if (s.bio.size() != s.seq_words.size())
            throw FormatError("samples file line " + std::to_string(line_no) +
                              ": bio and seq_words lengths differ");
        if (s.pred_index < 0 || s.pred_index >= static_cast<int>(s.seq_words.size()))
            throw FormatError("samples file line " + std::to_string(line_no) +
                              ": pred_index out of range");
        samples.push_back(std::move(s));
    }
    return samples;
}

}  // namespace srl
