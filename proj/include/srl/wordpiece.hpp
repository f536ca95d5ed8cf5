#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "srl/error.hpp"
#include "srl/samples.hpp"
#include "srl/utf8.hpp"

namespace srl {

inline constexpr std::string_view kUnkToken = "[UNK]";
inline constexpr std::string_view kClsToken = "[CLS]";
inline constexpr std::string_view kSepToken = "[SEP]";
inline constexpr std::string_view kPadToken = "[PAD]";
inline constexpr std::string_view kContinuationPrefix = "##";

// Plain-text vocabulary, one token per line; the line number is the id.
struct Vocabulary {
    std::vector<std::string> entries;
    std::unordered_map<std::string, int> index;
    int unk_id = -1, cls_id = -1, sep_id = -1, pad_id = -1;

    bool contains(std::string_view token) const {
        return index.find(std::string(token)) != index.end();
    }
    // -1 when absent.
    int id(std::string_view token) const {
        const auto it = index.find(std::string(token));
        return it == index.end() ? -1 : it->second;
    }
    std::size_t size() const { return entries.size(); }
};

inline Vocabulary make_vocab(std::vector<std::string> entries) {
    Vocabulary v;
    v.entries = std::move(entries);
    for (int i = 0; i < static_cast<int>(v.entries.size()); ++i) {
        const auto [it, inserted] = v.index.emplace(v.entries[i], i);
        if (!inserted)
            throw VocabError("duplicate vocabulary entry \"" + v.entries[i] + "\" at line " +
                             std::to_string(i + 1) + " (first at line " +
                             std::to_string(it->second + 1) + ")");
    }
    auto require = [&v](std::string_view tok) {
        const int id = v.id(tok);
        if (id < 0)
            throw VocabError("vocabulary is missing the special token " + std::string(tok));
        return id;
    };
    v.unk_id = require(kUnkToken);
    v.cls_id = require(kClsToken);
    v.sep_id = require(kSepToken);
    v.pad_id = require(kPadToken);
    return v;
}

inline Vocabulary load_vocab(std::istream& in) {
    std::vector<std::string> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        entries.push_back(line);
    }
    // A trailing newline produces no extra entry; an empty final line would
    // have been a duplicate of any earlier empty line anyway.
    if (!entries.empty() && entries.back().empty()) entries.pop_back();
    return make_vocab(std::move(entries));
}

inline Vocabulary load_vocab(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_vocab(in);
}

// Greedy longest-match-first segmentation. Repeatedly takes the longest
// code-point prefix of the remaining suffix that is in the vocabulary
// ("##"-prefixed when not word-initial). A word that cannot be fully
// segmented collapses to a single [UNK].
inline std::vector<std::string> tokenize_word(std::string_view word, const Vocabulary& vocab) {
    const auto bounds = utf8::boundaries(word);
    const std::size_t nchars = bounds.size() - 1;
    std::vector<std::string> pieces;
    std::size_t start = 0;
    while (start < nchars) {
        std::string match;
        for (std::size_t end = nchars; end > start; --end) {
            std::string candidate;
            if (start > 0) candidate = kContinuationPrefix;
            candidate.append(word.substr(bounds[start], bounds[end] - bounds[start]));
            if (vocab.contains(candidate)) {
                match = std::move(candidate);
                start = end;
                break;
            }
        }
        if (match.empty()) return {std::string(kUnkToken)};
        pieces.push_back(std::move(match));
    }
    return pieces;
}

// Pieces with per-piece labels: the first piece of each word keeps the
// word's label, continuations get "X", and the added [CLS]/[SEP] carry the
// sentinel label "O". word_index maps a piece back to its source word
// (-1 for [CLS]/[SEP]).
struct AlignedTokenization {
    std::vector<std::string> pieces;
    std::vector<std::string> labels;
    std::vector<std::uint8_t> head_mask;
    std::vector<int> word_index;

    std::size_t size() const { return pieces.size(); }
};

inline AlignedTokenization tokenize_with_labels(const SrlSample& sample,
                                                const Vocabulary& vocab) {
    AlignedTokenization out;
    out.pieces.emplace_back(kClsToken);
    out.labels.emplace_back("O");
    out.head_mask.push_back(0);
    out.word_index.push_back(-1);
    for (int k = 0; k < static_cast<int>(sample.seq_words.size()); ++k) {
        auto pieces = tokenize_word(sample.seq_words[k], vocab);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            out.pieces.push_back(std::move(pieces[i]));
            out.labels.push_back(i == 0 ? sample.bio[k] : "X");
            out.head_mask.push_back(i == 0 ? 1 : 0);
            out.word_index.push_back(k);
        }
    }
    out.pieces.emplace_back(kSepToken);
    out.labels.emplace_back("O");
    out.head_mask.push_back(0);
    out.word_index.push_back(-1);
    return out;
}

// Strips continuation prefixes and joins each word's pieces back together.
// Words that collapsed to [UNK] cannot be restored.
inline std::string detokenize_word(const AlignedTokenization& aligned, int word) {
    std::string out;
    for (std::size_t i = 0; i < aligned.size(); ++i) {
        if (aligned.word_index[i] != word) continue;
        std::string_view piece = aligned.pieces[i];
        if (aligned.head_mask[i] == 0 && piece.substr(0, 2) == kContinuationPrefix)
            piece.remove_prefix(2);
        out += piece;
    }
    return out;
}

}  // namespace srl
