#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "srl/binio.hpp"
#include "srl/error.hpp"
#include "srl/samples.hpp"
#include "srl/wordpiece.hpp"

namespace srl {

// Bijective label <-> id map. [UNK] and [PAD] always take ids 0 and 1,
// "X" takes 2; everything else is numbered by first occurrence in the
// sample stream, which makes the map deterministic for a given input order.
struct LabelMap {
    static constexpr int unk_id = 0;
    static constexpr int pad_id = 1;

    std::vector<std::string> id_to_label;
    std::unordered_map<std::string, int> label_to_id;

    std::size_t size() const { return id_to_label.size(); }

    int id(const std::string& label) const {
        const auto it = label_to_id.find(label);
        if (it == label_to_id.end()) throw UnknownLabelError(label);
        return it->second;
    }
    int id_or_unk(const std::string& label) const {
        const auto it = label_to_id.find(label);
        return it == label_to_id.end() ? unk_id : it->second;
    }
    bool contains(const std::string& label) const {
        return label_to_id.find(label) != label_to_id.end();
    }
    const std::string& label(int id) const {
        if (id < 0 || id >= static_cast<int>(id_to_label.size()))
            throw Error("label id " + std::to_string(id) + " out of range");
        return id_to_label[static_cast<std::size_t>(id)];
    }

    void add(const std::string& label) {
        if (label_to_id.emplace(label, static_cast<int>(id_to_label.size())).second)
            id_to_label.push_back(label);
    }
};

inline LabelMap build_label_map(std::span<const SrlSample> samples) {
    LabelMap map;
    map.add(std::string(kUnkToken));
    map.add(std::string(kPadToken));
    map.add("X");
    for (const auto& s : samples)
        for (const auto& label : s.bio) map.add(label);
    map.add("O");  // usually already present; guaranteed either way
    return map;
}

// The four fixed-length input vectors of one sample, all of length L
// (the dataset-global maximum), right-padded.
struct EncodedSample {
    std::vector<std::int32_t> token_ids;
    std::vector<std::int32_t> label_ids;
    std::vector<std::int32_t> pred_indicator;
    std::vector<std::int32_t> attention_mask;
    std::int32_t true_length = 0;

    bool operator==(const EncodedSample&) const = default;
};

// Builds the numeric vectors for one tokenized sample. The predicate
// indicator marks only the first piece of the predicate word. Throws
// TooLongError when the pieces do not fit and UnknownLabelError for labels
// outside the map unless unknown_label_to_unk is set (used when encoding
// held-out data against a training-fold map).
inline EncodedSample encode_sample(const AlignedTokenization& aligned, const SrlSample& sample,
                                   const Vocabulary& vocab, const LabelMap& labels, int max_len,
                                   bool unknown_label_to_unk = false) {
    const std::size_t n = aligned.size();
    if (n > static_cast<std::size_t>(max_len))
        throw TooLongError(n, static_cast<std::size_t>(max_len));

    EncodedSample enc;
    enc.true_length = static_cast<std::int32_t>(n);
    enc.token_ids.assign(static_cast<std::size_t>(max_len), vocab.pad_id);
    enc.label_ids.assign(static_cast<std::size_t>(max_len), LabelMap::pad_id);
    enc.pred_indicator.assign(static_cast<std::size_t>(max_len), 0);
    enc.attention_mask.assign(static_cast<std::size_t>(max_len), 0);

    bool marked = false;
    for (std::size_t i = 0; i < n; ++i) {
        const int tok = vocab.id(aligned.pieces[i]);
        if (tok < 0)
            throw ContractError("piece \"" + aligned.pieces[i] + "\" is not in the vocabulary");
        enc.token_ids[i] = tok;
        enc.label_ids[i] = unknown_label_to_unk ? labels.id_or_unk(aligned.labels[i])
                                                : labels.id(aligned.labels[i]);
        enc.attention_mask[i] = 1;
        if (!marked && aligned.word_index[i] == sample.pred_index && aligned.head_mask[i] == 1) {
            enc.pred_indicator[i] = 1;
            marked = true;
        }
    }
    if (!marked)
        throw ContractError("predicate word " + std::to_string(sample.pred_index) +
                            " has no head piece");
    return enc;
}

inline int compute_max_len(std::span<const AlignedTokenization> aligned) {
    std::size_t max = 0;
    for (const auto& a : aligned) max = std::max(max, a.size());
    return static_cast<int>(max);
}

// --- label map file ----------------------------------------------------
//
// "label<TAB>id" per line; '#' lines are provenance comments.

inline void save_label_map(std::ostream& out, const LabelMap& map,
                           const std::string& provenance = {}) {
    out << "# srl-labelmap v1\n";
    if (!provenance.empty()) out << "# config: " << provenance << '\n';
    for (std::size_t i = 0; i < map.id_to_label.size(); ++i)
        out << map.id_to_label[i] << '\t' << i << '\n';
}

inline LabelMap load_label_map(std::istream& in) {
    LabelMap map;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw FormatError("label map line " + std::to_string(line_no) + " has no tab");
        const std::string label = line.substr(0, tab);
        int id = -1;
        if (!detail::parse_int(line.substr(tab + 1), id) ||
            id != static_cast<int>(map.id_to_label.size()))
            throw FormatError("label map line " + std::to_string(line_no) +
                              ": ids must be 0,1,2,... in order");
        if (map.contains(label))
            throw FormatError("label map line " + std::to_string(line_no) + ": duplicate label \"" +
                              label + "\"");
        map.add(label);
    }
    if (map.size() < 2 || map.label(LabelMap::unk_id) != kUnkToken ||
        map.label(LabelMap::pad_id) != kPadToken)
        throw FormatError("label map must start with [UNK] -> 0 and [PAD] -> 1");
    return map;
}

// --- encoded dataset file ------------------------------------------------
//
// Binary, little-endian:
//   magic "SRLENC01" (8 bytes)
//   u32 version
//   u32 max_len, u32 vocab_size, u32 num_labels
//   u32 pad_token_id, u32 pad_label_id
//   bytes provenance (u32 length prefix; JSON of the resolved config)
//   u64 sample count
//   per sample: u32 sequence length (== max_len), then the four i32 arrays
//   (token_ids, label_ids, pred_indicator, attention_mask), then
//   u32 true_length.

inline constexpr char kEncodedMagic[9] = "SRLENC01";
inline constexpr std::uint32_t kEncodedVersion = 1;

struct EncodedDataset {
    std::int32_t max_len = 0;
    std::int32_t vocab_size = 0;
    std::int32_t num_labels = 0;
    std::int32_t pad_token_id = 0;
    std::int32_t pad_label_id = LabelMap::pad_id;
    std::string provenance;  // JSON text
    std::vector<EncodedSample> samples;
};

inline void write_encoded_dataset(std::ostream& out, const EncodedDataset& ds) {
    out.write(kEncodedMagic, 8);
    binio::put_u32(out, kEncodedVersion);
    binio::put_u32(out, static_cast<std::uint32_t>(ds.max_len));
    binio::put_u32(out, static_cast<std::uint32_t>(ds.vocab_size));
    binio::put_u32(out, static_cast<std::uint32_t>(ds.num_labels));
    binio::put_u32(out, static_cast<std::uint32_t>(ds.pad_token_id));
    binio::put_u32(out, static_cast<std::uint32_t>(ds.pad_label_id));
    binio::put_bytes(out, ds.provenance);
    binio::put_u64(out, ds.samples.size());
    for (const auto& s : ds.samples) {
        binio::put_u32(out, static_cast<std::uint32_t>(s.token_ids.size()));
        for (auto v : s.token_ids) binio::put_i32(out, v);
        for (auto v : s.label_ids) binio::put_i32(out, v);
        for (auto v : s.pred_indicator) binio::put_i32(out, v);
        for (auto v : s.attention_mask) binio::put_i32(out, v);
        binio::put_u32(out, static_cast<std::uint32_t>(s.true_length));
    }
}

inline EncodedDataset read_encoded_dataset(std::istream& in) {
    char magic[8];
    if (!in.read(magic, 8) || std::string_view(magic, 8) != std::string_view(kEncodedMagic, 8))
        throw FormatError("not an encoded-dataset file (bad magic)");
    const auto version = binio::get_u32(in);
    if (version != kEncodedVersion)
        throw FormatError("encoded-dataset version mismatch: file has " +
                          std::to_string(version) + ", expected " +
                          std::to_string(kEncodedVersion));
    EncodedDataset ds;
    ds.max_len = static_cast<std::int32_t>(binio::get_u32(in));
    ds.vocab_size = static_cast<std::int32_t>(binio::get_u32(in));
    ds.num_labels = static_cast<std::int32_t>(binio::get_u32(in));
    ds.pad_token_id = static_cast<std::int32_t>(binio::get_u32(in));
    ds.pad_label_id = static_cast<std::int32_t>(binio::get_u32(in));
    ds.provenance = binio::get_bytes(in);
    const auto count = binio::get_u64(in);
    ds.samples.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto len = binio::get_u32(in);
        if (len != static_cast<std::uint32_t>(ds.max_len))
            throw FormatError("sample " + std::to_string(i) + " has length " +
                              std::to_string(len) + ", header says " +
                              std::to_string(ds.max_len));
        EncodedSample s;
        auto read_vec = [&](std::vector<std::int32_t>& v) {
            v.resize(len);
            for (auto& x : v) x = binio::get_i32(in);
        };
        read_vec(s.token_ids);
        read_vec(s.label_ids);
        read_vec(s.pred_indicator);
        read_vec(s.attention_mask);
        s.true_length = static_cast<std::int32_t>(binio::get_u32(in));
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

// Positions eligible for word-level scoring: attended, between the
// [CLS]/[SEP] sentinels, and not a continuation piece. Gold continuations
// carry "X", so this recovers exactly the head positions.
inline std::vector<std::uint8_t> head_positions(const EncodedSample& s, const LabelMap& labels) {
    const int x_id = labels.id("X");
    std::vector<std::uint8_t> mask(s.token_ids.size(), 0);
    for (int i = 1; i + 1 < s.true_length; ++i)
        if (s.attention_mask[static_cast<std::size_t>(i)] == 1 &&
            s.label_ids[static_cast<std::size_t>(i)] != x_id)
            mask[static_cast<std::size_t>(i)] = 1;
    return mask;
}

}  // namespace srl
