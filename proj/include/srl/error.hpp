#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace srl {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// File contents do not match the expected format or version.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

// Vocabulary file problems (duplicates, missing special tokens).
class VocabError : public Error {
public:
    explicit VocabError(const std::string& what) : Error(what) {}
};

// A label was requested that the label map does not contain.
class UnknownLabelError : public Error {
public:
    explicit UnknownLabelError(const std::string& label)
        : Error("unknown label: \"" + label + "\""), label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

// A piece sequence does not fit the configured maximum length.
// Carries the length that would have been required.
class TooLongError : public Error {
public:
    TooLongError(std::size_t required, std::size_t max_len)
        : Error("sequence of " + std::to_string(required) +
                " pieces exceeds maximum length " + std::to_string(max_len)),
          required_(required) {}
    std::size_t required() const { return required_; }

private:
    std::size_t required_;
};

// An upstream stage's contract was violated (programming error, not data).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& what) : Error(what) {}
};

// Training produced a non-finite loss.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& what) : Error(what) {}
};

}  // namespace srl
