#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace zscode {

/// Base for data-dependent failures (corrupt codewords, malformed streams).
/// API misuse (bad lengths, odd n, out-of-range k) throws
/// std::invalid_argument / std::out_of_range instead.
class CodecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parity prefix does not correspond to any table/schedule entry.
class UnknownParityWordError : public CodecError {
public:
    explicit UnknownParityWordError(std::string word_bits,
                                    std::optional<std::uint64_t> word_index = std::nullopt);
    const std::string& word_bits() const noexcept { return word_bits_; }
    std::optional<std::uint64_t> word_index() const noexcept { return word_index_; }

private:
    std::string word_bits_;
    std::optional<std::uint64_t> word_index_;
};

/// Codeword disparity exceeds the configured |v| <= 2d bound.
class BoundViolationError : public CodecError {
public:
    BoundViolationError(int disparity, int bound,
                        std::optional<std::uint64_t> word_index = std::nullopt);
    int disparity() const noexcept { return disparity_; }
    int bound() const noexcept { return bound_; }
    std::optional<std::uint64_t> word_index() const noexcept { return word_index_; }

private:
    int disparity_;
    int bound_;
    std::optional<std::uint64_t> word_index_;
};

/// Stream input whose bit length is not a multiple of the data width.
class PartialWordError : public CodecError {
public:
    using CodecError::CodecError;
};

/// Malformed container: bad magic, version, header fields, or framing.
class FormatError : public CodecError {
public:
    using CodecError::CodecError;
};

/// Stream ends before the advertised payload is complete.
class TruncationError : public CodecError {
public:
    using CodecError::CodecError;
};

/// No transition placement satisfies the per-weight capacities. Indicates a
/// sizing bug; never expected for parameters the sizing search accepted.
class ScheduleConstructionError : public CodecError {
public:
    using CodecError::CodecError;
};

} // namespace zscode
