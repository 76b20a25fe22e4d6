#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zscode/bitword.hpp"

namespace zscode {

/// All p-bit words with exactly `weight` ones, in ascending numeric order
/// of the MSB-first value. List length is binomial(p, weight). p <= 64.
std::vector<BitWord> words_of_weight(unsigned p, unsigned weight);

/// words_of_weight(p, p/2). Throws std::invalid_argument for odd p.
std::vector<BitWord> balanced_words(unsigned p);

/// Bijective map between flip counts k and parity words u. Both encoder
/// and decoder share one table: the encoder picks u by k, the decoder
/// recovers k from u.
class ParityTable {
public:
    ParityTable() = default;

    /// Entries are (k, u) pairs; every u must have length `parity_length`,
    /// and both the k values and the u words must be distinct.
    ParityTable(unsigned parity_length, std::vector<std::pair<unsigned, BitWord>> entries);

    unsigned parity_length() const noexcept { return parity_length_; }

    /// Entries sorted by ascending k.
    const std::vector<std::pair<unsigned, BitWord>>& entries() const noexcept { return entries_; }

    /// k paired with u. Throws UnknownParityWordError if u is not in the
    /// table (a corrupted codeword).
    unsigned lookup_k(const BitWord& u) const;

    /// Parity word paired with k. Throws std::out_of_range for unknown k.
    const BitWord& word_for_k(unsigned k) const;

private:
    unsigned parity_length_ = 0;
    std::vector<std::pair<unsigned, BitWord>> entries_;        // ascending k
    std::vector<std::pair<std::uint64_t, unsigned>> by_value_; // ascending u value
};

} // namespace zscode
