#pragma once

#include <vector>

#include "zscode/bitword.hpp"
#include "zscode/parity_table.hpp"

namespace zscode {

/// Simple Parallel codec: n data bits are prefix-flipped at one of the
/// selected flip counts until the result lands within the disparity bound,
/// then a balanced parity word naming that count is prepended. d = 0 gives
/// perfectly balanced codewords; d > 0 allows |v| <= 2d and thins the set
/// of flip counts that have to be considered.
struct SpCodec {
    unsigned n = 0; ///< data bits (even)
    unsigned d = 0; ///< disparity bound is 2d
    unsigned p = 0; ///< parity bits (even)
    unsigned m = 0; ///< codeword bits, n + p
    std::vector<unsigned> selected_ks;
    ParityTable table;
};

/// The flip counts retained for bound 2d: ceil(n / (2d+1)) block centers
/// k_j = min(j*(2d+1) + d, n-1), so every k in [0, n-1] lies within d of a
/// selected one. d = 0 selects every k.
std::vector<unsigned> select_ks(unsigned n, unsigned d);

/// Smallest even p >= 2 whose balanced-word count binomial(p, p/2) covers
/// the ceil(n / (2d+1)) selected flip counts.
unsigned sp_parity_bits(unsigned n, unsigned d);

/// Codec for n data bits (even, 2..64) at bound 2d. The j-th selected k is
/// paired with the j-th balanced p-bit word in ascending numeric order.
SpCodec build_sp_codec(unsigned n, unsigned d);

/// u_k followed by w with its first k bits flipped, for the smallest
/// selected k that brings |v| within the bound. Output disparity is always
/// within +/-2d (exactly 0 when d = 0).
BitWord sp_encode(const SpCodec& codec, const BitWord& w);

/// Inverse of sp_encode. Validates the codeword disparity bound before the
/// parity lookup; throws BoundViolationError / UnknownParityWordError on
/// corrupted input.
BitWord sp_decode(const SpCodec& codec, const BitWord& codeword);

} // namespace zscode
