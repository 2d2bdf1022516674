#pragma once

#include <pqca/params.hpp>
#include <pqca/rational.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqca {

/// One cell value in [0, p*q).
using Digit = std::uint32_t;

/// Finite digit string over A_{pq}; may be empty (the empty word).
using Word = std::vector<Digit>;

/// x = hi*q + lo with hi in [0, p), lo in [0, q).
struct DigitPair {
    Digit hi;
    Digit lo;

    friend bool operator==(const DigitPair &, const DigitPair &) = default;
};

inline DigitPair digit_decompose(const Params &params, Digit x) noexcept {
    return {x / params.q(), x % params.q()};
}

/// Throws Error(OutOfRange) if any digit is >= p*q.
void check_word(const Params &params, std::span<const Digit> word);

/// The integer whose base-pq representation is `word` (most significant first).
/// Throws Error(EmptyWord) on the empty word.
Nat integ(const Params &params, std::span<const Digit> word);

/// Left-padded base-pq representation of m with exactly `len` digits.
/// Throws Error(Overflow) when m >= (pq)^len, Error(Negative) when m < 0.
Word word_of_nat(const Params &params, const Nat &m, std::size_t len);

/// sum_{i=1..k} w(i) (pq)^{-i}; zero for the empty word.
Rat real_of_word(const Params &params, std::span<const Digit> word);

/// Bases up to 36 print one character per digit (0-9 then a-z); larger bases
/// print comma-separated decimal digits.
std::string format_word(const Params &params, std::span<const Digit> word);

/// Inverse of format_word. Throws Error(Parse) or Error(OutOfRange).
Word parse_word(const Params &params, std::string_view text);

} // namespace pqca
