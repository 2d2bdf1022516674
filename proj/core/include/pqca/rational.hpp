#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pqca {

/// Arbitrary-precision natural/integer values.
using Nat = mpz_class;

/// Exact rationals; always kept in lowest terms with a positive denominator.
using Rat = mpq_class;

/// "num/den" in lowest terms; integers keep the "/1" suffix.
std::string to_string(const Rat &r);

/// Accepts "num/den" or a bare integer. Throws Error(Parse) on malformed input
/// and Error(OutOfRange) on a zero denominator.
Rat parse_rat(std::string_view text);

Nat pow(const Nat &base, std::uint64_t exponent);
Nat pow(std::uint64_t base, std::uint64_t exponent);

Nat floor(const Rat &r);

/// {r} = r - floor(r), in [0, 1).
Rat frac(const Rat &r);

/// Rat from an integer numerator and denominator, canonicalized.
Rat make_rat(const Nat &num, const Nat &den);

/// Converts a Nat that is known to fit, throws Error(Overflow) otherwise.
std::uint64_t to_u64(const Nat &n);

} // namespace pqca
