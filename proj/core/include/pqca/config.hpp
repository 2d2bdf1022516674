#pragma once

#include <pqca/params.hpp>
#include <pqca/rational.hpp>
#include <pqca/word.hpp>

#include <cstdint>
#include <string>

namespace pqca {

/// A configuration that is zero outside a finite window: c(i) = digits[i - offset]
/// for offset <= i < offset + digits.size(), c(i) = 0 elsewhere. Position 0 holds
/// the units digit and position i > 0 the digit of weight (pq)^{-i}.
///
/// Always stored canonically (no zero digits at either end, offset 0 for the zero
/// configuration), so defaulted equality is semantic equality.
class FiniteConfig {
public:
    FiniteConfig() = default;
    FiniteConfig(std::int64_t offset, Word digits);

    std::int64_t offset() const noexcept { return offset_; }
    const Word &digits() const noexcept { return digits_; }
    bool is_zero() const noexcept { return digits_.empty(); }

    /// Position of the last stored digit; offset() - 1 for the zero configuration.
    std::int64_t last() const noexcept { return offset_ + static_cast<std::int64_t>(digits_.size()) - 1; }

    Digit at(std::int64_t position) const noexcept;

    /// Digits c(from) ... c(from + len - 1), zeros outside the support.
    Word window(std::int64_t from, std::size_t len) const;

    /// The configuration d with d(i + shift) = c(i).
    FiniteConfig translated(std::int64_t shift) const;

    friend bool operator==(const FiniteConfig &, const FiniteConfig &) = default;

private:
    std::int64_t offset_ = 0;
    Word digits_;
};

/// Throws Error(OutOfRange) if a stored digit is outside the base.
void check_config(const Params &params, const FiniteConfig &config);

/// The terminating base-pq expansion of xi. Throws Error(Negative) for xi < 0 and
/// Error(NonTerminating) when the denominator has a prime factor not dividing p*q.
FiniteConfig config_of_rat(const Params &params, const Rat &xi);

Rat rat_of_config(const Params &params, const FiniteConfig &config);

/// Positional rendering such as "24.3"; "0" for the zero configuration.
/// Bases above 36 render as "[d,...].[d,...]".
std::string format_config(const Params &params, const FiniteConfig &config);

} // namespace pqca
