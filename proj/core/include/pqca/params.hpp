#pragma once

#include <cstdint>
#include <string>

namespace pqca {

/// A coprime pair (p, q) with p, q >= 2. The automata act on digits of base p*q.
class Params {
public:
    /// Throws Error(OutOfRange) when p or q is below 2 or the base does not fit
    /// a 32-bit digit, Error(NonCoprime) when gcd(p, q) != 1.
    static Params make(std::int64_t p, std::int64_t q);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t base() const noexcept { return p_ * q_; }

    /// (q, p): the parameters of the inverse automaton.
    Params swapped() const noexcept { return Params(q_, p_); }

    std::string to_string() const;

    friend bool operator==(const Params &, const Params &) = default;

private:
    Params(std::uint32_t p, std::uint32_t q) noexcept : p_(p), q_(q) {}

    std::uint32_t p_;
    std::uint32_t q_;
};

} // namespace pqca
