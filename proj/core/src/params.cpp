#include <pqca/params.hpp>

#include <pqca/error.hpp>

#include <limits>
#include <numeric>

namespace pqca {

Params Params::make(std::int64_t p, std::int64_t q) {
    if (p < 2 || q < 2)
        throw Error(ErrorCode::OutOfRange, "p and q must both be at least 2 (got p=" +
                                               std::to_string(p) + ", q=" + std::to_string(q) + ")");
    constexpr std::int64_t max_base = std::numeric_limits<std::int32_t>::max();
    if (p > max_base / q)
        throw Error(ErrorCode::OutOfRange, "base p*q exceeds " + std::to_string(max_base));
    if (std::gcd(p, q) != 1)
        throw Error(ErrorCode::NonCoprime, "gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                                               ") = " + std::to_string(std::gcd(p, q)));
    return Params(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q));
}

std::string Params::to_string() const {
    return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

} // namespace pqca
