#include <pqca/rational.hpp>

#include <pqca/error.hpp>

#include <cctype>

namespace pqca {

std::string to_string(const Rat &r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

Nat parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        i = 1;
    if (i == text.size())
        throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Nat(digits, 10);
}

} // namespace

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_integer(text));
    Nat num = parse_integer(text.substr(0, slash));
    Nat den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw Error(ErrorCode::OutOfRange, "zero denominator in '" + std::string(text) + "'");
    return make_rat(num, den);
}

Nat pow(const Nat &base, std::uint64_t exponent) {
    Nat result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Nat pow(std::uint64_t base, std::uint64_t exponent) {
    Nat result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
    return result;
}

Nat floor(const Rat &r) {
    Nat result;
    mpz_fdiv_q(result.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return result;
}

Rat frac(const Rat &r) {
    return r - Rat(floor(r));
}

Rat make_rat(const Nat &num, const Nat &den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::uint64_t to_u64(const Nat &n) {
    if (sgn(n) < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        throw Error(ErrorCode::Overflow, n.get_str() + " does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
}

} // namespace pqca
