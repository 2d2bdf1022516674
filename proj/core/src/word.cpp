#include <pqca/word.hpp>

#include <pqca/error.hpp>

#include <cctype>

namespace pqca {

void check_word(const Params &params, std::span<const Digit> word) {
    for (Digit d : word)
        if (d >= params.base())
            throw Error(ErrorCode::OutOfRange, "digit " + std::to_string(d) + " outside base " +
                                                   std::to_string(params.base()));
}

Nat integ(const Params &params, std::span<const Digit> word) {
    if (word.empty())
        throw Error(ErrorCode::EmptyWord, "integ of the empty word");
    check_word(params, word);
    Nat m = 0;
    for (Digit d : word) {
        m *= params.base();
        m += d;
    }
    return m;
}

Word word_of_nat(const Params &params, const Nat &m, std::size_t len) {
    if (sgn(m) < 0)
        throw Error(ErrorCode::Negative, m.get_str() + " is negative");
    Word out(len, 0);
    Nat rest = m;
    for (std::size_t i = len; i-- > 0;) {
        out[i] = static_cast<Digit>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), params.base()));
    }
    if (rest != 0)
        throw Error(ErrorCode::Overflow, m.get_str() + " needs more than " + std::to_string(len) +
                                             " base-" + std::to_string(params.base()) + " digits");
    return out;
}

Rat real_of_word(const Params &params, std::span<const Digit> word) {
    if (word.empty())
        return Rat(0);
    Nat m = integ(params, word);
    return make_rat(m, pow(params.base(), word.size()));
}

std::string format_word(const Params &params, std::span<const Digit> word) {
    std::string out;
    if (params.base() <= 36) {
        out.reserve(word.size());
        for (Digit d : word)
            out.push_back(static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)));
        return out;
    }
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(word[i]);
    }
    return out;
}

Word parse_word(const Params &params, std::string_view text) {
    Word out;
    if (params.base() <= 36) {
        out.reserve(text.size());
        for (char ch : text) {
            auto c = static_cast<unsigned char>(std::tolower(static_cast<unsigned char>(ch)));
            Digit d;
            if (c >= '0' && c <= '9')
                d = c - '0';
            else if (c >= 'a' && c <= 'z')
                d = 10 + (c - 'a');
            else
                throw Error(ErrorCode::Parse, "invalid digit character '" + std::string(1, ch) + "'");
            out.push_back(d);
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto comma = text.find(',', pos);
            auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            if (token.empty())
                throw Error(ErrorCode::Parse, "empty digit in '" + std::string(text) + "'");
            std::uint64_t value = 0;
            for (char ch : token) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw Error(ErrorCode::Parse, "invalid digit '" + std::string(token) + "'");
                value = value * 10 + static_cast<std::uint64_t>(ch - '0');
                if (value > params.base())
                    break;
            }
            if (value >= params.base())
                throw Error(ErrorCode::OutOfRange, "digit " + std::string(token) + " outside base " +
                                                       std::to_string(params.base()));
            out.push_back(static_cast<Digit>(value));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
            if (pos == text.size())
                throw Error(ErrorCode::Parse, "trailing comma in '" + std::string(text) + "'");
        }
    }
    check_word(params, out);
    return out;
}

} // namespace pqca
