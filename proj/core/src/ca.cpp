#include <pqca/ca.hpp>

#include <pqca/error.hpp>

#include <algorithm>

namespace pqca {

namespace {

void step_F_once(const Params &params, const Word &in, Word &out) {
    out.resize(in.size() - 2);
    for (std::size_t i = 0; i + 2 < in.size(); ++i)
        out[i] = f_local(params, in[i], in[i + 1], in[i + 2]);
}

Word step_shift_word(std::span<const Digit> word) {
    return Word(word.begin() + 1, word.end());
}

} // namespace

Word step_G_word(const Params &params, std::span<const Digit> word) {
    if (word.size() < 2)
        throw Error(ErrorCode::TooShort, "G on a word needs at least 2 digits");
    check_word(params, word);
    Word out(word.size() - 1);
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        out[i] = g_local(params, word[i], word[i + 1]);
    return out;
}

Word step_F_word(const Params &params, std::span<const Digit> word, std::size_t t) {
    if (word.size() < 2 * t + 1)
        throw Error(ErrorCode::TooShort, "F^" + std::to_string(t) + " on a word needs at least " +
                                             std::to_string(2 * t + 1) + " digits, got " +
                                             std::to_string(word.size()));
    check_word(params, word);
    Word current(word.begin(), word.end());
    Word next;
    for (std::size_t s = 0; s < t; ++s) {
        step_F_once(params, current, next);
        current.swap(next);
    }
    return current;
}

FiniteConfig step_G_config(const Params &params, const FiniteConfig &config) {
    if (config.is_zero())
        return {};
    check_config(params, config);
    // G(c)(i) depends on c(i), c(i+1); one zero of padding per side suffices.
    const std::int64_t from = config.offset() - 1;
    Word window = config.window(from, config.digits().size() + 2);
    return FiniteConfig(from, step_G_word(params, window));
}

FiniteConfig step_F_config(const Params &params, const FiniteConfig &config, std::int64_t t) {
    if (t == 0 || config.is_zero())
        return config;
    check_config(params, config);
    const Params rule = t > 0 ? params : params.swapped();
    const auto steps = static_cast<std::size_t>(t > 0 ? t : -t);
    const auto pad = static_cast<std::int64_t>(2 * steps);
    const std::int64_t from = config.offset() - pad;
    Word window = config.window(from, config.digits().size() + 2 * static_cast<std::size_t>(pad));
    return FiniteConfig(from + static_cast<std::int64_t>(steps), step_F_word(rule, window, steps));
}

Word ftpow_closed_form(const Params &params, std::span<const Digit> word, std::size_t t) {
    if (word.size() < 2 * t + 1)
        throw Error(ErrorCode::TooShort, "closed form of F^" + std::to_string(t) + " needs at least " +
                                             std::to_string(2 * t + 1) + " digits");
    const std::size_t out_len = word.size() - 2 * t;
    Nat m = integ(params, word);
    Nat shifted = m / pow(params.q(), 2 * t);
    Nat modulus = pow(params.base(), out_len);
    Nat reduced;
    mpz_mod(reduced.get_mpz_t(), shifted.get_mpz_t(), modulus.get_mpz_t());
    return word_of_nat(params, reduced, out_len);
}

SpaceTime render_space_time(const Params &params, std::span<const Digit> word, std::size_t t_max, Rule rule) {
    const std::size_t shrink = rule == Rule::F ? 2 : 1;
    if (word.size() < shrink * t_max + 1)
        throw Error(ErrorCode::TooShort, "a " + std::to_string(word.size()) + "-digit word cannot support " +
                                             std::to_string(t_max) + " steps");
    check_word(params, word);
    SpaceTime out;
    Word current(word.begin(), word.end());
    std::int64_t leftmost = 0;
    out.rows.push_back({0, current, leftmost});
    for (std::size_t t = 1; t <= t_max; ++t) {
        switch (rule) {
        case Rule::F:
            current = step_F_word(params, current, 1);
            ++leftmost;
            break;
        case Rule::G:
            current = step_G_word(params, current);
            break;
        case Rule::Shift:
            current = step_shift_word(current);
            break;
        }
        out.rows.push_back({static_cast<std::int64_t>(t), current, leftmost});
    }
    return out;
}

std::string format_space_time(const Params &params, const SpaceTime &diagram) {
    if (diagram.rows.empty())
        return {};
    std::int64_t min_left = diagram.rows.front().leftmost;
    for (const auto &row : diagram.rows)
        min_left = std::min(min_left, row.leftmost);

    std::string out;
    if (params.base() <= 36) {
        for (const auto &row : diagram.rows) {
            out.append(static_cast<std::size_t>(row.leftmost - min_left), ' ');
            out += format_word(params, row.word);
            out += '\n';
        }
        return out;
    }
    const std::size_t width = std::to_string(params.base() - 1).size();
    for (const auto &row : diagram.rows) {
        out.append(static_cast<std::size_t>(row.leftmost - min_left) * (width + 1), ' ');
        for (std::size_t i = 0; i < row.word.size(); ++i) {
            std::string cell = std::to_string(row.word[i]);
            if (i)
                out += ' ';
            out.append(width - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

} // namespace pqca
