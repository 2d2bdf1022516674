#pragma once

#include <pqca/config.hpp>
#include <pqca/params.hpp>
#include <pqca/word.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pqca {

/// g_{p,q}(x1 q + x0, y1 q + y0) = x0 p + y1.
inline Digit g_local(const Params &params, Digit x, Digit y) noexcept {
    return (x % params.q()) * params.p() + y / params.q();
}

/// f_{p,q}(x, a, y) = g(g(x, a), g(a, y)); the radius-1 rule of F_{p,q}.
inline Digit f_local(const Params &params, Digit x, Digit a, Digit y) noexcept {
    return g_local(params, g_local(params, x, a), g_local(params, a, y));
}

/// u(i) = g(w(i), w(i+1)); |u| = |w| - 1. Throws Error(TooShort) if |w| < 2.
Word step_G_word(const Params &params, std::span<const Digit> word);

/// t-fold application of u(i) = f(w(i), w(i+1), w(i+2)); |u| = |w| - 2t.
/// Throws Error(TooShort) if |w| < 2t + 1.
Word step_F_word(const Params &params, std::span<const Digit> word, std::size_t t);

/// Multiplies the represented number by p.
FiniteConfig step_G_config(const Params &params, const FiniteConfig &config);

/// Multiplies the represented number by (p/q)^t; negative t steps the inverse
/// automaton F_{q,p}.
FiniteConfig step_F_config(const Params &params, const FiniteConfig &config, std::int64_t t);

/// F^t on a word through its integer value:
/// word_of_nat(floor(integ(w) / q^{2t}) mod (pq)^{|w|-2t}, |w|-2t).
Word ftpow_closed_form(const Params &params, std::span<const Digit> word, std::size_t t);

enum class Rule {
    F,     ///< F_{p,q}: radius 1, the window loses one cell per side per step
    G,     ///< G_{p,q}: neighborhood (0, 1)
    Shift, ///< left shift sigma: neighborhood (1)
};

struct SpaceTimeRow {
    std::int64_t time;
    Word word;
    std::int64_t leftmost; ///< position of word[0] relative to the initial row
};

struct SpaceTime {
    std::vector<SpaceTimeRow> rows;
};

/// Rows t = 0..t_max of the space-time diagram of `word`.
/// Throws Error(TooShort) when the word cannot support t_max steps of `rule`.
SpaceTime render_space_time(const Params &params, std::span<const Digit> word, std::size_t t_max,
                            Rule rule = Rule::F);

/// One line per row, cells aligned by position.
std::string format_space_time(const Params &params, const SpaceTime &diagram);

} // namespace pqca
