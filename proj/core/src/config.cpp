#include <pqca/config.hpp>

#include <pqca/error.hpp>

#include <algorithm>

namespace pqca {

FiniteConfig::FiniteConfig(std::int64_t offset, Word digits) : offset_(offset), digits_(std::move(digits)) {
    auto first = std::find_if(digits_.begin(), digits_.end(), [](Digit d) { return d != 0; });
    if (first == digits_.end()) {
        digits_.clear();
        offset_ = 0;
        return;
    }
    auto lead = std::distance(digits_.begin(), first);
    auto tail = std::find_if(digits_.rbegin(), digits_.rend(), [](Digit d) { return d != 0; });
    digits_.erase(tail.base(), digits_.end());
    digits_.erase(digits_.begin(), first);
    offset_ += lead;
}

Digit FiniteConfig::at(std::int64_t position) const noexcept {
    if (position < offset_ || position > last())
        return 0;
    return digits_[static_cast<std::size_t>(position - offset_)];
}

Word FiniteConfig::window(std::int64_t from, std::size_t len) const {
    Word out(len, 0);
    for (std::size_t i = 0; i < len; ++i)
        out[i] = at(from + static_cast<std::int64_t>(i));
    return out;
}

FiniteConfig FiniteConfig::translated(std::int64_t shift) const {
    if (is_zero())
        return {};
    FiniteConfig out = *this;
    out.offset_ += shift;
    return out;
}

void check_config(const Params &params, const FiniteConfig &config) {
    check_word(params, config.digits());
}

FiniteConfig config_of_rat(const Params &params, const Rat &xi) {
    if (sgn(xi) < 0)
        throw Error(ErrorCode::Negative, to_string(xi) + " is negative");
    if (sgn(xi) == 0)
        return {};

    const Nat base = params.base();
    Nat rest = xi.get_den();
    Nat g;
    for (;;) {
        mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
        if (g == 1)
            break;
        rest /= g;
    }
    if (rest != 1)
        throw Error(ErrorCode::NonTerminating,
                    to_string(xi) + " has no terminating base-" + base.get_str() + " expansion");

    std::int64_t frac_digits = 0;
    Nat scale = 1;
    while (scale % xi.get_den() != 0) {
        scale *= base;
        ++frac_digits;
    }
    Nat value = xi.get_num() * (scale / xi.get_den());

    Word digits;
    while (value != 0) {
        digits.push_back(static_cast<Digit>(mpz_fdiv_q_ui(value.get_mpz_t(), value.get_mpz_t(), params.base())));
    }
    std::reverse(digits.begin(), digits.end());
    std::int64_t offset = frac_digits - static_cast<std::int64_t>(digits.size()) + 1;
    return FiniteConfig(offset, std::move(digits));
}

Rat rat_of_config(const Params &params, const FiniteConfig &config) {
    if (config.is_zero())
        return Rat(0);
    check_config(params, config);
    Nat value = integ(params, config.digits());
    std::int64_t last = config.last();
    if (last <= 0)
        return Rat(value * pow(params.base(), static_cast<std::uint64_t>(-last)));
    return make_rat(value, pow(params.base(), static_cast<std::uint64_t>(last)));
}

std::string format_config(const Params &params, const FiniteConfig &config) {
    if (config.is_zero())
        return "0";
    std::int64_t first = std::min<std::int64_t>(config.offset(), 0);
    Word integer_part = config.window(first, static_cast<std::size_t>(1 - first));
    Word fraction_part;
    if (config.last() >= 1)
        fraction_part = config.window(1, static_cast<std::size_t>(config.last()));

    const bool wide = params.base() > 36;
    std::string out = wide ? "[" + format_word(params, integer_part) + "]" : format_word(params, integer_part);
    if (!fraction_part.empty()) {
        out += '.';
        out += wide ? "[" + format_word(params, fraction_part) + "]" : format_word(params, fraction_part);
    }
    return out;
}

} // namespace pqca
