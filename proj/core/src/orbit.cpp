#include <pqca/verify.hpp>

#include <pqca/ca.hpp>
#include <pqca/error.hpp>
#include <pqca/parallel.hpp>

#include <algorithm>
#include <random>

namespace pqca {

bool orbit_stays_in(const Params &params, const FiniteConfig &config, const IntervalSet &set,
                    std::uint64_t horizon) {
    if (config.is_zero())
        throw Error(ErrorCode::NonPositive, "orbit needs a positive configuration");
    check_config(params, config);
    FiniteConfig current = config;
    for (std::uint64_t t = 0;; ++t) {
        if (!set.contains(rat_of_config(params, current)))
            return false;
        if (t == horizon)
            return true;
        current = step_F_config(params, current, 1);
    }
}

namespace {

enum class Relation { Inside, Outside, Mixed };

// Relation of [x, y) to the set, 0 <= x < y <= 1.
Relation relate(const IntervalSet &set, const Rat &x, const Rat &y) {
    bool meets = false;
    for (const auto &iv : set.intervals()) {
        if (iv.lo <= x && y <= iv.hi)
            return Relation::Inside;
        if (iv.hi > x && iv.lo < y)
            meets = true;
    }
    return meets ? Relation::Mixed : Relation::Outside;
}

// Relation of {[lo, lo + len)} to the set, wrapping around 1.
Relation relate_mod1(const IntervalSet &set, const Rat &lo, const Rat &len) {
    if (len >= 1)
        return set.measure() == 1 ? Relation::Inside : Relation::Mixed;
    const Rat x = frac(lo);
    const Rat y = x + len;
    if (y <= 1)
        return relate(set, x, y);
    const Relation a = relate(set, x, Rat(1));
    const Relation b = relate(set, Rat(0), y - 1);
    return a == b ? a : Relation::Mixed;
}

// Depth-first over the base-pq digits of xi. A prefix pins xi to [a, a + w), whose
// image under multiplication by (p/q)^t is again an interval; a prefix is dropped
// as soon as one image misses the set and accepted once every image lies inside.
class WitnessSearch {
public:
    WitnessSearch(const Params &params, const OrbitQuery &query, std::uint64_t work_limit)
        : params_(params), query_(query), work_limit_(work_limit), max_depth_(query.resolution + query.horizon) {
        const Rat ratio = make_rat(params.p(), params.q());
        powers_.push_back(Rat(1));
        for (std::uint64_t t = 1; t <= query.horizon; ++t)
            powers_.push_back(powers_.back() * ratio);
    }

    std::optional<Rat> run() {
        const bool integral = query_.window_radius > 0 && query_.horizon > 0;
        const Nat integers = query_.window_radius > 0 ? pow(params_.base(), query_.window_radius) : Nat(1);
        for (Nat m = integral ? 1 : 0; m < integers; ++m)
            if (auto found = descend(Rat(m), Rat(1), 0))
                return found;
        return std::nullopt;
    }

private:
    std::optional<Rat> descend(const Rat &a, const Rat &w, std::size_t depth) {
        if (++work_ > work_limit_)
            throw Error(ErrorCode::WorkLimit, "witness search exceeded " + std::to_string(work_limit_) + " nodes");
        bool settled = true;
        for (const Rat &r : powers_) {
            const Relation rel = relate_mod1(query_.set, a * r, w * r);
            if (rel == Relation::Outside)
                return std::nullopt;
            settled = settled && rel == Relation::Inside;
        }
        if (settled)
            return a > 0 ? a : Rat(w / params_.base());
        if (depth == max_depth_) {
            if (a > 0 && orbit_stays_in(params_, config_of_rat(params_, a), query_.set, query_.horizon))
                return a;
            return std::nullopt;
        }
        const Rat child = w / params_.base();
        for (Digit d = 0; d < params_.base(); ++d)
            if (auto found = descend(a + child * d, child, depth + 1))
                return found;
        return std::nullopt;
    }

    const Params &params_;
    const OrbitQuery &query_;
    std::uint64_t work_limit_;
    std::size_t max_depth_;
    std::uint64_t work_ = 0;
    std::vector<Rat> powers_;
};

} // namespace

std::optional<FiniteConfig> witness_search(const Params &params, const OrbitQuery &query,
                                           std::uint64_t work_limit) {
    const std::size_t k = std::max<std::size_t>(1, query.resolution);
    const auto aligned = grid_resolution(params, query.set);
    if (!aligned || *aligned > k)
        throw Error(ErrorCode::PreconditionViolated,
                    "set endpoints are not multiples of (pq)^-" + std::to_string(k));
    if (query.set.empty())
        return std::nullopt;

    WitnessSearch search(params, query, work_limit);
    const auto xi = search.run();
    if (!xi)
        return std::nullopt;
    FiniteConfig found = config_of_rat(params, *xi);
    if (!orbit_stays_in(params, found, query.set, query.horizon))
        throw Error(ErrorCode::ConsistencyViolation,
                    "witness " + format_config(params, found) + " leaves the set before the horizon");
    return found;
}

EscapeCensus escape_time_census(const Params &params, const std::vector<Word> &targets, std::uint64_t horizon,
                                std::uint64_t samples, std::uint64_t seed, std::size_t integer_digits,
                                std::size_t fraction_digits, unsigned workers) {
    for (const auto &w : targets) {
        if (w.empty())
            throw Error(ErrorCode::EmptyWord, "escape targets must be nonempty");
        check_word(params, w);
    }
    if (integer_digits == 0)
        throw Error(ErrorCode::OutOfRange, "escape census needs at least one integer digit");

    // Draw everything up front so the result does not depend on the worker count.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Digit> digit(0, params.base() - 1);
    const std::size_t len = integer_digits + fraction_digits;
    std::vector<Word> starts(samples, Word(len));
    for (auto &w : starts)
        for (auto &d : w)
            d = digit(rng);
    const auto offset = 1 - static_cast<std::int64_t>(integer_digits);

    EscapeCensus init;
    init.samples = samples;
    init.horizon = horizon;
    return parallel_reduce<EscapeCensus>(
        samples, workers, init,
        [&](std::uint64_t begin, std::uint64_t end) {
            EscapeCensus part;
            for (auto s = begin; s < end; ++s) {
                FiniteConfig c(offset, starts[s]);
                std::optional<std::uint64_t> hit;
                for (std::uint64_t t = 0; !targets.empty(); ++t) {
                    const bool inside = std::any_of(targets.begin(), targets.end(), [&](const Word &w) {
                        return c.window(1, w.size()) == w;
                    });
                    if (inside) {
                        hit = t;
                        break;
                    }
                    if (t == horizon)
                        break;
                    c = step_F_config(params, c, 1);
                }
                if (hit)
                    ++part.histogram[*hit];
                else
                    ++part.no_hit;
            }
            return part;
        },
        [](EscapeCensus &acc, EscapeCensus &&part) {
            for (const auto &[t, n] : part.histogram)
                acc.histogram[t] += n;
            acc.no_hit += part.no_hit;
        });
}

} // namespace pqca
