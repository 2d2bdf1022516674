#include <pqca/verify.hpp>

#include <pqca/ca.hpp>
#include <pqca/error.hpp>
#include <pqca/parallel.hpp>

#include <algorithm>

namespace pqca {

void check_query(const Params &params, const MixingQuery &query) {
    if (query.v1.empty() || query.v2.empty())
        throw Error(ErrorCode::EmptyWord, "cylinder words must be nonempty");
    check_word(params, query.v1);
    check_word(params, query.v2);
    if (query.t < query.i + query.v2.size())
        throw Error(ErrorCode::PreconditionViolated,
                    "mixing needs t >= i + |v2|, got t=" + std::to_string(query.t) +
                        " i=" + std::to_string(query.i) + " |v2|=" + std::to_string(query.v2.size()));
}

namespace {

Rat naive_measure(const Params &params, const MixingQuery &query, std::uint64_t work_limit, unsigned workers) {
    const std::size_t t = query.t;
    const std::size_t l1 = query.v1.size();
    const std::size_t l2 = query.v2.size();
    const std::size_t len = 2 * t + l1;
    const Nat total = pow(params.base(), len);
    if (total > work_limit)
        throw Error(ErrorCode::WorkLimit, "naive mixing enumerates " + total.get_str() +
                                              " words, above the limit " + std::to_string(work_limit));
    // w covers positions -t .. t+l1-1, so the v2 block sits at index t+i.
    const std::size_t block = t + query.i;
    const std::size_t free_len = len - l2;
    const std::uint64_t free_words = to_u64(pow(params.base(), free_len));
    const std::uint32_t base = params.base();

    const std::uint64_t count = parallel_reduce<std::uint64_t>(
        free_words, workers, 0,
        [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t hits = 0;
            Word w(len);
            std::copy(query.v2.begin(), query.v2.end(), w.begin() + static_cast<std::ptrdiff_t>(block));
            for (auto m = begin; m < end; ++m) {
                std::uint64_t rest = m;
                for (std::size_t j = len; j-- > 0;) {
                    if (j >= block && j < block + l2)
                        continue;
                    w[j] = static_cast<Digit>(rest % base);
                    rest /= base;
                }
                if (step_F_word(params, w, t) == query.v1)
                    ++hits;
            }
            return hits;
        },
        [](std::uint64_t &acc, std::uint64_t part) { acc += part; });
    return make_rat(Nat(std::to_string(count)), total);
}

// Counts m < (pq)^L with the v2 digits fixed and floor(m / q^{2t}) = integ(v1)
// mod (pq)^{l1}. Writing m = A (pq)^{s+l2} + integ(v2) (pq)^s + B with B < (pq)^s,
// the A term runs over the multiples of g = gcd((pq)^{s+l2}, q^{2t} (pq)^{l1}),
// each p^{t+i} times, which leaves a residue count over B.
Rat arithmetic_measure(const Params &params, const MixingQuery &query) {
    const std::uint64_t t = query.t;
    const std::uint64_t i = query.i;
    const std::uint64_t l1 = query.v1.size();
    const std::uint64_t l2 = query.v2.size();
    const std::uint64_t len = 2 * t + l1;
    const std::uint64_t s = t + l1 - i - l2;

    const Nat S = pow(params.base(), s);
    const Nat Q = pow(params.q(), 2 * t);
    const Nat c = integ(params, query.v2) * S;
    const Nat g = pow(params.p(), l1) * pow(params.q(), t + l1 - i);
    const Nat alpha = S / g;
    const Nat beta = S % g;

    // sum over x < n of #{ B < S : B = x (mod g) }
    auto prefix = [&](const Nat &n) -> Nat {
        const Nat r = n % g;
        return (n / g) * S + r * alpha + (r < beta ? r : beta);
    };
    Nat y0 = (Q * integ(params, query.v1) - c) % g;
    if (y0 < 0)
        y0 += g;
    const Nat count = pow(params.p(), t + i) * (prefix(y0 + Q) - prefix(y0));
    return make_rat(count, pow(params.base(), len));
}

} // namespace

Rat mixing_measure(const Params &params, const MixingQuery &query, MixingMethod method, std::uint64_t work_limit,
                   unsigned workers) {
    check_query(params, query);
    if (method == MixingMethod::Naive)
        return naive_measure(params, query, work_limit, workers);
    return arithmetic_measure(params, query);
}

std::pair<Rat, Rat> mixing_bound(const Params &params, const MixingQuery &query) {
    check_query(params, query);
    const std::uint64_t t = query.t;
    const std::uint64_t l1 = query.v1.size();
    const std::uint64_t l2 = query.v2.size();
    const Nat main = pow(params.base(), t - query.i - l2);
    const Nat Q = pow(params.q(), 2 * t);
    const Nat scale = pow(params.base(), t + query.i);
    const Nat den = pow(params.base(), 2 * t + l1);
    return {make_rat((main - Q) * scale, den), make_rat((main + Q) * scale, den)};
}

} // namespace pqca
