#pragma once

#include <pqca/params.hpp>
#include <pqca/rational.hpp>
#include <pqca/trace.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pqca {

/// Half-open [lo, hi) with 0 <= lo < hi <= 1.
struct Interval {
    Rat lo;
    Rat hi;

    friend bool operator==(const Interval &, const Interval &) = default;
};

/// A finite union of half-open subintervals of [0, 1), kept sorted, disjoint and
/// with touching neighbours merged.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Normalizes arbitrary input. Throws Error(OutOfRange) unless every interval
    /// satisfies 0 <= lo < hi <= 1.
    explicit IntervalSet(std::vector<Interval> intervals);

    static IntervalSet unit();

    const std::vector<Interval> &intervals() const noexcept { return intervals_; }
    bool empty() const noexcept { return intervals_.empty(); }
    std::size_t size() const noexcept { return intervals_.size(); }

    Rat measure() const;

    /// Tests the fractional part of xi.
    bool contains(const Rat &xi) const;

    IntervalSet unite(const IntervalSet &other) const;
    IntervalSet complement() const;

    friend bool operator==(const IntervalSet &, const IntervalSet &) = default;

private:
    std::vector<Interval> intervals_;
};

/// Least k such that every endpoint is a multiple of (pq)^{-k}; nullopt if none.
std::optional<std::size_t> grid_resolution(const Params &params, const IntervalSet &set);

/// Union over d in A_q of [k_d/p, (k_d+1)/p). Requires p >= 2q-1.
IntervalSet build_Y(const Params &params);

/// Union over a in D of [a/(pq), (a+1)/(pq)). Requires p >= 2q-1.
IntervalSet build_X(const Params &params);

struct BuildOptions {
    std::uint64_t work_limit = default_work_limit;
    unsigned workers = 1;
};

struct IConstruction {
    std::size_t k = 0;
    IntervalSet set;
    std::uint64_t candidates = 0;    ///< pruned trace words of length 2k-1
    std::uint64_t filtered_out = 0;  ///< rejected by the exact trace-word test
    std::uint64_t unrealizable = 0;  ///< failed to decode
    std::uint64_t word_count = 0;    ///< distinct decoded words (cells before merging)
};

/// Cells [real(w), real(w) + (pq)^{-k}) for every word w decoded from the pruned
/// trace language of length 2k-1, optionally restricted to genuine trace words.
/// Throws Error(PreconditionViolated) unless p >= 2q-1 and k >= 1, and
/// Error(Infeasible) when q^{2k} exceeds the work limit.
IConstruction build_I(const Params &params, std::size_t k, bool exact_filter = false,
                      const BuildOptions &options = {});

/// { {xi p / q} : xi >= 0, {xi} in S } = union over j < q of (j/q + (p/q) S) mod 1.
IntervalSet push_forward(const Params &params, const IntervalSet &set);

struct JConstruction {
    std::size_t n = 0;                 ///< least n with p^n >= 2 q^n - 1
    std::uint64_t inner_p = 0;         ///< p^n
    std::uint64_t inner_q = 0;         ///< q^n
    Rat eta;                           ///< eps (p-1) / (p^n - 1)
    std::size_t k = 0;                 ///< least k with (q^n/p^n)^k <= eta
    std::vector<IntervalSet> pieces;   ///< I_0 .. I_{n-1}
    IntervalSet set;                   ///< union of the pieces
    std::uint64_t word_count = 0;      ///< word_count of I_0
};

/// Only the parameter selection (n, p^n, q^n, eta, k) of build_J; cheap for any input.
JConstruction plan_J(const Params &params, const Rat &epsilon);

/// Small interval union for arbitrary p > q. Throws Error(PreconditionViolated)
/// unless p > q and 0 < eps <= 1; Error(Infeasible) / Error(OutOfRange) when the
/// inner construction over (p^n, q^n) cannot be built.
JConstruction build_J(const Params &params, const Rat &epsilon, const BuildOptions &options = {});

/// {"intervals":[["a","b"],...],"total_length":"m"} with rationals as "num/den".
std::string to_json(const IntervalSet &set);

/// Reads the "intervals" member of a JSON object produced by to_json (extra
/// members are ignored). Throws Error(Parse).
IntervalSet interval_set_from_json(std::string_view text);

/// Header a_num,a_den,b_num,b_den then one row per interval.
std::string to_csv(const IntervalSet &set);
IntervalSet interval_set_from_csv(std::string_view text);

} // namespace pqca
