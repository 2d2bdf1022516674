#pragma once

#include <pqca/params.hpp>
#include <pqca/rational.hpp>
#include <pqca/word.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pqca {

/// A column of a space-time diagram, entry t being the F^t-row digit
/// (increasing time everywhere in this library).
using TraceWord = Word;

/// Default bound on search nodes / enumerated candidates for the exhaustive
/// routines below. Exceeding it raises Error(Infeasible) instead of running on.
inline constexpr std::uint64_t default_work_limit = 50'000'000;

/// For each d in A_q: k_d in A_p with k_d q = j_d p + d, and the digit set
/// D = {a in A_pq : a = k_d (mod p) for some d}, |D| = q^2.
struct SpecialDigits {
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::vector<Digit> k;
    std::vector<Digit> j;
    std::vector<Digit> digits; ///< D, ascending
    std::vector<std::int32_t> class_of_residue; ///< r in A_p -> d with k_d = r, or -1

    bool contains(Digit a) const noexcept { return class_of_residue[a % p] >= 0; }

    /// The d with a = k_d (mod p), if any.
    std::optional<Digit> residue_class(Digit a) const noexcept {
        auto d = class_of_residue[a % p];
        if (d < 0)
            return std::nullopt;
        return static_cast<Digit>(d);
    }
};

/// Throws Error(PreconditionViolated) when p < q (the k_d would collide).
SpecialDigits special_digits(const Params &params);

struct DetScan;
DetScan scan_det_table(const Params &params);

/// The partial map (F^{-1}(c)(i+1), c(i+1), F(c)(i+1)) -> c(i): every digit of a
/// space-time diagram is fixed by the three nearest digits to its right.
class DetTable {
public:
    const Params &params() const noexcept { return params_; }

    std::optional<Digit> lookup(Digit up, Digit mid, Digit down) const noexcept;

    /// Number of keys with a defined value.
    std::size_t defined() const noexcept { return defined_; }

private:
    friend DetScan scan_det_table(const Params &params);

    explicit DetTable(const Params &params);

    Params params_;
    std::vector<std::int32_t> cells_;
    std::size_t defined_ = 0;
};

struct DetScan {
    DetTable table;
    std::uint64_t triples = 0;   ///< (x, a, y) triples scanned
    std::uint64_t conflicts = 0; ///< keys observed with two different values
};

/// Scans every (x, a, y) in A_pq^3 and records conflicts instead of throwing.
/// Throws Error(Infeasible) for bases whose dense table would not fit in memory.
DetScan scan_det_table(const Params &params);

/// As scan_det_table, but throws Error(ConsistencyViolation) on any conflict.
DetTable build_det_table(const Params &params);

/// Recovers c(1..k) from the column-k values at times -(k-1)..(k-1), |u| = 2k-1.
/// Throws Error(Unrealizable) when a contraction key is undefined and
/// Error(PreconditionViolated) for even-length input.
Word decode_prefix(const DetTable &table, std::span<const Digit> trace);

/// Digits at index `column` of the rows F^t(w), t = t_min..t_max, computed from
/// the time-0 word w (negative times step F_{q,p}). Throws Error(OutOfCone) when
/// a requested cell depends on digits outside w.
TraceWord trace_of_window(const Params &params, std::span<const Digit> word, std::size_t column,
                          std::int64_t t_min, std::int64_t t_max);

/// True iff u occurs in some trace: some w of length 2|u|-1 has u(t) as the center
/// digit of F^t(w) for t = 0..|u|-1. Depth-first search over the light cone.
/// Throws Error(Infeasible) after `work_limit` candidate extensions.
bool is_trace_word(const Params &params, std::span<const Digit> trace,
                   std::uint64_t work_limit = default_work_limit);

/// All words of length n over D whose mirror image obeys "a = k_d (mod p) implies
/// the next digit is = j_d (mod q)"; q^{n+1} words, sorted. A superset of
/// L(p,q) intersected with D^n. Throws Error(PreconditionViolated) unless
/// p >= 2q - 1 and n >= 1, Error(Infeasible) when q^{n+1} > work_limit.
std::vector<TraceWord> pruned_language(const Params &params, std::size_t n,
                                       std::uint64_t work_limit = default_work_limit);

struct CensusResult {
    std::size_t n = 0;
    Nat bound;                          ///< q^{n+1}
    std::optional<std::uint64_t> exact; ///< |pruned_language(n) that are trace words|
};

/// Bound-only unless `exact`, in which case every pruned candidate is tested with
/// is_trace_word (each test limited by work_limit).
CensusResult language_census(const Params &params, std::size_t n, bool exact,
                             std::uint64_t work_limit = default_work_limit, unsigned workers = 1);

} // namespace pqca
