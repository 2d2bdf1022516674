#pragma once

#include <pqca/config.hpp>
#include <pqca/intervals.hpp>
#include <pqca/params.hpp>
#include <pqca/rational.hpp>
#include <pqca/trace.hpp>
#include <pqca/word.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pqca {

/// Outcome of an exhaustive or randomized check. Only the first few violations
/// are kept verbatim; violation_count has the total.
struct Report {
    static constexpr std::size_t max_recorded = 16;

    std::string name;
    std::string parameters;
    std::uint64_t checked = 0;
    std::uint64_t violation_count = 0;
    std::vector<std::string> violations;
    double elapsed_ms = 0;

    bool pass() const noexcept { return violation_count == 0; }
    void violation(std::string what);
    void absorb(Report &&other); ///< adds counts and violations of another report
};

/// Scans (pq)^4 tuples for "g(x,z) = g(y,w) implies x = y (mod q)", (pq)^3 for
/// "g(x,a) = g(y,a) (mod q) iff x = y (mod q)" (both directions at once) and (pq)^5
/// for "f(x,a,y) = f(z,a,w) implies x = z (mod q)".
Report verify_local_lemmas(const Params &params, unsigned workers = 1);

/// Odometer behaviour of F^t on words of length k in [3, k_max], t in [1, t_max],
/// k >= 2t+1: words below q^{2t} map to zero, adding q^{2t} adds one modulo
/// (pq)^{k-2t}, and the closed form agrees with direct iteration on every word.
Report verify_odometer(const Params &params, std::size_t k_max, std::size_t t_max, unsigned workers = 1,
                       std::uint64_t work_limit = default_work_limit);

/// F_{q,p}(F_{p,q}(w)) equals the middle |w|-4 digits of w for every w of the
/// given length (>= 5).
Report verify_reversibility(const Params &params, std::size_t length = 5, unsigned workers = 1,
                            std::uint64_t work_limit = default_work_limit);

/// G multiplies by p, F by p/q and F^{-1} by q/p, exactly, on `samples` random
/// terminating rationals; also checks the config/rational round trip.
Report verify_multiplication_law(const Params &params, std::uint64_t samples, std::uint64_t seed);

/// Zero conflicts in the determination table.
Report verify_det_table(const Params &params);

/// Cylinders C1 = cyl(v1, 0) and C2 = cyl(v2, i) and a time t >= i + |v2|.
struct MixingQuery {
    Word v1;
    Word v2;
    std::uint64_t i = 0;
    std::uint64_t t = 0;
};

/// Throws Error(EmptyWord) for an empty cylinder word and
/// Error(PreconditionViolated) when t < i + |v2|.
void check_query(const Params &params, const MixingQuery &query);

enum class MixingMethod { Naive, Arithmetic };

/// mu(F^{-t}(C1) and C2) exactly. Naive enumerates every w of length 2t+|v1| with
/// the v2 block in place and iterates F; Arithmetic counts integers through the
/// odometer closed form. Naive throws Error(WorkLimit) past `work_limit` words.
Rat mixing_measure(const Params &params, const MixingQuery &query, MixingMethod method,
                   std::uint64_t work_limit = default_work_limit, unsigned workers = 1);

/// ((pq)^{t-i-l2} -/+ q^{2t}) (pq)^{t+i} (pq)^{-(2t+l1)}.
std::pair<Rat, Rat> mixing_bound(const Params &params, const MixingQuery &query);

/// True iff {rat(F^t(c))} lies in S for all 0 <= t <= horizon.
/// Throws Error(NonPositive) for the zero configuration.
bool orbit_stays_in(const Params &params, const FiniteConfig &config, const IntervalSet &set,
                    std::uint64_t horizon);

struct OrbitQuery {
    IntervalSet set;
    std::uint64_t horizon = 0;
    /// Cells at positions 0, -1, ..., -window_radius+1 may be nonzero; the witness
    /// integer part is limited to that many digits. For window_radius >= 1 and a
    /// positive horizon the integer part must be nonzero (xi >= 1), which rules
    /// out tiny xi whose orbit just sits near 0.
    std::uint64_t window_radius = 0;
    /// Every endpoint of `set` must be a multiple of (pq)^{-resolution}.
    std::size_t resolution = 1;
};

/// Depth-first search over the base-pq digits of xi (integer part first, then at
/// most resolution + horizon fractional digits) for a positive terminating xi whose
/// orbit prefix of length horizon+1 stays in the set. Prefixes are pruned with
/// exact interval images. nullopt when the search space is exhausted.
/// Throws Error(PreconditionViolated) for a misaligned set and Error(WorkLimit).
std::optional<FiniteConfig> witness_search(const Params &params, const OrbitQuery &query,
                                           std::uint64_t work_limit = default_work_limit);

struct EscapeCensus {
    std::uint64_t samples = 0;
    std::uint64_t horizon = 0;
    std::map<std::uint64_t, std::uint64_t> histogram; ///< first hitting time -> samples
    std::uint64_t no_hit = 0;
};

/// Random configurations with digits drawn uniformly at positions
/// -(integer_digits-1) .. fraction_digits, stepped until F^t(c) lies in one of
/// the cylinders cyl(target, 1). Deterministic for a given seed.
EscapeCensus escape_time_census(const Params &params, const std::vector<Word> &targets, std::uint64_t horizon,
                                std::uint64_t samples, std::uint64_t seed, std::size_t integer_digits = 4,
                                std::size_t fraction_digits = 8, unsigned workers = 1);

} // namespace pqca
