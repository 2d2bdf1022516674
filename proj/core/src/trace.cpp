#include <pqca/trace.hpp>

#include <pqca/ca.hpp>
#include <pqca/error.hpp>
#include <pqca/parallel.hpp>

#include <algorithm>

namespace pqca {

SpecialDigits special_digits(const Params &params) {
    const std::uint32_t p = params.p();
    const std::uint32_t q = params.q();
    if (p < q)
        throw Error(ErrorCode::PreconditionViolated,
                    "special digits need p > q, got " + params.to_string());
    SpecialDigits out;
    out.p = p;
    out.q = q;
    out.class_of_residue.assign(p, -1);
    for (std::uint32_t d = 0; d < q; ++d) {
        std::uint32_t kd = 0;
        while ((static_cast<std::uint64_t>(kd) * q) % p != d % p)
            ++kd;
        out.k.push_back(kd);
        out.j.push_back((kd * q - d) / p);
        out.class_of_residue[kd] = static_cast<std::int32_t>(d);
    }
    for (Digit a = 0; a < params.base(); ++a)
        if (out.contains(a))
            out.digits.push_back(a);
    return out;
}

DetTable::DetTable(const Params &params) : params_(params) {}

std::optional<Digit> DetTable::lookup(Digit up, Digit mid, Digit down) const noexcept {
    const std::uint64_t n = params_.base();
    if (up >= n || mid >= n || down >= n)
        return std::nullopt;
    auto v = cells_[(up * n + mid) * n + down];
    if (v < 0)
        return std::nullopt;
    return static_cast<Digit>(v);
}

DetScan scan_det_table(const Params &params) {
    const std::uint64_t n = params.base();
    constexpr std::uint64_t max_cells = std::uint64_t{1} << 25;
    if (n * n * n > max_cells)
        throw Error(ErrorCode::Infeasible, "determination table for base " + std::to_string(n) +
                                               " would need " + std::to_string(n * n * n) + " cells");
    DetScan scan{DetTable(params), 0, 0};
    auto &cells = scan.table.cells_;
    cells.assign(n * n * n, -1);
    const Params inverse = params.swapped();
    for (Digit x = 0; x < n; ++x) {
        for (Digit a = 0; a < n; ++a) {
            for (Digit y = 0; y < n; ++y) {
                const Digit up = f_local(inverse, x, a, y);
                const Digit down = f_local(params, x, a, y);
                auto &cell = cells[(up * n + a) * n + down];
                if (cell < 0) {
                    cell = static_cast<std::int32_t>(x);
                    ++scan.table.defined_;
                } else if (cell != static_cast<std::int32_t>(x)) {
                    ++scan.conflicts;
                }
                ++scan.triples;
            }
        }
    }
    return scan;
}

DetTable build_det_table(const Params &params) {
    auto scan = scan_det_table(params);
    if (scan.conflicts != 0)
        throw Error(ErrorCode::ConsistencyViolation,
                    std::to_string(scan.conflicts) + " conflicting keys for " + params.to_string());
    return std::move(scan.table);
}

Word decode_prefix(const DetTable &table, std::span<const Digit> trace) {
    if (trace.size() % 2 == 0)
        throw Error(ErrorCode::PreconditionViolated,
                    "trace window must have odd length, got " + std::to_string(trace.size()));
    check_word(table.params(), trace);
    const std::size_t k = (trace.size() + 1) / 2;
    Word prefix(k);
    Word column(trace.begin(), trace.end());
    Word next;
    for (std::size_t col = k; col-- > 0;) {
        prefix[col] = column[column.size() / 2];
        if (col == 0)
            break;
        next.resize(column.size() - 2);
        for (std::size_t t = 1; t + 1 < column.size(); ++t) {
            auto x = table.lookup(column[t - 1], column[t], column[t + 1]);
            if (!x)
                throw Error(ErrorCode::Unrealizable, "no digit left of (" + std::to_string(column[t - 1]) + "," +
                                                         std::to_string(column[t]) + "," +
                                                         std::to_string(column[t + 1]) + ")");
            next[t - 1] = *x;
        }
        column.swap(next);
    }
    return prefix;
}

TraceWord trace_of_window(const Params &params, std::span<const Digit> word, std::size_t column,
                          std::int64_t t_min, std::int64_t t_max) {
    if (t_min > t_max)
        throw Error(ErrorCode::PreconditionViolated, "empty time range");
    check_word(params, word);
    const auto reach = static_cast<std::size_t>(std::max<std::int64_t>({0, -t_min, t_max}));
    if (column >= word.size() || column < reach || column + reach >= word.size())
        throw Error(ErrorCode::OutOfCone, "column " + std::to_string(column) + " over times [" +
                                              std::to_string(t_min) + "," + std::to_string(t_max) +
                                              "] needs digits outside the " + std::to_string(word.size()) +
                                              "-digit window");
    TraceWord out;
    out.reserve(static_cast<std::size_t>(t_max - t_min + 1));
    auto row_value = [&](std::int64_t t) {
        const Params rule = t >= 0 ? params : params.swapped();
        const auto steps = static_cast<std::size_t>(t >= 0 ? t : -t);
        auto cone = word.subspan(column - steps, 2 * steps + 1);
        return step_F_word(rule, cone, steps).front();
    };
    for (std::int64_t t = t_min; t <= t_max; ++t)
        out.push_back(row_value(t));
    return out;
}

namespace {

// Depth-first construction of a window w of length 2m-1 whose center column reads
// `trace` over times 0..m-1. Level t fixes the digits at distance t from the
// center; rows[r][i] caches F^r(w) at absolute index i.
class TraceWitnessSearch {
public:
    TraceWitnessSearch(const Params &params, std::span<const Digit> trace, std::uint64_t work_limit)
        : params_(params), trace_(trace), m_(trace.size()), center_(m_ - 1), work_limit_(work_limit),
          rows_(m_, Word(2 * m_ - 1, 0)), right_edges_(m_) {}

    bool run() {
        rows_[0][center_] = trace_[0];
        return extend(1);
    }

private:
    bool extend(std::size_t t) {
        if (t == m_)
            return true;
        const Digit n = params_.base();
        auto &right = right_edges_[t];
        // Right edge of rows 0..t-1 for every candidate digit b; independent of the left digit.
        right.assign(static_cast<std::size_t>(n) * t, 0);
        for (Digit b = 0; b < n; ++b) {
            Digit *edge = &right[static_cast<std::size_t>(b) * t];
            edge[0] = b;
            for (std::size_t r = 1; r < t; ++r) {
                const std::size_t i = center_ + (t - r);
                edge[r] = f_local(params_, rows_[r - 1][i - 1], rows_[r - 1][i], edge[r - 1]);
            }
        }
        Word left(t);
        for (Digit a = 0; a < n; ++a) {
            left[0] = a;
            for (std::size_t r = 1; r < t; ++r) {
                const std::size_t i = center_ - (t - r);
                left[r] = f_local(params_, left[r - 1], rows_[r - 1][i], rows_[r - 1][i + 1]);
            }
            const Digit mid = rows_[t - 1][center_];
            for (Digit b = 0; b < n; ++b) {
                if (++work_ > work_limit_)
                    throw Error(ErrorCode::Infeasible, "trace-word search exceeded " +
                                                           std::to_string(work_limit_) + " extensions");
                const Digit *edge = &right[static_cast<std::size_t>(b) * t];
                if (f_local(params_, left[t - 1], mid, edge[t - 1]) != trace_[t])
                    continue;
                for (std::size_t r = 0; r < t; ++r) {
                    rows_[r][center_ - (t - r)] = left[r];
                    rows_[r][center_ + (t - r)] = edge[r];
                }
                rows_[t][center_] = trace_[t];
                if (extend(t + 1))
                    return true;
            }
        }
        return false;
    }

    const Params &params_;
    std::span<const Digit> trace_;
    std::size_t m_;
    std::size_t center_;
    std::uint64_t work_limit_;
    std::uint64_t work_ = 0;
    std::vector<Word> rows_;
    std::vector<Word> right_edges_;
};

} // namespace

bool is_trace_word(const Params &params, std::span<const Digit> trace, std::uint64_t work_limit) {
    if (trace.empty())
        throw Error(ErrorCode::EmptyWord, "trace word must be nonempty");
    check_word(params, trace);
    return TraceWitnessSearch(params, trace, work_limit).run();
}

std::vector<TraceWord> pruned_language(const Params &params, std::size_t n, std::uint64_t work_limit) {
    if (params.p() < 2 * params.q() - 1)
        throw Error(ErrorCode::PreconditionViolated, "pruned language needs p >= 2q-1, got " + params.to_string());
    if (n == 0)
        throw Error(ErrorCode::PreconditionViolated, "pruned language needs n >= 1");
    const Nat count = pow(params.q(), n + 1);
    if (count > work_limit)
        throw Error(ErrorCode::Infeasible, "pruned language of length " + std::to_string(n) + " has " +
                                               count.get_str() + " words (limit " +
                                               std::to_string(work_limit) + ")");
    const SpecialDigits special = special_digits(params);

    // Generated in reversed time: v(0) in D, v(i+1) in D with v(i+1) = j_d (mod q)
    // where v(i) = k_d (mod p).
    std::vector<Word> current;
    for (Digit a : special.digits)
        current.push_back({a});
    for (std::size_t len = 1; len < n; ++len) {
        std::vector<Word> next;
        next.reserve(current.size() * params.q());
        for (const auto &v : current) {
            const Digit d = *special.residue_class(v.back());
            for (Digit b : special.digits) {
                if (b % params.q() != special.j[d])
                    continue;
                Word w = v;
                w.push_back(b);
                next.push_back(std::move(w));
            }
        }
        current.swap(next);
    }
    for (auto &v : current)
        std::reverse(v.begin(), v.end());
    std::sort(current.begin(), current.end());
    return current;
}

CensusResult language_census(const Params &params, std::size_t n, bool exact, std::uint64_t work_limit,
                             unsigned workers) {
    CensusResult out;
    out.n = n;
    out.bound = pow(params.q(), n + 1);
    if (params.p() < 2 * params.q() - 1)
        throw Error(ErrorCode::PreconditionViolated, "census needs p >= 2q-1, got " + params.to_string());
    if (!exact)
        return out;
    const auto candidates = pruned_language(params, n, work_limit);
    out.exact = parallel_reduce<std::uint64_t>(
        candidates.size(), workers, 0,
        [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t hits = 0;
            for (auto i = begin; i < end; ++i)
                hits += is_trace_word(params, candidates[i], work_limit) ? 1 : 0;
            return hits;
        },
        [](std::uint64_t &acc, std::uint64_t part) { acc += part; });
    return out;
}

} // namespace pqca
