#include <pqca/intervals.hpp>

#include <pqca/error.hpp>
#include <pqca/parallel.hpp>
#include <pqca/word.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace pqca {

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
    for (const auto &iv : intervals)
        if (sgn(iv.lo) < 0 || iv.hi > 1 || !(iv.lo < iv.hi))
            throw Error(ErrorCode::OutOfRange,
                        "interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) + ") is not inside [0, 1)");
    std::sort(intervals.begin(), intervals.end(), [](const Interval &a, const Interval &b) { return a.lo < b.lo; });
    for (auto &iv : intervals) {
        if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
            if (iv.hi > intervals_.back().hi)
                intervals_.back().hi = iv.hi;
        } else {
            intervals_.push_back(std::move(iv));
        }
    }
}

IntervalSet IntervalSet::unit() {
    return IntervalSet({{Rat(0), Rat(1)}});
}

Rat IntervalSet::measure() const {
    Rat total = 0;
    for (const auto &iv : intervals_)
        total += iv.hi - iv.lo;
    return total;
}

bool IntervalSet::contains(const Rat &xi) const {
    const Rat x = frac(xi);
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](const Rat &v, const Interval &iv) { return v < iv.lo; });
    if (it == intervals_.begin())
        return false;
    --it;
    return x < it->hi;
}

IntervalSet IntervalSet::unite(const IntervalSet &other) const {
    std::vector<Interval> all = intervals_;
    all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
    return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::complement() const {
    std::vector<Interval> out;
    Rat cursor = 0;
    for (const auto &iv : intervals_) {
        if (cursor < iv.lo)
            out.push_back({cursor, iv.lo});
        cursor = iv.hi;
    }
    if (cursor < 1)
        out.push_back({cursor, Rat(1)});
    return IntervalSet(std::move(out));
}

std::optional<std::size_t> grid_resolution(const Params &params, const IntervalSet &set) {
    std::size_t k = 0;
    for (const auto &iv : set.intervals()) {
        for (const Rat *end : {&iv.lo, &iv.hi}) {
            Nat den = end->get_den();
            std::size_t need = 0;
            Nat scale = 1;
            Nat g;
            // Denominator must divide some power of the base.
            Nat rest = den;
            for (;;) {
                mpz_gcd_ui(g.get_mpz_t(), rest.get_mpz_t(), params.base());
                if (g == 1)
                    break;
                rest /= g;
            }
            if (rest != 1)
                return std::nullopt;
            while (scale % den != 0) {
                scale *= params.base();
                ++need;
            }
            k = std::max(k, need);
        }
    }
    return k;
}

namespace {

void require_afs_range(const Params &params, const char *what) {
    if (params.p() < 2 * params.q() - 1)
        throw Error(ErrorCode::PreconditionViolated,
                    std::string(what) + " needs p >= 2q-1, got " + params.to_string());
}

// Cells [m, m+1) * scale^{-1} for sorted unique m, consecutive runs merged.
IntervalSet cells_to_set(const std::vector<Nat> &cells, const Nat &scale) {
    std::vector<Interval> out;
    std::size_t i = 0;
    while (i < cells.size()) {
        std::size_t j = i;
        while (j + 1 < cells.size() && cells[j + 1] == cells[j] + 1)
            ++j;
        out.push_back({make_rat(cells[i], scale), make_rat(cells[j] + 1, scale)});
        i = j + 1;
    }
    return IntervalSet(std::move(out));
}

} // namespace

IntervalSet build_Y(const Params &params) {
    require_afs_range(params, "Y");
    const auto special = special_digits(params);
    std::vector<Interval> out;
    for (Digit kd : special.k)
        out.push_back({make_rat(kd, params.p()), make_rat(kd + 1, params.p())});
    return IntervalSet(std::move(out));
}

IntervalSet build_X(const Params &params) {
    require_afs_range(params, "X");
    const auto special = special_digits(params);
    std::vector<Nat> cells(special.digits.begin(), special.digits.end());
    return cells_to_set(cells, params.base());
}

IConstruction build_I(const Params &params, std::size_t k, bool exact_filter, const BuildOptions &options) {
    require_afs_range(params, "I");
    if (k == 0)
        throw Error(ErrorCode::PreconditionViolated, "I needs k >= 1");
    IConstruction out;
    out.k = k;
    const auto candidates = pruned_language(params, 2 * k - 1, options.work_limit);
    out.candidates = candidates.size();
    const DetTable table = build_det_table(params);

    struct Partial {
        std::vector<Word> words;
        std::uint64_t filtered_out = 0;
        std::uint64_t unrealizable = 0;
    };
    auto partial = parallel_reduce<Partial>(
        candidates.size(), options.workers, Partial{},
        [&](std::uint64_t begin, std::uint64_t end) {
            Partial part;
            for (auto i = begin; i < end; ++i) {
                const auto &u = candidates[i];
                if (exact_filter && !is_trace_word(params, u, options.work_limit)) {
                    ++part.filtered_out;
                    continue;
                }
                try {
                    part.words.push_back(decode_prefix(table, u));
                } catch (const Error &e) {
                    if (e.code() != ErrorCode::Unrealizable)
                        throw;
                    ++part.unrealizable;
                }
            }
            return part;
        },
        [](Partial &acc, Partial &&part) {
            acc.words.insert(acc.words.end(), std::make_move_iterator(part.words.begin()),
                             std::make_move_iterator(part.words.end()));
            acc.filtered_out += part.filtered_out;
            acc.unrealizable += part.unrealizable;
        });
    out.filtered_out = partial.filtered_out;
    out.unrealizable = partial.unrealizable;

    std::vector<Nat> cells;
    cells.reserve(partial.words.size());
    for (const auto &w : partial.words)
        cells.push_back(integ(params, w));
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    out.word_count = cells.size();
    out.set = cells_to_set(cells, pow(params.base(), k));
    return out;
}

IntervalSet push_forward(const Params &params, const IntervalSet &set) {
    const Rat ratio = make_rat(params.p(), params.q());
    std::vector<Interval> out;
    for (const auto &iv : set.intervals()) {
        for (std::uint32_t j = 0; j < params.q(); ++j) {
            const Rat shift = make_rat(j, params.q());
            Rat lo = shift + ratio * iv.lo;
            Rat hi = shift + ratio * iv.hi;
            if (hi - lo >= 1)
                return IntervalSet::unit();
            const Rat whole(floor(lo));
            lo -= whole;
            hi -= whole;
            if (hi <= 1) {
                out.push_back({lo, hi});
            } else {
                out.push_back({lo, Rat(1)});
                out.push_back({Rat(0), hi - 1});
            }
        }
    }
    return IntervalSet(std::move(out));
}

JConstruction plan_J(const Params &params, const Rat &epsilon) {
    if (params.p() <= params.q())
        throw Error(ErrorCode::PreconditionViolated, "J needs p > q, got " + params.to_string());
    if (sgn(epsilon) <= 0 || epsilon > 1)
        throw Error(ErrorCode::PreconditionViolated, "J needs 0 < eps <= 1, got " + to_string(epsilon));
    JConstruction plan;
    Nat pn = params.p();
    Nat qn = params.q();
    plan.n = 1;
    while (pn < 2 * qn - 1) {
        pn *= params.p();
        qn *= params.q();
        ++plan.n;
    }
    plan.inner_p = to_u64(pn);
    plan.inner_q = to_u64(qn);
    plan.eta = epsilon * Rat(params.p() - 1) / Rat(pn - 1);
    plan.eta.canonicalize();
    const Rat ratio = make_rat(qn, pn);
    Rat length = ratio;
    plan.k = 1;
    while (length > plan.eta) {
        length *= ratio;
        ++plan.k;
    }
    return plan;
}

JConstruction build_J(const Params &params, const Rat &epsilon, const BuildOptions &options) {
    JConstruction out = plan_J(params, epsilon);
    const Params inner = Params::make(static_cast<std::int64_t>(out.inner_p), static_cast<std::int64_t>(out.inner_q));
    auto first = build_I(inner, out.k, false, options);
    out.word_count = first.word_count;
    out.pieces.push_back(std::move(first.set));
    for (std::size_t i = 1; i < out.n; ++i)
        out.pieces.push_back(push_forward(params, out.pieces.back()));
    for (const auto &piece : out.pieces)
        out.set = out.set.unite(piece);
    return out;
}

std::string to_json(const IntervalSet &set) {
    nlohmann::ordered_json doc;
    doc["intervals"] = nlohmann::ordered_json::array();
    for (const auto &iv : set.intervals())
        doc["intervals"].push_back({to_string(iv.lo), to_string(iv.hi)});
    doc["total_length"] = to_string(set.measure());
    return doc.dump();
}

IntervalSet interval_set_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::Parse, e.what());
    }
    if (!doc.is_object() || !doc.contains("intervals") || !doc["intervals"].is_array())
        throw Error(ErrorCode::Parse, "expected an object with an \"intervals\" array");
    std::vector<Interval> out;
    for (const auto &pair : doc["intervals"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw Error(ErrorCode::Parse, "each interval must be a pair of \"num/den\" strings");
        out.push_back({parse_rat(pair[0].get<std::string>()), parse_rat(pair[1].get<std::string>())});
    }
    return IntervalSet(std::move(out));
}

std::string to_csv(const IntervalSet &set) {
    std::string out = "a_num,a_den,b_num,b_den\n";
    for (const auto &iv : set.intervals()) {
        out += iv.lo.get_num().get_str() + "," + iv.lo.get_den().get_str() + "," + iv.hi.get_num().get_str() +
               "," + iv.hi.get_den().get_str() + "\n";
    }
    return out;
}

IntervalSet interval_set_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "a_num,a_den,b_num,b_den")
        throw Error(ErrorCode::Parse, "missing CSV header a_num,a_den,b_num,b_den");
    std::vector<Interval> out;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ','))
            fields.push_back(field);
        if (fields.size() != 4)
            throw Error(ErrorCode::Parse, "expected 4 fields in '" + line + "'");
        out.push_back({parse_rat(fields[0] + "/" + fields[1]), parse_rat(fields[2] + "/" + fields[3])});
    }
    return IntervalSet(std::move(out));
}

} // namespace pqca
