#include <pqca/verify.hpp>

#include <pqca/ca.hpp>
#include <pqca/error.hpp>
#include <pqca/parallel.hpp>

#include <chrono>
#include <random>

namespace pqca {

void Report::violation(std::string what) {
    ++violation_count;
    if (violations.size() < max_recorded)
        violations.push_back(std::move(what));
}

void Report::absorb(Report &&other) {
    checked += other.checked;
    violation_count += other.violation_count;
    for (auto &v : other.violations)
        if (violations.size() < max_recorded)
            violations.push_back(std::move(v));
}

namespace {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t limit, const char *what) {
    const Nat n = pow(base, exponent);
    if (n > limit)
        throw Error(ErrorCode::WorkLimit, std::string(what) + ": " + n.get_str() + " cases exceed the limit " +
                                              std::to_string(limit));
    return to_u64(n);
}

void fill_digits(std::uint64_t m, std::uint32_t base, Word &out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Digit>(m % base);
        m /= base;
    }
}

std::string tuple_string(std::initializer_list<Digit> digits) {
    std::string out = "(";
    bool first = true;
    for (Digit d : digits) {
        if (!first)
            out += ",";
        out += std::to_string(d);
        first = false;
    }
    return out + ")";
}

Report merge_identity(const Report &shape) {
    Report r;
    r.name = shape.name;
    r.parameters = shape.parameters;
    return r;
}

} // namespace

Report verify_local_lemmas(const Params &params, unsigned workers) {
    Stopwatch clock;
    Report report;
    report.name = "local-lemmas";
    report.parameters = params.to_string();
    const std::uint32_t n = params.base();
    const std::uint32_t q = params.q();
    auto merge = [](Report &acc, Report &&part) { acc.absorb(std::move(part)); };

    // g(x,z) = g(y,w)  =>  x = y (mod q)
    report.absorb(parallel_reduce<Report>(
        n, workers, merge_identity(report),
        [&](std::uint64_t begin, std::uint64_t end) {
            Report part;
            for (auto x = static_cast<Digit>(begin); x < end; ++x)
                for (Digit z = 0; z < n; ++z)
                    for (Digit y = 0; y < n; ++y)
                        for (Digit w = 0; w < n; ++w) {
                            ++part.checked;
                            if (g_local(params, x, z) == g_local(params, y, w) && x % q != y % q)
                                part.violation("g-left-residue " + tuple_string({x, z, y, w}));
                        }
            return part;
        },
        merge));

    // g(x,a) = g(y,a) (mod q)  <=>  x = y (mod q)
    for (Digit x = 0; x < n; ++x)
        for (Digit y = 0; y < n; ++y)
            for (Digit a = 0; a < n; ++a) {
                ++report.checked;
                const bool lhs = g_local(params, x, a) % q == g_local(params, y, a) % q;
                const bool rhs = x % q == y % q;
                if (lhs != rhs)
                    report.violation("g-residue-iff " + tuple_string({x, y, a}));
            }

    // f(x,a,y) = f(z,a,w)  =>  x = z (mod q)
    report.absorb(parallel_reduce<Report>(
        n, workers, merge_identity(report),
        [&](std::uint64_t begin, std::uint64_t end) {
            Report part;
            for (auto a = static_cast<Digit>(begin); a < end; ++a)
                for (Digit x = 0; x < n; ++x)
                    for (Digit y = 0; y < n; ++y) {
                        const Digit lhs = f_local(params, x, a, y);
                        for (Digit z = 0; z < n; ++z)
                            for (Digit w = 0; w < n; ++w) {
                                ++part.checked;
                                if (lhs == f_local(params, z, a, w) && x % q != z % q)
                                    part.violation("f-left-residue " + tuple_string({x, a, y, z, w}));
                            }
                    }
            return part;
        },
        merge));

    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

Report verify_odometer(const Params &params, std::size_t k_max, std::size_t t_max, unsigned workers,
                       std::uint64_t work_limit) {
    Stopwatch clock;
    Report report;
    report.name = "odometer";
    report.parameters = params.to_string() + " k<=" + std::to_string(k_max) + " t<=" + std::to_string(t_max);
    const std::uint64_t n = params.base();
    for (std::size_t k = 3; k <= k_max; ++k) {
        const std::uint64_t words = checked_power(n, k, work_limit, "odometer");
        for (std::size_t t = 1; t <= t_max && 2 * t + 1 <= k; ++t) {
            const std::uint64_t step = to_u64(pow(params.q(), 2 * t));
            const std::uint64_t out_mod = to_u64(pow(n, k - 2 * t));
            const std::string tag = " k=" + std::to_string(k) + " t=" + std::to_string(t);

            struct Part {
                Report report;
                std::vector<std::uint64_t> image;
            };
            auto part = parallel_reduce<Part>(
                words, workers, Part{},
                [&](std::uint64_t begin, std::uint64_t end) {
                    Part out;
                    out.image.reserve(end - begin);
                    Word w(k);
                    for (auto m = begin; m < end; ++m) {
                        fill_digits(m, params.base(), w);
                        const Word direct = step_F_word(params, w, t);
                        const Word closed = ftpow_closed_form(params, w, t);
                        ++out.report.checked;
                        if (direct != closed)
                            out.report.violation("closed form differs on " + format_word(params, w) + tag);
                        out.image.push_back(to_u64(integ(params, direct)));
                    }
                    return out;
                },
                [](Part &acc, Part &&p) {
                    acc.report.absorb(std::move(p.report));
                    acc.image.insert(acc.image.end(), p.image.begin(), p.image.end());
                });
            report.absorb(std::move(part.report));
            const auto &image = part.image;

            for (std::uint64_t m = 0; m < std::min(step, words); ++m) {
                ++report.checked;
                if (image[m] != 0)
                    report.violation("integ(w) < q^2t but F^t(w) != 0 at m=" + std::to_string(m) + tag);
            }
            for (std::uint64_t m = 0; m < words; ++m) {
                ++report.checked;
                const std::uint64_t next = (m + step) % words;
                if (image[next] != (image[m] + 1) % out_mod)
                    report.violation("increment fails at m=" + std::to_string(m) + tag);
            }
        }
    }
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

Report verify_reversibility(const Params &params, std::size_t length, unsigned workers, std::uint64_t work_limit) {
    if (length < 5)
        throw Error(ErrorCode::TooShort, "reversibility check needs words of length >= 5");
    Stopwatch clock;
    Report report;
    report.name = "reversibility";
    report.parameters = params.to_string() + " |w|=" + std::to_string(length);
    const std::uint64_t words = checked_power(params.base(), length, work_limit, "reversibility");
    const Params inverse = params.swapped();
    report.absorb(parallel_reduce<Report>(
        words, workers, merge_identity(report),
        [&](std::uint64_t begin, std::uint64_t end) {
            Report part;
            Word w(length);
            for (auto m = begin; m < end; ++m) {
                fill_digits(m, params.base(), w);
                const Word back = step_F_word(inverse, step_F_word(params, w, 1), 1);
                ++part.checked;
                if (!std::equal(back.begin(), back.end(), w.begin() + 2))
                    part.violation("F_{q,p}(F_{p,q}(w)) != middle of " + format_word(params, w));
            }
            return part;
        },
        [](Report &acc, Report &&part) { acc.absorb(std::move(part)); }));
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

Report verify_multiplication_law(const Params &params, std::uint64_t samples, std::uint64_t seed) {
    Stopwatch clock;
    Report report;
    report.name = "multiplication-law";
    report.parameters = params.to_string() + " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed);
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::uint64_t bound) { return rng() % bound; };
    const Rat p(params.p());
    const Rat ratio = make_rat(params.p(), params.q());

    for (std::uint64_t s = 0; s < samples; ++s) {
        Rat xi;
        if (s % 2 == 0) {
            // num / (p^a q^b)
            Nat den = pow(params.p(), uniform(6)) * pow(params.q(), uniform(6));
            xi = make_rat(Nat(std::to_string(uniform(1'000'000'000))), den);
        } else {
            Word digits(1 + uniform(10));
            for (auto &d : digits)
                d = static_cast<Digit>(uniform(params.base()));
            const auto offset = static_cast<std::int64_t>(uniform(9)) - 4;
            xi = rat_of_config(params, FiniteConfig(offset, std::move(digits)));
        }
        const FiniteConfig c = config_of_rat(params, xi);
        const std::string at = " at xi=" + to_string(xi);
        ++report.checked;
        if (rat_of_config(params, c) != xi)
            report.violation("round trip fails" + at);
        ++report.checked;
        if (rat_of_config(params, step_G_config(params, c)) != p * xi)
            report.violation("G does not multiply by p" + at);
        ++report.checked;
        if (rat_of_config(params, step_F_config(params, c, 1)) != ratio * xi)
            report.violation("F does not multiply by p/q" + at);
        ++report.checked;
        if (rat_of_config(params, step_F_config(params, c, -1)) != xi / ratio)
            report.violation("F^-1 does not multiply by q/p" + at);
    }
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

Report verify_det_table(const Params &params) {
    Stopwatch clock;
    Report report;
    report.name = "determination";
    report.parameters = params.to_string();
    const auto scan = scan_det_table(params);
    report.checked = scan.triples;
    for (std::uint64_t i = 0; i < scan.conflicts; ++i)
        report.violation("conflicting determination key");
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

} // namespace pqca
