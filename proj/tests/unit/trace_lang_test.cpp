#include <doctest.h>

#include <pqca/ca.hpp>
#include <pqca/error.hpp>
#include <pqca/trace.hpp>

#include <map>
#include <set>

using namespace pqca;

namespace {

const Params P32 = Params::make(3, 2);

Word w(const char *text) { return parse_word(P32, text); }

std::uint64_t power(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

Word nth_word(std::uint64_t m, std::uint32_t base, std::size_t len) {
    Word out(len);
    for (std::size_t i = len; i-- > 0; m /= base)
        out[i] = static_cast<Digit>(m % base);
    return out;
}

// Every column of length m seen in the forward diagrams of all windows of
// width 2m-1: the brute-force trace language.
std::set<Word> brute_traces(const Params &params, std::size_t m) {
    std::set<Word> out;
    const std::size_t width = 2 * m - 1;
    for (std::uint64_t k = 0; k < power(params.base(), width); ++k) {
        Word row = nth_word(k, params.base(), width);
        Word column;
        for (std::size_t t = 0; t < m; ++t) {
            column.push_back(row[row.size() / 2]);
            if (t + 1 < m) {
                Word next;
                for (std::size_t i = 0; i + 2 < row.size(); ++i)
                    next.push_back(f_local(params, row[i], row[i + 1], row[i + 2]));
                row = next;
            }
        }
        out.insert(column);
    }
    return out;
}

// Mirror-language rule, written out directly: u (increasing time) is pruned iff
// reversing it gives a word over D where a = k_d (mod p) forces b = j_d (mod q).
bool pruned_oracle(const Params &params, const Word &u) {
    const std::uint32_t p = params.p(), q = params.q();
    auto k_of = [&](std::uint32_t d) {
        for (std::uint32_t k = 0; k < p; ++k)
            if ((k * q) % p == d)
                return k;
        return p;
    };
    auto in_D = [&](Digit a) {
        for (std::uint32_t d = 0; d < q; ++d)
            if (a % p == k_of(d))
                return true;
        return false;
    };
    Word r(u.rbegin(), u.rend());
    for (Digit a : r)
        if (!in_D(a))
            return false;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        for (std::uint32_t d = 0; d < q; ++d) {
            if (r[i] % p != k_of(d))
                continue;
            const std::uint32_t j = (k_of(d) * q - d) / p;
            if (r[i + 1] % q != j)
                return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("special digits") {
    auto s = special_digits(P32);
    CHECK(s.k == Word{0, 2});
    CHECK(s.j == Word{0, 1});
    CHECK(s.digits == Word{0, 2, 3, 5});
    s = special_digits(Params::make(5, 2));
    CHECK(s.k == Word{0, 3});
    CHECK(s.j == Word{0, 1});
    CHECK(s.digits == Word{0, 3, 5, 8});
    s = special_digits(Params::make(5, 3));
    CHECK(s.k == Word{0, 2, 4});
    CHECK(s.j == Word{0, 1, 2});
    CHECK(s.digits == Word{0, 2, 4, 5, 7, 9, 10, 12, 14});
    for (auto [p, q] : {std::pair{7, 4}, {4, 3}, {11, 7}}) {
        const Params params = Params::make(p, q);
        s = special_digits(params);
        CHECK(s.digits.size() == static_cast<std::size_t>(q * q));
        for (std::uint32_t d = 0; d < s.q; ++d)
            CHECK(s.k[d] * s.q == s.j[d] * s.p + d);
        CHECK(std::set<Digit>(s.k.begin(), s.k.end()).size() == s.q);
    }
}

TEST_CASE("determination table") {
    const DetTable table = build_det_table(P32);
    CHECK(table.lookup(2, 4, 3) == 3);
    CHECK(table.lookup(0, 0, 0) == 0);

    SUBCASE("matches a brute-force map and has no conflicts") {
        for (auto [p, q] : {std::pair{3, 2}, {5, 2}, {5, 3}, {4, 3}, {7, 4}}) {
            const Params params = Params::make(p, q);
            const Params inv = params.swapped();
            std::map<std::tuple<Digit, Digit, Digit>, std::set<Digit>> seen;
            for (Digit x = 0; x < params.base(); ++x)
                for (Digit a = 0; a < params.base(); ++a)
                    for (Digit y = 0; y < params.base(); ++y)
                        seen[{f_local(inv, x, a, y), a, f_local(params, x, a, y)}].insert(x);
            const DetScan scan = scan_det_table(params);
            CHECK(scan.conflicts == 0);
            CHECK(scan.table.defined() == seen.size());
            for (const auto &[key, xs] : seen) {
                REQUIRE(xs.size() == 1);
                auto [up, mid, down] = key;
                REQUIRE(scan.table.lookup(up, mid, down) == *xs.begin());
            }
        }
    }
}

TEST_CASE("traces of windows") {
    CHECK(trace_of_window(P32, w("3434205"), 3, -2, 2) == Word{1, 2, 4, 3, 2});
    CHECK(trace_of_window(P32, w("3434205"), 3, 0, 3) == Word{4, 3, 2, 0});
    CHECK(trace_of_window(P32, w("0000000"), 3, -3, 3) == Word(7, 0));
    CHECK_THROWS_AS(trace_of_window(P32, w("3434205"), 1, 0, 2), Error);
    // inverse rows of the same window
    CHECK(step_F_word(P32.swapped(), w("3434205"), 1) == w("30252"));
    CHECK(step_F_word(P32.swapped(), w("3434205"), 2) == w("015"));
}

TEST_CASE("decoding trace words") {
    const DetTable table = build_det_table(P32);
    CHECK(decode_prefix(table, Word{4}) == Word{4});
    CHECK(decode_prefix(table, Word{2, 4, 3}) == Word{3, 4});
    CHECK(decode_prefix(table, Word{1, 2, 3, 1, 5, 2, 3}) == w("2351"));
    CHECK_THROWS_AS(decode_prefix(table, Word{1, 2}), Error);

    SUBCASE("some key is undefined") {
        bool found = false;
        for (Digit a = 0; a < 6 && !found; ++a)
            for (Digit b = 0; b < 6 && !found; ++b)
                for (Digit c = 0; c < 6 && !found; ++c)
                    if (!table.lookup(a, b, c)) {
                        found = true;
                        try {
                            decode_prefix(table, Word{a, b, c});
                            FAIL("expected Unrealizable");
                        } catch (const Error &e) {
                            CHECK(e.code() == ErrorCode::Unrealizable);
                        }
                    }
        CHECK(found);
    }

    SUBCASE("decoding the centre trace returns the row prefix") {
        for (std::size_t k = 1; k <= 3; ++k) {
            const std::size_t width = 2 * k - 1;
            const auto span = static_cast<std::int64_t>(k - 1);
            for (std::uint64_t m = 0; m < power(6, width); ++m) {
                const Word row = nth_word(m, 6, width);
                const Word u = trace_of_window(P32, row, k - 1, -span, span);
                REQUIRE(decode_prefix(table, u) == Word(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k)));
            }
        }
    }
}

TEST_CASE("trace-word membership") {
    CHECK(is_trace_word(P32, Word{5}));
    CHECK(is_trace_word(P32, Word(6, 0)));
    CHECK(is_trace_word(P32, Word{4, 3}));

    SUBCASE("agrees with brute force, m <= 3") {
        for (auto [p, q] : {std::pair{3, 2}, {2, 3}}) {
            const Params params = Params::make(p, q);
            for (std::size_t m = 1; m <= 3; ++m) {
                const auto traces = brute_traces(params, m);
                for (std::uint64_t k = 0; k < power(params.base(), m); ++k) {
                    const Word u = nth_word(k, params.base(), m);
                    REQUIRE(is_trace_word(params, u) == (traces.count(u) > 0));
                }
            }
        }
    }

    SUBCASE("mirror property, m <= 4") {
        for (std::size_t m = 1; m <= 4; ++m)
            for (std::uint64_t k = 0; k < power(6, m); ++k) {
                const Word u = nth_word(k, 6, m);
                const Word r(u.rbegin(), u.rend());
                REQUIRE(is_trace_word(P32, u) == is_trace_word(P32.swapped(), r));
            }
    }
}

TEST_CASE("pruned language") {
    const auto one = pruned_language(P32, 1);
    CHECK(one == std::vector<Word>{{0}, {2}, {3}, {5}});
    const auto two = pruned_language(P32, 2);
    std::vector<Word> expected;
    for (const char *u : {"00", "20", "03", "23", "32", "52", "35", "55"})
        expected.push_back(w(u));
    std::sort(expected.begin(), expected.end());
    CHECK(two == expected);
    CHECK_THROWS_AS(pruned_language(Params::make(4, 3), 2), Error);

    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(pruned_language(P32, n).size() == power(2, n + 1));

    SUBCASE("matches the transition rule exactly, n <= 4") {
        for (auto [p, q] : {std::pair{3, 2}, {5, 2}, {5, 3}}) {
            const Params params = Params::make(p, q);
            for (std::size_t n = 1; n <= (params.base() > 10 ? 3u : 4u); ++n) {
                std::vector<Word> oracle;
                for (std::uint64_t k = 0; k < power(params.base(), n); ++k) {
                    const Word u = nth_word(k, params.base(), n);
                    if (pruned_oracle(params, u))
                        oracle.push_back(u);
                }
                REQUIRE(pruned_language(params, n) == oracle);
            }
        }
    }

    SUBCASE("contains every trace word over D, n <= 3") {
        const auto special = special_digits(P32);
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto pruned = pruned_language(P32, n);
            const std::set<Word> pruned_set(pruned.begin(), pruned.end());
            for (const auto &u : brute_traces(P32, n))
                if (std::all_of(u.begin(), u.end(), [&](Digit a) { return special.contains(a); }))
                    REQUIRE(pruned_set.count(u) == 1);
        }
    }
}

TEST_CASE("language census") {
    CHECK(language_census(P32, 1, true).exact == 4u);
    const auto two = language_census(P32, 2, true);
    CHECK(two.bound == 8);
    REQUIRE(two.exact);
    CHECK(*two.exact <= 8u);
    CHECK(language_census(P32, 5, false).bound == 64);
    CHECK_FALSE(language_census(P32, 5, false).exact);
    CHECK(language_census(P32, 4, true, default_work_limit, 2).exact == language_census(P32, 4, true).exact);
}
