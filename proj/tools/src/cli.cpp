#include <pqca/cli.hpp>

#include <pqca/ca.hpp>
#include <pqca/config.hpp>
#include <pqca/error.hpp>
#include <pqca/intervals.hpp>
#include <pqca/params.hpp>
#include <pqca/trace.hpp>
#include <pqca/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace pqca::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::string format = "text";
    unsigned workers = 1;
    std::uint64_t work_limit = default_work_limit;
    bool timing = false;
};

struct Options {
    Common common;
    // simulate / trace
    std::string word;
    std::string xi;
    std::string rule = "F";
    std::optional<std::int64_t> t_min;
    std::optional<std::int64_t> t_max;
    std::size_t column = 0;
    std::string decode;
    std::string test;
    // language
    std::size_t n = 0;
    bool exact = false;
    bool list = false;
    // intervals / search
    std::string kind = "X";
    std::size_t k = 0;
    std::string epsilon;
    bool exact_filter = false;
    std::uint64_t depth = 20;
    std::size_t resolution = 0;
    std::uint64_t radius = 1;
    // mixing
    std::string v1;
    std::string v2;
    std::uint64_t i = 0;
    std::string method = "arithmetic";
    // verify / escape
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::uint64_t horizon = 1000;
    std::vector<std::string> targets;
    std::size_t integer_digits = 4;
    std::size_t fraction_digits = 8;
};

/// Resolved parameters, echoed with every result.
using Echo = std::vector<std::pair<std::string, std::string>>;

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string format_ms(double ms) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << ms;
    return s.str();
}

class Runner {
public:
    Runner(const std::string &command, const Options &o, std::ostream &out)
        : command_(command), o_(o), out_(out), params_(Params::make(o.common.p, o.common.q)) {
        echo_.emplace_back("p", std::to_string(params_.p()));
        echo_.emplace_back("q", std::to_string(params_.q()));
    }

    int table();
    int simulate();
    int trace();
    int language();
    int intervals();
    int mixing();
    int verify();
    int search();
    int escape();

private:
    void echo(std::string key, std::string value) { echo_.emplace_back(std::move(key), std::move(value)); }

    void finish_echo() {
        echo("format", o_.common.format);
        echo("workers", std::to_string(o_.common.workers));
        echo("work_limit", std::to_string(o_.common.work_limit));
    }

    bool json() const { return o_.common.format == "json"; }
    bool csv() const { return o_.common.format == "csv"; }

    void header() {
        finish_echo();
        if (json())
            return;
        out_ << "# " << command_;
        for (const auto &[key, value] : echo_)
            out_ << ' ' << key << '=' << value;
        out_ << '\n';
    }

    Json echo_json() const {
        Json j = Json::object();
        for (const auto &[key, value] : echo_)
            j[key] = value;
        return j;
    }

    void emit(Json body) {
        Json j;
        j["command"] = command_;
        j["parameters"] = echo_json();
        for (auto &[key, value] : body.items())
            j[key] = value;
        out_ << j.dump(2) << '\n';
    }

    std::string elapsed(const Stopwatch &clock) const { return o_.common.timing ? format_ms(clock.ms()) : ""; }

    Word word_arg(const std::string &name, const std::string &text) const {
        if (text.empty())
            throw Error(ErrorCode::EmptyWord, "--" + name + " must be a nonempty word");
        return parse_word(params_, text);
    }

    IntervalSet set_of_kind(std::string &kind_out) const;

    std::string command_;
    const Options &o_;
    std::ostream &out_;
    Params params_;
    Echo echo_;
};

int Runner::table() {
    header();
    const Digit n = params_.base();
    if (json()) {
        Json rows = Json::array();
        for (Digit x = 0; x < n; ++x) {
            Json row = Json::array();
            for (Digit y = 0; y < n; ++y)
                row.push_back(g_local(params_, x, y));
            rows.push_back(row);
        }
        emit({{"g", rows}});
    } else if (csv()) {
        out_ << "x,y,g\n";
        for (Digit x = 0; x < n; ++x)
            for (Digit y = 0; y < n; ++y)
                out_ << x << ',' << y << ',' << g_local(params_, x, y) << '\n';
    } else {
        const auto width = std::to_string(n - 1).size();
        out_ << std::setw(static_cast<int>(width)) << "x\\y" << " |";
        for (Digit y = 0; y < n; ++y)
            out_ << ' ' << std::setw(static_cast<int>(width)) << y;
        out_ << '\n';
        for (Digit x = 0; x < n; ++x) {
            out_ << std::setw(static_cast<int>(std::max<std::size_t>(width, 3))) << x << " |";
            for (Digit y = 0; y < n; ++y)
                out_ << ' ' << std::setw(static_cast<int>(width)) << g_local(params_, x, y);
            out_ << '\n';
        }
    }
    return Success;
}

int Runner::simulate() {
    if (o_.word.empty() == o_.xi.empty())
        throw Error(ErrorCode::PreconditionViolated, "simulate needs exactly one of --word and --xi");
    if (!o_.xi.empty()) {
        // Orbit of a configuration under F (or F^{-1} for negative --t-max).
        const Rat xi = parse_rat(o_.xi);
        const std::int64_t steps = o_.t_max.value_or(1);
        echo("xi", to_string(xi));
        echo("t_max", std::to_string(steps));
        header();
        FiniteConfig c = config_of_rat(params_, xi);
        const std::int64_t dir = steps < 0 ? -1 : 1;
        Json rows = Json::array();
        if (csv())
            out_ << "t,config,value\n";
        for (std::int64_t t = 0;; t += dir) {
            const Rat value = rat_of_config(params_, c);
            if (json())
                rows.push_back({{"t", t}, {"config", format_config(params_, c)}, {"value", to_string(value)}});
            else if (csv())
                out_ << t << ',' << format_config(params_, c) << ',' << to_string(value) << '\n';
            else
                out_ << std::setw(4) << t << "  " << format_config(params_, c) << "  = " << to_string(value) << '\n';
            if (t == steps)
                break;
            c = step_F_config(params_, c, dir);
        }
        if (json())
            emit({{"rows", rows}});
        return Success;
    }

    const Word w = word_arg("word", o_.word);
    Rule rule = Rule::F;
    if (o_.rule == "G")
        rule = Rule::G;
    else if (o_.rule == "shift")
        rule = Rule::Shift;
    const std::size_t per_step = rule == Rule::F ? 2 : 1;
    const std::size_t t_max =
        o_.t_max ? static_cast<std::size_t>(std::max<std::int64_t>(0, *o_.t_max)) : (w.size() - 1) / per_step;
    echo("word", format_word(params_, w));
    echo("rule", o_.rule);
    echo("t_max", std::to_string(t_max));
    header();
    const SpaceTime diagram = render_space_time(params_, w, t_max, rule);
    if (json()) {
        Json rows = Json::array();
        for (const auto &row : diagram.rows)
            rows.push_back({{"t", row.time}, {"leftmost", row.leftmost}, {"word", format_word(params_, row.word)}});
        emit({{"rows", rows}});
    } else if (csv()) {
        out_ << "t,leftmost,word\n";
        for (const auto &row : diagram.rows)
            out_ << row.time << ',' << row.leftmost << ',' << format_word(params_, row.word) << '\n';
    } else {
        out_ << format_space_time(params_, diagram);
    }
    return Success;
}

int Runner::trace() {
    if (!o_.decode.empty()) {
        const Word u = word_arg("decode", o_.decode);
        echo("decode", format_word(params_, u));
        header();
        const DetTable table = build_det_table(params_);
        const Word prefix = decode_prefix(table, u);
        if (json())
            emit({{"prefix", format_word(params_, prefix)}});
        else
            out_ << (csv() ? "prefix\n" : "") << format_word(params_, prefix) << '\n';
        return Success;
    }
    if (!o_.test.empty()) {
        const Word u = word_arg("test", o_.test);
        echo("test", format_word(params_, u));
        header();
        const bool member = is_trace_word(params_, u, o_.common.work_limit);
        if (json())
            emit({{"trace_word", member}});
        else
            out_ << (csv() ? "trace_word\n" : "") << (member ? "true" : "false") << '\n';
        return Success;
    }
    const Word w = word_arg("word", o_.word);
    const std::int64_t t_min = o_.t_min.value_or(0);
    const std::int64_t t_max = o_.t_max.value_or(0);
    echo("word", format_word(params_, w));
    echo("column", std::to_string(o_.column));
    echo("t_min", std::to_string(t_min));
    echo("t_max", std::to_string(t_max));
    header();
    const TraceWord u = trace_of_window(params_, w, o_.column, t_min, t_max);
    if (json())
        emit({{"trace", format_word(params_, u)}});
    else
        out_ << (csv() ? "trace\n" : "") << format_word(params_, u) << '\n';
    return Success;
}

int Runner::language() {
    if (o_.n == 0)
        throw Error(ErrorCode::PreconditionViolated, "--n must be at least 1");
    echo("n", std::to_string(o_.n));
    echo("exact", o_.exact ? "true" : "false");
    header();
    Json rows = Json::array();
    if (!json())
        out_ << "n,bound,exact,elapsed_ms\n";
    for (std::size_t n = 1; n <= o_.n; ++n) {
        Stopwatch clock;
        const CensusResult r = language_census(params_, n, o_.exact, o_.common.work_limit, o_.common.workers);
        const std::string exact = r.exact ? std::to_string(*r.exact) : "";
        if (json()) {
            Json row{{"n", n}, {"bound", r.bound.get_str()}};
            row["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
            row["elapsed_ms"] = o_.common.timing ? Json(clock.ms()) : Json(nullptr);
            rows.push_back(row);
        } else {
            out_ << n << ',' << r.bound.get_str() << ',' << exact << ',' << elapsed(clock) << '\n';
        }
    }
    if (json())
        emit({{"rows", rows}});
    if (o_.list && !json())
        for (const auto &u : pruned_language(params_, o_.n, o_.common.work_limit))
            out_ << format_word(params_, u) << '\n';
    return Success;
}

IntervalSet Runner::set_of_kind(std::string &kind) const {
    kind = o_.kind;
    const BuildOptions options{o_.common.work_limit, o_.common.workers};
    if (kind == "X")
        return build_X(params_);
    if (kind == "Y")
        return build_Y(params_);
    if (kind == "I")
        return build_I(params_, o_.k, o_.exact_filter, options).set;
    if (kind == "J")
        return build_J(params_, parse_rat(o_.epsilon), options).set;
    if (kind == "unit")
        return IntervalSet::unit();
    throw Error(ErrorCode::Parse, "unknown set kind '" + kind + "'");
}

int Runner::intervals() {
    Json k = nullptr;
    Json epsilon = nullptr;
    IntervalSet set;
    std::uint64_t word_count = 0;
    const BuildOptions options{o_.common.work_limit, o_.common.workers};
    echo("kind", o_.kind);
    if (o_.kind == "X") {
        set = build_X(params_);
        word_count = static_cast<std::uint64_t>(params_.q()) * params_.q();
    } else if (o_.kind == "Y") {
        set = build_Y(params_);
        word_count = params_.q();
    } else if (o_.kind == "I") {
        echo("k", std::to_string(o_.k));
        echo("exact_filter", o_.exact_filter ? "true" : "false");
        const IConstruction c = build_I(params_, o_.k, o_.exact_filter, options);
        set = c.set;
        word_count = c.word_count;
        k = o_.k;
    } else {
        const Rat eps = parse_rat(o_.epsilon);
        echo("epsilon", to_string(eps));
        const JConstruction c = build_J(params_, eps, options);
        set = c.set;
        word_count = c.word_count;
        k = c.k;
        epsilon = to_string(eps);
        echo("n", std::to_string(c.n));
        echo("k", std::to_string(c.k));
    }
    if (!json())
        header();
    if (json()) {
        Json list = Json::array();
        for (const auto &iv : set.intervals())
            list.push_back({to_string(iv.lo), to_string(iv.hi)});
        Json j;
        j["p"] = params_.p();
        j["q"] = params_.q();
        j["kind"] = o_.kind;
        j["k"] = k;
        j["epsilon"] = epsilon;
        j["intervals"] = list;
        j["total_length"] = to_string(set.measure());
        j["word_count"] = word_count;
        out_ << j.dump(2) << '\n';
    } else if (csv()) {
        out_ << to_csv(set);
    } else {
        for (const auto &iv : set.intervals())
            out_ << '[' << to_string(iv.lo) << ", " << to_string(iv.hi) << ")\n";
        out_ << "intervals " << set.size() << '\n';
        out_ << "total_length " << to_string(set.measure()) << '\n';
        out_ << "word_count " << word_count << '\n';
    }
    return Success;
}

int Runner::mixing() {
    MixingQuery query{word_arg("v1", o_.v1), word_arg("v2", o_.v2), o_.i, 0};
    const MixingMethod method = o_.method == "naive" ? MixingMethod::Naive : MixingMethod::Arithmetic;
    const std::uint64_t t_first = std::max<std::uint64_t>(1, o_.i + query.v2.size());
    const std::uint64_t t_last =
        o_.t_max ? static_cast<std::uint64_t>(std::max<std::int64_t>(0, *o_.t_max)) : t_first;
    echo("v1", format_word(params_, query.v1));
    echo("v2", format_word(params_, query.v2));
    echo("i", std::to_string(o_.i));
    echo("t_min", std::to_string(t_first));
    echo("t_max", std::to_string(t_last));
    echo("method", o_.method);
    header();
    const Rat product = make_rat(1, pow(params_.base(), query.v1.size() + query.v2.size()));
    Json rows = Json::array();
    if (!json())
        out_ << "t,measure_num,measure_den,product_num,product_den,lo,hi\n";
    for (std::uint64_t t = t_first; t <= t_last; ++t) {
        query.t = t;
        const Rat mu = mixing_measure(params_, query, method, o_.common.work_limit, o_.common.workers);
        const auto [lo, hi] = mixing_bound(params_, query);
        if (json())
            rows.push_back({{"t", t}, {"measure", to_string(mu)}, {"product", to_string(product)},
                            {"lo", to_string(lo)}, {"hi", to_string(hi)}});
        else
            out_ << t << ',' << mu.get_num().get_str() << ',' << mu.get_den().get_str() << ','
                 << product.get_num().get_str() << ',' << product.get_den().get_str() << ',' << to_string(lo) << ','
                 << to_string(hi) << '\n';
    }
    if (json())
        emit({{"rows", rows}});
    return Success;
}

int Runner::verify() {
    // Largest odometer word length with at most a million words.
    std::size_t k_max = o_.k;
    if (k_max == 0) {
        k_max = 3;
        while (k_max < 7 && pow(params_.base(), k_max + 1) <= 1'000'000)
            ++k_max;
    }
    const std::size_t t_max = o_.t_max ? static_cast<std::size_t>(std::max<std::int64_t>(1, *o_.t_max)) : 3;
    echo("k_max", std::to_string(k_max));
    echo("t_max", std::to_string(t_max));
    echo("samples", std::to_string(o_.samples));
    echo("seed", std::to_string(o_.seed));
    header();
    const unsigned workers = o_.common.workers;
    const std::uint64_t limit = o_.common.work_limit;
    std::vector<std::function<Report()>> checks = {
        [&] { return verify_local_lemmas(params_, workers); },
        [&] { return verify_odometer(params_, k_max, t_max, workers, limit); },
        [&] { return verify_reversibility(params_, 5, workers, limit); },
        [&] { return verify_multiplication_law(params_, o_.samples, o_.seed); },
        [&] { return verify_det_table(params_); },
    };
    bool all = true;
    Json reports = Json::array();
    if (csv())
        out_ << "name,parameters,checked,violations,pass,elapsed_ms\n";
    for (const auto &check : checks) {
        Report r = check();
        all = all && r.pass();
        const std::string ms = o_.common.timing ? format_ms(r.elapsed_ms) : "";
        if (json()) {
            Json j{{"name", r.name}, {"parameters", r.parameters}, {"checked", r.checked},
                   {"violation_count", r.violation_count}, {"violations", r.violations}, {"pass", r.pass()}};
            j["elapsed_ms"] = o_.common.timing ? Json(r.elapsed_ms) : Json(nullptr);
            reports.push_back(j);
        } else if (csv()) {
            out_ << r.name << ",\"" << r.parameters << "\"," << r.checked << ',' << r.violation_count << ','
                 << (r.pass() ? "true" : "false") << ',' << ms << '\n';
        } else {
            out_ << (r.pass() ? "PASS " : "FAIL ") << r.name << " [" << r.parameters << "] checked " << r.checked
                 << ", violations " << r.violation_count;
            if (!ms.empty())
                out_ << ", " << ms << " ms";
            out_ << '\n';
            for (const auto &v : r.violations)
                out_ << "  " << v << '\n';
        }
    }
    if (json())
        emit({{"reports", reports}, {"pass", all}});
    return all ? Success : Failure;
}

int Runner::search() {
    std::string kind;
    const IntervalSet set = set_of_kind(kind);
    const std::size_t resolution =
        o_.resolution ? o_.resolution : std::max<std::size_t>(1, grid_resolution(params_, set).value_or(1));
    const std::uint64_t radius = o_.radius;
    echo("kind", kind);
    if (kind == "I")
        echo("k", std::to_string(o_.k));
    if (kind == "J")
        echo("epsilon", o_.epsilon);
    echo("depth", std::to_string(o_.depth));
    echo("resolution", std::to_string(resolution));
    echo("radius", std::to_string(radius));
    header();
    const OrbitQuery query{set, o_.depth, radius, resolution};
    const auto found = witness_search(params_, query, o_.common.work_limit);
    if (json()) {
        Json j;
        j["found"] = found.has_value();
        j["horizon"] = o_.depth;
        j["witness"] = found ? Json(format_config(params_, *found)) : Json(nullptr);
        j["value"] = found ? Json(to_string(rat_of_config(params_, *found))) : Json(nullptr);
        emit(j);
    } else if (csv()) {
        out_ << "found,horizon,witness,value\n"
             << (found ? "true" : "false") << ',' << o_.depth << ',' << (found ? format_config(params_, *found) : "")
             << ',' << (found ? to_string(rat_of_config(params_, *found)) : "") << '\n';
    } else if (found) {
        out_ << "witness " << format_config(params_, *found) << " = " << to_string(rat_of_config(params_, *found))
             << '\n';
        out_ << "orbit stays in the set for t = 0.." << o_.depth << " (finite horizon only)\n";
    } else {
        out_ << "no witness within horizon " << o_.depth << '\n';
    }
    return Success;
}

int Runner::escape() {
    std::vector<Word> targets;
    std::string joined;
    for (const auto &text : o_.targets) {
        targets.push_back(word_arg("targets", text));
        joined += (joined.empty() ? "" : " ") + format_word(params_, targets.back());
    }
    echo("targets", joined);
    echo("horizon", std::to_string(o_.horizon));
    echo("samples", std::to_string(o_.samples));
    echo("seed", std::to_string(o_.seed));
    echo("integer_digits", std::to_string(o_.integer_digits));
    echo("fraction_digits", std::to_string(o_.fraction_digits));
    header();
    const EscapeCensus census = escape_time_census(params_, targets, o_.horizon, o_.samples, o_.seed,
                                                   o_.integer_digits, o_.fraction_digits, o_.common.workers);
    const std::string rate = census.samples ? to_string(make_rat(census.no_hit, census.samples)) : "0/1";
    if (json()) {
        Json hist = Json::array();
        for (const auto &[t, n] : census.histogram)
            hist.push_back({{"t", t}, {"count", n}});
        emit({{"histogram", hist}, {"no_hit", census.no_hit}, {"no_hit_rate", rate}});
    } else {
        out_ << "t,count\n";
        for (const auto &[t, n] : census.histogram)
            out_ << t << ',' << n << '\n';
        out_ << "no-hit," << census.no_hit << '\n';
        if (!csv())
            out_ << "# no-hit rate " << rate << " at horizon " << o_.horizon << '\n';
    }
    return Success;
}

bool is_usage_error(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonCoprime:
    case ErrorCode::OutOfRange:
    case ErrorCode::EmptyWord:
    case ErrorCode::Parse:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::TooShort:
    case ErrorCode::Negative:
    case ErrorCode::NonTerminating:
    case ErrorCode::OutOfCone:
        return true;
    default:
        return false;
    }
}

void add_common(CLI::App *sub, Common &c) {
    sub->add_option("--p", c.p, "first parameter, >= 2")->required();
    sub->add_option("--q", c.q, "second parameter, >= 2, coprime to p")->required();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    sub->add_option("--work-limit", c.work_limit, "bound on enumerated cases")->capture_default_str();
    sub->add_flag("--timing", c.timing, "report wall-clock times (output is then not reproducible)");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact toolkit for the base-pq multiplication automata", "pqca"};
    app.require_subcommand(1);
    Options o;
    std::vector<std::pair<CLI::App *, int (Runner::*)()>> commands;

    auto *table = app.add_subcommand("table", "local rule g as a table");
    commands.emplace_back(table, &Runner::table);

    auto *simulate = app.add_subcommand("simulate", "space-time diagram of a word or orbit of a rational");
    simulate->add_option("--word", o.word, "initial word");
    simulate->add_option("--xi", o.xi, "initial rational num/den (orbit of its configuration)");
    simulate->add_option("--rule", o.rule, "F, G or shift")->check(CLI::IsMember({"F", "G", "shift"}));
    simulate->add_option("--t-max", o.t_max, "number of steps");
    commands.emplace_back(simulate, &Runner::simulate);

    auto *trace = app.add_subcommand("trace", "traces: extract, decode, test membership");
    trace->add_option("--word", o.word, "time-0 word");
    trace->add_option("--column", o.column, "column index into the word");
    trace->add_option("--t-min", o.t_min, "first time (negative steps the inverse)");
    trace->add_option("--t-max", o.t_max, "last time");
    trace->add_option("--decode", o.decode, "odd-length trace to decode into its row prefix");
    trace->add_option("--test", o.test, "word to test for occurrence in some trace");
    commands.emplace_back(trace, &Runner::trace);

    auto *language = app.add_subcommand("language", "pruned trace-language census");
    language->add_option("--n", o.n, "largest word length")->required();
    language->add_flag("--exact", o.exact, "also count genuine trace words");
    language->add_flag("--list", o.list, "print the pruned words of length n (text/csv)");
    commands.emplace_back(language, &Runner::language);

    auto *intervals = app.add_subcommand("intervals", "interval unions X, Y, I, J");
    intervals->add_option("--kind", o.kind, "X, Y, I or J")->check(CLI::IsMember({"X", "Y", "I", "J"}));
    intervals->add_option("--k", o.k, "word length for I");
    intervals->add_option("--epsilon", o.epsilon, "length bound for J, num/den");
    intervals->add_flag("--exact-filter", o.exact_filter, "keep only genuine trace words in I");
    commands.emplace_back(intervals, &Runner::intervals);

    auto *mixing = app.add_subcommand("mixing", "exact mixing measures for t up to --t-max");
    mixing->add_option("--v1", o.v1, "word of the cylinder at position 0")->required();
    mixing->add_option("--v2", o.v2, "word of the cylinder at position i")->required();
    mixing->add_option("--i", o.i, "position of the second cylinder");
    mixing->add_option("--t-max", o.t_max, "last time");
    mixing->add_option("--method", o.method, "naive or arithmetic")
        ->check(CLI::IsMember({"naive", "arithmetic"}))
        ->capture_default_str();
    commands.emplace_back(mixing, &Runner::mixing);

    auto *verify = app.add_subcommand("verify", "exhaustive and randomized checks; exit 1 on any violation");
    verify->add_option("--k", o.k, "largest odometer word length (default: automatic, at most 7)");
    verify->add_option("--t-max", o.t_max, "largest odometer time");
    verify->add_option("--samples", o.samples, "random rationals for the multiplication law")->capture_default_str();
    verify->add_option("--seed", o.seed, "random seed")->required();
    commands.emplace_back(verify, &Runner::verify);

    auto *search = app.add_subcommand("search", "finite-horizon witness search for an interval union");
    search->add_option("--kind", o.kind, "X, Y, I, J or unit")->check(CLI::IsMember({"X", "Y", "I", "J", "unit"}));
    search->add_option("--k", o.k, "word length for I");
    search->add_option("--epsilon", o.epsilon, "length bound for J");
    search->add_option("--depth", o.depth, "orbit horizon")->capture_default_str();
    search->add_option("--resolution", o.resolution, "fractional cells tracked (default: grid of the set)");
    search->add_option("--radius", o.radius, "integer digits of the witness; 0 allows xi < 1")->capture_default_str();
    commands.emplace_back(search, &Runner::search);

    auto *escape = app.add_subcommand("escape", "first hitting times of target cylinders at position 1");
    escape->add_option("--targets", o.targets, "target words");
    escape->add_option("--horizon", o.horizon, "largest time")->capture_default_str();
    escape->add_option("--samples", o.samples, "random configurations")->capture_default_str();
    escape->add_option("--seed", o.seed, "random seed")->required();
    escape->add_option("--integer-digits", o.integer_digits, "random digits left of the point")->capture_default_str();
    escape->add_option("--fraction-digits", o.fraction_digits, "random digits right of the point")
        ->capture_default_str();
    commands.emplace_back(escape, &Runner::escape);

    for (auto &[sub, _] : commands)
        add_common(sub, o.common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : Usage;
    }

    for (auto &[sub, method] : commands) {
        if (!sub->parsed())
            continue;
        try {
            Runner runner(sub->get_name(), o, out);
            return (runner.*method)();
        } catch (const Error &e) {
            err << "pqca " << sub->get_name() << ": " << e.what() << '\n';
            return is_usage_error(e.code()) ? Usage : Failure;
        } catch (const std::exception &e) {
            err << "pqca " << sub->get_name() << ": " << e.what() << '\n';
            return Failure;
        }
    }
    return Usage;
}

} // namespace pqca::cli
