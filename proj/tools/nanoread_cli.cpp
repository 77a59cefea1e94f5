// nanoread: command-line front end for the read-channel library.
//
// Machine output goes to stdout (JSON lines or CSV), a short human summary to
// stderr. Exit status: 0 all consistent, 1 violation found, 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nanoread/nanoread.hpp"
#include "nanoread/oracle.hpp"
#include "nanoread/report.hpp"

using namespace nanoread;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    std::size_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const char* flag) {
    auto number = [&](const std::string& s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw UsageError(std::string(flag) + ": expected N or LO..HI, got '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = number(text);
    } else {
        r.lo = number(text.substr(0, dots));
        r.hi = number(text.substr(dots + 2));
    }
    if (r.lo > r.hi)
        throw UsageError(std::string(flag) + ": empty range '" + text + "'");
    return r;
}

enum class Format { json, csv };

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    return out + "\"";
}

void emit_csv(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            line.push_back(',');
        line += csv_field(cells[i]);
    }
    std::cout << line << '\n';
}

struct NumberedLine {
    std::string source;
    std::size_t line = 0;
    std::string text;
};

/// Word file: one word per line; blank lines and '#' comments are skipped.
std::vector<NumberedLine> read_word_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open input file '" + path + "'");
    std::vector<NumberedLine> out;
    std::string raw;
    for (std::size_t no = 1; std::getline(in, raw); ++no) {
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        const auto b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        const auto e = raw.find_last_not_of(" \t\r");
        out.push_back({path, no, raw.substr(b, e - b + 1)});
    }
    return out;
}

std::vector<NumberedLine> gather_words(const std::vector<std::string>& args, const std::string& input) {
    std::vector<NumberedLine> words;
    for (std::size_t i = 0; i < args.size(); ++i)
        words.push_back({"argument", i + 1, args[i]});
    if (!input.empty())
        for (auto& w : read_word_file(input))
            words.push_back(std::move(w));
    if (words.empty())
        throw UsageError("no words given (pass them as arguments or with --input)");
    return words;
}

BinaryWord parse_numbered_word(const NumberedLine& w) {
    try {
        return parse_word(w.text);
    } catch (const ArgumentError& e) {
        throw UsageError(w.source + ":" + std::to_string(w.line) + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------

struct Options {
    std::string format = "json";
    std::string input;
    std::vector<std::string> words;
    std::size_t n = 8;
    std::size_t l = 2;
    std::optional<std::size_t> a;
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000;
    std::optional<double> p;
    std::size_t threads = 1;
    std::string n_range, l_range = "2", a_range, q_range = "2..3";
    std::string check;
    bool exact_only = false;
};

Format format_of(const Options& o) { return o.format == "csv" ? Format::csv : Format::json; }

int cmd_transform(const Options& o) {
    std::vector<BinaryWord> words;
    for (const auto& w : gather_words(o.words, o.input))
        words.push_back(parse_numbered_word(w));
    const bool csv = format_of(o) == Format::csv;
    if (csv)
        emit_csv({"word", "read"});
    for (const auto& x : words) {
        const auto read = format_read(read_vector(x, o.l));
        if (csv)
            emit_csv({format_word(x), read});
        else
            std::cout << Json{{"word", format_word(x)}, {"l", o.l}, {"read", read}}.dump() << '\n';
    }
    std::cerr << "transformed " << words.size() << " word(s) with l=" << o.l << '\n';
    return kOk;
}

int cmd_enumerate(const Options& o) {
    const auto a = o.a ? *o.a : best_residue(o.n, o.l).a;
    const CodeParams params{o.n, o.l, a};
    const auto code = enumerate_code(params);
    const bool csv = format_of(o) == Format::csv;
    if (csv)
        emit_csv({"index", "word", "read"});
    for (std::size_t i = 0; i < code.size(); ++i) {
        const auto read = format_read(read_vector(code[i], o.l));
        if (csv)
            emit_csv({std::to_string(i), format_word(code[i]), read});
        else
            std::cout << Json{{"index", i}, {"word", format_word(code[i])}, {"read", read}}.dump() << '\n';
    }
    std::cerr << "C(" << o.n << "," << o.l << "," << a << ") has " << code.size() << " codewords\n";
    return kOk;
}

void emit_summary(const Json& j, Format f) {
    if (f == Format::json) {
        std::cout << j.dump() << '\n';
        return;
    }
    std::vector<std::string> header, row;
    for (const auto& [k, v] : j.items()) {
        if (v.is_object()) {
            for (const auto& [k2, v2] : v.items()) {
                header.push_back(k + "." + k2);
                row.push_back(v2.dump());
            }
        } else {
            header.push_back(k);
            row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
    }
    emit_csv(header);
    emit_csv(row);
}

int cmd_roundtrip(const Options& o) {
    sim::SimConfig c;
    c.n = o.n;
    c.window = o.l;
    c.trials = o.trials;
    c.seed = o.seed;
    c.threads = o.threads;
    if (o.p) {
        c.mode = sim::DeletionMode::iid;
        c.p = *o.p;
    }
    const auto a = o.a ? *o.a : best_residue(o.n, o.l).a;
    const auto s = sim::run_roundtrip(c, {o.n, o.l, a});
    emit_summary(to_json(s), format_of(o));
    std::cerr << "roundtrip C(" << o.n << "," << o.l << "," << a << "), " << sim::to_string(c.mode) << ": "
              << s.success << "/" << c.trials << " decoded, " << s.decode_failure << " decoder failures, "
              << s.miscorrected << " miscorrected, " << s.out_of_model << " out of model\n";
    return s.decode_failure + s.miscorrected == 0 ? kOk : kViolation;
}

int cmd_reconstruct(const Options& o) {
    if (o.p)
        throw UsageError("reconstruct: only the exactly-one deletion mode is supported (drop --p)");
    sim::SimConfig c;
    c.n = o.n;
    c.window = o.l;
    c.trials = o.trials;
    c.seed = o.seed;
    c.threads = o.threads;
    c.reads_per_word = 2;
    const auto s = sim::run_reconstruct(c);
    emit_summary(to_json(s), format_of(o));
    std::cerr << "reconstruct n=" << o.n << " l=" << o.l << ": " << s.success << " recovered, " << s.failure
              << " failed, " << s.skipped_singleton << " skipped (single-element ball)\n";
    return s.failure == 0 ? kOk : kViolation;
}

// ---------------------------------------------------------------------------
// verify

struct CheckRecord {
    Json params;
    bool pass = true;
    std::optional<std::string> counterexample;
    Json details = Json::object();
    std::optional<std::string> skipped;
};

using CheckFn = std::function<std::vector<CheckRecord>(const Options&)>;

template <typename Body>
std::vector<CheckRecord> over_n_l(const Options& o, Body body) {
    const auto nr = parse_range(o.n_range, "--n");
    const auto lr = parse_range(o.l_range, "--l");
    std::vector<CheckRecord> out;
    for (auto l = lr.lo; l <= lr.hi; ++l)
        for (auto n = nr.lo; n <= nr.hi; ++n) {
            CheckRecord r;
            r.params = Json{{"n", n}, {"l", l}};
            body(n, l, r);
            out.push_back(std::move(r));
        }
    return out;
}

std::optional<std::string> pair_text(const std::optional<std::pair<std::string, std::string>>& p) {
    if (!p)
        return std::nullopt;
    return p->first + " " + p->second;
}

const std::map<std::string, CheckFn>& checks() {
    static const std::map<std::string, CheckFn> table{
        {"properties",
         [](const Options& o) {
             return over_n_l(o, [](std::size_t n, std::size_t l, CheckRecord& r) {
                 const auto t = oracle::verify_transform(n, l);
                 r.pass = t.pass();
                 r.counterexample = t.counterexample;
                 r.details = Json{{"words", t.words},
                                  {"sum_failures", t.sum_failures},
                                  {"adjacency_failures", t.adjacency_failures},
                                  {"roundtrip_failures", t.roundtrip_failures},
                                  {"validity_failures", t.validity_failures},
                                  {"injective", t.injective}};
             });
         }},
        {"lemma8",
         [](const Options& o) {
             return over_n_l(o, [](std::size_t n, std::size_t l, CheckRecord& r) {
                 const auto t = oracle::verify_lemma8(n, l);
                 r.pass = t.pass();
                 r.counterexample = t.counterexample;
                 r.details = Json{{"words", t.words},
                                  {"mismatches", t.mismatches},
                                  {"hypothesis_failures", t.hypothesis_failures}};
             });
         }},
        {"intersection",
         [](const Options& o) {
             return over_n_l(o, [](std::size_t n, std::size_t l, CheckRecord& r) {
                 const auto t = oracle::verify_intersection_bound(n, l);
                 const std::size_t limit = l >= 2 ? 1 : 2;
                 r.pass = t.max_intersection <= limit;
                 if (!r.pass)
                     r.counterexample = pair_text(t.witness);
                 r.details = Json{{"max", t.max_intersection}, {"limit", limit}, {"pairs_at_max", t.pairs_at_max}};
                 if (t.witness)
                     r.details["witness"] = *pair_text(t.witness);
             });
         }},
        {"expected-runs",
         [](const Options& o) {
             const auto nr = parse_range(o.n_range, "--n");
             std::vector<CheckRecord> out;
             for (auto n = nr.lo; n <= nr.hi; ++n) {
                 const auto ar = o.a_range.empty() ? Range{1, n} : parse_range(o.a_range, "--a");
                 for (auto a = ar.lo; a <= std::min(ar.hi, n); ++a) {
                     CheckRecord r;
                     r.params = Json{{"n", n}, {"a", a}};
                     const auto formula = expected_runs(n, a);
                     const auto mean = oracle::exhaustive_mean_rho(n, a);
                     r.pass = formula == mean;
                     r.details = Json{{"formula", to_string(formula)}, {"exhaustive", to_string(mean)}};
                     if (!r.pass)
                         r.counterexample = "n=" + std::to_string(n) + " a=" + std::to_string(a);
                     out.push_back(std::move(r));
                 }
             }
             return out;
         }},
        {"code-property",
         [](const Options& o) {
             const auto nr = parse_range(o.n_range, "--n");
             const auto lr = parse_range(o.l_range, "--l");
             std::vector<CheckRecord> out;
             for (auto l = lr.lo; l <= lr.hi; ++l)
                 for (auto n = std::max(nr.lo, l); n <= nr.hi; ++n) {
                     const auto ar = o.a_range.empty() ? Range{0, n} : parse_range(o.a_range, "--a");
                     for (auto a = ar.lo; a <= std::min(ar.hi, n); ++a) {
                         CheckRecord r;
                         r.params = Json{{"n", n}, {"l", l}, {"a", a}};
                         const auto t = oracle::verify_code_property({n, l, a});
                         r.pass = t.pass;
                         r.counterexample = pair_text(t.witness);
                         r.details = Json{{"codewords", t.codewords}};
                         out.push_back(std::move(r));
                     }
                 }
             return out;
         }},
        {"decoder",
         [](const Options& o) {
             return over_n_l(o, [](std::size_t n, std::size_t l, CheckRecord& r) {
                 if (n < l) {
                     r.skipped = "requires n >= l";
                     return;
                 }
                 const auto t = oracle::verify_decoder(n, l);
                 r.pass = t.pass();
                 r.counterexample = t.counterexample;
                 r.details = Json{{"codewords", t.codewords}, {"trials", t.trials}, {"failures", t.failures}};
                 for (const auto& [k, v] : t.paths)
                     r.details["paths"][k] = v;
             });
         }},
        {"reconstruction",
         [](const Options& o) {
             return over_n_l(o, [](std::size_t n, std::size_t l, CheckRecord& r) {
                 if (l < 2) {
                     r.skipped = "requires l >= 2";
                     return;
                 }
                 const auto t = oracle::verify_reconstruction(n, l);
                 r.pass = t.pass();
                 r.counterexample = t.counterexample;
                 r.details = Json{{"words", t.words},
                                  {"skipped_singleton", t.skipped_singleton},
                                  {"instances", t.instances},
                                  {"failures", t.failures},
                                  {"arbitration_violations", t.arbitration_violations},
                                  {"order_dependence", t.order_dependence}};
             });
         }},
        {"sticky-cardinality",
         [](const Options& o) {
             const auto nr = parse_range(o.n_range, "--n");
             std::vector<CheckRecord> out;
             for (auto len = nr.lo; len <= nr.hi; ++len) {
                 CheckRecord r;
                 r.params = Json{{"n", len}};
                 const auto t = oracle::verify_sticky_cardinality(len);
                 r.pass = t.pass();
                 r.counterexample = t.counterexample;
                 r.details = Json{{"cases", t.cases}, {"failures", t.failures}};
                 out.push_back(std::move(r));
             }
             return out;
         }},
        {"sphere-packing",
         [](const Options& o) {
             return over_n_l(o, [](std::size_t n, std::size_t l, CheckRecord& r) {
                 if (n < 2 || n > oracle::kMaxExactMisLength) {
                     r.skipped = "exact maximum code only for 2 <= n <= 8";
                     return;
                 }
                 const auto t = oracle::verify_sphere_packing(n, l);
                 const auto f = oracle::verify_weight_feasibility(n, l);
                 r.pass = t.pass() && f.pass();
                 r.counterexample = f.counterexample;
                 if (!t.pass())
                     r.counterexample = "A=" + std::to_string(t.max_code.size) + " > " + to_string(t.weighted_sum);
                 r.details = Json{{"max_code", t.max_code.size},
                                  {"max_code_nonempty_balls", t.max_code.size_with_nonempty_balls()},
                                  {"weighted_sum", to_string(t.weighted_sum)},
                                  {"nonempty_pass", t.nonempty_pass()},
                                  {"weight_violations", f.violations}};
             });
         }},
        {"tail",
         [](const Options& o) {
             const auto nr = parse_range(o.n_range, "--n");
             const auto ar = parse_range(o.a_range.empty() ? "1..3" : o.a_range, "--a");
             std::vector<CheckRecord> out;
             for (auto a = ar.lo; a <= ar.hi; ++a)
                 for (auto n = nr.lo; n <= nr.hi; ++n) {
                     CheckRecord r;
                     r.params = Json{{"n", n}, {"a", a}};
                     const auto count = tail_count(n, a);
                     const auto bound = tail_bound(n, a);
                     r.details = Json{{"count", count}, {"bound", bound}};
                     if (a > n) {
                         r.skipped = "requires a <= n";
                     } else {
                         r.pass = static_cast<double>(count) <= bound + 1e-9;
                         if (!r.pass)
                             r.counterexample = "n=" + std::to_string(n) + " a=" + std::to_string(a);
                     }
                     out.push_back(std::move(r));
                 }
             return out;
         }},
        {"confusable",
         [](const Options& o) {
             const auto qr = parse_range(o.q_range, "--q");
             const auto nr = parse_range(o.n_range, "--n");
             std::vector<CheckRecord> out;
             for (auto q = qr.lo; q <= qr.hi; ++q)
                 for (auto m = nr.lo; m <= nr.hi; ++m) {
                     CheckRecord r;
                     r.params = Json{{"q", q}, {"n", m}};
                     const auto t = oracle::verify_confusability(q, m);
                     r.pass = t.pass();
                     r.counterexample = t.counterexample;
                     r.details = Json{{"intersecting_pairs", t.intersecting_pairs},
                                      {"confusable_pairs", t.confusable_pairs}};
                     out.push_back(std::move(r));
                 }
             return out;
         }},
    };
    return table;
}

int cmd_verify(const Options& o) {
    const auto it = checks().find(o.check);
    if (it == checks().end()) {
        std::string names;
        for (const auto& [k, v] : checks())
            names += (names.empty() ? "" : ", ") + k;
        throw UsageError("unknown check '" + o.check + "' (known: " + names + ")");
    }
    if (o.n_range.empty())
        throw UsageError("verify: --n is required");
    const auto records = it->second(o);
    const bool csv = format_of(o) == Format::csv;
    if (csv)
        emit_csv({"check", "params", "status", "counterexample", "details"});
    std::size_t failed = 0, skipped = 0;
    for (const auto& r : records) {
        const std::string status = r.skipped ? "skipped" : r.pass ? "pass" : "fail";
        failed += status == "fail";
        skipped += status == "skipped";
        Json j;
        j["check"] = o.check;
        j["params"] = r.params;
        j["status"] = status;
        if (r.counterexample && !r.pass)
            j["counterexample"] = *r.counterexample;
        if (r.skipped)
            j["reason"] = *r.skipped;
        j["details"] = r.details;
        if (csv)
            emit_csv({o.check, r.params.dump(), status, j.value("counterexample", ""), r.details.dump()});
        else
            std::cout << j.dump() << '\n';
    }
    std::cerr << o.check << ": " << records.size() - failed - skipped << " passed, " << failed << " failed, "
              << skipped << " skipped\n";
    return failed == 0 ? kOk : kViolation;
}

// ---------------------------------------------------------------------------

int cmd_bounds(const Options& o) {
    if (o.n_range.empty())
        throw UsageError("bounds: --n is required");
    const auto nr = parse_range(o.n_range, "--n");
    const auto lr = parse_range(o.l_range, "--l");
    const bool csv = format_of(o) == Format::csv;
    if (csv)
        emit_csv(bound_columns());
    std::size_t rows = 0;
    for (auto l = lr.lo; l <= lr.hi; ++l) {
        check_window(l);
        for (auto n = nr.lo; n <= nr.hi; ++n) {
            BoundRow row{bound_report(n, l), std::nullopt, std::nullopt, std::nullopt};
            if (n >= l && n <= kMaxEnumerationLength)
                row.best_code = best_residue(n, l);
            const std::size_t max_len = o.exact_only ? oracle::kMaxExactMisLength : 14;
            if (n >= 1 && n <= max_len) {
                const auto m = oracle::exact_max_sticky_code(n, l);
                row.max_sticky_code = m.size;
                row.max_sticky_exact = m.exact;
            }
            if (csv)
                emit_csv(bound_row_cells(row));
            else
                std::cout << to_json(row).dump() << '\n';
            ++rows;
        }
    }
    std::cerr << "bounds: " << rows << " row(s)\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Read-channel codes: transform, simulate, verify and tabulate bounds"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_l = [&](CLI::App* c) { c->add_option("--l", o.l, "Window length l")->capture_default_str(); };
    auto add_sim = [&](CLI::App* c) {
        c->add_option("--n", o.n, "Word length")->capture_default_str();
        add_l(c);
        c->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
        c->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
        c->add_option("--threads", o.threads, "Worker threads (output does not depend on it)")
            ->capture_default_str();
        add_format(c);
    };

    auto* transform = app.add_subcommand("transform", "Print the l-read vector of each word");
    transform->add_option("words", o.words, "Binary words");
    transform->add_option("--input", o.input, "File with one word per line ('#' starts a comment)");
    add_l(transform);
    add_format(transform);

    auto* enumerate = app.add_subcommand("enumerate", "List the codewords of C(n,l,a)");
    enumerate->add_option("--n", o.n, "Word length")->capture_default_str();
    add_l(enumerate);
    enumerate->add_option("--a", o.a, "Residue (default: the largest class)");
    add_format(enumerate);

    auto* roundtrip = app.add_subcommand("roundtrip", "Encode, delete, decode");
    add_sim(roundtrip);
    roundtrip->add_option("--a", o.a, "Residue (default: the largest class)");
    roundtrip->add_option("--p", o.p, "Delete each read symbol independently with this probability");

    auto* reconstruct = app.add_subcommand("reconstruct", "Recover a read vector from two distinct deleted reads");
    add_sim(reconstruct);
    reconstruct->add_option("--p", o.p, "Not supported; present to give a clear error");

    auto* verify = app.add_subcommand("verify", "Run an exhaustive check over parameter ranges");
    verify->add_option("check", o.check, "Check name")->required();
    verify->add_option("--n", o.n_range, "Length range, N or LO..HI");
    verify->add_option("--l", o.l_range, "Window range")->capture_default_str();
    verify->add_option("--a", o.a_range, "Residue / run-length range (check dependent)");
    verify->add_option("--q", o.q_range, "Alphabet size range for 'confusable'")->capture_default_str();
    add_format(verify);

    auto* bounds = app.add_subcommand("bounds", "Tabulate bounds and code sizes");
    bounds->add_option("--n", o.n_range, "Length range");
    bounds->add_option("--l", o.l_range, "Window range")->capture_default_str();
    bounds->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    bounds->add_flag("--exact-only", o.exact_only, "Leave the maximum-code column blank unless it is exact");
    o.format = "json";

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    if (bounds->parsed() && bounds->count("--format") == 0)
        o.format = "csv";

    try {
        if (transform->parsed())
            return cmd_transform(o);
        if (enumerate->parsed())
            return cmd_enumerate(o);
        if (roundtrip->parsed())
            return cmd_roundtrip(o);
        if (reconstruct->parsed())
            return cmd_reconstruct(o);
        if (verify->parsed())
            return cmd_verify(o);
        if (bounds->parsed())
            return cmd_bounds(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) { // ArgumentError, UnsupportedParameter
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kViolation;
    }
    return kUsage;
}
