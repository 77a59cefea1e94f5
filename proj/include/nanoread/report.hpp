#pragma once

// Flat machine-readable records for simulation summaries, decode outcomes and
// bound tables. Key order is fixed so equal inputs serialize to equal bytes.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nanoread/bounds.hpp"
#include "nanoread/code.hpp"
#include "nanoread/serialize.hpp"
#include "nanoread/sim.hpp"

namespace nanoread {

using Json = nlohmann::ordered_json;

inline Json to_json(const DecodeOutcome& out) {
    Json j;
    j["status"] = to_string(out.status);
    j["word"] = out.word ? Json(format_word(*out.word)) : Json(nullptr);
    j["path"] = to_string(out.path);
    if (!out.ok())
        j["reason"] = out.reason;
    return j;
}

inline Json to_json(const sim::RoundtripSummary& s) {
    Json j;
    j["command"] = "roundtrip";
    j["n"] = s.params.n;
    j["l"] = s.params.window;
    j["a"] = s.params.a;
    j["mode"] = sim::to_string(s.config.mode);
    j["p"] = s.config.p;
    j["trials"] = s.config.trials;
    j["seed"] = s.config.seed;
    j["code_size"] = s.code_size;
    j["success"] = s.success;
    j["decode_failure"] = s.decode_failure;
    j["miscorrected"] = s.miscorrected;
    j["out_of_model"] = s.out_of_model;
    Json paths;
    for (const auto& [k, v] : s.paths)
        paths[k] = v;
    j["paths"] = paths;
    return j;
}

inline Json to_json(const sim::ReconstructSummary& s) {
    Json j;
    j["command"] = "reconstruct";
    j["n"] = s.config.n;
    j["l"] = s.config.window;
    j["trials"] = s.config.trials;
    j["seed"] = s.config.seed;
    j["success"] = s.success;
    j["failure"] = s.failure;
    j["skipped_singleton"] = s.skipped_singleton;
    return j;
}

/// One row of the bounds table: a BoundReport plus the best code of the construction.
struct BoundRow {
    BoundReport report;
    std::optional<ResidueChoice> best_code;
    std::optional<std::size_t> max_sticky_code; // A(n, l)
    std::optional<bool> max_sticky_exact;
};

inline const std::vector<std::string>& bound_columns() {
    static const std::vector<std::string> cols{
        "n", "l", "theorem12_lower_bound", "weighted_sum", "tail_count", "expected_runs",
        "best_residue", "best_code_size", "best_code_redundancy", "log2_n_plus_1", "max_sticky_code",
        "max_sticky_exact"};
    return cols;
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// Column values as strings; absent fields are empty.
inline std::vector<std::string> bound_row_cells(const BoundRow& row) {
    const auto& r = row.report;
    std::vector<std::string> c;
    c.push_back(std::to_string(r.n));
    c.push_back(std::to_string(r.window));
    c.push_back(r.theorem12_lower_bound ? format_double(*r.theorem12_lower_bound) : "");
    c.push_back(r.weighted_sum ? to_string(*r.weighted_sum) : "");
    c.push_back(r.tail_count ? std::to_string(*r.tail_count) : "");
    c.push_back(r.expected_runs ? to_string(*r.expected_runs) : "");
    if (row.best_code) {
        c.push_back(std::to_string(row.best_code->a));
        c.push_back(std::to_string(row.best_code->size));
        c.push_back(format_double(static_cast<double>(r.n) - std::log2(static_cast<double>(row.best_code->size))));
    } else {
        c.insert(c.end(), {"", "", ""});
    }
    c.push_back(format_double(std::log2(static_cast<double>(r.n + 1))));
    c.push_back(row.max_sticky_code ? std::to_string(*row.max_sticky_code) : "");
    c.push_back(row.max_sticky_exact ? (*row.max_sticky_exact ? "true" : "false") : "");
    return c;
}

/// Same columns as the CSV; rationals stay exact as "p/q" strings, absent fields are null.
inline Json to_json(const BoundRow& row) {
    const auto& r = row.report;
    auto opt = [](const auto& v, auto conv) { return v ? Json(conv(*v)) : Json(nullptr); };
    auto id = [](auto v) { return v; };
    auto rat = [](const Rational& q) { return to_string(q); };
    Json j;
    j["n"] = r.n;
    j["l"] = r.window;
    j["theorem12_lower_bound"] = opt(r.theorem12_lower_bound, id);
    j["weighted_sum"] = opt(r.weighted_sum, rat);
    j["tail_count"] = opt(r.tail_count, id);
    j["expected_runs"] = opt(r.expected_runs, rat);
    j["best_residue"] = row.best_code ? Json(row.best_code->a) : Json(nullptr);
    j["best_code_size"] = row.best_code ? Json(row.best_code->size) : Json(nullptr);
    j["best_code_redundancy"] =
        row.best_code ? Json(static_cast<double>(r.n) - std::log2(static_cast<double>(row.best_code->size)))
                      : Json(nullptr);
    j["log2_n_plus_1"] = std::log2(static_cast<double>(r.n + 1));
    j["max_sticky_code"] = opt(row.max_sticky_code, id);
    j["max_sticky_exact"] = opt(row.max_sticky_exact, id);
    return j;
}

inline std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out.push_back(',');
        out += cells[i];
    }
    return out;
}

} // namespace nanoread
