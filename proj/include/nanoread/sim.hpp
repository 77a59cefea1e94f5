#pragma once

// Seeded channel simulation: codewords through the read channel with deletions,
// then decoding or two-read reconstruction.
//
// Randomness: trial t of a run with seed s uses std::mt19937_64 seeded with
// splitmix64(s ^ splitmix64(t)). Bounded integers use rejection sampling on
// the raw 64-bit output and probabilities compare the top 53 bits, so the
// stream is identical on every conforming platform.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "nanoread/balls.hpp"
#include "nanoread/code.hpp"
#include "nanoread/reconstruct.hpp"

namespace nanoread::sim {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) : engine_(splitmix64(seed ^ splitmix64(trial))) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw ArgumentError("TrialRng::below: empty range");
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const auto r = engine_();
            if (r >= threshold)
                return r % bound;
        }
    }

    /// True with probability p.
    bool bernoulli(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 engine_;
};

enum class DeletionMode { exactly_one, iid };

inline const char* to_string(DeletionMode m) { return m == DeletionMode::exactly_one ? "exactly-one" : "iid"; }

struct SimConfig {
    std::size_t n = 8;
    std::size_t window = 2;
    DeletionMode mode = DeletionMode::exactly_one;
    double p = 0.0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t reads_per_word = 1;
    std::size_t threads = 1;

    void validate() const {
        check_window(window);
        if (n < 1 || n > 64)
            throw ArgumentError("SimConfig: n must be in [1, 64]");
        if (!(p >= 0.0 && p < 1.0))
            throw ArgumentError("SimConfig: p must be in [0, 1)");
        if (trials < 1)
            throw ArgumentError("SimConfig: trials must be at least 1");
        if (reads_per_word != 1 && reads_per_word != 2)
            throw ArgumentError("SimConfig: reads_per_word must be 1 or 2");
        if (threads < 1)
            throw ArgumentError("SimConfig: threads must be at least 1");
    }
};

namespace detail {

/// Runs `body(trial)` for every trial, writing into a trial-indexed vector, so
/// the result does not depend on how trials are spread across threads.
template <typename Result, typename Body>
std::vector<Result> run_trials(std::uint64_t trials, std::size_t threads, Body body) {
    std::vector<Result> out(trials);
    threads = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, trials));
    if (threads == 1) {
        for (std::uint64_t t = 0; t < trials; ++t)
            out[t] = body(t);
        return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t t = w; t < trials; t += threads)
                out[t] = body(t);
        });
    }
    for (auto& th : pool)
        th.join();
    return out;
}

} // namespace detail

struct RoundtripSummary {
    SimConfig config;
    CodeParams params;
    std::uint64_t code_size = 0;
    std::uint64_t success = 0;
    std::uint64_t decode_failure = 0;
    std::uint64_t miscorrected = 0;
    std::uint64_t out_of_model = 0; // two or more deletions; not decoded
    std::map<std::string, std::uint64_t> paths;
};

enum class TrialOutcome : std::uint8_t { success, decode_failure, miscorrected, out_of_model };

inline RoundtripSummary run_roundtrip(const SimConfig& config, const CodeParams& params) {
    config.validate();
    params.validate();
    if (config.n != params.n || config.window != params.window)
        throw ArgumentError("roundtrip: config and code parameters disagree");
    if (config.reads_per_word != 1)
        throw ArgumentError("roundtrip: reads_per_word must be 1");
    const auto code = enumerate_code(params);
    if (code.empty())
        throw ArgumentError("roundtrip: code is empty");

    struct Trial {
        TrialOutcome outcome = TrialOutcome::out_of_model;
        DecodePath path = DecodePath::no_deletion;
    };
    auto results = detail::run_trials<Trial>(config.trials, config.threads, [&](std::uint64_t t) {
        TrialRng rng(config.seed, t);
        const auto& x = code[rng.below(code.size())];
        const auto sent = read_levels(x.view(), params.window);
        Symbols received;
        if (config.mode == DeletionMode::exactly_one) {
            received = erase_at(sent, rng.below(sent.size()));
        } else {
            for (auto v : sent)
                if (!rng.bernoulli(config.p))
                    received.push_back(v);
        }
        Trial tr;
        if (received.size() + 1 < sent.size())
            return tr;
        const auto out = decode({received, params.window, params.n}, params);
        tr.path = out.path;
        if (!out.ok())
            tr.outcome = TrialOutcome::decode_failure;
        else
            tr.outcome = *out.word == x ? TrialOutcome::success : TrialOutcome::miscorrected;
        return tr;
    });

    RoundtripSummary s;
    s.config = config;
    s.params = params;
    s.code_size = code.size();
    for (const char* name : {"no-deletion", "immediate", "vt"})
        s.paths[name] = 0;
    for (const auto& r : results) {
        switch (r.outcome) {
        case TrialOutcome::success:
            ++s.success;
            ++s.paths[to_string(r.path)];
            break;
        case TrialOutcome::decode_failure:
            ++s.decode_failure;
            break;
        case TrialOutcome::miscorrected:
            ++s.miscorrected;
            break;
        case TrialOutcome::out_of_model:
            ++s.out_of_model;
            break;
        }
    }
    return s;
}

struct ReconstructSummary {
    SimConfig config;
    std::uint64_t success = 0;
    std::uint64_t failure = 0;
    std::uint64_t skipped_singleton = 0;
};

inline ReconstructSummary run_reconstruct(const SimConfig& config) {
    config.validate();
    if (config.window < 2)
        throw UnsupportedParameter("reconstruct: two reads are not sufficient for window 1");
    if (config.mode != DeletionMode::exactly_one)
        throw ArgumentError("reconstruct: only the exactly-one deletion mode is supported");
    if (config.reads_per_word != 2)
        throw ArgumentError("reconstruct: reads_per_word must be 2");

    enum class Outcome : std::uint8_t { success, failure, skipped };
    auto results = detail::run_trials<Outcome>(config.trials, config.threads, [&](std::uint64_t t) {
        TrialRng rng(config.seed, t);
        const std::uint64_t bits = config.n == 64 ? rng.next() : rng.next() >> (64 - config.n);
        const auto x = BinaryWord::from_index(bits, config.n);
        const auto truth = read_levels(x.view(), config.window);
        if (rho(truth) < 2)
            return Outcome::skipped;
        const auto first = erase_at(truth, rng.below(truth.size()));
        auto second = erase_at(truth, rng.below(truth.size()));
        while (second == first)
            second = erase_at(truth, rng.below(truth.size()));
        try {
            const auto r = reconstruct_two({{first, config.window, config.n}, {second, config.window, config.n}});
            return r.levels() == truth ? Outcome::success : Outcome::failure;
        } catch (const std::exception&) {
            return Outcome::failure;
        }
    });

    ReconstructSummary s;
    s.config = config;
    for (auto r : results) {
        s.success += r == Outcome::success;
        s.failure += r == Outcome::failure;
        s.skipped_singleton += r == Outcome::skipped;
    }
    return s;
}

} // namespace nanoread::sim
