#pragma once

// The single-deletion read code C(n, l, a): words whose read vector, truncated
// to the first n entries and reduced mod 2, satisfies a VT checksum a mod n+1.
//
// Decoding runs in three stages:
//   1. a full-length input is validated and inverted directly;
//   2. a one-short input with an adjacent gap of 2 has its deleted symbol
//      pinned down by the gap and is repaired in place;
//   3. otherwise the first n-1 received entries mod 2 form a single-deletion
//      corrupted VT word, which is VT-decoded and inverted.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "nanoread/balls.hpp"
#include "nanoread/core.hpp"

namespace nanoread {

/// Largest n for which exhaustive enumeration of {0,1}^n is attempted.
inline constexpr std::size_t kMaxEnumerationLength = 24;

struct CodeParams {
    std::size_t n = 1;
    std::size_t window = 1;
    std::size_t a = 0;

    void validate() const {
        check_window(window);
        if (n < window)
            throw ArgumentError("CodeParams: need n >= window");
        if (a > n)
            throw ArgumentError("CodeParams: residue a must be in [0, n]");
    }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

enum class DecodePath { no_deletion, immediate, vt };

inline const char* to_string(DecodePath p) {
    switch (p) {
    case DecodePath::no_deletion:
        return "no-deletion";
    case DecodePath::immediate:
        return "immediate";
    case DecodePath::vt:
        return "vt";
    }
    return "?";
}

enum class DecodeStatus { success, decoding_failure };

inline const char* to_string(DecodeStatus s) {
    return s == DecodeStatus::success ? "success" : "decoding-failure";
}

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::decoding_failure;
    std::optional<BinaryWord> word;
    DecodePath path = DecodePath::no_deletion;
    std::string reason;

    bool ok() const noexcept { return status == DecodeStatus::success; }
};

/// Sum of i * (tr(x)_i mod 2) over the first n entries, reduced mod n+1.
inline std::size_t vt_checksum(std::span<const Symbol> bits, std::size_t modulus) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        s += (i + 1) * (bits[i] & 1U);
    return s % modulus;
}

inline Symbols mod2_prefix(std::span<const Symbol> levels, std::size_t count) {
    Symbols out(levels.begin(), levels.begin() + static_cast<std::ptrdiff_t>(count));
    for (auto& v : out)
        v &= 1U;
    return out;
}

inline std::size_t syndrome(const BinaryWord& x, const CodeParams& params) {
    params.validate();
    if (x.size() != params.n)
        throw ArgumentError("syndrome: word length differs from n");
    const auto r = read_levels(x.view(), params.window);
    return vt_checksum(std::span(r).first(params.n), params.n + 1);
}

inline bool is_member(const BinaryWord& x, const CodeParams& params) { return syndrome(x, params) == params.a; }

inline void check_enumerable(std::size_t n) {
    if (n == 0 || n > kMaxEnumerationLength)
        throw ResourceLimit("exhaustive enumeration is limited to 1 <= n <= 24");
}

/// Syndrome of every word of length n, indexed by its lexicographic index.
inline std::vector<std::uint32_t> all_syndromes(std::size_t n, std::size_t window) {
    check_enumerable(n);
    CodeParams probe{n, window, 0};
    probe.validate();
    std::vector<std::uint32_t> out(std::size_t{1} << n);
    for (std::uint64_t idx = 0; idx < out.size(); ++idx)
        out[idx] = static_cast<std::uint32_t>(syndrome(BinaryWord::from_index(idx, n), probe));
    return out;
}

/// All codewords of C(n, l, a) in lexicographic order.
inline std::vector<BinaryWord> enumerate_code(const CodeParams& params) {
    params.validate();
    check_enumerable(params.n);
    std::vector<BinaryWord> code;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << params.n); ++idx) {
        auto x = BinaryWord::from_index(idx, params.n);
        if (is_member(x, params))
            code.push_back(std::move(x));
    }
    return code;
}

struct ResidueChoice {
    std::size_t a;
    std::size_t size;
};

/// Residue with the largest code; ties go to the smallest a.
inline ResidueChoice best_residue(std::size_t n, std::size_t window) {
    std::vector<std::size_t> counts(n + 1, 0);
    for (auto s : all_syndromes(n, window))
        ++counts[s];
    ResidueChoice best{0, counts[0]};
    for (std::size_t a = 1; a <= n; ++a)
        if (counts[a] > best.size)
            best = {a, counts[a]};
    return best;
}

/// Codeword of lexicographic rank `message_index`.
inline BinaryWord encode(std::uint64_t message_index, const CodeParams& params) {
    auto code = enumerate_code(params);
    if (message_index >= code.size())
        throw ArgumentError("encode: message index out of range (code size " + std::to_string(code.size()) + ")");
    return code[message_index];
}

/// Inverse of encode().
inline std::uint64_t codeword_rank(const BinaryWord& x, const CodeParams& params) {
    if (!is_member(x, params))
        throw ArgumentError("codeword_rank: word is not a codeword");
    std::uint64_t rank = 0;
    const auto target = x.to_index();
    for (std::uint64_t idx = 0; idx < target; ++idx)
        rank += is_member(BinaryWord::from_index(idx, params.n), params);
    return rank;
}

/// Baseline VT decoder: every insertion of 0 or 1 into `received`, filtered by
/// checksum a mod n+1. Throws DecodingFailure unless exactly one word survives.
inline Symbols vt_insert_exhaustive(std::span<const Symbol> received, std::size_t a, std::size_t n) {
    if (received.size() + 1 != n)
        throw ArgumentError("vt_insert: received length must be n - 1");
    std::set<Symbols> survivors;
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (Symbol bit : {Symbol{0}, Symbol{1}}) {
            Symbols w(received.begin(), received.end());
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), bit);
            if (vt_checksum(w, n + 1) == a % (n + 1))
                survivors.insert(std::move(w));
        }
    }
    if (survivors.size() != 1)
        throw DecodingFailure("vt_insert: " + std::to_string(survivors.size()) + " candidates meet the checksum");
    return *survivors.begin();
}

/// Linear-time VT decoder with the same contract as vt_insert_exhaustive.
inline Symbols vt_insert(std::span<const Symbol> received, std::size_t a, std::size_t n) {
    if (received.size() + 1 != n)
        throw ArgumentError("vt_insert: received length must be n - 1");
    const std::size_t modulus = n + 1;
    std::size_t ones = 0;
    for (auto b : received)
        ones += (b & 1U);
    const std::size_t deficiency = (a % modulus + modulus - vt_checksum(received, modulus)) % modulus;

    Symbols out(received.begin(), received.end());
    for (auto& b : out)
        b &= 1U;
    if (deficiency <= ones) {
        // A 0 was lost; it sits with exactly `deficiency` ones to its right.
        std::size_t right = ones;
        std::size_t pos = 0;
        while (right != deficiency) {
            right -= out[pos];
            ++pos;
        }
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), Symbol{0});
    } else {
        // A 1 was lost; it sits with exactly deficiency - ones - 1 zeros to its left.
        const std::size_t zeros_left = deficiency - ones - 1;
        std::size_t zeros = 0;
        std::size_t pos = 0;
        while (zeros != zeros_left) {
            if (pos == out.size())
                throw DecodingFailure("vt_insert: no insertion meets the checksum");
            zeros += out[pos] == 0;
            ++pos;
        }
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), Symbol{1});
    }
    return out;
}

/// If some adjacent pair of a one-short read differs by 2, the deleted symbol
/// is the midpoint and goes between them. Returns the repaired (unvalidated)
/// levels, or nullopt when every adjacent gap is at most 1.
inline std::optional<CandidateRead> immediate_correct(const CandidateRead& candidate) {
    check_window(candidate.window);
    if (candidate.levels.size() + 2 != candidate.claimed_n + candidate.window)
        throw ArgumentError("immediate_correct: expected length n + window - 2");
    const auto& r = candidate.levels;
    std::optional<std::size_t> gap;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        const int diff = int(r[i + 1]) - int(r[i]);
        if (diff > 2 || diff < -2)
            throw MalformedInput("immediate_correct: adjacent difference exceeds 2");
        if (diff == 2 || diff == -2) {
            if (gap)
                throw MalformedInput("immediate_correct: more than one gap of 2");
            gap = i;
        }
    }
    if (!gap)
        return std::nullopt;
    CandidateRead repaired = candidate;
    const Symbol mid = static_cast<Symbol>((int(r[*gap]) + int(r[*gap + 1])) / 2);
    repaired.levels.insert(repaired.levels.begin() + static_cast<std::ptrdiff_t>(*gap) + 1, mid);
    return repaired;
}

namespace detail {

inline DecodeOutcome failure(DecodePath path, std::string reason) {
    return {DecodeStatus::decoding_failure, std::nullopt, path, std::move(reason)};
}

inline DecodeOutcome accept_full_read(const CandidateRead& full, const CodeParams& params, DecodePath path) {
    if (!is_valid_read_vector(full))
        return failure(path, "not a legitimate read vector");
    auto x = recover_from_mod2(std::span(full.levels).first(params.n), params.window);
    if (!is_member(x, params))
        return failure(path, "recovered word is not a codeword");
    return {DecodeStatus::success, std::move(x), path, {}};
}

} // namespace detail

inline DecodeOutcome decode(const CandidateRead& candidate, const CodeParams& params) {
    params.validate();
    if (candidate.window != params.window || candidate.claimed_n != params.n)
        throw ArgumentError("decode: candidate does not match code parameters");
    const std::size_t full = params.n + params.window - 1;
    const auto& r = candidate.levels;

    if (r.size() == full)
        return detail::accept_full_read(candidate, params, DecodePath::no_deletion);
    if (r.size() + 1 != full)
        throw ArgumentError("decode: candidate length must be n + window - 1 or n + window - 2");

    for (auto v : r)
        if (v > params.window)
            return detail::failure(DecodePath::immediate, "level outside [0, window]");

    std::optional<CandidateRead> repaired;
    try {
        repaired = immediate_correct(candidate);
    } catch (const MalformedInput& e) {
        return detail::failure(DecodePath::immediate, e.what());
    }
    if (repaired)
        return detail::accept_full_read(*repaired, params, DecodePath::immediate);

    Symbols prefix;
    try {
        prefix = vt_insert(mod2_prefix(r, params.n - 1), params.a, params.n);
    } catch (const DecodingFailure& e) {
        return detail::failure(DecodePath::vt, e.what());
    }
    auto x = recover_from_mod2(prefix, params.window);
    if (!deletion_ball(read_levels(x.view(), params.window)).contains(r))
        return detail::failure(DecodePath::vt, "received read is not one deletion away from the decoded word");
    return {DecodeStatus::success, std::move(x), DecodePath::vt, {}};
}

} // namespace nanoread
