#pragma once

// Zero-redundancy recovery of a read vector from two distinct single-deletion
// copies, valid for window >= 2.

#include <utility>

#include "nanoread/core.hpp"

namespace nanoread {

struct ReadPair {
    CandidateRead first;
    CandidateRead second;
};

struct DisagreementSpan {
    std::size_t first; // 1-based
    std::size_t last;  // 1-based
    friend bool operator==(const DisagreementSpan&, const DisagreementSpan&) = default;
};

inline DisagreementSpan disagreement_span(std::span<const Symbol> u, std::span<const Symbol> v) {
    if (u.size() != v.size())
        throw ArgumentError("disagreement_span: length mismatch");
    std::size_t i = 0;
    while (i < u.size() && u[i] == v[i])
        ++i;
    if (i == u.size())
        throw ArgumentError("disagreement_span: sequences are equal");
    std::size_t j = u.size() - 1;
    while (u[j] == v[j])
        --j;
    return {i + 1, j + 1};
}

/// Both insertion candidates and their validity, for inspection.
struct ReconstructionTrace {
    DisagreementSpan span;
    Symbols hat;   // second read's symbol at `first`, inserted before position `first` of the first read
    Symbols tilde; // second read's symbol at `last`, inserted after position `last` of the first read
    bool hat_valid = false;
    bool tilde_valid = false;
};

namespace detail {

inline void check_pair(const ReadPair& pair) {
    const auto& a = pair.first;
    const auto& b = pair.second;
    if (a.window != b.window || a.claimed_n != b.claimed_n)
        throw ArgumentError("reconstruct: reads disagree on window or source length");
    check_window(a.window);
    if (a.window < 2)
        throw UnsupportedParameter("reconstruct: two reads are not sufficient for window 1");
    if (a.claimed_n < 1 || a.levels.size() + 2 != a.claimed_n + a.window || b.levels.size() != a.levels.size())
        throw ArgumentError("reconstruct: each read must have length n + window - 2");
    if (a.levels == b.levels)
        throw ArgumentError("reconstruct: reads must be distinct");
}

} // namespace detail

/// Builds both candidates. With `check_both` false, the tilde candidate is not
/// validated once hat is known to be legitimate.
inline ReconstructionTrace reconstruct_trace(const ReadPair& pair, bool check_both = true) {
    detail::check_pair(pair);
    const auto& r = pair.first.levels;
    const auto& s = pair.second.levels;
    ReconstructionTrace t;
    t.span = disagreement_span(r, s);
    const auto i = t.span.first - 1;
    const auto j = t.span.last - 1;

    t.hat = r;
    t.hat.insert(t.hat.begin() + static_cast<std::ptrdiff_t>(i), s[i]);
    t.tilde = r;
    t.tilde.insert(t.tilde.begin() + static_cast<std::ptrdiff_t>(j) + 1, s[j]);

    const auto window = pair.first.window;
    const auto n = pair.first.claimed_n;
    t.hat_valid = is_valid_read_vector({t.hat, window, n});
    if (check_both || !t.hat_valid)
        t.tilde_valid = t.hat == t.tilde ? t.hat_valid : is_valid_read_vector({t.tilde, window, n});
    return t;
}

inline ReadVector reconstruct_two(const ReadPair& pair, bool check_both = true) {
    const auto t = reconstruct_trace(pair, check_both);
    const auto window = pair.first.window;
    const auto n = pair.first.claimed_n;
    if (t.hat == t.tilde) {
        if (!t.hat_valid)
            throw InconsistentInput("reconstruct: reads do not come from a common read vector");
        return ReadVector::from_candidate({t.hat, window, n});
    }
    if (t.hat_valid && t.tilde_valid)
        throw InvariantViolation("reconstruct: both insertion candidates are legitimate read vectors");
    if (t.hat_valid)
        return ReadVector::from_candidate({t.hat, window, n});
    if (t.tilde_valid)
        return ReadVector::from_candidate({t.tilde, window, n});
    throw InconsistentInput("reconstruct: reads do not come from a common read vector");
}

} // namespace nanoread
