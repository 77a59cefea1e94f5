#pragma once

// Counting quantities behind the redundancy lower bound for single-deletion
// read codes. Everything combinatorial is exact (integers or rationals); only
// the closed-form bound and its exponential terms use floating point.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "nanoread/balls.hpp"
#include "nanoread/code.hpp"

namespace nanoread {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t kMaxWeightedSumLength = 22;

/// rho_geq on the low `len` bits of `bits`, read most-significant first.
inline std::size_t rho_geq_packed(std::uint64_t bits, std::size_t len, std::size_t a) {
    std::size_t count = 0;
    std::size_t run = 0;
    unsigned prev = 2;
    for (std::size_t i = len; i-- > 0;) {
        const unsigned b = (bits >> i) & 1U;
        run = b == prev ? run + 1 : 1;
        prev = b;
        if (run == a)
            ++count;
    }
    return count;
}

/// Redundancy lower bound in bits:
/// log2 n - l + 1 - log2( 2/(1 - 2l/n) + 2^-l n exp(-(n-1)/2^(2l+1)) ).
inline double theorem12_bound(std::size_t n, std::size_t window) {
    if (window < 2 || n <= 2 * window)
        throw ArgumentError("theorem12_bound: requires window >= 2 and n > 2 * window");
    const double nn = static_cast<double>(n);
    const double l = static_cast<double>(window);
    const double inner = 2.0 / (1.0 - 2.0 * l / nn) +
                         std::exp2(-l) * nn * std::exp(-(nn - 1.0) / std::exp2(2.0 * l + 1.0));
    return std::log2(nn) - l + 1.0 - std::log2(inner);
}

/// counts[i] = |{ y in {0,1}^len : rho_geq(y, a) = i }|.
inline std::vector<std::uint64_t> rho_class_counts(std::size_t len, std::size_t a) {
    if (len > kMaxWeightedSumLength)
        throw ResourceLimit("rho_class_counts: length beyond enumeration guard");
    if (a < 1)
        throw ArgumentError("rho_class_counts: threshold must be at least 1");
    std::vector<std::uint64_t> counts(len / a + 2, 0);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << len); ++y)
        ++counts[rho_geq_packed(y, len, a)];
    while (counts.size() > 1 && counts.back() == 0)
        counts.pop_back();
    return counts;
}

/// Sum over y in {0,1}^(n-1) of w_y, with w_y = 1/rho_geq(y, l) when positive, else 1.
inline Rational weighted_sum(std::size_t n, std::size_t window) {
    if (n < 2 || n > kMaxWeightedSumLength)
        throw ResourceLimit("weighted_sum: requires 2 <= n <= 22");
    check_window(window);
    const std::size_t len = n - 1;
    Rational total{0};
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << len); ++y) {
        const auto r = rho_geq_packed(y, len, window);
        total += r == 0 ? Rational{1} : Rational{1, static_cast<std::int64_t>(r)};
    }
    return total;
}

/// The same sum grouped by rho class: |{rho = 0}| + sum_i |{rho = i}| / i.
inline Rational weighted_sum_by_class(std::size_t n, std::size_t window) {
    if (n < 2 || n > kMaxWeightedSumLength)
        throw ResourceLimit("weighted_sum_by_class: requires 2 <= n <= 22");
    const auto counts = rho_class_counts(n - 1, window);
    Rational total{static_cast<std::int64_t>(counts[0])};
    for (std::size_t i = 1; i < counts.size(); ++i)
        total += Rational{static_cast<std::int64_t>(counts[i]), static_cast<std::int64_t>(i)};
    return total;
}

/// |{ x in {0,1}^n : rho_geq(x, a) < (n - 2a + 4) / 2^(a+1) }|, compared exactly.
inline std::uint64_t tail_count(std::size_t n, std::size_t a) {
    check_enumerable(n);
    if (a < 1 || a > 60)
        throw ArgumentError("tail_count: threshold must be in [1, 60]");
    const long double rhs = static_cast<long double>(n) - 2.0L * a + 4.0L; // integer-valued
    const long double scale = std::ldexp(1.0L, static_cast<int>(a + 1));
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (scale * static_cast<long double>(rho_geq_packed(x, n, a)) < rhs)
            ++count;
    return count;
}

/// Right-hand side of the tail inequality, 2^n exp(-n / 2^(2a+1)).
inline double tail_bound(std::size_t n, std::size_t a) {
    return std::exp2(static_cast<double>(n)) * std::exp(-static_cast<double>(n) / std::exp2(2.0 * a + 1.0));
}

/// E[rho_geq(x, a)] for uniform x in {0,1}^n, i.e. (n - a + 2) / 2^a.
inline Rational expected_runs(std::size_t n, std::size_t a) {
    if (a < 1 || a > n || a > 62)
        throw ArgumentError("expected_runs: requires 1 <= a <= n (and a <= 62)");
    return Rational{static_cast<std::int64_t>(n - a + 2), std::int64_t{1} << a};
}

/// Each step of A(n,l) <= weighted_sum <= split_tail + split_bulk
/// <= mcdiarmid_term + bulk_term == closed_form, exposed separately.
struct SpherePackingChain {
    std::size_t n = 0;
    std::size_t window = 0;
    Rational weighted_sum{0};
    std::uint64_t split_tail = 0;   // |{y : rho_geq(y,l) < T}|, T = (n - 2l + 3) / 2^(l+1)
    Rational split_bulk{0};         // (1/ceil T) * |{y : rho_geq(y,l) >= ceil T}|
    double mcdiarmid_term = 0;      // 2^(n-1) exp(-(n-1)/2^(2l+1))
    double bulk_term = 0;           // 2^(n+l) / (n - 2l + 3)
    double closed_form = 0;         // 2^(n+l-1)/n * (2^-l n exp(...) + 2n/(n-2l))
};

inline SpherePackingChain sphere_packing_chain(std::size_t n, std::size_t window) {
    if (window < 2 || n <= 2 * window)
        throw ArgumentError("sphere_packing_chain: requires window >= 2 and n > 2 * window");
    SpherePackingChain c;
    c.n = n;
    c.window = window;
    c.weighted_sum = weighted_sum_by_class(n, window);

    const auto counts = rho_class_counts(n - 1, window);
    // T > 0 because n > 2l; ceil T = ceil((n - 2l + 3) / 2^(l+1)).
    const std::uint64_t numer = n - 2 * window + 3;
    const std::uint64_t denom = std::uint64_t{1} << (window + 1);
    const std::uint64_t ceil_t = (numer + denom - 1) / denom;
    std::uint64_t bulk = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i * denom < numer)
            c.split_tail += counts[i];
        if (i >= ceil_t)
            bulk += counts[i];
    }
    c.split_bulk = Rational{static_cast<std::int64_t>(bulk), static_cast<std::int64_t>(ceil_t)};

    const double nn = static_cast<double>(n);
    const double l = static_cast<double>(window);
    const double decay = std::exp(-(nn - 1.0) / std::exp2(2.0 * l + 1.0));
    c.mcdiarmid_term = std::exp2(nn - 1.0) * decay;
    c.bulk_term = std::exp2(nn + l) / (nn - 2.0 * l + 3.0);
    c.closed_form = std::exp2(nn + l - 1.0) / nn * (std::exp2(-l) * nn * decay + 2.0 * nn / (nn - 2.0 * l));
    return c;
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct BoundReport {
    std::size_t n = 0;
    std::size_t window = 0;
    std::optional<double> theorem12_lower_bound;
    std::optional<Rational> weighted_sum;
    std::optional<std::uint64_t> tail_count;   // over {0,1}^(n-1) with a = window
    std::optional<Rational> expected_runs;     // E[rho_geq(x, window)], x in {0,1}^n
    std::vector<std::string> notes;
};

/// Populates every field whose preconditions hold; the rest stay empty with a note.
inline BoundReport bound_report(std::size_t n, std::size_t window) {
    BoundReport rep;
    rep.n = n;
    rep.window = window;
    if (window >= 2 && n > 2 * window)
        rep.theorem12_lower_bound = theorem12_bound(n, window);
    else
        rep.notes.emplace_back("theorem12: requires window >= 2 and n > 2*window");

    if (n >= 2 && n <= kMaxWeightedSumLength) {
        rep.weighted_sum = weighted_sum_by_class(n, window);
        rep.tail_count = tail_count(n - 1, window);
    } else {
        rep.notes.emplace_back("weighted_sum/tail_count: n outside [2, 22]");
    }

    if (window >= 1 && window <= n && window <= 62)
        rep.expected_runs = expected_runs(n, window);
    else
        rep.notes.emplace_back("expected_runs: requires window <= n");
    return rep;
}

} // namespace nanoread
