#pragma once

// Single-deletion error balls (plain, r-sticky, k-restricted), run statistics
// and the confusability relation between equal-length words.

#include <algorithm>
#include <map>
#include <set>

#include "nanoread/core.hpp"

namespace nanoread {

/// A set of equal-length symbol sequences, ordered lexicographically.
class WordSet {
public:
    using container = std::set<Symbols>;
    using const_iterator = container::const_iterator;

    WordSet() = default;
    WordSet(std::initializer_list<Symbols> init) {
        for (const auto& w : init)
            insert(w);
    }

    void insert(Symbols w) {
        if (!elements_.empty() && elements_.begin()->size() != w.size())
            throw ArgumentError("WordSet: elements must share one length");
        elements_.insert(std::move(w));
    }

    bool contains(const Symbols& w) const { return elements_.count(w) != 0; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    const_iterator begin() const { return elements_.begin(); }
    const_iterator end() const { return elements_.end(); }

    bool is_subset_of(const WordSet& other) const {
        return std::includes(other.begin(), other.end(), begin(), end());
    }

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    container elements_;
};

inline std::size_t intersection_size(const WordSet& a, const WordSet& b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

struct Run {
    Symbol symbol;
    std::size_t length;
    friend bool operator==(const Run&, const Run&) = default;
};

struct RunProfile {
    Symbols word;
    std::vector<Run> runs;
};

inline RunProfile run_profile(std::span<const Symbol> u) {
    RunProfile p{Symbols(u.begin(), u.end()), {}};
    for (auto s : u) {
        if (!p.runs.empty() && p.runs.back().symbol == s)
            ++p.runs.back().length;
        else
            p.runs.push_back({s, 1});
    }
    return p;
}

/// Number of maximal runs of length at least `a`.
inline std::size_t rho_geq(std::span<const Symbol> u, std::size_t a) {
    if (a < 1)
        throw ArgumentError("rho_geq: threshold must be at least 1");
    std::size_t count = 0;
    std::size_t len = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        len = (i > 0 && u[i] == u[i - 1]) ? len + 1 : 1;
        if (len == a)
            ++count;
    }
    return count;
}

inline std::size_t rho(std::span<const Symbol> u) { return rho_geq(u, 1); }

inline Symbols erase_at(std::span<const Symbol> u, std::size_t pos) {
    Symbols out;
    out.reserve(u.size() - 1);
    out.insert(out.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(pos) + 1, u.end());
    return out;
}

inline WordSet deletion_ball(std::span<const Symbol> u) {
    if (u.empty())
        throw ArgumentError("deletion_ball: empty word");
    WordSet ball;
    // Deleting anywhere inside a run gives the same word; take the run's first position.
    for (std::size_t i = 0; i < u.size(); ++i)
        if (i == 0 || u[i] != u[i - 1])
            ball.insert(erase_at(u, i));
    return ball;
}

/// Deletion ball with the (0-based) positions producing each element. Debugging aid.
inline std::map<Symbols, std::vector<std::size_t>> deletion_ball_with_positions(std::span<const Symbol> u) {
    std::map<Symbols, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < u.size(); ++i)
        out[erase_at(u, i)].push_back(i);
    return out;
}

/// One deletion from any run of length at least r.
inline WordSet sticky_ball(std::span<const Symbol> u, std::size_t r) {
    if (r < 1)
        throw ArgumentError("sticky_ball: r must be at least 1");
    WordSet ball;
    std::size_t start = 0;
    for (const auto& run : run_profile(u).runs) {
        if (run.length >= r)
            ball.insert(erase_at(u, start));
        start += run.length;
    }
    return ball;
}

/// One deletion of a symbol equal to 0 or k.
inline WordSet restricted_ball(std::span<const Symbol> u, Symbol k) {
    WordSet ball;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] == 0 || u[i] == k)
            ball.insert(erase_at(u, i));
    return ball;
}

/// Read vectors of the words y with 0^{l-1} y 0^{l-1} in the l-sticky ball of
/// 0^{l-1} x 0^{l-1}. Equals restricted_ball(read_vector(x, l), l).
inline WordSet lemma8_rhs(const BinaryWord& x, std::size_t window) {
    check_window(window);
    const std::size_t pad = window - 1;
    Symbols padded(pad, 0);
    padded.insert(padded.end(), x.bits().begin(), x.bits().end());
    padded.insert(padded.end(), pad, 0);

    WordSet out;
    for (const auto& shorter : sticky_ball(padded, window)) {
        const bool framed =
            std::all_of(shorter.begin(), shorter.begin() + static_cast<std::ptrdiff_t>(pad), [](Symbol s) { return s == 0; }) &&
            std::all_of(shorter.end() - static_cast<std::ptrdiff_t>(pad), shorter.end(), [](Symbol s) { return s == 0; });
        if (!framed)
            continue;
        std::span<const Symbol> y(shorter.data() + pad, shorter.size() - 2 * pad);
        out.insert(read_levels(y, window)); // empty y still reads as l - 1 zeros
    }
    return out;
}

/// u = a c b and v = a c' b where c, c' are the two alternations of a pair of
/// distinct symbols and |c| >= 2. The differing span must be exactly c.
inline bool confusable(std::span<const Symbol> u, std::span<const Symbol> v) {
    if (u.size() != v.size())
        throw ArgumentError("confusable: length mismatch");
    std::size_t first = 0;
    while (first < u.size() && u[first] == v[first])
        ++first;
    if (first == u.size())
        return false;
    std::size_t last = u.size() - 1;
    while (u[last] == v[last])
        --last;
    if (last == first)
        return false;
    const Symbol alpha = u[first];
    const Symbol beta = v[first];
    for (std::size_t i = first; i <= last; ++i) {
        const bool even = (i - first) % 2 == 0;
        if (u[i] != (even ? alpha : beta) || v[i] != (even ? beta : alpha))
            return false;
    }
    return true;
}

} // namespace nanoread
