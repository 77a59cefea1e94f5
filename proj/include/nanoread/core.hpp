#pragma once

// Sliding-window weight transform ("l-read vector") of binary words and its inverse.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nanoread/errors.hpp"

namespace nanoread {

using Symbol = std::uint8_t;
using Symbols = std::vector<Symbol>;

/// Largest supported window length; levels are stored as single bytes.
inline constexpr std::size_t kMaxWindow = 255;

/// A nonempty binary word, x in {0,1}^n.
class BinaryWord {
public:
    BinaryWord() = default;

    explicit BinaryWord(Symbols bits) : bits_(std::move(bits)) {
        if (bits_.empty())
            throw ArgumentError("BinaryWord: length must be at least 1");
        for (auto b : bits_)
            if (b > 1)
                throw ArgumentError("BinaryWord: symbol outside {0,1}");
    }

    static BinaryWord zeros(std::size_t n) { return BinaryWord(Symbols(n, 0)); }
    static BinaryWord ones(std::size_t n) { return BinaryWord(Symbols(n, 1)); }

    /// Word whose bits are the n-bit big-endian expansion of `index`, so that
    /// increasing indices enumerate {0,1}^n in lexicographic order.
    static BinaryWord from_index(std::uint64_t index, std::size_t n) {
        if (n == 0 || n > 64)
            throw ArgumentError("BinaryWord::from_index: n must be in [1, 64]");
        Symbols bits(n);
        for (std::size_t i = 0; i < n; ++i)
            bits[i] = static_cast<Symbol>((index >> (n - 1 - i)) & 1U);
        return BinaryWord(std::move(bits));
    }

    std::uint64_t to_index() const {
        if (bits_.size() > 64)
            throw ArgumentError("BinaryWord::to_index: word longer than 64 bits");
        std::uint64_t v = 0;
        for (auto b : bits_)
            v = (v << 1) | b;
        return v;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    Symbol operator[](std::size_t i) const { return bits_[i]; }
    const Symbols& bits() const noexcept { return bits_; }
    std::span<const Symbol> view() const noexcept { return bits_; }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
    Symbols bits_;
};

/// A possibly corrupted channel output: arbitrary levels, a window length and
/// the source length the caller claims it belongs to.
struct CandidateRead {
    Symbols levels;
    std::size_t window = 1;
    std::size_t claimed_n = 1;

    friend bool operator==(const CandidateRead&, const CandidateRead&) = default;
};

class ReadVector;
ReadVector read_vector(const BinaryWord& x, std::size_t window);
bool is_valid_read_vector(const CandidateRead& candidate);

/// The l-read vector of some binary word. Only obtainable from read_vector()
/// or from a candidate that passes is_valid_read_vector().
class ReadVector {
public:
    const Symbols& levels() const noexcept { return levels_; }
    std::size_t window() const noexcept { return window_; }
    std::size_t source_length() const noexcept { return levels_.size() + 1 - window_; }
    std::size_t size() const noexcept { return levels_.size(); }
    Symbol operator[](std::size_t i) const { return levels_[i]; }

    CandidateRead as_candidate() const { return {levels_, window_, source_length()}; }

    /// Throws ArgumentError unless `candidate` is the read vector of some word.
    static ReadVector from_candidate(const CandidateRead& candidate) {
        if (!is_valid_read_vector(candidate))
            throw ArgumentError("ReadVector: candidate is not a legitimate read vector");
        return ReadVector(candidate.levels, candidate.window);
    }

    friend bool operator==(const ReadVector&, const ReadVector&) = default;

private:
    ReadVector(Symbols levels, std::size_t window) : levels_(std::move(levels)), window_(window) {}
    friend ReadVector read_vector(const BinaryWord&, std::size_t);

    Symbols levels_;
    std::size_t window_ = 1;
};

inline void check_window(std::size_t window) {
    if (window < 1 || window > kMaxWindow)
        throw ArgumentError("window length must be in [1, 255]");
}

/// Raw transform on a symbol span; entry i is the weight of x[i-l+1..i],
/// indices outside the word read as zero.
inline Symbols read_levels(std::span<const Symbol> x, std::size_t window) {
    const std::size_t n = x.size();
    Symbols out(n + window - 1);
    unsigned running = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < n)
            running += x[i];
        if (i >= window)
            running -= x[i - window];
        out[i] = static_cast<Symbol>(running);
    }
    return out;
}

inline ReadVector read_vector(const BinaryWord& x, std::size_t window) {
    check_window(window);
    return ReadVector(read_levels(x.view(), window), window);
}

/// Inverts the first n entries of a read vector taken mod 2:
/// x_i = p_i xor p_{i-1} xor x_{i-l}, with out-of-range terms zero.
inline BinaryWord recover_from_mod2(std::span<const Symbol> prefix, std::size_t window) {
    check_window(window);
    const std::size_t n = prefix.size();
    Symbols x(n);
    for (std::size_t i = 0; i < n; ++i) {
        Symbol v = prefix[i] & 1U;
        if (i >= 1)
            v ^= prefix[i - 1] & 1U;
        if (i >= window)
            v ^= x[i - window];
        x[i] = v;
    }
    return BinaryWord(std::move(x));
}

inline bool is_valid_read_vector(const CandidateRead& candidate) {
    check_window(candidate.window);
    const auto& r = candidate.levels;
    if (candidate.claimed_n < 1 || r.size() != candidate.claimed_n + candidate.window - 1)
        throw ArgumentError("is_valid_read_vector: length does not match claimed_n + window - 1");
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] > candidate.window)
            return false;
        if (i > 0 && (r[i] > r[i - 1] + 1 || r[i - 1] > r[i] + 1))
            return false;
    }
    const auto x = recover_from_mod2(std::span(r).first(candidate.claimed_n), candidate.window);
    return read_levels(x.view(), candidate.window) == r;
}

inline std::size_t weight(const BinaryWord& x) {
    return static_cast<std::size_t>(std::count(x.bits().begin(), x.bits().end(), Symbol{1}));
}

inline std::size_t hamming_distance(std::span<const Symbol> u, std::span<const Symbol> v) {
    if (u.size() != v.size())
        throw ArgumentError("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        d += u[i] != v[i];
    return d;
}

} // namespace nanoread
