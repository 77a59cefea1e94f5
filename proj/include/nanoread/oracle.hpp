#pragma once

// Brute-force ground truth. Everything here enumerates the whole word space in
// lexicographic order, so witnesses are stable across runs and platforms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "nanoread/balls.hpp"
#include "nanoread/bounds.hpp"
#include "nanoread/code.hpp"
#include "nanoread/reconstruct.hpp"
#include "nanoread/serialize.hpp"

namespace nanoread::oracle {

inline std::vector<BinaryWord> all_words(std::size_t n) {
    check_enumerable(n);
    std::vector<BinaryWord> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx)
        out.push_back(BinaryWord::from_index(idx, n));
    return out;
}

// ---------------------------------------------------------------------------
// Independent reference versions of optimized operations.

/// Tries every split u = a c b and every symbol pair.
inline bool confusable_bruteforce(std::span<const Symbol> u, std::span<const Symbol> v) {
    if (u.size() != v.size())
        throw ArgumentError("confusable_bruteforce: length mismatch");
    const std::size_t m = u.size();
    Symbol max_sym = 0;
    for (std::size_t i = 0; i < m; ++i)
        max_sym = std::max({max_sym, u[i], v[i]});
    for (std::size_t start = 0; start < m; ++start) {
        for (std::size_t len = 2; start + len <= m; ++len) {
            if (!std::equal(u.begin(), u.begin() + start, v.begin()))
                continue;
            if (!std::equal(u.begin() + start + len, u.end(), v.begin() + start + len))
                continue;
            for (Symbol alpha = 0; alpha <= max_sym; ++alpha) {
                for (Symbol beta = 0; beta <= max_sym; ++beta) {
                    if (alpha == beta)
                        continue;
                    bool match = true;
                    for (std::size_t k = 0; k < len && match; ++k) {
                        const Symbol c = k % 2 == 0 ? alpha : beta;
                        const Symbol cbar = k % 2 == 0 ? beta : alpha;
                        match = u[start + k] == c && v[start + k] == cbar;
                    }
                    if (match)
                        return true;
                }
            }
        }
    }
    return false;
}

/// Every single-symbol deletion of the full read vectors of all words, searched
/// for the candidate. Reference for immediate_correct's repair.
inline std::vector<Symbols> read_vectors_one_deletion_above(const CandidateRead& candidate) {
    std::vector<Symbols> out;
    for (const auto& x : all_words(candidate.claimed_n)) {
        auto r = read_levels(x.view(), candidate.window);
        if (deletion_ball(r).contains(candidate.levels))
            out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Properties of the transform.

struct TransformReport {
    std::size_t n = 0, window = 0;
    std::size_t words = 0;
    std::size_t sum_failures = 0;        // sum of levels != window * weight
    std::size_t adjacency_failures = 0;  // adjacent levels differ by more than 1
    std::size_t roundtrip_failures = 0;  // mod-2 prefix does not invert
    std::size_t validity_failures = 0;   // image member rejected by is_valid_read_vector
    bool injective = true;
    std::optional<std::string> counterexample;

    bool pass() const {
        return sum_failures == 0 && adjacency_failures == 0 && roundtrip_failures == 0 && validity_failures == 0 &&
               injective;
    }
};

inline TransformReport verify_transform(std::size_t n, std::size_t window) {
    TransformReport rep;
    rep.n = n;
    rep.window = window;
    std::set<Symbols> images;
    for (const auto& x : all_words(n)) {
        ++rep.words;
        const auto r = read_vector(x, window);
        const auto& lv = r.levels();
        bool bad = false;
        if (std::accumulate(lv.begin(), lv.end(), std::size_t{0}) != window * weight(x))
            ++rep.sum_failures, bad = true;
        for (std::size_t i = 1; i < lv.size(); ++i) {
            if (int(lv[i]) - int(lv[i - 1]) > 1 || int(lv[i - 1]) - int(lv[i]) > 1) {
                ++rep.adjacency_failures, bad = true;
                break;
            }
        }
        if (recover_from_mod2(std::span(lv).first(n), window) != x)
            ++rep.roundtrip_failures, bad = true;
        if (!is_valid_read_vector(r.as_candidate()))
            ++rep.validity_failures, bad = true;
        if (!images.insert(lv).second)
            rep.injective = false, bad = true;
        if (bad && !rep.counterexample)
            rep.counterexample = format_word(x);
    }
    return rep;
}

struct ValidityReport {
    std::size_t n = 0, window = 0;
    std::uint64_t sequences = 0;
    std::uint64_t accepted = 0;
    std::uint64_t disagreements = 0;
    std::optional<std::string> counterexample;
    bool pass() const { return disagreements == 0 && accepted == (std::uint64_t{1} << n); }
};

/// Every length-(n+l-1) sequence over [0, l] is checked against membership in
/// the image of the transform.
inline ValidityReport verify_validity_check(std::size_t n, std::size_t window) {
    ValidityReport rep;
    rep.n = n;
    rep.window = window;
    std::set<Symbols> image;
    for (const auto& x : all_words(n))
        image.insert(read_levels(x.view(), window));
    const std::size_t len = n + window - 1;
    const std::size_t base = window + 1;
    Symbols s(len, 0);
    while (true) {
        ++rep.sequences;
        const bool valid = is_valid_read_vector({s, window, n});
        rep.accepted += valid;
        if (valid != (image.count(s) != 0)) {
            ++rep.disagreements;
            if (!rep.counterexample)
                rep.counterexample = format_symbols(s, window);
        }
        std::size_t k = len;
        while (k > 0 && s[k - 1] + 1u == base)
            s[--k] = 0;
        if (k == 0)
            break;
        ++s[k - 1];
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Balls.

struct StickyCardinalityReport {
    std::size_t length = 0;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::optional<std::string> counterexample;
    bool pass() const { return failures == 0; }
};

/// |sticky_ball(u, r)| == rho_geq(u, r) for every binary u of the given length and 1 <= r <= length.
inline StickyCardinalityReport verify_sticky_cardinality(std::size_t length) {
    StickyCardinalityReport rep;
    rep.length = length;
    for (const auto& u : all_words(length)) {
        for (std::size_t r = 1; r <= length; ++r) {
            ++rep.cases;
            if (sticky_ball(u.view(), r).size() != rho_geq(u.view(), r)) {
                ++rep.failures;
                if (!rep.counterexample)
                    rep.counterexample = format_word(u) + " r=" + std::to_string(r);
            }
        }
    }
    return rep;
}

struct Lemma8Report {
    std::size_t n = 0, window = 0;
    std::size_t words = 0;
    std::size_t mismatches = 0;
    std::size_t hypothesis_failures = 0; // padded word has no run of length >= window
    std::size_t subset_failures = 0;     // restricted ball not inside the deletion ball
    std::optional<std::string> counterexample;
    bool pass() const { return mismatches == 0 && subset_failures == 0; }
};

inline Lemma8Report verify_lemma8(std::size_t n, std::size_t window) {
    if (n > 16)
        throw ResourceLimit("verify_lemma8: n beyond enumeration guard");
    Lemma8Report rep;
    rep.n = n;
    rep.window = window;
    for (const auto& x : all_words(n)) {
        ++rep.words;
        Symbols padded(window - 1, 0);
        padded.insert(padded.end(), x.bits().begin(), x.bits().end());
        padded.insert(padded.end(), window - 1, 0);
        if (rho_geq(padded, window) == 0)
            ++rep.hypothesis_failures;

        const auto r = read_levels(x.view(), window);
        const auto lhs = restricted_ball(r, static_cast<Symbol>(window));
        const auto rhs = lemma8_rhs(x, window);
        if (lhs != rhs) {
            ++rep.mismatches;
            if (!rep.counterexample)
                rep.counterexample = format_word(x);
        }
        if (!lhs.is_subset_of(deletion_ball(r)))
            ++rep.subset_failures;
    }
    return rep;
}

struct IntersectionReport {
    std::size_t n = 0, window = 0;
    std::size_t max_intersection = 0;
    std::uint64_t pairs_at_max = 0;
    std::optional<std::pair<std::string, std::string>> witness; // first pair attaining the max
};

/// Largest |D(tr(x)) ∩ D(tr(y))| over distinct x, y of length n.
inline IntersectionReport verify_intersection_bound(std::size_t n, std::size_t window) {
    if (n > 14)
        throw ResourceLimit("verify_intersection_bound: n beyond enumeration guard");
    IntersectionReport rep;
    rep.n = n;
    rep.window = window;
    const std::size_t count = std::size_t{1} << n;
    std::map<Symbols, std::vector<std::uint32_t>> owners;
    for (std::uint32_t idx = 0; idx < count; ++idx)
        for (const auto& e : deletion_ball(read_levels(BinaryWord::from_index(idx, n).view(), window)))
            owners[e].push_back(idx);

    std::unordered_map<std::uint64_t, std::uint32_t> shared;
    for (const auto& [elem, xs] : owners)
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                ++shared[(std::uint64_t{xs[i]} << 32) | xs[j]];

    std::uint64_t best_key = 0;
    for (const auto& [key, c] : shared) {
        if (c > rep.max_intersection) {
            rep.max_intersection = c;
            rep.pairs_at_max = 0;
            best_key = key;
        }
        if (c == rep.max_intersection) {
            ++rep.pairs_at_max;
            best_key = std::min(best_key, key);
        }
    }
    if (rep.max_intersection > 0)
        rep.witness = std::make_pair(format_word(BinaryWord::from_index(best_key >> 32, n)),
                                     format_word(BinaryWord::from_index(best_key & 0xffffffffU, n)));
    return rep;
}

struct ConfusabilityReport {
    std::size_t alphabet = 0, length = 0;
    std::uint64_t intersecting_pairs = 0; // distinct pairs with d_H >= 2 and |D(u) ∩ D(v)| = 2
    std::uint64_t confusable_pairs = 0;   // distinct pairs with d_H >= 2 that are confusable
    std::uint64_t disagreements = 0;
    std::optional<std::string> counterexample;
    bool pass() const { return disagreements == 0; }
};

namespace detail {

inline std::uint64_t pack_qary(std::span<const Symbol> w, std::size_t q) {
    std::uint64_t v = 0;
    for (auto s : w)
        v = v * q + s;
    return v;
}

inline Symbols unpack_qary(std::uint64_t v, std::size_t q, std::size_t len) {
    Symbols w(len);
    for (std::size_t i = len; i-- > 0;) {
        w[i] = static_cast<Symbol>(v % q);
        v /= q;
    }
    return w;
}

} // namespace detail

/// For all distinct u, v in [0,q)^m with d_H >= 2: |D(u) ∩ D(v)| == 2 iff confusable.
/// Intersecting pairs come from inverting the deletion balls; confusable pairs
/// from the pairwise scanner over the same candidate set plus every pair the
/// scanner could accept (alternating-segment swaps generated directly).
inline ConfusabilityReport verify_confusability(std::size_t q, std::size_t m) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i)
        total *= q;
    if (q < 2 || m < 2 || total > (std::uint64_t{1} << 20))
        throw ResourceLimit("verify_confusability: q^m beyond enumeration guard");
    ConfusabilityReport rep;
    rep.alphabet = q;
    rep.length = m;

    std::map<Symbols, std::vector<std::uint32_t>> owners;
    for (std::uint64_t idx = 0; idx < total; ++idx)
        for (const auto& e : deletion_ball(detail::unpack_qary(idx, q, m)))
            owners[e].push_back(static_cast<std::uint32_t>(idx));
    std::unordered_map<std::uint64_t, std::uint32_t> shared;
    for (const auto& [elem, xs] : owners)
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                ++shared[(std::uint64_t{xs[i]} << 32) | xs[j]];

    std::set<std::uint64_t> by_intersection;
    for (const auto& [key, c] : shared) {
        const auto u = detail::unpack_qary(key >> 32, q, m);
        const auto v = detail::unpack_qary(key & 0xffffffffU, q, m);
        if (c == 2 && hamming_distance(u, v) >= 2)
            by_intersection.insert(key);
    }

    // Generate every confusable partner directly: swap an alternating segment.
    std::set<std::uint64_t> by_definition;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto u = detail::unpack_qary(idx, q, m);
        for (std::size_t start = 0; start + 1 < m; ++start) {
            if (u[start] == u[start + 1])
                continue;
            for (std::size_t end = start + 1; end < m; ++end) {
                if (end > start + 1 && u[end] != u[end - 2])
                    break;
                auto v = u;
                for (std::size_t k = start; k <= end; ++k)
                    v[k] = (k - start) % 2 == 0 ? u[start + 1] : u[start];
                const auto vi = detail::pack_qary(v, q);
                if (!confusable(u, v)) {
                    ++rep.disagreements;
                    if (!rep.counterexample)
                        rep.counterexample = format_symbols(u, q - 1) + " ~ " + format_symbols(v, q - 1);
                }
                if (hamming_distance(u, v) >= 2)
                    by_definition.insert(idx < vi ? (idx << 32) | vi : (vi << 32) | idx);
            }
        }
    }

    rep.intersecting_pairs = by_intersection.size();
    rep.confusable_pairs = by_definition.size();
    std::vector<std::uint64_t> diff;
    std::set_symmetric_difference(by_intersection.begin(), by_intersection.end(), by_definition.begin(),
                                  by_definition.end(), std::back_inserter(diff));
    rep.disagreements += diff.size();
    if (!diff.empty() && !rep.counterexample)
        rep.counterexample = format_symbols(detail::unpack_qary(diff.front() >> 32, q, m), q - 1) + " vs " +
                             format_symbols(detail::unpack_qary(diff.front() & 0xffffffffU, q, m), q - 1);
    return rep;
}

struct ReadConfusabilityReport {
    std::size_t n = 0, window = 0;
    std::uint64_t pairs = 0;
    std::uint64_t confusable_pairs = 0;
    std::optional<std::pair<std::string, std::string>> witness;
};

/// Counts distinct x, y whose read vectors are confusable.
inline ReadConfusabilityReport count_confusable_reads(std::size_t n, std::size_t window) {
    if (n > 12)
        throw ResourceLimit("count_confusable_reads: n beyond enumeration guard");
    ReadConfusabilityReport rep;
    rep.n = n;
    rep.window = window;
    const auto words = all_words(n);
    std::vector<Symbols> reads;
    for (const auto& x : words)
        reads.push_back(read_levels(x.view(), window));
    for (std::size_t i = 0; i < reads.size(); ++i) {
        for (std::size_t j = i + 1; j < reads.size(); ++j) {
            ++rep.pairs;
            if (confusable(reads[i], reads[j])) {
                ++rep.confusable_pairs;
                if (!rep.witness)
                    rep.witness = std::make_pair(format_word(words[i]), format_word(words[j]));
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The code and its decoder.

struct CodePropertyReport {
    std::size_t codewords = 0;
    bool pass = true;
    std::optional<std::pair<std::string, std::string>> witness;
};

/// True iff the read vectors of distinct words in `code` have disjoint deletion balls.
inline CodePropertyReport verify_read_code(const std::vector<BinaryWord>& code, std::size_t window) {
    CodePropertyReport rep;
    rep.codewords = code.size();
    std::map<Symbols, std::size_t> owner;
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (const auto& e : deletion_ball(read_levels(code[i].view(), window))) {
            auto [it, inserted] = owner.emplace(e, i);
            if (!inserted && it->second != i) {
                rep.pass = false;
                if (!rep.witness)
                    rep.witness = std::make_pair(format_word(code[it->second]), format_word(code[i]));
            }
        }
    }
    return rep;
}

inline CodePropertyReport verify_code_property(const CodeParams& params) {
    return verify_read_code(enumerate_code(params), params.window);
}

/// Distinct codewords have disjoint window-sticky balls.
inline CodePropertyReport verify_sticky_code(const std::vector<BinaryWord>& code, std::size_t window) {
    CodePropertyReport rep;
    rep.codewords = code.size();
    std::map<Symbols, std::size_t> owner;
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (const auto& e : sticky_ball(code[i].view(), window)) {
            auto [it, inserted] = owner.emplace(e, i);
            if (!inserted && it->second != i) {
                rep.pass = false;
                if (!rep.witness)
                    rep.witness = std::make_pair(format_word(code[it->second]), format_word(code[i]));
            }
        }
    }
    return rep;
}

struct DecoderReport {
    std::size_t n = 0, window = 0;
    std::uint64_t codewords = 0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::map<std::string, std::uint64_t> paths;
    std::optional<std::string> counterexample;
    bool pass() const { return failures == 0; }
};

/// Every residue, every codeword, every deleted position of its read vector
/// (and the undeleted read) must decode back to the codeword.
inline DecoderReport verify_decoder(std::size_t n, std::size_t window) {
    DecoderReport rep;
    rep.n = n;
    rep.window = window;
    const auto synd = all_syndromes(n, window);
    for (std::uint64_t idx = 0; idx < synd.size(); ++idx) {
        const auto x = BinaryWord::from_index(idx, n);
        const CodeParams params{n, window, synd[idx]};
        ++rep.codewords;
        const auto r = read_levels(x.view(), window);
        auto check = [&](const Symbols& received) {
            ++rep.trials;
            const auto out = decode({received, window, n}, params);
            ++rep.paths[to_string(out.path)];
            if (!out.ok() || *out.word != x) {
                ++rep.failures;
                if (!rep.counterexample)
                    rep.counterexample = format_word(x) + " a=" + std::to_string(params.a) + " read " +
                                         format_symbols(received, window);
            }
        };
        check(r);
        for (std::size_t p = 0; p < r.size(); ++p)
            check(erase_at(r, p));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Two-read reconstruction.

struct ReconstructionReport {
    std::size_t n = 0, window = 0;
    std::uint64_t words = 0;
    std::uint64_t skipped_singleton = 0;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::uint64_t arbitration_violations = 0; // not exactly one legitimate candidate
    std::uint64_t order_dependence = 0;       // swapping the reads changed the answer
    std::uint64_t equal_candidates = 0;
    std::optional<std::string> counterexample;
    bool pass() const { return failures == 0 && arbitration_violations == 0 && order_dependence == 0; }
};

inline ReconstructionReport verify_reconstruction(std::size_t n, std::size_t window) {
    if (n > 14)
        throw ResourceLimit("verify_reconstruction: n beyond enumeration guard");
    ReconstructionReport rep;
    rep.n = n;
    rep.window = window;
    for (const auto& x : all_words(n)) {
        ++rep.words;
        const auto truth = read_levels(x.view(), window);
        const auto ball = deletion_ball(truth);
        if (ball.size() < 2) {
            ++rep.skipped_singleton;
            continue;
        }
        const std::vector<Symbols> reads(ball.begin(), ball.end());
        for (std::size_t i = 0; i < reads.size(); ++i) {
            for (std::size_t j = i + 1; j < reads.size(); ++j) {
                ++rep.instances;
                const ReadPair pair{{reads[i], window, n}, {reads[j], window, n}};
                const ReadPair swapped{pair.second, pair.first};
                const auto trace = reconstruct_trace(pair, true);
                if (trace.hat == trace.tilde) {
                    ++rep.equal_candidates;
                    if (!trace.hat_valid)
                        ++rep.arbitration_violations;
                } else if (int(trace.hat_valid) + int(trace.tilde_valid) != 1) {
                    ++rep.arbitration_violations;
                }
                bool ok = false;
                try {
                    const auto a = reconstruct_two(pair);
                    const auto b = reconstruct_two(swapped);
                    ok = a.levels() == truth;
                    if (a != b)
                        ++rep.order_dependence;
                } catch (const std::exception&) {
                    ok = false;
                }
                if (!ok) {
                    ++rep.failures;
                    if (!rep.counterexample)
                        rep.counterexample = format_word(x) + " reads " + format_symbols(reads[i], window) + "," +
                                             format_symbols(reads[j], window);
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Exact maximum sticky-deletion-correcting codes.

using Bitset = boost::dynamic_bitset<>;

/// Vertices are all words of length n; x ~ y when their window-sticky balls meet.
struct ConflictGraph {
    std::size_t n = 0;
    std::size_t window = 0;
    std::vector<Bitset> adjacency;

    std::size_t size() const noexcept { return adjacency.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return adjacency[u].test(v); }
};

inline ConflictGraph sticky_conflict_graph(std::size_t n, std::size_t window) {
    if (n > 16)
        throw ResourceLimit("sticky_conflict_graph: n beyond enumeration guard");
    ConflictGraph g;
    g.n = n;
    g.window = window;
    const std::size_t count = std::size_t{1} << n;
    g.adjacency.assign(count, Bitset(count));
    std::map<Symbols, std::vector<std::size_t>> owners;
    for (std::size_t idx = 0; idx < count; ++idx)
        for (const auto& e : sticky_ball(BinaryWord::from_index(idx, n).view(), window))
            owners[e].push_back(idx);
    for (const auto& [elem, xs] : owners) {
        for (auto u : xs) {
            for (auto v : xs) {
                if (u != v)
                    g.adjacency[u].set(v);
            }
        }
    }
    return g;
}

namespace detail {

/// Max independent set by branch and bound: candidates are partitioned greedily
/// into cliques of the conflict graph, which bounds how many more can be picked.
class MisSearch {
public:
    explicit MisSearch(const std::vector<Bitset>& adj) : adj_(adj) {}

    std::vector<std::size_t> solve(const Bitset& vertices, std::vector<std::size_t> initial) {
        best_ = std::move(initial);
        std::vector<std::size_t> current;
        expand(current, vertices);
        return best_;
    }

private:
    void expand(std::vector<std::size_t>& current, Bitset candidates) {
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        clique_cover(candidates, order, bound);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current.size() + bound[k] <= best_.size())
                return;
            const auto v = order[k];
            current.push_back(v);
            Bitset next = candidates;
            next -= adj_[v];
            next.reset(v);
            if (next.none()) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            candidates.reset(v);
        }
    }

    // Vertex order with, for each prefix, the number of cliques covering it.
    void clique_cover(const Bitset& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
        Bitset uncovered = candidates;
        std::size_t cliques = 0;
        while (uncovered.any()) {
            ++cliques;
            Bitset open = uncovered;
            for (auto v = open.find_first(); v != Bitset::npos; v = open.find_next(v)) {
                open &= adj_[v];
                uncovered.reset(v);
                order.push_back(v);
                bound.push_back(cliques);
            }
        }
    }

    const std::vector<Bitset>& adj_;
    std::vector<std::size_t> best_;
};

inline std::vector<std::size_t> greedy_independent_set(const std::vector<Bitset>& adj, Bitset remaining) {
    std::vector<std::size_t> chosen;
    while (remaining.any()) {
        std::size_t best = Bitset::npos;
        std::size_t best_deg = 0;
        for (auto v = remaining.find_first(); v != Bitset::npos; v = remaining.find_next(v)) {
            const auto deg = (adj[v] & remaining).count();
            if (best == Bitset::npos || deg < best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        chosen.push_back(best);
        remaining -= adj[best];
        remaining.reset(best);
    }
    return chosen;
}

inline std::vector<Bitset> components(const std::vector<Bitset>& adj) {
    const std::size_t count = adj.size();
    Bitset seen(count);
    std::vector<Bitset> out;
    for (std::size_t s = 0; s < count; ++s) {
        if (seen.test(s))
            continue;
        Bitset comp(count);
        Bitset frontier(count);
        frontier.set(s);
        while (frontier.any()) {
            comp |= frontier;
            Bitset next(count);
            for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
                next |= adj[v];
            next -= comp;
            frontier = next;
        }
        seen |= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace detail

/// Exact maximum independent set of an arbitrary graph, sorted ascending.
inline std::vector<std::size_t> maximum_independent_set(const std::vector<Bitset>& adj) {
    std::vector<std::size_t> result;
    detail::MisSearch search(adj);
    for (const auto& comp : detail::components(adj)) {
        auto part = search.solve(comp, detail::greedy_independent_set(adj, comp));
        result.insert(result.end(), part.begin(), part.end());
    }
    std::sort(result.begin(), result.end());
    return result;
}

/// Independence number by plain branching (take isolated vertices, otherwise
/// branch on a maximum-degree vertex). No bounding; used as a cross-check.
inline std::size_t independence_number_by_branching(const std::vector<Bitset>& adj, Bitset remaining) {
    std::size_t forced = 0;
    std::size_t pick = Bitset::npos;
    std::size_t pick_deg = 0;
    for (auto v = remaining.find_first(); v != Bitset::npos; v = remaining.find_next(v)) {
        const auto deg = (adj[v] & remaining).count();
        if (deg == 0) {
            ++forced;
        } else if (pick == Bitset::npos || deg > pick_deg) {
            pick = v;
            pick_deg = deg;
        }
    }
    if (pick == Bitset::npos)
        return forced;
    for (auto v = remaining.find_first(); v != Bitset::npos; v = remaining.find_next(v))
        if ((adj[v] & remaining).none())
            remaining.reset(v);
    Bitset without = remaining;
    without.reset(pick);
    Bitset with = remaining;
    with -= adj[pick];
    with.reset(pick);
    return forced + std::max(independence_number_by_branching(adj, without),
                             1 + independence_number_by_branching(adj, with));
}

inline constexpr std::size_t kMaxExactMisLength = 8;

struct MaxCodeResult {
    std::size_t n = 0, window = 0;
    std::size_t size = 0;
    bool exact = false; // false: greedy lower bound only
    std::size_t empty_ball_words = 0; // isolated vertices, always in a maximum code
    std::vector<BinaryWord> witness;

    /// Largest code among words that can suffer the deletion at all.
    std::size_t size_with_nonempty_balls() const { return size - empty_ball_words; }
};

/// A(n, l): the largest code correcting one window-sticky deletion. Exact for
/// n <= 8; beyond that a greedy code, labelled as a lower bound.
inline MaxCodeResult exact_max_sticky_code(std::size_t n, std::size_t window) {
    const auto g = sticky_conflict_graph(n, window);
    MaxCodeResult res;
    res.n = n;
    res.window = window;
    std::vector<std::size_t> chosen;
    if (n <= kMaxExactMisLength) {
        chosen = maximum_independent_set(g.adjacency);
        res.exact = true;
    } else {
        Bitset all(g.size());
        all.set();
        chosen = detail::greedy_independent_set(g.adjacency, all);
        std::sort(chosen.begin(), chosen.end());
    }
    res.size = chosen.size();
    for (auto v : chosen) {
        res.witness.push_back(BinaryWord::from_index(v, n));
        if (rho_geq(res.witness.back().view(), window) == 0)
            ++res.empty_ball_words;
    }
    return res;
}

struct SpherePackingReport {
    std::size_t n = 0, window = 0;
    MaxCodeResult max_code;
    Rational weighted_sum{0};
    bool pass() const { return max_code.exact && Rational{static_cast<std::int64_t>(max_code.size)} <= weighted_sum; }
    // The hypergraph behind the weighted sum has no edge for a word with an
    // empty ball, so only codes avoiding such words are covered by it.
    bool nonempty_pass() const {
        return max_code.exact && Rational{static_cast<std::int64_t>(max_code.size_with_nonempty_balls())} <= weighted_sum;
    }
};

inline SpherePackingReport verify_sphere_packing(std::size_t n, std::size_t window) {
    SpherePackingReport rep;
    rep.n = n;
    rep.window = window;
    rep.max_code = exact_max_sticky_code(n, window);
    rep.weighted_sum = weighted_sum(n, window);
    return rep;
}

struct WeightFeasibilityReport {
    std::size_t n = 0, window = 0;
    std::uint64_t hyperedges = 0;
    std::uint64_t violations = 0;
    Rational min_edge_weight{0};
    std::optional<std::string> counterexample;
    bool pass() const { return violations == 0; }
};

/// Every nonempty sticky ball must carry total weight >= 1.
inline WeightFeasibilityReport verify_weight_feasibility(std::size_t n, std::size_t window) {
    WeightFeasibilityReport rep;
    rep.n = n;
    rep.window = window;
    bool first = true;
    for (const auto& x : all_words(n)) {
        const auto ball = sticky_ball(x.view(), window);
        if (ball.empty())
            continue;
        ++rep.hyperedges;
        Rational total{0};
        for (const auto& y : ball) {
            const auto r = rho_geq(y, window);
            total += r == 0 ? Rational{1} : Rational{1, static_cast<std::int64_t>(r)};
        }
        if (first || total < rep.min_edge_weight)
            rep.min_edge_weight = total;
        first = false;
        if (total < Rational{1}) {
            ++rep.violations;
            if (!rep.counterexample)
                rep.counterexample = format_word(x);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Run statistics.

/// Exhaustive average of rho_geq(x, a) over {0,1}^n, via unpacked words.
inline Rational exhaustive_mean_rho(std::size_t n, std::size_t a) {
    std::int64_t total = 0;
    for (const auto& x : all_words(n))
        total += static_cast<std::int64_t>(rho_geq(x.view(), a));
    return Rational{total, std::int64_t{1} << n};
}

/// Tail count via the rho-class histogram rather than a per-word threshold test.
inline std::uint64_t tail_count_from_histogram(std::size_t n, std::size_t a) {
    const auto counts = rho_class_counts(n, a);
    std::uint64_t total = 0;
    const long long rhs = static_cast<long long>(n) - 2 * static_cast<long long>(a) + 4;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (static_cast<long double>(i) * std::ldexp(1.0L, static_cast<int>(a + 1)) < static_cast<long double>(rhs))
            total += counts[i];
    return total;
}

} // namespace nanoread::oracle
