#include "nanoread/bounds.hpp"
#include "nanoread/oracle.hpp"

#include <gtest/gtest.h>

#include "reference.hpp"

using namespace nanoread;

namespace {

// Run counting written out from the definition, independent of rho_geq.
std::size_t naive_runs_at_least(const Symbols& w, std::size_t a) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (j - i >= a)
            ++count;
        i = j;
    }
    return count;
}

} // namespace

TEST(RedundancyBound, ApproachesLogNMinusWindow) {
    EXPECT_LT(std::abs(theorem12_bound(1u << 10, 2) - (10.0 - 2.0)), 0.1);
    EXPECT_LT(std::abs(theorem12_bound(1u << 20, 2) - (20.0 - 2.0)), 0.1);
    EXPECT_LT(std::abs(theorem12_bound(1u << 20, 2) - (20.0 - 2.0)),
              std::abs(theorem12_bound(1u << 10, 2) - (10.0 - 2.0)));
}

TEST(RedundancyBound, DomainGuard) {
    EXPECT_THROW(theorem12_bound(4, 2), ArgumentError);
    EXPECT_THROW(theorem12_bound(6, 3), ArgumentError);
    EXPECT_THROW(theorem12_bound(100, 1), ArgumentError);
    EXPECT_NO_THROW(theorem12_bound(5, 2));
}

TEST(RedundancyBound, MonotoneInN) {
    double prev = theorem12_bound(8, 2);
    for (std::size_t n = 9; n <= (1u << 20); n = n < 4096 ? n + 1 : n * 2) {
        const double v = theorem12_bound(n, 2);
        ASSERT_GT(v, prev) << n;
        prev = v;
    }
}

TEST(RedundancyBound, MatchesClosedFormChain) {
    // Redundancy n - log2(closed form) is the same expression rearranged.
    for (std::size_t l = 2; l <= 4; ++l) {
        for (std::size_t n = 2 * l + 1; n <= 18; ++n) {
            const auto chain = sphere_packing_chain(n, l);
            const double via_chain = static_cast<double>(n) - std::log2(chain.closed_form);
            EXPECT_NEAR(via_chain, theorem12_bound(n, l), 1e-12 * std::max(1.0, std::abs(via_chain)));
        }
    }
}

TEST(WeightedSum, Examples) {
    EXPECT_EQ(weighted_sum(5, 2), Rational(15));
    EXPECT_EQ(weighted_sum(6, 2), Rational(27));
    EXPECT_EQ(weighted_sum(10, 2), Rational(521, 2));
    // Window longer than the words: every weight is 1.
    EXPECT_EQ(weighted_sum(6, 6), Rational(32));
    EXPECT_EQ(weighted_sum(6, 9), Rational(32));
    EXPECT_THROW(weighted_sum(23, 2), ResourceLimit);
}

TEST(WeightedSum, TwoCountingPathsAgree) {
    for (std::size_t l = 1; l <= 4; ++l) {
        for (std::size_t n = 2; n <= 14; ++n) {
            Rational naive{0};
            for (std::uint64_t idx = 0; idx < (1u << (n - 1)); ++idx) {
                const auto r = naive_runs_at_least(reference::bits_of(idx, n - 1), l);
                naive += r == 0 ? Rational(1) : Rational(1, static_cast<std::int64_t>(r));
            }
            ASSERT_EQ(weighted_sum(n, l), naive);
            ASSERT_EQ(weighted_sum_by_class(n, l), naive);
        }
    }
}

TEST(WeightFeasibility, EveryHyperedgeCarriesUnitWeight) {
    for (std::size_t l = 2; l <= 4; ++l) {
        for (std::size_t n = 2; n <= 12; ++n) {
            const auto rep = oracle::verify_weight_feasibility(n, l);
            EXPECT_TRUE(rep.pass()) << n << "," << l << " " << rep.counterexample.value_or("");
        }
    }
}

TEST(TailCount, Examples) {
    EXPECT_EQ(tail_count(8, 2), 2u);
    EXPECT_EQ(oracle::tail_count_from_histogram(8, 2), 2u);
    // Threshold n - 2a + 4 <= 0: nothing is below it.
    EXPECT_EQ(tail_count(4, 4), 0u);
    // a = n: (4 - n)/2^(n+1) > 0 only for n < 4; rho_geq(x, n) = 1 iff x is constant.
    EXPECT_EQ(tail_count(3, 3), 6u);
}

TEST(TailCount, InequalityAndHistogramAgreement) {
    for (std::size_t n = 1; n <= 14; ++n) {
        for (std::size_t a = 1; a <= 3; ++a) {
            const auto c = tail_count(n, a);
            ASSERT_EQ(c, oracle::tail_count_from_histogram(n, a));
            if (a <= n) {
                ASSERT_LE(static_cast<double>(c), tail_bound(n, a) + 1e-9) << n << "," << a;
            }
        }
    }
}

TEST(TailCount, InequalityNeedsWindowWithinWord) {
    // With a > n the mean (n - a + 2)/2^a is not the true mean 0, and the
    // inequality breaks: both words of length 1 fall below the threshold.
    EXPECT_EQ(tail_count(1, 2), 2u);
    EXPECT_GT(2.0, tail_bound(1, 2) + 1e-9);
}

TEST(ExpectedRuns, Examples) {
    EXPECT_EQ(expected_runs(6, 1), Rational(7, 2));
    EXPECT_EQ(expected_runs(6, 3), Rational(5, 8));
    EXPECT_THROW(expected_runs(3, 4), ArgumentError);
    EXPECT_THROW(expected_runs(3, 0), ArgumentError);
}

TEST(ExpectedRuns, MatchesExhaustiveMean) {
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t a = 1; a <= n; ++a)
            ASSERT_EQ(expected_runs(n, a), oracle::exhaustive_mean_rho(n, a)) << n << "," << a;
}

TEST(SpherePackingChain, StepsAreOrdered) {
    for (std::size_t l = 2; l <= 3; ++l) {
        for (std::size_t n = 2 * l + 1; n <= 20; ++n) {
            const auto c = sphere_packing_chain(n, l);
            ASSERT_EQ(c.weighted_sum, weighted_sum(n, l));
            const Rational split = Rational(static_cast<std::int64_t>(c.split_tail)) + c.split_bulk;
            ASSERT_LE(c.weighted_sum, split) << n << "," << l;
            ASSERT_LE(static_cast<double>(c.split_tail), c.mcdiarmid_term + 1e-9);
            ASSERT_LE(to_double(c.split_bulk), c.bulk_term + 1e-9);
            ASSERT_LE(c.mcdiarmid_term + c.bulk_term, c.closed_form * (1 + 1e-12));
            ASSERT_EQ(c.split_tail, tail_count(n - 1, l));
        }
    }
}

TEST(BoundReport, FieldsPresentOrAbsent) {
    const auto small = bound_report(10, 2);
    EXPECT_TRUE(small.theorem12_lower_bound.has_value());
    EXPECT_TRUE(small.weighted_sum.has_value());
    EXPECT_TRUE(small.tail_count.has_value());
    EXPECT_TRUE(small.expected_runs.has_value());
    EXPECT_TRUE(small.notes.empty());

    const auto edge = bound_report(4, 2);
    EXPECT_FALSE(edge.theorem12_lower_bound.has_value());
    EXPECT_FALSE(edge.notes.empty());
    EXPECT_TRUE(edge.weighted_sum.has_value());

    const auto big = bound_report(40, 2);
    EXPECT_TRUE(big.theorem12_lower_bound.has_value());
    EXPECT_FALSE(big.weighted_sum.has_value());
    EXPECT_FALSE(big.tail_count.has_value());
}

TEST(MaxStickyCode, SmallValues) {
    // Independent clique search on the complement graph gave these values.
    const std::size_t expected[] = {0, 0, 4, 6, 10, 16, 28, 44};
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto a = oracle::exact_max_sticky_code(n, 2);
        EXPECT_EQ(a.size, expected[n]) << n;
        EXPECT_EQ(a.empty_ball_words, 2u); // 0101... and 1010...
    }
    EXPECT_EQ(oracle::exact_max_sticky_code(3, 4).size, 8u);
}

TEST(MaxStickyCode, BranchAndBoundMatchesPlainBranching) {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t l = 1; l <= 3; ++l) {
            const auto g = oracle::sticky_conflict_graph(n, l);
            oracle::Bitset all(g.size());
            all.set();
            const auto mis = oracle::maximum_independent_set(g.adjacency);
            ASSERT_EQ(mis.size(), oracle::independence_number_by_branching(g.adjacency, all));
            for (auto u : mis)
                for (auto v : mis)
                    ASSERT_FALSE(g.adjacent(u, v));
        }
    }
}

TEST(SpherePacking, WordsWithEmptyBallsBreakTheLiteralBound) {
    // A(5,2) = 16 exceeds the weighted sum 15: the two alternating words have
    // empty sticky balls, sit outside the hypergraph, and join every code.
    const auto rep = oracle::verify_sphere_packing(5, 2);
    EXPECT_EQ(rep.max_code.size, 16u);
    EXPECT_EQ(rep.weighted_sum, Rational(15));
    EXPECT_FALSE(rep.pass());
    EXPECT_TRUE(rep.nonempty_pass());
}

TEST(SpherePacking, HoldsOnWordsWithNonemptyBalls) {
    for (std::size_t n = 2; n <= 8; ++n)
        EXPECT_TRUE(oracle::verify_sphere_packing(n, 2).nonempty_pass()) << n;
    for (std::size_t n = 7; n <= 8; ++n)
        EXPECT_TRUE(oracle::verify_sphere_packing(n, 2).pass()) << n;
}

TEST(BoundReport, ExactMaxCodeBelowWeightedSum) {
    const auto rep = bound_report(8, 2);
    const auto a = oracle::exact_max_sticky_code(8, 2);
    ASSERT_TRUE(a.exact);
    EXPECT_LE(Rational(static_cast<std::int64_t>(a.size)), *rep.weighted_sum);
}
