#include "nanoread/balls.hpp"
#include "nanoread/oracle.hpp"
#include "nanoread/serialize.hpp"

#include <gtest/gtest.h>

#include "reference.hpp"

using namespace nanoread;

namespace {
Symbols S(const char* s) { return parse_symbols(s); }
BinaryWord W(const char* s) { return parse_word(s); }

WordSet to_set(const std::set<Symbols>& s) {
    WordSet out;
    for (const auto& w : s)
        out.insert(w);
    return out;
}
} // namespace

TEST(DeletionBall, Examples) {
    EXPECT_EQ(deletion_ball(S("112")), (WordSet{S("12"), S("11")}));
    EXPECT_EQ(deletion_ball(S("112")), to_set(reference::single_deletions(S("112"))));
    EXPECT_EQ(deletion_ball(S("00000")), (WordSet{S("0000")}));
    EXPECT_EQ(deletion_ball(S("0101")), (WordSet{S("101"), S("001"), S("011"), S("010")}));
    EXPECT_THROW(deletion_ball(Symbols{}), ArgumentError);
}

TEST(DeletionBall, SizeIsRunCountAndMatchesNaive) {
    for (std::uint64_t idx = 0; idx < 729; ++idx) {
        Symbols u(6);
        auto c = idx;
        for (auto& s : u) {
            s = c % 3;
            c /= 3;
        }
        const auto ball = deletion_ball(u);
        ASSERT_EQ(ball, to_set(reference::single_deletions(u)));
        ASSERT_EQ(ball.size(), rho(u));
    }
}

TEST(DeletionBall, ProvenanceVariantCoversEveryPosition) {
    const auto annotated = deletion_ball_with_positions(S("0011"));
    ASSERT_EQ(annotated.size(), 2u);
    EXPECT_EQ(annotated.at(S("011")), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(annotated.at(S("001")), (std::vector<std::size_t>{2, 3}));
}

TEST(StickyBall, Examples) {
    EXPECT_EQ(sticky_ball(S("00111"), 2), (WordSet{S("0111"), S("0011")}));
    EXPECT_TRUE(sticky_ball(S("0101"), 2).empty());
    for (const char* u : {"0", "01", "0011010", "1110001"})
        EXPECT_EQ(sticky_ball(S(u), 1), deletion_ball(S(u)));
}

TEST(StickyBall, SizeIsRhoGeq) {
    for (std::size_t len = 1; len <= 10; ++len)
        EXPECT_TRUE(oracle::verify_sticky_cardinality(len).pass()) << len;
}

TEST(RestrictedBall, Examples) {
    EXPECT_EQ(restricted_ball(S("11222100"), 3), (WordSet{S("1122210")}));
    EXPECT_TRUE(restricted_ball(S("121"), 3).empty());
    EXPECT_EQ(restricted_ball(S("030"), 3), (WordSet{S("30"), S("00"), S("03")}));
}

TEST(RhoGeq, Examples) {
    EXPECT_EQ(rho_geq(S("00111"), 2), 2u);
    EXPECT_EQ(rho_geq(S("1111111"), 1), 1u);
    EXPECT_EQ(rho_geq(S("010"), 2), 0u);
    EXPECT_EQ(rho_geq(S("0011100"), 3), 1u);
    EXPECT_THROW(rho_geq(S("0"), 0), ArgumentError);
}

TEST(RunProfile, ReassemblesWord) {
    const auto p = run_profile(S("0011101"));
    ASSERT_EQ(p.runs.size(), 4u);
    EXPECT_EQ(p.runs[0], (nanoread::Run{0, 2}));
    EXPECT_EQ(p.runs[1], (nanoread::Run{1, 3}));
    Symbols rebuilt;
    for (const auto& r : p.runs)
        rebuilt.insert(rebuilt.end(), r.length, r.symbol);
    EXPECT_EQ(rebuilt, p.word);
}

TEST(StickyImage, Examples) {
    EXPECT_EQ(lemma8_rhs(W("101100"), 3), (WordSet{S("1122210")}));
    // Both sides for x = 11, l = 2, computed from the naive definitions.
    EXPECT_EQ(reference::read_vector(S("11"), 2), S("121"));
    EXPECT_EQ(reference::read_vector(S("1"), 2), S("11"));
    EXPECT_EQ(lemma8_rhs(W("11"), 2), (WordSet{S("11")}));
    EXPECT_EQ(lemma8_rhs(W("11"), 2), restricted_ball(read_vector(W("11"), 2).levels(), 2));
}

TEST(StickyImage, HoldsWhenHypothesisFails) {
    // 0 101 0 has no run of length 2; both sides are empty.
    EXPECT_EQ(rho_geq(S("01010"), 2), 0u);
    EXPECT_TRUE(lemma8_rhs(W("101"), 2).empty());
    EXPECT_TRUE(restricted_ball(read_vector(W("101"), 2).levels(), 2).empty());
}

TEST(StickyImage, EqualsRestrictedBallExhaustive) {
    for (std::size_t l = 1; l <= 4; ++l)
        for (std::size_t n = 1; n <= 8; ++n)
            EXPECT_TRUE(oracle::verify_lemma8(n, l).pass()) << n << "," << l;
}

TEST(Confusable, Examples) {
    EXPECT_TRUE(confusable(S("0101"), S("1010")));
    EXPECT_FALSE(confusable(S("0101"), S("0101")));
    EXPECT_TRUE(confusable(S("11222100"), S("12122100")));
    EXPECT_FALSE(confusable(S("0110"), S("1001")));
    EXPECT_TRUE(confusable(S("010"), S("101")));
    EXPECT_THROW(confusable(S("01"), S("010")), ArgumentError);
}

TEST(Confusable, ScannerMatchesBruteForce) {
    for (std::size_t q = 2; q <= 3; ++q) {
        for (std::size_t m = 1; m <= 5; ++m) {
            std::vector<Symbols> words;
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < m; ++i)
                total *= q;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                Symbols w(m);
                auto c = idx;
                for (auto& s : w) {
                    s = c % q;
                    c /= q;
                }
                words.push_back(w);
            }
            for (const auto& u : words)
                for (const auto& v : words)
                    ASSERT_EQ(confusable(u, v), oracle::confusable_bruteforce(u, v))
                        << format_symbols(u, 9) << " " << format_symbols(v, 9);
        }
    }
}

TEST(Confusable, CharacterizesDoubleIntersections) {
    for (std::size_t q = 2; q <= 3; ++q)
        for (std::size_t m = 2; m <= 6; ++m)
            EXPECT_TRUE(oracle::verify_confusability(q, m).pass()) << q << "," << m;
}

TEST(Confusable, ReadVectorsNeverConfusableForWindowAtLeastTwo) {
    for (std::size_t l = 2; l <= 3; ++l)
        for (std::size_t n = 1; n <= 8; ++n)
            EXPECT_EQ(oracle::count_confusable_reads(n, l).confusable_pairs, 0u) << n << "," << l;
    // Window 1 is the plain binary case, where confusable pairs exist.
    EXPECT_GT(oracle::count_confusable_reads(4, 1).confusable_pairs, 0u);
}

TEST(WordSet, RejectsMixedLengths) {
    WordSet s;
    s.insert(S("01"));
    EXPECT_THROW(s.insert(S("011")), ArgumentError);
}
