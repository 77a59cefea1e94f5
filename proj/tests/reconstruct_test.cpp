#include "nanoread/oracle.hpp"
#include "nanoread/reconstruct.hpp"
#include "nanoread/serialize.hpp"

#include <gtest/gtest.h>

using namespace nanoread;

namespace {
Symbols S(const char* s) { return parse_symbols(s); }
} // namespace

TEST(DisagreementSpan, Examples) {
    EXPECT_EQ(disagreement_span(S("1222100"), S("1122100")), (DisagreementSpan{2, 2}));
    EXPECT_EQ(disagreement_span(S("011"), S("110")), (DisagreementSpan{1, 3}));
    EXPECT_THROW(disagreement_span(S("011"), S("011")), ArgumentError);
    EXPECT_THROW(disagreement_span(S("01"), S("011")), ArgumentError);
}

TEST(DisagreementSpan, SingleDifferenceGivesEqualEnds) {
    const auto u = S("0120121");
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto v = u;
        v[i] = (v[i] + 1) % 3;
        const auto span = disagreement_span(u, v);
        EXPECT_EQ(span.first, span.last);
        EXPECT_EQ(span.first, i + 1);
    }
}

TEST(ReconstructTwo, Example) {
    const ReadPair pair{{S("1222100"), 3, 6}, {S("1122100"), 3, 6}};
    const auto trace = reconstruct_trace(pair);
    EXPECT_EQ(trace.hat, S("11222100"));
    EXPECT_EQ(trace.tilde, S("12122100"));
    EXPECT_TRUE(trace.hat_valid);
    EXPECT_FALSE(trace.tilde_valid);
    EXPECT_EQ(reconstruct_two(pair).levels(), S("11222100"));
    EXPECT_EQ(reconstruct_two({pair.second, pair.first}).levels(), S("11222100"));
}

TEST(ReconstructTwo, ShortCircuitGivesSameAnswer) {
    const ReadPair pair{{S("1222100"), 3, 6}, {S("1122100"), 3, 6}};
    EXPECT_EQ(reconstruct_two(pair, false), reconstruct_two(pair, true));
}

TEST(ReconstructTwo, Errors) {
    EXPECT_THROW(reconstruct_two({{S("010"), 1, 4}, {S("011"), 1, 4}}), UnsupportedParameter);
    EXPECT_THROW(reconstruct_two({{S("1122100"), 3, 6}, {S("1122100"), 3, 6}}), ArgumentError);
    EXPECT_THROW(reconstruct_two({{S("112210"), 3, 6}, {S("112211"), 3, 6}}), ArgumentError);
    // Reads of two different words: neither candidate is a read vector.
    EXPECT_THROW(reconstruct_two({{S("3333333"), 3, 6}, {S("3333330"), 3, 6}}), InconsistentInput);
}

TEST(ReconstructTwo, SingletonBallHasNoPairs) {
    // The all-zero read vector has a one-element deletion ball.
    EXPECT_EQ(deletion_ball(read_vector(BinaryWord::zeros(6), 3).levels()).size(), 1u);
}

TEST(ReconstructTwo, ExhaustiveSmall) {
    for (std::size_t l = 2; l <= 4; ++l) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto rep = oracle::verify_reconstruction(n, l);
            EXPECT_TRUE(rep.pass()) << n << "," << l << " " << rep.counterexample.value_or("");
            EXPECT_GE(rep.skipped_singleton, 1u); // 0^n
        }
    }
}

TEST(ReconstructTwo, IntersectionBoundSmall) {
    for (std::size_t l = 2; l <= 3; ++l)
        for (std::size_t n = 2; n <= 8; ++n)
            EXPECT_LE(oracle::verify_intersection_bound(n, l).max_intersection, 1u);
    const auto plain = oracle::verify_intersection_bound(6, 1);
    EXPECT_EQ(plain.max_intersection, 2u);
    ASSERT_TRUE(plain.witness.has_value());
    EXPECT_TRUE(confusable(parse_symbols(plain.witness->first), parse_symbols(plain.witness->second)));
}
