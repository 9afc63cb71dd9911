#include "bsdh/rootsys.hpp"

#include <gtest/gtest.h>

using namespace bsdh;

namespace {

Weight W(std::initializer_list<long> c) { return Weight(c); }

} // namespace

TEST(RootSystem, PositiveRootCounts)
{
    const std::vector<std::pair<std::string, std::size_t>> cases = {
        {"A1", 1}, {"A2", 3}, {"A3", 6},  {"B2", 4},  {"B3", 9},   {"C3", 9}, {"D4", 12},
        {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
    for (const auto& [tag, n] : cases)
        EXPECT_EQ(root_system_from_tag(tag).positive_roots.size(), n) << tag;
}

TEST(RootSystem, TagParsing)
{
    EXPECT_EQ(root_system_from_tag("A_3").rank, 3);
    EXPECT_EQ(root_system_from_tag("F4").series, "F4");
    EXPECT_THROW(root_system_from_tag("F5"), std::invalid_argument);
    EXPECT_THROW(root_system_from_tag("X2"), std::invalid_argument);
    EXPECT_THROW(root_system_from_tag(""), std::invalid_argument);
}

TEST(RootSystem, F4CartanConvention)
{
    RootSystem sys = root_system_from_tag("F4");
    const std::vector<std::vector<int>> want = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    EXPECT_EQ(sys.cartan, want);
    // pairings quoted in the hand computations
    EXPECT_EQ(pairing(sys, simple_root(sys, 3), 2), -1);
    EXPECT_EQ(pairing(sys, -simple_root(sys, 2), 3), 2);
    EXPECT_EQ(pairing(sys, -(simple_root(sys, 1) + simple_root(sys, 2)), 3), 2);
    EXPECT_EQ(pairing(sys, simple_root(sys, 2), 4), 0);
    EXPECT_EQ(pairing(sys, -(simple_root(sys, 3) + simple_root(sys, 2)), 1), 1);
}

TEST(RootSystem, F4DistinguishedWeights)
{
    RootSystem sys = root_system_from_tag("F4");
    Weight om4 = fundamental_weight(sys, 4);
    EXPECT_EQ(om4, W({1, 2, 3, 2}));
    EXPECT_EQ(highest_long_root(sys), W({2, 3, 4, 2}));
    EXPECT_EQ(highest_short_root(sys), om4);
    Weight m = -om4 + simple_root(sys, 4);
    EXPECT_EQ(pairing(sys, m, 4), 1);
    EXPECT_EQ(pairing(sys, m, 3), -1);
    EXPECT_EQ(pairing(sys, -om4, 3), 0);
    EXPECT_EQ(pairing(sys, -om4, 4), -1);
    EXPECT_EQ(pairing(sys, om4, 1), 0);
    EXPECT_EQ(pairing(sys, om4, 2), 0);
}

TEST(RootSystem, G2Convention)
{
    RootSystem sys = root_system_from_tag("G2");
    EXPECT_EQ(sys.cartan[0][1], -3);
    EXPECT_EQ(sys.cartan[1][0], -1);
    EXPECT_EQ(highest_long_root(sys), W({3, 2}));
    EXPECT_FALSE(is_long_root(sys, simple_root(sys, 1)));
    EXPECT_TRUE(is_long_root(sys, simple_root(sys, 2)));
    EXPECT_TRUE(is_root(sys, W({3, 1})));
    EXPECT_FALSE(is_root(sys, W({3, 3})));
}

TEST(RootSystem, LongShortSplit)
{
    for (const auto& [tag, nlong] : std::vector<std::pair<std::string, int>>{{"F4", 12}, {"G2", 3}, {"B3", 6}}) {
        RootSystem sys = root_system_from_tag(tag);
        int count = 0;
        for (const auto& b : sys.positive_roots)
            count += is_long_root(sys, b) ? 1 : 0;
        EXPECT_EQ(count, nlong) << tag;
    }
}

TEST(RootSystem, FormAndReflections)
{
    for (const std::string tag : {"F4", "G2", "B3", "C3", "D4"}) {
        RootSystem sys = root_system_from_tag(tag);
        for (int i = 1; i <= sys.rank; ++i) {
            Weight fi = fundamental_weight(sys, i);
            for (int j = 1; j <= sys.rank; ++j) {
                EXPECT_EQ(pairing_q(sys, fi, j), i == j ? 1 : 0);
                EXPECT_EQ(inner(sys, simple_root(sys, i), simple_root(sys, j)),
                          inner(sys, simple_root(sys, j), simple_root(sys, i)));
            }
            EXPECT_EQ(pairing(sys, simple_root(sys, i), i), 2);
        }
        for (const auto& b : sys.positive_roots)
            for (int i = 1; i <= sys.rank; ++i) {
                Weight r = reflect(sys, b, i);
                EXPECT_TRUE(is_root(sys, r));
                EXPECT_EQ(reflect(sys, r, i), b);
                EXPECT_EQ(dot_reflect(sys, dot_reflect(sys, b, i), i), b);
            }
        Weight r = rho(sys);
        for (int i = 1; i <= sys.rank; ++i)
            EXPECT_EQ(pairing(sys, r, i), 1);
    }
}

TEST(RootSystem, DotReflection)
{
    RootSystem sys = root_system_from_tag("G2");
    Weight a = simple_root(sys, 1);
    // s.lambda = s(lambda) - alpha
    EXPECT_EQ(dot_reflect(sys, zero_weight(sys), 1), -a);
    EXPECT_EQ(dot_reflect(sys, -a, 1), zero_weight(sys));
}

TEST(RootSystem, NonIntegralPairingRejected)
{
    RootSystem sys = root_system_from_tag("A2");
    Weight half(2);
    half[0] = Rational(1, 2);
    EXPECT_EQ(pairing_q(sys, half, 1), 1);
    half[1] = Rational(1, 3);
    EXPECT_THROW(pairing(sys, half, 1), std::exception);
}
