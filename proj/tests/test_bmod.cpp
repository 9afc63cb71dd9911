#include "bsdh/coh.hpp"

#include <gtest/gtest.h>

using namespace bsdh;

namespace {

// H^0(s_i, alpha_i): weights alpha_i, 0, -alpha_i with f_i surjective, as produced by the engine.
BModule sl2_adjoint(const RootSystem& sys, int i) { return step_h0(sys, line_module(simple_root(sys, i)), i); }

} // namespace

TEST(BModule, LineModule)
{
    RootSystem sys = root_system_from_tag("F4");
    BModule triv = line_module(zero_weight(sys));
    EXPECT_EQ(triv.dim(), 1);
    EXPECT_EQ(character(triv), Character(Character::Map{{zero_weight(sys), 1}}));
    Weight m = -fundamental_weight(sys, 4);
    EXPECT_EQ(line_module(m).weights[0], Weight({-1, -2, -3, -2}));
    EXPECT_EQ(dim_at(BModule(4), m), 0);
}

TEST(BModule, DirectSumAndDims)
{
    RootSystem sys = root_system_from_tag("G2");
    BModule a = sl2_adjoint(sys, 2);
    BModule b = line_module(simple_root(sys, 1));
    BModule s = direct_sum(a, b);
    EXPECT_EQ(s.dim(), 4);
    EXPECT_EQ(character(s), character(a) + character(b));
    EXPECT_EQ(s.entry(2, 1, 0), a.entry(2, 1, 0));
    EXPECT_NO_THROW(validate_module(sys, s));
}

TEST(BModule, GradingViolationRejected)
{
    RootSystem sys = root_system_from_tag("A2");
    BModule m(2);
    m.add_basis(simple_root(sys, 1));
    m.add_basis(zero_weight(sys));
    m.set_entry(2, 1, 0, Affine(1)); // f_2 cannot map alpha_1 to 0
    EXPECT_THROW(validate_module(sys, m), std::invalid_argument);
    EXPECT_THROW(chain_decompose(sys, m, 1), std::invalid_argument);
}

TEST(BModule, SetEntryKeepsColumnsSorted)
{
    BModule m(1);
    for (int k = 0; k < 4; ++k)
        m.add_basis(Weight({-k}));
    m.set_entry(1, 3, 0, Affine(5));
    m.set_entry(1, 1, 0, Affine(2));
    m.set_entry(1, 2, 0, Affine(3));
    ASSERT_EQ(m.lower(1, 0).size(), 3u);
    EXPECT_EQ(m.lower(1, 0)[0].first, 1);
    EXPECT_EQ(m.lower(1, 0)[2].first, 3);
    m.set_entry(1, 2, 0, Affine(0));
    EXPECT_EQ(m.lower(1, 0).size(), 2u);
    EXPECT_TRUE(m.entry(1, 2, 0).is_zero());
}

TEST(BModule, Instantiate)
{
    BModule m(1);
    m.add_basis(Weight({0}));
    m.add_basis(Weight({-1}));
    m.set_entry(1, 1, 0, Affine::param(7) + Affine(1));
    EXPECT_EQ(module_params(m), std::set<int>({7}));
    EXPECT_EQ(lowering_params(m, 1), std::set<int>({7}));
    BModule zero = instantiate(m, {{7, 0}});
    BModule one = instantiate(m, {{7, 1}});
    EXPECT_EQ(zero.entry(1, 1, 0), Affine(1));
    EXPECT_EQ(one.entry(1, 1, 0), Affine(2));
    EXPECT_EQ(character(zero), character(one));
    BModule known = line_module(Weight({3}));
    EXPECT_EQ(instantiate(known, {}), known);
}

TEST(BModule, AssignmentEnumeration)
{
    auto three = enumerate_assignments({0, 1, 2});
    ASSERT_EQ(three.size(), 8u);
    for (const auto& [id, v] : three.front())
        EXPECT_NE(v, 0) << id;
    for (const auto& [id, v] : three.back())
        EXPECT_EQ(v, 0) << id;
    auto six = enumerate_assignments({0, 1, 2, 3, 4, 5});
    EXPECT_EQ(six.size(), 2u + 2u * 6u);
    EXPECT_EQ(generic_value(3), generic_value(3));
    EXPECT_NE(generic_value(3), 0);
}

TEST(ChainDecompose, LineIsOneChain)
{
    RootSystem sys = root_system_from_tag("F4");
    Weight l = -fundamental_weight(sys, 4);
    auto d = std::get<ChainDecomposition>(chain_decompose(sys, line_module(l), 4));
    ASSERT_EQ(d.chains.size(), 1u);
    EXPECT_EQ(d.chains[0].top, l);
    EXPECT_EQ(d.chains[0].len, 0);
    EXPECT_EQ(d.chains[0].twist, -1);
}

TEST(ChainDecompose, AdjointSl2)
{
    RootSystem sys = root_system_from_tag("F4");
    BModule m = sl2_adjoint(sys, 2);
    auto d = std::get<ChainDecomposition>(chain_decompose(sys, m, 2));
    ASSERT_EQ(d.chains.size(), 1u);
    EXPECT_EQ(d.chains[0].top, simple_root(sys, 2));
    EXPECT_EQ(d.chains[0].len, 2);
    EXPECT_EQ(d.chains[0].twist, 0);
}

TEST(ChainDecompose, TwoDimensionalIndecomposable)
{
    // H^0(s_1 s_2, alpha_2) restricted to alpha_2: C h + C_{-alpha_2} is one chain
    RootSystem sys = root_system_from_tag("F4");
    BModule m = step_h0(sys, sl2_adjoint(sys, 2), 1);
    Weight a1 = simple_root(sys, 1), a2 = simple_root(sys, 2);
    EXPECT_EQ(dim_at(m, -(a1 + a2)), 1);
    auto d = std::get<ChainDecomposition>(chain_decompose(sys, m, 2));
    std::multiset<std::pair<Weight, int>> want = {{zero_weight(sys), 1}, {-(a1 + a2), 0}};
    EXPECT_EQ(chain_shape(d), want);
    for (const auto& ch : d.chains)
        EXPECT_EQ(ch.twist, -1);
}

TEST(ChainDecompose, ParametricGivesCaseSplit)
{
    RootSystem sys = root_system_from_tag("A1");
    BModule m(1);
    m.add_basis(Weight({1}));
    m.add_basis(Weight({0}));
    m.set_entry(1, 1, 0, Affine::param(0));
    auto r = chain_decompose(sys, m, 1);
    ASSERT_TRUE(std::holds_alternative<CaseSplit>(r));
    const auto& split = std::get<CaseSplit>(r);
    ASSERT_EQ(split.cases.size(), 2u);
    EXPECT_EQ(split.cases[0].second.chains.size(), 1u); // generic: one 2-chain
    EXPECT_EQ(split.cases[1].second.chains.size(), 2u); // zero: two lines
}
