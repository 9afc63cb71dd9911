#include "properties.hpp"

#include <gtest/gtest.h>

using namespace bsdh;

namespace {

void expect_ok(const props::Outcome& o)
{
    EXPECT_TRUE(o.ok()) << o.summary();
    for (const auto& f : o.failures)
        ADD_FAILURE() << f;
}

struct FixtureRun {
    std::vector<FixtureRecord> fixtures = load_fixtures(default_fixture_path());
    std::vector<FixtureResult> results = run_fixtures(fixtures);
};

const FixtureRun& fixture_run()
{
    static FixtureRun run;
    return run;
}

} // namespace

TEST(Properties, EulerIdentity) { expect_ok(props::euler_identity(500, 8, 2)); }

// The full [-4,4] G2 run lives in the acceptance binary; this one keeps unit runs short.
TEST(Properties, BorelWeilBottG2)
{
    auto o = props::bbw_agreement("G2", 100, 2, 0);
    EXPECT_EQ(o.checked, 100);
    expect_ok(o);
}

TEST(Properties, BorelWeilBottF4Budgeted)
{
    auto o = props::bbw_agreement("F4", 100, 4, 500);
    EXPECT_GT(o.checked, 50);
    expect_ok(o);
}

TEST(Properties, DimensionBudgetAborts)
{
    RootSystem sys = root_system_from_tag("G2");
    TowerOptions opt;
    opt.dim_budget = 10;
    Weight big = Rational(3) * rho(sys);
    EXPECT_THROW(line_bundle_coh(sys, longest_element(sys).word, big, opt), BudgetExceeded);
}

TEST(Properties, ChainDecompositionMatchesJordanType) { expect_ok(props::chain_oracle(200, 8)); }

TEST(Properties, StepH1VanishesOnFixtureH0) { expect_ok(props::h1_vanishing_on_fixtures(fixture_run().fixtures, fixture_run().results)); }

TEST(Properties, ShortRootLineHasNoH1) { expect_ok(props::short_root_vanishing()); }

TEST(Properties, NoHigherDegrees)
{
    auto rows = classify(root_system_from_tag("G2"));
    expect_ok(props::higher_degree_vanishing(fixture_run().results, rows));
}

TEST(Properties, CaseSplitsNeverChangeFixtureCharacters)
{
    expect_ok(props::case_split_safety(fixture_run().fixtures, fixture_run().results));
}
