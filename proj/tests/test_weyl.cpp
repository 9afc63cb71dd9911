#include "bsdh/weyl.hpp"

#include <gtest/gtest.h>

using namespace bsdh;

TEST(Weyl, GroupOrdersByClosure)
{
    const std::vector<std::pair<std::string, std::size_t>> cases = {
        {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48}, {"G2", 12}, {"D4", 192}};
    for (const auto& [tag, n] : cases)
        EXPECT_EQ(enumerate_group(root_system_from_tag(tag)).size(), n) << tag;
}

TEST(Weyl, F4OrderAndLengths)
{
    RootSystem sys = root_system_from_tag("F4");
    auto group = enumerate_group(sys);
    EXPECT_EQ(group.size(), 1152u);
    // BFS words are reduced; length distribution is symmetric around 12
    std::vector<int> count(25, 0);
    for (const auto& e : group) {
        int l = length(sys, e.word);
        EXPECT_EQ(l, static_cast<int>(e.word.size()));
        ++count[l];
    }
    for (int l = 0; l <= 24; ++l)
        EXPECT_EQ(count[l], count[24 - l]);
    EXPECT_EQ(count[24], 1);
}

TEST(Weyl, LongestElement)
{
    for (const std::string tag : {"F4", "G2", "B3", "A3"}) {
        RootSystem sys = root_system_from_tag(tag);
        WeylElement w0 = longest_element(sys);
        EXPECT_EQ(static_cast<int>(w0.word.size()), static_cast<int>(sys.positive_roots.size()));
        EXPECT_TRUE(is_reduced(sys, w0.word));
        for (const auto& b : sys.positive_roots)
            EXPECT_TRUE(is_nonpositive(act(sys, w0.word, b)));
    }
    RootSystem f4 = root_system_from_tag("F4");
    for (int i = 1; i <= 4; ++i)
        EXPECT_EQ(act(f4, longest_element(f4).word, fundamental_weight(f4, i)), -fundamental_weight(f4, i));
}

TEST(Weyl, ActionOrder)
{
    RootSystem sys = root_system_from_tag("A2");
    // s1 s2 (alpha_1) = s1(alpha_1 + alpha_2) = alpha_2
    EXPECT_EQ(act(sys, {1, 2}, simple_root(sys, 1)), simple_root(sys, 2));
    EXPECT_EQ(act(sys, {2, 1}, simple_root(sys, 1)), -(simple_root(sys, 1) + simple_root(sys, 2)));
}

TEST(Weyl, Reducedness)
{
    RootSystem sys = root_system_from_tag("G2");
    EXPECT_TRUE(is_reduced(sys, {1, 2, 1, 2, 1, 2}));
    EXPECT_FALSE(is_reduced(sys, {1, 2, 1, 2, 1, 2, 1}));
    EXPECT_FALSE(is_reduced(sys, {1, 1}));
    EXPECT_EQ(length(sys, {1, 2, 1, 2, 1, 2, 1}), 5);
    EXPECT_THROW(check_word(sys, {1, 3}), std::invalid_argument);
}

TEST(Weyl, CoxeterNormalForms)
{
    RootSystem f4 = root_system_from_tag("F4");
    auto forms = enumerate_coxeter_normal_forms(f4);
    ASSERT_EQ(forms.size(), 8u);
    EXPECT_EQ(forms.front().seq, std::vector<int>({1}));
    EXPECT_EQ(forms.front().word, WeylWord({1, 2, 3, 4}));
    EXPECT_EQ(coxeter_from_decreasing_seq(f4, {3, 2, 1}), WeylWord({3, 4, 2, 1}));
    EXPECT_EQ(coxeter_from_decreasing_seq(f4, {4, 3, 2, 1}), WeylWord({4, 3, 2, 1}));
    EXPECT_EQ(coxeter_from_decreasing_seq(f4, {4, 1}), WeylWord({4, 1, 2, 3}));
    EXPECT_THROW(coxeter_from_decreasing_seq(f4, {2, 3, 1}), std::invalid_argument);
    EXPECT_THROW(coxeter_from_decreasing_seq(f4, {3, 2}), std::invalid_argument);
    EXPECT_THROW(coxeter_from_decreasing_seq(f4, {5, 1}), std::invalid_argument);

    RootSystem g2 = root_system_from_tag("G2");
    auto g = enumerate_coxeter_normal_forms(g2);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0].word, WeylWord({1, 2}));
    EXPECT_EQ(g[1].word, WeylWord({2, 1}));
}

TEST(Weyl, CoxeterPowersGiveW0)
{
    for (const auto& [tag, half] : std::vector<std::pair<std::string, int>>{{"F4", 6}, {"G2", 3}}) {
        RootSystem sys = root_system_from_tag(tag);
        for (const auto& f : enumerate_coxeter_normal_forms(sys)) {
            EXPECT_EQ(element_order(sys, f.word), 2 * half);
            WeylWord w = w0_expression_from_coxeter(sys, f.word);
            EXPECT_EQ(w, power(f.word, half));
            EXPECT_TRUE(is_reduced(sys, w));
            EXPECT_EQ(element_of(sys, w), longest_element(sys));
            for (int i = 1; i <= sys.rank; ++i)
                EXPECT_EQ(coxeter_exponent(sys, f.word, i), half);
        }
    }
}

TEST(Weyl, Alpha0Descent)
{
    RootSystem sys = root_system_from_tag("F4");
    EXPECT_FALSE(alpha0_descent(sys, {}));
    EXPECT_TRUE(alpha0_descent(sys, longest_element(sys).word));
    EXPECT_FALSE(alpha0_descent(sys, {1}));
    WeylWord w2 = power(WeylWord{1, 2, 3, 4}, 2), w4 = power(WeylWord{1, 2, 3, 4}, 4);
    for (WeylWord* x : {&w2, &w4}) {
        x->push_back(1);
        x->push_back(2);
        EXPECT_TRUE(alpha0_descent(sys, *x));
    }
    EXPECT_FALSE(alpha0_descent(sys, {2}));
    // once a prefix of a reduced word of w_0 has the descent, every longer prefix keeps it
    WeylWord w = power(WeylWord{1, 2, 3, 4}, 6);
    bool seen = false;
    for (std::size_t r = 0; r <= w.size(); ++r) {
        bool d = alpha0_descent(sys, WeylWord(w.begin(), w.begin() + static_cast<long>(r)));
        EXPECT_TRUE(!seen || d) << r;
        seen = seen || d;
    }
    EXPECT_TRUE(seen);
}

TEST(Weyl, WordParsing)
{
    EXPECT_EQ(parse_word("1,2,3"), WeylWord({1, 2, 3}));
    EXPECT_EQ(parse_word(""), WeylWord());
    EXPECT_EQ(parse_word("4 3"), WeylWord({4, 3}));
    EXPECT_THROW(parse_word("1,x"), std::invalid_argument);
    EXPECT_EQ(word_to_string({3, 4, 2, 1}), "3,4,2,1");
}
