#ifndef BSDH_ROOTSYS_HPP
#define BSDH_ROOTSYS_HPP

#include "bsdh/weight.hpp"

#include <cctype>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsdh {

// Finite root system. Simple indices are 1-based in the public interface;
// cartan[i][j] (0-based storage) is <alpha_{j+1}, alpha_{i+1}^vee>.
struct RootSystem {
    std::string series;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<Rational> simple_sq_len; // (alpha_i, alpha_i), longest simple root normalized to 2
    std::vector<Weight> positive_roots;  // sorted by height, then lexicographically
    std::vector<bool> positive_long;     // long_short class per positive root
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(char series, int n)
{
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        a[i][i] = 2;
    auto link = [&](int i, int j) { // 1-based simple bond
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    switch (series) {
    case 'A':
        for (int i = 1; i < n; ++i)
            link(i, i + 1);
        break;
    case 'B':
        for (int i = 1; i < n; ++i)
            link(i, i + 1);
        a[n - 1][n - 2] = -2; // alpha_n short
        break;
    case 'C':
        for (int i = 1; i < n; ++i)
            link(i, i + 1);
        a[n - 2][n - 1] = -2; // alpha_n long
        break;
    case 'D':
        for (int i = 1; i < n - 1; ++i)
            link(i, i + 1);
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
        link(n - 2, n);
        break;
    case 'E':
        link(1, 3);
        link(3, 4);
        link(2, 4);
        for (int i = 4; i < n; ++i)
            link(i, i + 1);
        break;
    case 'F':
        link(1, 2);
        link(3, 4);
        a[1][2] = -1;
        a[2][1] = -2; // <alpha_2, alpha_3^vee> = -2
        break;
    case 'G':
        a[0][1] = -3; // <alpha_2, alpha_1^vee> = -3
        a[1][0] = -1;
        break;
    default:
        throw std::invalid_argument("unknown series");
    }
    return a;
}

inline bool valid_type(char s, int n)
{
    switch (s) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
    }
}

} // namespace detail

inline Rational pairing_q(const RootSystem& sys, const Weight& mu, int i)
{
    Rational p = 0;
    const auto& row = sys.cartan[i - 1];
    for (int j = 0; j < sys.rank; ++j)
        if (row[j] != 0)
            p += mu[j] * row[j];
    return p;
}

// <mu, alpha_i^vee>
inline long pairing(const RootSystem& sys, const Weight& mu, int i)
{
    return to_long(pairing_q(sys, mu, i));
}

inline Weight simple_root(const RootSystem& sys, int i) { return unit_weight(sys.rank, i - 1); }

inline Weight zero_weight(const RootSystem& sys) { return Weight(sys.rank); }

inline Weight reflect(const RootSystem& sys, Weight mu, int i)
{
    mu[i - 1] -= pairing_q(sys, mu, i);
    return mu;
}

inline Weight dot_reflect(const RootSystem& sys, Weight mu, int i)
{
    mu[i - 1] -= pairing_q(sys, mu, i) + 1;
    return mu;
}

// Symmetric invariant form (alpha_i, alpha_j) = cartan[i][j] (alpha_i, alpha_i) / 2.
inline Rational inner(const RootSystem& sys, const Weight& x, const Weight& y)
{
    Rational s = 0;
    for (int i = 0; i < sys.rank; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < sys.rank; ++j)
            if (y[j] != 0 && sys.cartan[i][j] != 0)
                s += x[i] * y[j] * sys.cartan[i][j] * sys.simple_sq_len[i] / 2;
    }
    return s;
}

// <mu, beta^vee> for an arbitrary root beta.
inline Rational coroot_pairing(const RootSystem& sys, const Weight& mu, const Weight& beta)
{
    return 2 * inner(sys, mu, beta) / inner(sys, beta, beta);
}

inline RootSystem build_root_system(const std::string& series, int rank)
{
    if (series.size() != 1 || !detail::valid_type(series[0], rank))
        throw std::invalid_argument("unknown root system " + series + std::to_string(rank));
    RootSystem sys;
    sys.series = series + std::to_string(rank);
    sys.rank = rank;
    sys.cartan = detail::cartan_matrix(series[0], rank);

    // relative squared lengths: (a_i,a_i)/(a_j,a_j) = cartan[j][i] / cartan[i][j]
    std::vector<Rational> len(rank, 0);
    len[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (i != j && sys.cartan[i][j] != 0 && len[i] != 0 && len[j] == 0) {
                    len[j] = len[i] * make_rational(sys.cartan[i][j], sys.cartan[j][i]);
                    changed = true;
                }
    }
    Rational longest = 0;
    for (const auto& l : len)
        longest = std::max(longest, l);
    for (auto& l : len)
        l = 2 * l / longest;
    sys.simple_sq_len = len;

    std::set<Weight> seen;
    std::vector<Weight> frontier;
    for (int i = 1; i <= rank; ++i) {
        seen.insert(simple_root(sys, i));
        frontier.push_back(simple_root(sys, i));
    }
    while (!frontier.empty()) {
        Weight b = frontier.back();
        frontier.pop_back();
        for (int i = 1; i <= rank; ++i) {
            Weight r = reflect(sys, b, i);
            if (r.is_zero() || !is_nonnegative(r) || seen.count(r))
                continue;
            seen.insert(r);
            frontier.push_back(r);
        }
    }
    sys.positive_roots.assign(seen.begin(), seen.end());
    std::stable_sort(sys.positive_roots.begin(), sys.positive_roots.end(),
                     [](const Weight& a, const Weight& b) { return height(a) < height(b); });
    for (const auto& b : sys.positive_roots)
        sys.positive_long.push_back(inner(sys, b, b) == 2);
    return sys;
}

// Accepts "F4", "G2", "A3", "A_3".
inline RootSystem root_system_from_tag(const std::string& tag)
{
    std::string s;
    for (char ch : tag)
        if (ch != '_')
            s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (s.size() < 2 || !std::isdigit(static_cast<unsigned char>(s[1])))
        throw std::invalid_argument("bad root system tag: " + tag);
    int rank = 0;
    try {
        rank = std::stoi(s.substr(1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad root system tag: " + tag);
    }
    return build_root_system(s.substr(0, 1), rank);
}

inline bool is_simply_laced(const RootSystem& sys)
{
    for (int i = 0; i < sys.rank; ++i)
        for (int j = 0; j < sys.rank; ++j)
            if (i != j && sys.cartan[i][j] < -1)
                return false;
    return true;
}

inline bool is_root(const RootSystem& sys, const Weight& mu)
{
    for (const auto& b : sys.positive_roots)
        if (b == mu || b == -mu)
            return true;
    return false;
}

inline bool is_long_root(const RootSystem& sys, const Weight& beta)
{
    return inner(sys, beta, beta) == 2;
}

inline Weight rho(const RootSystem& sys)
{
    Weight r(sys.rank);
    for (const auto& b : sys.positive_roots)
        r += b;
    return Rational(1, 2) * r;
}

// Solves <omega_i, alpha_j^vee> = delta_ij in root coordinates.
inline Weight fundamental_weight(const RootSystem& sys, int i)
{
    int n = sys.rank;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k)
            m[j][k] = sys.cartan[j][k];
        m[j][n] = (j == i - 1) ? 1 : 0;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (m[piv][col] == 0)
            ++piv;
        std::swap(m[piv], m[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rational f = m[r][col] / m[col][col];
            for (int k = col; k <= n; ++k)
                m[r][k] -= f * m[col][k];
        }
    }
    Weight w(n);
    for (int k = 0; k < n; ++k)
        w[k] = m[k][n] / m[k][k];
    return w;
}

namespace detail {
inline Weight dominance_max(const RootSystem& sys, bool want_long)
{
    const Weight* best = nullptr;
    for (std::size_t k = 0; k < sys.positive_roots.size(); ++k) {
        if (sys.positive_long[k] != want_long)
            continue;
        const Weight& b = sys.positive_roots[k];
        if (!best || is_nonnegative(b - *best))
            best = &b;
    }
    if (!best)
        return dominance_max(sys, true);
    return *best;
}
} // namespace detail

inline Weight highest_long_root(const RootSystem& sys) { return detail::dominance_max(sys, true); }

// For simply-laced systems every root is long and this returns the highest root.
inline Weight highest_short_root(const RootSystem& sys) { return detail::dominance_max(sys, false); }

} // namespace bsdh

#endif
