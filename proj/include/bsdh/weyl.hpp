#ifndef BSDH_WEYL_HPP
#define BSDH_WEYL_HPP

#include "bsdh/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsdh {

using WeylWord = std::vector<int>;

// Canonical form: images of the fundamental weights.
struct WeylElement {
    std::vector<Weight> images;
    WeylWord word; // some word for the element (reduced when produced here)

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.images == b.images; }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.images < b.images; }
};

inline void check_word(const RootSystem& sys, const WeylWord& word)
{
    for (int i : word)
        if (i < 1 || i > sys.rank)
            throw std::invalid_argument("letter " + std::to_string(i) + " out of range for " + sys.series);
}

// act((i_1,...,i_r), mu) = s_{i_1}(...s_{i_r}(mu))
inline Weight act(const RootSystem& sys, const WeylWord& word, Weight mu)
{
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        mu = reflect(sys, std::move(mu), *it);
    return mu;
}

inline WeylWord inverse_word(WeylWord word)
{
    std::reverse(word.begin(), word.end());
    return word;
}

inline WeylElement element_of(const RootSystem& sys, const WeylWord& word)
{
    check_word(sys, word);
    WeylElement e;
    for (int i = 1; i <= sys.rank; ++i)
        e.images.push_back(act(sys, word, fundamental_weight(sys, i)));
    e.word = word;
    return e;
}

inline int length(const RootSystem& sys, const WeylWord& word)
{
    check_word(sys, word);
    int inv = 0;
    for (const auto& b : sys.positive_roots)
        if (!is_nonnegative(act(sys, word, b)))
            ++inv;
    return inv;
}

inline bool is_reduced(const RootSystem& sys, const WeylWord& word)
{
    return length(sys, word) == static_cast<int>(word.size());
}

inline WeylWord concat(WeylWord a, const WeylWord& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline WeylWord power(const WeylWord& w, int m)
{
    WeylWord out;
    for (int k = 0; k < m; ++k)
        out.insert(out.end(), w.begin(), w.end());
    return out;
}

// Reduced word for w_0: move rho to -rho one simple reflection at a time.
inline WeylElement longest_element(const RootSystem& sys)
{
    Weight v = rho(sys);
    WeylWord rev;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i <= sys.rank; ++i)
            if (pairing_q(sys, v, i) > 0) {
                v = reflect(sys, v, i);
                rev.push_back(i);
                moved = true;
                break;
            }
    }
    return element_of(sys, inverse_word(rev));
}

inline WeylWord coxeter_from_decreasing_seq(const RootSystem& sys, const std::vector<int>& seq)
{
    if (seq.empty() || seq.back() != 1 || seq.front() > sys.rank)
        throw std::invalid_argument("decreasing sequence must start at most at the rank and end at 1");
    for (std::size_t k = 1; k < seq.size(); ++k)
        if (seq[k] >= seq[k - 1])
            throw std::invalid_argument("sequence is not strictly decreasing");
    WeylWord c;
    int prev = sys.rank + 1;
    for (int a : seq) {
        for (int i = a; i <= prev - 1; ++i)
            c.push_back(i);
        prev = a;
    }
    return c;
}

inline bool is_coxeter_word(const RootSystem& sys, const WeylWord& c)
{
    if (static_cast<int>(c.size()) != sys.rank)
        return false;
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < sys.rank; ++i)
        if (sorted[i] != i + 1)
            return false;
    return true;
}

// Order of the element represented by a word.
inline int element_order(const RootSystem& sys, const WeylWord& w)
{
    WeylElement id = element_of(sys, {});
    WeylWord acc = w;
    for (int m = 1; m <= 10000; ++m) {
        if (element_of(sys, acc) == id)
            return m;
        acc = concat(acc, w);
    }
    throw std::logic_error("element order search did not terminate");
}

// h(i,c): least m >= 1 with c^m(omega_i) = w_0(omega_i).
inline int coxeter_exponent(const RootSystem& sys, const WeylWord& c, int i)
{
    if (!is_coxeter_word(sys, c))
        throw std::invalid_argument("not a Coxeter word");
    Weight target = act(sys, longest_element(sys).word, fundamental_weight(sys, i));
    Weight v = fundamental_weight(sys, i);
    int h = element_order(sys, c);
    for (int m = 1; m <= h; ++m) {
        v = act(sys, c, v);
        if (v == target)
            return m;
    }
    throw std::logic_error("no power of c sends omega_i to w_0(omega_i)");
}

inline WeylWord w0_expression_from_coxeter(const RootSystem& sys, const WeylWord& c)
{
    if (!is_coxeter_word(sys, c))
        throw std::invalid_argument("not a Coxeter word");
    int h = element_order(sys, c);
    if (h % 2 != 0)
        throw std::logic_error("Coxeter number is odd; c^(h/2) is undefined");
    WeylWord w = power(c, h / 2);
    if (!is_reduced(sys, w) || element_of(sys, w) != longest_element(sys))
        throw std::logic_error("c^(h/2) is not a reduced expression of w_0");
    return w;
}

// True iff w^{-1}(alpha_0) < 0, alpha_0 the highest long root.
inline bool alpha0_descent(const RootSystem& sys, const WeylWord& word)
{
    return !is_nonnegative(act(sys, inverse_word(word), highest_long_root(sys)));
}

struct CoxeterForm {
    std::vector<int> seq;
    WeylWord word;
};

// All strictly decreasing sequences rank >= a_1 > ... > a_k = 1.
inline std::vector<CoxeterForm> enumerate_coxeter_normal_forms(const RootSystem& sys)
{
    std::vector<CoxeterForm> out;
    int extra = sys.rank - 1; // choices among 2..rank
    for (int mask = 0; mask < (1 << extra); ++mask) {
        std::vector<int> seq;
        for (int a = sys.rank; a >= 2; --a)
            if (mask & (1 << (a - 2)))
                seq.push_back(a);
        seq.push_back(1);
        out.push_back({seq, coxeter_from_decreasing_seq(sys, seq)});
    }
    std::sort(out.begin(), out.end(), [](const CoxeterForm& a, const CoxeterForm& b) {
        return std::lexicographical_compare(a.seq.begin(), a.seq.end(), b.seq.begin(), b.seq.end());
    });
    return out;
}

// Breadth-first closure of the group under right multiplication by simple reflections.
inline std::vector<WeylElement> enumerate_group(const RootSystem& sys, std::size_t limit = 1000000)
{
    std::set<std::vector<Weight>> seen;
    std::vector<WeylElement> out;
    std::deque<WeylElement> queue;
    WeylElement id = element_of(sys, {});
    seen.insert(id.images);
    queue.push_back(id);
    while (!queue.empty()) {
        WeylElement e = std::move(queue.front());
        queue.pop_front();
        for (int i = 1; i <= sys.rank; ++i) {
            WeylElement n;
            // (w s_i)(omega_j) = w(omega_j) - delta_ij w(alpha_i)
            Weight wa = act(sys, e.word, simple_root(sys, i));
            n.images = e.images;
            n.images[i - 1] -= wa;
            if (seen.insert(n.images).second) {
                n.word = e.word;
                n.word.push_back(i);
                queue.push_back(std::move(n));
            }
        }
        out.push_back(std::move(e));
        if (out.size() > limit)
            throw std::length_error("Weyl group larger than enumeration limit");
    }
    return out;
}

inline std::string word_to_string(const WeylWord& w)
{
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k)
        s += (k ? "," : "") + std::to_string(w[k]);
    return s;
}

inline WeylWord parse_word(const std::string& s)
{
    WeylWord w;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            return;
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(cur, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != cur.size())
            throw std::invalid_argument("bad letter: " + cur);
        w.push_back(v);
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',' || ch == ' ')
            flush();
        else
            cur += ch;
    }
    flush();
    return w;
}

} // namespace bsdh

#endif
