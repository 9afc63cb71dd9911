#ifndef BSDH_WEIGHT_HPP
#define BSDH_WEIGHT_HPP

#include "bsdh/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bsdh {

// Weight in simple-root coordinates.
struct Weight {
    std::vector<Rational> c;

    Weight() = default;
    explicit Weight(std::size_t rank) : c(rank) {}
    Weight(std::initializer_list<long> xs)
    {
        for (long x : xs)
            c.emplace_back(x);
    }
    explicit Weight(std::vector<Rational> v) : c(std::move(v)) {}

    std::size_t rank() const { return c.size(); }
    const Rational& operator[](std::size_t i) const { return c[i]; }
    Rational& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const
    {
        for (const auto& x : c)
            if (x != 0)
                return false;
        return true;
    }

    Weight& operator+=(const Weight& o)
    {
        check_rank(o);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] += o.c[i];
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        check_rank(o);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] -= o.c[i];
        return *this;
    }
    Weight& operator*=(const Rational& s)
    {
        for (auto& x : c)
            x *= s;
        return *this;
    }

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a)
    {
        for (auto& x : a.c)
            x = -x;
        return a;
    }
    friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
    friend Weight operator*(long s, Weight a) { return a *= Rational(s); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b)
    {
        return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
    }

private:
    void check_rank(const Weight& o) const
    {
        if (o.c.size() != c.size())
            throw std::invalid_argument("weight rank mismatch");
    }
};

inline Weight unit_weight(std::size_t rank, std::size_t i)
{
    Weight w(rank);
    w[i] = 1;
    return w;
}

inline Rational height(const Weight& w)
{
    Rational h = 0;
    for (const auto& x : w.c)
        h += x;
    return h;
}

inline bool is_nonnegative(const Weight& w)
{
    for (const auto& x : w.c)
        if (x < 0)
            return false;
    return true;
}

inline bool is_nonpositive(const Weight& w)
{
    for (const auto& x : w.c)
        if (x > 0)
            return false;
    return true;
}

// Human-readable form such as "-(a1+2a2+2a3)" or "a2+a3".
inline std::string to_string(const Weight& w)
{
    if (w.is_zero())
        return "0";
    bool neg = is_nonpositive(w);
    std::string out;
    for (std::size_t i = 0; i < w.rank(); ++i) {
        Rational x = neg ? Rational(-w[i]) : w[i];
        if (x == 0)
            continue;
        if (!out.empty())
            out += x > 0 ? "+" : "-";
        else if (x < 0)
            out += "-";
        Rational ax = abs(x);
        if (ax != 1)
            out += to_string(ax);
        out += "a" + std::to_string(i + 1);
    }
    if (neg)
        out = "-(" + out + ")";
    return out;
}

// Formal integer combination of weights; a plain character has positive multiplicities.
class Character {
public:
    using Map = std::map<Weight, long>;

    Character() = default;
    explicit Character(Map m) : terms_(std::move(m)) { prune(); }

    void add(const Weight& w, long mult = 1)
    {
        if (mult == 0)
            return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, mult);
            return;
        }
        it->second += mult;
        if (it->second == 0)
            terms_.erase(it);
    }

    Character& operator+=(const Character& o)
    {
        for (const auto& [w, m] : o.terms_)
            add(w, m);
        return *this;
    }
    Character& operator-=(const Character& o)
    {
        for (const auto& [w, m] : o.terms_)
            add(w, -m);
        return *this;
    }
    friend Character operator+(Character a, const Character& b) { return a += b; }
    friend Character operator-(Character a, const Character& b) { return a -= b; }
    friend bool operator==(const Character& a, const Character& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

    long mult(const Weight& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    long dim() const
    {
        long d = 0;
        for (const auto& [w, m] : terms_)
            d += m;
        return d;
    }

    bool empty() const { return terms_.empty(); }
    bool is_plain() const
    {
        for (const auto& [w, m] : terms_)
            if (m < 0)
                return false;
        return true;
    }
    const Map& terms() const& { return terms_; }
    Map terms() && { return std::move(terms_); } // safe in range-for over a temporary

private:
    void prune()
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }

    Map terms_;
};

inline std::string to_string(const Character& ch)
{
    if (ch.empty())
        return "0";
    std::string out;
    for (const auto& [w, m] : ch.terms()) {
        if (!out.empty())
            out += ", ";
        out += to_string(w);
        if (m != 1)
            out += " x" + std::to_string(m);
    }
    return "{" + out + "}";
}

} // namespace bsdh

#endif
