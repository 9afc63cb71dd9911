#ifndef BSDH_AFFINE_HPP
#define BSDH_AFFINE_HPP

#include "bsdh/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bsdh {

// Module entry: a known rational, or an affine form in unknown extension parameters.
class Affine {
public:
    Affine() = default;
    Affine(const Rational& c) : c_(c) {} // NOLINT(google-explicit-constructor)
    Affine(long c) : c_(c) {}            // NOLINT(google-explicit-constructor)

    static Affine param(int id, const Rational& coeff = 1)
    {
        Affine a;
        if (coeff != 0)
            a.terms_.emplace_back(id, coeff);
        return a;
    }

    bool is_known() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty() && c_ == 0; }
    const Rational& constant() const { return c_; }
    const std::vector<std::pair<int, Rational>>& terms() const& { return terms_; }
    std::vector<std::pair<int, Rational>> terms() && { return std::move(terms_); }

    const Rational& value() const
    {
        if (!is_known())
            throw std::logic_error("entry depends on unknown parameters");
        return c_;
    }

    Affine& add_scaled(const Affine& o, const Rational& s)
    {
        if (s == 0)
            return *this;
        c_ += s * o.c_;
        if (o.terms_.empty())
            return *this;
        std::vector<std::pair<int, Rational>> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        while (i != terms_.end() || j != o.terms_.end()) {
            if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
                merged.push_back(*i++);
            } else if (i == terms_.end() || j->first < i->first) {
                merged.emplace_back(j->first, s * j->second);
                ++j;
            } else {
                Rational v = i->second + s * j->second;
                if (v != 0)
                    merged.emplace_back(i->first, v);
                ++i;
                ++j;
            }
        }
        terms_ = std::move(merged);
        return *this;
    }

    Affine& operator+=(const Affine& o) { return add_scaled(o, 1); }
    Affine& operator-=(const Affine& o) { return add_scaled(o, -1); }
    Affine& operator*=(const Rational& s)
    {
        if (s == 0) {
            c_ = 0;
            terms_.clear();
            return *this;
        }
        c_ *= s;
        for (auto& t : terms_)
            t.second *= s;
        return *this;
    }

    friend Affine operator+(Affine a, const Affine& b) { return a += b; }
    friend Affine operator-(Affine a, const Affine& b) { return a -= b; }
    friend Affine operator*(Affine a, const Rational& s) { return a *= s; }
    friend Affine operator*(const Rational& s, Affine a) { return a *= s; }

    // Product of two entries; at most one factor may carry parameters.
    friend Affine operator*(const Affine& a, const Affine& b)
    {
        if (a.is_known())
            return b * a.c_;
        if (b.is_known())
            return a * b.c_;
        throw std::logic_error("product of two parameter-dependent entries");
    }

    friend bool operator==(const Affine& a, const Affine& b) { return a.c_ == b.c_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Affine& a, const Affine& b) { return !(a == b); }

    Affine substitute(const std::map<int, Rational>& values) const
    {
        Affine out(c_);
        for (const auto& [id, coeff] : terms_) {
            auto it = values.find(id);
            if (it == values.end())
                out.add_scaled(param(id), coeff);
            else
                out.c_ += coeff * it->second;
        }
        return out;
    }

    Affine renumber(const std::map<int, int>& ids) const
    {
        Affine out(c_);
        for (const auto& [id, coeff] : terms_)
            out.add_scaled(param(ids.at(id)), coeff);
        return out;
    }

    void collect_params(std::set<int>& out) const
    {
        for (const auto& t : terms_)
            out.insert(t.first);
    }

private:
    Rational c_ = 0;
    std::vector<std::pair<int, Rational>> terms_; // sorted by id, nonzero coefficients
};

} // namespace bsdh

#endif
