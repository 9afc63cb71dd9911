#ifndef BSDH_RIGIDITY_HPP
#define BSDH_RIGIDITY_HPP

#include "bsdh/coh.hpp"
#include "bsdh/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsdh {

struct Interval {
    long lo = 0;
    long hi = 0;

    bool exact() const { return lo == hi; }
    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

inline constexpr long kUnbounded = std::numeric_limits<long>::max() / 4;

struct LedgerInconsistency : std::runtime_error {
    int prefix;
    Weight weight;
    LedgerInconsistency(const std::string& what, int r, Weight mu)
        : std::runtime_error(what), prefix(r), weight(std::move(mu))
    {
    }
};

// Per-prefix, per-weight dimension intervals for H^0 and H^1 of the tangent
// bundle of Z(prefix_r), with connecting-map ranks t as interval variables.
struct DimLedger {
    WeylWord word;
    std::vector<Weight> weights;          // weight universe
    std::map<Weight, int> index;
    std::vector<std::vector<long>> a0, a1; // [r][w], r = 1..N (row 0 unused)
    std::vector<std::vector<long>> euler;  // [r][w]
    std::vector<std::vector<Interval>> h0, h1, t;
    std::vector<bool> descent; // alpha0_descent(prefix_r)

    int length() const { return static_cast<int>(word.size()); }
    int weight_index(const Weight& mu) const
    {
        auto it = index.find(mu);
        return it == index.end() ? -1 : it->second;
    }
};

// chi_mu(Z(prefix_r), T) = sum_{r' <= r} (a0 - a1)[r', mu]
inline std::vector<std::map<Weight, long>> euler_table(const std::vector<CohProfile>& series)
{
    std::vector<std::map<Weight, long>> out(series.size() + 1);
    for (std::size_t r = 1; r <= series.size(); ++r) {
        out[r] = out[r - 1];
        Character step = character(series[r - 1].h0) - character(series[r - 1].h1);
        for (const auto& [w, m] : step.terms()) {
            out[r][w] += m;
            if (out[r][w] == 0)
                out[r].erase(w);
        }
    }
    return out;
}

inline std::vector<std::map<Weight, long>> euler_table(const RootSystem& sys, const WeylWord& word)
{
    return euler_table(rel_tangent_series(sys, word));
}

struct Witness {
    Weight weight;
    long a1 = 0;    // dim H^1(prefix_r, alpha_{i_r})_mu
    long bound = 0; // sum_{r' < r} dim H^0(prefix_r', alpha_{i_r'})_mu
};

struct Certificate {
    enum class Kind { Nonrigid, Rigid, Undecided };
    Kind kind = Kind::Undecided;
    int prefix = 0;                 // Nonrigid: prefix length r
    std::vector<Witness> witnesses; // Nonrigid: all weights failing the bound at r
    std::vector<std::string> trace;
    std::vector<Weight> open_weights; // Undecided

    const Weight& weight() const { return witnesses.front().weight; }
};

inline std::string to_string(Certificate::Kind k)
{
    switch (k) {
    case Certificate::Kind::Nonrigid: return "Nonrigid";
    case Certificate::Kind::Rigid: return "Rigid";
    default: return "Undecided";
    }
}

namespace detail {

inline bool witness_order(const Witness& x, const Witness& y)
{
    Rational hx = height(x.weight), hy = height(y.weight);
    if (hx != hy)
        return hx < hy;
    return x.weight < y.weight;
}

} // namespace detail

// Earliest r with dim H^1(prefix_r, alpha_{i_r})_mu exceeding the forward bound
// on dim H^0(Z(prefix_{r-1}), T)_mu; the connecting map then cannot be onto the
// H^1 term, so H^1(Z(prefix_r), T)_mu != 0, and restriction from w_0 is onto.
inline std::optional<Certificate> nonrigidity_certificate(const std::vector<CohProfile>& series)
{
    std::map<Weight, long> bound;
    for (std::size_t r = 1; r <= series.size(); ++r) {
        std::vector<Witness> found;
        Character h1 = character(series[r - 1].h1);
        for (const auto& [w, m] : h1.terms()) {
            long u = bound.count(w) ? bound[w] : 0;
            if (m > u)
                found.push_back({w, m, u});
        }
        if (!found.empty()) {
            std::sort(found.begin(), found.end(), detail::witness_order);
            Certificate c;
            c.kind = Certificate::Kind::Nonrigid;
            c.prefix = static_cast<int>(r);
            c.witnesses = found;
            for (const auto& wt : found)
                c.trace.push_back("r=" + std::to_string(r) + " mu=" + to_string(wt.weight) +
                                  ": dim H^1(prefix, alpha)=" + std::to_string(wt.a1) +
                                  " > forward bound " + std::to_string(wt.bound));
            return c;
        }
        Character h0 = character(series[r - 1].h0);
        for (const auto& [w, m] : h0.terms())
            bound[w] += m;
    }
    return std::nullopt;
}

inline std::optional<Certificate> nonrigidity_certificate(const RootSystem& sys, const WeylWord& word)
{
    return nonrigidity_certificate(rel_tangent_series(sys, word));
}

inline DimLedger make_ledger(const RootSystem& sys, const WeylWord& word, const std::vector<CohProfile>& series)
{
    DimLedger L;
    L.word = word;
    const int n = static_cast<int>(word.size());
    std::set<Weight> universe;
    universe.insert(zero_weight(sys));
    for (const auto& b : sys.positive_roots) {
        universe.insert(b);
        universe.insert(-b);
    }
    for (const auto& p : series) {
        for (const auto& w : p.h0.weights)
            universe.insert(w);
        for (const auto& w : p.h1.weights)
            universe.insert(w);
    }
    L.weights.assign(universe.begin(), universe.end());
    for (std::size_t k = 0; k < L.weights.size(); ++k)
        L.index[L.weights[k]] = static_cast<int>(k);
    const std::size_t nw = L.weights.size();
    L.a0.assign(n + 1, std::vector<long>(nw, 0));
    L.a1 = L.a0;
    L.euler = L.a0;
    for (int r = 1; r <= n; ++r) {
        for (const auto& w : series[r - 1].h0.weights)
            ++L.a0[r][L.index[w]];
        for (const auto& w : series[r - 1].h1.weights)
            ++L.a1[r][L.index[w]];
        for (std::size_t k = 0; k < nw; ++k)
            L.euler[r][k] = L.euler[r - 1][k] + L.a0[r][k] - L.a1[r][k];
    }
    L.h0.assign(n + 1, std::vector<Interval>(nw, Interval{0, kUnbounded}));
    L.h1 = L.h0;
    L.t = L.h0;
    for (std::size_t k = 0; k < nw; ++k) {
        L.h0[0][k] = {0, 0};
        L.h1[0][k] = {0, 0};
        L.t[0][k] = {0, 0};
    }
    L.descent.assign(n + 1, false);
    for (int r = 0; r <= n; ++r)
        L.descent[r] = alpha0_descent(sys, WeylWord(word.begin(), word.begin() + r));
    return L;
}

namespace detail {

struct Narrower {
    DimLedger& L;
    bool changed = false;

    void lower(int r, int k, Interval& x, long lo)
    {
        if (lo > x.lo) {
            x.lo = lo;
            changed = true;
            check(r, k, x);
        }
    }
    void upper(int r, int k, Interval& x, long hi)
    {
        if (hi < x.hi) {
            x.hi = hi;
            changed = true;
            check(r, k, x);
        }
    }
    void meet(int r, int k, Interval& x, long lo, long hi)
    {
        lower(r, k, x, lo);
        upper(r, k, x, hi);
    }
    void check(int r, int k, const Interval& x)
    {
        if (x.lo > x.hi)
            throw LedgerInconsistency("empty interval at prefix " + std::to_string(r) + ", weight " +
                                          to_string(L.weights[k]),
                                      r, L.weights[k]);
    }
};

inline long sat_add(long a, long b)
{
    if (a >= kUnbounded || b >= kUnbounded)
        return kUnbounded;
    return a + b;
}

inline long sat_sub(long a, long b) // a - b with b possibly unbounded (gives a very small value)
{
    if (b >= kUnbounded)
        return -kUnbounded;
    if (a >= kUnbounded)
        return kUnbounded;
    return a - b;
}

} // namespace detail

inline void apply_endpoint_rule(const RootSystem& sys, DimLedger& L)
{
    detail::Narrower nw{L};
    const int n = L.length();
    for (std::size_t k = 0; k < L.weights.size(); ++k) {
        const Weight& mu = L.weights[k];
        Interval& x = L.h0[n][k];
        int kk = static_cast<int>(k);
        if (mu.is_zero())
            nw.meet(n, kk, x, sys.rank, sys.rank);
        else if (is_root(sys, mu) && is_nonpositive(mu))
            nw.meet(n, kk, x, 1, 1);
        else if (is_root(sys, mu))
            nw.meet(n, kk, x, 0, 1);
        else
            nw.meet(n, kk, x, 0, 0);
    }
}

// Fixed point of the monotone narrowing rules (F), (B), (I), (S), (E); (P) is
// applied at construction by apply_endpoint_rule. The traversal order does not
// change the result (greatest common fixed point of monotone narrowings).
inline void propagate(DimLedger& L, bool reverse_order = false)
{
    using detail::sat_add;
    using detail::sat_sub;
    const int n = L.length();
    const int nwts = static_cast<int>(L.weights.size());
    detail::Narrower nw{L};
    do {
        nw.changed = false;
        for (int kk = 0; kk < nwts; ++kk) {
            const int k = reverse_order ? nwts - 1 - kk : kk;
            for (int rr = 1; rr <= n; ++rr) {
                const int r = reverse_order ? n + 1 - rr : rr;
                long a0 = L.a0[r][k], a1 = L.a1[r][k];
                Interval& t = L.t[r][k];
                Interval& p0 = L.h0[r - 1][k];
                Interval& p1 = L.h1[r - 1][k];
                Interval& c0 = L.h0[r][k];
                Interval& c1 = L.h1[r][k];
                // (F)
                nw.meet(r, k, t, 0, std::min(p0.hi, a1));
                nw.meet(r, k, c0, sat_sub(a0 + p0.lo, t.hi), sat_sub(sat_add(a0, p0.hi), t.lo));
                nw.meet(r, k, c1, sat_sub(a1 + p1.lo, t.hi), sat_sub(sat_add(a1, p1.hi), t.lo));
                // (B)
                nw.meet(r - 1, k, p0, c0.lo - a0 + t.lo, sat_add(sat_sub(c0.hi, a0), t.hi));
                nw.meet(r, k, t, sat_sub(a0 + p0.lo, c0.hi), sat_sub(sat_add(a0, p0.hi), c0.lo));
                nw.meet(r - 1, k, p1, c1.lo - a1 + t.lo, sat_add(sat_sub(c1.hi, a1), t.hi));
                nw.meet(r, k, t, sat_sub(a1 + p1.lo, c1.hi), sat_sub(sat_add(a1, p1.hi), c1.lo));
                // (E)
                long chi = L.euler[r][k];
                nw.meet(r, k, c0, c1.lo + chi, sat_add(c1.hi, chi));
                nw.meet(r, k, c1, c0.lo - chi, sat_sub(c0.hi, chi));
            }
            for (int r = 0; r <= n; ++r) {
                // (I): restriction from w_0 is injective on H^0 when prefix_r^{-1}(alpha_0) < 0
                if (L.descent[r]) {
                    nw.lower(r, k, L.h0[r][k], L.h0[n][k].lo);
                    nw.upper(n, k, L.h0[n][k], L.h0[r][k].hi);
                }
                // (S): restriction from w_0 is onto on H^1
                nw.lower(n, k, L.h1[n][k], L.h1[r][k].lo);
                nw.upper(r, k, L.h1[r][k], L.h1[n][k].hi);
            }
        }
    } while (nw.changed);
}

struct RigidityReport {
    WeylWord word;
    Certificate certificate;
    DimLedger ledger;
    std::vector<CohProfile> series;
    double seconds = 0;
    int ambiguous_profiles = 0;
    int ambiguity_events = 0;

    Certificate::Kind verdict() const { return certificate.kind; }
};

inline RigidityReport rigidity_verdict(const RootSystem& sys, const WeylWord& word, const TowerOptions& opt = {})
{
    auto start = std::chrono::steady_clock::now();
    if (!is_reduced(sys, word) || element_of(sys, word) != longest_element(sys))
        throw std::invalid_argument("word " + word_to_string(word) + " is not a reduced expression of w_0");
    RigidityReport rep;
    rep.word = word;
    rep.series = rel_tangent_series(sys, word, opt);
    for (const auto& p : rep.series) {
        rep.ambiguous_profiles += p.ambiguous ? 1 : 0;
        rep.ambiguity_events += static_cast<int>(p.ambiguity_log.size());
    }
    rep.ledger = make_ledger(sys, word, rep.series);
    apply_endpoint_rule(sys, rep.ledger);
    propagate(rep.ledger);

    const int n = rep.ledger.length();
    std::optional<Certificate> cert = nonrigidity_certificate(rep.series);
    Certificate c;
    if (rep.ambiguous_profiles > 0) {
        c.kind = Certificate::Kind::Undecided;
        c.trace.push_back("relative tangent inputs depend on unknown extension classes");
    } else if (cert) {
        c = *cert;
    } else {
        std::vector<Weight> positive, open;
        for (std::size_t k = 0; k < rep.ledger.weights.size(); ++k) {
            const Interval& x = rep.ledger.h1[n][k];
            if (x.lo >= 1)
                positive.push_back(rep.ledger.weights[k]);
            else if (x.hi > 0)
                open.push_back(rep.ledger.weights[k]);
        }
        if (!positive.empty()) {
            c.kind = Certificate::Kind::Nonrigid;
            c.prefix = n;
            for (const auto& w : positive) {
                c.witnesses.push_back({w, rep.ledger.h1[n][rep.ledger.index.at(w)].lo, 0});
                c.trace.push_back("ledger forces H^1(Z(w_0),T)_" + to_string(w) + " != 0");
            }
        } else if (open.empty()) {
            c.kind = Certificate::Kind::Rigid;
            for (std::size_t k = 0; k < rep.ledger.weights.size(); ++k) {
                long total = 0;
                for (int r = 1; r <= n; ++r)
                    total += rep.ledger.a1[r][k];
                if (total > 0)
                    c.trace.push_back("mu=" + to_string(rep.ledger.weights[k]) + ": " + std::to_string(total) +
                                      " step H^1 dimensions absorbed by connecting maps");
            }
        } else {
            c.kind = Certificate::Kind::Undecided;
            c.open_weights = open;
        }
    }
    rep.certificate = c;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

struct ClassificationRow {
    std::vector<int> seq;
    WeylWord coxeter;
    WeylWord word;
    Certificate::Kind verdict = Certificate::Kind::Undecided;
    std::optional<RigidityReport> report; // absent for the simply-laced short-circuit
};

inline std::vector<ClassificationRow> classify(const RootSystem& sys, const TowerOptions& opt = {})
{
    auto forms = enumerate_coxeter_normal_forms(sys);
    std::vector<ClassificationRow> rows(forms.size());
    bool simply_laced = is_simply_laced(sys);
    parallel_for(forms.size(), [&](std::size_t k) {
        ClassificationRow& row = rows[k];
        row.seq = forms[k].seq;
        row.coxeter = forms[k].word;
        if (simply_laced) {
            // every H^j(Z(w), T), j >= 1, vanishes in simply-laced type
            row.verdict = Certificate::Kind::Rigid;
            return;
        }
        row.word = w0_expression_from_coxeter(sys, row.coxeter);
        row.report = rigidity_verdict(sys, row.word, opt);
        row.verdict = row.report->verdict();
    });
    return rows;
}

} // namespace bsdh

#endif
