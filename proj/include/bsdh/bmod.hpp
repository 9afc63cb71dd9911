#ifndef BSDH_BMOD_HPP
#define BSDH_BMOD_HPP

#include "bsdh/affine.hpp"
#include "bsdh/linalg.hpp"
#include "bsdh/rootsys.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bsdh {

using Column = std::vector<std::pair<int, Affine>>;         // sorted by row
using SparseQ = std::vector<std::pair<int, Rational>>;      // sorted by index

// Torus-graded B-module: basis weights plus lowering operators f_1..f_rank.
struct BModule {
    int rank = 0;
    std::vector<Weight> weights;
    std::vector<std::vector<Column>> lowering; // [i-1][column]
    std::string tag;

    BModule() = default;
    explicit BModule(int r, std::string t = {}) : rank(r), lowering(r), tag(std::move(t)) {}

    int dim() const { return static_cast<int>(weights.size()); }
    const Column& lower(int i, int col) const { return lowering[i - 1][col]; }

    int add_basis(const Weight& w)
    {
        weights.push_back(w);
        for (auto& op : lowering)
            op.emplace_back();
        return dim() - 1;
    }

    void set_entry(int i, int row, int col, const Affine& v)
    {
        Column& c = lowering[i - 1][col];
        for (auto it = c.begin(); it != c.end(); ++it) {
            if (it->first == row) {
                if (v.is_zero())
                    c.erase(it);
                else
                    it->second = v;
                return;
            }
            if (it->first > row) {
                if (!v.is_zero())
                    c.insert(it, {row, v});
                return;
            }
        }
        if (!v.is_zero())
            c.emplace_back(row, v);
    }

    Affine entry(int i, int row, int col) const
    {
        for (const auto& [r, v] : lowering[i - 1][col])
            if (r == row)
                return v;
        return Affine();
    }

    friend bool operator==(const BModule& a, const BModule& b)
    {
        return a.rank == b.rank && a.weights == b.weights && a.lowering == b.lowering;
    }
};

inline BModule line_module(const Weight& lambda, std::string tag = "line")
{
    BModule m(static_cast<int>(lambda.rank()), std::move(tag));
    m.add_basis(lambda);
    return m;
}

inline Character character(const BModule& m)
{
    Character ch;
    for (const auto& w : m.weights)
        ch.add(w);
    return ch;
}

inline int dim_at(const BModule& m, const Weight& mu)
{
    int d = 0;
    for (const auto& w : m.weights)
        if (w == mu)
            ++d;
    return d;
}

inline BModule direct_sum(const BModule& a, const BModule& b)
{
    if (a.rank != b.rank)
        throw std::invalid_argument("direct sum of modules over different ranks");
    BModule s(a.rank, a.tag + "+" + b.tag);
    s.weights = a.weights;
    s.weights.insert(s.weights.end(), b.weights.begin(), b.weights.end());
    for (int i = 0; i < a.rank; ++i) {
        s.lowering[i] = a.lowering[i];
        for (const auto& col : b.lowering[i]) {
            Column c;
            for (const auto& [r, v] : col)
                c.emplace_back(r + a.dim(), v);
            s.lowering[i].push_back(std::move(c));
        }
    }
    return s;
}

inline std::set<int> module_params(const BModule& m)
{
    std::set<int> out;
    for (const auto& op : m.lowering)
        for (const auto& col : op)
            for (const auto& e : col)
                e.second.collect_params(out);
    return out;
}

inline std::set<int> lowering_params(const BModule& m, int i)
{
    std::set<int> out;
    for (const auto& col : m.lowering[i - 1])
        for (const auto& e : col)
            e.second.collect_params(out);
    return out;
}

// Substitutes parameters; entries with unassigned parameters stay symbolic.
inline BModule instantiate(const BModule& m, const std::map<int, Rational>& values)
{
    BModule out = m;
    for (auto& op : out.lowering)
        for (auto& col : op) {
            Column c;
            for (const auto& [r, v] : col) {
                Affine s = v.substitute(values);
                if (!s.is_zero())
                    c.emplace_back(r, std::move(s));
            }
            col = std::move(c);
        }
    return out;
}

// Checks the grading invariant: f_i sends weight mu into weight mu - alpha_i.
inline void validate_module(const RootSystem& sys, const BModule& m)
{
    if (m.rank != sys.rank || static_cast<int>(m.lowering.size()) != sys.rank)
        throw std::invalid_argument("module rank does not match root system");
    for (int i = 1; i <= sys.rank; ++i) {
        if (static_cast<int>(m.lowering[i - 1].size()) != m.dim())
            throw std::invalid_argument("lowering operator has wrong column count");
        Weight a = simple_root(sys, i);
        for (int col = 0; col < m.dim(); ++col)
            for (const auto& [r, v] : m.lower(i, col))
                if (r < 0 || r >= m.dim() || m.weights[r] != m.weights[col] - a)
                    throw std::invalid_argument("grading violation in lowering operator " + std::to_string(i));
    }
}

// Applies f_i to a rational vector given sparsely in the module basis.
inline std::map<int, Affine> apply_lowering(const BModule& m, int i, const SparseQ& v)
{
    std::map<int, Affine> out;
    for (const auto& [col, x] : v)
        for (const auto& [r, e] : m.lower(i, col))
            out[r].add_scaled(e, x);
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

struct Chain {
    Weight top;
    int len = 0;   // number of members minus one
    int twist = 0; // <top, alpha_i^vee> - len
    std::vector<SparseQ> members; // f_i maps members[a] to members[a+1]
};

struct ChainDecomposition {
    int index = 0;
    std::vector<Chain> chains;
};

struct CaseSplit {
    int index = 0;
    std::vector<int> params;
    std::vector<std::pair<std::map<int, Rational>, ChainDecomposition>> cases;
};

using DecomposeResult = std::variant<ChainDecomposition, CaseSplit>;

// Jordan chains of a fully known lowering operator f_i, homogeneous in weight.
inline ChainDecomposition decompose_known(const RootSystem& sys, const BModule& m, int i)
{
    validate_module(sys, m);
    ChainDecomposition out;
    out.index = i;
    const int ci = i - 1;

    // alpha_i-cosets of weights, each split into levels by the i-th coordinate
    std::map<Weight, std::map<Rational, std::vector<int>, std::greater<Rational>>> cosets;
    for (int b = 0; b < m.dim(); ++b) {
        Weight key = m.weights[b];
        Rational x = key[ci];
        key[ci] = 0;
        cosets[key][x].push_back(b);
    }

    for (const auto& [key, by_level] : cosets) {
        Rational top_coord = by_level.begin()->first;
        Rational bottom_coord = by_level.rbegin()->first;
        int levels = to_long(top_coord - bottom_coord) + 1;
        std::vector<std::vector<int>> idx(levels);
        for (const auto& [x, ids] : by_level)
            idx[to_long(top_coord - x)] = ids;
        std::map<int, int> pos; // module index -> position within its level
        for (const auto& lv : idx)
            for (std::size_t p = 0; p < lv.size(); ++p)
                pos[lv[p]] = static_cast<int>(p);

        // F[n]: level n -> level n+1
        std::vector<Mat> F(levels);
        for (int n = 0; n + 1 < levels; ++n) {
            F[n] = Mat(static_cast<int>(idx[n + 1].size()), static_cast<int>(idx[n].size()));
            for (std::size_t c = 0; c < idx[n].size(); ++c)
                for (const auto& [r, v] : m.lower(i, idx[n][c]))
                    F[n](pos.at(r), static_cast<int>(c)) = v.value();
        }
        auto dim_of = [&](int n) { return static_cast<int>(idx[n].size()); };
        // kernel of f^j restricted to level n, memoized; powers built incrementally per level
        std::vector<std::vector<Mat>> power(levels);
        std::map<std::pair<int, int>, std::vector<Vec>> kernels;
        auto kernel = [&](int n, int j) -> const std::vector<Vec>& {
            auto [it, fresh] = kernels.try_emplace({n, j});
            if (!fresh)
                return it->second;
            int d = dim_of(n);
            if (j <= 0)
                return it->second;
            if (n + j >= levels) {
                for (int k = 0; k < d; ++k) {
                    Vec e(d);
                    e[k] = 1;
                    it->second.push_back(std::move(e));
                }
                return it->second;
            }
            auto& pw = power[n];
            if (pw.empty())
                pw.push_back(Mat::identity(d));
            while (static_cast<int>(pw.size()) <= j)
                pw.push_back(F[n + static_cast<int>(pw.size()) - 1] * pw.back());
            it->second = nullspace(pw[j]);
            return it->second;
        };

        for (int j = levels; j >= 1; --j) {
            for (int n = 0; n < levels; ++n) {
                int d = dim_of(n);
                if (d == 0)
                    continue;
                SpanBuilder span(d);
                for (const auto& v : kernel(n, j - 1))
                    span.add(v);
                if (n > 0)
                    for (const auto& v : kernel(n - 1, j + 1))
                        span.add(mat_vec(F[n - 1], v));
                for (const auto& v : kernel(n, j)) {
                    if (!span.add(v))
                        continue;
                    Chain ch;
                    ch.len = j - 1;
                    Vec cur = v;
                    for (int s = 0; s < j; ++s) {
                        SparseQ sv;
                        for (int k = 0; k < dim_of(n + s); ++k)
                            if (cur[k] != 0)
                                sv.emplace_back(idx[n + s][k], cur[k]);
                        if (sv.empty())
                            throw std::logic_error("chain member vanished");
                        ch.members.push_back(std::move(sv));
                        if (s + 1 < j)
                            cur = mat_vec(F[n + s], cur);
                    }
                    ch.top = m.weights[idx[n][0]];
                    ch.twist = static_cast<int>(pairing(sys, ch.top, i)) - ch.len;
                    out.chains.push_back(std::move(ch));
                }
            }
        }
    }

    int total = 0;
    for (const auto& ch : out.chains)
        total += ch.len + 1;
    if (total != m.dim())
        throw std::logic_error("chain decomposition does not partition the module");
    return out;
}

// Deterministic generic nonzero values for parameters.
inline Rational generic_value(int id, unsigned salt = 0)
{
    std::mt19937 gen(1000003u * static_cast<unsigned>(id + 1) + 7919u * salt + 17u);
    std::uniform_int_distribution<int> num(1, 97);
    std::uniform_int_distribution<int> den(1, 13);
    Rational q(num(gen) * (gen() % 2 ? 1 : -1), den(gen));
    q.canonicalize();
    return q;
}

// Zero/nonzero instantiation patterns; the all-generic pattern comes first.
// Full enumeration up to `full_limit` parameters, otherwise generic, all-zero,
// and single-parameter variations.
inline std::vector<std::map<int, Rational>> enumerate_assignments(const std::vector<int>& params,
                                                                  int full_limit = 4, unsigned salt = 0)
{
    std::vector<std::map<int, Rational>> out;
    int n = static_cast<int>(params.size());
    auto make = [&](auto nonzero) {
        std::map<int, Rational> a;
        for (int k = 0; k < n; ++k)
            a[params[k]] = nonzero(k) ? generic_value(params[k], salt) : Rational(0);
        return a;
    };
    if (n <= full_limit) {
        for (int mask = (1 << n) - 1; mask >= 0; --mask)
            out.push_back(make([&](int k) { return (mask >> k) & 1; }));
        return out;
    }
    out.push_back(make([](int) { return true; }));
    out.push_back(make([](int) { return false; }));
    for (int z = 0; z < n; ++z)
        out.push_back(make([&](int k) { return k != z; }));
    for (int z = 0; z < n; ++z)
        out.push_back(make([&](int k) { return k == z; }));
    return out;
}

inline DecomposeResult chain_decompose(const RootSystem& sys, const BModule& m, int i)
{
    std::set<int> ps = lowering_params(m, i);
    if (ps.empty())
        return decompose_known(sys, m, i);
    CaseSplit split;
    split.index = i;
    split.params.assign(ps.begin(), ps.end());
    for (auto& a : enumerate_assignments(split.params)) {
        BModule inst = instantiate(m, a);
        split.cases.emplace_back(a, decompose_known(sys, inst, i));
    }
    return split;
}

// Multiset of (top, len) pairs, the shape data compared across decompositions.
inline std::multiset<std::pair<Weight, int>> chain_shape(const ChainDecomposition& d)
{
    std::multiset<std::pair<Weight, int>> s;
    for (const auto& ch : d.chains)
        s.emplace(ch.top, ch.len);
    return s;
}

} // namespace bsdh

#endif
