#ifndef BSDH_COH_HPP
#define BSDH_COH_HPP

#include "bsdh/bmod.hpp"
#include "bsdh/weyl.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bsdh {

// Raised when a vanishing statement that is assumed as an axiom fails.
struct AxiomViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chain coordinates of a module relative to f_i: position g = (chain c, member a).
struct ChainFrame {
    int index = 0;
    std::vector<Chain> chains;
    std::vector<int> offset;
    std::vector<int> chain_of;
    std::vector<int> member_of;
    std::vector<Weight> wt;
    std::vector<long> pair; // <wt, alpha_i^vee>
    std::vector<SparseQ> to_chain; // module basis vector -> chain coordinates

    int size() const { return static_cast<int>(wt.size()); }
    int len(int g) const { return chains[chain_of[g]].len; }
    // E m_a = a(len-a+1) m_{a-1}: the raising operator that makes a chain an sl2-module
    long e_coeff(int g) const
    {
        long a = member_of[g];
        return a * (len(g) - a + 1);
    }
};

inline ChainFrame make_frame(const RootSystem& sys, const BModule& m, const ChainDecomposition& d)
{
    ChainFrame f;
    f.index = d.index;
    f.chains = d.chains;
    for (std::size_t c = 0; c < d.chains.size(); ++c) {
        f.offset.push_back(f.size());
        const Chain& ch = d.chains[c];
        for (int a = 0; a <= ch.len; ++a) {
            f.chain_of.push_back(static_cast<int>(c));
            f.member_of.push_back(a);
            Weight w = ch.top - Rational(a) * simple_root(sys, d.index);
            f.pair.push_back(pairing(sys, w, d.index));
            f.wt.push_back(std::move(w));
        }
    }
    std::map<Weight, std::vector<int>> basis_by_wt, pos_by_wt;
    for (int b = 0; b < m.dim(); ++b)
        basis_by_wt[m.weights[b]].push_back(b);
    for (int g = 0; g < f.size(); ++g)
        pos_by_wt[f.wt[g]].push_back(g);
    f.to_chain.assign(m.dim(), {});
    for (const auto& [w, basis] : basis_by_wt) {
        const auto& pos = pos_by_wt[w];
        int n = static_cast<int>(basis.size());
        if (static_cast<int>(pos.size()) != n)
            throw std::logic_error("chain members do not span a weight space");
        std::map<int, int> local;
        for (int k = 0; k < n; ++k)
            local[basis[k]] = k;
        Mat p(n, n);
        for (int col = 0; col < n; ++col) {
            int g = pos[col];
            for (const auto& [b, x] : f.chains[f.chain_of[g]].members[f.member_of[g]])
                p(local.at(b), col) = x;
        }
        Mat inv = inverse(p);
        for (int k = 0; k < n; ++k)
            for (int col = 0; col < n; ++col)
                if (inv(col, k) != 0)
                    f.to_chain[basis[k]].emplace_back(pos[col], inv(col, k));
    }
    return f;
}

namespace detail {

using Poly = std::map<std::pair<int, int>, Affine>; // (chain position, t-degree) -> coefficient

inline void poly_add(Poly& p, int g, int d, const Affine& v, const Rational& s = 1)
{
    if (v.is_zero() || s == 0)
        return;
    auto& slot = p[{g, d}];
    slot.add_scaled(v, s);
    if (slot.is_zero())
        p.erase({g, d});
}

// exp(sign * t E) applied term by term.
inline Poly exp_tE(const ChainFrame& f, const Poly& p, int sign)
{
    Poly out;
    for (const auto& [key, v] : p) {
        auto [g, d] = key;
        Rational coeff = 1;
        int a = f.member_of[g];
        for (int s = 0; s <= a; ++s) {
            poly_add(out, g - s, d + s, v, coeff);
            if (s < a)
                coeff = coeff * sign * f.e_coeff(g - s) / (s + 1);
        }
    }
    return out;
}

} // namespace detail

enum class InduceDegree { H0, H1 };

// Output of an induction step: the module plus the raising operator of the
// letter's sl2 (needed only to constrain extensions).
struct Induced {
    BModule module;
    int index = 0;
    std::vector<SparseQ> raising; // per column
};

// H^0(s_i, M) or H^1(s_i, M). Sections are realized on the big cell as
// M[t, 1/t]; x := t has weight -alpha_i. A chain (m_0..m_len) of twist k carries
// sections exp(-tE) m_a t^b, 0 <= b <= k; its H^1 is spanned by the Cech classes
// of exp(-tE) m_a t^b for k < b < 0.
// Actions on the big cell: f_j (j != i) coefficient-wise, since [e_i, f_j] = 0;
// f_i F = t^2 F' + f_i F - t h_i F; e_i F = -F'.
inline Induced induce(const RootSystem& sys, const BModule& m, int i, InduceDegree deg)
{
    if (!lowering_params(m, i).empty())
        throw std::invalid_argument("induction along an index whose lowering operator has unknown entries");
    ChainDecomposition dec = decompose_known(sys, m, i);
    ChainFrame f = make_frame(sys, m, dec);
    const bool h0 = deg == InduceDegree::H0;

    Induced out;
    out.index = i;
    out.module = BModule(sys.rank, std::string(h0 ? "H0" : "H1") + "(s" + std::to_string(i) + "," + m.tag + ")");
    std::map<std::pair<int, int>, int> index_of;
    std::vector<std::pair<int, int>> basis;
    for (std::size_t c = 0; c < f.chains.size(); ++c) {
        const Chain& ch = f.chains[c];
        int lo = h0 ? 0 : ch.twist + 1;
        int hi = h0 ? ch.twist : -1;
        for (int a = 0; a <= ch.len; ++a)
            for (int b = lo; b <= hi; ++b) {
                int g = f.offset[c] + a;
                index_of[{g, b}] = static_cast<int>(basis.size());
                basis.emplace_back(g, b);
                out.module.add_basis(f.wt[g] - Rational(b) * simple_root(sys, i));
            }
    }
    out.raising.assign(basis.size(), {});
    if (basis.empty())
        return out;

    // f_j for j != i in chain coordinates
    std::vector<std::vector<std::map<int, Affine>>> op(sys.rank + 1);
    for (int j = 1; j <= sys.rank; ++j) {
        if (j == i)
            continue;
        op[j].resize(f.size());
        for (int g = 0; g < f.size(); ++g) {
            const SparseQ& member = f.chains[f.chain_of[g]].members[f.member_of[g]];
            for (const auto& [b, v] : apply_lowering(m, j, member))
                for (const auto& [g2, x] : f.to_chain[b])
                    op[j][g][g2].add_scaled(v, x);
        }
    }

    auto read = [&](const detail::Poly& p, auto&& sink) {
        for (const auto& [key, v] : p) {
            auto it = index_of.find(key);
            if (it != index_of.end()) {
                sink(it->second, v);
            } else if (h0 && !v.is_zero()) {
                throw std::logic_error("image of a section left the induced module");
            }
        }
    };

    for (std::size_t col = 0; col < basis.size(); ++col) {
        auto [g0, b0] = basis[col];
        detail::Poly seed;
        detail::poly_add(seed, g0, b0, Affine(1));
        detail::Poly F = detail::exp_tE(f, seed, -1);

        for (int j = 1; j <= sys.rank; ++j) {
            detail::Poly xF;
            if (j != i) {
                for (const auto& [key, v] : F)
                    for (const auto& [g2, x] : op[j][key.first])
                        detail::poly_add(xF, g2, key.second, x * v);
            } else {
                for (const auto& [key, v] : F) {
                    auto [g, d] = key;
                    detail::poly_add(xF, g, d + 1, v, Rational(d - f.pair[g]));
                    if (f.member_of[g] < f.len(g))
                        detail::poly_add(xF, g + 1, d, v);
                }
            }
            detail::Poly G = detail::exp_tE(f, xF, +1);
            read(G, [&](int row, const Affine& v) { out.module.set_entry(j, row, static_cast<int>(col), v); });
        }

        detail::Poly eF;
        for (const auto& [key, v] : F)
            detail::poly_add(eF, key.first, key.second - 1, v, Rational(-key.second));
        detail::Poly G = detail::exp_tE(f, eF, +1);
        read(G, [&](int row, const Affine& v) { out.raising[col].emplace_back(row, v.value()); });
        std::sort(out.raising[col].begin(), out.raising[col].end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    return out;
}

inline BModule step_h0(const RootSystem& sys, const BModule& m, int i)
{
    return induce(sys, m, i, InduceDegree::H0).module;
}

inline BModule step_h1(const RootSystem& sys, const BModule& m, int i)
{
    return induce(sys, m, i, InduceDegree::H1).module;
}

struct ExtensionInfo {
    int unknowns = 0; // cross entries allowed by the grading
    int params = 0;   // free parameters after imposing the module relations
};

namespace detail {

using AVec = std::map<int, Affine>;

inline void avec_add(AVec& v, int k, const Affine& x)
{
    if (x.is_zero())
        return;
    auto& slot = v[k];
    slot += x;
    if (slot.is_zero())
        v.erase(k);
}

inline AVec apply_lower(const BModule& m, int i, const AVec& v)
{
    AVec out;
    for (const auto& [col, x] : v)
        for (const auto& [r, e] : m.lower(i, col))
            avec_add(out, r, e * x);
    return out;
}

inline AVec apply_raise(const std::vector<SparseQ>& e, const AVec& v)
{
    AVec out;
    for (const auto& [col, x] : v)
        for (const auto& [r, q] : e[col])
            avec_add(out, r, x * q);
    return out;
}

inline long binomial(int n, int k)
{
    long c = 1;
    for (int s = 1; s <= k; ++s)
        c = c * (n - k + s) / s;
    return c;
}

} // namespace detail

// Extension E of Q by A (0 -> A -> E -> Q -> 0) split as a module for the
// Levi sl2 of letter i. The cross block Q -> A of f_j (j != i) is unknown; it
// is cut down by the relations of a genuine module ([e_i, f_j] = 0 and the
// Serre relations), which are linear in the cross block. Fresh parameters are
// numbered from param_base.
inline BModule assemble_extension(const RootSystem& sys, const Induced& sub, const Induced& quot, int param_base,
                                  ExtensionInfo& info)
{
    const BModule& A = sub.module;
    const BModule& Q = quot.module;
    const int i = sub.index;
    info = {};
    if (Q.dim() == 0)
        return A;
    if (A.dim() == 0)
        return Q;

    BModule E = direct_sum(A, Q);
    E.tag = "ext(" + Q.tag + " by " + A.tag + ")";
    const int na = A.dim();
    std::vector<SparseQ> raise(E.dim());
    for (int c = 0; c < na; ++c)
        raise[c] = sub.raising[c];
    for (int c = 0; c < Q.dim(); ++c)
        for (const auto& [r, x] : quot.raising[c])
            raise[na + c].emplace_back(na + r, x);

    struct Slot {
        int j, row, col;
    };
    std::vector<Slot> slots;
    std::map<Weight, std::vector<int>> a_by_wt;
    for (int r = 0; r < na; ++r)
        a_by_wt[A.weights[r]].push_back(r);
    for (int j = 1; j <= sys.rank; ++j) {
        if (j == i)
            continue;
        Weight aj = simple_root(sys, j);
        for (int q = 0; q < Q.dim(); ++q) {
            auto it = a_by_wt.find(Q.weights[q] - aj);
            if (it == a_by_wt.end())
                continue;
            for (int r : it->second) {
                E.set_entry(j, r, na + q, Affine::param(static_cast<int>(slots.size())));
                slots.push_back({j, r, na + q});
            }
        }
    }
    info.unknowns = static_cast<int>(slots.size());
    if (slots.empty())
        return E;

    std::vector<Affine> eqs;
    auto collect = [&](const detail::AVec& v) {
        for (const auto& [k, x] : v)
            if (!x.is_zero())
                eqs.push_back(x);
    };
    for (int q = na; q < E.dim(); ++q) {
        detail::AVec unit{{q, Affine(1)}};
        for (int j = 1; j <= sys.rank; ++j) {
            if (j == i)
                continue;
            detail::AVec lhs = detail::apply_raise(raise, detail::apply_lower(E, j, unit));
            detail::AVec rhs = detail::apply_lower(E, j, detail::apply_raise(raise, unit));
            for (const auto& [k, x] : rhs)
                detail::avec_add(lhs, k, x * Rational(-1));
            collect(lhs);
        }
        for (int j = 1; j <= sys.rank; ++j)
            for (int l = 1; l <= sys.rank; ++l) {
                if (j == l)
                    continue;
                int n = 1 - sys.cartan[j - 1][l - 1];
                detail::AVec total;
                for (int k = 0; k <= n; ++k) {
                    detail::AVec v = unit;
                    for (int s = 0; s < k; ++s)
                        v = detail::apply_lower(E, j, v);
                    v = detail::apply_lower(E, l, v);
                    for (int s = 0; s < n - k; ++s)
                        v = detail::apply_lower(E, j, v);
                    Rational c = Rational((k % 2 ? -1 : 1) * detail::binomial(n, k));
                    for (const auto& [key, x] : v)
                        detail::avec_add(total, key, x * c);
                }
                collect(total);
            }
    }

    int nu = info.unknowns;
    Mat sys_mat(static_cast<int>(eqs.size()), nu);
    for (std::size_t r = 0; r < eqs.size(); ++r) {
        if (eqs[r].constant() != 0)
            throw std::logic_error("inhomogeneous extension constraint");
        for (const auto& [id, x] : eqs[r].terms())
            sys_mat(static_cast<int>(r), id) = x;
    }
    std::vector<Vec> kernel = eqs.empty() ? std::vector<Vec>{} : nullspace(sys_mat);
    if (eqs.empty())
        for (int u = 0; u < nu; ++u) {
            Vec e(nu);
            e[u] = 1;
            kernel.push_back(std::move(e));
        }
    info.params = static_cast<int>(kernel.size());
    for (int u = 0; u < nu; ++u) {
        Affine v;
        for (std::size_t p = 0; p < kernel.size(); ++p)
            if (kernel[p][u] != 0)
                v.add_scaled(Affine::param(param_base + static_cast<int>(p)), kernel[p][u]);
        E.set_entry(slots[u].j, slots[u].row, slots[u].col, v);
    }
    return E;
}

struct AmbiguityEvent {
    int step = 0;   // 1-based position of the letter in the word
    int letter = 0;
    int degree = 0;
    int unknowns = 0;
    int params = 0;
    std::vector<int> param_ids;
    std::string note;
};

struct CohProfile {
    WeylWord word;
    std::string seed;
    BModule h0;
    BModule h1;
    std::vector<Character> h2plus; // degrees 2, 3, ...
    std::vector<AmbiguityEvent> ambiguity_log;
    int branches = 1;
    bool ambiguous = false;
    bool branch_cap_hit = false;

    Character degree_character(int d) const
    {
        if (d == 0)
            return character(h0);
        if (d == 1)
            return character(h1);
        if (d - 2 < static_cast<int>(h2plus.size()))
            return h2plus[d - 2];
        return {};
    }
    int top_degree() const { return 1 + static_cast<int>(h2plus.size()); }
};

struct TowerOptions {
    int branch_cap = 64;
    int full_enumeration_limit = 4;
    long dim_budget = 0; // > 0: abort once the summed module dimension over all branches exceeds it
};

namespace detail {

struct TowerState {
    std::vector<BModule> deg;
    std::vector<AmbiguityEvent> log;

    friend bool operator==(const TowerState& a, const TowerState& b) { return a.deg == b.deg; }
};

inline std::vector<Character> state_characters(const TowerState& s)
{
    std::vector<Character> out;
    for (const auto& m : s.deg)
        out.push_back(character(m));
    while (!out.empty() && out.back().empty())
        out.pop_back();
    return out;
}

inline TowerState renumber_params(TowerState s)
{
    std::set<int> ids;
    for (const auto& m : s.deg) {
        auto p = module_params(m);
        ids.insert(p.begin(), p.end());
    }
    std::map<int, int> fresh;
    for (int id : ids)
        fresh[id] = static_cast<int>(fresh.size());
    for (auto& m : s.deg)
        for (auto& op : m.lowering)
            for (auto& col : op)
                for (auto& e : col)
                    if (!e.second.is_known())
                        e.second = e.second.renumber(fresh);
    return s;
}

inline TowerState tower_step(const RootSystem& sys, const TowerState& s, int i, int step)
{
    TowerState out;
    out.log = s.log;
    std::vector<Induced> h0s, h1s;
    for (const auto& m : s.deg) {
        h0s.push_back(induce(sys, m, i, InduceDegree::H0));
        h1s.push_back(induce(sys, m, i, InduceDegree::H1));
    }
    int next_param = 0;
    std::size_t top = s.deg.size();
    for (std::size_t d = 0; d <= top; ++d) {
        if (d == 0) {
            out.deg.push_back(h0s[0].module);
            continue;
        }
        const Induced& sub = h1s[d - 1];
        Induced quot;
        quot.index = i;
        quot.module = BModule(sys.rank);
        if (d < top)
            quot = h0s[d];
        ExtensionInfo info;
        BModule e = assemble_extension(sys, sub, quot, next_param, info);
        if (info.params > 0) {
            AmbiguityEvent ev;
            ev.step = step;
            ev.letter = i;
            ev.degree = static_cast<int>(d);
            ev.unknowns = info.unknowns;
            ev.params = info.params;
            for (int p = 0; p < info.params; ++p)
                ev.param_ids.push_back(next_param + p);
            ev.note = "nonsplit extension possible";
            out.log.push_back(ev);
        }
        next_param += info.params;
        out.deg.push_back(std::move(e));
    }
    while (out.deg.size() > 1 && out.deg.back().dim() == 0)
        out.deg.pop_back();
    return out;
}

} // namespace detail

// H^j(s_{i_1}...s_{i_r}, V): letters are consumed from the right end of the word.
inline CohProfile tower_coh(const RootSystem& sys, const WeylWord& word, const BModule& seed,
                            const TowerOptions& opt = {})
{
    check_word(sys, word);
    validate_module(sys, seed);
    if (!module_params(seed).empty())
        throw std::invalid_argument("seed module must be fully known");
    if (!is_reduced(sys, word))
        throw std::invalid_argument("word " + word_to_string(word) + " is not reduced");

    std::vector<detail::TowerState> branches(1);
    branches[0].deg.push_back(seed);
    bool capped = false;
    for (int r = static_cast<int>(word.size()); r >= 1; --r) {
        int i = word[r - 1];
        std::vector<detail::TowerState> next;
        for (const auto& b : branches) {
            std::set<int> ps;
            std::set<int> sensitive;
            for (const auto& m : b.deg) {
                auto p = module_params(m);
                ps.insert(p.begin(), p.end());
                auto q = lowering_params(m, i);
                sensitive.insert(q.begin(), q.end());
            }
            std::vector<std::map<int, Rational>> cases{{}};
            if (!ps.empty())
                cases = enumerate_assignments(std::vector<int>(ps.begin(), ps.end()), opt.full_enumeration_limit,
                                              static_cast<unsigned>(r));
            for (const auto& a : cases) {
                detail::TowerState inst;
                inst.log = b.log;
                for (const auto& m : b.deg)
                    inst.deg.push_back(instantiate(m, a));
                if (cases.size() > 1 && !sensitive.empty()) {
                    AmbiguityEvent ev;
                    ev.step = r;
                    ev.letter = i;
                    ev.params = static_cast<int>(ps.size());
                    ev.param_ids.assign(ps.begin(), ps.end());
                    ev.note = "case split on lowering operator " + std::to_string(i);
                    inst.log.push_back(ev);
                }
                detail::TowerState stepped = detail::renumber_params(detail::tower_step(sys, inst, i, r));
                if (std::find(next.begin(), next.end(), stepped) == next.end())
                    next.push_back(std::move(stepped));
            }
        }
        if (static_cast<int>(next.size()) > opt.branch_cap) {
            next.resize(opt.branch_cap);
            capped = true;
        }
        branches = std::move(next);
        if (opt.dim_budget > 0) {
            long total = 0;
            for (const auto& b : branches)
                for (const auto& m : b.deg)
                    total += m.dim();
            if (total > opt.dim_budget)
                throw BudgetExceeded("tower exceeds dimension budget " + std::to_string(opt.dim_budget) +
                                     " after letter " + std::to_string(r));
        }
    }

    const detail::TowerState& rep = branches.front();
    CohProfile prof;
    prof.word = word;
    prof.seed = seed.tag;
    prof.h0 = rep.deg[0];
    prof.h1 = rep.deg.size() > 1 ? rep.deg[1] : BModule(sys.rank);
    for (std::size_t d = 2; d < rep.deg.size(); ++d)
        prof.h2plus.push_back(character(rep.deg[d]));
    while (!prof.h2plus.empty() && prof.h2plus.back().empty())
        prof.h2plus.pop_back();
    prof.ambiguity_log = rep.log;
    prof.branches = static_cast<int>(branches.size());
    prof.branch_cap_hit = capped;
    auto rep_chars = detail::state_characters(rep);
    for (const auto& b : branches)
        if (detail::state_characters(b) != rep_chars)
            prof.ambiguous = true;
    return prof;
}

inline CohProfile line_bundle_coh(const RootSystem& sys, const WeylWord& word, const Weight& lambda,
                                  const TowerOptions& opt = {})
{
    CohProfile p = tower_coh(sys, word, line_module(lambda, "C_" + to_string(lambda)), opt);
    return p;
}

// H^j(s_{i_1}...s_{i_r}, alpha_{i_r}) for r = 1..N.
inline std::vector<CohProfile> rel_tangent_series(const RootSystem& sys, const WeylWord& word,
                                                  const TowerOptions& opt = {})
{
    std::vector<CohProfile> out;
    for (std::size_t r = 1; r <= word.size(); ++r) {
        WeylWord prefix(word.begin(), word.begin() + static_cast<long>(r));
        CohProfile p = line_bundle_coh(sys, prefix, simple_root(sys, prefix.back()), opt);
        if (!p.h2plus.empty())
            throw AxiomViolation("nonzero H^2 in the relative tangent series at prefix " + word_to_string(prefix));
        out.push_back(std::move(p));
    }
    return out;
}

// Lambda_i on one weight: k >= 0 gives the string lambda..lambda-k alpha;
// k = -1 gives 0; k <= -2 gives minus the string lambda+alpha..lambda+(-k-1)alpha.
inline Character demazure_step(const RootSystem& sys, const Character& ch, int i)
{
    Character out;
    Weight a = simple_root(sys, i);
    for (const auto& [w, m] : ch.terms()) {
        long k = pairing(sys, w, i);
        if (k >= 0) {
            Weight v = w;
            for (long b = 0; b <= k; ++b, v -= a)
                out.add(v, m);
        } else if (k <= -2) {
            Weight v = w + a;
            for (long b = 1; b <= -k - 1; ++b, v += a)
                out.add(v, -m);
        }
    }
    return out;
}

inline Character demazure_char(const RootSystem& sys, const WeylWord& word, Character ch)
{
    check_word(sys, word);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        ch = demazure_step(sys, ch, *it);
    return ch;
}

inline Character euler_character(const CohProfile& p)
{
    Character ch = character(p.h0) - character(p.h1);
    for (std::size_t d = 0; d < p.h2plus.size(); ++d) {
        if (d % 2 == 0)
            ch += p.h2plus[d];
        else
            ch -= p.h2plus[d];
    }
    return ch;
}

struct BBWResult {
    bool singular = false;
    int degree = 0;
    Weight dominant;
    Rational dim = 0;
};

inline Rational weyl_dimension(const RootSystem& sys, const Weight& dominant)
{
    Weight r = rho(sys);
    Weight lr = dominant + r;
    Rational d = 1;
    for (const auto& b : sys.positive_roots)
        d *= coroot_pairing(sys, lr, b) / coroot_pairing(sys, r, b);
    return d;
}

inline BBWResult bbw_oracle(const RootSystem& sys, const Weight& lambda)
{
    BBWResult res;
    Weight v = lambda + rho(sys);
    for (const auto& b : sys.positive_roots)
        if (coroot_pairing(sys, v, b) == 0) {
            res.singular = true;
            return res;
        }
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i <= sys.rank; ++i)
            if (pairing_q(sys, v, i) < 0) {
                v = reflect(sys, v, i);
                ++res.degree;
                moved = true;
            }
    }
    res.dominant = v - rho(sys);
    res.dim = weyl_dimension(sys, res.dominant);
    return res;
}

// Shift identity for the last letter alpha of the word: for <lambda, alpha^vee> >= 0,
// ch H^j(w, lambda) = ch H^{j+1}(w, s_alpha . lambda); for <lambda, alpha^vee> = -1 everything vanishes.
inline bool shift_identity_holds(const RootSystem& sys, const WeylWord& word, const Weight& lambda,
                                 const TowerOptions& opt = {})
{
    if (word.empty())
        return true;
    int a = word.back();
    long k = pairing(sys, lambda, a);
    CohProfile p = line_bundle_coh(sys, word, lambda, opt);
    if (k == -1)
        return p.h0.dim() == 0 && p.h1.dim() == 0 && p.h2plus.empty();
    Weight mu = dot_reflect(sys, lambda, a);
    CohProfile q = line_bundle_coh(sys, word, mu, opt);
    const CohProfile& lo = k >= 0 ? p : q; // the one with nonnegative pairing
    const CohProfile& hi = k >= 0 ? q : p;
    int top = std::max(lo.top_degree(), hi.top_degree()) + 1;
    if (!hi.degree_character(0).empty())
        return false;
    for (int j = 0; j <= top; ++j)
        if (lo.degree_character(j) != hi.degree_character(j + 1))
            return false;
    return true;
}

} // namespace bsdh

#endif
