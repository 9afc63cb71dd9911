#ifndef BSDH_IO_HPP
#define BSDH_IO_HPP

#include "bsdh/rigidity.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsdh {

using Json = nlohmann::json;

// Rationals are "p/q" strings; weight coordinates are plain integers when integral.
inline Json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational, got " + j.dump());
}

inline Json to_json(const Weight& w)
{
    Json out = Json::array();
    for (const auto& x : w.c) {
        if (is_integer(x) && x.get_num().fits_slong_p())
            out.push_back(to_long(x));
        else
            out.push_back(to_string(x));
    }
    return out;
}

inline Weight weight_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("weight must be an array: " + j.dump());
    Weight w;
    for (const auto& x : j)
        w.c.push_back(rational_from_json(x));
    return w;
}

inline Json to_json(const Character& ch)
{
    Json out = Json::array();
    for (const auto& [w, m] : ch.terms())
        out.push_back({{"weight", to_json(w)}, {"mult", m}});
    return out;
}

inline Character character_from_json(const Json& j)
{
    Character ch;
    for (const auto& t : j)
        ch.add(weight_from_json(t.at("weight")), t.at("mult").get<long>());
    return ch;
}

// Plain weight list (multiset) as used by fixture files.
inline Character character_from_weight_list(const Json& j)
{
    Character ch;
    for (const auto& w : j)
        ch.add(weight_from_json(w));
    return ch;
}

inline Json to_json(const Affine& a)
{
    if (a.is_known())
        return to_string(a.constant());
    Json terms = Json::array();
    for (const auto& [id, c] : a.terms())
        terms.push_back({id, to_string(c)});
    return {{"const", to_string(a.constant())}, {"terms", terms}};
}

inline Affine affine_from_json(const Json& j)
{
    if (!j.is_object())
        return Affine(rational_from_json(j));
    Affine a(rational_from_json(j.at("const")));
    for (const auto& t : j.at("terms"))
        a += Affine::param(t.at(0).get<int>(), rational_from_json(t.at(1)));
    return a;
}

inline Json to_json(const BModule& m)
{
    Json weights = Json::array();
    for (const auto& w : m.weights)
        weights.push_back(to_json(w));
    Json lowering = Json::array();
    for (int i = 1; i <= m.rank; ++i) {
        Json op = Json::array();
        for (int col = 0; col < m.dim(); ++col)
            for (const auto& [row, v] : m.lower(i, col))
                op.push_back({row, col, to_json(v)});
        lowering.push_back(op);
    }
    std::set<int> ps = module_params(m);
    return {{"rank", m.rank},
            {"tag", m.tag},
            {"weights", weights},
            {"lowering", lowering},
            {"params", Json(std::vector<int>(ps.begin(), ps.end()))}};
}

inline BModule module_from_json(const Json& j)
{
    BModule m(j.at("rank").get<int>(), j.value("tag", std::string()));
    for (const auto& w : j.at("weights"))
        m.add_basis(weight_from_json(w));
    const Json& lowering = j.at("lowering");
    if (static_cast<int>(lowering.size()) != m.rank)
        throw std::invalid_argument("module JSON: expected one lowering operator per simple root");
    for (int i = 1; i <= m.rank; ++i)
        for (const auto& e : lowering.at(i - 1)) {
            int row = e.at(0).get<int>(), col = e.at(1).get<int>();
            if (row < 0 || row >= m.dim() || col < 0 || col >= m.dim())
                throw std::invalid_argument("module JSON: entry out of range");
            m.set_entry(i, row, col, affine_from_json(e.at(2)));
        }
    return m;
}

inline Json to_json(const AmbiguityEvent& e)
{
    return {{"step", e.step},         {"letter", e.letter},     {"degree", e.degree}, {"unknowns", e.unknowns},
            {"params", e.params},     {"param_ids", e.param_ids}, {"note", e.note}};
}

inline AmbiguityEvent ambiguity_from_json(const Json& j)
{
    AmbiguityEvent e;
    e.step = j.at("step").get<int>();
    e.letter = j.at("letter").get<int>();
    e.degree = j.at("degree").get<int>();
    e.unknowns = j.at("unknowns").get<int>();
    e.params = j.at("params").get<int>();
    e.param_ids = j.at("param_ids").get<std::vector<int>>();
    e.note = j.at("note").get<std::string>();
    return e;
}

inline bool operator==(const AmbiguityEvent& a, const AmbiguityEvent& b)
{
    return a.step == b.step && a.letter == b.letter && a.degree == b.degree && a.unknowns == b.unknowns &&
           a.params == b.params && a.param_ids == b.param_ids && a.note == b.note;
}

inline bool operator==(const CohProfile& a, const CohProfile& b)
{
    return a.word == b.word && a.seed == b.seed && a.h0 == b.h0 && a.h1 == b.h1 && a.h2plus == b.h2plus &&
           a.ambiguity_log == b.ambiguity_log && a.branches == b.branches && a.ambiguous == b.ambiguous &&
           a.branch_cap_hit == b.branch_cap_hit;
}

inline Json to_json(const CohProfile& p)
{
    Json chars = Json::array();
    for (int d = 0; d <= p.top_degree(); ++d)
        chars.push_back({{"degree", d}, {"character", to_json(p.degree_character(d))}});
    Json h2 = Json::array();
    for (const auto& ch : p.h2plus)
        h2.push_back(to_json(ch));
    Json log = Json::array();
    for (const auto& e : p.ambiguity_log)
        log.push_back(to_json(e));
    return {{"word", p.word},
            {"seed", p.seed},
            {"characters", chars},
            {"h0", to_json(p.h0)},
            {"h1", to_json(p.h1)},
            {"h2plus", h2},
            {"ambiguity_log", log},
            {"branches", p.branches},
            {"ambiguous", p.ambiguous},
            {"branch_cap_hit", p.branch_cap_hit}};
}

inline CohProfile profile_from_json(const Json& j)
{
    CohProfile p;
    p.word = j.at("word").get<WeylWord>();
    p.seed = j.at("seed").get<std::string>();
    p.h0 = module_from_json(j.at("h0"));
    p.h1 = module_from_json(j.at("h1"));
    for (const auto& ch : j.at("h2plus"))
        p.h2plus.push_back(character_from_json(ch));
    for (const auto& e : j.at("ambiguity_log"))
        p.ambiguity_log.push_back(ambiguity_from_json(e));
    p.branches = j.at("branches").get<int>();
    p.ambiguous = j.at("ambiguous").get<bool>();
    p.branch_cap_hit = j.at("branch_cap_hit").get<bool>();
    return p;
}

inline Json interval_to_json(const Interval& x)
{
    Json hi = x.hi >= kUnbounded ? Json(nullptr) : Json(x.hi);
    return {x.lo, hi};
}

inline Interval interval_from_json(const Json& j)
{
    return {j.at(0).get<long>(), j.at(1).is_null() ? kUnbounded : j.at(1).get<long>()};
}

inline Json to_json(const Certificate& c)
{
    Json wit = Json::array();
    for (const auto& w : c.witnesses)
        wit.push_back({{"weight", to_json(w.weight)}, {"a1", w.a1}, {"bound", w.bound}});
    Json open = Json::array();
    for (const auto& w : c.open_weights)
        open.push_back(to_json(w));
    return {{"kind", to_string(c.kind)}, {"prefix", c.prefix}, {"witnesses", wit}, {"trace", c.trace},
            {"open_weights", open}};
}

inline Certificate::Kind kind_from_string(const std::string& s)
{
    if (s == "Nonrigid")
        return Certificate::Kind::Nonrigid;
    if (s == "Rigid")
        return Certificate::Kind::Rigid;
    if (s == "Undecided")
        return Certificate::Kind::Undecided;
    throw std::invalid_argument("unknown verdict " + s);
}

inline Certificate certificate_from_json(const Json& j)
{
    Certificate c;
    c.kind = kind_from_string(j.at("kind").get<std::string>());
    c.prefix = j.at("prefix").get<int>();
    for (const auto& w : j.at("witnesses"))
        c.witnesses.push_back({weight_from_json(w.at("weight")), w.at("a1").get<long>(), w.at("bound").get<long>()});
    c.trace = j.at("trace").get<std::vector<std::string>>();
    for (const auto& w : j.at("open_weights"))
        c.open_weights.push_back(weight_from_json(w));
    return c;
}

inline bool operator==(const Witness& a, const Witness& b)
{
    return a.weight == b.weight && a.a1 == b.a1 && a.bound == b.bound;
}

inline bool operator==(const Certificate& a, const Certificate& b)
{
    return a.kind == b.kind && a.prefix == b.prefix && a.witnesses == b.witnesses && a.trace == b.trace &&
           a.open_weights == b.open_weights;
}

inline bool operator==(const DimLedger& a, const DimLedger& b)
{
    return a.word == b.word && a.weights == b.weights && a.a0 == b.a0 && a.a1 == b.a1 && a.euler == b.euler &&
           a.h0 == b.h0 && a.h1 == b.h1 && a.t == b.t && a.descent == b.descent;
}

inline bool row_is_zero(const DimLedger& L, int r, std::size_t k)
{
    const Interval z{0, 0};
    return L.a0[r][k] == 0 && L.a1[r][k] == 0 && L.euler[r][k] == 0 && L.h0[r][k] == z && L.h1[r][k] == z &&
           L.t[r][k] == z;
}

// Rows that are identically zero are omitted; the weight universe is listed so they can be restored.
inline Json to_json(const DimLedger& L)
{
    Json weights = Json::array();
    for (const auto& w : L.weights)
        weights.push_back(to_json(w));
    Json rows = Json::array();
    Json euler = Json::array();
    const int n = L.length();
    for (int r = 0; r <= n; ++r)
        for (std::size_t k = 0; k < L.weights.size(); ++k) {
            if (L.euler[r][k] != 0)
                euler.push_back({{"prefix", r}, {"weight", to_json(L.weights[k])}, {"chi", L.euler[r][k]}});
            if (row_is_zero(L, r, k))
                continue;
            rows.push_back({{"prefix", r},
                            {"weight", to_json(L.weights[k])},
                            {"a0", L.a0[r][k]},
                            {"a1", L.a1[r][k]},
                            {"chi", L.euler[r][k]},
                            {"h0", interval_to_json(L.h0[r][k])},
                            {"h1", interval_to_json(L.h1[r][k])},
                            {"t", interval_to_json(L.t[r][k])}});
        }
    return {{"word", L.word}, {"weights", weights}, {"descent", L.descent}, {"rows", rows}, {"euler_table", euler}};
}

inline DimLedger ledger_from_json(const Json& j)
{
    DimLedger L;
    L.word = j.at("word").get<WeylWord>();
    for (const auto& w : j.at("weights"))
        L.weights.push_back(weight_from_json(w));
    for (std::size_t k = 0; k < L.weights.size(); ++k)
        L.index[L.weights[k]] = static_cast<int>(k);
    L.descent = j.at("descent").get<std::vector<bool>>();
    const std::size_t n = L.word.size(), nw = L.weights.size();
    L.a0.assign(n + 1, std::vector<long>(nw, 0));
    L.a1 = L.a0;
    L.euler = L.a0;
    L.h0.assign(n + 1, std::vector<Interval>(nw, Interval{0, 0}));
    L.h1 = L.h0;
    L.t = L.h0;
    for (const auto& row : j.at("rows")) {
        int r = row.at("prefix").get<int>();
        int k = L.index.at(weight_from_json(row.at("weight")));
        L.a0[r][k] = row.at("a0").get<long>();
        L.a1[r][k] = row.at("a1").get<long>();
        L.euler[r][k] = row.at("chi").get<long>();
        L.h0[r][k] = interval_from_json(row.at("h0"));
        L.h1[r][k] = interval_from_json(row.at("h1"));
        L.t[r][k] = interval_from_json(row.at("t"));
    }
    return L;
}

inline Json to_json(const RigidityReport& rep, bool with_series = false)
{
    Json out = {{"word", rep.word},
                {"verdict", to_string(rep.verdict())},
                {"certificate", to_json(rep.certificate)},
                {"ledger", to_json(rep.ledger)},
                {"seconds", rep.seconds},
                {"ambiguous_profiles", rep.ambiguous_profiles},
                {"ambiguity_events", rep.ambiguity_events}};
    if (with_series) {
        Json s = Json::array();
        for (const auto& p : rep.series)
            s.push_back(to_json(p));
        out["series"] = s;
    }
    return out;
}

inline RigidityReport report_from_json(const Json& j)
{
    RigidityReport rep;
    rep.word = j.at("word").get<WeylWord>();
    rep.certificate = certificate_from_json(j.at("certificate"));
    if (kind_from_string(j.at("verdict").get<std::string>()) != rep.certificate.kind)
        throw std::invalid_argument("report JSON: verdict disagrees with certificate");
    rep.ledger = ledger_from_json(j.at("ledger"));
    rep.seconds = j.at("seconds").get<double>();
    rep.ambiguous_profiles = j.at("ambiguous_profiles").get<int>();
    rep.ambiguity_events = j.at("ambiguity_events").get<int>();
    if (j.contains("series"))
        for (const auto& p : j.at("series"))
            rep.series.push_back(profile_from_json(p));
    return rep;
}

inline bool operator==(const RigidityReport& a, const RigidityReport& b)
{
    return a.word == b.word && a.certificate == b.certificate && a.ledger == b.ledger && a.seconds == b.seconds &&
           a.ambiguous_profiles == b.ambiguous_profiles && a.ambiguity_events == b.ambiguity_events &&
           a.series == b.series;
}

} // namespace bsdh

#endif
