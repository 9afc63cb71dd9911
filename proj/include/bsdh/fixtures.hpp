#ifndef BSDH_FIXTURES_HPP
#define BSDH_FIXTURES_HPP

#include "bsdh/io.hpp"
#include "bsdh/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace bsdh {

// "tangent:k" is the line C_{alpha_k}; "line:c1,...,cn" is C_lambda in root coordinates ("line:0" is trivial).
inline Weight seed_weight(const RootSystem& sys, const std::string& desc)
{
    auto colon = desc.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("seed must be tangent:k or line:coords, got '" + desc + "'");
    std::string kind = desc.substr(0, colon), arg = desc.substr(colon + 1);
    if (kind == "tangent") {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(arg, &used);
            if (used != arg.size())
                throw std::invalid_argument(arg);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad simple root index in seed '" + desc + "'");
        }
        if (k < 1 || k > sys.rank)
            throw std::invalid_argument("simple root index out of range in seed '" + desc + "'");
        return simple_root(sys, k);
    }
    if (kind == "line") {
        Weight w;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ','))
            w.c.push_back(parse_rational(tok));
        if (w.c.size() == 1 && w.c[0] == 0)
            return zero_weight(sys);
        if (static_cast<int>(w.c.size()) != sys.rank)
            throw std::invalid_argument("seed '" + desc + "' needs " + std::to_string(sys.rank) + " coordinates");
        return w;
    }
    throw std::invalid_argument("unknown seed kind '" + kind + "'");
}

inline CohProfile seeded_coh(const RootSystem& sys, const WeylWord& word, const std::string& desc,
                             const TowerOptions& opt = {})
{
    CohProfile p = line_bundle_coh(sys, word, seed_weight(sys, desc), opt);
    p.seed = desc;
    return p;
}

struct FixtureRecord {
    std::string id;
    std::string sys;
    WeylWord word;
    std::string seed;
    int degree = 0; // -1: every degree
    Character expected;
    bool disputed = false;
    std::string note;
};

inline FixtureRecord fixture_from_json(const Json& j)
{
    FixtureRecord f;
    f.id = j.at("id").get<std::string>();
    f.sys = j.at("sys").get<std::string>();
    f.word = j.at("word").get<WeylWord>();
    f.seed = j.at("seed").get<std::string>();
    const Json& d = j.at("degree");
    if (d.is_string()) {
        if (d.get<std::string>() != "all")
            throw std::invalid_argument("fixture " + f.id + ": degree must be an integer or \"all\"");
        f.degree = -1;
    } else {
        f.degree = d.get<int>();
    }
    f.expected = character_from_weight_list(j.at("expected"));
    f.disputed = j.value("disputed", false);
    f.note = j.value("note", std::string());
    if (f.degree == -1 && !f.expected.empty())
        throw std::invalid_argument("fixture " + f.id + ": an all-degree fixture must expect 0");
    return f;
}

inline Json to_json(const FixtureRecord& f)
{
    Json exp = Json::array();
    for (const auto& [w, m] : f.expected.terms())
        for (long k = 0; k < m; ++k)
            exp.push_back(to_json(w));
    Json out = {{"id", f.id},
                {"sys", f.sys},
                {"word", f.word},
                {"seed", f.seed},
                {"degree", f.degree < 0 ? Json("all") : Json(f.degree)},
                {"expected", exp},
                {"disputed", f.disputed}};
    if (!f.note.empty())
        out["note"] = f.note;
    return out;
}

inline std::vector<FixtureRecord> load_fixtures(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open fixture file " + path);
    std::vector<FixtureRecord> out;
    std::set<std::string> ids;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        FixtureRecord f;
        try {
            f = fixture_from_json(Json::parse(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!ids.insert(f.id).second)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": duplicate fixture id " + f.id);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
}

// Fixtures whose id starts with the prefix.
inline std::vector<FixtureRecord> select_fixtures(const std::vector<FixtureRecord>& all, const std::string& prefix)
{
    std::vector<FixtureRecord> out;
    for (const auto& f : all)
        if (f.id.compare(0, prefix.size(), prefix) == 0)
            out.push_back(f);
    return out;
}

struct FixtureResult {
    std::string id;
    bool pass = false;
    bool disputed = false;
    bool ambiguous = false;
    std::string error;
    Character got; // for an all-degree fixture: the first nonzero degree, if any
    int got_degree = 0;
    CohProfile profile;
    double seconds = 0;
};

inline bool fixture_matches(const FixtureRecord& f, const CohProfile& p, Character* got = nullptr,
                            int* got_degree = nullptr)
{
    if (f.degree >= 0) {
        Character ch = p.degree_character(f.degree);
        if (got)
            *got = ch;
        if (got_degree)
            *got_degree = f.degree;
        return ch == f.expected;
    }
    for (int d = 0; d <= p.top_degree(); ++d) {
        Character ch = p.degree_character(d);
        if (!ch.empty()) {
            if (got)
                *got = ch;
            if (got_degree)
                *got_degree = d;
            return false;
        }
    }
    return true;
}

inline FixtureResult run_fixture(const FixtureRecord& f, const TowerOptions& opt = {})
{
    auto start = std::chrono::steady_clock::now();
    FixtureResult res;
    res.id = f.id;
    res.disputed = f.disputed;
    try {
        RootSystem sys = root_system_from_tag(f.sys);
        res.profile = seeded_coh(sys, f.word, f.seed, opt);
        res.ambiguous = res.profile.ambiguous;
        res.pass = fixture_matches(f, res.profile, &res.got, &res.got_degree) && !res.ambiguous;
    } catch (const std::exception& e) {
        res.error = e.what();
        res.pass = false;
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

inline std::vector<FixtureResult> run_fixtures(const std::vector<FixtureRecord>& fs, const TowerOptions& opt = {})
{
    std::vector<FixtureResult> out(fs.size());
    parallel_for(fs.size(), [&](std::size_t k) { out[k] = run_fixture(fs[k], opt); });
    return out;
}

// Repository-relative default location of the corpus.
inline std::string default_fixture_path()
{
#ifdef BSDH_SOURCE_DIR
    return std::string(BSDH_SOURCE_DIR) + "/data/fixtures.jsonl";
#else
    return "data/fixtures.jsonl";
#endif
}

} // namespace bsdh

#endif
