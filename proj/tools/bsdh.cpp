#include "bsdh/fixtures.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <iostream>

using namespace bsdh;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUndecided = 2;

struct Common {
    std::string sys = "F4";
    std::string format = "text";
    int jobs = 0;
    int branch_cap = 64;
    long dim_budget = 0;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--sys", c.sys, "root system tag (F4, G2, A3, ...)")->capture_default_str();
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--jobs", c.jobs, "worker threads (default: BSDH_JOBS or all cores)");
    cmd->add_option("--branch-cap", c.branch_cap, "maximum parameter branches kept per tower")->capture_default_str();
    cmd->add_option("--dim-budget", c.dim_budget, "abort a tower whose summed module dimension exceeds this (0: no limit)")
        ->capture_default_str();
}

TowerOptions tower_options(const Common& c)
{
    TowerOptions opt;
    opt.branch_cap = c.branch_cap;
    opt.dim_budget = c.dim_budget;
    if (c.jobs > 0)
        worker_override() = static_cast<unsigned>(c.jobs);
    return opt;
}

std::vector<int> parse_ints(const std::string& s) { return parse_word(s); }

int cmd_coh(const Common& c, const std::string& word_s, const std::string& seed, std::optional<int> degree)
{
    RootSystem sys = root_system_from_tag(c.sys);
    WeylWord word = parse_word(word_s);
    CohProfile p = seeded_coh(sys, word, seed, tower_options(c));
    if (c.format == "json") {
        Json j = to_json(p);
        j["sys"] = sys.series;
        if (degree)
            j["selected"] = {{"degree", *degree}, {"character", to_json(p.degree_character(*degree))}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << sys.series << " word " << (word.empty() ? "e" : word_to_string(word)) << " seed " << seed
                  << "\n";
        if (degree) {
            std::cout << "H^" << *degree << ": " << to_string(p.degree_character(*degree)) << "\n";
        } else {
            for (int d = 0; d <= p.top_degree(); ++d)
                std::cout << "H^" << d << ": " << to_string(p.degree_character(d)) << "\n";
        }
        std::cout << "branches " << p.branches << ", extension events " << p.ambiguity_log.size()
                  << (p.ambiguous ? ", AMBIGUOUS" : "") << (p.branch_cap_hit ? ", branch cap hit" : "") << "\n";
    }
    return p.ambiguous ? kUndecided : kOk;
}

void print_certificate(const Certificate& cert)
{
    std::cout << "verdict: " << to_string(cert.kind) << "\n";
    if (cert.kind == Certificate::Kind::Nonrigid) {
        std::cout << "certificate at prefix r=" << cert.prefix << ":\n";
        for (const auto& w : cert.witnesses)
            std::cout << "  mu=" << to_string(w.weight) << " dim H^1=" << w.a1 << " > bound " << w.bound << "\n";
    } else if (cert.kind == Certificate::Kind::Undecided) {
        for (const auto& w : cert.open_weights)
            std::cout << "  open: " << to_string(w) << "\n";
    }
    for (const auto& line : cert.trace)
        std::cout << "  " << line << "\n";
}

int cmd_rigidity(const Common& c, const std::string& coxeter, const std::string& word_s, const std::string& expect,
                 bool series)
{
    RootSystem sys = root_system_from_tag(c.sys);
    WeylWord word;
    if (!coxeter.empty())
        word = w0_expression_from_coxeter(sys, coxeter_from_decreasing_seq(sys, parse_ints(coxeter)));
    else
        word = parse_word(word_s);
    RigidityReport rep = rigidity_verdict(sys, word, tower_options(c));
    if (c.format == "json") {
        Json j = to_json(rep, series);
        j["sys"] = sys.series;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << sys.series << " word " << word_to_string(word) << "\n";
        print_certificate(rep.certificate);
        std::cout << "ambiguous profiles " << rep.ambiguous_profiles << ", time " << std::fixed
                  << std::setprecision(3) << rep.seconds << " s\n";
    }
    if (rep.verdict() == Certificate::Kind::Undecided)
        return kUndecided;
    if (!expect.empty() && kind_from_string(expect) != rep.verdict())
        return kError;
    return kOk;
}

int cmd_classify(const Common& c)
{
    RootSystem sys = root_system_from_tag(c.sys);
    auto rows = classify(sys, tower_options(c));
    bool undecided = false;
    Json out = Json::array();
    for (const auto& row : rows) {
        undecided = undecided || row.verdict == Certificate::Kind::Undecided;
        if (c.format == "json") {
            Json j = {{"seq", row.seq}, {"coxeter", row.coxeter}, {"verdict", to_string(row.verdict)}};
            if (row.report)
                j["certificate"] = to_json(row.report->certificate);
            out.push_back(j);
            continue;
        }
        std::string seq;
        for (int s : row.seq)
            seq += (seq.empty() ? "" : ",") + std::to_string(s);
        std::cout << std::left << std::setw(10) << seq << " c=" << std::setw(10) << word_to_string(row.coxeter)
                  << " " << to_string(row.verdict);
        if (row.report && row.verdict == Certificate::Kind::Nonrigid && !row.report->certificate.witnesses.empty())
            std::cout << " (r=" << row.report->certificate.prefix
                      << ", mu=" << to_string(row.report->certificate.weight()) << ")";
        std::cout << "\n";
    }
    if (c.format == "json")
        std::cout << out.dump(2) << "\n";
    return undecided ? kUndecided : kOk;
}

int cmd_verify(const Common& c, const std::string& path, const std::string& only, bool fail_on_disputed)
{
    auto all = load_fixtures(path);
    auto selected = select_fixtures(all, only);
    if (selected.empty()) {
        std::cerr << "no fixtures selected\n";
        return kError;
    }
    auto results = run_fixtures(selected, tower_options(c));
    int pass = 0, fail = 0, disputed = 0;
    Json out = Json::array();
    for (std::size_t k = 0; k < selected.size(); ++k) {
        const auto& f = selected[k];
        const auto& r = results[k];
        std::string status = r.pass ? "PASS" : (f.disputed ? "DISPUTED-MISMATCH" : "FAIL");
        if (r.pass)
            ++pass;
        else if (f.disputed)
            ++disputed;
        else
            ++fail;
        if (c.format == "json") {
            Json j = {{"id", f.id}, {"status", status}, {"disputed", f.disputed}, {"ambiguous", r.ambiguous},
                      {"seconds", r.seconds}};
            if (!r.pass) {
                j["got_degree"] = r.got_degree;
                j["got"] = to_json(r.got);
                j["expected"] = to_json(f.expected);
            }
            if (!r.error.empty())
                j["error"] = r.error;
            out.push_back(j);
            continue;
        }
        std::cout << status << " " << f.id;
        if (!r.pass) {
            if (!r.error.empty())
                std::cout << ": error " << r.error;
            else
                std::cout << ": H^" << r.got_degree << " = " << to_string(r.got) << ", expected "
                          << to_string(f.expected) << (r.ambiguous ? " (ambiguous)" : "");
        }
        std::cout << "\n";
    }
    if (c.format == "json")
        std::cout << Json({{"results", out}, {"checked", selected.size()}, {"passed", pass}, {"failed", fail},
                           {"disputed_mismatches", disputed}})
                         .dump(2)
                  << "\n";
    else
        std::cout << selected.size() << " checked: " << pass << " passed, " << fail << " failed, " << disputed
                  << " disputed mismatches\n";
    if (fail > 0 || (fail_on_disputed && disputed > 0))
        return kError;
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology of tangent bundles on Bott-Samelson-Demazure-Hansen varieties"};
    app.require_subcommand(1);

    Common common;

    auto* coh = app.add_subcommand("coh", "cohomology of a line bundle along a word");
    add_common(coh, common);
    std::string word_s, seed = "line:0";
    std::optional<int> degree;
    coh->add_option("--word", word_s, "comma-separated simple reflection indices")->required();
    coh->add_option("--seed", seed, "tangent:k or line:c1,...,cn")->capture_default_str();
    coh->add_option("--degree", degree, "print only this degree");

    auto* rig = app.add_subcommand("rigidity", "rigidity verdict for a reduced word of w_0");
    add_common(rig, common);
    std::string coxeter, rword, expect;
    bool series = false;
    auto* cox_opt = rig->add_option("--coxeter", coxeter, "decreasing sequence a_1,...,a_k ending at 1");
    auto* word_opt = rig->add_option("--word", rword, "reduced word of w_0");
    cox_opt->excludes(word_opt);
    rig->add_option("--expect", expect, "expected verdict; a mismatch exits 1")
        ->check(CLI::IsMember({"Rigid", "Nonrigid"}));
    rig->add_flag("--series", series, "include the relative tangent profiles in JSON output");

    auto* cls = app.add_subcommand("classify", "verdicts for every Coxeter normal form");
    add_common(cls, common);

    auto* ver = app.add_subcommand("verify", "check the fixture corpus");
    add_common(ver, common);
    std::string fixtures = default_fixture_path(), only;
    bool fail_on_disputed = false;
    ver->add_option("--fixtures", fixtures, "JSON-lines fixture file")->capture_default_str();
    ver->add_option("--only", only, "select fixtures whose id starts with this text");
    ver->add_flag("--fail-on-disputed", fail_on_disputed, "treat disputed mismatches as failures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (*coh)
            return cmd_coh(common, word_s, seed, degree);
        if (*rig) {
            if (coxeter.empty() && rword.empty()) {
                std::cerr << "rigidity: give --coxeter or --word\n";
                return kError;
            }
            return cmd_rigidity(common, coxeter, rword, expect, series);
        }
        if (*cls)
            return cmd_classify(common);
        if (*ver)
            return cmd_verify(common, fixtures, only, fail_on_disputed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
