// One PASS/FAIL line per acceptance criterion; exit status 1 if any line fails.
#include "properties.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace bsdh;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void report(const std::string& label, bool ok, const std::string& detail, double secs)
{
    if (!ok)
        ++failures;
    std::cout << (ok ? "PASS " : "FAIL ") << label << ": " << detail << " [" << std::fixed << std::setprecision(2)
              << secs << " s]" << std::endl;
}

void run(const std::string& label, const std::function<std::pair<bool, std::string>()>& body)
{
    auto t = std::chrono::steady_clock::now();
    try {
        auto [ok, detail] = body();
        report(label, ok, detail, seconds_since(t));
    } catch (const std::exception& e) {
        report(label, false, std::string("exception: ") + e.what(), seconds_since(t));
    }
}

std::pair<bool, std::string> verdict(const props::Outcome& o) { return {o.ok(), o.summary()}; }

bool has_witness(const Certificate& c, const Weight& mu)
{
    for (const auto& w : c.witnesses)
        if (w.weight == mu)
            return true;
    return false;
}

} // namespace

int main()
{
    RootSystem f4 = root_system_from_tag("F4");
    RootSystem g2 = root_system_from_tag("G2");

    std::vector<FixtureRecord> fixtures;
    std::vector<FixtureResult> results;
    run("1 fixtures", [&] {
        auto t = std::chrono::steady_clock::now();
        fixtures = load_fixtures(default_fixture_path());
        results = run_fixtures(fixtures);
        double secs = seconds_since(t);
        int pass = 0, fail = 0;
        std::string disputed;
        for (std::size_t k = 0; k < fixtures.size(); ++k) {
            if (results[k].pass)
                ++pass;
            else if (fixtures[k].disputed)
                disputed += (disputed.empty() ? "" : "; ") + fixtures[k].id;
            else
                ++fail;
        }
        std::string d = std::to_string(fixtures.size()) + " fixtures, " + std::to_string(pass) + " reproduced, " +
                         std::to_string(fail) + " failed";
        if (!disputed.empty())
            d += ", disputed mismatches reported: " + disputed;
        return std::pair{fail == 0 && secs < 10.0, d};
    });

    std::vector<ClassificationRow> f4_rows;
    run("2 F4 classification", [&] {
        auto t = std::chrono::steady_clock::now();
        f4_rows = classify(f4);
        double secs = seconds_since(t);
        int rigid = 0, nonrigid_321 = 0, other = 0;
        for (const auto& r : f4_rows) {
            if (r.verdict == Certificate::Kind::Rigid)
                ++rigid;
            else if (r.verdict == Certificate::Kind::Nonrigid && r.seq == std::vector<int>{3, 2, 1})
                ++nonrigid_321;
            else
                ++other;
        }
        return std::pair{rigid == 7 && nonrigid_321 == 1 && other == 0 && f4_rows.size() == 8 && secs < 300.0,
                         std::to_string(rigid) + " Rigid, (3,2,1) " + (nonrigid_321 ? "Nonrigid" : "not Nonrigid") +
                             ", " + std::to_string(other) + " other"};
    });

    std::vector<ClassificationRow> g2_rows;
    run("3 G2 certificates", [&] {
        g2_rows = classify(g2);
        Weight target = simple_root(g2, 1) + simple_root(g2, 2);
        bool ok = g2_rows.size() == 2;
        std::string d;
        for (const auto& r : g2_rows) {
            int want = r.coxeter == WeylWord{1, 2} ? 2 : 3;
            const Certificate& c = r.report->certificate;
            bool row_ok = r.verdict == Certificate::Kind::Nonrigid && c.prefix == want && has_witness(c, target);
            ok = ok && row_ok;
            d += (d.empty() ? "" : "; ") + std::string("(") + word_to_string(r.coxeter) + ")^3 " + to_string(r.verdict) +
                 " r=" + std::to_string(c.prefix) + (has_witness(c, target) ? " with" : " without") +
                 " alpha1+alpha2";
        }
        return std::pair{ok, d};
    });

    run("4 ledger checks", [&] {
        const ClassificationRow* row = nullptr;
        for (const auto& r : f4_rows)
            if (r.seq == std::vector<int>{1})
                row = &r;
        if (!row || !row->report)
            return std::pair{false, std::string("no (1,2,3,4)^6 report")};
        const DimLedger& L = row->report->ledger;
        auto h0 = [&](int r, const Weight& mu) {
            int k = L.weight_index(mu);
            return k < 0 ? Interval{0, 0} : L.h0[r][k];
        };
        Weight om4 = fundamental_weight(f4, 4);
        bool tau4 = h0(17, -om4) == Interval{2, 2};
        bool tau3 = h0(13, -om4 + simple_root(f4, 4)) == Interval{2, 2};
        bool top = h0(24, zero_weight(f4)) == Interval{4, 4};
        for (const auto& b : f4.positive_roots)
            top = top && h0(24, -b) == Interval{1, 1};
        return std::pair{tau4 && tau3 && top, std::string("tau4 -omega4: ") + (tau4 ? "2" : "wrong") +
                                                  ", tau3 -omega4+alpha4: " + (tau3 ? "2" : "wrong") +
                                                  ", w0 negative roots 1 and weight 0 at 4: " + (top ? "yes" : "no")};
    });

    run("5a Euler identity", [&] { return verdict(props::euler_identity(500, 8, 2)); });
    run("5b BBW G2", [&] { return verdict(props::bbw_agreement("G2", 100, 4, 0)); });
    run("5b BBW F4 (tower dimension budget 500)", [&] { return verdict(props::bbw_agreement("F4", 100, 4, 500)); });
    run("5c chain decomposition vs Jordan type", [&] { return verdict(props::chain_oracle(200, 8)); });
    run("5d step H^1 vanishing on fixture H^0", [&] { return verdict(props::h1_vanishing_on_fixtures(fixtures, results)); });
    run("5d alpha3 line has no H^1", [&] { return verdict(props::short_root_vanishing()); });
    run("5d no degree >= 2", [&] {
        auto rows = f4_rows;
        rows.insert(rows.end(), g2_rows.begin(), g2_rows.end());
        return verdict(props::higher_degree_vanishing(results, rows));
    });
    run("5e case splits never change fixture characters", [&] {
        int events = 0;
        auto o = props::case_split_safety(fixtures, results, &events);
        return std::pair{o.ok(), o.summary() + ", " + std::to_string(events) + " split events"};
    });

    run("6 c^(h/2) = w0 reduced", [&] {
        bool ok = true;
        for (const auto& [sys, half] : {std::pair{f4, 6}, std::pair{g2, 3}})
            for (const auto& f : enumerate_coxeter_normal_forms(sys)) {
                WeylWord w = power(f.word, half);
                ok = ok && is_reduced(sys, w) && element_of(sys, w) == longest_element(sys);
            }
        return std::pair{ok, std::string("all F4 and G2 Coxeter normal forms")};
    });
    run("6 h(i,c)", [&] {
        bool ok = true;
        for (const auto& [sys, h] : {std::pair{f4, 6}, std::pair{g2, 3}})
            for (const auto& f : enumerate_coxeter_normal_forms(sys))
                for (int i = 1; i <= sys.rank; ++i)
                    ok = ok && coxeter_exponent(sys, f.word, i) == h;
        return std::pair{ok, std::string("6 for F4, 3 for G2")};
    });
    run("6 |W(F4)|", [&] {
        auto n = enumerate_group(f4).size();
        return std::pair{n == 1152, std::to_string(n)};
    });

    std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " failing criteria" << std::endl;
    return failures ? 1 : 0;
}
