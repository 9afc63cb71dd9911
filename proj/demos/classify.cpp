// Rigidity verdicts for every Coxeter normal form in G2 and F4.
#include "bsdh/rigidity.hpp"

#include <iostream>

using namespace bsdh;

int main()
{
    for (const char* tag : {"G2", "F4"}) {
        RootSystem sys = root_system_from_tag(tag);
        for (const auto& row : classify(sys)) {
            std::cout << tag << " c=" << word_to_string(row.coxeter) << "  " << to_string(row.verdict);
            if (row.report && row.verdict == Certificate::Kind::Nonrigid)
                std::cout << "  (r=" << row.report->certificate.prefix
                          << ", mu=" << to_string(row.report->certificate.weight()) << ")";
            std::cout << "\n";
        }
    }
}
