// Walks the relative tangent series of (s1 s2 s3 s4)^6 in F4 and prints each step.
#include "bsdh/coh.hpp"

#include <iostream>

using namespace bsdh;

int main()
{
    RootSystem sys = root_system_from_tag("F4");
    WeylWord word = power(WeylWord{1, 2, 3, 4}, 6);
    auto series = rel_tangent_series(sys, word);
    for (std::size_t r = 1; r <= series.size(); ++r) {
        const CohProfile& p = series[r - 1];
        std::cout << "r=" << r << " (s" << word[r - 1] << ")  dim H^0=" << p.h0.dim() << "  dim H^1=" << p.h1.dim();
        if (p.h1.dim() > 0)
            std::cout << "  H^1: " << to_string(character(p.h1));
        std::cout << "\n";
    }
}
