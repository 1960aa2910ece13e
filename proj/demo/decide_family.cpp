// Minimal library walkthrough: build one triple from each counterexample
// family, decide it, and print the verdict with its certificate.
#include <iostream>

#include "pcode/presets.hpp"

int main() {
    using namespace pcode;
    for (const char* spec : {"dihedral:1", "fieldc2:2", "agammal:3,3", "symchain:1,2,4"}) {
        TripleSpec triple = parse_family(spec);
        Verdict v = decide_pair(triple.instance);
        std::cout << triple.spec_string() << ": |G| = " << triple.instance.G.order()
                  << ", |A| = " << triple.instance.A.order()
                  << ", |H| = " << triple.instance.H.order() << " -> " << status_name(v.status)
                  << " via " << v.reason << "\n";
        if (!v.witness.empty() && v.witness.size() <= 8) {
            std::cout << "  witness:";
            for (const auto& x : v.witness) std::cout << ' ' << x.to_cycle_string();
            std::cout << "\n";
        }
        for (const auto& cert : v.certificates) std::cout << "  - " << cert << "\n";
    }
    return 0;
}
