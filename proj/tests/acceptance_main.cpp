// Runs the full acceptance checklist and prints one line per criterion.

#include "wfusion/verify.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv)
{
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    auto results = wfusion::verify::run_all(quick);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name
                  << ": " << r.detail << "\n";
        ok = ok && r.pass;
    }
    std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
    return ok ? 0 : 1;
}
