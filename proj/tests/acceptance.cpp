// Runs the nine reference checks and prints one PASS/FAIL line each.
// Exit status 0 iff all nine hold.
#include <cstdio>
#include <iostream>

#include "totient/claims.hpp"

int main() {
    const auto results = totient::run_reference_checks();
    std::size_t passed = 0;
    for (const auto& r : results) {
        std::cout << r.id << " " << (r.pass ? "PASS" : "FAIL") << " " << r.title << ": "
                  << r.detail << "\n";
        if (r.pass) ++passed;
    }
    std::cout << "RESULT " << (passed == results.size() ? "PASS" : "FAIL") << " " << passed << "/"
              << results.size() << "\n";
    return passed == results.size() ? 0 : 1;
}
