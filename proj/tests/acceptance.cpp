// Acceptance suite: runs every verification criterion over the bundled data
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <cstdio>
#include <string>

#include "mzeta/kodaira.hpp"
#include "mzeta/verify.hpp"

int main(int argc, char** argv) {
    std::string data_dir = argc > 1 ? argv[1] : mzeta::default_data_dir();
    auto results = mzeta::run_acceptance(data_dir);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
