// Runs every acceptance criterion, one line per criterion, and fails the
// process if any of them fails.

#include <cstdio>
#include <cstdlib>

#include "cubical/verify.hpp"

int main(int argc, char** argv) {
    cubical::VerifyConfig cfg;
    if (argc > 1) cfg.seed = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));
    std::vector<int> ids;
    for (auto& [id, fn] : cubical::all_checks()) ids.push_back(id);
    const auto results = cubical::run_checks(ids, cfg);
    int failed = 0;
    for (auto& r : results) {
        std::printf("%s criterion %2d: %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str());
        failed += r.pass ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}
