// Acceptance suite: one line per criterion, PASS only when the check passes
// at its pinned default horizon and finishes within its time budget.
//
//   acceptance            run every criterion
//   acceptance <id>...    run the named criteria

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "autoseq/checks.hpp"

using namespace autoseq;

int main(int argc, char** argv) {
    const auto& catalog = check_catalog();
    std::vector<std::string> ids(argv + 1, argv + argc);
    if (ids.empty())
        for (const auto& c : catalog) ids.push_back(c.id);

    int failures = 0;
    for (const auto& id : ids) {
        std::size_t number = 0;
        for (std::size_t i = 0; i < catalog.size(); ++i)
            if (catalog[i].id == id) number = i + 1;
        if (number == 0) {
            std::fprintf(stderr, "unknown criterion \"%s\"\n", id.c_str());
            return 2;
        }
        CheckResult r;
        try {
            r = run_check(id);
        } catch (const std::exception& e) {
            std::printf("FAIL %2zu %-22s error: %s\n", number, id.c_str(), e.what());
            ++failures;
            continue;
        }
        const bool in_budget = r.elapsed_seconds < r.budget_seconds;
        const bool ok = r.status == CheckStatus::pass && in_budget;
        std::printf("%s %2zu %-22s %-7s %8.3fs / %5.0fs  horizon %zu", ok ? "PASS" : "FAIL", number, id.c_str(),
                    to_string(r.status).c_str(), r.elapsed_seconds, r.budget_seconds, r.horizon);
        if (!in_budget) std::printf("  over budget");
        std::printf("\n    %s\n", r.detail.c_str());
        if (r.mismatch) std::printf("    mismatch: %s\n", r.mismatch->c_str());
        failures += !ok;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
