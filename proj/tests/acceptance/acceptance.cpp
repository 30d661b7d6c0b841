// One PASS/FAIL line per acceptance criterion, aggregated from the verification matrix.
#include <iostream>

#include <CLI11.hpp>

#include <opspec/verify.hpp>

using namespace opspec;

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    std::string budget = "default";
    int threads = 1;
    app.add_option("--criterion", only, "run a single criterion (1..13)")->check(CLI::Range(1, 13));
    app.add_option("--budget", budget, "small | default | large")->check(CLI::IsMember({"small", "default", "large"}));
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    VerifyConfig cfg;
    cfg.budget = parse_budget(budget);
    cfg.threads = threads;
    // check groups are listed in criterion order
    const auto& groups = check_groups();
    if (only) cfg.groups = {groups.at(only - 1)};
    const auto m = verify_paper(cfg);

    bool ok = true;
    for (int k = 1; k <= 13; ++k) {
        if (only && k != only) continue;
        int pass = 0, fail = 0, skipped = 0;
        std::string first_failure;
        for (const auto& c : m.checks) {
            if (c.criterion() != k) continue;
            if (c.status == Status::pass) ++pass;
            if (c.status == Status::skipped) ++skipped;
            if (c.status == Status::fail) {
                ++fail;
                if (first_failure.empty())
                    first_failure = c.id + " expected " + c.expected.dump() + " observed " + c.observed.dump() +
                                    (c.note.empty() ? "" : " (" + c.note + ")");
            }
        }
        const bool passed = fail == 0 && pass > 0;
        ok &= passed;
        std::cout << (passed ? "PASS" : "FAIL") << " AC" << (k < 10 ? "0" : "") << k << " " << groups[k - 1] << ": "
                  << pass << " passed, " << fail << " failed, " << skipped << " skipped";
        if (!first_failure.empty()) std::cout << "; " << first_failure;
        std::cout << "\n";
    }
    return ok ? 0 : 1;
}
