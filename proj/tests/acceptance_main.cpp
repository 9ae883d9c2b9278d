// Acceptance runner: executes every validation check and prints one
// pass/fail line per check. Exit status 0 iff everything passed.

#include <cstdio>
#include <cstring>
#include <string>

#include "qsr/repro.hpp"

int main(int argc, char** argv) {
    qsr::ReproOptions opts;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = argv[++i];
        } else if (std::strcmp(argv[i], "--bench-seeds") == 0 && i + 1 < argc) {
            opts.bench_seeds = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--sweep-trajectories") == 0 && i + 1 < argc) {
            opts.sweep_trajectories = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--list") == 0) {
            for (const auto& name : qsr::repro_check_names()) std::puts(name.c_str());
            return 0;
        } else {
            std::fprintf(stderr,
                         "usage: %s [--only CHECK] [--list] [--bench-seeds N] "
                         "[--sweep-trajectories N]\n",
                         argv[0]);
            return 2;
        }
    }

    int failures = 0;
    auto print = [&failures](const qsr::CheckResult& r) {
        std::printf("[%s] %-30s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failures;
    };

    if (!only.empty()) {
        print(qsr::run_repro_check(only, opts));
    } else {
        qsr::run_repro_checks(opts, print);
    }
    if (failures > 0) std::printf("%d check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
