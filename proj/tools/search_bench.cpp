// Compares the serial reference search harness against the OpenMP-sharded
// one: identical verdicts required, wall time reported for both.

#include "claims/axioms.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace claims;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const long budget = argc > 1 ? std::atol(argv[1]) : 2000;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (no OpenMP)\n";
#endif
    std::cout << "budget per case: " << budget << "\n\n";

    const OperatorHandle phi = operator_phi();
    const Axiom axioms[] = {Axiom::ResourceMonotonicity, Axiom::OrderGains,
                            Axiom::Securement, Axiom::ScaleInvariance};

    bool agree = true;
    for (const RuleHandle& rule : classical_rules()) {
        for (Axiom axiom : axioms) {
            CheckResult serial, parallel;
            const double t_serial = time_ms([&] {
                serial = search_counterexample_serial(axiom, rule, &phi,
                                                      budget, seed);
            });
            const double t_parallel = time_ms([&] {
                parallel =
                    search_counterexample(axiom, rule, &phi, budget, seed);
            });
            const bool same = serial.holds == parallel.holds &&
                              serial.trial == parallel.trial;
            agree = agree && same;
            std::cout << rule.name << " / " << axiom_name(axiom)
                      << ": serial " << t_serial << " ms, parallel "
                      << t_parallel << " ms, speedup "
                      << (t_parallel > 0 ? t_serial / t_parallel : 0.0)
                      << (same ? "" : "  [MISMATCH]") << "\n";
        }
    }
    std::cout << "\nverdict agreement: " << (agree ? "yes" : "NO") << "\n";
    return agree ? 0 : 1;
}
