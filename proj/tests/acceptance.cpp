// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any fails. An optional argument caps the graph size for a quick run.
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <reorilat/acceptance.hpp>

using namespace reorilat;

int main(int argc, char** argv) {
  AcceptanceRun run;
  if (argc > 1) {
    run.scales = Scales::capped(std::atoi(argv[1]));
  }
  run.jobs = std::max(1U, std::thread::hardware_concurrency());
  std::cout << "time limits: lattice " << budget::kLatticeSeconds << "s, quotientope "
            << budget::kQuotientopeSeconds << "s, hamilton " << budget::kHamiltonSeconds
            << "s; weight seeds " << budget::kWeightSeeds << "\n";
  auto results = run_acceptance(run, [](CriterionResult const& r) { std::cout << format_result(r) << std::endl; });
  int failed = 0;
  for (auto const& r : results) {
    failed += !r.pass;
  }
  std::cout << results.size() - failed << " of " << results.size() << " criteria pass\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
