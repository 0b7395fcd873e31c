// Acceptance runner: one line per criterion on stdout, timings on stderr.
// Exits nonzero on any unexpected outcome, including an expected failure
// that starts passing.
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "heyting/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : heyting::kDefaultSeed;
  int unexpected = 0;
  heyting::run_acceptance(seed, [&](const heyting::CriterionResult& r) {
    std::cout << heyting::format_result(r) << std::endl;
    std::cerr << "criterion " << r.id << " time " << std::fixed << std::setprecision(3) << r.seconds
              << " s" << std::endl;
    if (r.passed == heyting::expected_failure(r.id)) ++unexpected;
  });
  std::cout << (unexpected == 0 ? "acceptance: all outcomes as expected" : "acceptance: unexpected outcomes")
            << std::endl;
  return unexpected == 0 ? 0 : 1;
}
