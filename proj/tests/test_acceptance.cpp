#include <cstdlib>
#include <iostream>

#include "grady/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240611;
  std::size_t failed = 0;
  auto results = grady::run_acceptance(seed, [&](const grady::CriterionResult& r) {
    std::cout << grady::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  });
  double total = 0;
  for (const auto& r : results) total += r.seconds;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed in " << total << " s\n";
  return failed ? 1 : 0;
}
