#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "ringcav/verification.hpp"

namespace rv = ringcav::verification;

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  using Criterion = rv::CriterionResult (*)();
  const std::pair<int, Criterion> table[] = {
      {1, &rv::polariton_formula},
      {2, [] { return rv::degeneracy_count(); }},
      {3, &rv::spin_grouping},
      {4, &rv::entangled_transfer},
      {5, [] { return rv::detuning_gate(); }},
      {6, &rv::remote_transfer},
      {7, [] { return rv::stirap(); }},
      {8, &rv::multi_excitation},
      {9, &rv::effective_coupling_nulls},
      {10, &rv::platform_calculator},
      {11, [] { return rv::numerical_hygiene(); }},
  };

  int passed = 0;
  int total = 0;
  for (const auto& [id, fn] : table) {
    if (!only.empty() && !only.count(id)) continue;
    const auto result = fn();
    std::cout << rv::format_result_line(result) << std::endl;
    ++total;
    passed += result.passed ? 1 : 0;
  }
  std::cout << passed << "/" << total << " criteria passed" << std::endl;
  return passed == total ? EXIT_SUCCESS : EXIT_FAILURE;
}
