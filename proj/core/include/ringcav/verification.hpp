#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ringcav::verification {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

CriterionResult polariton_formula();
CriterionResult degeneracy_count(std::size_t workers = 0);
CriterionResult spin_grouping();
CriterionResult entangled_transfer();
CriterionResult detuning_gate(std::size_t workers = 0);
CriterionResult remote_transfer();
CriterionResult stirap(std::size_t workers = 0);
CriterionResult multi_excitation();
CriterionResult effective_coupling_nulls();
CriterionResult platform_calculator();
CriterionResult numerical_hygiene(std::size_t workers = 0);

/// Runs every criterion in order; `on_result` sees each as it finishes.
std::vector<CriterionResult> run_acceptance_suite(
    std::size_t workers = 0,
    const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result_line(const CriterionResult& result);

}  // namespace ringcav::verification
