#pragma once

#include <string>
#include <vector>

#include "towerlab/report.hpp"

namespace towerlab {

/// Names of the built-in verification suites, in canonical order:
/// lemma-h1, prop-uniform, counting, adem, counterexample, exponents,
/// lefschetz-signs.
std::vector<std::string> suite_names();

/// Runs one built-in suite by name; throws on unknown names.
Report run_suite(const std::string& name);

Report suite_lemma_h1();
Report suite_prop_uniform();
Report suite_counting();
Report suite_adem();
Report suite_counterexample();
Report suite_exponents();
Report suite_lefschetz_signs();

}  // namespace towerlab
