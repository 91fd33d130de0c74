#pragma once

#include "rao/report.hpp"

#include <string>
#include <vector>

namespace rao {

// Suite names accepted by run_suite, excluding the "all" aggregate.
const std::vector<std::string>& suite_names();

// Module operations each suite exercises, for the coverage check.
std::vector<std::string> suite_coverage(const std::string& name);
const std::vector<std::string>& all_operations();

// Deterministic given (name, params, seed). Unknown names throw
// std::invalid_argument.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace rao
