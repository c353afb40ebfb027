#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdslab::cli {

/// Exit codes: 0 expected verdict, 1 verified counterexample or witness,
/// 2 usage or input error, 3 budget exceeded.
inline constexpr int kExpected = 0;
inline constexpr int kWitness = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

/// Runs one command; `args` excludes the program name. The report (or a JSON
/// error object) goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace mdslab::cli
