#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercalc {

/// Runs one hypercalc command line. args[0] is the program name. Exit codes:
/// 0 success or Holds, 1 Refuted / NoLimit / NoDerivative / false, 2 usage or
/// rejected input, 3 precision, domain or undecidable outcomes (Inconclusive
/// included).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercalc
