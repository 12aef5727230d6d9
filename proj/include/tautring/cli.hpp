#ifndef TAUTRING_CLI_HPP
#define TAUTRING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tautring/rank_checks.hpp"
#include "tautring/ring.hpp"

namespace tautring {

/* Inverse of TautExpression::str(), e.g. "35*k2 - 6*k1*p1 + 3/2*p1^2". */
TautExpression parse_expression(const std::string& text);

/* Inclusive "a..b" or single "a". */
std::pair<int, int> parse_range(const std::string& text);

/* Named verification suites backing `tautring verify <suite>`. */
std::vector<CheckResult> run_suite(const std::string& suite, int n_lo, int n_hi);
std::vector<std::string> suite_names();

/*
 * Entry point behind the binary: argv without the program name.
 * Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tautring

#endif
