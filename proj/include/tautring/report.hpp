#ifndef TAUTRING_REPORT_HPP
#define TAUTRING_REPORT_HPP

#include <string>
#include <vector>

#include "tautring/rank_checks.hpp"
#include "tautring/socle.hpp"

namespace tautring {

/* CSV with exact "p/q" entries, first row the column labels. */
std::string matrix_csv(const PairingMatrix& m);
/* {"n": .., "labels": [..], "entries": [[..]]}, rationals as strings. */
std::string matrix_json(const PairingMatrix& m);

std::string report_json(const std::vector<CheckResult>& checks);
std::string report_csv(const std::vector<CheckResult>& checks);
std::string report_text(const std::vector<CheckResult>& checks);

std::string ranks_csv(int g, int n_lo, int n_hi);
std::string ranks_json(int g, int n_lo, int n_hi);

}  // namespace tautring

#endif
