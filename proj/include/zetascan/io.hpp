#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zetascan/formula.hpp"
#include "zetascan/scan.hpp"

namespace zetascan {

// Zero-table text format: one ordinate per line, '#' comment lines and blank
// lines ignored. Entries must be positive and strictly increasing; parse and
// ordering errors name the offending line.
ZeroTable read_zero_table(const std::string& path);
ZeroTable read_zero_table(std::istream& in, const std::string& name);
void write_zero_table(std::ostream& os, const std::vector<double>& gammas,
                      const std::string& header_comment);

// Shortest decimal with up to 12 significant digits, locale-independent.
std::string format_sig12(double v);

// CSV schemas; 12 significant digits, LF line endings, deterministic bytes.
void write_profile_csv(std::ostream& os, const ScanProfile& profile);
void write_candidates_csv(std::ostream& os,
                          const std::vector<ZeroCandidate>& candidates);

}  // namespace zetascan
