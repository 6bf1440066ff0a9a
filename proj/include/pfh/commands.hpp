#pragma once

// Command implementations behind the pfh-index tool. Each writes either
// aligned text or key=value lines and returns the process exit code.

#include <iosfwd>
#include <string>
#include <vector>

#include "pfh/session.hpp"
#include "pfh/verify.hpp"

namespace pfh {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInputError = 2 };

int run_index(const SessionFile& f, const std::string& cls, bool machine, std::ostream& out);
int run_check(const SessionFile& f, const std::string& curve, bool machine, std::ostream& out);
int run_euler(const SessionFile& f, const std::string& curve, bool machine, std::ostream& out);
int run_mcc(const SessionFile& f, const std::string& mcc, bool machine, std::ostream& out);
int run_partitions(const std::string& theta, Int m, bool machine, std::ostream& out);
int run_table(Int max_m, bool machine, std::ostream& out);
int run_verify(const SweepSpec& spec, bool machine, std::ostream& out);

/// Table cell text: comma-joined parts, with all-ones partitions of
/// length five or more shortened to "1,…,1".
std::string table_cell(const Partition& p);

/// Rows of the incoming partition table: interval label "lo,hi" followed
/// by the cells for m = 2..max_m. Requires 2 <= max_m <= 12.
std::vector<std::vector<std::string>> partition_table(Int max_m);

/// The table as printed by `table`, header line included.
std::string emit_partition_table(Int max_m);

} // namespace pfh
