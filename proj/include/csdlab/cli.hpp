#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csdlab/limits.hpp"
#include "csdlab/report.hpp"

namespace csdlab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitGuardrail = 3,
};

struct ComputeRequest {
  bool lattice = false;   // |L|, sd, ndeg, cdeg, is_iwasawa
  bool sections = false;  // csd*
  bool timing = false;    // wall_time_ms (breaks byte-identical output)
};

RunReport compute_report(const std::string& group_expr, const ComputeRequest& request,
                         const Limits& limits, unsigned jobs = 1);

struct VerifyRow {
  enum class Status { match, mismatch, skipped };
  std::string params;
  std::string formula;
  std::optional<std::string> brute;
  Status status = Status::skipped;
};

// Families: dihedral (m), quaternion (n), semidihedral (n), pgroup (range of
// group orders p^{n-1} q), ep3 (odd primes p), zq8bound (n). For zq8bound a
// row matches when the enumerated csd is at least the bound and |L_1| = 8n+2.
std::vector<VerifyRow> run_verify(const std::string& family, std::int64_t lo, std::int64_t hi,
                                  const Limits& limits, unsigned jobs = 1);

Table verify_table(const std::vector<VerifyRow>& rows);

// "a..b" or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);

// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csdlab::cli
