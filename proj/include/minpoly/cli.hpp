#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "minpoly/catalog.hpp"
#include "minpoly/polynomial.hpp"

namespace minpoly::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kFlagError = 2,
  kSizeGuard = 3,
  kIoError = 4,
};

/// Environment variable consulted for the default table limit.
inline constexpr const char* kTableLimitEnv = "MINPOLY_MAX_TABLE_SIZE";

/// Runs the command line `argv` (argv[0] is the program name). The process
/// table limit is restored before returning.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Mismatch {
  std::vector<std::uint32_t> point;
  std::uint32_t expected;
  std::uint32_t actual;
};

struct VerificationReport {
  FormulaId formula;
  std::uint64_t points_checked = 0;
  bool coefficient_match = false;
  bool function_match = false;
  std::optional<Mismatch> first_mismatch;

  bool passed() const noexcept { return coefficient_match && function_match; }
};

/// Compares `candidate` with the interpolated semantic table of `formula`,
/// coefficient by coefficient and point by point. The pointwise scan is
/// split across `threads` workers; the first mismatch in input order wins.
VerificationReport verify_polynomial(const FormulaId& formula, const Polynomial& candidate,
                                     unsigned threads = 0);

nlohmann::json to_json(const VerificationReport& report);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace minpoly::cli
