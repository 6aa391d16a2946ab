#pragma once

// Self-check runner: every structural identity the library relies on,
// evaluated exactly for one (N, K) up to a strand bound.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hsk/category.hpp"
#include "hsk/json_io.hpp"

namespace hsk {

enum class CheckStatus { pass, fail, skip };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string section;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string details;
  double seconds = 0;
};

// Sections, in run order:
//   scalar diagrams convention young orthogonality markov radical blocks
//   fusion modular mf skein
const std::vector<std::string>& verify_sections();

struct VerifyOptions {
  int max_n = 4;
  std::uint64_t seed = 1;
  // Empty means all sections.
  std::set<std::string> sections;
  // Random samples per randomized identity.
  int samples = 20;
};

struct VerifyReport {
  Params params;
  int max_n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  int count(CheckStatus s) const;
};

// Throws UsageError when max_n is outside [1, ctx.gram_limit()] or a section
// name is unknown. Check failures, including exceptions thrown inside a
// check, become report entries.
VerifyReport verify(Context& ctx, const VerifyOptions& options);

// Elapsed times are written only when asked for, so reports stay
// byte-identical across runs.
Json to_json(const VerifyReport& r, bool timings = false);

}  // namespace hsk
