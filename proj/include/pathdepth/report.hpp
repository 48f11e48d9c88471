#pragma once

// Structured pass/fail records for formula-versus-engine comparisons.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace pathdepth {

struct ClaimParams {
  std::optional<long> n;
  std::optional<long> t;
  std::optional<long> trial;
  std::optional<std::string> field;
  std::string detail;

  nlohmann::json to_json() const;
  friend bool operator<(const ClaimParams& a, const ClaimParams& b);
  friend bool operator==(const ClaimParams&, const ClaimParams&) = default;
};

/// One comparison. pass is always (expected == computed).
struct ClaimCheck {
  ClaimCheck(std::string id, ClaimParams params, nlohmann::json expected, nlohmann::json computed);

  std::string id;
  ClaimParams params;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass;
};

struct VerificationReport {
  nlohmann::json config = nlohmann::json::object();
  std::vector<ClaimCheck> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
  /// by (id, params)
  void sort();

  /// {"config": ..., "checks": [...], "summary": {"pass": p, "fail": f}}
  nlohmann::json to_json() const;
  void print_table(std::ostream& out) const;
};

}  // namespace pathdepth
