#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bgaps/pipeline/claims.hpp"

namespace bgaps::pipeline {

using Claim = std::variant<DHLClaim, HmClaim>;

// Line-oriented key=value blocks, one per claim in input order, exact rationals as p/q.
std::string emit_report(const std::vector<Claim>& claims);
// Inverse of emit_report; throws std::invalid_argument on malformed input.
std::vector<Claim> parse_report(std::string_view text);

struct AuditResult {
  std::size_t claims = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};
AuditResult audit_report(std::string_view text);

}  // namespace bgaps::pipeline
