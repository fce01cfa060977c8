#pragma once

// Claim audits: each claim recomputes a stated value with the oracles and
// records expected, observed and a verdict.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtl/json_io.hpp"
#include "rtl/resolution.hpp"
#include "rtl/semantics.hpp"

namespace rtl {

enum class Verdict { match, mismatch, informational };

const char* to_string(Verdict v);

struct ClaimResult {
  std::string id;
  std::string statement;
  Json expected;
  Json observed;
  Json details;
  Verdict verdict = Verdict::informational;
  std::optional<double> runtime_ms;
};

struct AuditOptions {
  std::uint64_t seed = 0;
  bool timings = false;
  EnumerationLimits limits;
  ClosureOptions closure;
};

struct AuditReport {
  std::uint64_t seed = 0;
  std::vector<ClaimResult> claims;

  /// No selected claim is a mismatch.
  bool all_match() const;
};

/// Stable claim identifiers in report order.
const std::vector<std::string>& claim_ids();

/// Locked sizes of the RCNF encoding of m1 (variables, clauses).
inline constexpr std::size_t kM1RcnfVariables = 664;
inline constexpr std::size_t kM1RcnfClauses = 88762;

/// Runs the named claims in registry order; "all" selects every claim.
/// Throws UsageError for unknown identifiers.
AuditReport run_audit(const std::vector<std::string>& ids, const AuditOptions& opts = {});

/// {"schema": 1, "seed": ..., "claims": [...], "summary": {...}}
Json to_json(const AuditReport& r);

}  // namespace rtl
