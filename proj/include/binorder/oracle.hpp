#pragma once

// Ground truth for the order bounds: exact multiplicative orders in F_{q^m}^*,
// independent order certificates, per-instance verification reports and scans.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "binorder/counting.hpp"
#include "binorder/error.hpp"
#include "binorder/extension_field.hpp"
#include "binorder/integers.hpp"
#include "binorder/parameters.hpp"
#include "json.hpp"

namespace binorder {

/// Phi_d(q), the d-th cyclotomic polynomial evaluated at q.
mpz_class cyclotomic_value(std::uint64_t q, std::uint64_t d);

/// Factorization of q^m - 1 assembled from its cyclotomic factors Phi_d(q), d | m.
/// The size cap in `options` applies to each cyclotomic factor.
Factorization group_order_factorization(std::uint64_t q, std::uint64_t m, const FactorOptions& options = {});

/// Exact multiplicative order of x in F_q[x]/(x^m - a). Requires x^{q^m - 1} = 1,
/// i.e. a field and x != 0; throws ZeroElement / InvalidArgument otherwise.
mpz_class exact_element_order(const ExtElement& x, const FactorOptions& options = {});

/// Checks x^d = 1 and x^{d/p} != 1 for every prime p | d. Factors d directly and uses
/// its own exponentiation, sharing nothing with exact_element_order.
bool verify_order_certificate(const ExtElement& x, const mpz_class& d, unsigned cap_bits = 512);

struct OracleOptions {
  FactorOptions factor;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  std::uint64_t lemma6_budget = 10'000'000;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string note;  ///< reason for Skipped / Fail
  double seconds = 0.0;
};

// Check names, in report order.
inline constexpr const char* kCheckLemma2Subgroup = "lemma2_subgroup";
inline constexpr const char* kCheckLemma3Order = "lemma3_order";
inline constexpr const char* kCheckTheorem4Distinct = "theorem4_distinct";
inline constexpr const char* kCheckTheorem4Orbit = "theorem4_orbit";
inline constexpr const char* kCheckLemma6 = "lemma6_no_counterexample";
inline constexpr const char* kCheckTheorem7Distinct = "theorem7_distinct";
inline constexpr const char* kCheckOrderCertificate = "order_certificate";
inline constexpr const char* kCheckLemma5Holds = "lemma5_holds";
inline constexpr const char* kCheckTheorem7Order = "theorem7_order";
inline constexpr const char* kCheckCase1Dominates = "case1_bound_dominates";
inline constexpr const char* kCheckTheorem1Holds = "theorem1_holds";

struct VerificationReport {
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  std::uint64_t b = 0;
  std::optional<ExtensionSpec> spec;
  std::optional<BoundReport> bounds;
  mpz_class exact_order;
  mpz_class group_order;
  std::optional<std::uint64_t> theorem7_count;
  std::vector<CheckResult> checks;
  /// Set when the instance could not be verified (scan rows keep going).
  std::optional<ErrorKind> error_kind;
  std::string error_message;

  const CheckResult* check(const std::string& name) const;
  /// No error and no failed check; skipped checks do not count as failures.
  bool all_checks_pass() const;
};

/// Builds the spec for (q, m, b) and runs every check. Spec construction errors propagate;
/// so do factorization cap errors for the exact order.
VerificationReport verify_instance(std::uint64_t q, std::uint64_t m, std::uint64_t b,
                                   const OracleOptions& options = {},
                                   std::optional<std::uint64_t> a_override = std::nullopt);

enum class BRule { One, All };

struct ScanOptions {
  std::vector<std::uint64_t> q_set;
  std::uint64_t m_max = 0;
  BRule b_rule = BRule::One;
  bool include_degenerate = false;
  unsigned threads = 1;
  OracleOptions oracle;
};

struct ScanInstance {
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  std::uint64_t b = 0;
};

/// Instances in (q, m, b) order: m in [2, m_max] with an irreducible binomial, excluding
/// m | q - 1 unless include_degenerate. Throws InvalidArgument for q not a prime >= 5.
std::vector<ScanInstance> scan_instances(const ScanOptions& options);

/// Verifies every instance, possibly on several threads, and emits reports in instance order.
/// Per-instance errors are recorded in the report.
void scan(const ScanOptions& options, const std::function<void(const VerificationReport&)>& emit);

/// Canonical JSON, fixed key order, unbounded integers as decimal strings. No timings.
nlohmann::ordered_json to_json(const VerificationReport& report);

std::string csv_header();
std::string to_csv_row(const VerificationReport& report);

}  // namespace binorder
