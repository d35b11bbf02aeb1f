#pragma once

// Registry of identity checks. Every entry builds both sides of one identity
// exactly for concrete parameter values and passes iff their difference is
// identically zero. Statements "for all n" are verified on the declared
// finite ranges.

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qabel/abel.hpp"

namespace qabel {

using Params = std::map<std::string, int>;

enum class CheckStatus { pass, fail };

struct CheckResult {
  std::string identity_id;
  Params params;
  CheckStatus status = CheckStatus::fail;
  /// Canonical rendering of the first nonzero difference; empty on pass.
  std::optional<std::string> difference;
  std::chrono::duration<double, std::milli> elapsed{};

  bool passed() const { return status == CheckStatus::pass; }
};

enum class ParamKind {
  degree,  // swept from min up to min(max, RangeOptions::max_n)
  order,   // a single value, the series order RangeOptions::order
  fixed,   // always swept over [min, max]
};

struct ParamRange {
  std::string name;
  int min = 0;
  int max = 0;
  ParamKind kind = ParamKind::degree;
};

struct IdentityInfo {
  std::string id;
  std::string summary;
  std::vector<ParamRange> params;

  /// e.g. "n<=8, k<=n" style text listing each parameter's verified range.
  std::string range_text() const;
};

struct RangeOptions {
  int max_n = 6;
  int order = 8;
};

/// All registered identities in registry order.
const std::vector<IdentityInfo>& identity_catalog();

/// Throws UnknownIdentity.
const IdentityInfo& identity_info(std::string_view id);

/// Parameter assignments covered by a verify run with the given options.
std::vector<Params> instances(std::string_view id, const RangeOptions& options);

/// Throws UnknownIdentity, MissingParam, or ParamOutOfRange.
CheckResult check_identity(std::string_view id, const Params& params,
                           const Families& families = Families::standard());

/// Runs every instance of the given identities (all of them when ids is
/// empty) on up to `jobs` threads. The result is sorted by (id, params).
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids,
                                    const RangeOptions& options, int jobs = 1,
                                    const Families& families = Families::standard());

/// Natural ordering of identity ids ("0.3" < "0.17" < "1.3" < "limit-A").
bool id_less(std::string_view lhs, std::string_view rhs);

}  // namespace qabel
