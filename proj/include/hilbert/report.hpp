#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace hilbert {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status s);

/// Outcome of one named check. A failed check always carries at least one
/// witness string naming the concrete elements/maps/filters involved.
struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::vector<std::string> witnesses;
  std::string reason;
  /// Informational lines that do not affect the status.
  std::vector<std::string> notes;
  /// Per-algebra outcomes folded into this result by aggregation.
  int cases_passed = 0;
  int cases_failed = 0;
  int cases_skipped = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
  void append(VerificationReport other);
  void add(CheckResult r) { checks.push_back(std::move(r)); }
};

/// Accumulates one CheckResult.
///
///   Check c("kappa/injective");
///   c.expect(k1 != k2, [&] { return "phi=" + ...; });
///   report.add(c.finish());
class Check {
 public:
  explicit Check(std::string name, std::size_t max_witnesses = 8);

  template <class Witness>
  bool expect(bool ok, Witness&& witness) {
    if (!ok) fail(witness());
    return ok;
  }
  void fail(std::string witness);
  void skip(std::string reason);
  bool failed() const { return result_.status == Status::fail; }
  CheckResult finish();

 private:
  CheckResult result_;
  std::size_t max_witnesses_;
  std::size_t failures_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace hilbert
