#include "hilbert/report.hpp"

#include <algorithm>

namespace hilbert {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::fail; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void VerificationReport::append(VerificationReport other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
}

Check::Check(std::string name, std::size_t max_witnesses)
    : max_witnesses_(max_witnesses), start_(std::chrono::steady_clock::now()) {
  result_.name = std::move(name);
}

void Check::fail(std::string witness) {
  result_.status = Status::fail;
  if (failures_++ < max_witnesses_) result_.witnesses.push_back(std::move(witness));
}

void Check::skip(std::string reason) {
  if (result_.status == Status::pass) result_.status = Status::skipped;
  result_.reason = std::move(reason);
}

CheckResult Check::finish() {
  if (failures_ > max_witnesses_)
    result_.witnesses.push_back("... " + std::to_string(failures_ - max_witnesses_) + " more");
  result_.elapsed = std::chrono::steady_clock::now() - start_;
  return std::move(result_);
}

}  // namespace hilbert
