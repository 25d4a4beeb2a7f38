#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cohopf {

enum class Status { pass, fail, unavailable, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unavailable: return "unavailable";
    case Status::skipped: return "skipped";
  }
  return "?";
}

/// One verified statement. A failing check names its first counterexample in
/// `witness`; an unavailable one names the missing datum there.
struct Check {
  std::string id;
  std::string anchor;
  Status status = Status::pass;
  std::string witness;
  std::string scope;
  std::map<std::string, std::string> scalars;

  bool passed() const { return status == Status::pass; }
};

class Report {
 public:
  Check& add(Check c) {
    checks_.push_back(std::move(c));
    return checks_.back();
  }

  Check& add(std::string id, std::string anchor, Status status, std::string witness = {}) {
    return add(Check{std::move(id), std::move(anchor), status, std::move(witness), {}, {}});
  }

  void merge(const Report& other, const std::string& prefix = {}) {
    for (Check c : other.checks_) {
      if (!prefix.empty()) c.id = prefix + c.id;
      checks_.push_back(std::move(c));
    }
  }

  /// True when no check failed; unavailable and skipped do not count.
  bool ok() const {
    return std::none_of(checks_.begin(), checks_.end(),
                        [](const Check& c) { return c.status == Status::fail; });
  }

  bool all_passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed(); });
  }

  const Check* find(const std::string& id) const {
    for (const auto& c : checks_)
      if (c.id == id) return &c;
    return nullptr;
  }

  Status status_of(const std::string& id) const {
    const Check* c = find(id);
    return c ? c->status : Status::unavailable;
  }

  const std::vector<Check>& checks() const { return checks_; }
  std::vector<Check>& checks() { return checks_; }

 private:
  std::vector<Check> checks_;
};

}  // namespace cohopf
