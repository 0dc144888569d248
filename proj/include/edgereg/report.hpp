// Pass/fail records produced by every verification routine.

#ifndef EDGEREG_REPORT_HPP
#define EDGEREG_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edgereg {

enum class Status { kPass, kFail, kSkipped };

std::string to_string(Status s);

struct Witness {
  std::string kind;   // "monomial", "path", "factorization", "pair", ...
  std::string value;
};

struct Instance {
  std::string graph;       // display name, usually the input file stem
  std::string graph_hash;  // hex FNV-1a of the canonical edge list
  std::vector<std::string> cycles;
  std::optional<int> s;
  std::vector<std::pair<std::string, std::string>> params;
};

struct VerificationReport {
  std::string suite;
  std::string check;
  Instance instance;
  Status status = Status::kPass;
  std::string reason;
  std::vector<Witness> witnesses;
  /// Computed facts worth echoing (regularity values, counts, ...).
  std::vector<std::pair<std::string, std::string>> details;
  std::optional<double> timing_ms;

  bool passed() const { return status == Status::kPass; }
  bool failed() const { return status == Status::kFail; }

  VerificationReport& fail(std::string why) {
    status = Status::kFail;
    reason = std::move(why);
    return *this;
  }
  VerificationReport& skip(std::string why) {
    status = Status::kSkipped;
    reason = std::move(why);
    return *this;
  }
  VerificationReport& witness(std::string kind, std::string value) {
    witnesses.push_back({std::move(kind), std::move(value)});
    return *this;
  }
  VerificationReport& detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

inline VerificationReport make_report(std::string suite, std::string check,
                                      std::optional<int> s = std::nullopt) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.check = std::move(check);
  r.instance.s = s;
  return r;
}

}  // namespace edgereg

#endif  // EDGEREG_REPORT_HPP
