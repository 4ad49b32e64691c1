#pragma once

// Structured verification reports: every check returns one of these rather
// than a boolean, so failures carry concrete witnesses.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace crossed {

struct Violation {
  std::string law;
  std::vector<int> degrees;
  std::vector<std::string> witnesses;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend bool operator<(const Violation& a, const Violation& b) {
    return std::tie(a.degrees, a.law, a.witnesses) < std::tie(b.degrees, b.law, b.witnesses);
  }
};

inline constexpr std::size_t default_violation_cap = 20;

struct Report {
  std::string subject;
  int bound = 0;
  std::string status = "pass";  // pass | fail | truncated
  std::string mode = "exhaustive";  // exhaustive | sampled
  std::vector<Violation> violations;
  std::size_t total_violations = 0;
  std::size_t checked = 0;
  double seconds = 0.0;
  std::vector<std::string> notes;
  std::size_t cap = default_violation_cap;

  Report() = default;
  Report(std::string subject_, int bound_, std::string mode_ = "exhaustive")
      : subject(std::move(subject_)), bound(bound_), mode(std::move(mode_)) {}

  bool passed() const { return total_violations == 0; }

  /// Keeps the cap smallest violations in canonical order, counts all of them.
  void add(Violation v) {
    ++total_violations;
    status = "fail";
    auto pos = std::lower_bound(violations.begin(), violations.end(), v);
    if (pos != violations.end() && *pos == v) return;
    if (violations.size() >= cap && pos == violations.end()) return;
    violations.insert(pos, std::move(v));
    if (violations.size() > cap) violations.pop_back();
  }

  void add(std::string law, std::vector<int> degrees, std::vector<std::string> witnesses) {
    add(Violation{std::move(law), std::move(degrees), std::move(witnesses)});
  }

  void merge(const Report& other) {
    checked += other.checked;
    const std::size_t before = total_violations;
    for (const auto& v : other.violations) add(v);
    total_violations = before + other.total_violations;
    if (other.mode == "sampled") mode = "sampled";
    if (total_violations > 0) status = "fail";
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  /// Marks a passing report as only valid up to its truncation bound.
  void mark_truncated() {
    if (passed()) status = "truncated";
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["subject"] = subject;
    j["bound"] = bound;
    j["status"] = status;
    j["mode"] = mode;
    j["total_violations"] = total_violations;
    j["checked"] = checked;
    j["seconds"] = seconds;
    j["notes"] = notes;
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : violations) {
      vs.push_back({{"law", v.law}, {"degrees", v.degrees}, {"witnesses", v.witnesses}});
    }
    j["violations"] = vs;
    return j;
  }

  static Report from_json(const nlohmann::json& j) {
    Report r;
    r.subject = j.at("subject").get<std::string>();
    r.bound = j.at("bound").get<int>();
    r.status = j.at("status").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.total_violations = j.at("total_violations").get<std::size_t>();
    r.checked = j.at("checked").get<std::size_t>();
    r.seconds = j.at("seconds").get<double>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto& v : j.at("violations")) {
      r.violations.push_back(Violation{v.at("law").get<std::string>(), v.at("degrees").get<std::vector<int>>(),
                                       v.at("witnesses").get<std::vector<std::string>>()});
    }
    return r;
  }

  friend bool operator==(const Report& a, const Report& b) {
    return a.subject == b.subject && a.bound == b.bound && a.status == b.status && a.mode == b.mode &&
           a.violations == b.violations && a.total_violations == b.total_violations && a.checked == b.checked &&
           a.seconds == b.seconds && a.notes == b.notes;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << subject << ": " << status << " (" << mode << ", bound " << bound << ", " << checked << " checks, "
       << total_violations << " violations)\n";
    for (const auto& v : violations) {
      os << "  " << v.law << " at degrees [";
      for (std::size_t i = 0; i < v.degrees.size(); ++i) os << (i ? "," : "") << v.degrees[i];
      os << "]";
      for (const auto& w : v.witnesses) os << " " << w;
      os << '\n';
    }
    if (violations.size() < total_violations) {
      os << "  ... " << (total_violations - violations.size()) << " more\n";
    }
    for (const auto& n : notes) os << "  note: " << n << '\n';
    return os.str();
  }
};

/// Measures wall time into report.seconds on destruction.
class ScopedTimer {
 public:
  explicit ScopedTimer(Report& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  Report& report_;
  std::chrono::steady_clock::time_point start_;
};

template <class T>
std::string show(const T& value) {
  if constexpr (requires { value.to_string(); }) {
    return value.to_string();
  } else {
    std::ostringstream os;
    os << value;
    return os.str();
  }
}

}  // namespace crossed
