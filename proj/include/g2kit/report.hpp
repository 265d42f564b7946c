#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g2kit {

// Verdict vocabulary shared by every checker. "pass" and "proven" are exact
// (zero-tolerance) results; "verified-on-samples" is the honestly weaker
// sampled status; "skipped" marks clauses whose premises failed.
enum class Verdict { Pass, Proven, Sampled, Failed, Skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Proven: return "proven";
    case Verdict::Sampled: return "verified-on-samples";
    case Verdict::Failed: return "failed";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

/// One named condition inside a check: its verdict, a human note, and the
/// residual / witness data that reproduces the verdict.
struct Clause {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::optional<std::string> residual;
  std::optional<std::string> witness;
};

// Structured verdict for one check: an ordered clause list plus derived
// quantities (contact volume, Reeb field, scalings) for the report.
class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<std::pair<std::string, std::string>>& derived() const {
    return derived_;
  }

  void add(Clause c) { clauses_.push_back(std::move(c)); }

  void pass(const std::string& name, const std::string& detail = "") {
    clauses_.push_back({name, Verdict::Pass, detail, std::nullopt, std::nullopt});
  }

  void proven(const std::string& name, const std::string& detail = "") {
    clauses_.push_back({name, Verdict::Proven, detail, std::nullopt, std::nullopt});
  }

  void sampled(const std::string& name, const std::string& detail = "") {
    clauses_.push_back({name, Verdict::Sampled, detail, std::nullopt, std::nullopt});
  }

  void fail(const std::string& name, const std::string& residual,
            const std::string& detail = "") {
    clauses_.push_back({name, Verdict::Failed, detail, residual, std::nullopt});
  }

  void skip(const std::string& name, const std::string& detail) {
    clauses_.push_back({name, Verdict::Skipped, detail, std::nullopt, std::nullopt});
  }

  void add_derived(const std::string& key, const std::string& value) {
    derived_.emplace_back(key, value);
  }

  /// No failed clause.
  bool passed() const {
    for (const auto& c : clauses_)
      if (c.verdict == Verdict::Failed) return false;
    return true;
  }

  /// Some clause rests on sampling rather than exact proof.
  bool has_sampled() const {
    for (const auto& c : clauses_)
      if (c.verdict == Verdict::Sampled) return true;
    return false;
  }

  /// Folds another report's clauses in under a name prefix.
  void absorb(const CheckReport& other, const std::string& prefix) {
    for (const auto& c : other.clauses_) {
      Clause copy = c;
      copy.name = prefix + c.name;
      clauses_.push_back(std::move(copy));
    }
    for (const auto& [k, v] : other.derived_) derived_.emplace_back(prefix + k, v);
  }

 private:
  std::string title_;
  std::vector<Clause> clauses_;
  std::vector<std::pair<std::string, std::string>> derived_;
};

}  // namespace g2kit
