#ifndef NOVA_REPORT_HPP
#define NOVA_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace nova {

/// One named verdict. `witness` is empty on success and otherwise names the
/// first failing basis tuple (lexicographic order) with its discrepancy.
struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

class Report {
 public:
  Report() = default;
  Report(std::string name, bool pass, std::string witness = {}) { add(std::move(name), pass, std::move(witness)); }

  void add(std::string name, bool pass, std::string witness = {}) {
    checks_.push_back({std::move(name), pass, std::move(witness)});
  }
  void add(Check c) { checks_.push_back(std::move(c)); }

  /// Appends every check of `other`, prefixing names with "prefix/".
  void absorb(const Report& other, std::string_view prefix = {}) {
    for (const auto& c : other.checks_) {
      Check copy = c;
      if (!prefix.empty()) copy.name = std::string(prefix) + "/" + copy.name;
      checks_.push_back(std::move(copy));
    }
  }

  bool pass() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks_)
      if (!c.pass) return &c;
    return nullptr;
  }

  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

}  // namespace nova

#endif  // NOVA_REPORT_HPP
