#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace weil {

struct report_entry {
  std::string id;
  std::string anchor;     // name of the law being exercised
  std::string instance;   // what it was checked on
  bool pass = true;
  std::optional<std::string> witness;  // counterexample on failure
};

/// Ordered list of law-check outcomes. Serialization is deterministic.
class report {
 public:
  explicit report(std::string suite = {}, std::uint64_t seed = 0) : suite_(std::move(suite)), seed_(seed) {}

  void add(report_entry e) { entries_.push_back(std::move(e)); }
  void add(std::string id, std::string anchor, std::string instance, bool pass,
           std::optional<std::string> witness = std::nullopt);
  /// Appends another report's entries, prefixing their ids.
  void merge(const report& other, const std::string& prefix = {});

  const std::string& suite() const noexcept { return suite_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<report_entry>& entries() const noexcept { return entries_; }
  report_entry& entry(std::size_t index) { return entries_.at(index); }
  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept;
  bool all_passed() const noexcept { return failed() == 0; }
  /// First failing entry, if any.
  const report_entry* first_failure() const noexcept;

  /// {suite, seed, entries:[{id, anchor, instance, pass, witness?}], passed, failed}
  std::string to_json(int indent = 2) const;
  std::string to_text() const;

 private:
  std::string suite_;
  std::uint64_t seed_;
  std::vector<report_entry> entries_;
};

/// One law checked over many trials: an entry is added up front as passing
/// and the first failing trial records its witness.
class law {
 public:
  law(report& r, std::string id, std::string anchor, std::string instance) : report_(r), index_(r.entries().size()) {
    r.add(std::move(id), std::move(anchor), std::move(instance), true);
  }
  /// The witness is only built on the first failure.
  void expect(bool ok, const std::function<std::string()>& witness) {
    auto& e = report_.entry(index_);
    if (!ok && e.pass) {
      e.pass = false;
      e.witness = witness();
    }
  }
  bool ok() const { return report_.entries()[index_].pass; }

 private:
  report& report_;
  std::size_t index_;
};

}  // namespace weil
