#include "weil/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace weil {

void report::add(std::string id, std::string anchor, std::string instance, bool pass,
                 std::optional<std::string> witness) {
  entries_.push_back({std::move(id), std::move(anchor), std::move(instance), pass, std::move(witness)});
}

void report::merge(const report& other, const std::string& prefix) {
  for (auto e : other.entries_) {
    e.id = prefix + e.id;
    entries_.push_back(std::move(e));
  }
}

std::size_t report::passed() const noexcept {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e.pass; }));
}

std::size_t report::failed() const noexcept { return entries_.size() - passed(); }

const report_entry* report::first_failure() const noexcept {
  for (const auto& e : entries_)
    if (!e.pass) return &e;
  return nullptr;
}

std::string report::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["seed"] = seed_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["anchor"] = e.anchor;
    je["instance"] = e.instance;
    je["pass"] = e.pass;
    if (e.witness) je["witness"] = *e.witness;
    arr.push_back(std::move(je));
  }
  j["entries"] = std::move(arr);
  j["passed"] = passed();
  j["failed"] = failed();
  return j.dump(indent);
}

std::string report::to_text() const {
  std::string out = "suite " + suite_ + " (seed " + std::to_string(seed_) + ")\n";
  for (const auto& e : entries_) {
    out += (e.pass ? "PASS  " : "FAIL  ") + e.id + "  [" + e.anchor + "]  " + e.instance;
    if (e.witness) out += "  witness: " + *e.witness;
    out += '\n';
  }
  out += std::to_string(passed()) + " passed, " + std::to_string(failed()) + " failed\n";
  return out;
}

}  // namespace weil
