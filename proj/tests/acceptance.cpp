// Acceptance run: one PASS/FAIL line per criterion, each with its time
// budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "weil/duality.hpp"
#include "weil/suite.hpp"

using namespace weil;

namespace {

struct outcome {
  bool pass;
  std::string detail;
};

outcome from_report(const report& r) {
  if (const auto* f = r.first_failure())
    return {false, std::to_string(r.failed()) + " failed, first " + f->id + (f->witness ? " (" + *f->witness + ")" : "")};
  return {true, std::to_string(r.passed()) + " laws"};
}

int failures = 0;

void criterion(int number, const char* title, double budget, const std::function<outcome()>& run) {
  const auto start = std::chrono::steady_clock::now();
  outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget;
  if (!in_time) o.detail += ", over the time budget";
  const bool ok = o.pass && in_time;
  failures += !ok;
  std::printf("%s  %2d  %-44s %7.3fs / %4.0fs  %s\n", ok ? "PASS" : "FAIL", number, title, secs, budget, o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const std::uint64_t seed = 20261015;
  const std::size_t samples = 100;
  const auto total_start = std::chrono::steady_clock::now();

  criterion(1, "Weil basis dimensions", 1, [] {
    bool ok = space_D().algebra_of().dimension() == 2 && space_D2().algebra_of().dimension() == 3 &&
              tensor(space_D().algebra_of(), space_D().algebra_of()).dimension() == 4;
    for (std::size_t n = 0; n <= 4; ++n) ok = ok && space_D(n).algebra_of().dimension() == (std::size_t{1} << n);
    return outcome{ok, "W_D 2, W_D(2) 3, W_{D^n} 2^n (n <= 4), W_D (x) W_D 4"};
  });
  criterion(2, "equalizer diagram and its dimension", 1, [&] { return from_report(suite::equalizer(seed)); });
  criterion(3, "functor laws and reassociation", 10, [&] { return from_report(suite::functor_laws(seed, samples)); });
  criterion(4, "naturality and coherence of alpha", 10, [&] { return from_report(suite::naturality(seed, samples)); });
  criterion(5, "tangent module laws on R^3", 5, [&] { return from_report(suite::tangent(seed, samples)); });
  criterion(6, "Euclidean checks, m <= 4 and E (x) W", 5, [&] { return from_report(suite::euclidean(seed, samples)); });
  criterion(7, "fibered tangent pairs, m <= 3", 2, [&] { return from_report(suite::fibered(seed, samples)); });
  criterion(8, "classical forms are forms", 10, [&] { return from_report(suite::forms(seed, samples)); });
  criterion(9, "delta sign law, n+1 <= 5", 2, [&] { return from_report(suite::sign_law()); });
  criterion(10, "d against the classical oracle, dd = 0", 30, [&] {
    report r("criterion-10", seed);
    r.merge(suite::exterior_oracle(seed, samples), "oracle.");
    r.merge(suite::exterior(seed, samples), "lemmas.");
    return from_report(r);
  });
  criterion(11, "check all --seed 42 is byte-identical", 60, [&] {
    const document doc = suite::default_document();
    const report r = suite::check_all(&doc, 42, samples);
    const std::string a = r.to_json();
    const std::string b = suite::check_all(&doc, 42, samples).to_json();
    if (a != b) return outcome{false, "reports differ"};
    return outcome{r.all_passed(), std::to_string(a.size()) + " identical bytes, " + std::to_string(r.failed()) + " failed"};
  });

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count();
  std::printf("%d of 11 criteria failed, %.1fs total\n", failures, total);
  return failures ? 1 : 0;
}
