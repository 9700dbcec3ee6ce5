// One PASS/FAIL line per acceptance criterion. A criterion fails when any of
// its checks fails or when it runs past its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "sixvertex/sixvertex.hpp"

using namespace sixvertex;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double budget_s;
  std::function<Outcome()> body;
};

// Summarizes reports; on failure quotes the first failing one.
Outcome summarize(const std::vector<CheckReport>& rs) {
  std::size_t passed = 0, failed = 0, skipped = 0;
  const CheckReport* first_bad = nullptr;
  for (const auto& r : rs) {
    switch (r.status) {
      case CheckStatus::pass: ++passed; break;
      case CheckStatus::fail: ++failed; break;
      case CheckStatus::skipped_degenerate: ++skipped; break;
    }
    if (r.status != CheckStatus::pass && first_bad == nullptr) first_bad = &r;
  }
  std::ostringstream os;
  os << passed << " checks passed";
  if (failed + skipped > 0) os << ", " << failed << " failed, " << skipped << " skipped";
  if (first_bad != nullptr) os << "; first: " << first_bad->to_json().dump();
  return {rs.size() > 0 && failed + skipped == 0, os.str()};
}

std::vector<CheckReport> concat(std::vector<std::vector<CheckReport>> parts) {
  std::vector<CheckReport> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

template <class F>
std::vector<CheckReport> record(std::uint64_t seed, F&& f) {
  InstanceGenerator gen(seed);
  Recorder rec;
  f(rec, gen);
  return rec.take();
}

Outcome five_way() {
  return summarize(record(101, [](Recorder& rec, InstanceGenerator& gen) {
    for (std::size_t k = 0; k < 200; ++k) {
      const std::size_t m = k % 5, n = (k / 5) % 5;
      const Instance in = gen.instance(m, n, k % 3 == 2);
      rec.run("five_way_equivalence", to_json(in), [&] { return oracle::all_routes_agree(in); });
    }
  }));
}

Outcome domain_wall() {
  return summarize(record(102, [](Recorder& rec, InstanceGenerator& gen) { oracle::domain_wall(rec, gen, 4, 16); }));
}

Outcome linear_systems() {
  return summarize(record(103, [](Recorder& rec, InstanceGenerator& gen) { oracle::linear_systems(rec, gen, 3, 50); }));
}

Outcome recursion() {
  return summarize(record(104, [](Recorder& rec, InstanceGenerator& gen) { oracle::recursion(rec, gen, 3, 50); }));
}

Outcome algebra() {
  return summarize(concat({
      record(105, [](Recorder& rec, InstanceGenerator& gen) { oracle::ybe(rec, gen, 100); }),
      record(106, [](Recorder& rec, InstanceGenerator& gen) { oracle::rtt(rec, gen, 2, 9); }),
      record(107, [](Recorder& rec, InstanceGenerator& gen) { oracle::yangian_actions(rec, gen, 3, 16); }),
      record(108, [](Recorder& rec, InstanceGenerator& gen) { oracle::modified_actions(rec, gen, 3, 12); }),
      record(109, [](Recorder& rec, InstanceGenerator& gen) { oracle::mult_actions(rec, gen, 2, 3, 12); }),
  }));
}

Outcome izergin() {
  return summarize(concat({
      record(110, [](Recorder& rec, InstanceGenerator& gen) { oracle::izergin_equiv(rec, gen, 5, 72); }),
      record(111, [](Recorder& rec, InstanceGenerator& gen) { oracle::binomial(rec, gen, 6, 14); }),
      record(112, [](Recorder& rec, InstanceGenerator& gen) { oracle::cauchy(rec, gen, 4, 12); }),
      record(113, [](Recorder& rec, InstanceGenerator& gen) { oracle::linear_systems(rec, gen, 4, 10); }),
  }));
}

Outcome asymptotics() {
  return summarize(concat({
      record(114, [](Recorder& rec, InstanceGenerator& gen) { oracle::asymptotics(rec, gen, 3, 8); }),
      record(115, [](Recorder& rec, InstanceGenerator& gen) { oracle::izergin_limits(rec, gen, 3, 18); }),
  }));
}

Outcome performance() {
  std::ostringstream os;
  bool pass = true;

  {
    const Instance in = cli::bench_instance(200);
    const auto p = convert<Complex>(in.params);
    const auto cfg = convert<Complex>(in.cfg);
    const auto k = derive_constants(cfg);
    const double ms = cli::time_min_ms([&] { (void)closed_form_Z(p, cfg, k, IzerginMethod::det_v); });
    pass = pass && ms < 1000;
    os << "float det-v n=200: " << ms << " ms";
  }

  double previous = 0;
  double worst_ratio = 1e300, slowest_det = 0;
  for (std::size_t n = 6; n <= 10; ++n) {
    const Instance in = cli::bench_instance(n);
    const auto k = derive_constants(in.cfg);
    Scalar brute, closed;
    const double contraction_ms = cli::time_min_ms([&] { brute = partition_expectation(in.params, in.cfg); });
    const double det_ms = cli::time_min_ms([&] { closed = closed_form_Z(in.params, in.cfg, k, IzerginMethod::det_v); });
    if (brute != closed) {
      pass = false;
      os << "; values differ at n=" << n;
    }
    if (n > 6) worst_ratio = std::min(worst_ratio, contraction_ms / previous);
    slowest_det = std::max(slowest_det, det_ms);
    os << "; n=" << n << " contraction " << contraction_ms << " ms, det-v " << det_ms << " ms";
    previous = contraction_ms;
  }
  pass = pass && worst_ratio >= 3 && slowest_det < 100;
  os << "; smallest growth x" << worst_ratio;
  return {pass, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "route equivalence, 200 instances, m,n <= 4", 60, five_way},
      {2, "domain-wall reduction, n <= 4", 10, domain_wall},
      {3, "linear systems, 50 instances, n <= 3", 30, linear_systems},
      {4, "recursion, 50 instances, n <= 3", 30, recursion},
      {5, "algebra suite", 60, algebra},
      {6, "Izergin properties", 60, izergin},
      {7, "asymptotics and limits", 10, asymptotics},
      {8, "performance", 120, performance},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = s <= c.budget_s;
    const bool pass = o.pass && in_budget;
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", s, c.budget_s);
    std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << timing
              << (in_budget ? "" : ", over budget") << ")  " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
