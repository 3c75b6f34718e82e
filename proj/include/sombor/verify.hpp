#ifndef SOMBOR_VERIFY_HPP
#define SOMBOR_VERIFY_HPP

// Exhaustive check of the extremal bound: for every (n, alpha) cell, fold the
// family of trees to its maximum Sombor index and compare against the closed
// form and the constructed extremal tree.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/enumeration.hpp"
#include "sombor/errors.hpp"
#include "sombor/extremal.hpp"
#include "sombor/invariants.hpp"

namespace sombor {

/// Default largest n for verification runs (19320 trees at n = 16).
inline constexpr std::size_t kDefaultVerifyCap = 16;

struct ExtremalRecord {
  std::size_t order = 0;
  std::size_t alpha = 0;
  std::size_t family_size = 0;
  double closed_form = 0.0;
  double brute_force_max = 0.0;
  std::size_t maximizer_count = 0;
  CanonicalCode maximizer_code;  // smallest code among maximizers
  CanonicalCode extremal_code;   // code of the constructed extremal tree
  double margin_to_second = std::numeric_limits<double>::infinity();
  double wall_seconds = 0.0;

  bool passed() const {
    return family_size > 0 && std::abs(closed_form - brute_force_max) <= kSomborTolerance &&
           maximizer_count == 1 && maximizer_code == extremal_code;
  }
};

struct VerificationReport {
  std::vector<ExtremalRecord> records;  // sorted by (n, alpha)
  double wall_seconds = 0.0;

  bool passed() const {
    return std::all_of(records.begin(), records.end(),
                       [](const ExtremalRecord& r) { return r.passed(); });
  }
};

struct VerifyOptions {
  std::size_t n_min = 2;
  std::size_t n_max = 12;
  std::size_t jobs = 1;  // 0 = one per hardware thread
  std::size_t cap = kDefaultVerifyCap;
};

/// Folds T(n, alpha) to one record.
inline ExtremalRecord verify_cell(std::size_t n, std::size_t alpha,
                                  std::size_t cap = kDefaultVerifyCap) {
  const auto start = std::chrono::steady_clock::now();
  const ExtremalParams params(n, alpha);
  ExtremalRecord rec;
  rec.order = n;
  rec.alpha = alpha;
  rec.closed_form = closed_form_max(params);
  rec.extremal_code = canonical_code(construct_t_star(params));

  constexpr double kNone = -std::numeric_limits<double>::infinity();
  double best = kNone;
  double second = kNone;
  std::set<CanonicalCode> maximizers;
  for_each_in_family(
      TreeFamilyQuery{n, alpha},
      [&](const Tree& t) {
        ++rec.family_size;
        const double so = sombor_index(t);
        if (so > best + kSomborTolerance) {
          second = std::max(second, best);
          best = so;
          maximizers = {canonical_code(t)};
        } else if (so >= best - kSomborTolerance) {
          maximizers.insert(canonical_code(t));
        } else {
          second = std::max(second, so);
        }
      },
      cap);

  rec.brute_force_max = best;
  rec.maximizer_count = maximizers.size();
  if (!maximizers.empty()) rec.maximizer_code = *maximizers.begin();
  rec.margin_to_second =
      second == kNone ? std::numeric_limits<double>::infinity() : best - second;
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

/// Every feasible (n, alpha) cell with n_min <= n <= n_max. Cells may run on
/// several threads; the report order and contents do not depend on it.
inline VerificationReport verify(const VerifyOptions& opt) {
  if (opt.n_min < 2 || opt.n_min > opt.n_max) {
    throw InputError("need 2 <= n_min <= n_max, got n_min=" + std::to_string(opt.n_min) +
                     " n_max=" + std::to_string(opt.n_max));
  }
  if (opt.n_max > opt.cap) {
    throw SizeError("n_max=" + std::to_string(opt.n_max) + " exceeds the cap of " +
                    std::to_string(opt.cap));
  }
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) {
    for (std::size_t alpha = (n + 1) / 2; alpha <= n - 1; ++alpha) {
      ExtremalRecord slot;
      slot.order = n;
      slot.alpha = alpha;
      report.records.push_back(slot);
    }
  }

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < report.records.size(); i = next++) {
      auto& slot = report.records[i];
      slot = verify_cell(slot.order, slot.alpha, opt.cap);
    }
  };
  std::size_t jobs = opt.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.jobs;
  jobs = std::min(jobs, report.records.size());
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline VerificationReport verify(std::size_t n_min, std::size_t n_max) {
  return verify(VerifyOptions{.n_min = n_min, .n_max = n_max});
}

/// Nine decimals; "inf" for infinity.
inline std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

inline constexpr const char* kCsvHeader =
    "n,alpha,family_size,closed_form,brute_force_max,maximizer_count,margin_to_second,pass";

inline void write_csv(std::ostream& out, const VerificationReport& report) {
  out << kCsvHeader << '\n';
  for (const auto& r : report.records) {
    out << r.order << ',' << r.alpha << ',' << r.family_size << ',' << format_real(r.closed_form)
        << ',' << format_real(r.brute_force_max) << ',' << r.maximizer_count << ','
        << format_real(r.margin_to_second) << ',' << (r.passed() ? "true" : "false") << '\n';
  }
}

inline void write_summary(std::ostream& out, const VerificationReport& report) {
  std::size_t failures = 0;
  for (const auto& r : report.records) {
    char line[256];
    std::snprintf(line, sizeof line,
                  "n=%-3zu alpha=%-3zu family=%-6zu max=%s closed=%s maximizers=%zu "
                  "margin=%s time=%.3fms %s\n",
                  r.order, r.alpha, r.family_size, format_real(r.brute_force_max).c_str(),
                  format_real(r.closed_form).c_str(), r.maximizer_count,
                  format_real(r.margin_to_second).c_str(), r.wall_seconds * 1e3,
                  r.passed() ? "PASS" : "FAIL");
    out << line;
    failures += r.passed() ? 0 : 1;
  }
  char total[128];
  std::snprintf(total, sizeof total, "%zu cells, %zu failed, %.3fs\n", report.records.size(),
                failures, report.wall_seconds);
  out << total;
  out << (failures == 0 ? "PASS" : "FAIL") << '\n';
}

}  // namespace sombor

#endif  // SOMBOR_VERIFY_HPP
