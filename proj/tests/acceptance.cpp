// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. argv[1] is the path of the sombor CLI binary.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sombor/sombor.hpp"

namespace {

using namespace sombor;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

Outcome exhaustive_bound() {
  Outcome o;
  const auto small = verify(VerifyOptions{.n_min = 2, .n_max = 12, .jobs = 1});
  std::size_t failed = 0;
  for (const auto& r : small.records) failed += r.passed() ? 0 : 1;
  const auto large = verify(VerifyOptions{.n_min = 2, .n_max = 16, .jobs = 1});
  for (const auto& r : large.records) failed += r.passed() ? 0 : 1;
  o.pass = failed == 0 && small.wall_seconds < 10.0 && large.wall_seconds < 60.0;
  o.detail = std::to_string(small.records.size()) + " cells n<=12 in " +
             fixed(small.wall_seconds) + "s, " + std::to_string(large.records.size()) +
             " cells n<=16 in " + fixed(large.wall_seconds) + "s, " + std::to_string(failed) +
             " failed";
  return o;
}

Outcome star_case() {
  Outcome o;
  std::size_t bad = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto family = enumerate_family({n, n - 1});
    const double k = static_cast<double>(n - 1);
    const bool ok = family.size() == 1 && isomorphic(family.front(), star_tree(n)) &&
                    std::abs(sombor_index(family.front()) - k * std::sqrt(k * k + 1)) <= 1e-9;
    bad += ok ? 0 : 1;
  }
  o.pass = bad == 0;
  o.detail = "n=2..12, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome pendant_inclusive_sets() {
  Outcome o;
  std::size_t trees = 0, bad = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      ++trees;
      const IndependentSet set = pendant_inclusive_mis(t);
      const std::size_t alpha = independence_number(t);
      bool ok = set.size() == alpha && alpha == independence_number_oracle(t);
      // both pendants of P2 are adjacent, so containment is checked from n = 3
      if (n >= 3) {
        for (Vertex p : pendant_vertices(t)) ok = ok && set.contains(p);
      }
      bad += ok ? 0 : 1;
    });
  }
  o.pass = bad == 0;
  o.detail = std::to_string(trees) + " trees n<=12, " + std::to_string(bad) + " failures";
  return o;
}

Outcome scalar_monotonicity() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> x_dist(1.0, 1000.0);
  std::uniform_real_distribution<double> step(1e-3, 10.0);
  std::uniform_int_distribution<std::int64_t> int_dist(1, 100);
  std::size_t violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = x_dist(rng);
    const double y = x + step(rng);
    const std::int64_t c = int_dist(rng);
    const std::int64_t d = int_dist(rng);
    if (!(lemma1_f(y, c, d) > lemma1_f(x, c, d))) ++violations;
    const std::int64_t hi = std::max(c, d) + 1;
    const std::int64_t lo = std::min(c, d);
    if (!(lemma2_g(y, hi, lo) < lemma2_g(x, hi, lo))) ++violations;
  }
  std::size_t grid = 0;
  for (std::int64_t k = 1; k <= 200; ++k) {
    for (std::int64_t m = 2; m <= 200; ++m, ++grid) violations += star_shift_inequality(m, k) ? 0 : 1;
    for (std::int64_t l = 1; l <= 200; ++l, ++grid) violations += theorem_shift_inequality(l, k) ? 0 : 1;
  }
  o.pass = violations == 0;
  o.detail = "1000 samples, " + std::to_string(grid) + " grid points, " +
             std::to_string(violations) + " violations";
  return o;
}

Outcome transformations() {
  Outcome o;
  std::size_t applied = 0, walks = 0, bad = 0;
  const auto improves = [&](const Tree& before, const Tree& after) {
    ++applied;
    if (independence_number(after) != independence_number(before) ||
        !(sombor_index(after) - sombor_index(before) > 1e-6)) {
      ++bad;
    }
  };
  for (std::size_t n = 3; n <= 11; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      switch (classify(t)) {
        case TreeClass::Other: improves(t, apply_lemma1(t)); break;
        case TreeClass::T2: improves(t, apply_lemma2_step(t)); break;
        case TreeClass::T1: improves(t, *apply_theorem_step(t)); break;
        default: break;
      }
    });
    for (std::size_t alpha = (n + 1) / 2; alpha + 2 <= n; ++alpha) {
      const CanonicalCode target = canonical_code(construct_t_star(ExtremalParams(n, alpha)));
      for (const Tree& t : oracle::t1_members(n, alpha)) {
        ++walks;
        const TheoremWalk walk = walk_to_t_star(t);
        if (walk.steps > n || canonical_code(walk.final_tree) != target) ++bad;
      }
    }
  }
  o.pass = bad == 0 && applied > 0;
  o.detail = std::to_string(applied) + " transforms, " + std::to_string(walks) + " walks, " +
             std::to_string(bad) + " failures";
  return o;
}

Outcome enumeration_counts() {
  Outcome o;
  constexpr std::size_t kCounts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<CanonicalCode> codes;
    std::size_t count = 0;
    for_each_free_tree(n, [&](const Tree& t) {
      ++count;
      codes.insert(canonical_code(t));
    });
    if (count != kCounts[n - 1] || codes.size() != count) ++bad;
    if (n <= 9 && codes != oracle::prufer_free_tree_codes(n)) ++bad;
  }
  o.pass = bad == 0;
  o.detail = "n=1..12 counts, Pruefer agreement n<=9, " + std::to_string(bad) + " mismatches";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("sombor_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::string runs[2];
  int codes[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path out = dir / ("table" + std::to_string(i) + ".csv");
    const std::string cmd =
        "'" + cli + "' table --n-max 10 --output '" + out.string() + "' >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    codes[i] = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    runs[i] = slurp(out);
  }
  fs::remove_all(dir);
  std::ostringstream a, b;
  write_csv(a, verify(VerifyOptions{.n_min = 2, .n_max = 10, .jobs = 1}));
  write_csv(b, verify(VerifyOptions{.n_min = 2, .n_max = 10, .jobs = 4}));
  o.pass = codes[0] == 0 && codes[1] == 0 && !runs[0].empty() && runs[0] == runs[1] &&
           a.str() == b.str() && a.str() == runs[0];
  o.detail = "two CLI runs " + std::string(runs[0] == runs[1] ? "identical" : "differ") + " (" +
             std::to_string(runs[0].size()) + " bytes), in-library serial/parallel " +
             (a.str() == b.str() ? "identical" : "differ");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-sombor-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"exhaustive bound and unique maximizer", exhaustive_bound},
      {"star case", star_case},
      {"pendant-inclusive maximum independent set", pendant_inclusive_sets},
      {"scalar monotonicity and shift inequalities", scalar_monotonicity},
      {"transformations", transformations},
      {"enumeration counts", enumeration_counts},
      {"determinism of table output", [&] { return determinism(cli); }},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " ("
              << o.detail << "; " << fixed(seconds_since(t0)) << "s)" << std::endl;
  }
  return all ? 0 : 1;
}
