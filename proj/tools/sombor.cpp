// sombor: compute, construct, enumerate and exhaustively verify maximum
// Sombor index trees with a given independence number.
//
// Exit codes: 0 success / all cells pass, 1 a cell failed, 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sombor/sombor.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void warn_cap(std::size_t cap, std::size_t default_cap) {
  if (cap > default_cap) {
    std::cerr << "warning: cap raised to n=" << cap << " (default " << default_cap
              << "); running time grows about 2.5x per extra vertex\n";
  }
}

// Opens `path` for writing, or stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw UsageError("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish(const std::string& path) {
    stream().flush();
    if (!stream()) throw UsageError("error writing '" + path + "'");
  }

 private:
  std::ofstream file_;
};

int run_compute(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  sombor::Tree t;
  try {
    t = sombor::read_edge_list(in);
  } catch (const sombor::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  std::cout << "SO=" << sombor::format_real(sombor::sombor_index(t))
            << " alpha=" << sombor::independence_number(t)
            << " class=" << sombor::to_string(sombor::classify(t)) << '\n';
  std::cout << "code=" << sombor::canonical_code(t).code << '\n';
  return kExitPass;
}

int run_construct(std::size_t n, std::size_t alpha, const std::string& path) {
  if (n < 2) throw UsageError("n must be at least 2");
  if (!sombor::alpha_feasible(n, alpha)) {
    throw UsageError("alpha must be in [" + std::to_string((n + 1) / 2) + ", " +
                     std::to_string(n - 1) + "]");
  }
  const sombor::Tree t = sombor::construct_t_star(sombor::ExtremalParams(n, alpha));
  Output out(path);
  sombor::write_edge_list(out.stream(), t);
  out.finish(path);
  return kExitPass;
}

int run_verify(const sombor::VerifyOptions& opt, const std::optional<std::string>& csv_path) {
  const auto report = sombor::verify(opt);
  sombor::write_summary(std::cout, report);
  if (csv_path) {
    Output out(*csv_path);
    sombor::write_csv(out.stream(), report);
    out.finish(*csv_path);
  }
  return report.passed() ? kExitPass : kExitViolation;
}

int run_table(const sombor::VerifyOptions& opt, const std::string& path) {
  const auto report = sombor::verify(opt);
  Output out(path);
  sombor::write_csv(out.stream(), report);
  out.finish(path);
  return report.passed() ? kExitPass : kExitViolation;
}

int run_enumerate(std::size_t n, std::optional<std::size_t> alpha, std::size_t cap) {
  std::size_t count = 0;
  sombor::for_each_in_family(
      sombor::TreeFamilyQuery{n, alpha},
      [&](const sombor::Tree& t) {
        if (count++ > 0) std::cout << '\n';
        sombor::write_edge_list(std::cout, t);
      },
      cap);
  if (count == 0) std::cerr << "family empty: no tree of order " << n << " with that alpha\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum Sombor index of trees with given independence number"};
  app.require_subcommand(1);

  sombor::VerifyOptions verify_opt;
  std::optional<std::string> csv_path;
  auto* verify = app.add_subcommand("verify", "exhaustively check every (n, alpha) cell");
  verify->add_option("--n-min", verify_opt.n_min, "smallest order")->required();
  verify->add_option("--n-max", verify_opt.n_max, "largest order")->required();
  verify->add_option("--jobs", verify_opt.jobs, "worker threads (0 = all cores)");
  verify->add_option("--csv", csv_path, "also write the CSV table here");
  verify->add_option("--cap", verify_opt.cap, "raise the largest allowed n");

  std::string input;
  auto* compute = app.add_subcommand("compute", "print SO, alpha, class and code of a tree");
  compute->add_option("--input", input, "edge-list file")->required();

  std::size_t n = 0;
  std::size_t alpha = 0;
  std::string output = "-";
  auto* construct = app.add_subcommand("construct", "write the extremal tree for (n, alpha)");
  construct->add_option("--n", n, "order")->required();
  construct->add_option("--alpha", alpha, "independence number")->required();
  construct->add_option("--output", output, "edge-list file ('-' for stdout)")->required();

  sombor::VerifyOptions table_opt;
  std::string table_path;
  auto* table = app.add_subcommand("table", "write the verification table as CSV");
  table->add_option("--n-max", table_opt.n_max, "largest order")->required();
  table->add_option("--output", table_path, "CSV file ('-' for stdout)")->required();
  table->add_option("--jobs", table_opt.jobs, "worker threads (0 = all cores)");
  table->add_option("--cap", table_opt.cap, "raise the largest allowed n");

  std::size_t enum_n = 0;
  std::optional<std::size_t> enum_alpha;
  std::size_t enum_cap = sombor::kDefaultEnumerationCap;
  auto* enumerate = app.add_subcommand("enumerate", "print every free tree of order n");
  enumerate->add_option("--n", enum_n, "order")->required();
  enumerate->add_option("--alpha", enum_alpha, "only trees with this independence number");
  enumerate->add_option("--cap", enum_cap, "raise the largest allowed n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) {
      warn_cap(verify_opt.cap, sombor::kDefaultVerifyCap);
      return run_verify(verify_opt, csv_path);
    }
    if (*compute) return run_compute(input);
    if (*construct) return run_construct(n, alpha, output);
    if (*table) {
      warn_cap(table_opt.cap, sombor::kDefaultVerifyCap);
      return run_table(table_opt, table_path);
    }
    if (*enumerate) {
      warn_cap(enum_cap, sombor::kDefaultEnumerationCap);
      return run_enumerate(enum_n, enum_alpha, enum_cap);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sombor::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
