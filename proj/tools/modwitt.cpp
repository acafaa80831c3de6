// Command-line front end: verification reports, cocycle tables and extension
// presentations for the modular Witt algebra.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "modwitt/report.hpp"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitBadInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_primes(const std::optional<std::int64_t>& single,
                                       const std::string& range) {
  if (single && !range.empty()) throw UsageError("give either --prime or --primes, not both");
  std::vector<std::int64_t> out;
  if (single) {
    out.push_back(*single);
  } else if (!range.empty()) {
    static const std::regex pattern(R"((\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(range, m, pattern)) throw UsageError("--primes expects A..B");
    const std::int64_t lo = std::stoll(m[1]), hi = std::stoll(m[2]);
    if (lo > hi) throw UsageError("--primes range is empty");
    if (!modwitt::is_prime(lo) || !modwitt::is_prime(hi) || lo < 3)
      throw UsageError("--primes bounds must be primes >= 3");
    for (std::int64_t q = lo; q <= hi; ++q)
      if (modwitt::is_prime(q)) out.push_back(q);
  } else {
    throw UsageError("one of --prime or --primes is required");
  }
  return out;
}

int parse_index(const std::string& text, modwitt::Scalar p) {
  std::size_t used = 0;
  int i = 0;
  try {
    i = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("bad basis index '" + text + "'");
  }
  if (used != text.size() || i < -1 || i > static_cast<int>(p) - 2)
    throw UsageError("basis index must lie in -1.." + std::to_string(p - 2));
  return i;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology and restricted central extensions of the modular Witt algebra"};
  app.require_subcommand(1);

  std::optional<std::int64_t> prime;
  std::string primes;
  std::uint64_t seed = 0;
  int jobs = 0;
  modwitt::Scalar max_enum_prime = 13;

  auto* verify = app.add_subcommand("verify", "run every check; one JSON report per prime");
  verify->add_option("--prime", prime, "prime p >= 3")->envname("MODWITT_PRIME");
  verify->add_option("--primes", primes, "inclusive prime range A..B")->envname("MODWITT_PRIMES");
  verify->add_option("--seed", seed, "seed for randomized checks")->envname("MODWITT_SEED");
  verify->add_option("--jobs", jobs, "worker threads (0: OpenMP default)")->envname("MODWITT_JOBS");
  verify->add_option("--max-enum-prime", max_enum_prime,
                     "largest p for exponential enumerations and extension checks")
      ->envname("MODWITT_MAX_ENUM_PRIME");

  std::int64_t cocycle_prime = 0;
  std::vector<std::string> which_cocycle;
  auto* cocycles = app.add_subcommand("cocycles", "explicit cocycle coefficient tables");
  cocycles->add_option("--prime", cocycle_prime, "prime p >= 3")->required()->envname("MODWITT_PRIME");
  cocycles->add_option("--which", which_cocycle, "phi10 | omega I | all")
      ->required()
      ->expected(1, 2);

  std::int64_t ext_prime = 0;
  std::string which_ext;
  std::string format = "json";
  std::string output;
  auto* extension = app.add_subcommand("extension", "presentation of a restricted central extension");
  extension->add_option("--prime", ext_prime, "prime p >= 3")->required()->envname("MODWITT_PRIME");
  extension->add_option("--which", which_ext, "basis index i for E_i, or virasoro")->required();
  extension->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("MODWITT_FORMAT");
  extension->add_option("--output", output, "output file (default stdout)");
  extension->add_option("--seed", seed, "seed for the verification stamp")->envname("MODWITT_SEED");
  extension->add_option("--max-enum-prime", max_enum_prime,
                        "largest p for which the stamp is computed")
      ->envname("MODWITT_MAX_ENUM_PRIME");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*verify) {
      if (jobs > 0) omp_set_num_threads(jobs);
      const auto list = parse_primes(prime, primes);
      modwitt::VerifyOptions opt;
      opt.seed = seed;
      opt.max_enum_prime = max_enum_prime;
      for (auto q : list) modwitt::PrimeField{q};  // reject bad input before any work
      bool all = true;
      for (auto q : list) {
        const auto report = modwitt::verify_prime(q, opt);
        std::cout << report.json.dump() << '\n' << std::flush;
        all = all && report.passed;
      }
      return all ? 0 : kExitChecksFailed;
    }

    if (*cocycles) {
      const modwitt::PrimeField f(cocycle_prime);
      const std::string& kind = which_cocycle.front();
      modwitt::Json out;
      out["prime"] = f.order();
      if (kind == "phi10" && which_cocycle.size() == 1) {
        if (f.order() == 3) throw UsageError("phi10 needs p > 3");
        out["phi10"] = modwitt::cochain2_json(modwitt::phi_one_zero(f));
      } else if (kind == "omega" && which_cocycle.size() == 2) {
        const int i = parse_index(which_cocycle[1], f.order());
        modwitt::Json omega;
        omega["index"] = i;
        omega["values"] = modwitt::omega_json(modwitt::omega_cocycle(f, i).omega_basis);
        out["omega"] = std::move(omega);
      } else if (kind == "all" && which_cocycle.size() == 1) {
        if (f.order() > 3) out["phi10"] = modwitt::cochain2_json(modwitt::phi_one_zero(f));
        modwitt::Json list = modwitt::Json::array();
        for (int i = -1; i <= static_cast<int>(f.order()) - 2; ++i) {
          modwitt::Json omega;
          omega["index"] = i;
          omega["values"] = modwitt::omega_json(modwitt::omega_cocycle(f, i).omega_basis);
          list.push_back(std::move(omega));
        }
        out["omega"] = std::move(list);
      } else {
        throw UsageError("--which expects phi10, omega I, or all");
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (*extension) {
      const modwitt::PrimeField f(ext_prime);
      modwitt::ExtensionSelector which;
      if (which_ext != "virasoro") {
        which = parse_index(which_ext, f.order());
      } else if (f.order() == 3) {
        throw UsageError("the Virasoro extension needs p > 3");
      }
      const auto ext = modwitt::selected_extension(f, which);
      std::optional<modwitt::AxiomReport> stamp;
      if (which || f.order() <= max_enum_prime) stamp = modwitt::verify_restricted_axioms(ext, 10, seed);
      if (format == "csv") {
        write_output(output, modwitt::extension_csv(ext));
        std::cerr << "verification: "
                  << (!stamp ? "skipped" : stamp->all_passed() ? "pass" : "fail") << '\n';
      } else {
        write_output(output, modwitt::extension_json(ext, which, stamp).dump(2) + "\n");
      }
      return !stamp || stamp->all_passed() ? 0 : kExitChecksFailed;
    }
  } catch (const modwitt::NotPrime& e) {
    std::cerr << "error: " << e.what() << " (not prime)\n";
    return kExitBadInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return 0;
}
