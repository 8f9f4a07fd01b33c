// Command-line front end. Four subcommands:
//   radius  solve one radius equation and print root, residual, closed form
//   table   emit truncated-equation roots as CSV, optionally diffed against
//           the embedded reference values
//   verify  run one seeded property check and write its JSON report
//   eval    evaluate one functional on a series file
//
// Exit codes: 0 pass, 1 inequality violation (or a sharpness probe that
// found no witness, or a reference mismatch), 2 no radius in (0,1),
// 3 check skipped because its hypotheses fail, 4 unusable input.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bohr/errors.hpp"
#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"
#include "bohr/verify.hpp"
#include "bohr/weights.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitNoRadius = 2;
constexpr int kExitSkipped = 3;
constexpr int kExitInputError = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Relative output paths land in BOHR_OUT_DIR when that variable is set and
// nonempty; absolute paths are used as given.
std::filesystem::path resolve_out(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("BOHR_OUT_DIR"); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / p;
  }
  return p;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path.string());
  out << text;
  if (!out) throw std::invalid_argument("short write: " + path.string());
}

struct WeightFlags {
  std::string desc = "geometric";
  double alpha = 1.0;
  std::size_t n = 2;
};

void add_weight_flags(CLI::App* cmd, WeightFlags& wf) {
  cmd->add_option("--weights", wf.desc,
                  "geometric | power | truncated | inline JSON | JSON file path")
      ->capture_default_str();
  cmd->add_option("--alpha", wf.alpha, "exponent for power weights")
      ->capture_default_str();
  cmd->add_option("--n", wf.n, "cutoff for truncated weights")
      ->capture_default_str();
}

bohr::WeightSequence parse_weights(const WeightFlags& wf) {
  if (wf.desc == "geometric") return bohr::WeightSequence::geometric();
  if (wf.desc == "power") return bohr::WeightSequence::power(wf.alpha);
  if (wf.desc == "truncated") return bohr::WeightSequence::truncated_geometric(wf.n);
  if (!wf.desc.empty() && wf.desc.front() == '{') {
    return bohr::WeightSequence::from_json(wf.desc);
  }
  if (std::filesystem::exists(wf.desc)) {
    return bohr::WeightSequence::from_json(slurp(wf.desc));
  }
  throw std::invalid_argument(
      "unknown weights '" + wf.desc +
      "': expected geometric, power, truncated, inline JSON, or a JSON file");
}

// ---------------------------------------------------------------------------
// radius

struct RadiusCmd {
  std::string equation = "general";
  WeightFlags w;
  double p = 1.0;
  double contrast = 1.0;
  std::optional<double> k;
  bohr::SolveOptions opts;
};

double harmonic_k(const RadiusCmd& cmd) {
  if (cmd.k) return *cmd.k;
  if (cmd.contrast < 1.0) {
    throw std::domain_error("contrast K must be at least 1");
  }
  return (cmd.contrast - 1.0) / (cmd.contrast + 1.0);
}

int run_radius(const RadiusCmd& cmd) {
  using bohr::RadiusProblem;
  std::optional<RadiusProblem> problem;
  double value = 0.0;
  if (cmd.equation == "general") {
    const bohr::WeightSequence w = parse_weights(cmd.w);
    problem = RadiusProblem::general(w, cmd.p);
    value = bohr::radius_general(w, cmd.p, cmd.opts);
  } else if (cmd.equation == "truncated") {
    problem = RadiusProblem::truncated(cmd.w.n, cmd.p);
    value = bohr::radius_truncated(cmd.w.n, cmd.p, cmd.opts);
  } else if (cmd.equation == "power") {
    problem = RadiusProblem::power(cmd.w.alpha, cmd.p);
    value = bohr::radius_power(cmd.w.alpha, cmd.p, cmd.opts);
  } else if (cmd.equation == "harmonic") {
    const bohr::WeightSequence w = parse_weights(cmd.w);
    const double k = harmonic_k(cmd);
    problem = RadiusProblem::harmonic(w, cmd.p, k);
    value = bohr::radius_harmonic(w, cmd.p, k, cmd.opts);
  } else if (cmd.equation == "schwarz-derivative") {
    const bohr::WeightSequence w = parse_weights(cmd.w);
    problem = RadiusProblem::schwarz_derivative(w);
    value = bohr::radius_schwarz_derivative(w, cmd.opts);
  } else if (cmd.equation == "odd") {
    const bohr::WeightSequence w = parse_weights(cmd.w);
    problem = RadiusProblem::odd(w);
    value = bohr::radius_odd(w, cmd.opts);
  } else {
    throw std::invalid_argument("unknown equation: " + cmd.equation);
  }

  std::printf("equation = %s\n", bohr::equation_name(problem->equation()).c_str());
  std::printf("problem = %s\n", problem->describe().c_str());
  std::printf("radius = %.12f\n", value);
  std::printf("residual = %.3e\n", std::fabs(problem->residual(value)));
  if (const auto cf = bohr::closed_form(*problem)) {
    std::printf("closed_form = %.12f\n", *cf);
    std::printf("discrepancy = %.3e\n", std::fabs(value - *cf));
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// table

struct TableCmd {
  double p = 1.0;
  std::size_t n_min = 2;
  std::size_t n_max = 10;
  bool compare = false;
  std::string out;
};

int run_table(const TableCmd& cmd) {
  if (cmd.n_min < 1 || cmd.n_max < cmd.n_min) {
    throw std::invalid_argument("table range must satisfy 1 <= n-min <= n-max");
  }

  // Under --compare-reference the rows are exactly the published ones for
  // this p; otherwise the contiguous range [n-min, n-max].
  std::vector<std::size_t> rows;
  std::vector<double> reference;
  if (cmd.compare) {
    for (const auto& ref : bohr::reference_truncated_radii()) {
      if (ref.p == cmd.p) {
        rows.push_back(ref.n);
        reference.push_back(ref.value);
      }
    }
    if (rows.empty()) {
      throw std::invalid_argument("reference table covers p = 1 and p = 2 only");
    }
  } else {
    for (std::size_t n = cmd.n_min; n <= cmd.n_max; ++n) rows.push_back(n);
  }

  std::string csv = "n,R\n";
  std::vector<double> solved;
  solved.reserve(rows.size());
  for (std::size_t n : rows) {
    const double value = bohr::radius_truncated(n, cmd.p);
    solved.push_back(value);
    char line[64];
    std::snprintf(line, sizeof line, "%zu,%.6f\n", n, value);
    csv += line;
  }

  if (cmd.out.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_file(resolve_out(cmd.out), csv);
  }

  if (cmd.compare) {
    bool mismatch = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (std::fabs(solved[i] - reference[i]) > 1e-6) {
        mismatch = true;
        std::fprintf(stderr, "mismatch at n = %zu: solved %.6f, reference %.6f\n",
                     rows[i], solved[i], reference[i]);
      }
    }
    if (mismatch) return kExitViolation;
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyCmd {
  std::string check;
  WeightFlags w;
  double p = 1.0;
  double contrast = 1.0;
  std::string psi = "norm";
  std::string lambda = "1";
  std::string mode = "subordination";
  std::size_t samples = 256;
  std::uint64_t seed = 1;
  double eps = 0.05;
  std::string out;
};

double parse_number(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " must be a number: " + text);
  }
  if (used != text.size()) {
    throw std::invalid_argument(std::string(what) + " must be a number: " + text);
  }
  return value;
}

bohr::VerificationReport run_check(const VerifyCmd& cmd) {
  using namespace bohr;
  const std::string& c = cmd.check;
  if (c == "refined-bohr") {
    return check_refined_bohr(parse_weights(cmd.w), cmd.p, cmd.samples, cmd.seed);
  }
  if (c == "sharpness") {
    return probe_sharpness(parse_weights(cmd.w), cmd.p, cmd.eps);
  }
  if (c == "quasi") {
    return check_quasi_majorant(parse_weights(cmd.w), cmd.samples, cmd.seed);
  }
  if (c == "weighted-quasi") {
    const LambdaMode lm = cmd.lambda == "carlson"
                              ? LambdaMode::carlson()
                              : LambdaMode::constant(parse_number(cmd.lambda, "lambda"));
    return check_weighted_quasi(parse_weights(cmd.w), QuadraticWeight::parse(cmd.psi),
                                lm, cmd.samples, cmd.seed);
  }
  if (c == "goluzin") {
    return check_goluzin(QuadraticWeight::parse(cmd.psi), cmd.samples, cmd.seed);
  }
  if (c == "harmonic") {
    return check_harmonic(parse_weights(cmd.w), cmd.p, cmd.contrast, cmd.samples,
                          cmd.seed);
  }
  if (c == "derivative-bohr") {
    return check_derivative_bohr(parse_weights(cmd.w), cmd.samples, cmd.seed);
  }
  if (c == "derivative-majorization") {
    MajorizationMode mode;
    if (cmd.mode == "subordination") {
      mode = MajorizationMode::subordination;
    } else if (cmd.mode == "modulus") {
      mode = MajorizationMode::modulus;
    } else {
      throw std::invalid_argument("unknown mode: " + cmd.mode +
                                  " (expected subordination or modulus)");
    }
    return check_derivative_majorization(parse_weights(cmd.w), mode, cmd.samples,
                                         cmd.seed);
  }
  if (c == "odd") {
    return check_odd_majorant(parse_weights(cmd.w), cmd.samples, cmd.seed);
  }
  if (c == "bombieri") return check_bombieri(cmd.samples, cmd.seed);
  if (c == "carlson") return check_carlson(cmd.samples, cmd.seed);
  if (c == "table") return check_reference_table(cmd.p);
  throw std::invalid_argument("unknown check: " + c);
}

int run_verify(const VerifyCmd& cmd) {
  const bohr::VerificationReport rep = run_check(cmd);
  const std::string json = rep.to_json() + "\n";
  if (cmd.out.empty()) {
    std::fputs(json.c_str(), stdout);
  } else {
    write_file(resolve_out(cmd.out), json);
    std::printf("check = %s\n", rep.check.c_str());
    std::printf("samples = %zu\n", rep.samples);
    std::printf("violations = %zu\n", rep.violations.size());
    std::printf("witnesses = %zu\n", rep.witnesses.size());
    if (rep.skipped) std::printf("skipped = %s\n", rep.skip_reason.c_str());
  }
  if (rep.skipped) return kExitSkipped;
  if (!rep.violations.empty()) return kExitViolation;
  if (cmd.check == "sharpness" && rep.witnesses.empty()) return kExitViolation;
  return kExitPass;
}

// ---------------------------------------------------------------------------
// eval

struct EvalCmd {
  std::string functional;
  std::string input;
  WeightFlags w;
  double p = 1.0;
  double r = 0.0;
  std::size_t start = 0;
  std::string psi = "norm";
};

int run_eval(const EvalCmd& cmd) {
  using namespace bohr;
  const std::string& f = cmd.functional;
  const auto series = [&]() -> PowerSeries {
    if (cmd.input.empty()) {
      throw std::invalid_argument("functional '" + f + "' needs --input <series.json>");
    }
    return PowerSeries::from_json(slurp(cmd.input));
  };

  FunctionalValue v{};
  if (f == "bombieri-bound") {
    v = {bombieri_bound(cmd.r), 0.0};
  } else if (f == "bohr") {
    v = bohr_functional(series(), parse_weights(cmd.w), cmd.p, cmd.r);
  } else if (f == "refined") {
    v = refined_functional(series(), parse_weights(cmd.w), cmd.p, cmd.r);
  } else if (f == "majorant") {
    v = majorant(series(), parse_weights(cmd.w), cmd.start, cmd.r);
  } else if (f == "refined-remainder") {
    v = refined_remainder(series(), parse_weights(cmd.w), cmd.r);
  } else if (f == "norm-sq") {
    v = norm_sq(series(), cmd.r);
  } else if (f == "derivative") {
    v = derivative_majorant(series(), parse_weights(cmd.w), cmd.r);
  } else if (f == "quadratic") {
    v = quadratic_weighted_sum(series(), QuadraticWeight::parse(cmd.psi), cmd.r);
  } else {
    throw std::invalid_argument("unknown functional: " + f);
  }

  std::printf("functional = %s\n", f.c_str());
  std::printf("r = %g\n", cmd.r);
  std::printf("value = %.6f\n", v.value);
  std::printf("tail_bound = %.3e\n", v.tail_bound);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted radii, majorant functionals, and inequality checks"};
  app.require_subcommand(1);

  RadiusCmd rc;
  CLI::App* radius = app.add_subcommand("radius", "solve a weighted radius equation");
  radius
      ->add_option("--equation", rc.equation,
                   "general | truncated | power | harmonic | schwarz-derivative | odd")
      ->capture_default_str();
  add_weight_flags(radius, rc.w);
  radius->add_option("--p", rc.p, "head exponent")->capture_default_str();
  radius->add_option("--K", rc.contrast,
                     "harmonic contrast ratio; sets k = (K-1)/(K+1)");
  radius->add_option("--k", rc.k, "harmonic dilation ratio, overrides --K");
  radius->add_option("--tol", rc.opts.tol, "bisection tolerance")->capture_default_str();
  radius->add_option("--step", rc.opts.step, "scan step")->capture_default_str();

  TableCmd tc;
  CLI::App* table = app.add_subcommand("table", "emit truncated-equation roots as CSV");
  table->add_option("--p", tc.p, "head exponent")->capture_default_str();
  table->add_option("--n-min", tc.n_min, "first cutoff")->capture_default_str();
  table->add_option("--n-max", tc.n_max, "last cutoff")->capture_default_str();
  table->add_flag("--compare-reference", tc.compare,
                  "re-solve the published rows and exit 1 on any 1e-6 mismatch");
  table->add_option("--out", tc.out, "write CSV here instead of stdout");

  VerifyCmd vc;
  CLI::App* verify = app.add_subcommand("verify", "run one seeded property check");
  verify
      ->add_option("--check", vc.check,
                   "refined-bohr | sharpness | quasi | weighted-quasi | goluzin | "
                   "harmonic | derivative-bohr | derivative-majorization | odd | "
                   "bombieri | carlson | table")
      ->required();
  add_weight_flags(verify, vc.w);
  verify->add_option("--p", vc.p, "head exponent")->capture_default_str();
  verify->add_option("--K", vc.contrast, "harmonic contrast ratio")
      ->capture_default_str();
  verify->add_option("--psi", vc.psi, "norm | linear | derivative")
      ->capture_default_str();
  verify->add_option("--lambda", vc.lambda, "nonnegative constant or 'carlson'")
      ->capture_default_str();
  verify->add_option("--mode", vc.mode, "subordination | modulus")
      ->capture_default_str();
  verify->add_option("--samples", vc.samples, "sample count")->capture_default_str();
  verify->add_option("--seed", vc.seed, "base seed")->capture_default_str();
  verify->add_option("--eps", vc.eps, "sharpness window width")->capture_default_str();
  verify->add_option("--out", vc.out, "write the JSON report here");

  EvalCmd ec;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one functional");
  eval->add_option("--functional", ec.functional,
                   "bohr | refined | majorant | refined-remainder | norm-sq | "
                   "derivative | quadratic | bombieri-bound")
      ->required();
  eval->add_option("--input", ec.input, "series JSON file");
  add_weight_flags(eval, ec.w);
  eval->add_option("--p", ec.p, "head exponent")->capture_default_str();
  eval->add_option("--r", ec.r, "evaluation radius")->required();
  eval->add_option("--start", ec.start, "first index for the majorant sum")
      ->capture_default_str();
  eval->add_option("--psi", ec.psi, "norm | linear | derivative")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (radius->parsed()) return run_radius(rc);
    if (table->parsed()) return run_table(tc);
    if (verify->parsed()) return run_verify(vc);
    return run_eval(ec);
  } catch (const bohr::no_radius_error& e) {
    std::fprintf(stderr, "no radius: %s\n", e.what());
    return kExitNoRadius;
  } catch (const bohr::capability_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 70;
  }
}
