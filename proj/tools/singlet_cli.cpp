// Command-line front end for the singlet library.
//
//   singlet witness --ps 0.85 --m 0
//   singlet concurrence state.json
//   singlet twirl state.json --axis m
//   singlet sample --count 5000 --family spun --seed 7 --output samples.csv
//   singlet contour --targets 0.2,0.5,0.8 --samples 100000 --output contour.csv
//   singlet verify
//
// Exit codes: 0 success / certified, 1 negative result, 2 invalid input.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "singlet/singlet.hpp"

namespace {

using nlohmann::json;
using namespace singlet;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_invalid = 2;

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string output;
  int threads = 1;
};

/// Writes to --output when given, stdout otherwise.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw Error(ErrorKind::Io, "cannot open output file " + path);
    path_ = path;
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw Error(ErrorKind::Io, "write failed for " + (path_.empty() ? std::string("stdout") : path_));
  }

 private:
  std::ofstream file_;
  std::string path_;
};

json verdict_json(const WitnessVerdict& v) {
  return {{"singlet_fraction", v.singlet_fraction},
          {"polarisation", v.polarisation},
          {"mode", std::string(to_string(v.mode))},
          {"tight", v.tight},
          {"physical", v.physical},
          {"singlet_bound", v.singlet_bound_value},
          {"min_concurrence", v.min_concurrence},
          {"entangled_certified", v.entangled_certified}};
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

struct WitnessArgs {
  double ps = 0.0;
  std::vector<double> m;
  std::optional<double> mz;
  std::string mode = "full";
};

int cmd_witness(const WitnessArgs& args, const GlobalOptions& global) {
  Observables obs;
  obs.singlet_fraction = args.ps;
  if (args.m.size() == 1) {
    obs.magnetisation = {0.0, 0.0, args.m[0]};
  } else if (args.m.size() == 3) {
    obs.magnetisation = {args.m[0], args.m[1], args.m[2]};
  } else if (!args.m.empty()) {
    throw Error(ErrorKind::Parse, "--m takes either |m| or three components m_x m_y m_z");
  }
  if (args.mz) obs.magnetisation.z = *args.mz;
  const WitnessMode mode = args.mode == "z" ? WitnessMode::ZOnly : WitnessMode::FullVector;

  const WitnessVerdict v = assess(obs, mode);
  OutputSink sink(global.output);
  sink.stream() << verdict_json(v).dump(2) << '\n';
  sink.finish();
  if (!v.physical) {
    std::cerr << "error: unphysical input: p_s = " << v.singlet_fraction << " exceeds 1 - |m| = " << 1.0 - v.polarisation
              << " (physical limit from normalisation of probability)\n";
    return exit_invalid;
  }
  return v.entangled_certified ? exit_ok : exit_negative;
}

int cmd_concurrence(const std::string& path, const GlobalOptions& global) {
  const DensityOperator rho = load_state(path);
  const ConcurrenceResult c = wootters_concurrence(rho);
  const Observables obs = observables(rho);
  json out = {{"concurrence", c.concurrence},
              {"lambdas", c.lambdas},
              {"singlet_fraction", obs.singlet_fraction},
              {"magnetisation", vec_json(obs.magnetisation)}};
  OutputSink sink(global.output);
  sink.stream() << out.dump(2) << '\n';
  sink.finish();
  return exit_ok;
}

struct TwirlArgs {
  std::string path;
  std::string axis = "m";
  std::string basis = "computational";
  int numeric_points = 0;
};

int cmd_twirl(const TwirlArgs& args, const GlobalOptions& global) {
  const DensityOperator rho = load_state(args.path);
  DensityOperator out = args.axis == "z" ? twirl_analytic(rho) : twirl_about_magnetisation(rho);
  if (args.numeric_points > 0) {
    const DensityOperator aligned =
        args.axis == "z" ? rho : apply_joint_rotation(rho, rotation_to_z(magnetisation(rho)));
    out = twirl_numeric(aligned, args.numeric_points);
  }
  OutputSink sink(global.output);
  sink.stream() << state_to_json(out, parse_basis(args.basis)).dump(2) << '\n';
  sink.finish();
  return exit_ok;
}

struct SampleArgs {
  std::size_t count = 5000;
  std::string family = "spun";
};

int cmd_sample(const SampleArgs& args, const GlobalOptions& global) {
  SamplerConfig cfg{global.seed, args.count, parse_family(args.family), global.threads};
  const auto records = run_samples(cfg);
  OutputSink sink(global.output);
  write_samples_csv(sink.stream(), records);
  sink.finish();
  return exit_ok;
}

struct ContourArgs {
  std::vector<double> targets{0.2, 0.5, 0.8};
  std::size_t samples = 100000;
  double bin_width = default_bin_width;
  std::string family = "spun";
  bool reference = false;
};

int cmd_contour(const ContourArgs& args, const GlobalOptions& global) {
  SamplerConfig cfg{global.seed, args.samples, parse_family(args.family), global.threads};
  const auto records = run_samples(cfg);
  const auto rows = extract_contours(records, {args.targets, args.bin_width});
  for (const auto& r : rows) {
    if (r.qualifying < insufficient_samples_threshold) {
      std::cerr << "warning: InsufficientSamples: C = " << r.target_concurrence << ", m bin " << r.m << " has "
                << r.qualifying << " qualifying states\n";
    }
  }
  OutputSink sink(global.output);
  write_contour_csv(sink.stream(), rows, args.reference);
  sink.finish();
  return exit_ok;
}

struct VerifyArgs {
  std::size_t samples = 20000;
  int supremum_resolution = 200;
  std::string fault = "none";
};

int cmd_verify(const VerifyArgs& args, const GlobalOptions& global) {
  VerifyOptions opt;
  opt.samples = args.samples;
  opt.seed = global.seed;
  opt.threads = global.threads;
  opt.supremum_resolution = args.supremum_resolution;
  opt.fault = args.fault == "inflated-bound" ? InjectedFault::InflatedBound : InjectedFault::None;

  const auto results = run_verification(opt);
  OutputSink sink(global.output);
  auto& out = sink.stream();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name << " worst=" << std::setprecision(3)
        << std::scientific << r.worst << " tol=" << r.tolerance << std::defaultfloat << " cases=" << r.cases
        << " time=" << std::fixed << std::setprecision(2) << r.seconds << "s" << std::defaultfloat << '\n';
  }
  if (!all) {
    out << "failed checks:";
    for (const auto& r : results)
      if (!r.passed) out << ' ' << r.name << " (worst violation " << r.worst << ")";
    out << '\n';
  }
  sink.finish();
  return all ? exit_ok : exit_negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify two-spin entanglement from singlet fraction and magnetisation"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Random seed")->capture_default_str();
  app.add_option("--output,-o", global.output, "Output file (default: stdout)");
  app.add_option("--threads", global.threads, "Worker threads (0 = all cores)")->capture_default_str();

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand("witness", "Minimum concurrence from (p_s, m)");
  witness->add_option("--ps", witness_args.ps, "Singlet fraction")->required();
  witness->add_option("--m", witness_args.m, "|m|, or m_x m_y m_z")->expected(1, 3);
  witness->add_option("--mz", witness_args.mz, "z-magnetisation");
  witness->add_option("--mode", witness_args.mode, "full (|m|) or z (|m_z| only, not tight)")
      ->check(CLI::IsMember({"full", "z"}))
      ->capture_default_str();

  std::string state_path;
  auto* concurrence = app.add_subcommand("concurrence", "Wootters concurrence of a JSON state file");
  concurrence->add_option("state", state_path, "State JSON file")->required();

  TwirlArgs twirl_args;
  auto* twirl = app.add_subcommand("twirl", "Average a state over joint rotations about the magnetisation axis");
  twirl->add_option("state", twirl_args.path, "State JSON file")->required();
  twirl->add_option("--axis", twirl_args.axis, "m (rotate m onto z first) or z")
      ->check(CLI::IsMember({"m", "z"}))
      ->capture_default_str();
  twirl->add_option("--basis", twirl_args.basis, "Basis of the written matrix")
      ->check(CLI::IsMember({"computational", "coupled"}))
      ->capture_default_str();
  twirl->add_option("--numeric", twirl_args.numeric_points, "Use the quadrature average with N >= 8 points");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Random states as CSV records");
  sample->add_option("--count", sample_args.count, "Number of states")->capture_default_str()->check(CLI::PositiveNumber);
  sample->add_option("--family", sample_args.family, "spun, ginibre, separable or saturating")
      ->check(CLI::IsMember({"spun", "ginibre", "separable", "saturating"}))
      ->capture_default_str();

  ContourArgs contour_args;
  auto* contour = app.add_subcommand("contour", "Empirical iso-concurrence contours vs the analytic line");
  contour->add_option("--targets", contour_args.targets, "Target concurrences in [0, 1)")->delimiter(',');
  contour->add_option("--samples", contour_args.samples, "Number of states")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  contour->add_option("--bin-width", contour_args.bin_width, "Width of the m bins")->capture_default_str();
  contour->add_option("--family", contour_args.family, "State family")
      ->check(CLI::IsMember({"spun", "ginibre", "separable", "saturating"}))
      ->capture_default_str();
  contour->add_flag("--reference", contour_args.reference, "Append the mintert_ps reference column");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--samples", verify_args.samples, "Samples per randomized check")->capture_default_str();
  verify->add_option("--supremum-resolution", verify_args.supremum_resolution, "Grid points per axis")
      ->capture_default_str();
  verify->add_option("--inject-fault", verify_args.fault)->check(CLI::IsMember({"none", "inflated-bound"}))->group("");

  for (auto* sub : {witness, concurrence, twirl, sample, contour, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (*witness) return cmd_witness(witness_args, global);
    if (*concurrence) return cmd_concurrence(state_path, global);
    if (*twirl) return cmd_twirl(twirl_args, global);
    if (*sample) return cmd_sample(sample_args, global);
    if (*contour) return cmd_contour(contour_args, global);
    if (*verify) return cmd_verify(verify_args, global);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}
