#include "loewner_lab/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "loewner/catalog.hpp"
#include "loewner/energy.hpp"
#include "loewner/error.hpp"
#include "loewner/minimizer.hpp"
#include "loewner/regularity.hpp"
#include "loewner/tracer.hpp"
#include "loewner/zipper.hpp"
#include "loewner_lab/io.hpp"

namespace loewner::lab {

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Flags {
  std::string config;
  std::optional<double> tolerance;
  std::optional<int> steps;
  std::string eps_schedule;
  std::optional<long long> root;
  std::string out;
  std::optional<std::uint64_t> seed;
};

std::vector<double> parse_schedule(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw InputError("bad --eps-schedule entry '" + cell + "'");
    }
  }
  return out;
}

RunConfig resolve_config(const Flags& flags) {
  RunConfig config;
  if (const char* env = std::getenv("LOEWNER_LAB_CONFIG"); env && *env && flags.config.empty()) {
    apply_config_file(config, env, Source::Environment);
  }
  if (!flags.config.empty()) apply_config_file(config, flags.config, Source::ConfigFile);
  if (flags.tolerance) {
    config.tolerance = *flags.tolerance;
    config.tolerance_source = Source::Flag;
  }
  if (flags.steps) {
    config.steps_per_unit = *flags.steps;
    config.steps_source = Source::Flag;
  }
  if (!flags.eps_schedule.empty()) {
    config.eps_schedule = parse_schedule(flags.eps_schedule);
    config.schedule_source = Source::Flag;
  }
  if (flags.seed) {
    config.seed = *flags.seed;
    config.seed_source = Source::Flag;
  }
  if (!flags.out.empty()) {
    config.output_dir = flags.out;
    config.output_source = Source::Flag;
  }
  config.validate();
  return config;
}

Json input_record(const fs::path& path) {
  return {{"path", path.string()}, {"sha1", git_blob_hash(read_text(path))}};
}

Json report_header(const std::string& command, const RunConfig& config, const std::vector<fs::path>& inputs) {
  Json j;
  j["tool"] = "loewner-lab";
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = config.to_json();
  Json in = Json::array();
  for (const auto& p : inputs) in.push_back(input_record(p));
  j["inputs"] = std::move(in);
  return j;
}

Json energy_json(const EnergyReport& e) {
  Json j;
  j["value"] = number_or_string(e.value);
  j["finite_value"] = e.finite_value;
  j["diverged"] = e.diverged;
  j["divergence_exponent"] = e.divergence_exponent;
  j["derivative_scheme"] = e.derivative_scheme;
  j["grid_resolution"] = e.grid_resolution;
  j["band_energies"] = e.band_energies;
  return j;
}

Json loop_json(const LoopEnergyReport& r) {
  Json j;
  j["root_index"] = r.root_index;
  j["eps_schedule"] = r.eps_schedule;
  j["eps_samples"] = r.eps_samples;
  j["partial_energies"] = r.partial_energies;
  j["tail_estimate"] = r.tail_estimate;
  j["extrapolated"] = number_or_string(r.extrapolated);
  j["monotone"] = r.monotone;
  return j;
}

std::string partials_csv(const LoopEnergyReport& r) {
  CsvWriter csv({"eps", "removed_samples", "energy"});
  for (std::size_t i = 0; i < r.partial_energies.size(); ++i) {
    csv.row({r.eps_schedule[i], static_cast<double>(r.eps_samples[i]), r.partial_energies[i]});
  }
  return csv.str();
}

DrivingFunction driving_of_curve(const CurveFile& file) {
  switch (file.kind) {
    case CurveKind::Loop: throw InputError("a loop has no single driving function; use loop-energy");
    case CurveKind::Tangential: return compute_driving(attach_and_lift(file.samples())).driving;
    default: return compute_driving(file.samples()).driving;
  }
}

// ---- subcommands ----

int cmd_trace(const fs::path& input, const RunConfig& config, std::ostream& out) {
  const DrivingFunction W = read_driving(input);
  const CurveTrace trace = trace_curve(W, config.steps_per_unit);
  CurveFile file;
  file.kind = CurveKind::Chord;
  file.points = trace.points.points();
  CsvWriter csv({"t", "re", "im"});
  for (std::size_t i = 0; i < file.points.size(); ++i) {
    csv.row({trace.t_of_point[i], file.points[i].real(), file.points[i].imag()});
  }
  Json report = report_header("trace", config, {input});
  report["samples"] = file.points.size();
  report["capacity"] = W.total_capacity() - W.start();
  report["tip"] = {file.points.back().real(), file.points.back().imag()};
  write_json(config.output_dir / "curve.json", file.to_json());
  write_text(config.output_dir / "trace.csv", csv.str());
  write_json(config.output_dir / "report.json", report);
  out << "traced " << file.points.size() << " points, tip " << format_double(file.points.back().real()) << " "
      << format_double(file.points.back().imag()) << "\n";
  return kExitOk;
}

int cmd_drive(const fs::path& input, const RunConfig& config, std::ostream& out) {
  const CurveFile file = read_curve(input);
  const DrivingFunction W = driving_of_curve(file);
  CsvWriter csv({"t", "W"});
  for (std::size_t i = 0; i < W.t().size(); ++i) csv.row({W.t()[i], W.w()[i]});
  Json report = report_header("drive", config, {input});
  report["samples"] = W.t().size();
  report["capacity"] = W.total_capacity();
  write_json(config.output_dir / "driving.json", driving_to_json(W));
  write_text(config.output_dir / "driving.csv", csv.str());
  write_json(config.output_dir / "report.json", report);
  out << "capacity " << format_double(W.total_capacity()) << "\n";
  return kExitOk;
}

int cmd_energy(const fs::path& input, const RunConfig& config, std::ostream& out) {
  DrivingFunction W;
  if (input.extension() == ".csv") {
    W = read_driving(input);
  } else {
    const Json j = parse_json(read_text(input), input.string());
    if (j.is_object() && j.value("format", "") == "loewner-curve") {
      W = driving_of_curve(CurveFile::from_json(j));
    } else {
      W = driving_from_json(j);
    }
  }
  const EnergyReport e = chordal_energy(W);
  Json report = report_header("energy", config, {input});
  report["energy"] = energy_json(e);
  CsvWriter csv({"band", "t_lo", "t_hi", "energy"});
  const double T = W.total_capacity();
  for (std::size_t j = 0; j < e.band_energies.size(); ++j) {
    csv.row({static_cast<double>(j), T * std::ldexp(1.0, -static_cast<int>(j) - 1), T * std::ldexp(1.0, -static_cast<int>(j)),
             e.band_energies[j]});
  }
  write_json(config.output_dir / "report.json", report);
  write_text(config.output_dir / "bands.csv", csv.str());
  out << "energy " << (e.diverged ? std::string("inf") : format_double(e.value)) << "\n";
  return kExitOk;
}

std::vector<long long> random_roots(std::size_t count, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> pick(0, static_cast<long long>(n) - 1);
  std::vector<long long> roots;
  for (std::size_t i = 0; i < count; ++i) roots.push_back(pick(rng));
  return roots;
}

int cmd_loop_energy(const fs::path& input, const RunConfig& config, long long root, std::size_t random_count,
                    std::ostream& out) {
  const CurveFile file = read_curve(input);
  if (file.kind != CurveKind::Loop) throw InputError("loop-energy expects a loop curve file");
  const CurveSamples loop = file.samples();
  const LoopEnergyReport r = loop_energy(loop, root, config.schedule());
  Json report = report_header("loop-energy", config, {input});
  report["loop_energy"] = loop_json(r);
  if (random_count > 0) {
    Json sweep = Json::array();
    for (long long k : random_roots(random_count, loop.size(), config.seed)) {
      sweep.push_back({{"root", k}, {"energy", number_or_string(loop_energy(loop, k, config.schedule()).extrapolated)}});
    }
    report["random_roots"] = std::move(sweep);
  }
  write_json(config.output_dir / "report.json", report);
  write_text(config.output_dir / "partials.csv", partials_csv(r));
  out << "loop energy " << format_double(r.extrapolated) << "\n";
  return kExitOk;
}

int cmd_arc_energy(const fs::path& input, const RunConfig& config, long long root, std::ostream& out) {
  const CurveFile file = read_curve(input);
  if (file.kind == CurveKind::Loop) throw InputError("arc-energy expects an open arc");
  const LoopEnergyReport r = arc_energy(file.samples(), root, config.schedule());
  Json report = report_header("arc-energy", config, {input});
  report["arc_energy"] = loop_json(r);
  write_json(config.output_dir / "report.json", report);
  write_text(config.output_dir / "partials.csv", partials_csv(r));
  out << "arc energy " << format_double(r.extrapolated) << "\n";
  return kExitOk;
}

Json result_json(const MinimizerResult& r) {
  Json j;
  j["energy"] = number_or_string(r.energy);
  j["iterations"] = r.iterations;
  j["stationarity"] = r.stationarity;
  j["converged"] = r.converged;
  j["rejected_steps"] = r.rejected_steps;
  j["constraint_index"] = r.constraint_index;
  Json history = Json::array();
  for (double e : r.energy_history) history.push_back(number_or_string(e));
  j["energy_history"] = std::move(history);
  return j;
}

int write_minimizer(const MinimizerResult& r, Json report, CurveKind kind, const RunConfig& config, std::ostream& out) {
  report["result"] = result_json(r);
  CurveFile file;
  file.kind = kind;
  file.points = r.curve.points();
  CsvWriter csv({"iteration", "energy"});
  for (std::size_t i = 0; i < r.energy_history.size(); ++i) csv.row({static_cast<double>(i), r.energy_history[i]});
  write_json(config.output_dir / "curve.json", file.to_json());
  write_json(config.output_dir / "report.json", report);
  write_text(config.output_dir / "history.csv", csv.str());
  out << "minimal energy " << format_double(r.energy) << (r.converged ? "" : " (not converged)") << "\n";
  return r.converged ? kExitOk : kExitNonConvergence;
}

int cmd_minimize_chord(double phi, double radius, const RunConfig& config, std::ostream& out) {
  ChordOptions options;
  options.steps_per_unit = config.steps_per_unit;
  options.tolerance = 1e-4 * config.tolerance;
  const MinimizerResult r = minimize_chord_through_point(phi, radius, options);
  Json report = report_header("minimize", config, {});
  report["problem"] = {{"kind", "chord"}, {"phi", phi}, {"radius", radius}};
  report["driving"] = driving_to_json(r.driving);
  return write_minimizer(r, std::move(report), CurveKind::Chord, config, out);
}

int cmd_minimize_loop(const fs::path& input, const RunConfig& config, std::ostream& out) {
  const Json j = parse_json(read_text(input), input.string());
  ConstraintSet cs;
  LoopOptions options;
  try {
    for (const auto& p : j.at("points")) cs.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    if (j.contains("initial_curve")) cs.initial_curve = CurveFile::from_json(j.at("initial_curve")).samples();
    if (j.contains("samples")) options.samples = j.at("samples").get<std::size_t>();
    if (j.contains("max_sweeps")) options.max_sweeps = j.at("max_sweeps").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed constraint file: ") + e.what());
  }
  options.tolerance = config.tolerance;
  options.eps_schedule = config.schedule();
  const MinimizerResult r = minimize_loop(cs, options);
  Json report = report_header("minimize", config, {input});
  report["problem"] = {{"kind", "loop"}, {"constraints", cs.points.size()}, {"samples", options.samples}};
  return write_minimizer(r, std::move(report), CurveKind::Loop, config, out);
}

int cmd_regularity(const fs::path& input, std::optional<double> beta_flag, std::size_t ls_points,
                   const RunConfig& config, std::ostream& out) {
  const CurveFile file = read_curve(input);
  if (file.kind != CurveKind::Tangential) throw InputError("regularity expects a tangential-to-R+ curve file");
  const std::optional<double> beta = beta_flag ? beta_flag : file.beta;
  if (!beta) throw InputError("beta is neither given nor stored in the curve file");
  const CurveSamples curve = file.samples();
  const RegularityReport r = verify_regularity_shift(curve, *beta);
  Json report = report_header("regularity", config, {input});
  Json fit;
  fit["exponent"] = r.fit.exponent;
  fit["constant"] = r.fit.constant;
  fit["log_correction"] = r.fit.log_correction;
  fit["residual"] = r.fit.residual;
  fit["delta_range"] = {r.fit.delta_min, r.fit.delta_max};
  report["regularity"] = {{"beta", r.beta},
                          {"branch", r.branch},
                          {"predicted_exponent", r.predicted_exponent},
                          {"fit", fit},
                          {"wdot_start", r.wdot_start},
                          {"wdot_zero", r.wdot_zero},
                          {"wdot_max", r.wdot_max}};
  const VerticalBound vb = vertical_bound_check(curve);
  report["vertical_bound"] = {{"constant", vb.constant},
                              {"excluded_samples", vb.excluded_samples},
                              {"excluded_t_max", vb.excluded_t_max}};
  if (ls_points > 0) {
    Json ls = Json::array();
    const std::size_t n = curve.size();
    for (std::size_t k = 1; k <= ls_points; ++k) {
      const std::size_t index = k * (n - 1) / (ls_points + 1);
      const LsEstimate e = estimate_Ls(curve, index);
      ls.push_back({{"index", index}, {"s", e.s}, {"t", e.t}, {"L", e.L}, {"three_L", 3.0 * e.L}, {"wdot", e.wdot},
                    {"integrand_tail", e.integrand_tail}});
    }
    report["L_s"] = std::move(ls);
  }
  CsvWriter csv({"delta", "omega"});
  for (std::size_t i = 0; i < r.deltas.size(); ++i) csv.row({r.deltas[i], r.omegas[i]});
  write_json(config.output_dir / "report.json", report);
  write_text(config.output_dir / "modulus.csv", csv.str());
  out << r.branch << " exponent " << format_double(r.fit.exponent) << " (predicted "
      << format_double(r.predicted_exponent) << ")\n";
  return kExitOk;
}

struct CatalogParams {
  std::size_t n = 256;
  double theta = std::numbers::pi / 8.0;
  double length = 1.0;
  double radius = 1.0;
  double a = 0.5;
  double b = 1.0;
  double beta = 0.75;
  double height = 1.0;
};

int cmd_catalog(const std::string& name, const CatalogParams& p, const RunConfig& config, std::ostream& out) {
  CurveFile file;
  if (name == "vertical-slit") {
    file.points = catalog::vertical_slit(p.height, p.n).points();
    file.kind = CurveKind::Chord;
  } else if (name == "ray") {
    file.points = catalog::ray(p.theta, p.length, p.n).points();
    file.kind = CurveKind::Chord;
  } else if (name == "circle") {
    file.points = catalog::circle(p.n, p.radius).points();
    file.kind = CurveKind::Loop;
  } else if (name == "ellipse") {
    file.points = catalog::ellipse(p.a, p.b, p.n).points();
    file.kind = CurveKind::Loop;
  } else if (name == "circular-arc") {
    file.points = catalog::circular_arc(0.0, p.radius, 0.0, p.length / p.radius, p.n).points();
    file.kind = CurveKind::Arc;
  } else if (name == "two-arc") {
    file.points = catalog::two_arc_concatenation(p.n).points();
    file.kind = CurveKind::Chord;
  } else if (name == "c1beta") {
    file.points = catalog::c1beta(p.beta, p.a, p.length, p.n).points();
    file.kind = CurveKind::Tangential;
    file.beta = p.beta;
  } else if (name == "tangential-arc") {
    file.points = catalog::tangential_circle_arc(p.radius, p.length, p.n).points();
    file.kind = CurveKind::Tangential;
    file.beta = 1.0;
  } else if (name == "straight") {
    file.points = catalog::straight_continuation(p.length, p.n).points();
    file.kind = CurveKind::Tangential;
  } else {
    throw InputError("unknown catalog curve '" + name + "'");
  }
  write_json(config.output_dir / "curve.json", file.to_json());
  out << name << ": " << file.points.size() << " points\n";
  return kExitOk;
}

int cmd_batch(const fs::path& manifest, const RunConfig& config, std::ostream& out);

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Input:
    case ErrorKind::Domain: return kExitInput;
    case ErrorKind::Geometry: return kExitGeometry;
    case ErrorKind::Refinement:
    case ErrorKind::NonConvergence: return kExitNonConvergence;
  }
  return kExitInput;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loewner transform and Loewner energy toolkit", "loewner-lab"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--config", flags.config, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--tolerance", flags.tolerance, "minimizer stopping tolerance");
  app.add_option("--steps", flags.steps, "Loewner sub-steps per unit capacity");
  app.add_option("--eps-schedule", flags.eps_schedule, "comma-separated decreasing arclength fractions");
  app.add_option("--root", flags.root, "root sample index");
  app.add_option("--out", flags.out, "output directory");
  app.add_option("--seed", flags.seed, "seed for randomized test points");

  std::string input;
  auto* trace = app.add_subcommand("trace", "curve generated by a driving function");
  trace->add_option("driving", input, "driving file (.json or .csv)")->required();
  auto* drive = app.add_subcommand("drive", "driving function of a curve");
  drive->add_option("curve", input, "curve file")->required();
  auto* energy = app.add_subcommand("energy", "chordal energy of a driving function or chord");
  energy->add_option("input", input, "driving or curve file")->required();
  std::size_t random_count = 0;
  auto* loop = app.add_subcommand("loop-energy", "loop energy rooted at a sample");
  loop->add_option("curve", input, "loop curve file")->required();
  loop->add_option("--random-roots", random_count, "also evaluate at this many seeded random roots");
  auto* arc = app.add_subcommand("arc-energy", "arc energy rooted at a sample");
  arc->add_option("curve", input, "arc curve file")->required();
  std::optional<double> phi, radius_opt;
  std::string constraints;
  auto* minimize = app.add_subcommand("minimize", "energy-minimizing chord or loop");
  minimize->add_option("--phi", phi, "chord through r e^{i phi}");
  minimize->add_option("--radius", radius_opt, "modulus r of the chord constraint point");
  minimize->add_option("--constraints", constraints, "JSON file with loop constraint points");
  std::optional<double> beta;
  std::size_t ls_points = 0;
  auto* regularity = app.add_subcommand("regularity", "Holder regularity of the driving function");
  regularity->add_option("curve", input, "tangential curve file")->required();
  regularity->add_option("--beta", beta, "Holder exponent of the curve tangent");
  regularity->add_option("--ls", ls_points, "evaluate L_s at this many interior samples");
  std::string name;
  CatalogParams params;
  auto* cat = app.add_subcommand("catalog", "emit an analytic test curve");
  cat->add_option("name", name,
                  "vertical-slit | ray | circle | ellipse | circular-arc | two-arc | c1beta | tangential-arc | straight")
      ->required();
  cat->add_option("-n,--samples", params.n, "number of samples");
  cat->add_option("--theta", params.theta, "ray tilt from the vertical");
  cat->add_option("--length", params.length, "arclength");
  cat->add_option("--radius", params.radius, "radius");
  cat->add_option("--a", params.a, "ellipse semi-axis / c1beta amplitude");
  cat->add_option("--b", params.b, "ellipse semi-axis");
  cat->add_option("--beta", params.beta, "c1beta exponent");
  cat->add_option("--height", params.height, "vertical slit height");
  auto* batch = app.add_subcommand("batch", "run a manifest of commands concurrently");
  batch->add_option("manifest", input, "JSON manifest")->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const RunConfig config = resolve_config(flags);
  fs::create_directories(config.output_dir);
  const long long root = flags.root.value_or(0);
  if (app.got_subcommand(trace)) return cmd_trace(input, config, out);
  if (app.got_subcommand(drive)) return cmd_drive(input, config, out);
  if (app.got_subcommand(energy)) return cmd_energy(input, config, out);
  if (app.got_subcommand(loop)) return cmd_loop_energy(input, config, root, random_count, out);
  if (app.got_subcommand(arc)) return cmd_arc_energy(input, config, root, out);
  if (app.got_subcommand(minimize)) {
    if (!constraints.empty() && !phi) return cmd_minimize_loop(constraints, config, out);
    if (phi && constraints.empty()) return cmd_minimize_chord(*phi, radius_opt.value_or(1.0), config, out);
    throw InputError("minimize needs exactly one of --phi or --constraints");
  }
  if (app.got_subcommand(regularity)) return cmd_regularity(input, beta, ls_points, config, out);
  if (app.got_subcommand(cat)) return cmd_catalog(name, params, config, out);
  if (app.got_subcommand(batch)) return cmd_batch(input, config, out);
  return kExitInput;
}

int cmd_batch(const fs::path& manifest, const RunConfig& config, std::ostream& out) {
  const Json j = parse_json(read_text(manifest), manifest.string());
  struct Run {
    std::string name;
    std::vector<std::string> args;
  };
  std::vector<Run> runs;
  try {
    std::size_t k = 0;
    for (const auto& r : j.at("runs")) {
      Run run;
      run.name = r.contains("name") ? r.at("name").get<std::string>() : "run-" + std::to_string(k);
      const fs::path base = manifest.has_parent_path() ? manifest.parent_path() : fs::path(".");
      for (const auto& a : r.at("args")) {
        std::string s = a.get<std::string>();
        // relative input files are resolved against the manifest
        if (!s.empty() && s[0] != '-' && fs::exists(base / s)) s = (base / s).string();
        run.args.push_back(s);
      }
      if (run.args.empty() || run.args[0] == "batch") throw InputError("batch runs need a non-batch command");
      run.args.push_back("--out");
      run.args.push_back((config.output_dir / run.name).string());
      runs.push_back(std::move(run));
      ++k;
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed batch manifest: ") + e.what());
  }

  struct Outcome {
    int code;
    std::string out, err;
  };
  std::vector<Outcome> outcomes(runs.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t first = 0; first < runs.size(); first += workers) {
    std::vector<std::future<Outcome>> futures;
    for (std::size_t i = first; i < std::min(runs.size(), first + workers); ++i) {
      futures.push_back(std::async(std::launch::async, [&runs, i] {
        std::ostringstream o, e;
        const int code = run(runs[i].args, o, e);
        return Outcome{code, o.str(), e.str()};
      }));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) outcomes[first + i] = futures[i].get();
  }

  Json report = report_header("batch", config, {manifest});
  Json list = Json::array();
  int worst = kExitOk;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    list.push_back({{"name", runs[i].name}, {"exit_code", outcomes[i].code}, {"stdout", outcomes[i].out},
                    {"stderr", outcomes[i].err}});
    worst = std::max(worst, outcomes[i].code);
    out << runs[i].name << ": exit " << outcomes[i].code << "\n";
  }
  report["runs"] = std::move(list);
  write_json(config.output_dir / "batch.json", report);
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace loewner::lab
