#include "omstretch/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>

#include "omstretch/errors.hpp"
#include "omstretch/macphersonian.hpp"
#include "omstretch/radon_complex.hpp"

namespace omstretch {

namespace {

namespace fs = std::filesystem;

Scheme parse_scheme(const std::string& name) {
  if (name == "rk4") return Scheme::kRk4;
  if (name == "euler") return Scheme::kExplicitEuler;
  throw ArgumentError("unknown scheme '" + name + "' (expected euler or rk4)");
}

double number_or(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ArgumentError("cannot create " + dir.string() + ": " + ec.message());
}

std::string rep_name(int rep) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "rep-%03d", rep);
  return buf;
}

RepetitionResult run_repetition(const ExperimentConfig& config, const RadonComplex& complex, int rep) {
  RepetitionResult r;
  r.repetition = rep;
  const fs::path dir = config.out / rep_name(rep);
  ensure_directory(dir);

  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(rep)};
  std::mt19937_64 rng(seq);
  const EmbeddedSphere flat = EmbeddedSphere::natural(complex);
  const std::optional<EmbeddedSphere> start = perturb_within_faces(flat, config.delta, rng);
  if (!start) {
    r.outcome = to_string(FlowOutcome::kFaceExit);
    return r;
  }

  try {
    const FlowResult result = integrate(*start, config.flow);
    r.outcome = to_string(result.trace.outcome);
    r.steps = static_cast<int>(result.trace.samples.size()) - 1;
    r.final_curv_max = result.trace.samples.back().curv_max;
    {
      std::ofstream csv(dir / "trace.csv");
      write_trace_csv(csv, result.trace);
    }
    write_json_file(dir / "sphere.json", to_json(result.sphere));
    try {
      r.decay = curvature_decay_stats(result.trace);
      r.has_decay_fit = true;
    } catch (const ArgumentError&) {
      r.has_decay_fit = false;
    }
    Json recovered = Json::object();
    recovered["schema_version"] = kSchemaVersion;
    try {
      const PointConfiguration points = recover_configuration(result.sphere);
      const OrientedMatroid m = circuits_of_points(points);
      r.round_trip = m == complex.matroid;
      recovered["configuration"] = to_json(points);
      recovered["matroid"] = to_json(m);
    } catch (const PreconditionError& e) {
      recovered["error"] = e.what();
    }
    recovered["round_trip"] = r.round_trip;
    write_json_file(dir / "recovered.json", recovered);
  } catch (const Error& e) {
    r.outcome = "error";
    r.error = e.what();
  }
  return r;
}

Json summary_json(const ExperimentConfig& config, const std::vector<RepetitionResult>& results) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["seed"] = config.seed;
  j["delta"] = config.delta;
  j["repetitions"] = config.repetitions;
  j["flow"] = Json{{"step", config.flow.step},
                   {"t_max", config.flow.t_max},
                   {"tol_curv", config.flow.tol_curv},
                   {"tol_fixed", config.flow.tol_fixed},
                   {"scheme", to_string(config.flow.scheme)}};
  std::map<std::string, int> counts;
  int round_trips = 0;
  Json runs = Json::array();
  for (const RepetitionResult& r : results) {
    ++counts[r.outcome];
    round_trips += r.round_trip ? 1 : 0;
    Json run{{"repetition", r.repetition}, {"outcome", r.outcome}, {"steps", r.steps},
             {"final_curv_max", r.final_curv_max}, {"round_trip", r.round_trip}};
    run["decay_rate"] = r.has_decay_fit ? Json(r.decay.rate) : Json();
    run["decay_r2"] = r.has_decay_fit ? Json(r.decay.r2) : Json();
    if (!r.error.empty()) run["error"] = r.error;
    runs.push_back(std::move(run));
  }
  j["outcomes"] = counts;
  j["round_trips"] = round_trips;
  j["runs"] = std::move(runs);
  return j;
}

int cmd_analyze(const fs::path& config_path, const fs::path& out_dir, std::ostream& out) {
  const PointConfiguration config = config_from_json(read_json_file(config_path));
  const RadonComplex complex = geometric_radon_complex(config);
  const SphereReport report = validate_sphere(complex, config.n(), config.d());
  ensure_directory(out_dir);
  write_json_file(out_dir / "matroid.json", to_json(complex.matroid));
  write_json_file(out_dir / "circuit_graph.json", to_json(complex.graph));
  write_json_file(out_dir / "sphere_report.json", to_json(report));
  out << "circuits " << complex.matroid.circuits().size() << ", sphere S^" << complex.sphere_dimension
      << ", chi " << report.euler_characteristic << ", report " << (report.ok() ? "pass" : "fail") << '\n';
  return report.ok() ? kExitOk : kExitNumericalFailure;
}

struct FlowOverrides {
  CLI::Option* seed = nullptr;
  CLI::Option* delta = nullptr;
  CLI::Option* step = nullptr;
  CLI::Option* tmax = nullptr;
  CLI::Option* scheme = nullptr;
  CLI::Option* out = nullptr;
  std::uint64_t seed_value = 0;
  double delta_value = 0.0;
  double step_value = 0.0;
  double tmax_value = 0.0;
  std::string scheme_value;
  std::string out_value;
};

int cmd_flow(const fs::path& config_path, const FlowOverrides& o, std::ostream& out) {
  ExperimentConfig config = experiment_from_json(read_json_file(config_path), config_path.parent_path());
  if (o.seed->count()) config.seed = o.seed_value;
  if (o.delta->count()) config.delta = o.delta_value;
  if (o.step->count()) config.flow.step = o.step_value;
  if (o.tmax->count()) config.flow.t_max = o.tmax_value;
  if (o.scheme->count()) config.flow.scheme = parse_scheme(o.scheme_value);
  if (o.out->count()) config.out = o.out_value;
  config.validate();

  const std::vector<RepetitionResult> results = run_flow_experiment(config);
  bool failed = false;
  for (const RepetitionResult& r : results) {
    out << rep_name(r.repetition) << ' ' << r.outcome << " steps=" << r.steps
        << " curv_max=" << format_double(r.final_curv_max) << " decay_rate="
        << (r.has_decay_fit ? format_double(r.decay.rate) : "n/a")
        << " round_trip=" << (r.round_trip ? "true" : "false");
    if (!r.error.empty()) out << " error=\"" << r.error << '"';
    out << '\n';
    failed = failed || r.outcome == "error";
  }
  return failed ? kExitNumericalFailure : kExitOk;
}

int cmd_macphersonian(int n, int d, std::uint64_t seed, const fs::path& out_dir, std::ostream& out) {
  if (n > kMaxEnumerationElements) {
    throw UnsupportedError("enumeration is limited to n <= " + std::to_string(kMaxEnumerationElements));
  }
  if (d < 1 || n < d + 2) throw ArgumentError("need d >= 1 and n >= d + 2");
  EnumerationOptions options;
  options.seed = seed;
  const MatroidPoset poset(enumerate_acyclic_oms(n, d, options));
  const SimplicialComplex complex = order_complex(poset);
  ensure_directory(out_dir);
  write_json_file(out_dir / "poset.json", to_json(poset));
  write_json_file(out_dir / "order_complex.json", to_json(complex));

  out << "elements " << poset.size() << ", order complex f-vector";
  for (int f : complex.f_vector()) out << ' ' << f;
  out << ", chi " << complex.euler_characteristic() << ", betti";
  for (int b : gf2_betti(complex)) out << ' ' << b;
  out << '\n';
  if (n == 4 && d == 2) {
    const CellStructureReport report = cell_structure_m42(options);
    write_json_file(out_dir / "cell_structure.json", to_json(report));
    out << "cells " << report.vertices << ' ' << report.edges << ' ' << report.faces << ", squares "
        << report.squares << ", triangles " << report.triangles << ", bijection "
        << (report.bijection ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_homology(const fs::path& config_path, const std::string& out_dir, std::ostream& out) {
  const SimplicialComplex complex = complex_from_json(read_json_file(config_path));
  const Json j = to_json(complex);
  if (out_dir.empty()) {
    out << j.dump(2) << '\n';
  } else {
    ensure_directory(out_dir);
    write_json_file(fs::path(out_dir) / "homology.json", j);
  }
  return kExitOk;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw ArgumentError("delta must be a finite number >= 0");
  if (repetitions < 1) throw ArgumentError("repetitions must be at least 1");
  flow.validate();
}

ExperimentConfig experiment_from_json(const Json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ParseError("experiment config must be an object");
  if (!j.contains("points")) throw ParseError("missing field 'points'");
  const Json& points = j.at("points");
  ExperimentConfig config(points.is_string() ? config_from_json(read_json_file(base_dir / points.get<std::string>()))
                                             : config_from_json(points));
  if (j.contains("n") && j.at("n") != config.points.n()) throw ArgumentError("'n' disagrees with the points");
  if (j.contains("d") && j.at("d") != config.points.d()) throw ArgumentError("'d' disagrees with the points");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ParseError("'seed' must be a non-negative integer");
    config.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("repetitions")) {
    if (!j.at("repetitions").is_number_integer()) throw ParseError("'repetitions' must be an integer");
    config.repetitions = j.at("repetitions").get<int>();
  }
  config.delta = number_or(j, "delta", config.delta);
  if (j.contains("out")) {
    if (!j.at("out").is_string()) throw ParseError("'out' must be a path");
    config.out = j.at("out").get<std::string>();
  }
  if (j.contains("flow")) {
    const Json& f = j.at("flow");
    if (!f.is_object()) throw ParseError("'flow' must be an object");
    config.flow.step = number_or(f, "step", config.flow.step);
    config.flow.t_max = number_or(f, "t_max", config.flow.t_max);
    config.flow.tol_curv = number_or(f, "tol_curv", config.flow.tol_curv);
    config.flow.tol_fixed = number_or(f, "tol_fixed", config.flow.tol_fixed);
    if (f.contains("scheme")) {
      if (!f.at("scheme").is_string()) throw ParseError("'scheme' must be a string");
      config.flow.scheme = parse_scheme(f.at("scheme").get<std::string>());
    }
  }
  config.validate();
  return config;
}

std::vector<RepetitionResult> run_flow_experiment(const ExperimentConfig& config) {
  config.validate();
  const RadonComplex complex = geometric_radon_complex(config.points);
  ensure_directory(config.out);
  std::vector<RepetitionResult> results;
  for (int rep = 0; rep < config.repetitions; ++rep) results.push_back(run_repetition(config, complex, rep));
  write_json_file(config.out / "summary.json", summary_json(config, results));
  return results;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oriented matroids, Radon complexes and curvature flow"};
  app.require_subcommand(1);

  std::string config_path;
  std::string analyze_out = "analyze-out";
  std::string macphersonian_out = "macphersonian-out";
  std::string homology_out;

  auto* analyze = app.add_subcommand("analyze", "Circuits, circuit graph and sphere check of a point configuration");
  analyze->add_option("--config", config_path, "Point configuration JSON")->required();
  analyze->add_option("--out", analyze_out, "Output directory")->capture_default_str();

  FlowOverrides overrides;
  auto* flow = app.add_subcommand("flow", "Perturb, flow and recover, once per repetition");
  flow->add_option("--config", config_path, "Experiment JSON")->required();
  overrides.seed = flow->add_option("--seed", overrides.seed_value, "RNG seed");
  overrides.delta = flow->add_option("--delta", overrides.delta_value, "Perturbation size");
  overrides.step = flow->add_option("--step", overrides.step_value, "Integrator step");
  overrides.tmax = flow->add_option("--tmax", overrides.tmax_value, "Final time");
  overrides.scheme = flow->add_option("--scheme", overrides.scheme_value, "euler or rk4")
                         ->check(CLI::IsMember({"euler", "rk4"}));
  overrides.out = flow->add_option("--out", overrides.out_value, "Output directory");

  int n = 0;
  int d = 0;
  std::uint64_t seed = EnumerationOptions{}.seed;
  auto* macphersonian = app.add_subcommand("macphersonian", "Weak-map poset of realizable acyclic matroids");
  macphersonian->add_option("--n", n, "Ground-set size")->required();
  macphersonian->add_option("--d", d, "Dimension")->required();
  macphersonian->add_option("--seed", seed, "Sampler seed");
  macphersonian->add_option("--out", macphersonian_out, "Output directory")->capture_default_str();

  auto* homology = app.add_subcommand("homology", "Euler characteristic and GF(2) Betti numbers");
  homology->add_option("--config", config_path, "Simplicial complex JSON")->required();
  homology->add_option("--out", homology_out, "Output directory (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze) return cmd_analyze(config_path, analyze_out, out);
    if (*flow) return cmd_flow(config_path, overrides, out);
    if (*macphersonian) return cmd_macphersonian(n, d, seed, macphersonian_out, out);
    if (*homology) return cmd_homology(config_path, homology_out, out);
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
  return kExitInputError;
}

}  // namespace omstretch
