#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "specgeo/bound_verifier.hpp"
#include "specgeo/io.hpp"
#include "specgeo/sphere_spectrum.hpp"

namespace specgeo::cli {

namespace {

struct SpaceFlags {
  std::string field = "R";
  int n = 2;
  std::string kind = "euclidean";

  SpaceSpec spec() const {
    return SpaceSpec(parse_field(field), n, parse_kind(kind));
  }
};

void add_space_flags(CLI::App* cmd, SpaceFlags* flags) {
  cmd->add_option("--field", flags->field, "scalar field: R, C, H or Ca");
  cmd->add_option("--n", flags->n, "field dimension n");
  cmd->add_option("--kind", flags->kind, "compact, noncompact or euclidean");
}

std::vector<double> parse_grid(const std::string& text) {
  double a = 0.0, b = 0.0;
  int steps = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> a >> c1 >> b >> c2 >> steps) || c1 != ':' || c2 != ':' ||
      steps < 1 || !in.eof())
    fail(ErrorCode::DomainError, "grid must be a:b:steps with steps >= 1");
  std::vector<double> grid;
  grid.reserve(steps);
  if (steps == 1) {
    grid.push_back(a);
    return grid;
  }
  for (int i = 0; i < steps; ++i)
    grid.push_back(a + (b - a) * i / (steps - 1));
  return grid;
}

ShapeParams parse_shape_params(const std::vector<std::string>& entries) {
  ShapeParams params;
  for (const std::string& entry : entries) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::DomainError, "--param expects key=value");
    const std::string key = entry.substr(0, eq);
    const double value = std::stod(entry.substr(eq + 1));
    if (key == "r") params.r = value;
    else if (key == "a") params.a = value;
    else if (key == "b") params.b = value;
    else if (key == "c") params.c = value;
    else if (key == "eps") params.eps = value;
    else fail(ErrorCode::DomainError, "unknown shape parameter '" + key + "'");
  }
  return params;
}

std::string csv_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();  // numbers shortest round-trip, bools true/false
}

/// Long-format CSV: one key,value row per scalar leaf, arrays indexed.
void flatten_csv(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_csv(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      flatten_csv(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ',' << csv_value(j) << '\n';
  }
}

void emit_rows_csv(const Json& rows, const std::vector<std::string>& columns,
                   std::ostream& out) {
  for (size_t i = 0; i < columns.size(); ++i)
    out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < columns.size(); ++i)
      out << (i ? "," : "") << csv_value(row.at(columns[i]));
    out << '\n';
  }
}

struct OutputOptions {
  std::string path;
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
  cmd->add_option("--output", opts->path, "write payload to a file");
  cmd->add_option("--format", opts->format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void write_payload(const OutputOptions& opts, const Json& payload,
                   const std::vector<std::string>& row_columns,
                   const std::string& rows_key, std::ostream& fallback) {
  std::ofstream file;
  std::ostream* out = &fallback;
  if (!opts.path.empty()) {
    file.open(opts.path);
    if (!file) fail(ErrorCode::IoError, "cannot write '" + opts.path + "'");
    out = &file;
  }
  if (opts.format == "json") {
    *out << payload.dump(2) << '\n';
  } else if (!rows_key.empty()) {
    emit_rows_csv(payload.at(rows_key), row_columns, *out);
  } else {
    flatten_csv(payload, "", *out);
  }
}

int run_impl(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"spectral bounds for closed hypersurfaces in model spaces"};
  app.require_subcommand(1);

  // ---- spectrum ----
  auto* spectrum = app.add_subcommand(
      "spectrum", "closed-form geodesic sphere spectra on a radius grid");
  SpaceFlags spectrum_space;
  std::string spectrum_grid;
  OutputOptions spectrum_out;
  add_space_flags(spectrum, &spectrum_space);
  spectrum->add_option("--r-grid", spectrum_grid, "radius grid a:b:steps")
      ->required();
  add_output_flags(spectrum, &spectrum_out);

  // ---- riccati ----
  auto* riccati = app.add_subcommand(
      "riccati", "central-difference residuals of the traced Riccati identity");
  riccati->set_help_flag("--help", "print help");  // frees --h for the step
  SpaceFlags riccati_space;
  std::string riccati_grid;
  double riccati_h = 1e-5;
  double riccati_threshold = 1e-6;
  OutputOptions riccati_out;
  add_space_flags(riccati, &riccati_space);
  riccati->add_option("--r-grid", riccati_grid, "radius grid a:b:steps")
      ->required();
  riccati->add_option("--h", riccati_h, "central difference step");
  riccati->add_option("--threshold", riccati_threshold,
                      "max admissible residual");
  add_output_flags(riccati, &riccati_out);

  // ---- com ----
  auto* com = app.add_subcommand("com", "center of mass of a weighted cloud");
  std::string com_points;
  std::string com_g = "inverse-t";
  double com_tol = -1.0;
  int com_max_iter = 10000;
  OutputOptions com_out;
  com->add_option("--points", com_points, "point-cloud JSON file")->required();
  com->add_option("--g", com_g, "mass distribution: inverse-t or constant")
      ->check(CLI::IsMember({"inverse-t", "constant"}));
  com->add_option("--tol", com_tol, "residual tolerance (default: automatic)");
  com->add_option("--max-iter", com_max_iter, "iteration cap");
  add_output_flags(com, &com_out);

  // ---- verify ----
  auto* verify = app.add_subcommand(
      "verify", "verify the eigenvalue bound on a generated shape");
  SpaceFlags verify_space;
  std::string verify_shape = "geodesic-sphere";
  std::vector<std::string> verify_params;
  int verify_subdiv = 4;
  OutputOptions verify_out;
  add_space_flags(verify, &verify_space);
  verify->add_option("--shape", verify_shape,
                     "geodesic-sphere, ellipsoid, perturbed-sphere, circle, "
                     "ellipse or perturbed-circle");
  verify->add_option("--param", verify_params, "shape parameter key=value");
  verify->add_option("--subdiv", verify_subdiv,
                     "subdivision level (surfaces) or vertex count (curves)");
  add_output_flags(verify, &verify_out);

  // ---- study ----
  auto* study = app.add_subcommand(
      "study", "refinement study of the bound across subdivision levels");
  SpaceFlags study_space;
  std::string study_shape = "geodesic-sphere";
  std::vector<std::string> study_params;
  std::vector<int> study_subdivs;
  OutputOptions study_out;
  add_space_flags(study, &study_space);
  study->add_option("--shape", study_shape, "shape family");
  study->add_option("--param", study_params, "shape parameter key=value");
  study->add_option("--subdivs", study_subdivs, "comma-separated levels")
      ->required()
      ->delimiter(',');
  add_output_flags(study, &study_out);

  std::vector<const char*> argv;
  argv.push_back("specgeo");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (spectrum->parsed()) {
    const SpaceSpec spec = spectrum_space.spec();
    Json payload;
    payload["command"] = "spectrum";
    payload["space"] = space_to_json(spec);
    Json rows = Json::array();
    for (double r : parse_grid(spectrum_grid)) {
      const SphereSpectrumRow row = spectrum_row(spec, r);
      const bool threshold_ok =
          spec.kind != Kind::Compact || r < crossing_threshold(spec);
      rows.push_back(Json{{"r", row.r},
                          {"lambda1", row.lambda1},
                          {"trace_A", row.trace_A},
                          {"normA_sq", row.normA_sq},
                          {"ricci", ricci_constant(spec)},
                          {"threshold_ok", threshold_ok}});
    }
    payload["rows"] = std::move(rows);
    write_payload(spectrum_out, payload,
                  {"r", "lambda1", "trace_A", "normA_sq", "ricci",
                   "threshold_ok"},
                  "rows", out);
    return 0;
  }

  if (riccati->parsed()) {
    const SpaceSpec spec = riccati_space.spec();
    Json payload;
    payload["command"] = "riccati";
    payload["space"] = space_to_json(spec);
    payload["h"] = riccati_h;
    payload["threshold"] = riccati_threshold;
    Json rows = Json::array();
    bool all_pass = true;
    for (double r : parse_grid(riccati_grid)) {
      const double residual = riccati_residual(spec, r, riccati_h);
      const bool pass = residual <= riccati_threshold;
      all_pass = all_pass && pass;
      rows.push_back(Json{{"r", r}, {"residual", residual}, {"pass", pass}});
    }
    payload["rows"] = std::move(rows);
    write_payload(riccati_out, payload, {"r", "residual", "pass"}, "rows", out);
    if (!all_pass) {
      err << "riccati residual exceeds threshold " << riccati_threshold << '\n';
      return 2;
    }
    return 0;
  }

  if (com->parsed()) {
    WeightedPointCloud cloud = cloud_from_json(load_json_file(com_points));
    const MassDistribution g = com_g == "constant"
                                   ? MassDistribution::constant()
                                   : MassDistribution::inverse_t();
    ComOptions options;
    options.tol = com_tol;
    options.max_iter = com_max_iter;
    const ComResult result = solve_com(cloud, g, options);
    Json payload;
    payload["command"] = "com";
    payload["space"] = space_to_json(cloud.space);
    Json p0 = Json::array();
    for (Eigen::Index i = 0; i < result.p0.coords.size(); ++i)
      p0.push_back(result.p0.coords(i));
    payload["p0"] = std::move(p0);
    payload["residual"] = result.residual;
    payload["iterations"] = result.iterations;
    payload["converged"] = result.converged;
    write_payload(com_out, payload, {}, "", out);
    if (!result.converged) {
      err << "center-of-mass iteration did not converge (residual "
          << result.residual << ")\n";
      return 2;
    }
    return 0;
  }

  if (verify->parsed()) {
    const VerificationReport report = verify_bound(
        verify_space.spec(), parse_shape_family(verify_shape),
        parse_shape_params(verify_params), verify_subdiv);
    write_payload(verify_out, report_to_json(report), {}, "", out);
    bool all_pass = true;
    for (const auto& check : report.checks) all_pass = all_pass && check.pass;
    if (!report.bound_holds || !all_pass) {
      err << (report.bound_holds ? "a verification check failed"
                                 : "bound violated")
          << '\n';
      return 2;
    }
    return 0;
  }

  if (study->parsed()) {
    const StudyResult result = refinement_study(
        study_space.spec(), parse_shape_family(study_shape),
        parse_shape_params(study_params), study_subdivs);
    write_payload(study_out, study_to_json(result), {}, "", out);
    if (!result.bound_holds_everywhere) {
      err << "bound violated at some refinement level\n";
      return 2;
    }
    return 0;
  }

  err << "no command given\n";
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::CrossingViolation ? 2 : 1;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
}

}  // namespace specgeo::cli
