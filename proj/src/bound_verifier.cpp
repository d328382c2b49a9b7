#include "specgeo/bound_verifier.hpp"

#include <algorithm>
#include <cmath>

#include "specgeo/sphere_spectrum.hpp"

namespace specgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

const char* equality_class_name(EqualityClass c) {
  switch (c) {
    case EqualityClass::EqualityWithinTol: return "equality_within_tol";
    case EqualityClass::Strict: return "strict";
    case EqualityClass::Violated: return "violated";
  }
  return "?";
}

double tolerance_policy(double tolerance_constant, double max_edge,
                        double scale) {
  return tolerance_constant * max_edge * std::max(scale, 1.0);
}

std::vector<Eigen::VectorXd> test_functions(const SurfaceMesh& mesh,
                                            const Point& p0,
                                            const Frame& frame) {
  const int dim = p0.space.dim();
  const int n = mesh.vertex_count();
  std::vector<Eigen::VectorXd> f(dim, Eigen::VectorXd(n));
  for (int v = 0; v < n; ++v) {
    const Eigen::VectorXd x = normal_coordinates(p0, frame, mesh.vertices()[v]);
    const double r = x.norm();
    if (r < 1e-8)
      fail(ErrorCode::VertexAtCenter,
           "vertex " + std::to_string(v) + " coincides with the center");
    for (int i = 0; i < dim; ++i) f[i](v) = x(i) / r;
  }
  return f;
}

VerificationReport verify_mesh(const SurfaceMesh& mesh, ShapeFamily family,
                               const ShapeParams& params, int subdiv,
                               const VerifyTolerances& tolerances) {
  const SpaceSpec& spec = mesh.space();
  VerificationReport report;
  report.spec = spec;
  report.family = family;
  report.params = params;
  report.subdiv = subdiv;
  report.vertex_count = mesh.vertex_count();
  report.min_edge = mesh.min_edge_length();
  report.max_edge = mesh.max_edge_length();

  DiscreteOperators ops = build_operators(mesh);
  report.total_volume = ops.total_volume;

  // Center of mass of the vertex cloud carrying the lumped-mass weights,
  // with the distribution G(t) = 1/t of the continuum construction.
  WeightedPointCloud cloud(mesh.vertices(), ops.mass);
  ComOptions com_options;
  com_options.tol = tolerances.com_tol;
  com_options.max_iter = tolerances.com_max_iter;
  const double com_tol_used = com_options.tol > 0.0
                                  ? com_options.tol
                                  : default_com_tolerance(cloud);
  ComResult com = solve_com(cloud, MassDistribution::inverse_t(), com_options);
  report.p0 = com.p0;
  report.com_residual = com.residual;
  report.com_converged = com.converged;

  // radii to the center, plus the compact ball-containment hypothesis
  const int n = mesh.vertex_count();
  Eigen::VectorXd radii(n);
  for (int v = 0; v < n; ++v)
    radii(v) = distance(com.p0, mesh.vertices()[v]);
  const double max_radius = radii.maxCoeff();
  if (spec.kind == Kind::Compact && max_radius >= kPi / 2.0)
    fail(ErrorCode::BallViolation,
         "hypersurface must lie in a ball of radius pi/2 about the "
         "center of mass (max radius " +
             std::to_string(max_radius) + ")");

  double rhs_integral = 0.0;
  for (int v = 0; v < n; ++v)
    rhs_integral += ops.mass(v) * lambda1_geodesic_sphere(spec, radii(v));
  report.rhs_integral = rhs_integral;
  report.rhs_average = rhs_integral / ops.total_volume;

  EigenResult eigen = first_eigenvalue(ops);
  report.lambda1_mesh = eigen.lambda1;
  report.eigen_residual = eigen.residual;

  // coordinate quotients f_i = x_i / r, re-centered to exact discrete
  // mass-mean zero before the variational comparison
  const Frame frame = make_frame(com.p0);
  std::vector<Eigen::VectorXd> f = test_functions(mesh, com.p0, frame);
  double mass_sum_raw = 0.0;
  for (const auto& fi : f) mass_sum_raw += fi.dot(ops.mass.asDiagonal() * fi);
  double centering = 0.0;
  for (auto& fi : f) {
    const double mean = ops.mass.dot(fi) / ops.total_volume;
    fi.array() -= mean;
    centering = std::max(centering, std::abs(mean));
  }
  report.centering_magnitude = centering;
  double s_l = 0.0, s_m = 0.0;
  for (const auto& fi : f) {
    s_l += fi.dot(ops.stiffness * fi);
    s_m += fi.dot(ops.mass.asDiagonal() * fi);
  }
  report.rayleigh_sum = s_l;
  report.rayleigh_mass_sum = s_m;

  report.tolerance = tolerance_policy(tolerances.tolerance_constant,
                                      report.max_edge, report.rhs_average);
  report.gap = report.rhs_average - report.lambda1_mesh;
  report.relative_gap = report.gap / report.rhs_average;
  report.bound_holds =
      report.lambda1_mesh <= report.rhs_average + report.tolerance;

  const double rel_tol = report.tolerance / std::max(report.rhs_average, 1.0);
  if (report.relative_gap < -rel_tol)
    report.equality_class = EqualityClass::Violated;
  else if (report.relative_gap <= rel_tol)
    report.equality_class = EqualityClass::EqualityWithinTol;
  else
    report.equality_class = EqualityClass::Strict;

  auto add_check = [&](const std::string& name, double value, double threshold) {
    report.checks.push_back({name, value, threshold, value <= threshold});
  };
  add_check("main_bound", report.lambda1_mesh - report.rhs_average,
            report.tolerance);
  // The variational inequality lambda1 <= rayleigh quotient holds for the
  // exact discrete eigenvalue; the computed one carries the certified
  // residual, so the comparison gets that error bar and nothing else.
  add_check("rayleigh_variational", eigen.lambda1 * s_m - s_l,
            1e-12 * std::max(1.0, std::abs(eigen.lambda1) * s_m));
  add_check("rayleigh_vs_rhs", s_l - rhs_integral,
            report.tolerance * ops.total_volume);
  add_check("mass_normalization", std::abs(mass_sum_raw - ops.total_volume),
            1e-12 * std::max(1.0, ops.total_volume));
  report.checks.push_back({"com_residual", com.residual, com_tol_used,
                           com.converged});
  return report;
}

VerificationReport verify_bound(const SpaceSpec& spec, ShapeFamily family,
                                const ShapeParams& params, int subdiv,
                                const VerifyTolerances& tolerances) {
  SurfaceMesh mesh = generate_shape(spec, family, params, subdiv);
  return verify_mesh(mesh, family, params, subdiv, tolerances);
}

StudyResult refinement_study(const SpaceSpec& spec, ShapeFamily family,
                             const ShapeParams& params,
                             const std::vector<int>& subdivs,
                             const VerifyTolerances& tolerances) {
  if (subdivs.size() < 3)
    fail(ErrorCode::DomainError, "refinement study needs >= 3 levels");
  StudyResult study;
  for (int level : subdivs)
    study.reports.push_back(
        verify_bound(spec, family, params, level, tolerances));

  study.bound_holds_everywhere = true;
  for (const auto& r : study.reports)
    study.bound_holds_everywhere =
        study.bound_holds_everywhere && r.bound_holds;

  for (size_t i = 0; i + 1 < study.reports.size(); ++i) {
    const double g0 = std::abs(study.reports[i].relative_gap);
    const double g1 = std::abs(study.reports[i + 1].relative_gap);
    const double h0 = study.reports[i].max_edge;
    const double h1 = study.reports[i + 1].max_edge;
    study.gap_orders.push_back(std::log(g0 / g1) / std::log(h0 / h1));
  }
  const auto& last = study.reports[study.reports.size() - 1];
  const auto& prev = study.reports[study.reports.size() - 2];
  study.stabilization_ratio =
      std::abs(last.gap - prev.gap) / std::max(std::abs(last.gap), 1e-300);
  return study;
}

}  // namespace specgeo
