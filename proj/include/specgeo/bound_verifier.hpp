#pragma once

#include <string>
#include <vector>

#include "specgeo/center_of_mass.hpp"
#include "specgeo/discrete_laplace.hpp"
#include "specgeo/shapes.hpp"

namespace specgeo {

enum class EqualityClass { EqualityWithinTol, Strict, Violated };

const char* equality_class_name(EqualityClass c);

struct CheckEntry {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Everything measured while verifying the eigenvalue bound on one mesh:
/// the mesh first eigenvalue, the averaged geodesic-sphere right-hand side,
/// their gap, the coordinate-quotient Rayleigh sums, and the classification
/// of the (in)equality against the refinement-scaled tolerance.
struct VerificationReport {
  SpaceSpec spec;
  ShapeFamily family = ShapeFamily::GeodesicSphere;
  ShapeParams params;
  int subdiv = 0;

  int vertex_count = 0;
  double min_edge = 0.0;
  double max_edge = 0.0;
  double total_volume = 0.0;

  Point p0;
  double com_residual = 0.0;
  bool com_converged = false;
  double centering_magnitude = 0.0;

  double lambda1_mesh = 0.0;
  double eigen_residual = 0.0;
  double rhs_integral = 0.0;
  double rhs_average = 0.0;
  double rayleigh_sum = 0.0;       // sum_i f_i^T L f_i, re-centered f
  double rayleigh_mass_sum = 0.0;  // sum_i f_i^T M f_i, re-centered f

  double gap = 0.0;           // rhs_average - lambda1_mesh
  double relative_gap = 0.0;  // gap / rhs_average
  double tolerance = 0.0;     // tolerance_policy(mesh)
  bool bound_holds = false;
  EqualityClass equality_class = EqualityClass::EqualityWithinTol;

  std::vector<CheckEntry> checks;

  VerificationReport() : p0(SpaceSpec(Field::R, 2, Kind::Euclidean),
                            Eigen::VectorXd::Zero(2)) {}
};

struct VerifyTolerances {
  /// C in the h-linear policy tol(h) = C * h * max(rhs_average, 1).
  double tolerance_constant = 0.5;
  /// Center-of-mass residual tolerance; <= 0 selects the cloud default.
  double com_tol = -1.0;
  int com_max_iter = 10000;
};

/// tol(h) = C * h * max(scale, 1).
double tolerance_policy(double tolerance_constant, double max_edge,
                        double scale);

/// The kn coordinate quotients f_i = x_i / r at every vertex, where x are
/// normal coordinates about p0 in the given frame. Pointwise sum_i f_i^2 = 1.
/// Throws VertexAtCenter when a vertex lies within 1e-8 of p0.
std::vector<Eigen::VectorXd> test_functions(const SurfaceMesh& mesh,
                                            const Point& p0,
                                            const Frame& frame);

/// Full pipeline on a prebuilt mesh (descriptor fields are echoed into the
/// report): operators -> center of mass (G = 1/t over the lumped-mass
/// vertex cloud) -> averaged right-hand side -> mesh eigenvalue -> Rayleigh
/// chain -> classification.
VerificationReport verify_mesh(const SurfaceMesh& mesh, ShapeFamily family,
                               const ShapeParams& params, int subdiv,
                               const VerifyTolerances& tolerances = {});

/// generate_shape + verify_mesh.
VerificationReport verify_bound(const SpaceSpec& spec, ShapeFamily family,
                                const ShapeParams& params, int subdiv,
                                const VerifyTolerances& tolerances = {});

struct StudyResult {
  std::vector<VerificationReport> reports;
  /// Convergence order of |relative_gap| between consecutive levels
  /// (log-ratio against max_edge); size reports.size() - 1.
  std::vector<double> gap_orders;
  /// |gap_last - gap_prev| / |gap_last| between the two finest levels.
  double stabilization_ratio = 0.0;
  bool bound_holds_everywhere = false;
};

/// verify_bound across >= 3 subdivision levels plus convergence metrics.
StudyResult refinement_study(const SpaceSpec& spec, ShapeFamily family,
                             const ShapeParams& params,
                             const std::vector<int>& subdivs,
                             const VerifyTolerances& tolerances = {});

}  // namespace specgeo
