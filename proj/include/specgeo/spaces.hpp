#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "specgeo/errors.hpp"

namespace specgeo {

enum class Field { R, C, H, Ca };
enum class Kind { Compact, Noncompact, Euclidean };

const char* field_name(Field f);
const char* kind_name(Kind k);
Field parse_field(const std::string& s);
Kind parse_kind(const std::string& s);

/// Which model space we are working in: the field K, the K-dimension n and
/// the curvature sign. Curvature normalization is fixed once and for all:
/// compact spaces have sectional curvature in [1/4, 1] (so S^n is the round
/// sphere of radius 2), non-compact duals in [-1, -1/4], euclidean is flat.
///
/// Geometric operations (exp/log/distance/frames) are available for the
/// realized fields R and C. H and Ca are supported at formula level only.
struct SpaceSpec {
  Field field = Field::R;
  int n = 2;
  Kind kind = Kind::Euclidean;

  SpaceSpec() = default;
  SpaceSpec(Field field_, int n_, Kind kind_);

  /// dim_R of the scalar field: 1, 2, 4, 8.
  int k() const;
  /// Total real dimension k*n.
  int dim() const { return k() * n; }
  /// True when ambient-coordinate geometry is implemented (fields R and C).
  bool realized() const { return field == Field::R || field == Field::C; }
  /// Length of the ambient coordinate vector of a Point.
  int ambient_dim() const;

  bool operator==(const SpaceSpec& o) const {
    return field == o.field && n == o.n && kind == o.kind;
  }
  bool operator!=(const SpaceSpec& o) const { return !(*this == o); }

  std::string to_string() const;
};

/// A point of a realized model space, stored in ambient coordinates:
///   - euclidean:    vector in R^n
///   - R compact:    vector of norm 2 in R^(n+1) (sphere of curvature 1/4),
///                   pole coordinate last
///   - R noncompact: hyperboloid vector with Minkowski norm -4, time
///                   coordinate last
///   - C:            unit representative of a complex line in C^(n+1) modulo
///                   phase, interleaved [re0, im0, re1, im1, ...]; for the
///                   noncompact dual the representative satisfies
///                   <z,z> = 1 for the signature (1, n) Hermitian form with
///                   the positive coordinate first.
struct Point {
  SpaceSpec space;
  Eigen::VectorXd coords;

  Point(SpaceSpec space_, Eigen::VectorXd coords_);
};

/// Tangent vector in ambient coordinates at a base point. Components are
/// orthogonal to the ambient constraint (and horizontal, i.e. Hermitian
/// orthogonal to the phase direction, for the complex spaces). The
/// Riemannian norm is metric_norm(), not necessarily the Euclidean norm of
/// the component vector.
struct TangentVector {
  Point base;
  Eigen::VectorXd components;

  TangentVector(Point base_, Eigen::VectorXd components_);

  double metric_norm() const;
};

/// Orthonormal basis of the tangent space at a point; vectors are columns.
struct Frame {
  Point base;
  Eigen::MatrixXd vectors;  // ambient_dim x dim, metric-orthonormal columns

  Frame(Point base_, Eigen::MatrixXd vectors_);

  TangentVector vector(int i) const;
};

/// Constant Ricci curvature of the space in the fixed normalization:
/// (kn + 3k - 4)/4 for compact, its negative for non-compact, 0 for
/// euclidean.
double ricci_constant(const SpaceSpec& spec);

/// Injectivity radius in the fixed normalization: 2*pi for R compact, pi
/// for the other compact spaces, +infinity otherwise.
double injectivity_radius(const SpaceSpec& spec);

/// Canonical base point: the origin of R^n, the pole (0,...,0,2), the
/// hyperboloid apex, or the line through the first complex axis.
Point base_point(const SpaceSpec& spec);

/// Riemannian inner product of tangent component vectors at a common base.
double metric_dot(const SpaceSpec& spec, const Eigen::VectorXd& base,
                  const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// Projection of an arbitrary ambient vector onto the (horizontal) tangent
/// space at a point.
Eigen::VectorXd project_to_tangent(const SpaceSpec& spec,
                                   const Eigen::VectorXd& base,
                                   const Eigen::VectorXd& ambient);

/// Geodesic endpoint exp_p(v). Throws UnrealizedSpace for formula-only
/// spaces and BeyondInjectivityRadius when |v| exceeds the injectivity
/// radius.
Point exp_map(const Point& p, const TangentVector& v);

/// Inverse of exp_map: the unique v with exp_p(v) = q and |v| = d(p, q).
/// Throws CutLocus when q is within 1e-9 of the cut distance of p.
TangentVector log_map(const Point& p, const Point& q);

/// Geodesic distance, by the closed form of each space.
double distance(const Point& p, const Point& q);

/// Deterministic metric-orthonormal frame at p (Gram-Schmidt over projected
/// ambient axes).
Frame make_frame(const Point& p);

/// Components of log_map(p0, q) in the given frame at p0; the Euclidean
/// norm of the result equals distance(p0, q).
Eigen::VectorXd normal_coordinates(const Point& p0, const Frame& frame,
                                   const Point& q);

namespace detail {
/// Constraint residual used by Point validation (|.|-2, Minkowski+4, ...).
double ambient_constraint_residual(const SpaceSpec& spec,
                                   const Eigen::VectorXd& coords);
/// Rescale coordinates exactly back onto the ambient constraint set.
void snap_to_constraint(const SpaceSpec& spec, Eigen::VectorXd& coords);
}  // namespace detail

}  // namespace specgeo
