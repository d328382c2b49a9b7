#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "specgeo/mesh.hpp"

namespace specgeo {

/// Piecewise-linear Laplace-Beltrami discretization: intrinsic cotangent
/// stiffness matrix (positive semidefinite, constants in the kernel) and
/// lumped 1/3-barycentric mass diagonal. For curves the stiffness is the 1-D
/// second difference with edge-length weights and the mass holds half-sums
/// of incident edge lengths.
struct DiscreteOperators {
  Eigen::SparseMatrix<double> stiffness;
  Eigen::VectorXd mass;
  double total_volume = 0.0;
};

struct EigenResult {
  double lambda1 = 0.0;
  Eigen::VectorXd eigenvector;
  double residual = 0.0;  // |L u - lambda M u| / |M u|
  int iterations = 0;
};

/// Cotangents of the angles of a triangle given its three side lengths;
/// entry i is the cotangent at the corner opposite side i.
/// Throws DegenerateTriangle when the triangle inequality slack is < 1e-12.
std::array<double, 3> cotangents_from_lengths(double l0, double l1, double l2);

/// Intrinsic area of a triangle from its side lengths (stable Heron form).
double triangle_area_from_lengths(double l0, double l1, double l2);

DiscreteOperators build_operators(const SurfaceMesh& mesh);

/// Smallest nonzero generalized eigenvalue of (L, M): shifted inverse
/// iteration with explicit deflation of the constant mode and a fixed-seed
/// start vector. Deterministic; throws
/// SolverNonConvergence after 5000 iterations.
EigenResult first_eigenvalue(const DiscreteOperators& ops);

/// (f^T L f) / (f^T M f); throws ZeroFunction when f has zero mass norm.
double rayleigh_quotient(const DiscreteOperators& ops,
                         const Eigen::VectorXd& f);

}  // namespace specgeo
