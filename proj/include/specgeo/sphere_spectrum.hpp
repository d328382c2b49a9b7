#pragma once

#include <utility>
#include <vector>

#include "specgeo/spaces.hpp"

namespace specgeo {

/// One eigenvalue of the Weingarten map of a geodesic sphere together with
/// its multiplicity.
struct WeingartenEigenvalue {
  double value = 0.0;
  int multiplicity = 0;
};

/// Closed-form spectral data of the geodesic sphere S(r): first eigenvalue,
/// principal curvatures, their trace and squared Frobenius norm.
struct SphereSpectrumRow {
  SpaceSpec spec;
  double r = 0.0;
  double lambda1 = 0.0;
  std::vector<WeingartenEigenvalue> weingarten_eigs;
  double trace_A = 0.0;
  double normA_sq = 0.0;
};

/// First nonzero Laplace eigenvalue of the geodesic sphere of radius r:
///   compact:     (kn-1)/(4 sin^2(r/2)) + (k-1)/(4 cos^2(r/2))
///   non-compact: (kn-1)/(4 sinh^2(r/2)) - (k-1)/(4 cosh^2(r/2))
///   euclidean:   (n-1)/r^2
/// For compact spaces with k >= 2 the closed form is the FIRST eigenvalue
/// only below the crossing threshold; past it a CrossingViolation is raised
/// rather than silently returning a higher mode's value.
double lambda1_geodesic_sphere(const SpaceSpec& spec, double r);

/// Principal curvatures of S(r) with multiplicities, sorted by value
/// descending; zero-multiplicity entries (k = 1) are omitted.
std::vector<WeingartenEigenvalue> weingarten_spectrum(const SpaceSpec& spec,
                                                      double r);

/// Trace of the Weingarten map of S(r).
double weingarten_trace(const SpaceSpec& spec, double r);

/// Squared Frobenius norm |A(r)|^2 of the second fundamental form of S(r).
double weingarten_norm_sq(const SpaceSpec& spec, double r);

/// Central-difference check of the traced Riccati equation:
///   | -(TrA(r+h) - TrA(r-h))/(2h) - (|A(r)|^2 + Ric) |
double riccati_residual(const SpaceSpec& spec, double r, double h);

/// Radius beyond which the compact closed form stops being the first
/// eigenvalue: 2*atan(sqrt((kn+1)/(k-1))) for k >= 2, +infinity for k = 1.
/// Always exceeds pi/2.
double crossing_threshold(const SpaceSpec& spec);

/// Upper end of the admissible radius interval (0, r_max) for S(r):
/// 2*pi for compact k = 1, pi for compact k >= 2, +infinity otherwise.
double sphere_radius_sup(const SpaceSpec& spec);

/// Assemble the full row for one radius.
SphereSpectrumRow spectrum_row(const SpaceSpec& spec, double r);

}  // namespace specgeo
