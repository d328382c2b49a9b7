#include "specgeo/sphere_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace specgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_radius_domain(const SpaceSpec& spec, double r) {
  if (r <= 0.0)
    fail(ErrorCode::DomainError, "geodesic radius must be positive");
  const double sup = sphere_radius_sup(spec);
  if (r >= sup)
    fail(ErrorCode::DomainError,
         "geodesic sphere degenerates at r = " + std::to_string(sup));
}

}  // namespace

double sphere_radius_sup(const SpaceSpec& spec) {
  if (spec.kind != Kind::Compact) return std::numeric_limits<double>::infinity();
  return spec.k() == 1 ? 2.0 * kPi : kPi;
}

double crossing_threshold(const SpaceSpec& spec) {
  if (spec.kind != Kind::Compact)
    fail(ErrorCode::KindError, "crossing threshold applies to compact spaces");
  const int k = spec.k();
  if (k == 1) return std::numeric_limits<double>::infinity();
  return 2.0 * std::atan(std::sqrt((spec.dim() + 1.0) / (k - 1.0)));
}

double lambda1_geodesic_sphere(const SpaceSpec& spec, double r) {
  check_radius_domain(spec, r);
  const int k = spec.k();
  const double kn = spec.dim();
  switch (spec.kind) {
    case Kind::Euclidean:
      return (spec.n - 1.0) / (r * r);
    case Kind::Compact: {
      if (k >= 2 && std::tan(r / 2.0) >= std::sqrt((kn + 1.0) / (k - 1.0)))
        fail(ErrorCode::CrossingViolation,
             "closed form is not the first eigenvalue for r >= " +
                 std::to_string(crossing_threshold(spec)));
      const double s = std::sin(r / 2.0);
      double value = (kn - 1.0) / (4.0 * s * s);
      if (k >= 2) {
        const double c = std::cos(r / 2.0);
        value += (k - 1.0) / (4.0 * c * c);
      }
      return value;
    }
    case Kind::Noncompact: {
      const double s = std::sinh(r / 2.0);
      const double c = std::cosh(r / 2.0);
      return (kn - 1.0) / (4.0 * s * s) - (k - 1.0) / (4.0 * c * c);
    }
  }
  fail(ErrorCode::InvalidSpec, spec.to_string());
}

std::vector<WeingartenEigenvalue> weingarten_spectrum(const SpaceSpec& spec,
                                                      double r) {
  check_radius_domain(spec, r);
  const int k = spec.k();
  std::vector<WeingartenEigenvalue> eigs;
  switch (spec.kind) {
    case Kind::Euclidean:
      eigs.push_back({1.0 / r, spec.n - 1});
      break;
    case Kind::Compact: {
      // fibre directions: cot r; base directions: (1/2) cot(r/2)
      if (k >= 2) eigs.push_back({1.0 / std::tan(r), k - 1});
      if (spec.n >= 2)
        eigs.push_back({0.5 / std::tan(r / 2.0), k * (spec.n - 1)});
      break;
    }
    case Kind::Noncompact: {
      if (k >= 2) eigs.push_back({1.0 / std::tanh(r), k - 1});
      if (spec.n >= 2)
        eigs.push_back({0.5 / std::tanh(r / 2.0), k * (spec.n - 1)});
      break;
    }
  }
  std::sort(eigs.begin(), eigs.end(),
            [](const WeingartenEigenvalue& a, const WeingartenEigenvalue& b) {
              return a.value > b.value;
            });
  return eigs;
}

double weingarten_trace(const SpaceSpec& spec, double r) {
  double trace = 0.0;
  for (const auto& e : weingarten_spectrum(spec, r))
    trace += e.value * e.multiplicity;
  return trace;
}

double weingarten_norm_sq(const SpaceSpec& spec, double r) {
  double norm_sq = 0.0;
  for (const auto& e : weingarten_spectrum(spec, r))
    norm_sq += e.value * e.value * e.multiplicity;
  return norm_sq;
}

double riccati_residual(const SpaceSpec& spec, double r, double h) {
  if (h <= 0.0) fail(ErrorCode::DomainError, "step h must be positive");
  const double minus_trace_prime =
      -(weingarten_trace(spec, r + h) - weingarten_trace(spec, r - h)) /
      (2.0 * h);
  const double identity_rhs = weingarten_norm_sq(spec, r) + ricci_constant(spec);
  return std::abs(minus_trace_prime - identity_rhs);
}

SphereSpectrumRow spectrum_row(const SpaceSpec& spec, double r) {
  SphereSpectrumRow row;
  row.spec = spec;
  row.r = r;
  row.lambda1 = lambda1_geodesic_sphere(spec, r);
  row.weingarten_eigs = weingarten_spectrum(spec, r);
  row.trace_A = weingarten_trace(spec, r);
  row.normA_sq = weingarten_norm_sq(spec, r);
  return row;
}

}  // namespace specgeo
