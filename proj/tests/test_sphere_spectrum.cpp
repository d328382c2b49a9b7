#include <doctest.h>

#include <cmath>

#include "specgeo/sphere_spectrum.hpp"
#include "test_support.hpp"

using namespace specgeo;

namespace {

constexpr double kPi = 3.14159265358979323846;

/// All specs with kn <= 32 (formula level, both curvature signs).
std::vector<SpaceSpec> formula_specs(Kind kind) {
  std::vector<SpaceSpec> specs;
  for (int n = 2; n <= 32; ++n) specs.emplace_back(Field::R, n, kind);
  for (int n = 1; n <= 16; ++n) specs.emplace_back(Field::C, n, kind);
  for (int n = 1; n <= 8; ++n) specs.emplace_back(Field::H, n, kind);
  specs.emplace_back(Field::Ca, 2, kind);
  return specs;
}

std::vector<double> radius_grid(const SpaceSpec& spec, int count) {
  double hi = spec.kind == Kind::Compact
                  ? std::min(crossing_threshold(spec), sphere_radius_sup(spec))
                  : 5.0;
  const double lo = 0.3;
  hi = hi - 0.3;
  std::vector<double> grid;
  for (int i = 0; i < count; ++i)
    grid.push_back(lo + (hi - lo) * i / (count - 1));
  return grid;
}

/// Perimeter of the geodesic circle of radius r in a realized 2-dim space,
/// by polygonal approximation through exp_map.
double circle_perimeter(const SpaceSpec& spec, double r, int segments) {
  const Point center = base_point(spec);
  const Frame frame = make_frame(center);
  std::vector<Point> ring;
  for (int j = 0; j < segments; ++j) {
    const double theta = 2.0 * kPi * j / segments;
    Eigen::VectorXd dir = std::cos(theta) * frame.vectors.col(0) +
                          std::sin(theta) * frame.vectors.col(1);
    ring.push_back(exp_map(center, TangentVector(center, r * dir)));
  }
  double length = 0.0;
  for (int j = 0; j < segments; ++j)
    length += distance(ring[j], ring[(j + 1) % segments]);
  return length;
}

}  // namespace

TEST_CASE("lambda1 closed forms") {
  CHECK(lambda1_geodesic_sphere(SpaceSpec(Field::R, 3, Kind::Euclidean), 1.0) ==
        doctest::Approx(2.0).epsilon(1e-14));

  CHECK(lambda1_geodesic_sphere(SpaceSpec(Field::R, 3, Kind::Compact),
                                kPi / 2.0) ==
        doctest::Approx(1.0).epsilon(1e-14));

  const SpaceSpec cp2(Field::C, 2, Kind::Compact);
  const double s = std::sin(0.4), c = std::cos(0.4);
  const double expected = 3.0 / (4.0 * s * s) + 1.0 / (4.0 * c * c);
  CHECK(lambda1_geodesic_sphere(cp2, 0.8) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(std::abs(lambda1_geodesic_sphere(cp2, 0.8) -
                 (weingarten_norm_sq(cp2, 0.8) + ricci_constant(cp2))) < 1e-10);
}

TEST_CASE("weingarten spectra") {
  const SpaceSpec cp2(Field::C, 2, Kind::Compact);
  const auto eigs = weingarten_spectrum(cp2, kPi / 2.0);
  REQUIRE(eigs.size() == 2);
  // sorted by value descending
  CHECK(eigs[0].value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eigs[0].multiplicity == 2);
  CHECK(std::abs(eigs[1].value) < 1e-15);
  CHECK(eigs[1].multiplicity == 1);
  CHECK(weingarten_trace(cp2, kPi / 2.0) == doctest::Approx(1.0).epsilon(1e-12));

  const auto flat = weingarten_spectrum(SpaceSpec(Field::R, 3, Kind::Euclidean), 2.0);
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(flat[0].multiplicity == 2);

  const SpaceSpec h2(Field::R, 2, Kind::Noncompact);
  const auto hyp = weingarten_spectrum(h2, 1.0);
  REQUIRE(hyp.size() == 1);
  CHECK(hyp[0].value == doctest::Approx(0.5 / std::tanh(0.5)).epsilon(1e-14));
  CHECK(hyp[0].multiplicity == 1);
}

TEST_CASE("trace A matches the growth rate of the circle perimeter") {
  // independent oracle: Tr A(r) = d/dr log of the exp-map Jacobian, realized
  // here as the log-derivative of the geodesic circle perimeter
  for (const SpaceSpec& spec : {SpaceSpec(Field::R, 2, Kind::Noncompact),
                                SpaceSpec(Field::R, 2, Kind::Compact)}) {
    CAPTURE(spec.to_string());
    const double r = 1.0, h = 1e-4;
    const int segments = 4096;
    const double grow =
        (std::log(circle_perimeter(spec, r + h, segments)) -
         std::log(circle_perimeter(spec, r - h, segments))) /
        (2.0 * h);
    CHECK(std::abs(grow - weingarten_trace(spec, r)) < 1e-5);
  }
}

TEST_CASE("riccati residuals") {
  CHECK(riccati_residual(SpaceSpec(Field::R, 3, Kind::Euclidean), 1.0, 1e-5) <=
        1e-8);
  CHECK(riccati_residual(SpaceSpec(Field::C, 3, Kind::Compact), 0.9, 1e-5) <=
        1e-6);
  CHECK(riccati_residual(SpaceSpec(Field::H, 2, Kind::Noncompact), 1.5, 1e-5) <=
        1e-6);
}

TEST_CASE("crossing threshold") {
  CHECK(crossing_threshold(SpaceSpec(Field::R, 5, Kind::Compact)) ==
        std::numeric_limits<double>::infinity());

  const double cp2_threshold =
      crossing_threshold(SpaceSpec(Field::C, 2, Kind::Compact));
  CHECK(cp2_threshold == doctest::Approx(2.0 * std::atan(std::sqrt(5.0)))
                             .epsilon(1e-14));
  CHECK(cp2_threshold == doctest::Approx(2.300523983021863).epsilon(1e-12));

  for (Field field : {Field::C, Field::H, Field::Ca}) {
    for (int n = 2; n <= 8; ++n) {
      if (field == Field::Ca && n != 2) continue;
      const SpaceSpec spec(field, n, Kind::Compact);
      CHECK(crossing_threshold(spec) > kPi / 2.0);
    }
  }

  CHECK_THROWS_AS(crossing_threshold(SpaceSpec(Field::R, 3, Kind::Euclidean)),
                  Error);
}

TEST_CASE("domain errors") {
  const SpaceSpec cp2(Field::C, 2, Kind::Compact);
  CHECK_THROWS_AS(lambda1_geodesic_sphere(cp2, 0.0), Error);
  CHECK_THROWS_AS(lambda1_geodesic_sphere(cp2, -1.0), Error);
  CHECK_THROWS_AS(lambda1_geodesic_sphere(cp2, kPi), Error);
  CHECK_THROWS_AS(weingarten_spectrum(cp2, kPi), Error);

  // past the crossing threshold the value is no longer the first eigenvalue
  CHECK_NOTHROW(lambda1_geodesic_sphere(cp2, 2.3));  // just below 2.30052...
  bool crossing = false;
  try {
    lambda1_geodesic_sphere(cp2, 2.35);
  } catch (const Error& e) {
    crossing = e.code() == ErrorCode::CrossingViolation;
  }
  CHECK(crossing);

  const SpaceSpec s3(Field::R, 3, Kind::Compact);
  CHECK_NOTHROW(lambda1_geodesic_sphere(s3, 2.3));  // k=1 has no crossing
  CHECK_THROWS_AS(lambda1_geodesic_sphere(s3, 2.0 * kPi), Error);
}

TEST_CASE("spectrum rows are internally consistent") {
  std::vector<SpaceSpec> specs = formula_specs(Kind::Compact);
  const auto noncompact = formula_specs(Kind::Noncompact);
  specs.insert(specs.end(), noncompact.begin(), noncompact.end());
  for (const SpaceSpec& spec : specs) {
    CAPTURE(spec.to_string());
    for (double r : radius_grid(spec, 7)) {
      const SphereSpectrumRow row = spectrum_row(spec, r);
      int total_multiplicity = 0;
      double trace = 0.0, norm_sq = 0.0;
      for (const auto& e : row.weingarten_eigs) {
        total_multiplicity += e.multiplicity;
        trace += e.value * e.multiplicity;
        norm_sq += e.value * e.value * e.multiplicity;
      }
      CHECK(total_multiplicity == spec.dim() - 1);
      CHECK(std::abs(row.trace_A - trace) <= 1e-12 * std::abs(trace));
      CHECK(std::abs(row.normA_sq - norm_sq) <= 1e-12 * norm_sq);
      CHECK(std::abs(row.lambda1 - (row.normA_sq + ricci_constant(spec))) <=
            1e-10);
    }
  }
}

TEST_CASE("riccati sweep stays under 1e-6") {
  std::vector<SpaceSpec> specs = formula_specs(Kind::Compact);
  const auto noncompact = formula_specs(Kind::Noncompact);
  specs.insert(specs.end(), noncompact.begin(), noncompact.end());
  for (const SpaceSpec& spec : specs) {
    CAPTURE(spec.to_string());
    for (double r : radius_grid(spec, 7))
      CHECK(riccati_residual(spec, r, 1e-5) <= 1e-6);
  }
}

TEST_CASE("noncompact lambda1 is strictly decreasing") {
  for (const SpaceSpec& spec : formula_specs(Kind::Noncompact)) {
    CAPTURE(spec.to_string());
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 40; ++i) {
      const double r = 0.05 + i * 0.2;
      const double value = lambda1_geodesic_sphere(spec, r);
      CHECK(value < prev);
      prev = value;
    }
  }
}

TEST_CASE("small-radius asymptotics match the euclidean limit") {
  std::vector<SpaceSpec> specs = formula_specs(Kind::Compact);
  const auto noncompact = formula_specs(Kind::Noncompact);
  specs.insert(specs.end(), noncompact.begin(), noncompact.end());
  for (const SpaceSpec& spec : specs) {
    CAPTURE(spec.to_string());
    const double r = 1e-3;
    const double limit = spec.dim() - 1.0;
    const double scaled = lambda1_geodesic_sphere(spec, r) * r * r;
    CHECK(std::abs(scaled - limit) / limit <= 1e-3);
  }
}

TEST_CASE("k=1 compact reduces to the rescaled round-sphere formula") {
  for (int n : {2, 3, 5, 9}) {
    const SpaceSpec spec(Field::R, n, Kind::Compact);
    for (double r : {0.4, 1.3, 2.9, 5.0}) {
      const double s = std::sin(r / 2.0);
      CHECK(lambda1_geodesic_sphere(spec, r) == (n - 1.0) / (4.0 * s * s));
    }
  }
}
