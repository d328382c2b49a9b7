#include <doctest.h>

#include <cmath>

#include "specgeo/sphere_spectrum.hpp"
#include "test_support.hpp"

using namespace specgeo;
using specgeo::testing::random_point;
using specgeo::testing::random_tangent;

namespace {

constexpr double kPi = 3.14159265358979323846;

const std::vector<SpaceSpec> realized_spaces() {
  return {
      SpaceSpec(Field::R, 2, Kind::Euclidean),
      SpaceSpec(Field::R, 3, Kind::Euclidean),
      SpaceSpec(Field::R, 2, Kind::Compact),
      SpaceSpec(Field::R, 3, Kind::Compact),
      SpaceSpec(Field::R, 2, Kind::Noncompact),
      SpaceSpec(Field::R, 3, Kind::Noncompact),
      SpaceSpec(Field::C, 1, Kind::Compact),
      SpaceSpec(Field::C, 2, Kind::Compact),
      SpaceSpec(Field::C, 2, Kind::Noncompact),
  };
}

double sample_radius(const SpaceSpec& spec) {
  const double inj = injectivity_radius(spec);
  return std::isfinite(inj) ? 0.9 * inj : 2.5;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(SpaceSpec(Field::C, 1, Kind::Compact));
  CHECK_NOTHROW(SpaceSpec(Field::Ca, 2, Kind::Compact));
  CHECK_THROWS_AS(SpaceSpec(Field::R, 1, Kind::Euclidean), Error);   // dim 1
  CHECK_THROWS_AS(SpaceSpec(Field::Ca, 3, Kind::Compact), Error);    // Ca needs n=2
  CHECK_THROWS_AS(SpaceSpec(Field::C, 2, Kind::Euclidean), Error);   // euclid is R only
  CHECK_THROWS_AS(SpaceSpec(Field::R, 0, Kind::Euclidean), Error);

  CHECK(SpaceSpec(Field::H, 2, Kind::Compact).dim() == 8);
  CHECK(SpaceSpec(Field::Ca, 2, Kind::Compact).dim() == 16);
  CHECK_FALSE(SpaceSpec(Field::H, 2, Kind::Compact).realized());
  CHECK(SpaceSpec(Field::C, 2, Kind::Noncompact).realized());
}

TEST_CASE("ricci constants") {
  CHECK(ricci_constant(SpaceSpec(Field::R, 3, Kind::Compact)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ricci_constant(SpaceSpec(Field::R, 7, Kind::Euclidean)) == 0.0);
  CHECK(ricci_constant(SpaceSpec(Field::C, 2, Kind::Compact)) ==
        doctest::Approx(1.5).epsilon(1e-14));
  CHECK(ricci_constant(SpaceSpec(Field::C, 2, Kind::Noncompact)) ==
        doctest::Approx(-1.5).epsilon(1e-14));

  // pinned against the r-independent oracle lambda1(S(r)) - |A(r)|^2
  for (double r : {0.3, 0.7, 1.2}) {
    const SpaceSpec cp2(Field::C, 2, Kind::Compact);
    const double oracle =
        lambda1_geodesic_sphere(cp2, r) - weingarten_norm_sq(cp2, r);
    CHECK(std::abs(oracle - 1.5) < 1e-10);
  }
}

TEST_CASE("euclidean exp is translation") {
  const SpaceSpec spec(Field::R, 3, Kind::Euclidean);
  Eigen::VectorXd origin = Eigen::VectorXd::Zero(3);
  Eigen::VectorXd v(3);
  v << 1, 2, 3;
  const Point p(spec, origin);
  const Point q = exp_map(p, TangentVector(p, v));
  CHECK((q.coords - v).norm() == 0.0);
  CHECK((log_map(p, q).components - v).norm() < 1e-14);
}

TEST_CASE("sphere exp at 2*pi reaches the antipode") {
  const SpaceSpec spec(Field::R, 3, Kind::Compact);
  std::mt19937_64 rng(7);
  const Point p = random_point(rng, spec, 2.0);
  const Point q = exp_map(p, random_tangent(rng, p, 2.0 * kPi));
  CHECK((q.coords + p.coords).norm() < 1e-9);
  // the distance function itself resolves ~sqrt(eps) at the cut locus
  CHECK(distance(p, q) == doctest::Approx(2.0 * kPi).epsilon(1e-6));
  CHECK(distance(p, Point(spec, (-p.coords).eval())) == 2.0 * kPi);
  CHECK_THROWS_AS(exp_map(p, random_tangent(rng, p, 2.0 * kPi + 1e-6)), Error);
}

TEST_CASE("distance basics") {
  std::mt19937_64 rng(11);
  for (const SpaceSpec& spec : realized_spaces()) {
    CAPTURE(spec.to_string());
    const Point p = random_point(rng, spec, 1.0);
    CHECK(distance(p, p) == 0.0);
  }

  // maximally distant complex lines in CP^n sit at distance pi
  const SpaceSpec cp2(Field::C, 2, Kind::Compact);
  Eigen::VectorXd z = Eigen::VectorXd::Zero(6), w = Eigen::VectorXd::Zero(6);
  z(0) = 1.0;  // line through e_0
  w(2) = 1.0;  // line through e_1
  CHECK(distance(Point(cp2, z), Point(cp2, w)) ==
        doctest::Approx(kPi).epsilon(1e-14));
}

TEST_CASE("CP^n distance agrees with the phase-minimized sphere distance") {
  // independent oracle: d([z],[w]) = 2 min_phi arccos Re(e^{i phi} <z,w>)
  const SpaceSpec cp2(Field::C, 2, Kind::Compact);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Point p = random_point(rng, cp2, 1.4);
    const Point q = random_point(rng, cp2, 1.4);
    std::complex<double> inner(0.0, 0.0);
    for (int j = 0; j < 3; ++j) {
      const std::complex<double> zj(p.coords(2 * j), p.coords(2 * j + 1));
      const std::complex<double> wj(q.coords(2 * j), q.coords(2 * j + 1));
      inner += std::conj(zj) * wj;
    }
    double best = std::numeric_limits<double>::infinity();
    const int grid = 1 << 14;
    for (int g = 0; g < grid; ++g) {
      const double phi = 2.0 * kPi * g / grid;
      const double c = (std::exp(std::complex<double>(0, phi)) * inner).real();
      best = std::min(best, 2.0 * std::acos(std::clamp(c, -1.0, 1.0)));
    }
    CHECK(std::abs(best - distance(p, q)) < 1e-5);
  }
}

TEST_CASE("log/exp round trip") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(0.01, 1.0);
  for (const SpaceSpec& spec : realized_spaces()) {
    CAPTURE(spec.to_string());
    const double max_norm = sample_radius(spec);
    for (int trial = 0; trial < 200; ++trial) {
      const Point p = random_point(rng, spec, 1.0);
      const TangentVector v = random_tangent(rng, p, unif(rng) * max_norm);
      const Point q = exp_map(p, v);
      const TangentVector w = log_map(p, q);
      CHECK((w.components - v.components).norm() < 1e-9);
      CHECK(std::abs(w.metric_norm() - distance(p, q)) < 1e-10);
    }
  }
}

TEST_CASE("exp/log round trip on random pairs") {
  std::mt19937_64 rng(19);
  for (const SpaceSpec& spec :
       {SpaceSpec(Field::R, 3, Kind::Compact),
        SpaceSpec(Field::C, 2, Kind::Compact),
        SpaceSpec(Field::R, 3, Kind::Noncompact)}) {
    CAPTURE(spec.to_string());
    for (int trial = 0; trial < 1000; ++trial) {
      const Point p = random_point(rng, spec, 1.2);
      const Point q = random_point(rng, spec, 1.2);
      const Point back = exp_map(p, log_map(p, q));
      CHECK(distance(back, q) < 1e-10);
    }
  }
}

TEST_CASE("CP^2 exp preserves speed") {
  const SpaceSpec cp2(Field::C, 2, Kind::Compact);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Point p = random_point(rng, cp2, 1.0);
    const TangentVector v = random_tangent(rng, p, 0.9);
    CHECK(std::abs(distance(p, exp_map(p, v)) - 0.9) < 1e-10);
  }
}

TEST_CASE("cut locus guards") {
  const SpaceSpec sphere(Field::R, 3, Kind::Compact);
  std::mt19937_64 rng(29);
  const Point p = random_point(rng, sphere, 1.0);
  const Point antipode(sphere, (-p.coords).eval());
  CHECK_THROWS_AS(log_map(p, antipode), Error);

  const SpaceSpec cp2(Field::C, 2, Kind::Compact);
  Eigen::VectorXd z = Eigen::VectorXd::Zero(6), w = Eigen::VectorXd::Zero(6);
  z(0) = 1.0;
  w(2) = 1.0;
  CHECK_THROWS_AS(log_map(Point(cp2, z), Point(cp2, w)), Error);
}

TEST_CASE("unrealized spaces reject geometry") {
  const SpaceSpec hp2(Field::H, 2, Kind::Compact);
  CHECK_THROWS_AS(base_point(hp2), Error);
  CHECK(ricci_constant(hp2) == doctest::Approx(4.0));  // formula level is fine
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
  std::mt19937_64 rng(31);
  for (const SpaceSpec& spec : realized_spaces()) {
    CAPTURE(spec.to_string());
    for (int trial = 0; trial < 100; ++trial) {
      const Point a = random_point(rng, spec, 1.2);
      const Point b = random_point(rng, spec, 1.2);
      const Point c = random_point(rng, spec, 1.2);
      const double ab = distance(a, b);
      const double ba = distance(b, a);
      CHECK(std::abs(ab - ba) < 1e-10);
      CHECK(ab <= distance(a, c) + distance(c, b) + 1e-10);
    }
  }
}

TEST_CASE("frames are metric-orthonormal") {
  std::mt19937_64 rng(37);
  for (const SpaceSpec& spec : realized_spaces()) {
    CAPTURE(spec.to_string());
    for (int trial = 0; trial < 10; ++trial) {
      const Point p = random_point(rng, spec, 1.0);
      const Frame frame = make_frame(p);  // constructor re-checks the Gram matrix
      for (int i = 0; i < spec.dim(); ++i)
        for (int j = 0; j < spec.dim(); ++j) {
          const double g = metric_dot(spec, p.coords, frame.vectors.col(i),
                                      frame.vectors.col(j));
          CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) < 1e-10);
        }
    }
  }
}

TEST_CASE("normal coordinates") {
  const SpaceSpec r3(Field::R, 3, Kind::Euclidean);
  std::mt19937_64 rng(41);
  const Point p0 = random_point(rng, r3, 1.0);
  const Frame frame = make_frame(p0);

  CHECK(normal_coordinates(p0, frame, p0).norm() == 0.0);

  // flat case with the standard frame: X = q - p0
  const Point q = random_point(rng, r3, 1.0);
  Eigen::VectorXd x = normal_coordinates(p0, frame, q);
  CHECK((frame.vectors * x - (q.coords - p0.coords)).norm() < 1e-12);

  // |X| = d(p0, q) in every realized space
  for (const SpaceSpec& spec : realized_spaces()) {
    CAPTURE(spec.to_string());
    const Point c0 = random_point(rng, spec, 1.0);
    const Frame f0 = make_frame(c0);
    for (int trial = 0; trial < 50; ++trial) {
      const Point qq = random_point(rng, spec, 1.3);
      const double d = distance(c0, qq);
      if (d > injectivity_radius(spec) - 1e-6) continue;
      CHECK(std::abs(normal_coordinates(c0, f0, qq).norm() - d) < 1e-10);
    }
  }
}

TEST_CASE("point validation") {
  const SpaceSpec sphere(Field::R, 3, Kind::Compact);
  Eigen::VectorXd bad(4);
  bad << 1.0, 0.0, 0.0, 0.0;  // norm 1, not 2
  CHECK_THROWS_AS(Point(sphere, bad), Error);
  Eigen::VectorXd good(4);
  good << 0.0, 0.0, 0.0, 2.0;
  CHECK_NOTHROW(Point(sphere, good));
  // tangent must be orthogonal
  const Point p(sphere, good);
  Eigen::VectorXd not_tangent(4);
  not_tangent << 0.0, 0.0, 0.0, 1.0;
  CHECK_THROWS_AS(TangentVector(p, not_tangent), Error);
}
