#include "specgeo/center_of_mass.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>

namespace specgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCoincide = 1e-12;

double clamp(double x, double lo, double hi) {
  return std::min(hi, std::max(lo, x));
}

/// One blocked pass over all point pairs: extrinsic diameter and the medoid
/// (argmin of the weighted distance sums). Uses Gram-matrix blocks so the
/// O(N^2) cost is GEMM-bound.
void pairwise_stats(const SpaceSpec& spec, const std::vector<Point>& points,
                    const Eigen::VectorXd& weights, double* diameter,
                    int* medoid) {
  const int n_pts = static_cast<int>(points.size());
  const int amb = spec.ambient_dim();
  Eigen::MatrixXd coords(n_pts, amb);
  for (int i = 0; i < n_pts; ++i) coords.row(i) = points[i].coords;

  const bool complex_field = spec.field == Field::C;
  Eigen::MatrixXcd z;      // complex representatives, one row per point
  Eigen::MatrixXcd z_form; // z with the signature applied (noncompact dual)
  if (complex_field) {
    const int cn = amb / 2;
    z.resize(n_pts, cn);
    for (int i = 0; i < n_pts; ++i)
      for (int j = 0; j < cn; ++j)
        z(i, j) = std::complex<double>(coords(i, 2 * j), coords(i, 2 * j + 1));
    z_form = z;
    if (spec.kind == Kind::Noncompact) z_form.rightCols(cn - 1) *= -1.0;
  }

  double max_d = 0.0;
  double best_sum = std::numeric_limits<double>::infinity();
  int best_index = 0;

  const int block = 512;
  Eigen::MatrixXd dist;
  for (int row0 = 0; row0 < n_pts; row0 += block) {
    const int rows = std::min(block, n_pts - row0);
    if (spec.field == Field::R && spec.kind == Kind::Euclidean) {
      Eigen::VectorXd sq = coords.rowwise().squaredNorm();
      dist = (-2.0 * coords.middleRows(row0, rows) * coords.transpose());
      dist.colwise() += sq.segment(row0, rows);
      dist.rowwise() += sq.transpose();
      dist = dist.cwiseMax(0.0).cwiseSqrt();
    } else if (spec.field == Field::R && spec.kind == Kind::Compact) {
      dist = (coords.middleRows(row0, rows) * coords.transpose()) / 4.0;
      dist = dist.unaryExpr(
          [](double c) { return 2.0 * std::acos(clamp(c, -1.0, 1.0)); });
    } else if (spec.field == Field::R) {
      const int m = amb - 1;
      dist = (coords.col(m).segment(row0, rows) * coords.col(m).transpose() -
              coords.middleRows(row0, rows).leftCols(m) *
                  coords.leftCols(m).transpose()) /
             4.0;
      dist = dist.unaryExpr(
          [](double c) { return 2.0 * std::acosh(std::max(1.0, c)); });
    } else {
      Eigen::MatrixXcd gram =
          z.middleRows(row0, rows) * z_form.adjoint();
      if (spec.kind == Kind::Compact) {
        dist = gram.cwiseAbs().unaryExpr(
            [](double c) { return 2.0 * std::acos(clamp(c, 0.0, 1.0)); });
      } else {
        dist = gram.cwiseAbs().unaryExpr(
            [](double c) { return 2.0 * std::acosh(std::max(1.0, c)); });
      }
    }
    max_d = std::max(max_d, dist.maxCoeff());
    Eigen::VectorXd sums = dist * weights;
    for (int i = 0; i < rows; ++i) {
      if (sums(i) < best_sum) {
        best_sum = sums(i);
        best_index = row0 + i;
      }
    }
  }
  *diameter = max_d;
  *medoid = best_index;
}

double field_residual(const WeightedPointCloud& cloud,
                      const MassDistribution& g, const Point& q) {
  TangentVector v = com_field(cloud, g, q);
  return v.metric_norm() / cloud.total_weight();
}

int coincident_point_index(const WeightedPointCloud& cloud, const Point& q) {
  for (int j = 0; j < static_cast<int>(cloud.points.size()); ++j)
    if (distance(q, cloud.points[j]) < kCoincide) return j;
  return -1;
}

}  // namespace

WeightedPointCloud::WeightedPointCloud(std::vector<Point> points_,
                                       Eigen::VectorXd weights_)
    : space(points_.empty() ? SpaceSpec() : points_.front().space),
      points(std::move(points_)),
      weights(std::move(weights_)) {
  if (points.empty()) fail(ErrorCode::DomainError, "cloud needs at least one point");
  if (!space.realized()) fail(ErrorCode::UnrealizedSpace, space.to_string());
  if (weights.size() != static_cast<Eigen::Index>(points.size()))
    fail(ErrorCode::DomainError, "one weight per point required");
  for (const Point& p : points)
    if (p.space != space)
      fail(ErrorCode::DomainError, "all points must be in one space");
  if ((weights.array() <= 0.0).any())
    fail(ErrorCode::DomainError, "weights must be positive");

  pairwise_stats(space, points, weights, &diameter_, &medoid_);
  if (space.kind == Kind::Compact && diameter_ > kPi - 1e-9)
    fail(ErrorCode::DiameterViolation,
         "compact cloud diameter " + std::to_string(diameter_) +
             " exceeds pi - 1e-9");
}

MassDistribution MassDistribution::tabulated(std::vector<double> ts,
                                             std::vector<double> gs) {
  if (ts.size() != gs.size() || ts.size() < 2)
    fail(ErrorCode::DomainError, "tabulated G needs >= 2 matching samples");
  for (size_t i = 1; i < ts.size(); ++i)
    if (ts[i] <= ts[i - 1])
      fail(ErrorCode::DomainError, "tabulated abscissae must increase");
  for (size_t i = 0; i < gs.size(); ++i) {
    const bool interior = i > 0 && i + 1 < gs.size();
    if (gs[i] < 0.0 || (interior && gs[i] == 0.0))
      fail(ErrorCode::DomainError, "G must be positive on the open interval");
  }
  MassDistribution g(Kind::Tabulated);
  g.ts_ = std::move(ts);
  g.gs_ = std::move(gs);
  return g;
}

double MassDistribution::operator()(double t) const {
  switch (kind_) {
    case Kind::InverseT: return 1.0 / t;
    case Kind::Constant: return 1.0;
    case Kind::Tabulated: {
      if (t <= ts_.front()) return gs_.front();
      if (t >= ts_.back()) return gs_.back();
      auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
      const size_t hi = it - ts_.begin();
      const double w = (t - ts_[hi - 1]) / (ts_[hi] - ts_[hi - 1]);
      return (1.0 - w) * gs_[hi - 1] + w * gs_[hi];
    }
  }
  return 0.0;
}

TangentVector com_field(const WeightedPointCloud& cloud,
                        const MassDistribution& g, const Point& q) {
  if (q.space != cloud.space)
    fail(ErrorCode::DomainError, "query point in a different space");
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(q.coords.size());
  for (size_t j = 0; j < cloud.points.size(); ++j) {
    const double d = distance(q, cloud.points[j]);
    if (d < kCoincide) continue;
    TangentVector lg = log_map(q, cloud.points[j]);
    const double factor = g.kind() == MassDistribution::Kind::InverseT
                              ? cloud.weights(j) / d
                              : cloud.weights(j) * g(d);
    acc += factor * lg.components;
  }
  // near-coincident terms amplify the logs' off-tangent rounding by 1/d;
  // one projection of the sum removes it
  acc = project_to_tangent(q.space, q.coords, acc);
  return TangentVector(q, std::move(acc));
}

double default_com_tolerance(const WeightedPointCloud& cloud) {
  return 1e-10 * (1.0 + cloud.diameter());
}

ComResult solve_com(const WeightedPointCloud& cloud, const MassDistribution& g,
                    const ComOptions& options) {
  if (cloud.space.kind == Kind::Compact && cloud.diameter() > kPi - 1e-9)
    fail(ErrorCode::DiameterViolation, "compact cloud too spread");
  const double total = cloud.total_weight();
  const double tol =
      options.tol > 0.0 ? options.tol : default_com_tolerance(cloud);

  Point q = cloud.points[cloud.medoid_index()];
  Point best_q = q;
  double best_res = std::numeric_limits<double>::infinity();
  bool perturbed = false;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);

  auto perturb = [&](const Point& at) {
    std::normal_distribution<double> gauss;
    Eigen::VectorXd dir(at.coords.size());
    double norm = 0.0;
    do {
      for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = gauss(rng);
      dir = project_to_tangent(at.space, at.coords, dir);
      norm = std::sqrt(std::max(0.0, metric_dot(at.space, at.coords, dir, dir)));
    } while (norm < 1e-8);
    perturbed = true;
    return exp_map(at, TangentVector(at, (1e-8 / norm) * dir));
  };

  int iter = 0;
  for (; iter < options.max_iter; ++iter) {
    TangentVector v = com_field(cloud, g, q);
    const double res = v.metric_norm() / total;
    if (res < best_res) {
      best_res = res;
      best_q = q;
    }
    if (res <= tol) {
      const int anchor = coincident_point_index(cloud, q);
      if (anchor >= 0 && !perturbed &&
          g.kind() == MassDistribution::Kind::InverseT &&
          res * total > cloud.weights(anchor)) {
        // The dropped coincident term can hide a nonzero subgradient; step
        // off the data point once and keep iterating.
        q = perturb(q);
        continue;
      }
      return {q, res, iter, true};
    }

    double delta = 1.0;
    bool moved = false;
    while (delta > 1e-14) {
      Point trial =
          exp_map(q, TangentVector(q, (delta / total) * v.components));
      if (field_residual(cloud, g, trial) < res) {
        q = std::move(trial);
        moved = true;
        break;
      }
      delta /= 2.0;
    }
    if (!moved) {
      if (!perturbed && coincident_point_index(cloud, q) >= 0) {
        q = perturb(q);
        continue;
      }
      break;  // no descent direction left at this scale
    }
  }
  const double final_res = field_residual(cloud, g, best_q);
  return {best_q, final_res, iter, final_res <= tol};
}

}  // namespace specgeo
