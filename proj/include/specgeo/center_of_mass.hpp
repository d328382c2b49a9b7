#pragma once

#include <Eigen/Dense>
#include <vector>

#include "specgeo/spaces.hpp"

namespace specgeo {

/// Finite weighted point set representing a measure on a realized space.
/// On compact spaces the extrinsic diameter must stay below pi so the cloud
/// fits in a ball of radius pi/2.
struct WeightedPointCloud {
  SpaceSpec space;
  std::vector<Point> points;
  Eigen::VectorXd weights;

  WeightedPointCloud(std::vector<Point> points_, Eigen::VectorXd weights_);

  double total_weight() const { return weights.sum(); }
  /// Extrinsic diameter max_ij d(p_i, p_j), computed at construction.
  double diameter() const { return diameter_; }
  /// Index of the cloud point minimizing the weighted distance sum
  /// (deterministic tie-break: lowest index).
  int medoid_index() const { return medoid_; }

 private:
  double diameter_ = 0.0;
  int medoid_ = 0;
};

/// Mass distribution function G for the center-of-mass field.
class MassDistribution {
 public:
  enum class Kind { InverseT, Constant, Tabulated };

  static MassDistribution inverse_t() { return MassDistribution(Kind::InverseT); }
  static MassDistribution constant() { return MassDistribution(Kind::Constant); }
  /// Piecewise-linear G from samples; abscissae strictly increasing starting
  /// at 0, values positive away from the endpoints.
  static MassDistribution tabulated(std::vector<double> ts,
                                    std::vector<double> gs);

  Kind kind() const { return kind_; }
  double operator()(double t) const;

 private:
  explicit MassDistribution(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::vector<double> ts_, gs_;
};

struct ComResult {
  Point p0;
  double residual = 0.0;  // |v(p0)| / total weight
  int iterations = 0;
  bool converged = false;
};

struct ComOptions {
  /// Residual tolerance; <= 0 selects the default 1e-10 * (1 + diameter).
  double tol = -1.0;
  int max_iter = 10000;
};

/// The center-of-mass vector field v(q) = sum_j w_j G(d(q, p_j)) log_q(p_j).
/// Terms with d(q, p_j) < 1e-12 are dropped (for G = 1/t the summand has
/// unit magnitude but no defined direction there).
TangentVector com_field(const WeightedPointCloud& cloud,
                        const MassDistribution& g, const Point& q);

/// Damped fixed-point iteration q <- exp_q(delta v(q)/W) for a zero of the
/// field, with backtracking on delta and a deterministic medoid start.
/// Returns the best iterate with converged=false when max_iter is reached.
ComResult solve_com(const WeightedPointCloud& cloud, const MassDistribution& g,
                    const ComOptions& options = {});

double default_com_tolerance(const WeightedPointCloud& cloud);

}  // namespace specgeo
