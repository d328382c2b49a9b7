#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "specgeo/spaces.hpp"

namespace specgeo {

/// A closed hypersurface discretization: a triangle mesh (surface in a
/// 3-dimensional space) or a closed polyline (curve in a 2-dimensional one).
/// Edge lengths are geodesic distances in the ambient space, so curved
/// ambients need no charts downstream.
///
/// Construction validates closedness (every edge bordering exactly two
/// triangles, resp. every vertex of degree two), connectivity, and the
/// strict triangle inequality on the geodesic edge lengths.
class SurfaceMesh {
 public:
  static SurfaceMesh surface(std::vector<Point> vertices,
                             std::vector<std::array<int, 3>> triangles);
  static SurfaceMesh curve(std::vector<Point> vertices,
                           std::vector<std::array<int, 2>> segments);

  const SpaceSpec& space() const { return space_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::vector<std::array<int, 2>>& segments() const { return segments_; }
  bool is_curve() const { return triangles_.empty(); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  /// Unique undirected edges and their geodesic lengths (for a curve these
  /// coincide with the segments).
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const Eigen::VectorXd& edge_lengths() const { return edge_lengths_; }
  double edge_length(int a, int b) const;

  double min_edge_length() const { return edge_lengths_.minCoeff(); }
  double max_edge_length() const { return edge_lengths_.maxCoeff(); }
  int euler_characteristic() const;

 private:
  SurfaceMesh() = default;
  void finish_build();

  SpaceSpec space_;
  std::vector<Point> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::array<int, 2>> segments_;
  std::vector<std::array<int, 2>> edges_;
  Eigen::VectorXd edge_lengths_;
  std::vector<long long> edge_keys_;  // sorted keys for edge_length lookup
};

}  // namespace specgeo
