#pragma once

#include <string>

#include "specgeo/mesh.hpp"

namespace specgeo {

enum class ShapeFamily {
  GeodesicSphere,   // radius r about the base point; surface or curve
  Ellipsoid,        // semi-axes a,b,c; euclidean R^3 only
  PerturbedSphere,  // radial graph r*(1 + eps*Y(u)), Y(u) = (3 u_z^2 - 1)/2
  Circle,           // radius r polyline in a 2-dimensional space
  Ellipse,          // semi-axes a,b; euclidean R^2 only
  PerturbedCircle,  // radial graph r*(1 + eps*cos(2 theta))
};

const char* shape_family_name(ShapeFamily f);
ShapeFamily parse_shape_family(const std::string& s);

struct ShapeParams {
  double r = 1.0;
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double eps = 0.0;
};

/// Deterministic test-shape factory. For surfaces `subdiv` is the icosphere
/// subdivision level (12*4^subdiv directions... 10*4^subdiv+2 vertices); for
/// polylines it is the vertex count. Curved shapes are radial graphs through
/// exp_map about base_point(space).
SurfaceMesh generate_shape(const SpaceSpec& space, ShapeFamily family,
                           const ShapeParams& params, int subdiv);

/// Unit icosphere directions and faces (subdivided icosahedron, midpoints
/// re-normalized). Deterministic for a given level.
void icosphere_directions(int level, std::vector<Eigen::Vector3d>* directions,
                          std::vector<std::array<int, 3>>* faces);

}  // namespace specgeo
