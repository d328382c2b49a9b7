#include "specgeo/shapes.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace specgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Quadrupole bump on the direction sphere, range [-1/2, 1].
double direction_harmonic(const Eigen::Vector3d& u) {
  return (3.0 * u.z() * u.z() - 1.0) / 2.0;
}

Point radial_graph_vertex(const Point& center, const Frame& frame,
                          const Eigen::VectorXd& direction, double radius) {
  Eigen::VectorXd components = frame.vectors * (radius * direction);
  return exp_map(center, TangentVector(center, std::move(components)));
}

SurfaceMesh build_radial_surface(const SpaceSpec& space, int subdiv,
                                 const std::function<double(const Eigen::Vector3d&)>& rho) {
  std::vector<Eigen::Vector3d> dirs;
  std::vector<std::array<int, 3>> faces;
  icosphere_directions(subdiv, &dirs, &faces);
  const Point center = base_point(space);
  const Frame frame = make_frame(center);
  std::vector<Point> vertices;
  vertices.reserve(dirs.size());
  for (const auto& u : dirs) {
    Eigen::VectorXd d(3);
    d << u.x(), u.y(), u.z();
    vertices.push_back(radial_graph_vertex(center, frame, d, rho(u)));
  }
  return SurfaceMesh::surface(std::move(vertices), std::move(faces));
}

SurfaceMesh build_radial_curve(const SpaceSpec& space, int n,
                               const std::function<double(double)>& rho) {
  if (n < 3) fail(ErrorCode::DomainError, "polyline needs >= 3 vertices");
  const Point center = base_point(space);
  const Frame frame = make_frame(center);
  std::vector<Point> vertices;
  std::vector<std::array<int, 2>> segments;
  vertices.reserve(n);
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * kPi * j / n;
    Eigen::VectorXd d(2);
    d << std::cos(theta), std::sin(theta);
    vertices.push_back(radial_graph_vertex(center, frame, d, rho(theta)));
    segments.push_back({j, (j + 1) % n});
  }
  return SurfaceMesh::curve(std::move(vertices), std::move(segments));
}

void require_euclidean(const SpaceSpec& space, int dim, const char* what) {
  if (space.kind != Kind::Euclidean || space.dim() != dim)
    fail(ErrorCode::UnsupportedFamily,
         std::string(what) + " is only available in euclidean dimension " +
             std::to_string(dim));
}

}  // namespace

const char* shape_family_name(ShapeFamily f) {
  switch (f) {
    case ShapeFamily::GeodesicSphere: return "geodesic-sphere";
    case ShapeFamily::Ellipsoid: return "ellipsoid";
    case ShapeFamily::PerturbedSphere: return "perturbed-sphere";
    case ShapeFamily::Circle: return "circle";
    case ShapeFamily::Ellipse: return "ellipse";
    case ShapeFamily::PerturbedCircle: return "perturbed-circle";
  }
  return "?";
}

ShapeFamily parse_shape_family(const std::string& s) {
  if (s == "geodesic-sphere") return ShapeFamily::GeodesicSphere;
  if (s == "ellipsoid") return ShapeFamily::Ellipsoid;
  if (s == "perturbed-sphere") return ShapeFamily::PerturbedSphere;
  if (s == "circle") return ShapeFamily::Circle;
  if (s == "ellipse") return ShapeFamily::Ellipse;
  if (s == "perturbed-circle") return ShapeFamily::PerturbedCircle;
  fail(ErrorCode::UnsupportedFamily, "unknown shape family '" + s + "'");
}

void icosphere_directions(int level, std::vector<Eigen::Vector3d>* directions,
                          std::vector<std::array<int, 3>>* faces) {
  if (level < 0) fail(ErrorCode::DomainError, "subdivision level must be >= 0");
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> v = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& p : v) p.normalize();
  std::vector<std::array<int, 3>> f = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Eigen::Vector3d m = (v[a] + v[b]).normalized();
      v.push_back(m);
      const int idx = static_cast<int>(v.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(4 * f.size());
    for (const auto& t : f) {
      const int ab = mid(t[0], t[1]);
      const int bc = mid(t[1], t[2]);
      const int ca = mid(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    f = std::move(next);
  }
  *directions = std::move(v);
  *faces = std::move(f);
}

SurfaceMesh generate_shape(const SpaceSpec& space, ShapeFamily family,
                           const ShapeParams& params, int subdiv) {
  if (!space.realized()) fail(ErrorCode::UnrealizedSpace, space.to_string());
  switch (family) {
    case ShapeFamily::GeodesicSphere: {
      if (params.r <= 0.0) fail(ErrorCode::DomainError, "radius must be positive");
      if (space.dim() == 3)
        return build_radial_surface(space, subdiv,
                                    [&](const Eigen::Vector3d&) { return params.r; });
      if (space.dim() == 2)
        return build_radial_curve(space, subdiv,
                                  [&](double) { return params.r; });
      fail(ErrorCode::UnsupportedFamily,
           "geodesic-sphere meshes need a 2- or 3-dimensional space");
    }
    case ShapeFamily::PerturbedSphere: {
      if (space.dim() != 3)
        fail(ErrorCode::UnsupportedFamily,
             "perturbed-sphere needs a 3-dimensional space");
      if (params.r <= 0.0) fail(ErrorCode::DomainError, "radius must be positive");
      return build_radial_surface(space, subdiv, [&](const Eigen::Vector3d& u) {
        return params.r * (1.0 + params.eps * direction_harmonic(u));
      });
    }
    case ShapeFamily::Ellipsoid: {
      require_euclidean(space, 3, "ellipsoid");
      std::vector<Eigen::Vector3d> dirs;
      std::vector<std::array<int, 3>> faces;
      icosphere_directions(subdiv, &dirs, &faces);
      std::vector<Point> vertices;
      vertices.reserve(dirs.size());
      for (const auto& u : dirs) {
        Eigen::VectorXd x(3);
        x << params.a * u.x(), params.b * u.y(), params.c * u.z();
        vertices.emplace_back(space, std::move(x));
      }
      return SurfaceMesh::surface(std::move(vertices), std::move(faces));
    }
    case ShapeFamily::Circle: {
      if (space.dim() != 2)
        fail(ErrorCode::UnsupportedFamily, "circle needs a 2-dimensional space");
      if (params.r <= 0.0) fail(ErrorCode::DomainError, "radius must be positive");
      return build_radial_curve(space, subdiv, [&](double) { return params.r; });
    }
    case ShapeFamily::PerturbedCircle: {
      if (space.dim() != 2)
        fail(ErrorCode::UnsupportedFamily,
             "perturbed-circle needs a 2-dimensional space");
      if (params.r <= 0.0) fail(ErrorCode::DomainError, "radius must be positive");
      return build_radial_curve(space, subdiv, [&](double theta) {
        return params.r * (1.0 + params.eps * std::cos(2.0 * theta));
      });
    }
    case ShapeFamily::Ellipse: {
      require_euclidean(space, 2, "ellipse");
      const int n = subdiv;
      if (n < 3) fail(ErrorCode::DomainError, "polyline needs >= 3 vertices");
      std::vector<Point> vertices;
      std::vector<std::array<int, 2>> segments;
      for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * kPi * j / n;
        Eigen::VectorXd x(2);
        x << params.a * std::cos(theta), params.b * std::sin(theta);
        vertices.emplace_back(space, std::move(x));
        segments.push_back({j, (j + 1) % n});
      }
      return SurfaceMesh::curve(std::move(vertices), std::move(segments));
    }
  }
  fail(ErrorCode::UnsupportedFamily, "unhandled shape family");
}

}  // namespace specgeo
