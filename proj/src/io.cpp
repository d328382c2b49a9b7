#include "specgeo/io.hpp"

#include <fstream>
#include <sstream>

namespace specgeo {

std::string format_double(double x) {
  return Json(x).dump();
}

Json space_to_json(const SpaceSpec& spec) {
  return Json{{"field", field_name(spec.field)},
              {"n", spec.n},
              {"kind", kind_name(spec.kind)}};
}

SpaceSpec space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("n") ||
      !j.contains("kind"))
    fail(ErrorCode::IoError, "space object needs field, n, kind");
  return SpaceSpec(parse_field(j.at("field").get<std::string>()),
                   j.at("n").get<int>(),
                   parse_kind(j.at("kind").get<std::string>()));
}

namespace {

Json points_to_json(const std::vector<Point>& points) {
  Json arr = Json::array();
  for (const Point& p : points) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < p.coords.size(); ++i) row.push_back(p.coords(i));
    arr.push_back(std::move(row));
  }
  return arr;
}

std::vector<Point> points_from_json(const SpaceSpec& spec, const Json& j) {
  if (!j.is_array() || j.empty())
    fail(ErrorCode::IoError, "points must be a non-empty array");
  std::vector<Point> points;
  points.reserve(j.size());
  for (const auto& row : j) {
    Eigen::VectorXd coords(row.size());
    for (size_t i = 0; i < row.size(); ++i) coords(i) = row[i].get<double>();
    points.emplace_back(spec, std::move(coords));
  }
  return points;
}

}  // namespace

Json cloud_to_json(const WeightedPointCloud& cloud) {
  Json j;
  j["space"] = space_to_json(cloud.space);
  j["points"] = points_to_json(cloud.points);
  Json w = Json::array();
  for (Eigen::Index i = 0; i < cloud.weights.size(); ++i)
    w.push_back(cloud.weights(i));
  j["weights"] = std::move(w);
  return j;
}

WeightedPointCloud cloud_from_json(const Json& j) {
  const SpaceSpec spec = space_from_json(j.at("space"));
  std::vector<Point> points = points_from_json(spec, j.at("points"));
  Eigen::VectorXd weights = Eigen::VectorXd::Ones(points.size());
  if (j.contains("weights")) {
    const auto& w = j.at("weights");
    if (w.size() != points.size())
      fail(ErrorCode::IoError, "weights/points length mismatch");
    for (size_t i = 0; i < w.size(); ++i) weights(i) = w[i].get<double>();
  }
  return WeightedPointCloud(std::move(points), std::move(weights));
}

Json mesh_to_json(const SurfaceMesh& mesh) {
  Json j;
  j["space"] = space_to_json(mesh.space());
  j["points"] = points_to_json(mesh.vertices());
  Json cells = Json::array();
  if (mesh.is_curve()) {
    for (const auto& seg : mesh.segments()) cells.push_back({seg[0], seg[1]});
  } else {
    for (const auto& tri : mesh.triangles())
      cells.push_back({tri[0], tri[1], tri[2]});
  }
  j["cells"] = std::move(cells);
  return j;
}

SurfaceMesh mesh_from_json(const Json& j) {
  const SpaceSpec spec = space_from_json(j.at("space"));
  std::vector<Point> points = points_from_json(spec, j.at("points"));
  if (!j.contains("cells") || !j.at("cells").is_array() || j.at("cells").empty())
    fail(ErrorCode::IoError, "mesh needs a non-empty cells array");
  const auto& cells = j.at("cells");
  const size_t arity = cells.front().size();
  if (arity == 3) {
    std::vector<std::array<int, 3>> triangles;
    for (const auto& c : cells) {
      if (c.size() != 3) fail(ErrorCode::IoError, "mixed cell arities");
      triangles.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
    }
    return SurfaceMesh::surface(std::move(points), std::move(triangles));
  }
  if (arity == 2) {
    std::vector<std::array<int, 2>> segments;
    for (const auto& c : cells) {
      if (c.size() != 2) fail(ErrorCode::IoError, "mixed cell arities");
      segments.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return SurfaceMesh::curve(std::move(points), std::move(segments));
  }
  fail(ErrorCode::IoError, "cells must be index pairs or triples");
}

void write_off(std::ostream& out, const SurfaceMesh& mesh) {
  if (mesh.space().kind != Kind::Euclidean || mesh.is_curve())
    fail(ErrorCode::IoError,
         "OFF output is limited to euclidean-ambient triangle meshes");
  out << "OFF\n"
      << mesh.vertex_count() << ' ' << mesh.triangles().size() << ' '
      << mesh.edges().size() << '\n';
  for (const Point& p : mesh.vertices()) {
    for (Eigen::Index i = 0; i < p.coords.size(); ++i) {
      if (i) out << ' ';
      out << format_double(p.coords(i));
    }
    out << '\n';
  }
  for (const auto& tri : mesh.triangles())
    out << "3 " << tri[0] << ' ' << tri[1] << ' ' << tri[2] << '\n';
}

SurfaceMesh read_off(std::istream& in) {
  std::string token;
  if (!(in >> token) || token != "OFF")
    fail(ErrorCode::IoError, "missing OFF header");
  int nv = 0, nf = 0, ne = 0;
  if (!(in >> nv >> nf >> ne) || nv <= 0 || nf <= 0)
    fail(ErrorCode::IoError, "bad OFF counts");
  const SpaceSpec spec(Field::R, 3, Kind::Euclidean);
  std::vector<Point> vertices;
  vertices.reserve(nv);
  for (int v = 0; v < nv; ++v) {
    Eigen::VectorXd x(3);
    if (!(in >> x(0) >> x(1) >> x(2))) fail(ErrorCode::IoError, "bad vertex row");
    vertices.emplace_back(spec, std::move(x));
  }
  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(nf);
  for (int f = 0; f < nf; ++f) {
    int arity = 0;
    if (!(in >> arity) || arity != 3)
      fail(ErrorCode::IoError, "only triangle faces are supported");
    std::array<int, 3> tri{};
    if (!(in >> tri[0] >> tri[1] >> tri[2]))
      fail(ErrorCode::IoError, "bad face row");
    triangles.push_back(tri);
  }
  return SurfaceMesh::surface(std::move(vertices), std::move(triangles));
}

namespace {

Json params_to_json(ShapeFamily family, const ShapeParams& p) {
  Json j;
  switch (family) {
    case ShapeFamily::GeodesicSphere:
    case ShapeFamily::Circle:
      j["r"] = p.r;
      break;
    case ShapeFamily::PerturbedSphere:
    case ShapeFamily::PerturbedCircle:
      j["r"] = p.r;
      j["eps"] = p.eps;
      break;
    case ShapeFamily::Ellipsoid:
      j["a"] = p.a;
      j["b"] = p.b;
      j["c"] = p.c;
      break;
    case ShapeFamily::Ellipse:
      j["a"] = p.a;
      j["b"] = p.b;
      break;
  }
  return j;
}

}  // namespace

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["space"] = space_to_json(r.spec);
  j["shape"] = shape_family_name(r.family);
  j["params"] = params_to_json(r.family, r.params);
  j["subdiv"] = r.subdiv;
  j["vertices"] = r.vertex_count;
  j["min_edge"] = r.min_edge;
  j["max_edge"] = r.max_edge;
  j["total_volume"] = r.total_volume;
  Json p0 = Json::array();
  for (Eigen::Index i = 0; i < r.p0.coords.size(); ++i)
    p0.push_back(r.p0.coords(i));
  j["p0"] = std::move(p0);
  j["com_residual"] = r.com_residual;
  j["com_converged"] = r.com_converged;
  j["centering_magnitude"] = r.centering_magnitude;
  j["lambda1_mesh"] = r.lambda1_mesh;
  j["eigen_residual"] = r.eigen_residual;
  j["rhs_integral"] = r.rhs_integral;
  j["rhs_average"] = r.rhs_average;
  j["rayleigh_sum"] = r.rayleigh_sum;
  j["rayleigh_mass_sum"] = r.rayleigh_mass_sum;
  j["gap"] = r.gap;
  j["relative_gap"] = r.relative_gap;
  j["tolerance"] = r.tolerance;
  j["bound_holds"] = r.bound_holds;
  j["equality_class"] = equality_class_name(r.equality_class);
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"value", c.value},
                          {"threshold", c.threshold},
                          {"pass", c.pass}});
  j["checks"] = std::move(checks);
  return j;
}

Json study_to_json(const StudyResult& study) {
  Json j;
  Json levels = Json::array();
  for (const auto& r : study.reports) levels.push_back(report_to_json(r));
  j["levels"] = std::move(levels);
  Json orders = Json::array();
  for (double o : study.gap_orders) orders.push_back(o);
  j["gap_orders"] = std::move(orders);
  j["stabilization_ratio"] = study.stabilization_ratio;
  j["bound_holds_everywhere"] = study.bound_holds_everywhere;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::IoError, "cannot parse '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace specgeo
