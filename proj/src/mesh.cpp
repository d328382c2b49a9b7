#include "specgeo/mesh.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace specgeo {

namespace {

long long edge_key(int a, int b, int n_vertices) {
  const int lo = std::min(a, b), hi = std::max(a, b);
  return static_cast<long long>(lo) * n_vertices + hi;
}

void check_index(int v, int n_vertices) {
  if (v < 0 || v >= n_vertices)
    fail(ErrorCode::NonManifold, "cell references vertex " + std::to_string(v));
}

}  // namespace

SurfaceMesh SurfaceMesh::surface(std::vector<Point> vertices,
                                 std::vector<std::array<int, 3>> triangles) {
  SurfaceMesh mesh;
  mesh.vertices_ = std::move(vertices);
  mesh.triangles_ = std::move(triangles);
  if (mesh.vertices_.empty() || mesh.triangles_.empty())
    fail(ErrorCode::NonManifold, "empty mesh");
  mesh.space_ = mesh.vertices_.front().space;
  if (mesh.space_.dim() != 3)
    fail(ErrorCode::DomainError, "triangle meshes need a 3-dimensional space");

  const int n = mesh.vertex_count();
  std::map<long long, int> incidence;
  for (const auto& tri : mesh.triangles_) {
    for (int c = 0; c < 3; ++c) check_index(tri[c], n);
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      fail(ErrorCode::NonManifold, "degenerate triangle indices");
    for (int c = 0; c < 3; ++c)
      incidence[edge_key(tri[c], tri[(c + 1) % 3], n)]++;
  }
  for (const auto& [key, count] : incidence)
    if (count != 2)
      fail(ErrorCode::NonManifold,
           "closed surface requires every edge on exactly 2 triangles");

  for (const auto& [key, count] : incidence)
    mesh.edges_.push_back({static_cast<int>(key / n), static_cast<int>(key % n)});
  mesh.finish_build();

  // strict triangle inequality on geodesic lengths
  for (const auto& tri : mesh.triangles_) {
    const double a = mesh.edge_length(tri[1], tri[2]);
    const double b = mesh.edge_length(tri[2], tri[0]);
    const double c = mesh.edge_length(tri[0], tri[1]);
    const double slack =
        std::min({a + b - c, b + c - a, c + a - b});
    if (slack < 1e-12)
      fail(ErrorCode::DegenerateTriangle,
           "triangle inequality slack " + std::to_string(slack));
  }
  return mesh;
}

SurfaceMesh SurfaceMesh::curve(std::vector<Point> vertices,
                               std::vector<std::array<int, 2>> segments) {
  SurfaceMesh mesh;
  mesh.vertices_ = std::move(vertices);
  mesh.segments_ = std::move(segments);
  if (mesh.vertices_.empty() || mesh.segments_.empty())
    fail(ErrorCode::NonManifold, "empty polyline");
  mesh.space_ = mesh.vertices_.front().space;
  if (mesh.space_.dim() != 2)
    fail(ErrorCode::DomainError, "closed polylines need a 2-dimensional space");

  const int n = mesh.vertex_count();
  std::vector<int> degree(n, 0);
  std::map<long long, int> seen;
  for (const auto& seg : mesh.segments_) {
    check_index(seg[0], n);
    check_index(seg[1], n);
    if (seg[0] == seg[1]) fail(ErrorCode::NonManifold, "zero-length segment");
    if (seen[edge_key(seg[0], seg[1], n)]++)
      fail(ErrorCode::NonManifold, "duplicate segment");
    degree[seg[0]]++;
    degree[seg[1]]++;
  }
  for (int v = 0; v < n; ++v)
    if (degree[v] != 2)
      fail(ErrorCode::NonManifold,
           "closed curve requires every vertex of degree 2");

  mesh.edges_ = mesh.segments_;
  mesh.finish_build();
  return mesh;
}

void SurfaceMesh::finish_build() {
  for (const Point& p : vertices_)
    if (p.space != space_)
      fail(ErrorCode::DomainError, "all vertices must be in one space");

  const int n = vertex_count();
  // canonical order: unique edges sorted by (min, max) vertex pair
  std::sort(edges_.begin(), edges_.end(),
            [n](const std::array<int, 2>& a, const std::array<int, 2>& b) {
              return edge_key(a[0], a[1], n) < edge_key(b[0], b[1], n);
            });
  edge_lengths_.resize(edges_.size());
  edge_keys_.clear();
  edge_keys_.reserve(edges_.size());
  for (size_t e = 0; e < edges_.size(); ++e) {
    const double len =
        distance(vertices_[edges_[e][0]], vertices_[edges_[e][1]]);
    if (!(len > 0.0))
      fail(ErrorCode::DegenerateTriangle, "zero-length geodesic edge");
    edge_lengths_(e) = len;
    edge_keys_.push_back(edge_key(edges_[e][0], edges_[e][1], n));
  }

  // connectivity
  std::vector<std::vector<int>> adjacency(n);
  for (const auto& e : edges_) {
    adjacency[e[0]].push_back(e[1]);
    adjacency[e[1]].push_back(e[0]);
  }
  std::vector<char> visited(n, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[v])
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n)
    fail(ErrorCode::NonManifold, "mesh is not connected");
}

double SurfaceMesh::edge_length(int a, int b) const {
  const long long key = edge_key(a, b, vertex_count());
  auto it = std::lower_bound(edge_keys_.begin(), edge_keys_.end(), key);
  if (it == edge_keys_.end() || *it != key)
    fail(ErrorCode::NonManifold, "no such edge");
  return edge_lengths_(it - edge_keys_.begin());
}

int SurfaceMesh::euler_characteristic() const {
  if (is_curve())
    return vertex_count() - static_cast<int>(segments_.size());
  return vertex_count() - static_cast<int>(edges_.size()) +
         static_cast<int>(triangles_.size());
}

}  // namespace specgeo
