#include "solids.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "coxsys/errors.hpp"

namespace coxsys::solids {

namespace {

constexpr double kPhi = 1.618033988749894848;

Vec3 scale(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

std::vector<Vec3> sign_combinations(double x, double y, double z) {
  std::vector<Vec3> out;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        Vec3 v{sx * x, sy * y, sz * z};
        bool dup = false;
        for (const Vec3& w : out)
          if (dot(sub(v, w), sub(v, w)) < 1e-12) dup = true;
        if (!dup) out.push_back(v);
      }
  return out;
}

std::vector<Vec3> cyclic_perms(const std::vector<Vec3>& in) {
  std::vector<Vec3> out;
  for (const Vec3& v : in) {
    out.push_back(v);
    out.push_back({v.z, v.x, v.y});
    out.push_back({v.y, v.z, v.x});
  }
  return out;
}

std::vector<Vec3> normalized_all(std::vector<Vec3> v) {
  for (Vec3& w : v) w = normalized(w);
  return v;
}

std::vector<Vec3> tetrahedron_vertices() {
  return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
}

std::vector<Vec3> cube_vertices() { return sign_combinations(1, 1, 1); }

std::vector<Vec3> octahedron_vertices() {
  return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

std::vector<Vec3> icosahedron_vertices() {
  return cyclic_perms(sign_combinations(0, 1, kPhi));
}

std::vector<Vec3> dodecahedron_vertices() {
  std::vector<Vec3> v = sign_combinations(1, 1, 1);
  std::vector<Vec3> extra = cyclic_perms(sign_combinations(0, 1.0 / kPhi, kPhi));
  v.insert(v.end(), extra.begin(), extra.end());
  return v;
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Vec3 normalized(const Vec3& v) {
  const double n = std::sqrt(dot(v, v));
  return {v.x / n, v.y / n, v.z / n};
}

double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

EuclideanSolid platonic_solid(int p, int q) {
  EuclideanSolid s;
  if (p == 3 && q == 3) {
    s.vertices = tetrahedron_vertices();
    // Self-dual: the face opposite a vertex has outward normal -vertex.
    for (const Vec3& v : s.vertices) s.face_normals.push_back(scale(-1.0, v));
  } else if (p == 4 && q == 3) {
    s.vertices = cube_vertices();
    s.face_normals = octahedron_vertices();
  } else if (p == 3 && q == 4) {
    s.vertices = octahedron_vertices();
    s.face_normals = cube_vertices();
  } else if (p == 5 && q == 3) {
    s.vertices = dodecahedron_vertices();
    s.face_normals = icosahedron_vertices();
  } else if (p == 3 && q == 5) {
    s.vertices = icosahedron_vertices();
    s.face_normals = dodecahedron_vertices();
  } else {
    throw input_error("platonic_solid: {" + std::to_string(p) + "," +
                      std::to_string(q) + "} is not a Platonic pair");
  }
  s.vertices = normalized_all(s.vertices);
  s.face_normals = normalized_all(s.face_normals);
  s.face_labels = numbered("F", static_cast<int>(s.face_normals.size()));
  return s;
}

EuclideanSolid truncated_icosahedron() {
  const std::vector<Vec3> iv = normalized_all(icosahedron_vertices());

  // Icosahedron edges: vertex pairs at the maximal mutual dot product.
  double best = -2.0;
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (std::size_t j = i + 1; j < iv.size(); ++j)
      best = std::max(best, dot(iv[i], iv[j]));

  EuclideanSolid s;
  // Vertices: trisection points of the icosahedron edges.
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (std::size_t j = 0; j < iv.size(); ++j) {
      if (i == j || dot(iv[i], iv[j]) < best - 1e-9) continue;
      s.vertices.push_back(normalized(add(scale(2.0, iv[i]), iv[j])));
    }
  // Pentagon normals at icosahedron vertices, hexagon normals at face centers.
  for (const Vec3& v : iv) s.face_normals.push_back(v);
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (std::size_t j = i + 1; j < iv.size(); ++j)
      for (std::size_t k = j + 1; k < iv.size(); ++k) {
        if (dot(iv[i], iv[j]) < best - 1e-9 || dot(iv[j], iv[k]) < best - 1e-9 ||
            dot(iv[i], iv[k]) < best - 1e-9)
          continue;
        s.face_normals.push_back(normalized(add(add(iv[i], iv[j]), iv[k])));
      }
  s.face_labels = numbered("P", 12);
  std::vector<std::string> hex = numbered("H", 20);
  s.face_labels.insert(s.face_labels.end(), hex.begin(), hex.end());
  if (s.vertices.size() != 60 || s.face_normals.size() != 32)
    throw internal_check_failure("truncated_icosahedron: bad construction");
  return s;
}

EuclideanSolid prism_solid(int n) {
  if (n < 3) throw input_error("prism_solid: need n >= 3");
  EuclideanSolid s;
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * pi * k / n;
    s.vertices.push_back(normalized({std::cos(a), std::sin(a), 1.0}));
    s.vertices.push_back(normalized({std::cos(a), std::sin(a), -1.0}));
  }
  s.face_normals.push_back({0, 0, 1});
  s.face_normals.push_back({0, 0, -1});
  s.face_labels = {"top", "bottom"};
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * pi * (k + 0.5) / n;
    s.face_normals.push_back({std::cos(a), std::sin(a), 0.0});
    s.face_labels.push_back("S" + std::to_string(k));
  }
  return s;
}

double adjacent_normal_cos(const EuclideanSolid& s) {
  double best = -2.0;
  for (std::size_t i = 0; i < s.face_normals.size(); ++i)
    for (std::size_t j = i + 1; j < s.face_normals.size(); ++j)
      best = std::max(best, dot(s.face_normals[i], s.face_normals[j]));
  return best;
}

double incident_vertex_cos(const EuclideanSolid& s) {
  double best = -2.0;
  for (const Vec3& w : s.vertices)
    for (const Vec3& u : s.face_normals) best = std::max(best, dot(w, u));
  return best;
}

std::vector<int> face_vertex_ring(const EuclideanSolid& s, int face) {
  const Vec3 u = s.face_normals[static_cast<std::size_t>(face)];
  double best = -2.0;
  for (const Vec3& w : s.vertices) best = std::max(best, dot(w, u));
  std::vector<int> ring;
  for (std::size_t k = 0; k < s.vertices.size(); ++k)
    if (dot(s.vertices[k], u) >= best - 1e-6) ring.push_back(static_cast<int>(k));
  if (ring.size() < 3)
    throw internal_check_failure("face_vertex_ring: degenerate face");

  // Sort counterclockwise around the outward normal.
  const Vec3 w0 = s.vertices[static_cast<std::size_t>(ring[0])];
  Vec3 e1 = normalized(sub(w0, scale(dot(w0, u), u)));
  Vec3 e2 = cross(u, e1);
  std::sort(ring.begin(), ring.end(), [&](int a, int b) {
    const Vec3& wa = s.vertices[static_cast<std::size_t>(a)];
    const Vec3& wb = s.vertices[static_cast<std::size_t>(b)];
    return std::atan2(dot(wa, e2), dot(wa, e1)) <
           std::atan2(dot(wb, e2), dot(wb, e1));
  });
  return ring;
}

FaceGraph face_graph_from_solid(const EuclideanSolid& s) {
  const int nf = static_cast<int>(s.face_normals.size());
  std::vector<std::vector<int>> rings;
  rings.reserve(static_cast<std::size_t>(nf));
  for (int f = 0; f < nf; ++f) rings.push_back(face_vertex_ring(s, f));

  // Edge (vertex pair) -> the faces using it.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int f = 0; f < nf; ++f) {
    const auto& ring = rings[static_cast<std::size_t>(f)];
    const int n = static_cast<int>(ring.size());
    for (int k = 0; k < n; ++k) {
      int a = ring[static_cast<std::size_t>(k)];
      int b = ring[static_cast<std::size_t>((k + 1) % n)];
      edge_faces[{std::min(a, b), std::max(a, b)}].push_back(f);
    }
  }

  std::map<std::string, std::vector<std::string>> cyclic;
  for (int f = 0; f < nf; ++f) {
    const auto& ring = rings[static_cast<std::size_t>(f)];
    const int n = static_cast<int>(ring.size());
    std::vector<std::string> nb;
    for (int k = 0; k < n; ++k) {
      int a = ring[static_cast<std::size_t>(k)];
      int b = ring[static_cast<std::size_t>((k + 1) % n)];
      const auto& fs = edge_faces.at({std::min(a, b), std::max(a, b)});
      if (fs.size() != 2)
        throw internal_check_failure("face_graph_from_solid: open edge");
      nb.push_back(s.face_labels[static_cast<std::size_t>(fs[0] == f ? fs[1] : fs[0])]);
    }
    cyclic[s.face_labels[static_cast<std::size_t>(f)]] = nb;
  }
  return FaceGraph(cyclic);
}

}  // namespace coxsys::solids
