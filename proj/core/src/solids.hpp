#pragma once

// Euclidean reference solids (internal).  Supplies unit face normals and unit
// vertex directions for the Platonic solids, n-gonal prisms and the truncated
// icosahedron, plus the generic conversion from such data to a FaceGraph with
// consistently oriented cyclic neighbor lists.

#include <string>
#include <vector>

#include "coxsys/face_graph.hpp"

namespace coxsys::solids {

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

Vec3 normalized(const Vec3& v);
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

struct EuclideanSolid {
  // All unit length.  Vertex-transitive solids only: every vertex lies on the
  // same sphere, so face membership is decided by maximal dot products.
  std::vector<Vec3> face_normals;
  std::vector<Vec3> vertices;
  std::vector<std::string> face_labels;
};

// {p,q} in {3,3},{4,3},{3,4},{5,3},{3,5}; labels F0..F{k-1}.
EuclideanSolid platonic_solid(int p, int q);

// 12 pentagons P0..P11 + 20 hexagons H0..H19.
EuclideanSolid truncated_icosahedron();

// n-gonal prism: labels top, bottom, S0..S{n-1}.
EuclideanSolid prism_solid(int n);

// Cosine of the angle between adjacent face normals (the maximal off-diagonal
// dot product).
double adjacent_normal_cos(const EuclideanSolid& s);

// Cosine of the angle between a vertex direction and an incident face normal
// (the maximal vertex/normal dot product).
double incident_vertex_cos(const EuclideanSolid& s);

// Vertex indices lying on the given face, in counterclockwise order around
// the outward normal.
std::vector<int> face_vertex_ring(const EuclideanSolid& s, int face);

// Cyclic neighbor lists of all faces, consistently oriented.
FaceGraph face_graph_from_solid(const EuclideanSolid& s);

}  // namespace coxsys::solids
