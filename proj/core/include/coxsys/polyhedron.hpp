#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxsys/lorentz.hpp"
#include "coxsys/report.hpp"

namespace coxsys {

// Marker exponent for a tangent/parallel face pair (dihedral angle 0).
inline constexpr int kInfiniteExponent = -1;
inline bool is_infinite_exponent(int n) { return n == kInfiniteExponent; }

// Combinatorial data of a Coxeter body: face labels plus the exponent n_ij
// (dihedral angle pi/n_ij) for each adjacent pair.  Pairs absent from the
// map are non-adjacent.
struct CoxeterSpec {
  std::string name;
  int dim = 2;                             // hyperbolic dimension: 2 or 3
  std::vector<std::string> faces;
  std::map<std::pair<int, int>, int> exponents;  // key (i,j), i < j

  int face_count() const { return static_cast<int>(faces.size()); }
  int face_index(const std::string& label) const;  // throws if unknown
  std::optional<int> exponent(int i, int j) const;
  void set_exponent(int i, int j, int n);
};

// Symmetric matrix of target inner products of the outward unit normals.
// Unset entries (non-adjacent pairs without data) are NaN.
struct GramMatrix {
  int order = 0;
  std::vector<double> a;  // row-major order x order

  explicit GramMatrix(int k);
  double operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i * order + j)];
  }
  double& operator()(int i, int j) {
    return a[static_cast<std::size_t>(i * order + j)];
  }
  bool is_set(int i, int j) const;
};

enum class VertexKind { Finite, Ideal };

struct VertexInfo {
  LorentzVector position;       // Finite: unit future timelike; Ideal: lightlike
  VertexKind kind = VertexKind::Finite;
  std::vector<int> incident_faces;
};

// A realized body: outward unit spacelike face normals together with the
// combinatorics they satisfy.  Adjacent declared pairs (i,j) obey
// <n_i, n_j> = -cos(pi / n_ij); some timelike point lies strictly inside
// every half-space.
struct RealizedPolyhedron {
  CoxeterSpec spec;
  std::vector<LorentzVector> normals;
  std::vector<VertexInfo> vertices;
  std::set<std::pair<int, int>> adjacency;   // includes all exponent pairs
  std::optional<LorentzVector> interior;     // known interior point, if any

  int face_count() const { return static_cast<int>(normals.size()); }
  const std::string& face_label(int i) const { return spec.faces[static_cast<std::size_t>(i)]; }
};

// Gram matrix from Coxeter data: G_ii = 1, G_ij = -cos(pi/n_ij), -1 for
// infinite exponents, NaN for non-adjacent pairs.  For simplices every pair
// must carry an exponent.
GramMatrix gram_from_coxeter(const CoxeterSpec& spec);

// Realize unit spacelike normals with the prescribed Gram matrix in R^{dim,1}.
// Requires signature (dim, 1) up to eigenvalues below kGramTol in magnitude;
// the result is reconstruction-checked and canonically positioned so a known
// interior point sits at (0,...,0,1) whenever one exists.
std::vector<LorentzVector> embed_gram(const GramMatrix& g, int dim);

// Convenience: gram_from_coxeter + embed_gram + vertices for a simplex spec.
RealizedPolyhedron realize_simplex(const CoxeterSpec& spec);

// Vertices of a simplex: vertex i spans the Minkowski-orthogonal complement
// of the other dim normals.  Throws input_error("...infinite volume...") if a
// candidate direction is spacelike.
std::vector<VertexInfo> simplex_vertices(const RealizedPolyhedron& rp);

// Regular n-gon with all interior angles pi/k (k = kInfiniteExponent for the
// ideal polygon).  Exists iff cos(pi/(2k)) > sin(pi/n).
RealizedPolyhedron regular_polygon(int n, int k);

// Ideal polygon with prescribed central angles (positive, summing to 2 pi)
// subtended by consecutive ideal vertices; side i spans vertices i, i+1.
RealizedPolyhedron ideal_polygon(const std::vector<double>& angles);

// Compact regular polyhedron of Schlafli type {p,q} with the given dihedral
// angle, built by scaling the Klein-model Platonic solid.  The feasible
// dihedral range is the open interval between the ideal-vertex limit and the
// Euclidean dihedral angle of {p,q}.
RealizedPolyhedron regular_polyhedron(int p, int q, double dihedral);

// Double the body across one face: normals of rp minus the mirror face,
// together with their reflected images (coincident copies merged).  In
// dimension 2 the vertex/adjacency structure is rebuilt geometrically.
RealizedPolyhedron reflect_polyhedron(const RealizedPolyhedron& rp,
                                      const std::string& face);

// Check all realization invariants; the report carries the worst violation.
VerificationReport validate(const RealizedPolyhedron& rp);

// --- geometric helpers -----------------------------------------------------

// A timelike point with <n_i, p> < 0 for all faces, found from the stored
// point, a least-squares solve, or the vertex sum.
std::optional<LorentzVector> find_interior_point(const RealizedPolyhedron& rp);

// Side indices of a 2-dimensional body in cyclic order around its interior.
std::vector<int> polygon_side_order(const RealizedPolyhedron& rp);

// Recompute the vertices of a 2-dimensional body from consecutive side
// intersections (cyclic order as above).
std::vector<VertexInfo> polygon_vertices(const RealizedPolyhedron& rp);

// Interior angle at each vertex of a 2-dimensional body, in cyclic order.
std::vector<double> polygon_angles(const RealizedPolyhedron& rp);

}  // namespace coxsys
