#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coxsys/face_graph.hpp"
#include "coxsys/polyhedron.hpp"
#include "coxsys/report.hpp"

namespace coxsys {

// Dihedral data of a triangular face's neighborhood: exponents between the
// triangle and its three neighbors (outer) and among the neighbors (inner).
struct AngleSystem {
  std::array<int, 3> outer{};
  std::array<int, 3> inner{};  // order n12, n23, n31

  bool operator==(const AngleSystem& o) const {
    return outer == o.outer && inner == o.inner;
  }
  bool operator<(const AngleSystem& o) const {
    return outer != o.outer ? outer < o.outer : inner < o.inner;
  }
};

// acosh(3 + 4 cos(2 pi / n)): the polygon two-step distance bound.
double polygon_bound(int n);
// acosh(3 + 4 cos(2 pi / 5)), the compact bound, and acosh(7), the
// finite-volume bound.
double compact_bound();
double finite_volume_bound();

// Minimal distance d(H_i, H_{i+2}) between second-neighbor sides of a
// realized polygon versus polygon_bound(n); non-strict in general, strict for
// compact polygons.
VerificationReport nikulin_check(const RealizedPolyhedron& polygon);

// The polygon injectivity-radius bound.  For n > 3 sides, via nikulin_check
// and the corresponding two-reflection element.  For triangles, doubles the
// triangle across a suitable side (twice when a right angle is present, once
// across the side opposite an ideal vertex) into a quadrilateral whose
// opposite sides are disjoint, and cross-checks the witness against
// bfs_systole at depth 8.
VerificationReport theorem42_check(const CoxeterSpec& spec);

// For a 3-dimensional body with a prismatic face: restrict to the prismatic
// face with fewest sides, run the polygon bound on the edge lines inside that
// face, and return the corresponding two-reflection element of the ambient
// group.  NotApplicable (Fail + note) when no prismatic face exists.
VerificationReport corollary46_check(const RealizedPolyhedron& rp,
                                     const FaceGraph& graph);

// Outer exponent triples (n01 <= n02 <= n03) of a triangular-face
// neighborhood admitting inner exponents with every vertex triple spherical
// and the inner triple hyperbolic.  Exhaustive below the given bound; the
// result is stable once the bound exceeds 5.
std::vector<std::array<int, 3>> enumerate_case2_outer(int bound = 20);

// Diagnostic: can this outer triple be completed at all?
bool case2_outer_admissible(const std::array<int, 3>& outer, int inner_cap = 100);

// All inner triples admissible for a fixed outer triple (entries capped for
// slots unconstrained by the vertex conditions).
std::vector<std::array<int, 3>> enumerate_case2_inner(
    const std::array<int, 3>& outer, int inner_cap = 20);

// The angle systems with outer triple (2,3,3), up to the relabeling symmetry
// fixing the outer triple.  Exactly two systems exist.
std::vector<AngleSystem> enumerate_case2b();

// All compact Coxeter tetrahedra with exponents in [2, max_exponent], up to
// face relabeling: Gram signature (3,1) with every vertex 3x3 minor positive
// definite.  Exactly nine classes; stable in the exponent bound.
std::vector<CoxeterSpec> enumerate_compact_tetrahedra(int max_exponent = 10);

// The injectivity-radius bound for one realized body: achieved is half the
// smallest translation length found by pair_systole and bfs_systole(max_len);
// the bound is compact_bound() or finite_volume_bound(); strict inequality.
VerificationReport theorem41_check(const RealizedPolyhedron& rp, bool compact,
                                   int max_len);

}  // namespace coxsys
