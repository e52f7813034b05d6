#pragma once

#include <array>
#include <cstdint>

#include "coxsys/random.hpp"

namespace coxsys {

// Minkowski linear algebra in R^{d,1} for d = 2, 3.  Vectors have dim = d+1
// coordinates; the LAST coordinate is the timelike one, so
//
//   <u, v> = u_0 v_0 + ... + u_{d-1} v_{d-1} - u_d v_d.
//
// Hyperbolic d-space is the sheet {<x,x> = -1, x_last > 0}; a hyperplane is
// the zero set of a unit spacelike normal e, with half-space {<x,e> <= 0}.
// All values are immutable after construction and every operation here is
// pure, so concurrent use is safe.

enum class CausalType { Spacelike, Timelike, Lightlike };

struct LorentzVector {
  int dim = 3;               // ambient coordinate count: 3 or 4
  std::array<double, 4> c{}; // entries at index >= dim stay zero

  LorentzVector() = default;
  explicit LorentzVector(int dimension);
  static LorentzVector xyz(double x, double y, double z);
  static LorentzVector xyzt(double x, double y, double z, double t);

  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double last() const { return c[static_cast<std::size_t>(dim - 1)]; }
};

LorentzVector operator+(const LorentzVector& u, const LorentzVector& v);
LorentzVector operator-(const LorentzVector& u, const LorentzVector& v);
LorentzVector operator-(const LorentzVector& v);
LorentzVector operator*(double s, const LorentzVector& v);

// Entrywise max |u_i - v_i|.
double max_abs_diff(const LorentzVector& u, const LorentzVector& v);

// The Minkowski form; throws input_error on dimension mismatch.
double minkowski_inner(const LorentzVector& u, const LorentzVector& v);

// Sign trichotomy of <v,v> with tolerance kLightTol; throws on ~zero vector.
CausalType causal_type(const LorentzVector& v);

// v / sqrt(|<v,v>|).  Timelike results are flipped to the future sheet
// (positive last coordinate); lightlike input throws degenerate_input.
LorentzVector normalize(const LorentzVector& v);

struct LorentzMatrix {
  int dim = 3;
  std::array<double, 16> m{}; // row-major dim x dim

  LorentzMatrix() = default;
  explicit LorentzMatrix(int dimension) : dim(dimension) {}
  static LorentzMatrix identity(int dimension);

  double operator()(int i, int j) const {
    return m[static_cast<std::size_t>(i * dim + j)];
  }
  double& operator()(int i, int j) {
    return m[static_cast<std::size_t>(i * dim + j)];
  }
};

LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b);
LorentzVector apply(const LorentzMatrix& m, const LorentzVector& v);
LorentzMatrix transpose(const LorentzMatrix& m);
double max_abs_diff(const LorentzMatrix& a, const LorentzMatrix& b);

// max entry of |M^T J M - J|; is_lorentz(M) iff this is <= kFormTol.
double lorentz_defect(const LorentzMatrix& m);
bool is_lorentz(const LorentzMatrix& m);

// Reflection in the hyperplane of a unit spacelike normal a:
// v |-> v - 2<v,a> a.  Involutive, det -1, form-preserving.
LorentzMatrix reflection_matrix(const LorentzVector& a);

// Relation between the hyperplanes of two unit spacelike normals e, f,
// classified from c = <e,f>:
//   |c| < 1      intersecting, dihedral angle arccos(-c) on the side of the
//                outward normals;
//   |c| ~ 1      parallel (asymptotically tangent), or identical if e = +-f;
//   |c| > 1      ultraparallel at distance acosh|c|.
struct HyperplaneRelation {
  enum class Kind { Intersecting, Parallel, Ultraparallel, Identical };
  Kind kind = Kind::Intersecting;
  double value = 0.0; // angle (radians) or distance, 0 otherwise

  bool intersecting() const { return kind == Kind::Intersecting; }
  bool ultraparallel() const { return kind == Kind::Ultraparallel; }
};

HyperplaneRelation hyperplane_relation(const LorentzVector& e,
                                       const LorentzVector& f);

// Geodesic distance acosh(max(1, -<x,y>)) between unit future timelike x, y.
double point_distance(const LorentzVector& x, const LorentzVector& y);

// Distance from a unit future timelike point to the hyperplane of a unit
// spacelike normal: asinh |<x,e>|.
double point_plane_distance(const LorentzVector& x, const LorentzVector& e);

// dim-3 only: the Minkowski-orthogonal complement direction of two vectors,
// J (a x b).  Satisfies <result, a> = <result, b> = 0.
LorentzVector lorentz_cross(const LorentzVector& a, const LorentzVector& b);

// The pure boost carrying a unit future timelike p to (0,...,0,1); identity
// on the orthogonal complement of their span.
LorentzMatrix transport_to_origin(const LorentzVector& p);

// Seeded samplers used by property tests and the sampling harnesses.
LorentzVector random_unit_spacelike(int dim, Rng& rng);
LorentzVector random_unit_timelike(int dim, Rng& rng);
LorentzMatrix random_lorentz(int dim, Rng& rng);

}  // namespace coxsys
