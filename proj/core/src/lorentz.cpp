#include "coxsys/lorentz.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "coxsys/errors.hpp"
#include "coxsys/tolerances.hpp"

namespace coxsys {

namespace {

void check_dim(int dim) {
  if (dim != 3 && dim != 4)
    throw input_error("Lorentz dimension must be 3 or 4, got " +
                      std::to_string(dim));
}

void check_finite(const LorentzVector& v) {
  for (int i = 0; i < v.dim; ++i)
    if (!std::isfinite(v[i]))
      throw input_error("non-finite vector component");
}

// J_ii: +1 spacelike coordinates, -1 for the last one.
double metric_sign(int i, int dim) { return i == dim - 1 ? -1.0 : 1.0; }

}  // namespace

std::uint64_t env_seed() {
  const char* s = std::getenv("COXSYS_SEED");
  if (s == nullptr || *s == '\0') return 0;
  return std::strtoull(s, nullptr, 10);
}

LorentzVector::LorentzVector(int dimension) : dim(dimension) { check_dim(dim); }

LorentzVector LorentzVector::xyz(double x, double y, double z) {
  LorentzVector v(3);
  v.c = {x, y, z, 0.0};
  return v;
}

LorentzVector LorentzVector::xyzt(double x, double y, double z, double t) {
  LorentzVector v(4);
  v.c = {x, y, z, t};
  return v;
}

LorentzVector operator+(const LorentzVector& u, const LorentzVector& v) {
  LorentzVector r(u.dim);
  for (int i = 0; i < u.dim; ++i) r[i] = u[i] + v[i];
  return r;
}

LorentzVector operator-(const LorentzVector& u, const LorentzVector& v) {
  LorentzVector r(u.dim);
  for (int i = 0; i < u.dim; ++i) r[i] = u[i] - v[i];
  return r;
}

LorentzVector operator-(const LorentzVector& v) {
  LorentzVector r(v.dim);
  for (int i = 0; i < v.dim; ++i) r[i] = -v[i];
  return r;
}

LorentzVector operator*(double s, const LorentzVector& v) {
  LorentzVector r(v.dim);
  for (int i = 0; i < v.dim; ++i) r[i] = s * v[i];
  return r;
}

double max_abs_diff(const LorentzVector& u, const LorentzVector& v) {
  double d = 0.0;
  for (int i = 0; i < u.dim; ++i) d = std::max(d, std::abs(u[i] - v[i]));
  return d;
}

double minkowski_inner(const LorentzVector& u, const LorentzVector& v) {
  if (u.dim != v.dim)
    throw input_error("minkowski_inner: dimension mismatch (" +
                      std::to_string(u.dim) + " vs " + std::to_string(v.dim) +
                      ")");
  check_finite(u);
  check_finite(v);
  double s = 0.0;
  for (int i = 0; i < u.dim - 1; ++i) s += u[i] * v[i];
  return s - u.last() * v.last();
}

CausalType causal_type(const LorentzVector& v) {
  double norm = 0.0;
  for (int i = 0; i < v.dim; ++i) norm = std::max(norm, std::abs(v[i]));
  if (norm == 0.0) throw input_error("causal_type: zero vector");
  const double q = minkowski_inner(v, v);
  if (q > kLightTol) return CausalType::Spacelike;
  if (q < -kLightTol) return CausalType::Timelike;
  return CausalType::Lightlike;
}

LorentzVector normalize(const LorentzVector& v) {
  const CausalType t = causal_type(v);
  if (t == CausalType::Lightlike)
    throw degenerate_input("normalize: lightlike vector");
  const double q = minkowski_inner(v, v);
  double s = 1.0 / std::sqrt(std::abs(q));
  if (t == CausalType::Timelike && v.last() * s < 0.0) s = -s;
  return s * v;
}

LorentzMatrix LorentzMatrix::identity(int dimension) {
  check_dim(dimension);
  LorentzMatrix m(dimension);
  for (int i = 0; i < dimension; ++i) m(i, i) = 1.0;
  return m;
}

LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
  if (a.dim != b.dim) throw input_error("matrix product: dimension mismatch");
  const int n = a.dim;
  LorentzMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

LorentzVector apply(const LorentzMatrix& m, const LorentzVector& v) {
  if (m.dim != v.dim) throw input_error("apply: dimension mismatch");
  LorentzVector r(v.dim);
  for (int i = 0; i < m.dim; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.dim; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

LorentzMatrix transpose(const LorentzMatrix& m) {
  LorentzMatrix r(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) r(i, j) = m(j, i);
  return r;
}

double max_abs_diff(const LorentzMatrix& a, const LorentzMatrix& b) {
  if (a.dim != b.dim) throw input_error("max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (int i = 0; i < a.dim * a.dim; ++i)
    d = std::max(d, std::abs(a.m[static_cast<std::size_t>(i)] -
                             b.m[static_cast<std::size_t>(i)]));
  return d;
}

double lorentz_defect(const LorentzMatrix& m) {
  const int n = m.dim;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += m(k, i) * metric_sign(k, n) * m(k, j);
      const double target = i == j ? metric_sign(i, n) : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  return worst;
}

bool is_lorentz(const LorentzMatrix& m) {
  check_dim(m.dim);
  return lorentz_defect(m) <= kFormTol;
}

LorentzMatrix reflection_matrix(const LorentzVector& a) {
  const double q = minkowski_inner(a, a);
  if (causal_type(a) != CausalType::Spacelike ||
      std::abs(q - 1.0) > kFormTol)
    throw input_error("reflection_matrix: normal must be unit spacelike");
  const int n = a.dim;
  LorentzMatrix m = LorentzMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) -= 2.0 * a[i] * metric_sign(j, n) * a[j];
  return m;
}

HyperplaneRelation hyperplane_relation(const LorentzVector& e,
                                       const LorentzVector& f) {
  if (std::abs(minkowski_inner(e, e) - 1.0) > kFormTol ||
      std::abs(minkowski_inner(f, f) - 1.0) > kFormTol)
    throw input_error("hyperplane_relation: normals must be unit spacelike");
  const double c = minkowski_inner(e, f);
  const double ac = std::abs(c);
  HyperplaneRelation rel;
  if (ac >= 1.0 + kLightTol) {
    rel.kind = HyperplaneRelation::Kind::Ultraparallel;
    rel.value = std::acosh(ac);
  } else if (ac >= 1.0 - kLightTol) {
    const double sep = std::min(max_abs_diff(e, f), max_abs_diff(e, -f));
    rel.kind = sep <= 1e-6 ? HyperplaneRelation::Kind::Identical
                           : HyperplaneRelation::Kind::Parallel;
  } else {
    rel.kind = HyperplaneRelation::Kind::Intersecting;
    rel.value = std::acos(-c);
  }
  return rel;
}

double point_distance(const LorentzVector& x, const LorentzVector& y) {
  if (std::abs(minkowski_inner(x, x) + 1.0) > 1e-7 || x.last() <= 0.0 ||
      std::abs(minkowski_inner(y, y) + 1.0) > 1e-7 || y.last() <= 0.0)
    throw input_error("point_distance: points must be unit future timelike");
  return std::acosh(std::max(1.0, -minkowski_inner(x, y)));
}

double point_plane_distance(const LorentzVector& x, const LorentzVector& e) {
  return std::asinh(std::abs(minkowski_inner(x, e)));
}

LorentzVector lorentz_cross(const LorentzVector& a, const LorentzVector& b) {
  if (a.dim != 3 || b.dim != 3)
    throw input_error("lorentz_cross: defined for dim 3 only");
  // J (a x b): Euclidean cross product with the timelike entry negated.
  return LorentzVector::xyz(a[1] * b[2] - a[2] * b[1],
                            a[2] * b[0] - a[0] * b[2],
                            -(a[0] * b[1] - a[1] * b[0]));
}

namespace {

// Geodesic symmetry about a unit timelike point v: x |-> -x - 2<x,v> v.
LorentzMatrix point_symmetry(const LorentzVector& v) {
  const int n = v.dim;
  LorentzMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      m(i, j) = -2.0 * v[i] * metric_sign(j, n) * v[j];
    m(i, i) -= 1.0;
  }
  return m;
}

}  // namespace

LorentzMatrix transport_to_origin(const LorentzVector& p) {
  if (std::abs(minkowski_inner(p, p) + 1.0) > 1e-7 || p.last() <= 0.0)
    throw input_error("transport_to_origin: need a unit future timelike point");
  LorentzVector origin(p.dim);
  origin[p.dim - 1] = 1.0;
  // Symmetry about the midpoint followed by symmetry about p swaps nothing
  // outside span(p, origin) and sends p to the origin.
  const LorentzVector mid = normalize(p + origin);
  return point_symmetry(mid) * point_symmetry(p);
}

LorentzVector random_unit_spacelike(int dim, Rng& rng) {
  check_dim(dim);
  for (;;) {
    LorentzVector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rng.uniform(-1.0, 1.0);
    if (minkowski_inner(v, v) > 0.05) return normalize(v);
  }
}

LorentzVector random_unit_timelike(int dim, Rng& rng) {
  check_dim(dim);
  LorentzVector v(dim);
  for (int i = 0; i < dim - 1; ++i) v[i] = rng.uniform(-0.5, 0.5);
  double s = 1.0;
  for (int i = 0; i < dim - 1; ++i) s += v[i] * v[i];
  v[dim - 1] = std::sqrt(s);
  return normalize(v);
}

LorentzMatrix random_lorentz(int dim, Rng& rng) {
  check_dim(dim);
  // Random spatial rotation composed with a modest boost.
  LorentzMatrix rot = LorentzMatrix::identity(dim);
  for (int i = 0; i < dim - 1; ++i)
    for (int j = i + 1; j < dim - 1; ++j) {
      const double t = rng.uniform(0.0, 6.283185307179586);
      LorentzMatrix g = LorentzMatrix::identity(dim);
      g(i, i) = std::cos(t);
      g(j, j) = std::cos(t);
      g(i, j) = -std::sin(t);
      g(j, i) = std::sin(t);
      rot = rot * g;
    }
  const LorentzVector p = random_unit_timelike(dim, rng);
  // transport_to_origin(p) boosts p to the origin; its inverse is a generic
  // boost.  Inverse of a Lorentz matrix is J M^T J.
  LorentzMatrix b = transport_to_origin(p);
  LorentzMatrix binv(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      binv(i, j) = metric_sign(i, dim) * b(j, i) * metric_sign(j, dim);
  return binv * rot;
}

}  // namespace coxsys
