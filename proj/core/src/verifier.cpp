#include "coxsys/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "coxsys/errors.hpp"
#include "coxsys/isometry.hpp"
#include "coxsys/tolerances.hpp"

namespace coxsys {

namespace {

constexpr double kPi = std::numbers::pi;

std::string word_str(const std::vector<int>& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << "]";
  return os.str();
}

std::vector<int> reduce_word(const std::vector<int>& w) {
  std::vector<int> out;
  for (int letter : w) {
    if (!out.empty() && out.back() == letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

bool polygon_is_compact(const RealizedPolyhedron& rp) {
  for (const VertexInfo& v : polygon_vertices(rp))
    if (v.kind != VertexKind::Finite) return false;
  return true;
}

}  // namespace

double polygon_bound(int n) { return std::acosh(3.0 + 4.0 * std::cos(2.0 * kPi / n)); }
double compact_bound() { return polygon_bound(5); }
double finite_volume_bound() { return std::acosh(7.0); }

VerificationReport nikulin_check(const RealizedPolyhedron& polygon) {
  if (polygon.spec.dim != 2 || polygon.face_count() < 3)
    throw input_error("nikulin_check: input is not a realized polygon");
  const std::vector<int> order = polygon_side_order(polygon);
  const int n = static_cast<int>(order.size());

  double best = -1.0;
  int bi = -1;
  for (int i = 0; i < n; ++i) {
    const int a = order[static_cast<std::size_t>(i)];
    const int b = order[static_cast<std::size_t>((i + 2) % n)];
    const auto rel = hyperplane_relation(polygon.normals[static_cast<std::size_t>(a)],
                                         polygon.normals[static_cast<std::size_t>(b)]);
    const double d = rel.ultraparallel() ? rel.value : 0.0;
    if (bi < 0 || d < best) {
      best = d;
      bi = i;
    }
  }

  const bool compact = polygon_is_compact(polygon);
  VerificationReport rep;
  rep.claim = "min_i d(H_i, H_{i+2}) vs acosh(3+4cos(2pi/" + std::to_string(n) + "))";
  rep.bound = polygon_bound(n);
  rep.achieved = best;
  rep.witness = "sides (" +
                polygon.face_label(order[static_cast<std::size_t>(bi)]) + ", " +
                polygon.face_label(order[static_cast<std::size_t>((bi + 2) % n)]) + ")";
  if (compact) {
    rep.verdict = best < rep.bound ? Verdict::Pass : Verdict::Fail;
    rep.notes = "compact polygon: strict inequality required";
  } else {
    rep.verdict = best <= rep.bound + 1e-9 ? Verdict::Pass : Verdict::Fail;
    rep.notes = "finite-area polygon: non-strict inequality";
  }
  return rep;
}

namespace {

struct TrackedSide {
  LorentzVector normal;
  std::vector<int> word;  // the side's reflection as a word in the generators
};

// Double a realized triangle across side `mirror`, keeping reflection words.
std::vector<TrackedSide> doubled_quadrilateral(const RealizedPolyhedron& tri,
                                               int mirror, int keep_a, int keep_b) {
  const LorentzMatrix r = reflection_matrix(tri.normals[static_cast<std::size_t>(mirror)]);
  std::vector<TrackedSide> q;
  q.push_back({tri.normals[static_cast<std::size_t>(keep_a)], {keep_a}});
  q.push_back({tri.normals[static_cast<std::size_t>(keep_b)], {keep_b}});
  q.push_back({apply(r, tri.normals[static_cast<std::size_t>(keep_a)]),
               {mirror, keep_a, mirror}});
  q.push_back({apply(r, tri.normals[static_cast<std::size_t>(keep_b)]),
               {mirror, keep_b, mirror}});
  return q;
}

// The quadrilateral of the double reflection across both legs of a right
// angle: images of the hypotenuse under {1, R_a, R_b, R_b R_a}.
std::vector<TrackedSide> double_doubled_quadrilateral(const RealizedPolyhedron& tri,
                                                      int leg_a, int leg_b, int hyp) {
  const LorentzMatrix ra = reflection_matrix(tri.normals[static_cast<std::size_t>(leg_a)]);
  const LorentzMatrix rb = reflection_matrix(tri.normals[static_cast<std::size_t>(leg_b)]);
  const LorentzVector h = tri.normals[static_cast<std::size_t>(hyp)];
  std::vector<TrackedSide> q;
  q.push_back({h, {hyp}});
  q.push_back({apply(ra, h), {leg_a, hyp, leg_a}});
  q.push_back({apply(rb, h), {leg_b, hyp, leg_b}});
  q.push_back({apply(rb, apply(ra, h)), {leg_b, leg_a, hyp, leg_a, leg_b}});
  return q;
}

struct QuadWitness {
  double distance = 0.0;        // d(H, H') for the best disjoint opposite pair
  std::vector<int> word;        // reduced word of the two-reflection element
  std::string pair_desc;
  bool found = false;
};

QuadWitness best_opposite_pair(const std::vector<TrackedSide>& quad,
                               const LorentzVector& interior) {
  RealizedPolyhedron qrp;
  qrp.spec.dim = 2;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    qrp.spec.faces.push_back("q" + std::to_string(i));
    qrp.normals.push_back(quad[i].normal);
  }
  qrp.interior = interior;
  const std::vector<int> order = polygon_side_order(qrp);
  const int n = static_cast<int>(order.size());

  QuadWitness best;
  for (int i = 0; i < 2 && i < n; ++i) {
    const int a = order[static_cast<std::size_t>(i)];
    const int b = order[static_cast<std::size_t>((i + 2) % n)];
    const auto rel = hyperplane_relation(quad[static_cast<std::size_t>(a)].normal,
                                         quad[static_cast<std::size_t>(b)].normal);
    if (!rel.ultraparallel()) continue;
    if (!best.found || rel.value < best.distance) {
      best.found = true;
      best.distance = rel.value;
      std::vector<int> w = quad[static_cast<std::size_t>(a)].word;
      const auto& wb = quad[static_cast<std::size_t>(b)].word;
      w.insert(w.end(), wb.begin(), wb.end());
      best.word = reduce_word(w);
      best.pair_desc = "opposite sides " + std::to_string(a) + "/" + std::to_string(b);
    }
  }
  return best;
}

}  // namespace

VerificationReport theorem42_check(const CoxeterSpec& spec) {
  if (spec.dim != 2) throw input_error("theorem42_check: expected a polygon spec");
  const int n = spec.face_count();
  VerificationReport rep;

  if (n > 3) {
    // Regular polygons: a single exponent on every consecutive pair.
    std::optional<int> common;
    for (int i = 0; i < n; ++i) {
      const auto e = spec.exponent(i, (i + 1) % n);
      if (!e) throw input_error("theorem42_check: polygon spec has a gap");
      if (common && *common != *e)
        throw input_error(
            "theorem42_check: only regular polygons are supported for n > 3");
      common = *e;
    }
    const RealizedPolyhedron rp = regular_polygon(n, *common);
    const VerificationReport nik = nikulin_check(rp);
    const std::vector<int> order = polygon_side_order(rp);

    double best = -1.0;
    int ba = -1, bb = -1;
    for (int i = 0; i < n; ++i) {
      const int a = order[static_cast<std::size_t>(i)];
      const int b = order[static_cast<std::size_t>((i + 2) % n)];
      const auto rel = hyperplane_relation(rp.normals[static_cast<std::size_t>(a)],
                                           rp.normals[static_cast<std::size_t>(b)]);
      if (!rel.ultraparallel()) continue;
      if (ba < 0 || rel.value < best) {
        best = rel.value;
        ba = a;
        bb = b;
      }
    }
    if (ba < 0)
      throw internal_check_failure(
          "theorem42_check: no disjoint second-neighbor pair in an acute polygon");
    const GroupElement g = make_element(rp, {ba, bb});
    if (!g.cls.loxodromic() ||
        std::abs(g.cls.length - 2.0 * best) > 1e-7)
      throw internal_check_failure("theorem42_check: pair element length mismatch");

    rep.claim = "polygon injrad bound, n=" + std::to_string(n);
    rep.bound = polygon_bound(n);
    rep.achieved = best;
    rep.witness = "word " + word_str(g.word) + ", l/2 = " + std::to_string(best);
    const bool compact = !is_infinite_exponent(*common);
    rep.verdict = (compact ? best < rep.bound : best <= rep.bound + 1e-9)
                      ? Verdict::Pass
                      : Verdict::Fail;
    rep.notes = "two-reflection witness; nikulin achieved " +
                std::to_string(nik.achieved);
    return rep;
  }

  if (n != 3) throw input_error("theorem42_check: polygon must have >= 3 sides");
  const RealizedPolyhedron tri = realize_simplex(spec);

  // Exponents by the side pair they belong to.
  std::array<std::array<int, 3>, 3> e{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto v = spec.exponent(i, j);
      if (!v) throw input_error("theorem42_check: triangle spec has a gap");
      e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *v;
    }
  auto exp_of = [&](int i, int j) {
    return e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };

  bool has_right = false, has_ideal = false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (exp_of(i, j) == 2) has_right = true;
      if (is_infinite_exponent(exp_of(i, j))) has_ideal = true;
    }

  std::vector<TrackedSide> quad;
  std::string construction;
  if (has_right) {
    // Double across both legs of the (lexicographically first) right angle.
    int la = -1, lb = -1;
    for (int i = 0; i < 3 && la < 0; ++i)
      for (int j = i + 1; j < 3 && la < 0; ++j)
        if (exp_of(i, j) == 2) {
          la = i;
          lb = j;
        }
    const int hyp = 3 - la - lb;
    quad = double_doubled_quadrilateral(tri, la, lb, hyp);
    construction = "double reflection across both legs of the right angle";
  } else if (has_ideal) {
    // Single doubling across the side opposite the ideal vertex.
    int ia = -1, ib = -1;
    for (int i = 0; i < 3 && ia < 0; ++i)
      for (int j = i + 1; j < 3 && ia < 0; ++j)
        if (is_infinite_exponent(exp_of(i, j))) {
          ia = i;
          ib = j;
        }
    const int mirror = 3 - ia - ib;
    quad = doubled_quadrilateral(tri, mirror, ia, ib);
    construction = "doubling across the side opposite the ideal vertex";
  } else {
    // General compact case: the largest exponent marks the angle <= pi/4;
    // double across the side opposite that vertex.
    int ba = -1, bb = -1, bestexp = -1;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (exp_of(i, j) > bestexp) {
          bestexp = exp_of(i, j);
          ba = i;
          bb = j;
        }
    const int mirror = 3 - ba - bb;
    quad = doubled_quadrilateral(tri, mirror, ba, bb);
    construction = "doubling across the side opposite the smallest angle";
  }

  LorentzVector interior = tri.interior ? *tri.interior : LorentzVector::xyz(0, 0, 1);
  const QuadWitness w = best_opposite_pair(quad, interior);

  rep.claim = "triangle injrad bound via quadrilateral doubling";
  rep.bound = polygon_bound(4);
  if (!w.found) {
    rep.verdict = Verdict::Fail;
    rep.notes = "no disjoint opposite pair in the doubled quadrilateral (" +
                construction + ")";
    return rep;
  }

  const GroupElement g = make_element(tri, w.word);
  if (!g.cls.loxodromic() || std::abs(g.cls.length - 2.0 * w.distance) > 1e-7)
    throw internal_check_failure("theorem42_check: doubling witness length mismatch");

  const auto bfs = bfs_systole(tri, 8);
  rep.achieved = w.distance;
  rep.witness = "word " + word_str(g.word) + " (" + w.pair_desc + ")";
  const bool compact = !has_ideal;
  rep.verdict = (compact ? w.distance < rep.bound : w.distance <= rep.bound + 1e-9)
                    ? Verdict::Pass
                    : Verdict::Fail;
  std::ostringstream notes;
  notes << construction;
  if (bfs) {
    notes << "; bfs(8) minimum l = " << bfs->min_translation_length;
    if (bfs->min_translation_length > g.cls.length + 1e-9)
      rep.verdict = Verdict::Fail;  // search must confirm the construction
  }
  rep.notes = notes.str();
  return rep;
}

VerificationReport corollary46_check(const RealizedPolyhedron& rp,
                                     const FaceGraph& graph) {
  if (rp.spec.dim != 3)
    throw input_error("corollary46_check: expected a 3-dimensional body");
  if (graph.face_count() != rp.face_count())
    throw input_error("corollary46_check: graph and body face counts differ");
  // The graph must describe exactly the body's adjacency.
  for (int i = 0; i < rp.face_count(); ++i)
    for (int j = i + 1; j < rp.face_count(); ++j) {
      const bool geom = rp.adjacency.count({i, j}) > 0;
      const bool comb = graph.adjacent(graph.index(rp.face_label(i)),
                                       graph.index(rp.face_label(j)));
      if (geom != comb)
        throw input_error("corollary46_check: graph does not match the body's "
                          "adjacency at (" + rp.face_label(i) + ", " +
                          rp.face_label(j) + ")");
    }

  VerificationReport rep;
  rep.claim = "prismatic-face injrad bound";

  int f0 = -1;
  for (int f = 0; f < graph.face_count(); ++f) {
    if (is_prismatic(graph, graph.label(f)) != PrismaticStatus::Prismatic) continue;
    if (f0 < 0 || graph.sides(f) < graph.sides(f0) ||
        (graph.sides(f) == graph.sides(f0) && graph.label(f) < graph.label(f0)))
      f0 = f;
  }
  if (f0 < 0) {
    rep.verdict = Verdict::Fail;
    rep.notes = "not applicable: no prismatic face";
    return rep;
  }

  const int n = graph.sides(f0);
  rep.bound = polygon_bound(n);

  const int face0 = rp.spec.face_index(graph.label(f0));
  const LorentzVector& n0 = rp.normals[static_cast<std::size_t>(face0)];
  std::vector<int> ring;
  for (int nb : graph.neighbors(f0))
    ring.push_back(rp.spec.face_index(graph.label(nb)));

  // Edge lines of the face: project adjacent normals into the face plane.
  std::vector<LorentzVector> edge_normals;
  for (int idx : ring) {
    const LorentzVector& m = rp.normals[static_cast<std::size_t>(idx)];
    edge_normals.push_back(normalize(m - minkowski_inner(m, n0) * n0));
  }

  double best2 = -1.0;
  int bi = -1;
  for (int i = 0; i < n; ++i) {
    const auto rel = hyperplane_relation(edge_normals[static_cast<std::size_t>(i)],
                                         edge_normals[static_cast<std::size_t>((i + 2) % n)]);
    const double d = rel.ultraparallel() ? rel.value : 0.0;
    if (bi < 0 || d < best2) {
      best2 = d;
      bi = i;
    }
  }

  const int fa = ring[static_cast<std::size_t>(bi)];
  const int fb = ring[static_cast<std::size_t>((bi + 2) % n)];
  const auto rel3 = hyperplane_relation(rp.normals[static_cast<std::size_t>(fa)],
                                        rp.normals[static_cast<std::size_t>(fb)]);
  if (!rel3.ultraparallel()) {
    rep.verdict = Verdict::Fail;
    rep.notes = "second-neighbor faces of the prismatic face are not disjoint";
    return rep;
  }
  const double achieved = rel3.value;
  if (achieved > best2 + 1e-9)
    throw internal_check_failure(
        "corollary46_check: hyperplane distance exceeds the in-face distance");

  const GroupElement g = make_element(rp, {fa, fb});
  if (!g.cls.loxodromic() || std::abs(g.cls.length - 2.0 * achieved) > 1e-7)
    throw internal_check_failure("corollary46_check: witness length mismatch");

  rep.achieved = achieved;
  rep.witness = "prismatic face " + graph.label(f0) + " (" + std::to_string(n) +
                " sides), word " + word_str(g.word);
  rep.verdict = achieved <= rep.bound + 1e-9 ? Verdict::Pass : Verdict::Fail;

  std::ostringstream notes;
  notes << "in-face distance " << best2;
  if (const auto ps = pair_systole(rp)) {
    notes << "; pair systole " << ps->min_translation_length;
    if (ps->min_translation_length > g.cls.length + 1e-9)
      rep.verdict = Verdict::Fail;  // global pair search must confirm
  }
  rep.notes = notes.str();
  return rep;
}

namespace {

// 1/a + 1/b + 1/c compared to 1, exactly.
bool sum_gt_one(long long a, long long b, long long c) {
  return b * c + a * c + a * b > a * b * c;
}
bool sum_lt_one(long long a, long long b, long long c) {
  return b * c + a * c + a * b < a * b * c;
}

// Largest n with 1/x + 1/y + 1/n > 1, or 0 if every n >= 2 qualifies.
int slot_max(int x, int y) {
  const long long d = static_cast<long long>(x) * y - x - y;
  if (d <= 0) return 0;  // unbounded
  // n < xy / (xy - x - y)
  long long nmax = (static_cast<long long>(x) * y - 1) / d;
  while (nmax >= 2 && !sum_gt_one(x, y, nmax)) --nmax;
  return static_cast<int>(nmax);
}

}  // namespace

bool case2_outer_admissible(const std::array<int, 3>& outer, int inner_cap) {
  const int pairs[3][2] = {{outer[0], outer[1]}, {outer[1], outer[2]},
                           {outer[2], outer[0]}};
  long long num = 0, den = 1;
  for (const auto& p : pairs) {
    const int m = slot_max(p[0], p[1]);
    if (m == 0) continue;  // unbounded slot: contribution can be made tiny
    if (m < 2) return false;
    // accumulate 1/m exactly
    num = num * m + den;
    den = den * m;
  }
  (void)inner_cap;
  return num < den;  // strictly below 1, with slack for the unbounded slots
}

std::vector<std::array<int, 3>> enumerate_case2_outer(int bound) {
  std::vector<std::array<int, 3>> out;
  for (int a = 2; a <= bound; ++a)
    for (int b = a; b <= bound; ++b)
      for (int c = b; c <= bound; ++c)
        if (case2_outer_admissible({a, b, c})) out.push_back({a, b, c});
  return out;
}

std::vector<std::array<int, 3>> enumerate_case2_inner(const std::array<int, 3>& outer,
                                                      int inner_cap) {
  const int pairs[3][2] = {{outer[0], outer[1]}, {outer[1], outer[2]},
                           {outer[2], outer[0]}};
  std::array<std::vector<int>, 3> slots;
  for (int s = 0; s < 3; ++s) {
    const int m = slot_max(pairs[s][0], pairs[s][1]);
    const int hi = m == 0 ? inner_cap : m;
    for (int v = 2; v <= hi; ++v)
      if (sum_gt_one(pairs[s][0], pairs[s][1], v))
        slots[static_cast<std::size_t>(s)].push_back(v);
  }
  std::vector<std::array<int, 3>> out;
  for (int a : slots[0])
    for (int b : slots[1])
      for (int c : slots[2])
        if (sum_lt_one(a, b, c)) out.push_back({a, b, c});
  return out;
}

std::vector<AngleSystem> enumerate_case2b() {
  const std::array<int, 3> outer{2, 3, 3};
  const auto raw = enumerate_case2_inner(outer);

  // Relabelings of the three neighbor faces fixing the outer triple.
  std::vector<std::array<int, 3>> stab;
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& p : perms) {
    bool fixes = true;
    for (int i = 0; i < 3; ++i)
      if (outer[static_cast<std::size_t>(p[i])] != outer[static_cast<std::size_t>(i)])
        fixes = false;
    if (fixes) stab.push_back({p[0], p[1], p[2]});
  }

  auto slot_value = [](const std::array<int, 3>& inner, int i, int j) {
    // inner = (n12, n23, n31) over 0-based neighbor positions
    if ((i == 0 && j == 1) || (i == 1 && j == 0)) return inner[0];
    if ((i == 1 && j == 2) || (i == 2 && j == 1)) return inner[1];
    return inner[2];
  };

  std::set<std::array<int, 3>> canon;
  for (const auto& inner : raw) {
    std::array<int, 3> best = inner;
    for (const auto& p : stab) {
      const std::array<int, 3> img{slot_value(inner, p[0], p[1]),
                                   slot_value(inner, p[1], p[2]),
                                   slot_value(inner, p[2], p[0])};
      best = std::min(best, img);
    }
    canon.insert(best);
  }

  std::vector<AngleSystem> out;
  for (const auto& inner : canon) out.push_back(AngleSystem{outer, inner});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

double det3(double a, double b, double c) {
  // det of [[1,a,b],[a,1,c],[b,c,1]]
  return 1.0 + 2.0 * a * b * c - a * a - b * b - c * c;
}

bool minor_pd(double a, double b, double c) {
  return 1.0 - a * a > 1e-9 && det3(a, b, c) > 1e-9;
}

double det4(const double g[4][4]) {
  double m[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = g[i][j];
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (piv != col) {
      for (int j = 0; j < 4; ++j) std::swap(m[piv][j], m[col][j]);
      det = -det;
    }
    if (m[col][col] == 0.0) return 0.0;
    det *= m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

// Canonical form of a tetrahedron exponent matrix under face relabeling.
std::array<int, 6> canonical_tuple(const int e[4][4]) {
  static const int kPerms[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
      {0, 3, 2, 1}, {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0},
      {1, 3, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3},
      {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0}, {3, 0, 1, 2}, {3, 0, 2, 1},
      {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  std::array<int, 6> best{};
  bool first = true;
  for (const auto& p : kPerms) {
    const std::array<int, 6> t{e[p[0]][p[1]], e[p[0]][p[2]], e[p[0]][p[3]],
                               e[p[1]][p[2]], e[p[1]][p[3]], e[p[2]][p[3]]};
    if (first || t < best) {
      best = t;
      first = false;
    }
  }
  return best;
}

}  // namespace

std::vector<CoxeterSpec> enumerate_compact_tetrahedra(int max_exponent) {
  if (max_exponent < 2) throw input_error("enumerate_compact_tetrahedra: bad bound");
  std::vector<double> ent(static_cast<std::size_t>(max_exponent) + 1, 0.0);
  for (int n = 2; n <= max_exponent; ++n)
    ent[static_cast<std::size_t>(n)] = -std::cos(kPi / n);

  std::set<std::array<int, 6>> classes;
  // Exponent order: e01, e02, e12, e03, e13, e23 with vertex minors checked
  // as soon as their three entries are fixed.
  for (int e01 = 2; e01 <= max_exponent; ++e01)
    for (int e02 = 2; e02 <= max_exponent; ++e02)
      for (int e12 = 2; e12 <= max_exponent; ++e12) {
        const double a01 = ent[static_cast<std::size_t>(e01)];
        const double a02 = ent[static_cast<std::size_t>(e02)];
        const double a12 = ent[static_cast<std::size_t>(e12)];
        if (!minor_pd(a01, a02, a12)) continue;  // vertex omitting face 3
        for (int e03 = 2; e03 <= max_exponent; ++e03)
          for (int e13 = 2; e13 <= max_exponent; ++e13) {
            const double a03 = ent[static_cast<std::size_t>(e03)];
            const double a13 = ent[static_cast<std::size_t>(e13)];
            if (!minor_pd(a01, a03, a13)) continue;  // vertex omitting face 2
            for (int e23 = 2; e23 <= max_exponent; ++e23) {
              const double a23 = ent[static_cast<std::size_t>(e23)];
              if (!minor_pd(a02, a03, a23)) continue;  // vertex omitting face 1
              if (!minor_pd(a12, a13, a23)) continue;  // vertex omitting face 0
              const double g[4][4] = {{1, a01, a02, a03},
                                      {a01, 1, a12, a13},
                                      {a02, a12, 1, a23},
                                      {a03, a13, a23, 1}};
              // Positive-definite vertex minors force at least three positive
              // eigenvalues; det < 0 then pins the signature to (3,1).
              if (det4(g) >= -1e-9) continue;
              const int e[4][4] = {{0, e01, e02, e03},
                                   {e01, 0, e12, e13},
                                   {e02, e12, 0, e23},
                                   {e03, e13, e23, 0}};
              classes.insert(canonical_tuple(e));
            }
          }
      }

  std::vector<CoxeterSpec> out;
  for (const auto& t : classes) {
    CoxeterSpec spec;
    spec.dim = 3;
    spec.faces = {"F1", "F2", "F3", "F4"};
    spec.set_exponent(0, 1, t[0]);
    spec.set_exponent(0, 2, t[1]);
    spec.set_exponent(0, 3, t[2]);
    spec.set_exponent(1, 2, t[3]);
    spec.set_exponent(1, 3, t[4]);
    spec.set_exponent(2, 3, t[5]);
    out.push_back(std::move(spec));
  }
  return out;
}

VerificationReport theorem41_check(const RealizedPolyhedron& rp, bool compact,
                                   int max_len) {
  VerificationReport rep;
  rep.claim = compact ? "compact injrad bound acosh(3+4cos(2pi/5))"
                      : "finite-volume injrad bound acosh(7)";
  rep.bound = compact ? compact_bound() : finite_volume_bound();

  double best = -1.0;
  GroupElement witness;
  std::ostringstream notes;
  if (const auto ps = pair_systole(rp)) {
    best = ps->min_translation_length;
    witness = ps->witness;
    notes << "pair systole " << ps->min_translation_length;
  } else {
    notes << "no disjoint face pair";
  }
  if (const auto bfs = bfs_systole(rp, max_len)) {
    notes << "; bfs(" << max_len << ") minimum " << bfs->min_translation_length
          << " over " << bfs->elements_visited << " elements";
    if (best < 0.0 || bfs->min_translation_length < best) {
      best = bfs->min_translation_length;
      witness = bfs->witness;
    }
  }
  if (best < 0.0) {
    rep.verdict = Verdict::Fail;
    rep.notes = "no loxodromic element found up to depth " + std::to_string(max_len);
    return rep;
  }
  rep.achieved = best / 2.0;
  rep.witness = "word " + word_str(witness.word) + ", l = " + std::to_string(best);
  rep.verdict = rep.achieved < rep.bound ? Verdict::Pass : Verdict::Fail;
  rep.notes = notes.str();
  return rep;
}

}  // namespace coxsys
