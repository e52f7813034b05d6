#include "coxsys/isometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "coxsys/errors.hpp"
#include "coxsys/tolerances.hpp"

namespace coxsys {

namespace {

double spectral_radius(const LorentzMatrix& m) {
  const int n = m.dim;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, /*computeEigenvectors=*/false);
  double r = 0.0;
  for (int i = 0; i < n; ++i) r = std::max(r, std::abs(es.eigenvalues()(i)));
  return r;
}

struct MatrixKey {
  std::array<std::int64_t, 16> q{};
  int n = 0;

  bool operator==(const MatrixKey& o) const { return n == o.n && q == o.q; }
};

struct MatrixKeyHash {
  std::size_t operator()(const MatrixKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.n);
    for (int i = 0; i < k.n * k.n; ++i) {
      h ^= static_cast<std::size_t>(k.q[static_cast<std::size_t>(i)]) +
           0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

MatrixKey quantize(const LorentzMatrix& m) {
  MatrixKey k;
  k.n = m.dim;
  for (int i = 0; i < m.dim * m.dim; ++i)
    k.q[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(
        std::llround(m.m[static_cast<std::size_t>(i)] / kDedupGrid));
  return k;
}

}  // namespace

LorentzMatrix word_to_matrix(const RealizedPolyhedron& rp,
                             const std::vector<int>& word) {
  const int amb = rp.spec.dim + 1;
  LorentzMatrix m = LorentzMatrix::identity(amb);
  for (int letter : word) {
    if (letter < 0 || letter >= rp.face_count())
      throw input_error("word_to_matrix: face index " + std::to_string(letter) +
                        " out of range");
    m = m * reflection_matrix(rp.normals[static_cast<std::size_t>(letter)]);
  }
  if (!is_lorentz(m))
    throw internal_check_failure("word_to_matrix: product left the Lorentz group");
  return m;
}

IsoClass classify(const LorentzMatrix& m) {
  if (!is_lorentz(m)) throw input_error("classify: matrix is not Lorentz");
  IsoClass c;
  if (max_abs_diff(m, LorentzMatrix::identity(m.dim)) <= 1e-9) {
    c.kind = IsoClass::Kind::Identity;
    return c;
  }
  const double r = spectral_radius(m);
  if (r > 1.0 + kSpecTol) {
    c.kind = IsoClass::Kind::Loxodromic;
    c.length = std::log(r);
  } else {
    c.kind = IsoClass::Kind::NonLoxodromic;
  }
  return c;
}

GroupElement make_element(const RealizedPolyhedron& rp, std::vector<int> word) {
  GroupElement g;
  g.matrix = word_to_matrix(rp, word);
  g.word = std::move(word);
  g.cls = classify(g.matrix);
  return g;
}

std::optional<SystoleReport> pair_systole(const RealizedPolyhedron& rp) {
  const int k = rp.face_count();
  double best = 0.0;
  int bi = -1, bj = -1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const double c = minkowski_inner(rp.normals[static_cast<std::size_t>(i)],
                                       rp.normals[static_cast<std::size_t>(j)]);
      if (std::abs(c) < 1.0 + kLightTol) continue;
      const double len = 2.0 * std::acosh(std::abs(c));
      if (bi < 0 || len < best) {
        best = len;
        bi = i;
        bj = j;
      }
    }
  if (bi < 0) return std::nullopt;
  SystoleReport rep;
  rep.min_translation_length = best;
  rep.witness = make_element(rp, {bi, bj});
  rep.injrad = best / 2.0;
  rep.search_depth = 2;
  rep.elements_visited = static_cast<std::int64_t>(k) * (k - 1) / 2;
  return rep;
}

std::optional<SystoleReport> bfs_systole(const RealizedPolyhedron& rp, int max_len) {
  if (max_len < 2) throw input_error("bfs_systole: max_len must be >= 2");
  const int k = rp.face_count();
  std::vector<LorentzMatrix> gens;
  gens.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    gens.push_back(reflection_matrix(rp.normals[static_cast<std::size_t>(i)]));

  struct Node {
    LorentzMatrix m;
    std::vector<int> word;
  };
  std::vector<Node> elems;
  std::unordered_map<MatrixKey, std::vector<int>, MatrixKeyHash> seen;

  auto try_add = [&](LorentzMatrix m, std::vector<int> word) -> int {
    const MatrixKey key = quantize(m);
    auto& bucket = seen[key];
    for (int idx : bucket)
      if (max_abs_diff(elems[static_cast<std::size_t>(idx)].m, m) <= kDedupExact)
        return -1;
    const int idx = static_cast<int>(elems.size());
    bucket.push_back(idx);
    elems.push_back({std::move(m), std::move(word)});
    return idx;
  };

  try_add(LorentzMatrix::identity(rp.spec.dim + 1), {});
  std::vector<int> frontier{0};

  double best_even = 0.0, best_odd = 0.0;
  int even_idx = -1, odd_idx = -1;

  for (int level = 1; level <= max_len; ++level) {
    std::vector<int> next;
    for (int idx : frontier) {
      // Frontier is expanded in insertion order and generators in increasing
      // order, so words of each length appear lexicographically and the first
      // witness of a value is the lexicographically least one.
      const std::vector<int> word = elems[static_cast<std::size_t>(idx)].word;
      const int last = word.empty() ? -1 : word.back();
      for (int g = 0; g < k; ++g) {
        if (g == last) continue;
        LorentzMatrix m = elems[static_cast<std::size_t>(idx)].m *
                          gens[static_cast<std::size_t>(g)];
        std::vector<int> w = word;
        w.push_back(g);
        const int ni = try_add(std::move(m), std::move(w));
        if (ni < 0) continue;
        next.push_back(ni);
        const double r = spectral_radius(elems[static_cast<std::size_t>(ni)].m);
        if (r > 1.0 + kSpecTol) {
          const double len = std::log(r);
          if (level % 2 == 0) {
            if (even_idx < 0 || len < best_even) {
              best_even = len;
              even_idx = ni;
            }
          } else {
            if (odd_idx < 0 || len < best_odd) {
              best_odd = len;
              odd_idx = ni;
            }
          }
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;  // finite group exhausted
  }

  if (even_idx < 0) return std::nullopt;
  SystoleReport rep;
  rep.min_translation_length = best_even;
  rep.witness = GroupElement{elems[static_cast<std::size_t>(even_idx)].m,
                             elems[static_cast<std::size_t>(even_idx)].word,
                             classify(elems[static_cast<std::size_t>(even_idx)].m)};
  rep.injrad = best_even / 2.0;
  rep.search_depth = max_len;
  rep.elements_visited = static_cast<std::int64_t>(elems.size());
  if (odd_idx >= 0) {
    rep.odd_word_min = best_odd;
    rep.odd_word_witness =
        GroupElement{elems[static_cast<std::size_t>(odd_idx)].m,
                     elems[static_cast<std::size_t>(odd_idx)].word,
                     classify(elems[static_cast<std::size_t>(odd_idx)].m)};
  }
  return rep;
}

bool verify_translation_length(const LorentzMatrix& m, double claimed,
                               std::uint64_t seed) {
  if (!(claimed > 0.0)) return false;
  Rng rng(seed);
  const LorentzVector p = random_unit_timelike(m.dim, rng);

  LorentzMatrix m2 = m * m;
  LorentzMatrix m4 = m2 * m2;
  LorentzMatrix m8 = m4 * m4;
  LorentzMatrix m16 = m8 * m8;
  const double d8 = point_distance(p, normalize(apply(m8, p)));
  const double d16 = point_distance(p, normalize(apply(m16, p)));
  // The offset contributed by the distance from p to the axis cancels in the
  // difference quotient; what remains decays like e^{-8 length}.
  const double estimate = (d16 - d8) / 8.0;
  return std::abs(estimate - claimed) <= 1e-4 * std::max(1.0, std::abs(claimed));
}

bool translation_length_lower_bound_check(const RealizedPolyhedron& rp,
                                          const SystoleReport& report) {
  (void)rp;
  if (!report.witness.cls.loxodromic()) return false;
  return verify_translation_length(report.witness.matrix,
                                   report.min_translation_length);
}

}  // namespace coxsys
