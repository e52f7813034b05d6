#include "coxsys/catalog.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "coxsys/errors.hpp"
#include "coxsys/verifier.hpp"
#include "solids.hpp"

namespace coxsys {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::string> split_dashes(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == '-') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::optional<int> parse_exponent_token(const std::string& tok) {
  if (tok == "inf") return kInfiniteExponent;
  if (tok.empty()) return std::nullopt;
  for (char c : tok)
    if (c < '0' || c > '9') return std::nullopt;
  const long v = std::strtol(tok.c_str(), nullptr, 10);
  if (v < 2 || v > 1000000) return std::nullopt;
  return static_cast<int>(v);
}

CoxeterSpec triangle_spec(int p, int q, int r) {
  CoxeterSpec spec;
  spec.dim = 2;
  std::ostringstream name;
  auto tok = [](int n) {
    return is_infinite_exponent(n) ? std::string("inf") : std::to_string(n);
  };
  name << "triangle-" << tok(p) << "-" << tok(q) << "-" << tok(r);
  spec.name = name.str();
  spec.faces = {"a", "b", "c"};
  spec.set_exponent(0, 1, p);
  spec.set_exponent(0, 2, q);
  spec.set_exponent(1, 2, r);
  return spec;
}

CoxeterSpec t8_spec() {
  // Cyclic diagram (3,4,3,5): the one compact tetrahedron class without a
  // triangle subgroup.  Face pair (3,4) is the right-angled one; the word
  // rho3 rho4 rho2 rho1 rho4 rho2 translates by 1.66131.
  CoxeterSpec spec;
  spec.dim = 3;
  spec.name = "T8";
  spec.faces = {"F1", "F2", "F3", "F4"};
  spec.set_exponent(0, 1, 2);
  spec.set_exponent(0, 2, 3);
  spec.set_exponent(0, 3, 4);
  spec.set_exponent(1, 2, 5);
  spec.set_exponent(1, 3, 3);
  spec.set_exponent(2, 3, 2);
  return spec;
}

std::array<int, 6> spec_tuple_canonical(const CoxeterSpec& spec) {
  static const int kPerms[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
      {0, 3, 2, 1}, {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0},
      {1, 3, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3},
      {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0}, {3, 0, 1, 2}, {3, 0, 2, 1},
      {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  int e[4][4] = {};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) e[i][j] = *spec.exponent(i, j);
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

FaceGraph fig1_example_graph() {
  // A hexahedron-like body obtained from the octahedron's dual by chamfering
  // one corner into three quadrilaterals: three hexagons XP, YP, ZP are
  // pairwise adjacent yet do not share a vertex, so each is non-prismatic,
  // and the region they bound contains only the prismatic quads W1, W2, W3.
  std::map<std::string, std::vector<std::string>> m;
  m["XP"] = {"YP", "W1", "W3", "ZP", "YM", "ZM"};
  m["YP"] = {"ZP", "W2", "W1", "XP", "ZM", "XM"};
  m["ZP"] = {"XP", "W3", "W2", "YP", "XM", "YM"};
  m["XM"] = {"ZP", "YP", "ZM", "YM"};
  m["YM"] = {"XP", "ZP", "XM", "ZM"};
  m["ZM"] = {"YP", "XP", "YM", "XM"};
  m["W1"] = {"XP", "YP", "W2", "W3"};
  m["W2"] = {"YP", "ZP", "W3", "W1"};
  m["W3"] = {"ZP", "XP", "W1", "W2"};
  return FaceGraph(m);
}

}  // namespace

std::string catalog_kind_str(CatalogKind k) {
  switch (k) {
    case CatalogKind::TriangleGroup: return "triangle-group";
    case CatalogKind::RegularPolygon: return "regular-polygon";
    case CatalogKind::IdealPolygon: return "ideal-polygon";
    case CatalogKind::Tetrahedron: return "tetrahedron";
    case CatalogKind::RegularPolyhedron: return "regular-polyhedron";
    case CatalogKind::FaceGraphOnly: return "face-graph";
    case CatalogKind::Collection: return "collection";
  }
  return "unknown";
}

const std::vector<CoxeterSpec>& lanner_tetrahedra() {
  static const std::vector<CoxeterSpec> cache = [] {
    std::vector<CoxeterSpec> specs = enumerate_compact_tetrahedra(10);
    for (std::size_t i = 0; i < specs.size(); ++i)
      specs[i].name = "lanner-" + std::to_string(i + 1);
    return specs;
  }();
  return cache;
}

int t8_lanner_index() {
  const auto target = spec_tuple_canonical(t8_spec());
  const auto& all = lanner_tetrahedra();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (spec_tuple_canonical(all[i]) == target) return static_cast<int>(i);
  throw internal_check_failure("T8 not found among the compact tetrahedra");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    e.push_back({"T8", CatalogKind::Tetrahedron,
                 "compact tetrahedron with exponents 2,3,4,5,3,4"});
    for (int i = 1; i <= static_cast<int>(lanner_tetrahedra().size()); ++i)
      e.push_back({"lanner-" + std::to_string(i), CatalogKind::Tetrahedron,
                   "compact tetrahedron class " + std::to_string(i)});
    e.push_back({"all-compact-tetrahedra", CatalogKind::Collection,
                 "all nine compact tetrahedron classes"});
    e.push_back({"triangle-2-3-7", CatalogKind::TriangleGroup, "triangle group"});
    e.push_back({"triangle-2-4-5", CatalogKind::TriangleGroup, "triangle group"});
    e.push_back({"triangle-3-3-4", CatalogKind::TriangleGroup, "triangle group"});
    e.push_back({"triangle-4-4-4", CatalogKind::TriangleGroup, "triangle group"});
    e.push_back({"right-angled-pentagon", CatalogKind::RegularPolygon,
                 "regular pentagon with right angles"});
    e.push_back({"right-angled-hexagon", CatalogKind::RegularPolygon,
                 "regular hexagon with right angles"});
    e.push_back({"ideal-square", CatalogKind::IdealPolygon,
                 "ideal quadrilateral with equal central angles"});
    e.push_back({"ideal-triangle", CatalogKind::IdealPolygon,
                 "ideal triangle with equal central angles"});
    e.push_back({"right-angled-dodecahedron", CatalogKind::RegularPolyhedron,
                 "compact dodecahedron with right dihedral angles"});
    e.push_back({"cube", CatalogKind::FaceGraphOnly, "cube 1-skeleton"});
    e.push_back({"dodecahedron", CatalogKind::FaceGraphOnly, "dodecahedron 1-skeleton"});
    e.push_back({"pentagonal-prism", CatalogKind::FaceGraphOnly,
                 "pentagonal prism 1-skeleton"});
    e.push_back({"truncated-icosahedron", CatalogKind::FaceGraphOnly,
                 "truncated icosahedron 1-skeleton"});
    e.push_back({"fig1-example", CatalogKind::FaceGraphOnly,
                 "9-face graph with three non-prismatic hexagons"});
    return e;
  }();
  return entries;
}

namespace {

std::optional<RealizedPolyhedron> try_parametric_body(const std::string& name) {
  const auto parts = split_dashes(name);
  if (parts.size() == 4 && parts[0] == "triangle") {
    const auto p = parse_exponent_token(parts[1]);
    const auto q = parse_exponent_token(parts[2]);
    const auto r = parse_exponent_token(parts[3]);
    if (p && q && r) return realize_simplex(triangle_spec(*p, *q, *r));
  }
  if (parts.size() == 3 && parts[0] == "regular") {
    const auto n = parse_exponent_token(parts[1]);
    const auto k = parse_exponent_token(parts[2]);
    if (n && !is_infinite_exponent(*n) && k) return regular_polygon(*n, *k);
  }
  if (parts.size() == 2 && parts[0] == "ideal") {
    const auto n = parse_exponent_token(parts[1]);
    if (n && !is_infinite_exponent(*n))
      return ideal_polygon(std::vector<double>(static_cast<std::size_t>(*n),
                                               2.0 * kPi / *n));
  }
  return std::nullopt;
}

}  // namespace

bool catalog_has_body(const std::string& name) {
  try {
    catalog_body(name);
    return true;
  } catch (const input_error&) {
    return false;
  }
}

bool catalog_has_graph(const std::string& name) {
  try {
    catalog_graph(name);
    return true;
  } catch (const input_error&) {
    return false;
  }
}

RealizedPolyhedron catalog_body(const std::string& name) {
  if (name == "T8") return realize_simplex(t8_spec());
  if (name.rfind("lanner-", 0) == 0) {
    const auto n = parse_exponent_token(name.substr(7));
    if (n && *n >= 1 && *n <= static_cast<int>(lanner_tetrahedra().size()))
      return realize_simplex(lanner_tetrahedra()[static_cast<std::size_t>(*n - 1)]);
    throw input_error("catalog: unknown tetrahedron '" + name + "'");
  }
  if (name == "right-angled-pentagon") return regular_polygon(5, 2);
  if (name == "right-angled-hexagon") return regular_polygon(6, 2);
  if (name == "ideal-square")
    return ideal_polygon({kPi / 2, kPi / 2, kPi / 2, kPi / 2});
  if (name == "ideal-triangle")
    return ideal_polygon({2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3});
  if (name == "right-angled-dodecahedron") return regular_polyhedron(5, 3, kPi / 2);
  if (auto rp = try_parametric_body(name)) return *rp;
  throw input_error("catalog: no realizable entry named '" + name + "'");
}

FaceGraph catalog_graph(const std::string& name) {
  if (name == "cube") return solids::face_graph_from_solid(solids::platonic_solid(4, 3));
  if (name == "dodecahedron" || name == "right-angled-dodecahedron")
    return solids::face_graph_from_solid(solids::platonic_solid(5, 3));
  if (name == "pentagonal-prism")
    return solids::face_graph_from_solid(solids::prism_solid(5));
  if (name == "truncated-icosahedron")
    return solids::face_graph_from_solid(solids::truncated_icosahedron());
  if (name == "fig1-example") return fig1_example_graph();
  throw input_error("catalog: no face-graph entry named '" + name + "'");
}

}  // namespace coxsys
