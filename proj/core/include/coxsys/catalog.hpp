#pragma once

#include <string>
#include <vector>

#include "coxsys/face_graph.hpp"
#include "coxsys/polyhedron.hpp"

namespace coxsys {

enum class CatalogKind {
  TriangleGroup,
  RegularPolygon,
  IdealPolygon,
  Tetrahedron,
  RegularPolyhedron,
  FaceGraphOnly,
  Collection,
};

struct CatalogEntry {
  std::string name;
  CatalogKind kind;
  std::string description;
};

std::string catalog_kind_str(CatalogKind k);

// The built-in entries.  The tetrahedron entries are generated by the
// enumeration on first use, never hard-coded.
const std::vector<CatalogEntry>& catalog_entries();

// The nine compact tetrahedra in canonical order (names lanner-1..lanner-9).
const std::vector<CoxeterSpec>& lanner_tetrahedra();
// The index (0-based) of the T8 exponent set among them.
int t8_lanner_index();

bool catalog_has_body(const std::string& name);
bool catalog_has_graph(const std::string& name);

// Realize a catalog body.  Besides the fixed entries, parametric names are
// accepted: triangle-p-q-r (entries >= 2 or "inf"), regular-N-K (K >= 2 or
// "inf"), ideal-N (regular ideal N-gon).  Throws input_error for unknown
// names.
RealizedPolyhedron catalog_body(const std::string& name);

// Face graphs: cube, dodecahedron, pentagonal-prism, truncated-icosahedron,
// fig1-example, and the graphs of catalog regular polyhedra.
FaceGraph catalog_graph(const std::string& name);

}  // namespace coxsys
