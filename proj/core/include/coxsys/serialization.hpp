#pragma once

#include <string>

#include "coxsys/face_graph.hpp"
#include "coxsys/polyhedron.hpp"
#include "coxsys/report.hpp"

namespace coxsys {

// Polyhedron spec file (JSON):
//   {"name": str, "dim": 2|3, "faces": [str],
//    "coxeter": [[faceA, faceB, n|"inf"]],
//    "normals": [[real, ...], ...]  (optional)}
// When "normals" is present it takes precedence over construction and the
// declared exponents are validated against it.
std::string polyhedron_spec_to_json(const RealizedPolyhedron& rp,
                                    bool include_normals = true);
RealizedPolyhedron polyhedron_spec_from_json(const std::string& text);

// The Coxeter data alone (used by checks that re-realize from exponents).
CoxeterSpec coxeter_spec_from_json(const std::string& text);

// Face-graph file (JSON): {"faces": {"A": ["B","C","D"], ...}} with cyclic
// neighbor lists.
std::string face_graph_to_json(const FaceGraph& g);
FaceGraph face_graph_from_json(const std::string& text);

}  // namespace coxsys
