#include "coxsys/serialization.hpp"

#include <cmath>

#include "json.hpp"

#include "coxsys/errors.hpp"

namespace coxsys {

using nlohmann::json;

namespace {

json exponent_json(int n) {
  if (is_infinite_exponent(n)) return json("inf");
  return json(n);
}

int exponent_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfiniteExponent;
    throw input_error("spec: exponent must be an integer >= 2 or \"inf\"");
  }
  if (!j.is_number_integer())
    throw input_error("spec: exponent must be an integer >= 2 or \"inf\"");
  return j.get<int>();
}

json spec_to_json_obj(const RealizedPolyhedron& rp, bool include_normals) {
  json j;
  j["name"] = rp.spec.name;
  j["dim"] = rp.spec.dim;
  j["faces"] = json::array();
  for (const std::string& f : rp.spec.faces) j["faces"].push_back(f);
  j["coxeter"] = json::array();
  for (const auto& [pair, n] : rp.spec.exponents)
    j["coxeter"].push_back(json::array({rp.face_label(pair.first),
                                        rp.face_label(pair.second),
                                        exponent_json(n)}));
  if (include_normals) {
    j["normals"] = json::array();
    for (const LorentzVector& v : rp.normals) {
      json row = json::array();
      for (int i = 0; i < v.dim; ++i) row.push_back(v[i]);
      j["normals"].push_back(row);
    }
  }
  return j;
}

CoxeterSpec spec_from_json_obj(const json& j) {
  CoxeterSpec spec;
  if (!j.contains("dim") || !j.contains("faces"))
    throw input_error("spec: missing \"dim\" or \"faces\"");
  spec.name = j.value("name", std::string("unnamed"));
  spec.dim = j.at("dim").get<int>();
  if (spec.dim != 2 && spec.dim != 3)
    throw input_error("spec: dim must be 2 or 3");
  for (const auto& f : j.at("faces")) spec.faces.push_back(f.get<std::string>());
  if (j.contains("coxeter")) {
    for (const auto& row : j.at("coxeter")) {
      if (!row.is_array() || row.size() != 3)
        throw input_error("spec: coxeter rows are [faceA, faceB, n]");
      const int a = spec.face_index(row[0].get<std::string>());
      const int b = spec.face_index(row[1].get<std::string>());
      spec.set_exponent(a, b, exponent_from_json(row[2]));
    }
  }
  return spec;
}

}  // namespace

std::string polyhedron_spec_to_json(const RealizedPolyhedron& rp,
                                    bool include_normals) {
  return spec_to_json_obj(rp, include_normals).dump(2);
}

CoxeterSpec coxeter_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("spec: invalid JSON: ") + e.what());
  }
  return spec_from_json_obj(j);
}

RealizedPolyhedron polyhedron_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("spec: invalid JSON: ") + e.what());
  }
  CoxeterSpec spec = spec_from_json_obj(j);

  if (j.contains("normals")) {
    RealizedPolyhedron rp;
    rp.spec = spec;
    const auto& rows = j.at("normals");
    if (rows.size() != spec.faces.size())
      throw input_error("spec: normals count does not match faces");
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != spec.dim + 1)
        throw input_error("spec: each normal needs dim+1 components");
      LorentzVector v(spec.dim + 1);
      for (int i = 0; i <= spec.dim; ++i) v[i] = row[static_cast<std::size_t>(i)].get<double>();
      rp.normals.push_back(v);
    }
    for (const auto& [pair, n] : spec.exponents) rp.adjacency.insert(pair);
    if (auto p = find_interior_point(rp)) rp.interior = p;
    if (rp.spec.dim == 2) rp.vertices = polygon_vertices(rp);
    const VerificationReport v = validate(rp);
    if (!v.passed())
      throw input_error("spec: normals violate the declared data (" + v.witness +
                        ", deviation " + std::to_string(v.achieved) + ")");
    return rp;
  }

  if (spec.face_count() == spec.dim + 1) return realize_simplex(spec);
  throw input_error(
      "spec: a non-simplex without explicit normals cannot be realized");
}

std::string face_graph_to_json(const FaceGraph& g) {
  json j;
  j["faces"] = json::object();
  for (const auto& [label, nbrs] : g.to_map()) {
    json row = json::array();
    for (const std::string& b : nbrs) row.push_back(b);
    j["faces"][label] = row;
  }
  return j.dump(2);
}

FaceGraph face_graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("face graph: invalid JSON: ") + e.what());
  }
  if (!j.contains("faces") || !j.at("faces").is_object())
    throw input_error("face graph: expected an object under \"faces\"");
  std::map<std::string, std::vector<std::string>> m;
  for (const auto& [label, row] : j.at("faces").items()) {
    std::vector<std::string> nbrs;
    for (const auto& b : row) nbrs.push_back(b.get<std::string>());
    m[label] = nbrs;
  }
  return FaceGraph(m);
}

}  // namespace coxsys
