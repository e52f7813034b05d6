#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "coxsys/report.hpp"

namespace coxsys {

// The 1-skeleton of a polyhedron seen from its faces: each face carries the
// cyclic list of its neighbors.  Vertices are reconstructed from the cyclic
// orders (the corner walk), so the face lists are the single source of truth;
// inconsistently oriented input is rejected at ingestion.
class FaceGraph {
 public:
  // Validates: symmetry, no duplicate neighbors, list length >= 3,
  // connectivity, a closed corner walk, and Euler characteristic 2.
  explicit FaceGraph(const std::map<std::string, std::vector<std::string>>& cyclic);

  int face_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int index(const std::string& label) const;  // throws input_error if unknown

  // Neighbors of a face in cyclic order.
  const std::vector<int>& neighbors(int face) const {
    return nbrs_[static_cast<std::size_t>(face)];
  }
  int sides(int face) const {
    return static_cast<int>(nbrs_[static_cast<std::size_t>(face)].size());
  }
  bool adjacent(int a, int b) const;

  // One entry per vertex: the faces around it in cyclic order.
  const std::vector<std::vector<int>>& vertex_cycles() const { return vertices_; }

  int edge_count() const { return edge_count_; }

  std::map<std::string, std::vector<std::string>> to_map() const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<std::vector<int>> vertices_;
  int edge_count_ = 0;
};

// True iff every vertex has degree exactly 3.
bool is_simple_trivalent(const FaceGraph& g);

struct EulerStats {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  double avg_sides = 0.0;  // 2E/F, strictly below 6 for trivalent sphere graphs
};

// Counts for a simple trivalent graph (input error otherwise).
EulerStats euler_stats(const FaceGraph& g);

// A face with at most 5 sides (fewest sides, ties by label).  Existence is
// guaranteed for simple trivalent sphere graphs; absence is an internal error.
std::string lemma33_witness(const FaceGraph& g);

enum class PrismaticStatus { Prismatic, NonPrismatic, NotApplicable };

// A face with n > 3 sides is prismatic when no two of its cyclically
// non-consecutive neighbors are adjacent to each other.  Faces with <= 3
// sides are NotApplicable.
PrismaticStatus is_prismatic(const FaceGraph& g, const std::string& face);

struct RegionReport {
  std::array<std::string, 3> bounding_faces;
  std::vector<std::string> interior_faces;
  bool all_interior_prismatic = false;
};

struct AllPrismatic {};
using RegionResult = std::variant<AllPrismatic, RegionReport>;

// For a simple trivalent triangle-free graph: either every face is prismatic,
// or three mutually adjacent non-prismatic faces bound a region whose
// interior consists entirely of prismatic faces.  The returned interior is
// re-verified face by face.
RegionResult find_prismatic_region(const FaceGraph& g);

// Existence of a prismatic face (any size), or of a prismatic quadrilateral
// or pentagonal face when compact is set.  Precondition violations are
// reported in the result, not thrown.
VerificationReport theorem31_check(const FaceGraph& g, bool compact);

}  // namespace coxsys
