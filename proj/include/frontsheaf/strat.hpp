#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frontsheaf/front.hpp"

namespace frontsheaf {

// One cell h(I, J) of the handle decomposition of the base surface induced by
// the triangulation: I <= J is a face pair, and dim h = 2 - (dim J - dim I).
// Closure order: h(I, J) <= h(I', J') iff I <= I' and J >= J'.
struct HandleCell {
  SimplexIndex I, J;
  int dim() const { return 2 - (simplex_dim(J) - simplex_dim(I)); }
  bool operator==(const HandleCell& o) const { return I == o.I && J == o.J; }
  bool operator<(const HandleCell& o) const {
    return std::tie(I, J) < std::tie(o.I, o.J);
  }
};

std::string handle_name(const HandleCell& h);
bool handle_leq(const HandleCell& a, const HandleCell& b);

// All handle cells, sorted. Requires a pure 2-dimensional base whose vertex
// links are paths or cycles and whose edges have at most two cofaces; throws
// std::invalid_argument otherwise.
std::vector<HandleCell> build_handles(const FrontComplex& front);

// Local type of a stratum of M x R over one handle cell, determined by the
// front level (-1 open gap, 0 smooth sheet, 1 crossing or cusp arc, 2 triple
// or cusp-crossing point) and the stratum dimension.
enum class StratumType {
  ThreeStratum,  // open region between sheets, dim 3
  Vertical2,     // open gap over an H-edge, dim 2
  V2,            // open gap over an H-vertex, dim 1
  Legendrian2,   // sheet piece over a 2-dim handle cell, dim 2
  FV,            // sheet piece over an H-edge, dim 1
  FV2,           // sheet point over an H-vertex, dim 0
  F2,            // crossing arc over a 2-dim handle cell, dim 1
  F2V,           // crossing point over an H-edge, dim 0
  Cu,            // cusp arc over a 2-dim handle cell, dim 1
  VCu,           // cusp point over an H-edge, dim 0
  F3,            // triple point, dim 0
  FCu            // crossing of a sheet with a cusp edge, dim 0
};

std::string type_name(StratumType t);

// One stratum of the front-induced stratification of M x R over a handle
// cell. Items record the vertical entities (entry or gap position in the
// per-cell z-column) the stratum occupies over each base cell of the local
// picture St(J); positions count top-down, gaps at even and entries at odd
// positions.
struct Stratum {
  int id = -1;
  HandleCell handle;
  StratumType type;
  int dim = 0;
  int level = 0;  // front level of the stratum's items (-1 for gaps)
  std::string slot;
  // Sheets of the front over e_J lying strictly below the stratum, top first.
  std::vector<std::string> below;
  // Ids of cusp components of the picture over J this stratum is exceptional
  // for (inside the cusp wedge, weakly below the upper branch).
  std::vector<int> exceptional;
  std::vector<std::pair<SimplexIndex, int>> items;  // (base cell, position)
};

// A connected component of the cusp locus visible in the picture over J,
// together with its trace over each cell: either the surviving upper/lower
// branch pair or the merged locus position.
struct CuspComponent {
  int id = -1;
  SimplexIndex J;
  int lower_mu = 0;  // Maslov potential of the lower branch
  struct Presence {
    bool merged = false;
    int upper_pos = -1, lower_pos = -1;  // entry positions in the z-column
    std::string upper, lower;            // branch sheet names (if not merged)
  };
  std::map<SimplexIndex, Presence> presence;
  std::set<std::string> nodes;  // identification keys shared across pictures
};

// A closure relation between two strata, with its classification.
struct StratEdge {
  int from = -1, to = -1;  // from lies in the closure of to
  bool downward = false;
  bool generalized_downward = false;
  bool same_level = false;  // source and target have equal front level
};

// The square of strata around a crossing arc: the arc O, the two upper
// half-sheets NW and NE on its sides, and the region N directly above.
struct CrossingSquare {
  int O = -1, NW = -1, NE = -1, N = -1;
};

// A top-dimensional square s1 <= s2a, s2b <= s3 with dim s1 = 1, dim s2 = 2,
// dim s3 = 3; when s1 is a cusp arc, s3 lies between the branches.
struct TopSquare {
  int s1 = -1, s2a = -1, s2b = -1, s3 = -1;
};

class StratPoset {
 public:
  const std::vector<HandleCell>& handles() const { return handles_; }
  const std::vector<Stratum>& strata() const { return strata_; }
  const std::vector<StratEdge>& edges() const { return edges_; }
  const std::vector<CuspComponent>& cusp_components() const { return cusps_; }

  const Stratum& stratum(int id) const { return strata_.at(id); }
  bool leq(int a, int b) const;                 // strict or equal
  const StratEdge* edge(int from, int to) const;  // null if unrelated
  std::vector<int> strata_of(const HandleCell& h) const;

  // True iff the component c of a finer picture continues into c2 of a
  // coarser one (they share locus or branch-pair nodes).
  bool cusp_contained(int c, int c2) const;

  std::vector<CrossingSquare> crossing_squares() const;
  std::vector<TopSquare> top_squares() const;

  // The region stratum directly above a sheet stratum (same handle cell).
  int upward_region(int sheet_stratum) const;

 private:
  friend StratPoset build_strata(const FrontComplex& front);
  std::vector<HandleCell> handles_;
  std::vector<Stratum> strata_;
  std::vector<StratEdge> edges_;
  std::vector<CuspComponent> cusps_;
  std::vector<CrossingSquare> squares_;
  std::map<std::pair<int, int>, int> edge_index_;
};

// Computes the stratification of M x R induced by the front over the handle
// decomposition, its closure poset with classified edges, and the cusp
// components per picture. Throws std::runtime_error when the front's vertical
// data cannot be matched consistently across cells.
StratPoset build_strata(const FrontComplex& front);

}  // namespace frontsheaf
