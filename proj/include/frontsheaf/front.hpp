#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frontsheaf/cobar.hpp"
#include "frontsheaf/graded.hpp"

namespace frontsheaf {

// Sheet data over one cell: z-blocks listed from top to bottom. A block of
// size >= 2 means those sheets' fronts coincide over the cell (a crossing, or
// a triple point at a tagged vertex). mu is the Maslov potential per sheet.
struct CellSheets {
  std::vector<std::vector<std::string>> blocks;
  std::map<std::string, int> mu;
};

using FacePair = std::pair<SimplexIndex, SimplexIndex>;  // (face, coface)

// An upper/lower pair of coface sheets meeting at a cusp over the face.
struct CuspPair {
  std::string upper, lower;
  bool operator==(const CuspPair& o) const {
    return upper == o.upper && lower == o.lower;
  }
  bool operator<(const CuspPair& o) const {
    return std::tie(upper, lower) < std::tie(o.upper, o.lower);
  }
};

// Combinatorial description of a Legendrian front over a simplicial base:
// base complex, per-cell sheet systems, face inclusion maps for covering
// pairs, and cusp pairs for covering pairs. Inclusions and cusp data for
// deeper face pairs are derived by composition (and validated for route
// independence).
class FrontComplex {
public:
  std::string name;

  // Declares a simplex together with all of its faces.
  void add_simplex(const SimplexIndex& I);
  void set_sheets(const SimplexIndex& I, CellSheets data);
  void set_iota(const SimplexIndex& face, const SimplexIndex& coface,
                std::map<std::string, std::string> map);
  void add_cusp(const SimplexIndex& face, const SimplexIndex& coface, CuspPair pair);
  void set_cusp_sheet_vertex(int vertex, const std::string& sheet);
  void tag_triple_point(int vertex);

  // --- base complex queries ---
  const std::vector<SimplexIndex>& cells() const { return cells_; }
  std::vector<SimplexIndex> cells_of_dim(int d) const;
  bool has_cell(const SimplexIndex& I) const;
  int dim() const;

  // --- sheet queries ---
  const CellSheets& sheets(const SimplexIndex& I) const;
  // Sheet names flattened in descending-z order (top first); within an
  // equal-z block, ordered by label.
  std::vector<std::string> sheet_order(const SimplexIndex& I) const;
  int mu(const SimplexIndex& I, const std::string& sheet) const;
  // True iff the two sheets have strictly separated fronts (different blocks).
  bool strictly_above(const SimplexIndex& I, const std::string& hi,
                      const std::string& lo) const;

  // iota for an arbitrary face pair, derived by composition along covering
  // chains.
  std::map<std::string, std::string> iota(const SimplexIndex& face,
                                          const SimplexIndex& coface) const;
  // Cusp pairs (as coface sheets) for an arbitrary strict face pair.
  std::vector<CuspPair> cusp_pairs(const SimplexIndex& face,
                                   const SimplexIndex& coface) const;

  std::optional<std::string> cusp_sheet_at_vertex(int vertex) const;
  bool is_triple_point(int vertex) const;

  // --- graded modules ---
  // V(e_I): basis = sheets in descending-z order, degree(S) = -mu(S).
  GradedModule V(const SimplexIndex& I) const;
  // p: V(e_J) -> V(e_I): iota-image basis vectors map to their preimages,
  // cusp-paired sheets map to zero.
  GradedLinearMap projection_p(PrimeField f, const SimplexIndex& face,
                               const SimplexIndex& coface) const;

  // Full validation: empty list iff all compatibility invariants hold.
  std::vector<std::string> validate() const;

  // Covering cofaces (codimension-1) of a cell.
  std::vector<SimplexIndex> covers_of(const SimplexIndex& I) const;
  // Covering faces (codimension-1 subfaces).
  std::vector<SimplexIndex> covered_by(const SimplexIndex& I) const;

private:
  std::map<std::string, std::string> iota_one_step(const SimplexIndex& face,
                                                   const SimplexIndex& coface) const;
  std::vector<CuspPair> cusp_pairs_one_step(const SimplexIndex& face,
                                            const SimplexIndex& coface) const;

  std::vector<SimplexIndex> cells_;
  std::set<SimplexIndex> cell_set_;
  std::map<SimplexIndex, CellSheets> sheets_;
  std::map<FacePair, std::map<std::string, std::string>> iota_;
  std::map<FacePair, std::vector<CuspPair>> cusps_;
  std::map<int, std::string> cusp_sheet_vertex_;
  std::set<int> triple_points_;
};

}  // namespace frontsheaf
