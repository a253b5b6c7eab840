#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontsheaf/dga.hpp"
#include "frontsheaf/front.hpp"
#include "frontsheaf/simplex.hpp"

namespace frontsheaf {

// A chain homotopy diagram: one endomorphism of V(e_I) per cell, of degree
// 1 - dim, strictly lower triangular for the sheet order (identity diagonal
// on edges), such that for every cell the boundary extensions of the face
// maps form a valid homotopy-coherent diagram on that cell.
struct CHD {
  PrimeField field{2};
  std::map<SimplexIndex, FMatrix> c;
};

// Extension of c(e_F) to an endomorphism of V(e_I): the original map on the
// included sheets, and on the cusp-pair sheets over e_F either the
// upper-to-lower step map (dim e_F = 0), the identity (dim e_F = 1), or zero
// (dim e_F >= 2).
FMatrix boundary_extend(const FrontComplex& front, const FMatrix& cF,
                        const SimplexIndex& F, const SimplexIndex& I);

// Empty iff all degree, triangularity, and per-cell diagram conditions hold.
std::vector<std::string> validate_chd(const FrontComplex& front, const CHD& chd);

// The per-cell diagram of boundary extensions on the closed cell I.
SimplexDiagram cell_diagram(const FrontComplex& front, const CHD& chd,
                            const SimplexIndex& I);

// The two directions of the bijection between augmentations and diagrams:
// the matrix of c(e_I) is the transposed entrywise evaluation of the cell's
// generator matrix, with an identity added on edges.
CHD aug_to_chd(const SimplicialDGA& dga, const Augmentation& eps);
Augmentation chd_to_aug(const SimplicialDGA& dga, const CHD& chd);

// True iff eps kills the differential of every generator.
bool is_augmentation(const SimplicialDGA& dga, const Augmentation& eps);

// All augmentations to GF(p), found by exhausting assignments on degree-0
// generators in a fixed order. Throws if the search space exceeds the bound.
std::vector<Augmentation> enumerate_augmentations(const SimplicialDGA& dga,
                                                  PrimeField field,
                                                  unsigned long long bound = 1ull << 20);

// Independent brute force: exhaust all admissible entry assignments and keep
// those passing validation. Throws if the search space exceeds the bound.
std::vector<CHD> enumerate_chds(const FrontComplex& front, PrimeField field,
                                unsigned long long bound = 1ull << 20);

}  // namespace frontsheaf
