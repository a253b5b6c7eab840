#pragma once

#include <map>
#include <string>

#include "frontsheaf/graded.hpp"

namespace frontsheaf {

// Cochain complex: a graded module with a degree +1 endomorphism squaring to
// zero. d*d = 0 is checked at construction.
class CochainComplex {
public:
  CochainComplex(PrimeField field, GradedModule module, FMatrix differential);

  static CochainComplex zero(PrimeField field) {
    return CochainComplex(field, GradedModule(), FMatrix(field, 0, 0));
  }

  const PrimeField& field() const { return field_; }
  const GradedModule& module() const { return module_; }
  const FMatrix& differential() const { return d_; }

private:
  PrimeField field_;
  GradedModule module_;
  FMatrix d_;
};

// Degree-0 map of complexes commuting with the differentials; checked at
// construction.
class ChainMap {
public:
  ChainMap(CochainComplex source, CochainComplex target, FMatrix matrix);

  static ChainMap identity(const CochainComplex& c) {
    return ChainMap(c, c, FMatrix::identity(c.field(), c.module().dim()));
  }

  const CochainComplex& source() const { return source_; }
  const CochainComplex& target() const { return target_; }
  const FMatrix& matrix() const { return matrix_; }

  ChainMap compose_after(const ChainMap& first) const {
    return ChainMap(first.source(), target_, matrix_ * first.matrix());
  }

private:
  CochainComplex source_, target_;
  FMatrix matrix_;
};

// Strictly commuting square of complexes
//   A --ab--> B
//   |         |
//   ac        bd
//   v         v
//   C --cd--> D
// Commutativity is checked at construction.
struct CommutativeSquare {
  CommutativeSquare(ChainMap ab_, ChainMap ac_, ChainMap bd_, ChainMap cd_);
  ChainMap ab, ac, bd, cd;
};

// Homology rank in each degree, computed by exact rank over GF(p). Degrees
// with rank zero are omitted from the result.
std::map<int, int> homology_ranks(const CochainComplex& c);

int total_homology_rank(const CochainComplex& c);

bool is_acyclic(const CochainComplex& c);

// Cone(f)^k = A^{k+1} (+) B^k with differential [[-dA, 0], [f, dB]]. Basis
// labels are prefixed "cone.src:" / "cone.tgt:".
CochainComplex cone(const ChainMap& f);

// Totalization of a commuting square with columns A | B (+) C | D. The B->D
// branch carries a sign flip and the vertical differential of column c is
// twisted by (-1)^c, so the total differential squares to zero.
CochainComplex total_complex(const CommutativeSquare& sq);

// True iff cone(f) is acyclic.
bool is_quasi_iso(const ChainMap& f);

}  // namespace frontsheaf
