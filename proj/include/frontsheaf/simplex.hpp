#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontsheaf/cobar.hpp"
#include "frontsheaf/complex.hpp"

namespace frontsheaf {

// A homotopy-coherent diagram on a simplex: a graded module V and, for each
// face F = [i_0,...,i_m] of the simplex, a map a_F : V -> V of degree
// 1 - dim F, subject to
//   sum_{0<k<m} (-1)^{k+1} a_{...^i_k...}
//   + sum_{0<=k<=m} (-1)^k a_{i_k...i_m} . a_{i_0...i_k} = 0.
// Vertices carry differentials, edges carry chain maps, triangles carry chain
// homotopies, and higher faces carry higher homotopies.
struct SimplexDiagram {
  PrimeField field{2};
  SimplexIndex simplex;  // ambient simplex, strictly increasing vertex labels
  GradedModule V;
  std::map<SimplexIndex, FMatrix> a;  // face maps, keyed by face

  // a_F as a degree-checked graded map.
  GradedLinearMap face_map(const SimplexIndex& F) const;
};

// Empty iff the diagram is complete and every face identity holds.
std::vector<std::string> validate_diagram(const SimplexDiagram& D);

// Restriction of the diagram to a face of its simplex.
SimplexDiagram restrict_diagram(const SimplexDiagram& D, const SimplexIndex& face);

// A morphism of diagrams: the source simplex is a face of the target simplex
// and phi : V -> W commutes with all face maps of the source simplex.
struct SDMorphism {
  SimplexDiagram src, tgt;
  FMatrix phi;
};

std::vector<std::string> validate_morphism(const SDMorphism& m);

// The generalized mapping cylinder: one shifted copy of V per face, with the
// differential assembled from the face maps and signed identity components.
// Basis labels are "<face>:<generator>".
CochainComplex mapping_cylinder(const SimplexDiagram& D);

// The induced chain map of cylinders: phi on each shared face, zero into
// faces the source simplex does not have.
ChainMap cylinder_map(const SDMorphism& m);

// The inclusion of the one-vertex cylinder at a vertex of the simplex.
ChainMap vertex_inclusion(const SimplexDiagram& D, int vertex);

// True iff every edge map of the diagram is a quasi-isomorphism.
bool edges_are_quasi_isos(const SimplexDiagram& D);

// A reproducible random diagram on the standard n-simplex over GF(p): acyclic
// vertex differentials, higher face maps solved face by face (particular
// solution plus a random kernel element). Acyclicity guarantees every step is
// solvable.
SimplexDiagram random_diagram(PrimeField field, int n, int basis_size, unsigned seed);

}  // namespace frontsheaf
