#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frontsheaf/chd.hpp"
#include "frontsheaf/complex.hpp"
#include "frontsheaf/simplex.hpp"
#include "frontsheaf/strat.hpp"

namespace frontsheaf {

// The module X(s) = Y(s) (+) Z(s) attached to a stratum: Y is spanned by the
// sheets strictly below s (degree -mu), Z by one generator v[C] per cusp
// component C the stratum is exceptional for (degree -mu of the lower
// branch). X lists the Y basis first, then the Z basis.
struct PreliminaryModule {
  GradedModule Y, Z, X;
  std::vector<int> z_components;  // cusp component id per Z generator
};

PreliminaryModule preliminary_X(const FrontComplex& front, const StratPoset& poset,
                                int s);

// The degree-0 map X(s) -> X(s') of a generization s <= s', in components:
// p projects sheets to surviving sheets, k sends the lower branch of a cusp
// to v[C] when the target is exceptional for C, and l follows cusp
// components into coarser pictures.
struct GenerizationMap {
  PreliminaryModule src, tgt;
  FMatrix p, k, l;  // Y->Y', Y->Z', Z->Z'

  GradedLinearMap assembled() const;
};

GenerizationMap preliminary_map(const FrontComplex& front, const StratPoset& poset,
                                int s, int t, PrimeField field);

// True iff on every composable pair s <= s' <= s'' the components satisfy
//   p'' = p' . p,   k'' = k' . p + l' . k,   l'' = l' . l
// entrywise, and every self map is the identity.
bool check_X_functor(const FrontComplex& front, const StratPoset& poset,
                     PrimeField field);

// The diagram on the closed handle simplex attached to a stratum: module
// X(s), face maps a_F = (boundary extension of c(e_F) restricted to Y)
// (+) (identity on Z when dim e_F = 1, zero otherwise). Throws when the
// restriction is not closed or the face identities fail.
SimplexDiagram G_of(const FrontComplex& front, const StratPoset& poset,
                    const CHD& chd, int s);

// One verification line: a named family of checks with an aggregate verdict
// and failure details.
struct CheckResult {
  std::string name;
  int instances = 0;
  bool pass = true;
  std::vector<std::string> failures;
};

struct AxiomReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string summary() const;
};

// The sheaf: per stratum the mapping cylinder of the attached diagram, per
// poset relation the induced cylinder chain map. Complexes and maps are
// built on first access and cached.
class SheafFunctor {
public:
  SheafFunctor(const FrontComplex& front, StratPoset poset, CHD chd);

  const FrontComplex& front() const { return *front_; }
  const StratPoset& poset() const { return poset_; }
  const CHD& chd() const { return chd_; }

  const PreliminaryModule& X(int s) const;
  const GenerizationMap& X_map(int s, int t) const;
  // Cached assembled matrix of X_map(s, t).
  const FMatrix& X_matrix(int s, int t) const;
  const SimplexDiagram& diagram(int s) const;
  const CochainComplex& at(int s) const;
  const ChainMap& map(int s, int t) const;

  // The complex (X(s), a_v) of the stratum's diagram at one base vertex,
  // assembled directly from the chain homotopy diagram. The inclusion of a
  // vertex complex into the mapping cylinder is a quasi-isomorphism, so
  // quasi-isomorphism and acyclicity questions about cylinder maps reduce to
  // the vertex complexes.
  const CochainComplex& vertex_complex(int s, int vertex) const;
  // The generization map between the vertex complexes at the first vertex of
  // the source handle simplex.
  ChainMap vertex_map(int s, int t) const;

private:
  const FrontComplex* front_;
  StratPoset poset_;
  CHD chd_;
  mutable std::map<int, PreliminaryModule> pm_;
  mutable std::map<std::pair<int, int>, GenerizationMap> xmaps_;
  mutable std::map<int, SimplexDiagram> diagrams_;
  mutable std::map<int, CochainComplex> complexes_;
  mutable std::map<std::pair<int, int>, ChainMap> maps_;
  mutable std::map<std::pair<int, int>, CochainComplex> vertex_complexes_;
  mutable std::map<std::pair<int, int>, FMatrix> xmatrices_;
};

// Builds the sheaf of a rank-1 chain homotopy diagram over a 2-dimensional
// base. Ranks > 1 (higher-dimensional representations) are not implemented
// and rejected with std::logic_error.
SheafFunctor build_sheaf(const FrontComplex& front, const CHD& chd, int rank = 1);
SheafFunctor build_sheaf(const FrontComplex& front, StratPoset poset, const CHD& chd,
                         int rank = 1);

struct VerifyOptions {
  // Chain-level composition identities on all composable relation pairs and
  // the diagram-morphism property on every relation. Both are determined by
  // the generization matrices and the front alone, independent of the chain
  // homotopy diagram, so batch runs may check them once per front.
  bool functor_laws = true;
  bool morphisms = true;
  // Decide quasi-isomorphism and total-complex acyclicity on the vertex
  // complexes of the diagrams; equivalent to the full cylinder-level checks
  // because vertex inclusions are quasi-isomorphisms, and much faster. Set
  // to false to run every check on the full mapping cylinders.
  bool vertex_reduction = true;
};

// Shared memo for batch verification: verdicts and ranks keyed by the
// serialized matrices they depend on, reusable across chain homotopy
// diagrams of the same front.
struct VerifyCache {
  std::map<std::string, bool> verdicts;
  std::map<std::string, int> ranks;
  // Assembled generization matrices per stratum pair; they depend only on
  // the front, the stratification, and the field, so they stay valid across
  // every chain homotopy diagram verified with the same cache.
  std::map<std::pair<int, int>, FMatrix> xmats;
};

// Verifies every axiom of the sheaf: downward maps are literal identities
// (hence quasi-isomorphisms), maps between strata of equal front level are
// quasi-isomorphisms, the total complex around every crossing arc and every
// top-dimensional square is acyclic, generalized-downward maps are
// quasi-isomorphisms, and (optionally) functoriality.
AxiomReport verify_axioms(const SheafFunctor& F, const VerifyOptions& opt = {},
                          VerifyCache* cache = nullptr);

// Total homology rank of the cone of the map into the region directly above
// a Legendrian 2-stratum, computed on the vertex complexes.
int microlocal_rank(const SheafFunctor& F, int legendrian2,
                    VerifyCache* cache = nullptr);

}  // namespace frontsheaf
