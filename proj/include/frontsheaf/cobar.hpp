#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontsheaf/graded.hpp"

namespace frontsheaf {

// A simplex index: strictly increasing tuple of vertex labels (i_0 < ... < i_m).
using SimplexIndex = std::vector<int>;

// Dimension m of e_I, and the shifted degree m - 1.
int simplex_dim(const SimplexIndex& I);
int simplex_shifted_degree(const SimplexIndex& I);

std::string simplex_name(const SimplexIndex& I);

// A tensor word in simplex generators. The empty word is the unit.
using TensorWord = std::vector<SimplexIndex>;

// Integer-coefficient formal sum of tensor words (scalar part = coefficient of
// the empty word). Canonical map-based normal form, so equality is structural.
class CobarElement {
public:
  CobarElement() = default;

  static CobarElement scalar(long long c);
  static CobarElement generator(const SimplexIndex& I);
  static CobarElement word(const TensorWord& w, long long c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<TensorWord, long long>& terms() const { return terms_; }

  CobarElement operator+(const CobarElement& o) const;
  CobarElement operator-(const CobarElement& o) const;
  CobarElement operator*(const CobarElement& o) const;  // tensor concatenation
  CobarElement scaled(long long c) const;

  bool operator==(const CobarElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const CobarElement& o) const { return terms_ != o.terms_; }

  std::string str() const;

  void add_term(const TensorWord& w, long long c);

private:
  std::map<TensorWord, long long> terms_;
};

// Shifted degree of a homogeneous word: sum of (dim - 1) over its letters.
int word_shifted_degree(const TensorWord& w);

// The cobar differential D_s: on a generator,
//   D_s(e_{i_0...i_m}) = -sum_k (-1)^k e_{...^i_k...}
//                        + sum_k (-1)^k e_{i_0...i_k} (x) e_{i_k...i_m},
// with the vertex-deletion term taken to be zero for m = 0; extended to words
// by the graded Leibniz rule with sign (-1)^{shifted degree}.
CobarElement cobar_diff(const CobarElement& x);

// Reduced differential: same coproduct sum, deletion sum with the first and
// last term omitted; Leibniz extension as above.
CobarElement reduced_diff(const CobarElement& x);

// The algebra automorphism sending a 1-simplex generator e_I to e_I -+ 1 and
// fixing all other generators.
CobarElement phi(const CobarElement& x, bool inverse = false);

// All faces (nonempty subsets, as simplices) of the n-simplex on vertices
// 0..n, ordered by (dimension, lexicographic).
std::vector<SimplexIndex> all_faces_of_standard_simplex(int n);

// All nonempty faces of an arbitrary simplex, ordered by (dim, lex).
std::vector<SimplexIndex> faces_of(const SimplexIndex& I);

bool is_face_of(const SimplexIndex& F, const SimplexIndex& I);

}  // namespace frontsheaf
