#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontsheaf/cobar.hpp"
#include "frontsheaf/field.hpp"
#include "frontsheaf/front.hpp"

namespace frontsheaf {

// Integer-coefficient formal sum of words in named generators (free unital
// associative algebra). The empty word is the unit.
class NCPoly {
public:
  using Word = std::vector<std::string>;

  NCPoly() = default;
  static NCPoly scalar(long long c);
  static NCPoly generator(const std::string& id);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, long long>& terms() const { return terms_; }

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly scaled(long long c) const;
  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return terms_ != o.terms_; }

  std::string str() const;
  void add_term(const Word& w, long long c);

private:
  std::map<Word, long long> terms_;
};

// Square matrix of noncommutative polynomials.
class NCMatrix {
public:
  explicit NCMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static NCMatrix identity(int n);

  int size() const { return n_; }
  NCPoly& at(int r, int c) { return a_.at(static_cast<size_t>(r) * n_ + c); }
  const NCPoly& at(int r, int c) const { return a_.at(static_cast<size_t>(r) * n_ + c); }

  NCMatrix operator+(const NCMatrix& o) const;
  NCMatrix operator-(const NCMatrix& o) const;
  NCMatrix operator*(const NCMatrix& o) const;
  NCMatrix scaled(long long c) const;
  bool operator==(const NCMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
  int n_;
  std::vector<NCPoly> a_;
};

// One generator m[I;i,j]: sheet positions i < j (1-based, descending z) over
// cell I with z(S_i) > z(S_j) strictly.
struct DgaGenerator {
  SimplexIndex cell;
  int i, j;  // 1-based positions in the descending-z sheet order
  int degree;
  std::string id;
};

// The simplicial DGA of a validated front: free unital graded Z-algebra on
// the generators, with the matrix differential extended as a degree -1
// derivation.
class SimplicialDGA {
public:
  explicit SimplicialDGA(const FrontComplex& front);

  const FrontComplex& front() const { return front_; }
  const std::vector<DgaGenerator>& generators() const { return generators_; }
  const DgaGenerator& generator(const std::string& id) const;
  bool has_generator(const std::string& id) const { return by_id_.count(id) != 0; }
  int degree_of(const std::string& id) const { return generator(id).degree; }
  int degree_of_word(const NCPoly::Word& w) const;

  // Differential on a generator (stored) and its derivation extension.
  const NCPoly& diff_generator(const std::string& id) const;
  NCPoly diff(const NCPoly& x) const;

  // Matrices of section 2 style: M(e_I) and M_I(e_J) in the sheet order of
  // e_I; cusp pairs over a 0-cell face contribute scalar 1 entries.
  NCMatrix M(const SimplexIndex& I) const;
  NCMatrix M_in(const SimplexIndex& I, const SimplexIndex& J) const;
  // Diagonal signs (-1)^mu in the sheet order of e_I.
  std::vector<int> theta(const SimplexIndex& I) const;

  // The unital algebra homomorphism sending a chain-level element supported
  // on faces of e_I to matrices over the DGA.
  NCMatrix matrix_hom(const SimplexIndex& I, const CobarElement& x) const;

  // Entry sign-twist: negates homogeneous odd-degree entries.
  NCMatrix sigma(const NCMatrix& m) const;

  bool check_d_squared() const;

  std::string canonical_id(const SimplexIndex& cell, int i, int j) const;

private:
  FrontComplex front_;
  std::vector<DgaGenerator> generators_;
  std::map<std::string, size_t> by_id_;
  std::map<std::string, NCPoly> diff_;
};

// Augmentation to GF(p): values on degree-0 generators; all other generators
// map to 0, scalars reduce mod p.
struct Augmentation {
  PrimeField field{2};
  std::map<std::string, int> values;  // generator id -> field element
};

// Unital algebra homomorphism value of x under the augmentation.
int evaluate(const SimplicialDGA& dga, const Augmentation& eps, const NCPoly& x);

}  // namespace frontsheaf
