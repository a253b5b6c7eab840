#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frontsheaf/dga.hpp"
#include "frontsheaf/front_io.hpp"

using namespace frontsheaf;

namespace {

FrontComplex load(const std::string& stem) {
  return load_front_file(std::string(FRONT_DATA_DIR) + "/" + stem + ".front");
}

const char* kCorpus[] = {"one_sheet",        "two_sheets",        "crossing_circle",
                         "unknot_sphere",    "cusp_sheet_vertex", "triple_point_vertex"};

NCMatrix entrywise_diff(const SimplicialDGA& dga, const NCMatrix& m) {
  NCMatrix out(m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out.at(r, c) = dga.diff(m.at(r, c));
  return out;
}

NCMatrix row_scale(const std::vector<int>& th, const NCMatrix& m) {
  NCMatrix out(m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out.at(r, c) = m.at(r, c).scaled(th[r]);
  return out;
}

NCMatrix col_scale(const NCMatrix& m, const std::vector<int>& th) {
  NCMatrix out(m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out.at(r, c) = m.at(r, c).scaled(th[c]);
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  NCPoly x = NCPoly::generator("x");
  NCPoly y = NCPoly::generator("y");
  CHECK((x * y) != (y * x));
  CHECK((x + y) - x == y);
  CHECK((x - x).is_zero());
  CHECK(NCPoly::scalar(1) * x == x);
  CHECK((x * y).str() == "x*y");
  NCPoly z = x.scaled(2) - NCPoly::scalar(3);
  CHECK(z.str() == "-3 + 2*x");
}

TEST_CASE("one sheet carries no generators") {
  SimplicialDGA dga(load("one_sheet"));
  CHECK(dga.generators().empty());
  CHECK(dga.check_d_squared());
}

TEST_CASE("two sheets: generator ladder with the expected degrees") {
  SimplicialDGA dga(load("two_sheets"));
  // One generator per cell: pair (top, bottom), degree dim - 1.
  CHECK(dga.generators().size() == 7);
  CHECK(dga.degree_of("m[0;1,2]") == -1);
  CHECK(dga.degree_of("m[0,1;1,2]") == 0);
  CHECK(dga.degree_of("m[0,1,2;1,2]") == 1);
}

TEST_CASE("two sheets: edge and triangle differentials") {
  SimplicialDGA dga(load("two_sheets"));
  NCPoly de = dga.diff_generator("m[0,1;1,2]");
  CHECK(de == NCPoly::generator("m[0;1,2]") - NCPoly::generator("m[1;1,2]"));
  NCPoly dt = dga.diff_generator("m[0,1,2;1,2]");
  NCPoly expected = NCPoly::generator("m[0,2;1,2]") - NCPoly::generator("m[0,1;1,2]") -
                    NCPoly::generator("m[1,2;1,2]");
  CHECK(dt == expected);
  // Vertex generators are cycles here.
  CHECK(dga.diff_generator("m[0;1,2]").is_zero());
}

TEST_CASE("cusp contributes a unit term to the edge differential") {
  SimplicialDGA dga(load("unknot_sphere"));
  // Edge (1,2): sheet U above L, a cusp point above the far vertex 2.
  NCPoly de = dga.diff_generator("m[1,2;1,2]");
  CHECK(de == NCPoly::scalar(1) - NCPoly::generator("m[1;1,2]"));
  CHECK(dga.degree_of("m[1,2;1,2]") == 1);
}

TEST_CASE("differential squares to zero on the whole corpus") {
  for (const char* stem : kCorpus) {
    CAPTURE(stem);
    SimplicialDGA dga(load(stem));
    CHECK(dga.check_d_squared());
  }
}

TEST_CASE("differential lowers degree by exactly one") {
  for (const char* stem : kCorpus) {
    CAPTURE(stem);
    SimplicialDGA dga(load(stem));
    for (const DgaGenerator& g : dga.generators()) {
      for (const auto& [w, c] : dga.diff_generator(g.id).terms()) {
        CAPTURE(g.id);
        CHECK(dga.degree_of_word(w) == g.degree - 1);
      }
    }
  }
}

TEST_CASE("matrix differential agrees with the chain-level homomorphism") {
  for (const char* stem : kCorpus) {
    CAPTURE(stem);
    FrontComplex f = load(stem);
    SimplicialDGA dga(f);
    for (const SimplexIndex& I : f.cells()) {
      CAPTURE(simplex_name(I));
      NCMatrix lhs = entrywise_diff(dga, dga.M(I));
      NCMatrix rhs =
          row_scale(dga.theta(I), dga.matrix_hom(I, cobar_diff(CobarElement::generator(I))));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("sign twist identity for face matrices") {
  for (const char* stem : kCorpus) {
    CAPTURE(stem);
    FrontComplex f = load(stem);
    SimplicialDGA dga(f);
    for (const SimplexIndex& I : f.cells()) {
      auto th = dga.theta(I);
      for (const SimplexIndex& J : faces_of(I)) {
        CAPTURE(simplex_name(I));
        CAPTURE(simplex_name(J));
        NCMatrix m = dga.M_in(I, J);
        int s = simplex_shifted_degree(J) % 2 == 0 ? 1 : -1;
        CHECK(dga.sigma(m) == row_scale(th, col_scale(m, th)).scaled(s));
      }
    }
  }
}

TEST_CASE("dropping the diagonal sign breaks the comparison") {
  FrontComplex f = load("unknot_sphere");
  SimplicialDGA dga(f);
  bool all_equal = true;
  for (const SimplexIndex& I : f.cells()) {
    NCMatrix lhs = entrywise_diff(dga, dga.M(I));
    NCMatrix rhs = dga.matrix_hom(I, cobar_diff(CobarElement::generator(I)));
    if (!(lhs == rhs)) all_equal = false;
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("derivation rule on products") {
  SimplicialDGA dga(load("unknot_sphere"));
  NCPoly a = NCPoly::generator("m[1;1,2]");       // degree 0
  NCPoly b = NCPoly::generator("m[1,2;1,2]");     // degree 1
  NCPoly c = NCPoly::generator("m[1,2,3;1,2]");   // degree 2
  // |a| even: d(ab) = d(a)b + a d(b).
  CHECK(dga.diff(a * b) == dga.diff(a) * b + a * dga.diff(b));
  // |b| odd: d(bc) = d(b)c - b d(c).
  CHECK(dga.diff(b * c) == dga.diff(b) * c - b * dga.diff(c));
  CHECK(dga.diff(dga.diff(a * b * c)).is_zero());
}

TEST_CASE("evaluation is a unital homomorphism killing nonzero degrees") {
  SimplicialDGA dga(load("two_sheets"));
  Augmentation eps;
  eps.field = PrimeField(3);
  eps.values["m[0,1;1,2]"] = 2;
  eps.values["m[0,2;1,2]"] = 1;
  NCPoly e01 = NCPoly::generator("m[0,1;1,2]");
  NCPoly e02 = NCPoly::generator("m[0,2;1,2]");
  CHECK(evaluate(dga, eps, NCPoly::scalar(7)) == 1);
  CHECK(evaluate(dga, eps, e01 * e02) == 2);
  CHECK(evaluate(dga, eps, e01 + e02.scaled(2)) == 1);
  // Vertex generator has degree -1: evaluates to zero.
  CHECK(evaluate(dga, eps, NCPoly::generator("m[0;1,2]")) == 0);
  // Unassigned degree-0 generator defaults to zero.
  CHECK(evaluate(dga, eps, NCPoly::generator("m[1,2;1,2]")) == 0);
}

TEST_CASE("crossing blocks suppress generators") {
  SimplicialDGA dga(load("crossing_circle"));
  // Over the crossing locus the two sheets are not strictly separated.
  CHECK_FALSE(dga.has_generator("m[0;1,2]"));
  CHECK_FALSE(dga.has_generator("m[0,1;1,2]"));
  // Inside and outside the circle they are.
  CHECK(dga.has_generator("m[0,1,2;1,2]"));
  CHECK(dga.has_generator("m[3;1,2]"));
}

TEST_CASE("triple point: no generators above the hub, full set on sectors") {
  SimplicialDGA dga(load("triple_point_vertex"));
  CHECK_FALSE(dga.has_generator("m[0;1,2]"));
  CHECK_FALSE(dga.has_generator("m[0;1,3]"));
  CHECK_FALSE(dga.has_generator("m[0;2,3]"));
  // Generic sectors have all three pairs.
  CHECK(dga.has_generator("m[0,1,6;1,2]"));
  CHECK(dga.has_generator("m[0,1,6;1,3]"));
  CHECK(dga.has_generator("m[0,1,6;2,3]"));
  CHECK(dga.check_d_squared());
}
