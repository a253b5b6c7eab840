#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frontsheaf/simplex.hpp"

using namespace frontsheaf;

namespace {

// Two-term ladder x -> y in degrees 0, 1.
GradedModule ladder() {
  GradedModule m;
  m.add("x", 0);
  m.add("y", 1);
  return m;
}

FMatrix ladder_d(PrimeField f) {
  FMatrix d(f, 2, 2);
  d.at(1, 0) = 1;
  return d;
}

// E_xy scaled by c: the only degree -1 endomorphism of the ladder.
FMatrix homotopy(PrimeField f, int c) {
  FMatrix h(f, 2, 2);
  h.at(0, 1) = f.reduce(c);
  return h;
}

// Triangle diagram over GF(5) with one shared differential, edge maps
// perturbed by homotopies h01, h12, h02, and the induced triangle homotopy.
SimplexDiagram perturbed_triangle(int a, int b, int c) {
  PrimeField F(5);
  SimplexDiagram D;
  D.field = F;
  D.simplex = {0, 1, 2};
  D.V = ladder();
  FMatrix d = ladder_d(F);
  FMatrix id = FMatrix::identity(F, 2);
  FMatrix h01 = homotopy(F, a), h12 = homotopy(F, b), h02 = homotopy(F, c);
  D.a.insert_or_assign({0}, d);
  D.a.insert_or_assign({1}, d);
  D.a.insert_or_assign({2}, d);
  D.a.insert_or_assign({0, 1}, id + d * h01 + h01 * d);
  D.a.insert_or_assign({1, 2}, id + d * h12 + h12 * d);
  D.a.insert_or_assign({0, 2}, id + d * h02 + h02 * d);
  D.a.insert_or_assign({0, 1, 2}, h01 + h12 - h02 + h12 * d * h01 + h12 * h01 * d);
  return D;
}

void put_block(FMatrix& big, int r, int c, const FMatrix& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) big.at(2 * r + i, 2 * c + j) = b.at(i, j);
}

}  // namespace

TEST_CASE("point cylinder is the complex with the sign-flipped differential") {
  PrimeField F(3);
  SimplexDiagram D;
  D.field = F;
  D.simplex = {0};
  D.V = ladder();
  D.a.insert_or_assign({0}, ladder_d(F));
  CHECK(validate_diagram(D).empty());
  CochainComplex c = mapping_cylinder(D);
  CHECK(c.module().dim() == 2);
  CHECK(c.differential() == ladder_d(F).negated());
}

TEST_CASE("edge cylinder matches the classical mapping cylinder") {
  PrimeField F(5);
  SimplexDiagram D;
  D.field = F;
  D.simplex = {0, 1};
  D.V = ladder();
  FMatrix d = ladder_d(F);
  FMatrix f = FMatrix::identity(F, 2).scaled(2);
  D.a.insert_or_assign({0}, d);
  D.a.insert_or_assign({1}, d);
  D.a.insert_or_assign({0, 1}, f);
  CHECK(validate_diagram(D).empty());
  CochainComplex c = mapping_cylinder(D);
  // Blocks in face order (0), (1), (0,1).
  FMatrix expected(F, 6, 6);
  put_block(expected, 0, 0, d.negated());
  put_block(expected, 1, 1, d.negated());
  put_block(expected, 2, 2, d);
  put_block(expected, 0, 2, FMatrix::identity(F, 2).negated());
  put_block(expected, 1, 2, f);
  CHECK(c.differential() == expected);
}

TEST_CASE("triangle cylinder matches the seven-block differential") {
  SimplexDiagram D = perturbed_triangle(1, 2, 3);
  PrimeField F = D.field;
  REQUIRE(validate_diagram(D).empty());
  CochainComplex c = mapping_cylinder(D);
  REQUIRE(c.module().dim() == 14);
  FMatrix d = D.a.at({0});
  FMatrix id = FMatrix::identity(F, 2);
  // Face order: (0), (1), (2), (0,1), (0,2), (1,2), (0,1,2).
  FMatrix expected(F, 14, 14);
  put_block(expected, 0, 0, d.negated());
  put_block(expected, 1, 1, d.negated());
  put_block(expected, 2, 2, d.negated());
  put_block(expected, 3, 3, d);
  put_block(expected, 4, 4, d);
  put_block(expected, 5, 5, d);
  put_block(expected, 6, 6, d.negated());
  put_block(expected, 0, 3, id.negated());
  put_block(expected, 0, 4, id.negated());
  put_block(expected, 1, 3, D.a.at({0, 1}));
  put_block(expected, 1, 5, id.negated());
  put_block(expected, 2, 4, D.a.at({0, 2}));
  put_block(expected, 2, 5, D.a.at({1, 2}));
  put_block(expected, 2, 6, D.a.at({0, 1, 2}).negated());
  put_block(expected, 3, 6, id.negated());
  put_block(expected, 4, 6, id);
  put_block(expected, 5, 6, D.a.at({0, 1}).negated());
  CHECK(c.differential() == expected);
}

TEST_CASE("broken triangle homotopy is rejected") {
  SimplexDiagram D = perturbed_triangle(1, 2, 3);
  D.a.insert_or_assign({0, 1, 2}, homotopy(D.field, 4));
  auto diags = validate_diagram(D);
  bool found = false;
  for (const auto& s : diags)
    if (s.find("face identity fails on (0,1,2)") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("vertex inclusion into the cylinder is a quasi-isomorphism") {
  SimplexDiagram D = perturbed_triangle(1, 2, 3);
  CHECK(edges_are_quasi_isos(D));
  for (int v : {0, 1, 2}) CHECK(is_quasi_iso(vertex_inclusion(D, v)));
}

TEST_CASE("vertex inclusion fails without quasi-isomorphic edges") {
  PrimeField F(2);
  SimplexDiagram D;
  D.field = F;
  D.simplex = {0, 1, 2};
  GradedModule V;
  V.add("x", 0);
  D.V = V;
  for (const SimplexIndex& f : faces_of(D.simplex)) D.a.insert_or_assign(f, FMatrix(F, 1, 1));
  REQUIRE(validate_diagram(D).empty());
  CHECK_FALSE(edges_are_quasi_isos(D));
  CHECK_FALSE(is_quasi_iso(vertex_inclusion(D, 0)));
}

TEST_CASE("morphism validation detects non-commuting maps") {
  SimplexDiagram D = perturbed_triangle(1, 2, 3);
  SimplexDiagram E = restrict_diagram(D, {0, 1});
  SDMorphism good{E, D, FMatrix::identity(D.field, 2)};
  CHECK(validate_morphism(good).empty());
  CHECK(is_quasi_iso(cylinder_map(good)));
  FMatrix bad(D.field, 2, 2);
  bad.at(1, 0) = 0;
  bad.at(0, 0) = 1;  // not a chain map against the ladder differential
  bad.at(1, 1) = 3;
  SDMorphism broken{E, D, bad};
  CHECK_FALSE(validate_morphism(broken).empty());
}

TEST_CASE("cylinder maps compose along face chains") {
  SimplexDiagram D = perturbed_triangle(1, 2, 3);
  SimplexDiagram edge = restrict_diagram(D, {0, 1});
  SimplexDiagram vert = restrict_diagram(D, {0});
  FMatrix id = FMatrix::identity(D.field, 2);
  ChainMap step1 = cylinder_map({vert, edge, id});
  ChainMap step2 = cylinder_map({edge, D, id});
  ChainMap direct = cylinder_map({vert, D, id});
  CHECK(step2.compose_after(step1).matrix() == direct.matrix());
}

TEST_CASE("random diagrams satisfy every face identity") {
  int primes[] = {2, 3, 5};
  for (int n = 1; n <= 3; ++n) {
    for (unsigned seed = 0; seed < 10; ++seed) {
      PrimeField F(primes[seed % 3]);
      CAPTURE(n);
      CAPTURE(seed);
      SimplexDiagram D = random_diagram(F, n, 2, seed);
      CHECK(validate_diagram(D).empty());
      CochainComplex c = mapping_cylinder(D);  // throws if d^2 != 0
      CHECK(c.module().dim() == D.V.dim() * static_cast<int>(faces_of(D.simplex).size()));
      CHECK(edges_are_quasi_isos(D));
      CHECK(is_quasi_iso(vertex_inclusion(D, n)));
    }
  }
}

TEST_CASE("random diagrams reproduce deterministically") {
  PrimeField F(3);
  SimplexDiagram a = random_diagram(F, 2, 2, 7);
  SimplexDiagram b = random_diagram(F, 2, 2, 7);
  for (const auto& [face, m] : a.a) CHECK(m == b.a.at(face));
}
