#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "frontsheaf/front_io.hpp"

using namespace frontsheaf;

namespace {

FrontComplex load(const std::string& stem) {
  return load_front_file(std::string(FRONT_DATA_DIR) + "/" + stem + ".front");
}

const char* kCorpus[] = {"one_sheet",        "two_sheets",        "crossing_circle",
                         "unknot_sphere",    "cusp_sheet_vertex", "triple_point_vertex"};

}  // namespace

TEST_CASE("every corpus front validates cleanly") {
  for (const char* stem : kCorpus) {
    CAPTURE(stem);
    FrontComplex f = load(stem);
    auto diags = f.validate();
    for (const auto& d : diags) MESSAGE(d);
    CHECK(diags.empty());
    CHECK(f.dim() == 2);
  }
}

TEST_CASE("one sheet: modules everywhere one dimensional") {
  FrontComplex f = load("one_sheet");
  for (const SimplexIndex& c : f.cells()) {
    GradedModule v = f.V(c);
    REQUIRE(v.dim() == 1);
    CHECK(v.degree(0) == 0);
  }
}

TEST_CASE("two sheets: degrees read off the Maslov potential") {
  FrontComplex f = load("two_sheets");
  GradedModule v = f.V({0, 1, 2});
  REQUIRE(v.dim() == 2);
  CHECK(v.label(0) == "A");
  CHECK(v.degree(0) == 0);
  CHECK(v.degree(1) == 0);
}

TEST_CASE("unknot sphere: zero module under the cusp arc") {
  FrontComplex f = load("unknot_sphere");
  CHECK(f.V({2, 3}).dim() == 0);
  CHECK(f.V({6}).dim() == 0);
  CHECK(f.V({1, 2, 3}).dim() == 2);
  // Degrees are minus the Maslov potential.
  GradedModule v = f.V({1, 2, 3});
  CHECK(v.degree(v.index("U")) == -1);
  CHECK(v.degree(v.index("L")) == 0);
}

TEST_CASE("projection kills cusp pairs") {
  FrontComplex f = load("unknot_sphere");
  PrimeField F2(2);
  auto p = f.projection_p(F2, {2, 3}, {1, 2, 3});
  CHECK(p.matrix().rows() == 0);
  CHECK(p.matrix().cols() == 2);

  auto q = f.projection_p(F2, {2}, {1, 2, 3});
  CHECK(q.matrix().rows() == 0);
}

TEST_CASE("projection composes along face chains") {
  FrontComplex f = load("cusp_sheet_vertex");
  PrimeField F3(3);
  auto direct = f.projection_p(F3, {0}, {0, 2, 3});
  auto step1 = f.projection_p(F3, {0, 2}, {0, 2, 3});
  auto step2 = f.projection_p(F3, {0}, {0, 2});
  CHECK(direct.matrix() == (step2.matrix() * step1.matrix()));
}

TEST_CASE("cusp pairs derived for deeper face pairs") {
  FrontComplex f = load("unknot_sphere");
  auto ps = f.cusp_pairs({2}, {1, 2, 3});
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].upper == "U");
  CHECK(ps[0].lower == "L");
}

TEST_CASE("Maslov step violation is reported") {
  std::istringstream in(R"(
name bad_step
simplex 0 1
sheets 0 1 : U/0 | L/0
cusp 0 -> 0 1 : U > L
cusp 1 -> 0 1 : U > L
)");
  FrontComplex f = parse_front(in);
  auto diags = f.validate();
  bool found = false;
  for (const auto& d : diags)
    if (d.find("Maslov step") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("two singular loci over one edge are rejected") {
  std::istringstream in(R"(
name bad_edge
simplex 0 1 2
sheets 0 : A/0 = B/0 | C/0 = D/0
sheets 1 : A/0 = B/0 | C/0 = D/0
sheets 2 : A/0 | B/0 | C/0 | D/0
sheets 0 1 : A/0 = B/0 | C/0 = D/0
sheets 0 2 : A/0 | B/0 | C/0 | D/0
sheets 1 2 : A/0 | B/0 | C/0 | D/0
sheets 0 1 2 : A/0 | B/0 | C/0 | D/0
iota 0 -> 0 1 : id
iota 0 -> 0 2 : id
iota 1 -> 0 1 : id
iota 1 -> 1 2 : id
iota 2 -> 0 2 : id
iota 2 -> 1 2 : id
iota 0 1 -> 0 1 2 : id
iota 0 2 -> 0 1 2 : id
iota 1 2 -> 0 1 2 : id
)");
  FrontComplex f = parse_front(in);
  auto diags = f.validate();
  bool found = false;
  for (const auto& d : diags)
    if (d.find("edge singularity count") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("parser reports malformed files with line numbers") {
  std::istringstream in("simplex 0 1\nsheets 0 1\n");
  CHECK_THROWS_AS(parse_front(in), FrontParseError);
  std::istringstream in2("bogus 1 2 3\n");
  CHECK_THROWS_AS(parse_front(in2), FrontParseError);
}
