#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "frontsheaf/front_io.hpp"
#include "frontsheaf/strat.hpp"

using namespace frontsheaf;

namespace {

FrontComplex load(const std::string& stem) {
  return load_front_file(std::string(FRONT_DATA_DIR) + "/" + stem + ".front");
}

const char* kCorpus[] = {"one_sheet",         "two_sheets",   "crossing_circle",
                         "unknot_sphere",     "cusp_sheet_vertex",
                         "triple_point_vertex", "cusp_strip", "crossing_strip"};

std::map<StratumType, int> census(const StratPoset& P, const HandleCell& h) {
  std::map<StratumType, int> out;
  for (int id : P.strata_of(h)) out[P.stratum(id).type]++;
  return out;
}

int find_stratum(const StratPoset& P, const HandleCell& h, StratumType t,
                 const std::vector<std::string>& below) {
  for (int id : P.strata_of(h)) {
    const Stratum& s = P.stratum(id);
    if (s.type == t && s.below == below) return id;
  }
  return -1;
}

}  // namespace

TEST_CASE("handle decomposition of the one-sheet disk") {
  FrontComplex f = load("one_sheet");
  auto hs = build_handles(f);
  CHECK(hs.size() == 19);
  std::map<int, int> by_dim;
  for (const auto& h : hs) by_dim[h.dim()]++;
  CHECK(by_dim[2] == 7);  // one per face pair (I, J) with dim J - dim I = 0
  CHECK(by_dim[1] == 9);
  CHECK(by_dim[0] == 3);
}

TEST_CASE("handle counts compute the Euler characteristic of the base") {
  for (const char* stem : kCorpus) {
    CAPTURE(stem);
    FrontComplex f = load(stem);
    int chi = 0;
    for (const auto& h : build_handles(f)) chi += h.dim() % 2 == 0 ? 1 : -1;
    CHECK(chi == (std::string(stem) == "unknot_sphere" ? 2 : 1));
  }
}

TEST_CASE("every 0-dimensional handle cell has exactly four covering edges") {
  for (const char* stem : {"one_sheet", "unknot_sphere", "triple_point_vertex"}) {
    CAPTURE(stem);
    FrontComplex f = load(stem);
    auto hs = build_handles(f);
    for (const auto& h : hs) {
      if (h.dim() != 0) continue;
      int covers = 0;
      for (const auto& h2 : hs)
        if (h2.dim() == 1 && handle_leq(h, h2)) ++covers;
      CHECK(covers == 4);
    }
  }
}

TEST_CASE("degenerate bases are rejected") {
  // A 1-dimensional base.
  FrontComplex line;
  line.add_simplex({0, 1});
  line.set_sheets({0}, {{{"S"}}, {{"S", 0}}});
  line.set_sheets({1}, {{{"S"}}, {{"S", 0}}});
  line.set_sheets({0, 1}, {{{"S"}}, {{"S", 0}}});
  line.set_iota({0}, {0, 1}, {{"S", "S"}});
  line.set_iota({1}, {0, 1}, {{"S", "S"}});
  CHECK_THROWS_AS(build_handles(line), std::invalid_argument);
  // Two triangles glued along a single vertex: the link of 0 is disconnected.
  FrontComplex pinch;
  pinch.add_simplex({0, 1, 2});
  pinch.add_simplex({0, 3, 4});
  for (const SimplexIndex& c : pinch.cells())
    pinch.set_sheets(c, {{{"S"}}, {{"S", 0}}});
  for (const SimplexIndex& c : pinch.cells())
    for (const SimplexIndex& d : pinch.covers_of(c)) pinch.set_iota(c, d, {{"S", "S"}});
  CHECK_THROWS_AS(build_handles(pinch), std::invalid_argument);
}

TEST_CASE("unmatched vertical data raises a construction error") {
  // Sheets U, L over everything except the vertex 0, with no cusp data to
  // account for their disappearance.
  FrontComplex f;
  f.add_simplex({0, 1, 2});
  for (const SimplexIndex& c : f.cells()) {
    if (c == SimplexIndex{0})
      f.set_sheets(c, {{}, {}});
    else
      f.set_sheets(c, {{{"U"}, {"L"}}, {{"U", 1}, {"L", 0}}});
  }
  for (const SimplexIndex& c : f.cells())
    for (const SimplexIndex& d : f.covers_of(c)) {
      if (c == SimplexIndex{0})
        f.set_iota(c, d, {});
      else
        f.set_iota(c, d, {{"U", "U"}, {"L", "L"}});
    }
  CHECK_THROWS_AS(build_strata(f), std::runtime_error);
}

TEST_CASE("fiberwise Euler signature per handle cell") {
  // Sum of (-1)^dim over the strata of one handle cell. When every stratum
  // is cell-like this equals (-1)^(dim h + 1); the nine handles of the fan
  // front whose cusp arc lies on the base boundary carry half-open strata
  // and the signature doubles (values verified by hand).
  std::set<std::string> defect = {
      "h((0),(0))",     "h((0),(0,1))",   "h((0),(0,4))",
      "h((0,1),(0,1))", "h((0,4),(0,4))", "h((1),(0,1))",
      "h((1),(1))",     "h((4),(0,4))",   "h((4),(4))"};
  for (const char* stem : kCorpus) {
    CAPTURE(stem);
    FrontComplex f = load(stem);
    StratPoset P = build_strata(f);
    std::map<HandleCell, int> fib;
    for (const auto& s : P.strata()) fib[s.handle] += s.dim % 2 == 0 ? 1 : -1;
    for (const auto& h : P.handles()) {
      CAPTURE(handle_name(h));
      int want = h.dim() % 2 == 0 ? -1 : 1;
      if (std::string(stem) == "cusp_sheet_vertex" && defect.count(handle_name(h)))
        want *= 2;
      CHECK(fib[h] == want);
    }
  }
}

TEST_CASE("one-sheet disk: complete stratum inventory") {
  FrontComplex f = load("one_sheet");
  StratPoset P = build_strata(f);
  CHECK(P.strata().size() == 57);
  std::map<StratumType, int> tot;
  for (const auto& s : P.strata()) tot[s.type]++;
  CHECK(tot[StratumType::ThreeStratum] == 14);
  CHECK(tot[StratumType::Legendrian2] == 7);
  CHECK(tot[StratumType::Vertical2] == 18);
  CHECK(tot[StratumType::FV] == 9);
  CHECK(tot[StratumType::V2] == 6);
  CHECK(tot[StratumType::FV2] == 3);
  // 2-handle fiber: region, sheet, region.
  auto c = census(P, {{0, 1, 2}, {0, 1, 2}});
  CHECK(c[StratumType::ThreeStratum] == 2);
  CHECK(c[StratumType::Legendrian2] == 1);
}

TEST_CASE("triple point 0-handle: point, six arcs, twelve sheets, eight regions") {
  FrontComplex f = load("triple_point_vertex");
  StratPoset P = build_strata(f);
  auto c = census(P, {{0}, {0}});
  CHECK(c[StratumType::F3] == 1);
  CHECK(c[StratumType::F2] == 6);
  CHECK(c[StratumType::Legendrian2] == 12);
  CHECK(c[StratumType::ThreeStratum] == 8);
}

TEST_CASE("cusp-crossing 0-handle over the fan vertex") {
  FrontComplex f = load("cusp_sheet_vertex");
  StratPoset P = build_strata(f);
  auto c = census(P, {{0}, {0}});
  CHECK(c[StratumType::FCu] == 1);
  CHECK(c[StratumType::F2] == 2);
  CHECK(c[StratumType::Cu] == 2);
  CHECK(c[StratumType::Legendrian2] == 7);
  CHECK(c[StratumType::ThreeStratum] == 6);
}

TEST_CASE("cusp 1-handle: branches, wedge, and the region around the tip") {
  FrontComplex f = load("cusp_strip");
  StratPoset P = build_strata(f);
  HandleCell h{{0, 1}, {0, 1}};
  auto c = census(P, h);
  CHECK(c[StratumType::Cu] == 1);
  CHECK(c[StratumType::Legendrian2] == 5);       // T1, T4, T5, both branches
  CHECK(c[StratumType::ThreeStratum] == 5);      // above, around, wedge, mid, below
  // Exactly the wedge and the upper branch are exceptional.
  int exc = 0;
  for (int id : P.strata_of(h))
    if (!P.stratum(id).exceptional.empty()) ++exc;
  CHECK(exc == 2);
  // The cusp arc lies in the closure of its lower branch; the induced map is
  // generalized-downward but not downward.
  int cu = find_stratum(P, h, StratumType::Cu, {"T4", "T5"});
  int lower = -1;
  for (int id : P.strata_of(h)) {
    const Stratum& s = P.stratum(id);
    if (s.type == StratumType::Legendrian2 && s.below == std::vector<std::string>{"T4", "T5"} &&
        s.slot.find("(L)") != std::string::npos)
      lower = id;
  }
  REQUIRE(cu != -1);
  REQUIRE(lower != -1);
  const StratEdge* e = P.edge(cu, lower);
  REQUIRE(e != nullptr);
  CHECK_FALSE(e->downward);
  CHECK(e->generalized_downward);
  CHECK_FALSE(e->same_level);
}

TEST_CASE("vertical slice over the H-vertex and H-edge of the cusp strip") {
  FrontComplex f = load("cusp_strip");
  StratPoset P = build_strata(f);
  // Over the H-vertex inside the northern triangle: the open interval between
  // the branches has exactly the three lowest sheets below it and no cusp
  // component in its picture.
  int s = find_stratum(P, {{0}, {0, 1, 2}}, StratumType::V2, {"L", "T4", "T5"});
  REQUIRE(s != -1);
  CHECK(P.stratum(s).exceptional.empty());
  // Over the H-edge the wedge survives as an exceptional vertical piece with
  // two sheets below it (the non-exceptional region around the cusp tip has
  // the same two sheets below).
  int sp = -1;
  for (int id : P.strata_of({{0}, {0, 1}})) {
    const Stratum& st = P.stratum(id);
    if (st.type == StratumType::Vertical2 &&
        st.below == std::vector<std::string>{"T4", "T5"} && !st.exceptional.empty())
      sp = id;
  }
  REQUIRE(sp != -1);
  CHECK(P.stratum(sp).exceptional.size() == 1);
  // The H-vertex stratum degenerates to the H-edge one.
  CHECK(P.leq(s, sp));
  // Exactly two strata over the H-edge cell are exceptional (the wedge and
  // the upper branch).
  int exc = 0;
  for (int id : P.strata_of({{0}, {0, 1}}))
    if (!P.stratum(id).exceptional.empty()) ++exc;
  CHECK(exc == 2);
}

TEST_CASE("crossing 1-handle: the six regions of the double-sheet square") {
  FrontComplex f = load("crossing_strip");
  StratPoset P = build_strata(f);
  HandleCell h{{0, 1}, {0, 1}};
  std::set<std::vector<std::string>> regions;
  for (int id : P.strata_of(h))
    if (P.stratum(id).type == StratumType::ThreeStratum)
      regions.insert(P.stratum(id).below);
  std::set<std::vector<std::string>> want = {{},
                                             {"T4"},
                                             {"T3", "T4"},
                                             {"T2", "T4"},
                                             {"T2", "T3", "T4"},
                                             {"T1", "T2", "T3", "T4"}};
  CHECK(regions == want);
}

TEST_CASE("crossing squares: both upper half-sheets and the region above") {
  FrontComplex f = load("crossing_strip");
  StratPoset P = build_strata(f);
  auto squares = P.crossing_squares();
  CHECK(squares.size() == 7);  // one per crossing arc stratum
  bool found = false;
  for (const auto& sq : squares) {
    const Stratum& o = P.stratum(sq.O);
    if (!(o.handle == HandleCell{{0, 1}, {0, 1}})) continue;
    found = true;
    std::set<std::vector<std::string>> sides = {P.stratum(sq.NW).below,
                                                P.stratum(sq.NE).below};
    std::set<std::vector<std::string>> want = {{"T3", "T4"}, {"T2", "T4"}};
    CHECK(sides == want);
    CHECK(P.stratum(sq.N).below == std::vector<std::string>{"T2", "T3", "T4"});
    // All four closure relations exist; the O -> N map is neither downward
    // nor between strata of equal front level.
    CHECK(P.leq(sq.O, sq.NW));
    CHECK(P.leq(sq.O, sq.NE));
    CHECK(P.leq(sq.NW, sq.N));
    CHECK(P.leq(sq.NE, sq.N));
    const StratEdge* e = P.edge(sq.O, sq.N);
    REQUIRE(e != nullptr);
    CHECK_FALSE(e->downward);
    CHECK_FALSE(e->same_level);
  }
  CHECK(found);
}

TEST_CASE("sheet strata map downward to the region directly below") {
  FrontComplex f = load("one_sheet");
  StratPoset P = build_strata(f);
  HandleCell h{{0, 1, 2}, {0, 1, 2}};
  int sheet = find_stratum(P, h, StratumType::Legendrian2, {});
  int above = find_stratum(P, h, StratumType::ThreeStratum, {"S"});
  int below = find_stratum(P, h, StratumType::ThreeStratum, {});
  REQUIRE(sheet != -1);
  REQUIRE(above != -1);
  REQUIRE(below != -1);
  CHECK(P.edge(sheet, below)->downward);
  CHECK_FALSE(P.edge(sheet, above)->downward);
  CHECK(P.upward_region(sheet) == above);
}

TEST_CASE("closure relation is a strict partial order") {
  for (const char* stem : {"cusp_sheet_vertex", "crossing_strip"}) {
    CAPTURE(stem);
    FrontComplex f = load(stem);
    StratPoset P = build_strata(f);
    for (const auto& e : P.edges()) {
      CHECK_FALSE(P.leq(e.to, e.from));
      // Relations only between handle cells in closure position.
      CHECK(handle_leq(P.stratum(e.from).handle, P.stratum(e.to).handle));
    }
    // Transitivity.
    for (const auto& e : P.edges())
      for (const auto& e2 : P.edges())
        if (e.to == e2.from) CHECK(P.leq(e.from, e2.to));
  }
}

TEST_CASE("top-dimensional squares around an H-vertex slice") {
  FrontComplex f = load("one_sheet");
  StratPoset P = build_strata(f);
  auto squares = P.top_squares();
  CHECK(!squares.empty());
  for (const auto& sq : squares) {
    CHECK(P.stratum(sq.s1).dim == 1);
    CHECK(P.stratum(sq.s2a).dim == 2);
    CHECK(P.stratum(sq.s2b).dim == 2);
    CHECK(P.stratum(sq.s3).dim == 3);
    CHECK(P.leq(sq.s1, sq.s2a));
    CHECK(P.leq(sq.s1, sq.s2b));
    CHECK(P.leq(sq.s2a, sq.s3));
    CHECK(P.leq(sq.s2b, sq.s3));
  }
  // Each open-interval stratum over an H-vertex sits in four squares, one
  // per quadrant around the vertex of the dual decomposition.
  for (const auto& s : P.strata()) {
    if (s.type != StratumType::V2) continue;
    int n = 0;
    for (const auto& sq : squares)
      if (sq.s1 == s.id) ++n;
    CHECK(n == 4);
  }
}

TEST_CASE("cusp components and their containment on the unknot sphere") {
  FrontComplex f = load("unknot_sphere");
  StratPoset P = build_strata(f);
  CHECK(P.cusp_components().size() == 8);  // one per equator vertex and edge
  // The component in the picture over an equator edge continues into the one
  // over each of its vertices.
  int fine = -1, coarse = -1;
  for (const auto& c : P.cusp_components()) {
    if (c.J == SimplexIndex{2, 3}) fine = c.id;
    if (c.J == SimplexIndex{2}) coarse = c.id;
  }
  REQUIRE(fine != -1);
  REQUIRE(coarse != -1);
  CHECK(P.cusp_contained(fine, coarse));
  for (const auto& c : P.cusp_components()) CHECK(c.lower_mu == 0);
}
