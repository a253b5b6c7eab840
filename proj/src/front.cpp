#include "frontsheaf/front.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frontsheaf {

namespace {

bool cell_order(const SimplexIndex& a, const SimplexIndex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string pair_name(const SimplexIndex& F, const SimplexIndex& J) {
  return simplex_name(F) + " <= " + simplex_name(J);
}

}  // namespace

void FrontComplex::add_simplex(const SimplexIndex& I) {
  simplex_dim(I);  // validates
  for (const SimplexIndex& f : faces_of(I)) {
    if (cell_set_.insert(f).second) cells_.push_back(f);
  }
  std::sort(cells_.begin(), cells_.end(), cell_order);
}

void FrontComplex::set_sheets(const SimplexIndex& I, CellSheets data) {
  if (!has_cell(I)) throw std::invalid_argument("unknown simplex " + simplex_name(I));
  for (auto& block : data.blocks) std::sort(block.begin(), block.end());
  sheets_[I] = std::move(data);
}

void FrontComplex::set_iota(const SimplexIndex& face, const SimplexIndex& coface,
                            std::map<std::string, std::string> map) {
  iota_[{face, coface}] = std::move(map);
}

void FrontComplex::add_cusp(const SimplexIndex& face, const SimplexIndex& coface,
                            CuspPair pair) {
  cusps_[{face, coface}].push_back(std::move(pair));
}

void FrontComplex::set_cusp_sheet_vertex(int vertex, const std::string& sheet) {
  cusp_sheet_vertex_[vertex] = sheet;
}

void FrontComplex::tag_triple_point(int vertex) { triple_points_.insert(vertex); }

std::vector<SimplexIndex> FrontComplex::cells_of_dim(int d) const {
  std::vector<SimplexIndex> out;
  for (const SimplexIndex& c : cells_)
    if (simplex_dim(c) == d) out.push_back(c);
  return out;
}

bool FrontComplex::has_cell(const SimplexIndex& I) const { return cell_set_.count(I) != 0; }

int FrontComplex::dim() const {
  int d = -1;
  for (const SimplexIndex& c : cells_) d = std::max(d, simplex_dim(c));
  return d;
}

const CellSheets& FrontComplex::sheets(const SimplexIndex& I) const {
  static const CellSheets empty;
  auto it = sheets_.find(I);
  return it == sheets_.end() ? empty : it->second;
}

std::vector<std::string> FrontComplex::sheet_order(const SimplexIndex& I) const {
  std::vector<std::string> out;
  for (const auto& block : sheets(I).blocks)
    for (const auto& s : block) out.push_back(s);
  return out;
}

int FrontComplex::mu(const SimplexIndex& I, const std::string& sheet) const {
  const auto& m = sheets(I).mu;
  auto it = m.find(sheet);
  if (it == m.end())
    throw std::out_of_range("no Maslov value for sheet " + sheet + " over " +
                            simplex_name(I));
  return it->second;
}

bool FrontComplex::strictly_above(const SimplexIndex& I, const std::string& hi,
                                  const std::string& lo) const {
  const auto& blocks = sheets(I).blocks;
  int bh = -1, bl = -1;
  for (size_t b = 0; b < blocks.size(); ++b)
    for (const auto& s : blocks[b]) {
      if (s == hi) bh = static_cast<int>(b);
      if (s == lo) bl = static_cast<int>(b);
    }
  if (bh < 0 || bl < 0) throw std::out_of_range("unknown sheet over " + simplex_name(I));
  return bh < bl;
}

std::vector<SimplexIndex> FrontComplex::covers_of(const SimplexIndex& I) const {
  std::vector<SimplexIndex> out;
  for (const SimplexIndex& c : cells_)
    if (c.size() == I.size() + 1 && is_face_of(I, c)) out.push_back(c);
  return out;
}

std::vector<SimplexIndex> FrontComplex::covered_by(const SimplexIndex& I) const {
  std::vector<SimplexIndex> out;
  for (const SimplexIndex& c : faces_of(I))
    if (c.size() + 1 == I.size()) out.push_back(c);
  return out;
}

std::map<std::string, std::string> FrontComplex::iota_one_step(
    const SimplexIndex& face, const SimplexIndex& coface) const {
  auto it = iota_.find({face, coface});
  if (it != iota_.end()) return it->second;
  if (sheet_order(face).empty()) return {};
  throw std::invalid_argument("missing inclusion map for " + pair_name(face, coface));
}

std::map<std::string, std::string> FrontComplex::iota(const SimplexIndex& face,
                                                      const SimplexIndex& coface) const {
  if (!is_face_of(face, coface))
    throw std::invalid_argument(pair_name(face, coface) + " is not a face pair");
  if (face == coface) {
    std::map<std::string, std::string> id;
    for (const auto& s : sheet_order(face)) id[s] = s;
    return id;
  }
  if (face.size() + 1 == coface.size()) return iota_one_step(face, coface);
  // Compose along the first intermediate covering cell.
  for (const SimplexIndex& mid : covers_of(face)) {
    if (!is_face_of(mid, coface)) continue;
    auto lo = iota(face, mid);
    auto hi = iota(mid, coface);
    std::map<std::string, std::string> out;
    for (const auto& [s, t] : lo) {
      auto it = hi.find(t);
      if (it == hi.end())
        throw std::invalid_argument("inclusion maps do not compose along " +
                                    pair_name(face, coface));
      out[s] = it->second;
    }
    return out;
  }
  throw std::invalid_argument("no covering chain for " + pair_name(face, coface));
}

std::vector<CuspPair> FrontComplex::cusp_pairs_one_step(const SimplexIndex& face,
                                                        const SimplexIndex& coface) const {
  auto it = cusps_.find({face, coface});
  return it == cusps_.end() ? std::vector<CuspPair>{} : it->second;
}

std::vector<CuspPair> FrontComplex::cusp_pairs(const SimplexIndex& face,
                                               const SimplexIndex& coface) const {
  if (!is_face_of(face, coface) || face == coface)
    throw std::invalid_argument(pair_name(face, coface) + " is not a strict face pair");
  if (face.size() + 1 == coface.size()) return cusp_pairs_one_step(face, coface);
  for (const SimplexIndex& mid : covers_of(face)) {
    if (!is_face_of(mid, coface)) continue;
    std::vector<CuspPair> out;
    auto up = iota(mid, coface);
    for (const CuspPair& p : cusp_pairs(face, mid)) {
      auto u = up.find(p.upper), l = up.find(p.lower);
      if (u == up.end() || l == up.end())
        throw std::invalid_argument("cusp pair does not lift along " +
                                    pair_name(face, coface));
      out.push_back({u->second, l->second});
    }
    for (const CuspPair& p : cusp_pairs(mid, coface)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
  }
  throw std::invalid_argument("no covering chain for " + pair_name(face, coface));
}

std::optional<std::string> FrontComplex::cusp_sheet_at_vertex(int vertex) const {
  auto it = cusp_sheet_vertex_.find(vertex);
  if (it == cusp_sheet_vertex_.end()) return std::nullopt;
  return it->second;
}

bool FrontComplex::is_triple_point(int vertex) const {
  return triple_points_.count(vertex) != 0;
}

GradedModule FrontComplex::V(const SimplexIndex& I) const {
  if (!has_cell(I)) throw std::out_of_range("unknown simplex " + simplex_name(I));
  GradedModule m;
  for (const auto& s : sheet_order(I)) m.add(s, -mu(I, s));
  return m;
}

GradedLinearMap FrontComplex::projection_p(PrimeField f, const SimplexIndex& face,
                                           const SimplexIndex& coface) const {
  GradedModule src = V(coface), tgt = V(face);
  FMatrix m(f, tgt.dim(), src.dim());
  for (const auto& [s, t] : iota(face, coface)) m.at(tgt.index(s), src.index(t)) = 1;
  return GradedLinearMap(std::move(src), std::move(tgt), 0, std::move(m));
}

std::vector<std::string> FrontComplex::validate() const {
  std::vector<std::string> diags;
  auto fail = [&](const std::string& msg) { diags.push_back(msg); };

  // --- base complex shape (only meaningful checks for a 2-dim base) ---
  if (dim() == 2) {
    for (const SimplexIndex& e : cells_of_dim(1)) {
      if (covers_of(e).size() > 2)
        fail("base: edge " + simplex_name(e) + " borders more than two triangles");
    }
    for (const SimplexIndex& v : cells_of_dim(0)) {
      // Link of a vertex must be a simple path or a single cycle.
      std::map<int, std::vector<int>> link;
      for (const SimplexIndex& T : cells_of_dim(2)) {
        if (!is_face_of(v, T)) continue;
        std::vector<int> rest;
        for (int u : T)
          if (u != v[0]) rest.push_back(u);
        link[rest[0]].push_back(rest[1]);
        link[rest[1]].push_back(rest[0]);
      }
      bool ok = true;
      int odd = 0;
      for (const auto& [u, nb] : link) {
        (void)u;
        if (nb.size() > 2) ok = false;
        if (nb.size() == 1) ++odd;
      }
      if (odd != 0 && odd != 2) ok = false;
      // Connectivity of the link graph.
      if (ok && !link.empty()) {
        std::set<int> seen;
        std::vector<int> todo{link.begin()->first};
        while (!todo.empty()) {
          int u = todo.back();
          todo.pop_back();
          if (!seen.insert(u).second) continue;
          for (int w : link.at(u)) todo.push_back(w);
        }
        if (seen.size() != link.size()) ok = false;
      }
      if (!ok)
        fail("base: closed star of vertex " + simplex_name(v) + " is not a disk");
    }
  }

  // --- per-cell sheet systems ---
  for (const SimplexIndex& c : cells_) {
    const CellSheets& cs = sheets(c);
    std::set<std::string> seen;
    for (const auto& block : cs.blocks) {
      if (block.empty()) fail("sheets: empty block over " + simplex_name(c));
      size_t limit =
          (simplex_dim(c) == 0 && is_triple_point(c[0])) ? 3 : 2;
      if (block.size() > limit)
        fail("sheets: block of size " + std::to_string(block.size()) + " over " +
             simplex_name(c) + " exceeds the crossing limit");
      for (const auto& s : block) {
        if (!seen.insert(s).second)
          fail("sheets: duplicate sheet " + s + " over " + simplex_name(c));
        if (!cs.mu.count(s))
          fail("sheets: no Maslov value for " + s + " over " + simplex_name(c));
      }
    }
    if (simplex_dim(c) >= 1) {
      int crossings = 0;
      for (const auto& block : cs.blocks)
        if (block.size() >= 2) ++crossings;
      int cusps = 0;
      for (const SimplexIndex& J : covers_of(c))
        cusps += static_cast<int>(cusp_pairs_one_step(c, J).size());
      if (simplex_dim(c) == 1 && crossings + cusps > 1)
        fail("edge singularity count: more than one singular locus over open edge " +
             simplex_name(c));
      if (simplex_dim(c) >= 2 && (crossings > 0 || cusps > 0) && simplex_dim(c) == 2) {
        // Crossings over an open 2-cell are codimension-1 loci off the
        // 1-skeleton; forbidden by compatibility.
        if (crossings > 0)
          fail("compatibility: crossing block over open 2-cell " + simplex_name(c));
      }
    }
  }

  // --- covering-pair data: inclusions and cusp pairs ---
  for (const SimplexIndex& F : cells_) {
    for (const SimplexIndex& J : covers_of(F)) {
      std::map<std::string, std::string> io;
      try {
        io = iota_one_step(F, J);
      } catch (const std::exception& e) {
        fail(std::string("inclusion: ") + e.what());
        continue;
      }
      auto src = sheet_order(F);
      auto tgt = sheet_order(J);
      std::set<std::string> tgt_set(tgt.begin(), tgt.end());
      std::set<std::string> image;
      bool io_ok = true;
      for (const auto& s : src) {
        auto it = io.find(s);
        if (it == io.end()) {
          fail("inclusion: sheet " + s + " unmapped for " + pair_name(F, J));
          io_ok = false;
          continue;
        }
        if (!tgt_set.count(it->second)) {
          fail("inclusion: image sheet " + it->second + " unknown for " + pair_name(F, J));
          io_ok = false;
          continue;
        }
        if (!image.insert(it->second).second) {
          fail("inclusion: not injective for " + pair_name(F, J));
          io_ok = false;
        }
        if (mu(F, s) != mu(J, it->second))
          fail("inclusion: Maslov value changes along " + pair_name(F, J) +
               " at sheet " + s);
      }
      if (!io_ok) continue;
      // Order compatibility in both directions.
      for (const auto& a : src)
        for (const auto& b : src) {
          if (a == b) continue;
          if (strictly_above(F, a, b) && !strictly_above(J, io.at(a), io.at(b)))
            fail("inclusion: order not preserved along " + pair_name(F, J));
          if (strictly_above(J, io.at(a), io.at(b)) && strictly_above(F, b, a))
            fail("inclusion: order compatibility fails along " + pair_name(F, J));
        }
      // Cusp pairs must exactly partition the complement of the image.
      std::set<std::string> rest;
      for (const auto& t : tgt)
        if (!image.count(t)) rest.insert(t);
      for (const CuspPair& p : cusp_pairs_one_step(F, J)) {
        for (const std::string* s : {&p.upper, &p.lower}) {
          if (!rest.erase(*s))
            fail("cusp: sheet " + *s + " of pair over " + pair_name(F, J) +
                 " is not an unmatched coface sheet");
        }
        if (!tgt_set.count(p.upper) || !tgt_set.count(p.lower)) continue;
        if (!strictly_above(J, p.upper, p.lower))
          fail("cusp: pair over " + pair_name(F, J) + " is not ordered upper above lower");
        if (mu(J, p.upper) != mu(J, p.lower) + 1)
          fail("Maslov step: cusp pair (" + p.upper + "," + p.lower + ") over " +
               pair_name(F, J));
        // The cusping pair must be adjacent in z: no sheet strictly between.
        for (const auto& t : tgt)
          if (t != p.upper && t != p.lower && strictly_above(J, p.upper, t) &&
              strictly_above(J, t, p.lower))
            fail("cusp: sheet " + t + " lies strictly between cusping pair over " +
                 pair_name(F, J));
      }
      if (!rest.empty())
        fail("cusp: unmatched sheets over " + pair_name(F, J) +
             " are not paired at cusps");
    }
  }

  // --- route independence for codimension-2 face pairs ---
  for (const SimplexIndex& F : cells_) {
    for (const SimplexIndex& K : cells_) {
      if (K.size() != F.size() + 2 || !is_face_of(F, K)) continue;
      std::vector<std::map<std::string, std::string>> iotas;
      std::vector<std::vector<CuspPair>> cusps;
      bool route_err = false;
      for (const SimplexIndex& mid : covers_of(F)) {
        if (!is_face_of(mid, K)) continue;
        try {
          auto lo = iota_one_step(F, mid);
          auto hi = iota_one_step(mid, K);
          std::map<std::string, std::string> comp;
          for (const auto& [s, t] : lo) comp[s] = hi.at(t);
          iotas.push_back(comp);
          std::vector<CuspPair> cp;
          for (const CuspPair& p : cusp_pairs_one_step(F, mid))
            cp.push_back({hi.at(p.upper), hi.at(p.lower)});
          for (const CuspPair& p : cusp_pairs_one_step(mid, K)) cp.push_back(p);
          std::sort(cp.begin(), cp.end());
          cusps.push_back(cp);
        } catch (const std::exception&) {
          route_err = true;
        }
      }
      if (route_err) continue;  // earlier diagnostics already cover this
      for (size_t i = 1; i < iotas.size(); ++i)
        if (iotas[i] != iotas[0])
          fail("inclusion: routes disagree for " + pair_name(F, K));
      for (size_t i = 1; i < cusps.size(); ++i)
        if (cusps[i] != cusps[0])
          fail("cusp: routes disagree for " + pair_name(F, K));
    }
  }

  // --- vertex configurations ---
  if (dim() == 2) {
    for (const SimplexIndex& v : cells_of_dim(0)) {
      int crossing_blocks = 0, triple_blocks = 0;
      for (const auto& block : sheets(v).blocks) {
        if (block.size() == 2) ++crossing_blocks;
        if (block.size() == 3) ++triple_blocks;
      }
      // Count distinct cusp points over v by identifying cusp germs through
      // their induced pairs over a common 2-cell coface.
      std::set<std::vector<CuspPair>> signatures;
      bool has_cusp_germ = false;
      for (const SimplexIndex& T : cells_) {
        if (simplex_dim(T) != 2 || !is_face_of(v, T)) continue;
        std::vector<CuspPair> ps;
        try {
          ps = cusp_pairs(v, T);
        } catch (const std::exception&) {
          continue;
        }
        if (!ps.empty()) {
          has_cusp_germ = true;
          signatures.insert(ps);
        }
      }
      // With at most one cusp point per vertex in the allowed taxonomy, all
      // nonempty signatures must contain a single pair.
      int cusp_points = 0;
      for (const auto& sig : signatures)
        cusp_points = std::max(cusp_points, static_cast<int>(sig.size()));
      if (!has_cusp_germ) cusp_points = 0;

      int loci = crossing_blocks + cusp_points;
      if (triple_blocks > 1 || (triple_blocks == 1 && loci > 0))
        fail("vertex configuration: unsupported singularity combination at " +
             simplex_name(v));
      if (loci > 2)
        fail("vertex configuration: more than two transverse arcs at " +
             simplex_name(v));
      auto fcu = cusp_sheet_at_vertex(v[0]);
      if (fcu) {
        if (cusp_points == 0)
          fail("vertex configuration: cusp-sheet tag without a cusp at " +
               simplex_name(v));
        if (!sheets(v).mu.count(*fcu))
          fail("vertex configuration: cusp-sheet tag names unknown sheet at " +
               simplex_name(v));
      }
    }
  }

  return diags;
}

}  // namespace frontsheaf
