#include "frontsheaf/strat.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace frontsheaf {

namespace {

// ---------------------------------------------------------------------------
// Vertical columns: the z-ordered entities (sheet blocks, crossing blocks,
// cusp loci) over one base cell, top first. Positions interleave gaps and
// entries: gap g sits at position 2g, entry e at position 2e + 1.
// ---------------------------------------------------------------------------

enum class EntryKind { Sheet, Crossing, Triple, Locus, FCu };

struct ZEntry {
  EntryKind kind = EntryKind::Sheet;
  int level = 0;
  std::vector<std::string> sheets;
  std::vector<std::pair<SimplexIndex, CuspPair>> certs;  // loci: witness pairs
};

struct Column {
  std::vector<ZEntry> entries;
  std::map<std::string, int> entry_of_sheet;
  std::map<int, int> locus_in_gap;  // base gap index -> entry index
  std::vector<int> block_entry;     // base block index -> entry index
  int positions() const { return static_cast<int>(entries.size()) * 2 + 1; }
};

struct Slot {
  bool at_block = false;
  int idx = 0;  // block index if at_block, else gap index of the base blocks
};

// Locates the cusp pair p (sheets over the strict coface C) vertically with
// respect to the blocks over D: either level with one block (the locus runs
// through that block's sheet) or inside a gap.
Slot slot_of_pair(const FrontComplex& f, const SimplexIndex& D,
                  const SimplexIndex& C, const CuspPair& p) {
  const auto& cblocks = f.sheets(C).blocks;
  auto block_of = [&](const std::string& s) {
    for (int i = 0; i < static_cast<int>(cblocks.size()); ++i)
      for (const auto& x : cblocks[i])
        if (x == s) return i;
    throw std::runtime_error("cusp sheet " + s + " missing over " + simplex_name(C));
  };
  int bu = block_of(p.upper), bl = block_of(p.lower);
  if (bu > bl)
    throw std::runtime_error("inverted cusp pair over " + simplex_name(C));
  auto inc = f.iota(D, C);
  const auto& dblocks = f.sheets(D).blocks;
  int at = -1, above = 0;
  for (int i = 0; i < static_cast<int>(dblocks.size()); ++i) {
    bool hit = false, above_all = true, below_all = true;
    for (const auto& S : dblocks[i]) {
      int ib = block_of(inc.at(S));
      if (ib == bu || ib == bl) hit = true;
      if (ib >= bu) above_all = false;
      if (ib <= bl) below_all = false;
    }
    if (hit) {
      if (at >= 0 && at != i)
        throw std::runtime_error("ambiguous cusp slot over " + simplex_name(D));
      at = i;
    } else if (above_all) {
      ++above;
    } else if (!below_all) {
      throw std::runtime_error("sheet between cusp branches over " + simplex_name(D));
    }
  }
  if (at >= 0) return {true, at};
  return {false, above};
}

Column build_column(const FrontComplex& f, const SimplexIndex& D) {
  Column col;
  const auto& blocks = f.sheets(D).blocks;
  int d = simplex_dim(D);
  std::map<int, std::vector<std::pair<SimplexIndex, CuspPair>>> gap_loci, at_loci;
  if (d <= 1) {
    for (const SimplexIndex& C : f.covers_of(D))
      for (const CuspPair& p : f.cusp_pairs(D, C)) {
        Slot s = slot_of_pair(f, D, C, p);
        (s.at_block ? at_loci : gap_loci)[s.idx].push_back({C, p});
      }
  }
  col.block_entry.resize(blocks.size(), -1);
  for (int g = 0; g <= static_cast<int>(blocks.size()); ++g) {
    if (auto it = gap_loci.find(g); it != gap_loci.end()) {
      ZEntry e;
      e.kind = EntryKind::Locus;
      e.level = 1;
      e.certs = it->second;
      col.locus_in_gap[g] = static_cast<int>(col.entries.size());
      col.entries.push_back(std::move(e));
    }
    if (g == static_cast<int>(blocks.size())) break;
    ZEntry e;
    e.sheets = blocks[g];
    if (auto it = at_loci.find(g); it != at_loci.end()) {
      if (d != 0 || blocks[g].size() != 1)
        throw std::runtime_error("cusp locus meets a block over " + simplex_name(D));
      auto tag = f.cusp_sheet_at_vertex(D[0]);
      if (!tag || *tag != blocks[g][0])
        throw std::runtime_error("cusp locus crosses untagged sheet " + blocks[g][0] +
                                 " over " + simplex_name(D));
      e.kind = EntryKind::FCu;
      e.level = 2;
      e.certs = it->second;
    } else if (blocks[g].size() == 1) {
      e.kind = EntryKind::Sheet;
      e.level = 0;
    } else if (blocks[g].size() == 2) {
      e.kind = EntryKind::Crossing;
      e.level = 1;
    } else if (blocks[g].size() == 3) {
      if (d != 0 || !f.is_triple_point(D[0]))
        throw std::runtime_error("triple block over non-triple cell " + simplex_name(D));
      e.kind = EntryKind::Triple;
      e.level = 2;
    } else {
      throw std::runtime_error("block of more than three sheets over " + simplex_name(D));
    }
    col.block_entry[g] = static_cast<int>(col.entries.size());
    for (const auto& s : e.sheets)
      col.entry_of_sheet[s] = static_cast<int>(col.entries.size());
    col.entries.push_back(std::move(e));
  }
  return col;
}

// For a covering pair D < Dp: which entry over D each entry over Dp limits
// to. Surviving sheets follow the inclusion, dying branches land on their
// locus, loci continue into loci.
std::vector<int> build_dm(const FrontComplex& f, const SimplexIndex& D,
                          const Column& colD, const SimplexIndex& Dp,
                          const Column& colDp) {
  auto inc = f.iota(D, Dp);
  std::map<std::string, std::string> rev;
  for (const auto& [a, b] : inc) rev[b] = a;
  auto declared = f.cusp_pairs(D, Dp);
  auto slot_entry = [&](const Slot& s) -> int {
    if (s.at_block) return colD.block_entry[s.idx];
    auto it = colD.locus_in_gap.find(s.idx);
    if (it == colD.locus_in_gap.end())
      throw std::runtime_error("unmatched cusp slot between " + simplex_name(D) +
                               " and " + simplex_name(Dp));
    return it->second;
  };
  std::vector<int> dm(colDp.entries.size(), -1);
  for (int ep = 0; ep < static_cast<int>(colDp.entries.size()); ++ep) {
    const ZEntry& E = colDp.entries[ep];
    int target = -1;
    auto meld = [&](int t) {
      if (target == -1)
        target = t;
      else if (target != t)
        throw std::runtime_error("inconsistent vertical matching between " +
                                 simplex_name(D) + " and " + simplex_name(Dp));
    };
    if (E.sheets.empty()) {
      // A bare locus continues into the locus over D. Where possible, route
      // the continuation through a sibling covering cell over which the
      // branch pair still exists as sheets: the slot relative to the open
      // coface can differ from the limit position (the locus may cross a
      // sheet exactly over D).
      for (const auto& [C, p] : E.certs) {
        bool routed = false;
        for (const SimplexIndex& E2 : f.cells()) {
          if (simplex_dim(E2) != simplex_dim(D) + 1 || E2 == Dp) continue;
          if (!is_face_of(D, E2) || !is_face_of(E2, C)) continue;
          auto inc2 = f.iota(E2, C);
          std::map<std::string, std::string> rev2;
          for (const auto& [a, bb] : inc2) rev2[bb] = a;
          auto iu = rev2.find(p.upper), il = rev2.find(p.lower);
          if (iu == rev2.end() || il == rev2.end()) continue;
          meld(slot_entry(slot_of_pair(f, D, E2, {iu->second, il->second})));
          routed = true;
        }
        if (!routed) meld(slot_entry(slot_of_pair(f, D, C, p)));
      }
    } else {
      for (const auto& S : E.sheets) {
        if (auto it = rev.find(S); it != rev.end()) {
          meld(colD.entry_of_sheet.at(it->second));
        } else {
          const CuspPair* found = nullptr;
          for (const auto& p : declared)
            if (p.upper == S || p.lower == S) {
              found = &p;
              break;
            }
          if (!found)
            throw std::runtime_error("sheet " + S + " over " + simplex_name(Dp) +
                                     " has no origin over " + simplex_name(D));
          meld(slot_entry(slot_of_pair(f, D, Dp, *found)));
        }
      }
    }
    if (target == -1)
      throw std::runtime_error("unmatched entry between " + simplex_name(D) +
                               " and " + simplex_name(Dp));
    dm[ep] = target;
  }
  return dm;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void join(int a, int b) { up[find(a)] = find(b); }
};

using Node = std::pair<int, int>;  // (cell id, position)

// The local picture over the star of one base cell J: connected components
// of the vertical entities over St(J), their one-step closures, and the
// cusp components with their per-cell traces.
struct Picture {
  std::vector<int> star;                 // cell ids, sorted
  std::map<Node, int> comp_of;           // node -> component index
  std::vector<std::vector<Node>> comps;  // nodes per component, sorted
  std::vector<int> comp_level;
  std::vector<std::set<Node>> closure;  // one-step item closure per component
  std::vector<int> cusp_ids;            // global ids of this picture's cusp components
};

struct Builder {
  const FrontComplex& front;
  std::vector<SimplexIndex> cells;          // sorted
  std::map<SimplexIndex, int> cell_id;
  std::vector<Column> cols;
  std::map<std::pair<int, int>, std::vector<int>> dms;  // (face id, coface id)
  std::map<SimplexIndex, Picture> pictures;
  std::vector<CuspComponent> cusps;

  explicit Builder(const FrontComplex& f) : front(f) {
    cells = f.cells();
    std::sort(cells.begin(), cells.end());
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) cell_id[cells[i]] = i;
    cols.reserve(cells.size());
    for (const auto& D : cells) cols.push_back(build_column(f, D));
    for (const auto& D : cells)
      for (const auto& Dp : f.covers_of(D))
        dms[{cell_id.at(D), cell_id.at(Dp)}] =
            build_dm(f, D, cols[cell_id.at(D)], Dp, cols[cell_id.at(Dp)]);
  }

  // Bounding positions over D of the image of gap q over the coface Dp:
  // the open interval (first, second) in D's position scale.
  std::pair<int, int> gap_interval(int did, int dpid, int q) const {
    const auto& dm = dms.at({did, dpid});
    int n = static_cast<int>(cols[dpid].entries.size());
    int a = q / 2 - 1, b = q / 2;
    int pa = a >= 0 ? 2 * dm[a] + 1 : -1;
    int pb = b < n ? 2 * dm[b] + 1 : cols[did].positions();
    return {pa, pb};
  }

  const Picture& picture(const SimplexIndex& J) {
    auto it = pictures.find(J);
    if (it != pictures.end()) return it->second;
    Picture pic;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
      if (cells[i] == J || is_face_of(J, cells[i])) pic.star.push_back(i);
    // Flat node numbering for the union-find.
    std::map<int, int> offset;
    int total = 0;
    for (int cid : pic.star) {
      offset[cid] = total;
      total += cols[cid].positions();
    }
    UnionFind uf(total);
    auto flat = [&](int cid, int pos) { return offset.at(cid) + pos; };
    for (int did : pic.star) {
      for (const auto& Dp : front.covers_of(cells[did])) {
        int dpid = cell_id.at(Dp);
        const auto& dm = dms.at({did, dpid});
        const Column& cD = cols[did];
        const Column& cDp = cols[dpid];
        for (int ep = 0; ep < static_cast<int>(cDp.entries.size()); ++ep)
          if (cDp.entries[ep].level == cD.entries[dm[ep]].level &&
              cDp.entries[ep].kind == cD.entries[dm[ep]].kind)
            uf.join(flat(dpid, 2 * ep + 1), flat(did, 2 * dm[ep] + 1));
        for (int q = 0; q < cDp.positions(); q += 2) {
          auto [pa, pb] = gap_interval(did, dpid, q);
          for (int p = pa + 1; p < pb; ++p)
            if (p % 2 == 0) uf.join(flat(dpid, q), flat(did, p));
        }
      }
    }
    // Components, sorted by least node.
    std::map<int, std::vector<Node>> by_root;
    for (int cid : pic.star)
      for (int p = 0; p < cols[cid].positions(); ++p)
        by_root[uf.find(flat(cid, p))].push_back({cid, p});
    std::vector<std::vector<Node>> comps;
    for (auto& [root, nodes] : by_root) {
      std::sort(nodes.begin(), nodes.end());
      comps.push_back(std::move(nodes));
    }
    std::sort(comps.begin(), comps.end());
    pic.comps = std::move(comps);
    for (int c = 0; c < static_cast<int>(pic.comps.size()); ++c) {
      for (const Node& n : pic.comps[c]) pic.comp_of[n] = c;
      int pos = pic.comps[c].front().second;
      pic.comp_level.push_back(pos % 2 == 0
                                   ? -1
                                   : cols[pic.comps[c].front().first].entries[pos / 2].level);
    }
    // One-step closures.
    pic.closure.resize(pic.comps.size());
    for (int c = 0; c < static_cast<int>(pic.comps.size()); ++c) {
      std::set<Node>& cs = pic.closure[c];
      for (const Node& n : pic.comps[c]) {
        cs.insert(n);
        auto [dpid, pos] = n;
        int npos = cols[dpid].positions();
        if (pos % 2 == 0) {
          if (pos > 0) cs.insert({dpid, pos - 1});
          if (pos + 1 < npos) cs.insert({dpid, pos + 1});
        }
        for (int did : pic.star) {
          if (!dms.count({did, dpid})) continue;
          if (pos % 2 == 1) {
            cs.insert({did, 2 * dms.at({did, dpid})[pos / 2] + 1});
          } else {
            auto [pa, pb] = gap_interval(did, dpid, pos);
            for (int p = std::max(pa, 0); p <= std::min(pb, cols[did].positions() - 1); ++p)
              cs.insert({did, p});
          }
        }
      }
    }
    build_cusp_components(J, pic);
    return pictures.emplace(J, std::move(pic)).first->second;
  }

  void build_cusp_components(const SimplexIndex& J, Picture& pic) {
    // String-keyed union-find over branch pairs (relative to J) and loci.
    auto pk = [&](int cid, const CuspPair& p) {
      return "p:" + simplex_name(cells[cid]) + ":" + p.upper + ":" + p.lower;
    };
    auto lk = [&](int cid, int pos) {
      return "l:" + simplex_name(cells[cid]) + ":" + std::to_string(pos);
    };
    std::map<std::string, int> keyid;
    std::vector<std::string> keys;
    std::vector<std::pair<int, CuspPair>> pair_of;  // per key, cell+pair (or loci)
    std::vector<std::pair<int, int>> locus_of;      // per key, cell+entry index (or -1)
    auto intern = [&](const std::string& k, int cid, const CuspPair* p, int entry) {
      auto it = keyid.find(k);
      if (it != keyid.end()) return it->second;
      int id = static_cast<int>(keys.size());
      keyid[k] = id;
      keys.push_back(k);
      pair_of.push_back({cid, p ? *p : CuspPair{}});
      locus_of.push_back({cid, p ? -1 : entry});
      return id;
    };
    std::vector<std::pair<std::string, std::string>> links;
    for (int cid : pic.star) {
      if (cells[cid] != J)
        for (const CuspPair& p : front.cusp_pairs(J, cells[cid]))
          intern(pk(cid, p), cid, &p, -1);
      const Column& col = cols[cid];
      for (int e = 0; e < static_cast<int>(col.entries.size()); ++e)
        if (col.entries[e].kind == EntryKind::Locus || col.entries[e].kind == EntryKind::FCu)
          intern(lk(cid, 2 * e + 1), cid, nullptr, e);
    }
    for (int did : pic.star) {
      for (const auto& Dp : front.covers_of(cells[did])) {
        int dpid = cell_id.at(Dp);
        const auto& dm = dms.at({did, dpid});
        auto inc = front.iota(cells[did], Dp);
        std::map<std::string, std::string> rev;
        for (const auto& [a, b] : inc) rev[b] = a;
        for (const CuspPair& p : front.cusp_pairs(J, Dp)) {
          bool ui = rev.count(p.upper) > 0, li = rev.count(p.lower) > 0;
          if (ui != li)
            throw std::runtime_error("cusp pair splits between " +
                                     simplex_name(cells[did]) + " and " + simplex_name(Dp));
          if (ui) {
            links.push_back({pk(dpid, p), pk(did, {rev.at(p.upper), rev.at(p.lower)})});
          } else {
            int eu = cols[dpid].entry_of_sheet.at(p.upper);
            int el = cols[dpid].entry_of_sheet.at(p.lower);
            if (dm[eu] != dm[el])
              throw std::runtime_error("cusp branches of " + p.upper + "/" + p.lower +
                                       " separate over " + simplex_name(cells[did]));
            links.push_back({pk(dpid, p), lk(did, 2 * dm[eu] + 1)});
          }
        }
        for (int e = 0; e < static_cast<int>(cols[dpid].entries.size()); ++e)
          if (cols[dpid].entries[e].kind == EntryKind::Locus)
            links.push_back({lk(dpid, 2 * e + 1), lk(did, 2 * dm[e] + 1)});
      }
    }
    UnionFind uf(static_cast<int>(keys.size()));
    for (const auto& [a, b] : links) {
      auto ia = keyid.find(a), ib = keyid.find(b);
      if (ia == keyid.end() || ib == keyid.end())
        throw std::runtime_error("cusp continuation missing for " + a);
      uf.join(ia->second, ib->second);
    }
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < static_cast<int>(keys.size()); ++i)
      by_root[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> groups;
    for (auto& [root, g] : by_root) {
      std::sort(g.begin(), g.end(),
                [&](int a, int b) { return keys[a] < keys[b]; });
      groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) {
      return keys[a.front()] < keys[b.front()];
    });
    for (const auto& g : groups) {
      CuspComponent cc;
      cc.id = static_cast<int>(cusps.size());
      cc.J = J;
      bool have_mu = false;
      for (int i : g) {
        cc.nodes.insert(keys[i]);
        auto [cid, entry] = locus_of[i];
        const SimplexIndex& cell = cells[cid];
        CuspComponent::Presence pr;
        if (entry >= 0) {
          pr.merged = true;
          pr.upper_pos = pr.lower_pos = 2 * entry + 1;
        } else {
          const CuspPair& p = pair_of[i].second;
          pr.upper = p.upper;
          pr.lower = p.lower;
          pr.upper_pos = 2 * cols[cid].entry_of_sheet.at(p.upper) + 1;
          pr.lower_pos = 2 * cols[cid].entry_of_sheet.at(p.lower) + 1;
          if (!have_mu) {
            cc.lower_mu = front.mu(cell, p.lower);
            have_mu = true;
          }
        }
        if (cc.presence.count(cell))
          throw std::runtime_error("cusp component visits " + simplex_name(cell) +
                                   " twice in the picture over " + simplex_name(J));
        cc.presence[cell] = pr;
      }
      if (!have_mu)
        throw std::runtime_error("cusp component without branches in the picture over " +
                                 simplex_name(J));
      pic.cusp_ids.push_back(cc.id);
      cusps.push_back(std::move(cc));
    }
  }
};

StratumType classify(int level, int dim, EntryKind kind) {
  if (level == -1) {
    if (dim == 3) return StratumType::ThreeStratum;
    if (dim == 2) return StratumType::Vertical2;
    if (dim == 1) return StratumType::V2;
  } else if (level == 0) {
    if (dim == 2) return StratumType::Legendrian2;
    if (dim == 1) return StratumType::FV;
    if (dim == 0) return StratumType::FV2;
  } else if (level == 1 && kind == EntryKind::Crossing) {
    if (dim == 1) return StratumType::F2;
    if (dim == 0) return StratumType::F2V;
  } else if (level == 1 && kind == EntryKind::Locus) {
    if (dim == 1) return StratumType::Cu;
    if (dim == 0) return StratumType::VCu;
  } else if (level == 2 && dim == 0) {
    return kind == EntryKind::Triple ? StratumType::F3 : StratumType::FCu;
  }
  throw std::logic_error("unclassifiable stratum (level " + std::to_string(level) +
                         ", dim " + std::to_string(dim) + ")");
}

}  // namespace

std::string handle_name(const HandleCell& h) {
  return "h(" + simplex_name(h.I) + "," + simplex_name(h.J) + ")";
}

bool handle_leq(const HandleCell& a, const HandleCell& b) {
  return (a.I == b.I || is_face_of(a.I, b.I)) && (a.J == b.J || is_face_of(b.J, a.J));
}

std::string type_name(StratumType t) {
  switch (t) {
    case StratumType::ThreeStratum: return "3-stratum";
    case StratumType::Vertical2: return "vertical-2";
    case StratumType::V2: return "V2";
    case StratumType::Legendrian2: return "Legendrian-2";
    case StratumType::FV: return "FV";
    case StratumType::FV2: return "FV2";
    case StratumType::F2: return "F2";
    case StratumType::F2V: return "F2V";
    case StratumType::Cu: return "Cu";
    case StratumType::VCu: return "VCu";
    case StratumType::F3: return "F3";
    case StratumType::FCu: return "FCu";
  }
  return "?";
}

std::vector<HandleCell> build_handles(const FrontComplex& front) {
  if (front.dim() != 2)
    throw std::invalid_argument("handle decomposition needs a 2-dimensional base");
  std::vector<SimplexIndex> cells = front.cells();
  std::sort(cells.begin(), cells.end());
  for (const SimplexIndex& c : cells) {
    int d = simplex_dim(c);
    if (d == 2) continue;
    auto covers = front.covers_of(c);
    if (covers.empty())
      throw std::invalid_argument("cell " + simplex_name(c) + " is not in a 2-cell");
    if (d == 1 && covers.size() > 2)
      throw std::invalid_argument("edge " + simplex_name(c) + " has more than two cofaces");
    if (d == 0) {
      // The link of the vertex must be a path or a cycle: each triangle at v
      // contributes one link edge between the two opposite vertices.
      std::map<int, std::vector<int>> adj;
      for (const SimplexIndex& t : front.cells())
        if (simplex_dim(t) == 2 &&
            std::find(t.begin(), t.end(), c[0]) != t.end()) {
          std::vector<int> rest;
          for (int v : t)
            if (v != c[0]) rest.push_back(v);
          adj[rest[0]].push_back(rest[1]);
          adj[rest[1]].push_back(rest[0]);
        }
      for (const SimplexIndex& e : front.cells())
        if (simplex_dim(e) == 1 &&
            std::find(e.begin(), e.end(), c[0]) != e.end()) {
          int other = e[0] == c[0] ? e[1] : e[0];
          if (!adj.count(other))
            throw std::invalid_argument("vertex " + simplex_name(c) +
                                        " has a pendant edge in its link");
        }
      for (const auto& [v, nb] : adj)
        if (nb.size() > 2)
          throw std::invalid_argument("link of vertex " + simplex_name(c) +
                                      " branches at " + std::to_string(v));
      // Connectivity of the link graph.
      if (!adj.empty()) {
        std::set<int> seen;
        std::vector<int> todo = {adj.begin()->first};
        while (!todo.empty()) {
          int v = todo.back();
          todo.pop_back();
          if (!seen.insert(v).second) continue;
          for (int w : adj.at(v)) todo.push_back(w);
        }
        if (seen.size() != adj.size())
          throw std::invalid_argument("link of vertex " + simplex_name(c) +
                                      " is disconnected");
      }
    }
  }
  std::vector<HandleCell> out;
  for (const SimplexIndex& J : cells)
    for (const SimplexIndex& I : faces_of(J)) out.push_back({I, J});
  std::sort(out.begin(), out.end());
  return out;
}

bool StratPoset::leq(int a, int b) const {
  return a == b || edge_index_.count({a, b}) > 0;
}

const StratEdge* StratPoset::edge(int from, int to) const {
  auto it = edge_index_.find({from, to});
  return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

std::vector<int> StratPoset::strata_of(const HandleCell& h) const {
  std::vector<int> out;
  for (const Stratum& s : strata_)
    if (s.handle == h) out.push_back(s.id);
  return out;
}

bool StratPoset::cusp_contained(int c, int c2) const {
  const auto& a = cusps_.at(c).nodes;
  const auto& b = cusps_.at(c2).nodes;
  for (const auto& k : a)
    if (b.count(k)) return true;
  return false;
}

StratPoset build_strata(const FrontComplex& front) {
  StratPoset out;
  out.handles_ = build_handles(front);
  Builder b(front);
  for (const auto& J : b.cells) b.picture(J);
  out.cusps_ = b.cusps;

  // Instantiate strata: one per (handle cell, component of the picture of J).
  std::map<std::pair<SimplexIndex, int>, std::map<SimplexIndex, int>> stratum_of;
  for (const HandleCell& h : out.handles_) {
    const Picture& pic = b.pictures.at(h.J);
    std::map<SimplexIndex, std::map<std::string, std::string>> incJ;
    for (int cid : pic.star)
      if (b.cells[cid] != h.J) incJ[b.cells[cid]] = front.iota(h.J, b.cells[cid]);
    auto orderJ = front.sheet_order(h.J);
    for (int c = 0; c < static_cast<int>(pic.comps.size()); ++c) {
      Stratum s;
      s.id = static_cast<int>(out.strata_.size());
      s.handle = h;
      s.level = pic.comp_level[c];
      int maxdim = -10;
      EntryKind kind = EntryKind::Sheet;
      for (const Node& n : pic.comps[c]) {
        const SimplexIndex& D = b.cells[n.first];
        maxdim = std::max(maxdim, h.dim() - 2 + simplex_dim(D));
        s.items.push_back({D, n.second});
        if (n.second % 2 == 1) kind = b.cols[n.first].entries[n.second / 2].kind;
      }
      s.dim = maxdim + (s.level == -1 ? 1 : 0);
      s.type = classify(s.level, s.dim, kind);
      // Sheets of the front over e_J strictly below every item.
      for (const std::string& S : orderJ) {
        bool below = true;
        for (const Node& n : pic.comps[c]) {
          const SimplexIndex& D = b.cells[n.first];
          const std::string& img = D == h.J ? S : incJ.at(D).at(S);
          int pos_s = 2 * b.cols[n.first].entry_of_sheet.at(img) + 1;
          if (n.second >= pos_s) {
            below = false;
            break;
          }
        }
        if (below) s.below.push_back(S);
      }
      // Exceptionality: the stratum meets the cusp region and sits weakly
      // below the upper branch, strictly above the lower, wherever the
      // component is present.
      for (int cid : pic.cusp_ids) {
        const CuspComponent& cc = out.cusps_[cid];
        bool overlap = false, ok = true;
        for (const Node& n : pic.comps[c]) {
          auto it = cc.presence.find(b.cells[n.first]);
          if (it == cc.presence.end()) continue;
          overlap = true;
          if (!(it->second.upper_pos <= n.second && n.second < it->second.lower_pos)) {
            ok = false;
            break;
          }
        }
        if (overlap && ok) s.exceptional.push_back(cid);
      }
      std::ostringstream slot;
      slot << type_name(s.type);
      if (s.level >= 0) {
        const Node& rep = pic.comps[c].front();
        const ZEntry& e = b.cols[rep.first].entries[rep.second / 2];
        if (!e.sheets.empty()) {
          slot << "(";
          for (size_t i = 0; i < e.sheets.size(); ++i)
            slot << (i ? "," : "") << e.sheets[i];
          slot << ")";
        }
      } else if (!s.exceptional.empty()) {
        slot << "[exceptional]";
      }
      slot << "@" << simplex_name(b.cells[pic.comps[c].front().first]) << ":"
           << pic.comps[c].front().second;
      s.slot = slot.str();
      stratum_of[{h.J, c}][h.I] = s.id;
      out.strata_.push_back(std::move(s));
    }
  }

  int S = static_cast<int>(out.strata_.size());

  // Component-level closure relations between pictures: R[(J, J')](c, c')
  // true iff component c of the finer picture J meets the one-step closure
  // of component c' of the coarser picture J' (J' a face of J).
  std::map<std::pair<SimplexIndex, SimplexIndex>, std::set<std::pair<int, int>>> R;
  for (const auto& J : b.cells) {
    const Picture& picJ = b.pictures.at(J);
    std::set<int> starJ(picJ.star.begin(), picJ.star.end());
    for (const SimplexIndex& Jp : faces_of(J)) {
      const Picture& picJp = b.pictures.at(Jp);
      auto& rel = R[{J, Jp}];
      for (int c2 = 0; c2 < static_cast<int>(picJp.comps.size()); ++c2)
        for (const Node& n : picJp.closure[c2])
          if (starJ.count(n.first)) rel.insert({picJ.comp_of.at(n), c2});
    }
  }

  // Strict closure relations between strata, then the transitive closure.
  std::vector<std::vector<std::uint64_t>> reach(S,
                                               std::vector<std::uint64_t>((S + 63) / 64, 0));
  auto set_reach = [&](int a, int bb) { reach[a][bb / 64] |= 1ull << (bb % 64); };
  auto get_reach = [&](int a, int bb) {
    return (reach[a][bb / 64] >> (bb % 64)) & 1ull;
  };
  for (const HandleCell& h : out.handles_) {
    for (const HandleCell& h2 : out.handles_) {
      if (!handle_leq(h, h2)) continue;
      const auto& rel = R.at({h.J, h2.J});
      for (const auto& [c, c2] : rel) {
        int a = stratum_of.at({h.J, c}).at(h.I);
        int bb = stratum_of.at({h2.J, c2}).at(h2.I);
        if (a != bb) set_reach(a, bb);
      }
    }
  }
  for (int k = 0; k < S; ++k)
    for (int i = 0; i < S; ++i)
      if (get_reach(i, k))
        for (size_t w = 0; w < reach[i].size(); ++w) reach[i][w] |= reach[k][w];
  for (int i = 0; i < S; ++i)
    if (get_reach(i, i)) throw std::logic_error("stratum closure relation has a cycle");

  // Downward tests need fast item lookup per stratum.
  std::vector<std::set<Node>> item_set(S);
  std::vector<std::map<int, std::vector<int>>> items_by_cell(S);
  for (int i = 0; i < S; ++i)
    for (const auto& [D, pos] : out.strata_[i].items) {
      int cid = b.cell_id.at(D);
      item_set[i].insert({cid, pos});
      items_by_cell[i][cid].push_back(pos);
    }
  auto downward = [&](int a, int bb) {
    if (!(out.strata_[a].handle == out.strata_[bb].handle)) return false;
    for (const auto& [cid, poss] : items_by_cell[a]) {
      if (poss.size() != 1 || poss[0] % 2 != 1) continue;
      if (item_set[bb].count({cid, poss[0] + 1})) return true;
    }
    return false;
  };

  std::map<HandleCell, std::vector<int>> by_handle;
  for (int i = 0; i < S; ++i) by_handle[out.strata_[i].handle].push_back(i);

  for (int a = 0; a < S; ++a)
    for (int bb = 0; bb < S; ++bb) {
      if (a == bb || !get_reach(a, bb)) continue;
      StratEdge e;
      e.from = a;
      e.to = bb;
      e.same_level = out.strata_[a].level == out.strata_[bb].level;
      e.downward = downward(a, bb);
      e.generalized_downward = e.downward;
      if (!e.generalized_downward &&
          out.strata_[a].handle == out.strata_[bb].handle) {
        for (int c : by_handle.at(out.strata_[a].handle))
          if (c != bb && get_reach(bb, c) && get_reach(a, c) && downward(a, c) &&
              downward(bb, c)) {
            e.generalized_downward = true;
            break;
          }
      }
      out.edge_index_[{a, bb}] = static_cast<int>(out.edges_.size());
      out.edges_.push_back(e);
    }

  // Squares around each crossing arc: the two upper half-sheets on the sides
  // and the region directly above.
  for (const Stratum& o : out.strata_) {
    if (o.type != StratumType::F2) continue;
    const Picture& pic = b.pictures.at(o.handle.J);
    std::set<int> sides, ns;
    for (const auto& [D, pos] : o.items) {
      if (simplex_dim(D) != 1) continue;
      int did = b.cell_id.at(D);
      ns.insert(stratum_of.at({o.handle.J, pic.comp_of.at({did, pos - 1})}).at(o.handle.I));
      const auto& pair = b.cols[did].entries[pos / 2].sheets;
      for (const SimplexIndex& Dp : front.covers_of(D)) {
        int dpid = b.cell_id.at(Dp);
        auto inc = front.iota(D, Dp);
        int p0 = 2 * b.cols[dpid].entry_of_sheet.at(inc.at(pair[0])) + 1;
        int p1 = 2 * b.cols[dpid].entry_of_sheet.at(inc.at(pair[1])) + 1;
        sides.insert(stratum_of.at({o.handle.J, pic.comp_of.at({dpid, std::min(p0, p1)})})
                         .at(o.handle.I));
      }
    }
    if (sides.size() != 2 || ns.size() != 1) continue;
    CrossingSquare sq;
    sq.O = o.id;
    auto it = sides.begin();
    sq.NW = *it++;
    sq.NE = *it;
    sq.N = *ns.begin();
    out.squares_.push_back(sq);
  }
  return out;
}

std::vector<CrossingSquare> StratPoset::crossing_squares() const { return squares_; }

std::vector<TopSquare> StratPoset::top_squares() const {
  std::vector<TopSquare> out;
  for (const Stratum& s1 : strata_) {
    if (s1.dim != 1) continue;
    // The cusp component of a cusp arc, for the between-branches condition.
    const CuspComponent* cc = nullptr;
    if (s1.type == StratumType::Cu) {
      for (const CuspComponent& c : cusps_) {
        if (c.J != s1.handle.J) continue;
        for (const auto& [D, pos] : s1.items)
          if (c.nodes.count("l:" + simplex_name(D) + ":" + std::to_string(pos))) cc = &c;
        if (cc) break;
      }
      if (!cc) throw std::logic_error("cusp arc without a cusp component");
    }
    std::vector<int> mids;
    for (const Stratum& s2 : strata_)
      if (s2.dim == 2 && leq(s1.id, s2.id)) mids.push_back(s2.id);
    for (size_t i = 0; i < mids.size(); ++i)
      for (size_t j = i + 1; j < mids.size(); ++j)
        for (const Stratum& s3 : strata_) {
          if (s3.dim != 3 || !leq(mids[i], s3.id) || !leq(mids[j], s3.id)) continue;
          if (!leq(s1.id, s3.id)) continue;
          if (cc) {
            bool overlap = false, between = true;
            for (const auto& [D, pos] : s3.items) {
              auto it = cc->presence.find(D);
              if (it == cc->presence.end()) continue;
              overlap = true;
              if (!(it->second.upper_pos < pos && pos < it->second.lower_pos)) {
                between = false;
                break;
              }
            }
            if (!overlap || !between) continue;
          }
          out.push_back({s1.id, mids[i], mids[j], s3.id});
        }
  }
  return out;
}

int StratPoset::upward_region(int sheet_stratum) const {
  const Stratum& s = strata_.at(sheet_stratum);
  int up = -1;
  for (const auto& [D, pos] : s.items) {
    if (pos % 2 != 1) throw std::invalid_argument("upward_region needs an entity stratum");
    for (const Stratum& c : strata_) {
      if (!(c.handle == s.handle)) continue;
      for (const auto& [D2, pos2] : c.items)
        if (D2 == D && pos2 == pos - 1) {
          if (up != -1 && up != c.id)
            throw std::logic_error("inconsistent region above stratum " +
                                   std::to_string(sheet_stratum));
          up = c.id;
        }
    }
  }
  if (up == -1) throw std::logic_error("no region above stratum");
  return up;
}

}  // namespace frontsheaf
