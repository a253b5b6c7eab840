#include "frontsheaf/sheaf.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace frontsheaf {

namespace {

// Position of every sheet of V(e_J) in the descending-z basis order.
std::map<std::string, int> basis_index(const FrontComplex& front, const SimplexIndex& J) {
  std::map<std::string, int> idx;
  auto order = front.sheet_order(J);
  for (size_t i = 0; i < order.size(); ++i) idx[order[i]] = static_cast<int>(i);
  return idx;
}

}  // namespace

PreliminaryModule preliminary_X(const FrontComplex& front, const StratPoset& poset,
                                int s) {
  const Stratum& st = poset.stratum(s);
  PreliminaryModule pm;
  for (const std::string& T : st.below) pm.Y.add(T, -front.mu(st.handle.J, T));
  for (int cid : st.exceptional) {
    const CuspComponent& cc = poset.cusp_components().at(cid);
    pm.Z.add("v[C" + std::to_string(cid) + "]", -cc.lower_mu);
    pm.z_components.push_back(cid);
  }
  for (int i = 0; i < pm.Y.dim(); ++i) pm.X.add(pm.Y.label(i), pm.Y.degree(i));
  for (int i = 0; i < pm.Z.dim(); ++i) pm.X.add(pm.Z.label(i), pm.Z.degree(i));
  return pm;
}

GradedLinearMap GenerizationMap::assembled() const {
  FMatrix m(p.field(), tgt.X.dim(), src.X.dim());
  int yr = tgt.Y.dim(), yc = src.Y.dim();
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) m.at(i, j) = p.at(i, j);
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < k.cols(); ++j) m.at(yr + i, j) = k.at(i, j);
  for (int i = 0; i < l.rows(); ++i)
    for (int j = 0; j < l.cols(); ++j) m.at(yr + i, yc + j) = l.at(i, j);
  return GradedLinearMap(src.X, tgt.X, 0, m);
}

GenerizationMap preliminary_map(const FrontComplex& front, const StratPoset& poset,
                                int s, int t, PrimeField field) {
  if (!poset.leq(s, t))
    throw std::invalid_argument("preliminary_map: strata are not related");
  const Stratum& a = poset.stratum(s);
  const Stratum& b = poset.stratum(t);
  PreliminaryModule src = preliminary_X(front, poset, s);
  PreliminaryModule tgt = preliminary_X(front, poset, t);
  GenerizationMap g{src, tgt, FMatrix(field, tgt.Y.dim(), src.Y.dim()),
                    FMatrix(field, tgt.Z.dim(), src.Y.dim()),
                    FMatrix(field, tgt.Z.dim(), src.Z.dim())};
  if (s == t) {
    g.p = FMatrix::identity(field, src.Y.dim());
    g.l = FMatrix::identity(field, src.Z.dim());
    return g;
  }
  // p: follow the sheet projection V(e_J) -> V(e_J'); images of sheets below
  // the source are sheets below the target (or die into a cusp pair).
  GradedLinearMap proj = front.projection_p(field, b.handle.J, a.handle.J);
  auto idxJ = basis_index(front, a.handle.J);
  auto idxJp = basis_index(front, b.handle.J);
  auto orderJp = front.sheet_order(b.handle.J);
  for (int j = 0; j < src.Y.dim(); ++j) {
    int col = idxJ.at(src.Y.label(j));
    for (int r = 0; r < proj.matrix().rows(); ++r) {
      if (proj.matrix().at(r, col) == 0) continue;
      const std::string& img = orderJp.at(r);
      if (!tgt.Y.has(img))
        throw std::logic_error("preliminary_map: projected sheet " + img +
                               " is not below the target stratum");
      g.p.at(tgt.Y.index(img), j) = proj.matrix().at(r, col);
    }
  }
  // k: a sheet equal to the lower branch of a target cusp component over the
  // source top cell is sent to that component's generator.
  for (size_t zi = 0; zi < tgt.z_components.size(); ++zi) {
    const CuspComponent& cc = poset.cusp_components().at(tgt.z_components[zi]);
    auto it = cc.presence.find(a.handle.J);
    if (it == cc.presence.end() || it->second.merged) continue;
    if (src.Y.has(it->second.lower))
      g.k.at(static_cast<int>(zi), src.Y.index(it->second.lower)) = 1;
  }
  // l: each source cusp component continues into a unique component of the
  // coarser picture; the generator survives when the target is exceptional
  // for the continuation.
  for (size_t zj = 0; zj < src.z_components.size(); ++zj)
    for (size_t zi = 0; zi < tgt.z_components.size(); ++zi)
      if (poset.cusp_contained(src.z_components[zj], tgt.z_components[zi]))
        g.l.at(static_cast<int>(zi), static_cast<int>(zj)) = 1;
  return g;
}

bool check_X_functor(const FrontComplex& front, const StratPoset& poset,
                     PrimeField field) {
  std::map<std::pair<int, int>, GenerizationMap> cache;
  auto get = [&](int s, int t) -> const GenerizationMap& {
    auto key = std::make_pair(s, t);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, preliminary_map(front, poset, s, t, field)).first;
    return it->second;
  };
  for (const Stratum& s : poset.strata()) {
    const GenerizationMap& id = get(s.id, s.id);
    if (id.p != FMatrix::identity(id.p.field(), id.p.rows()) || !id.k.is_zero() ||
        id.l != FMatrix::identity(id.l.field(), id.l.rows()))
      return false;
  }
  std::vector<std::vector<int>> out_edges(poset.strata().size());
  for (const StratEdge& e : poset.edges()) out_edges[e.from].push_back(e.to);
  for (const StratEdge& e : poset.edges()) {
    const GenerizationMap& ab = get(e.from, e.to);
    for (int c : out_edges[e.to]) {
      const GenerizationMap& bc = get(e.to, c);
      const GenerizationMap& ac = get(e.from, c);
      if (ac.p != bc.p * ab.p) return false;
      if (ac.k != bc.k * ab.p + bc.l * ab.k) return false;
      if (ac.l != bc.l * ab.l) return false;
    }
  }
  return true;
}

SimplexDiagram G_of(const FrontComplex& front, const StratPoset& poset,
                    const CHD& chd, int s) {
  const Stratum& st = poset.stratum(s);
  PreliminaryModule pm = preliminary_X(front, poset, s);
  SimplexDiagram D;
  D.field = chd.field;
  D.simplex = st.handle.I;
  D.V = pm.X;
  auto idxJ = basis_index(front, st.handle.J);
  auto orderJ = front.sheet_order(st.handle.J);
  int ydim = pm.Y.dim();
  for (const SimplexIndex& F : faces_of(st.handle.I)) {
    FMatrix cJ = boundary_extend(front, chd.c.at(F), F, st.handle.J);
    FMatrix aF(chd.field, pm.X.dim(), pm.X.dim());
    for (int j = 0; j < ydim; ++j) {
      int col = idxJ.at(pm.Y.label(j));
      for (int r = 0; r < cJ.rows(); ++r) {
        if (cJ.at(r, col) == 0) continue;
        const std::string& row = orderJ.at(r);
        if (!pm.Y.has(row))
          throw std::logic_error("stratum module is not closed under the face map of " +
                                 simplex_name(F));
        aF.at(pm.Y.index(row), j) = cJ.at(r, col);
      }
    }
    if (simplex_dim(F) == 1)
      for (int z = 0; z < pm.Z.dim(); ++z) aF.at(ydim + z, ydim + z) = 1;
    D.a.insert_or_assign(F, std::move(aF));
  }
  std::vector<std::string> errs = validate_diagram(D);
  if (!errs.empty()) {
    std::ostringstream msg;
    msg << "stratum diagram is invalid:";
    for (const std::string& e : errs) msg << " " << e << ";";
    throw std::runtime_error(msg.str());
  }
  return D;
}

bool AxiomReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string AxiomReport::summary() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << (c.pass ? "ok  " : "FAIL") << "  " << c.name << " (" << c.instances
        << " instances)\n";
    for (const std::string& f : c.failures) out << "      " << f << "\n";
  }
  return out.str();
}

SheafFunctor::SheafFunctor(const FrontComplex& front, StratPoset poset, CHD chd)
    : front_(&front), poset_(std::move(poset)), chd_(std::move(chd)) {}

const PreliminaryModule& SheafFunctor::X(int s) const {
  auto it = pm_.find(s);
  if (it == pm_.end()) it = pm_.emplace(s, preliminary_X(*front_, poset_, s)).first;
  return it->second;
}

const GenerizationMap& SheafFunctor::X_map(int s, int t) const {
  auto key = std::make_pair(s, t);
  auto it = xmaps_.find(key);
  if (it == xmaps_.end())
    it = xmaps_.emplace(key, preliminary_map(*front_, poset_, s, t, chd_.field)).first;
  return it->second;
}

const FMatrix& SheafFunctor::X_matrix(int s, int t) const {
  auto key = std::make_pair(s, t);
  auto it = xmatrices_.find(key);
  if (it == xmatrices_.end())
    it = xmatrices_.emplace(key, X_map(s, t).assembled().matrix()).first;
  return it->second;
}

const SimplexDiagram& SheafFunctor::diagram(int s) const {
  auto it = diagrams_.find(s);
  if (it == diagrams_.end())
    it = diagrams_.emplace(s, G_of(*front_, poset_, chd_, s)).first;
  return it->second;
}

const CochainComplex& SheafFunctor::at(int s) const {
  auto it = complexes_.find(s);
  if (it == complexes_.end())
    it = complexes_.emplace(s, mapping_cylinder(diagram(s))).first;
  return it->second;
}

const ChainMap& SheafFunctor::map(int s, int t) const {
  auto key = std::make_pair(s, t);
  auto it = maps_.find(key);
  if (it == maps_.end()) {
    SDMorphism m{diagram(s), diagram(t), X_map(s, t).assembled().matrix()};
    it = maps_.emplace(key, cylinder_map(m)).first;
  }
  return it->second;
}

const CochainComplex& SheafFunctor::vertex_complex(int s, int vertex) const {
  auto key = std::make_pair(s, vertex);
  auto it = vertex_complexes_.find(key);
  if (it != vertex_complexes_.end()) return it->second;
  const Stratum& st = poset_.stratum(s);
  const PreliminaryModule& pm = X(s);
  FMatrix cJ = boundary_extend(*front_, chd_.c.at({vertex}), {vertex}, st.handle.J);
  auto idxJ = basis_index(*front_, st.handle.J);
  auto orderJ = front_->sheet_order(st.handle.J);
  FMatrix a(chd_.field, pm.X.dim(), pm.X.dim());
  for (int j = 0; j < pm.Y.dim(); ++j) {
    int col = idxJ.at(pm.Y.label(j));
    for (int r = 0; r < cJ.rows(); ++r) {
      if (cJ.at(r, col) == 0) continue;
      const std::string& row = orderJ.at(r);
      if (!pm.Y.has(row))
        throw std::logic_error("stratum module is not closed under the vertex map");
      a.at(pm.Y.index(row), j) = cJ.at(r, col);
    }
  }
  return vertex_complexes_
      .emplace(key, CochainComplex(chd_.field, pm.X, std::move(a)))
      .first->second;
}

ChainMap SheafFunctor::vertex_map(int s, int t) const {
  int v = poset_.stratum(s).handle.I.front();
  return ChainMap(vertex_complex(s, v), vertex_complex(t, v),
                  X_map(s, t).assembled().matrix());
}

SheafFunctor build_sheaf(const FrontComplex& front, const CHD& chd, int rank) {
  return build_sheaf(front, build_strata(front), chd, rank);
}

SheafFunctor build_sheaf(const FrontComplex& front, StratPoset poset, const CHD& chd,
                         int rank) {
  if (rank != 1)
    throw std::logic_error("sheaves of microlocal rank > 1 are not implemented");
  return SheafFunctor(front, std::move(poset), chd);
}

namespace {

bool is_identity(const FMatrix& m) {
  return m.rows() == m.cols() && m == FMatrix::identity(m.field(), m.rows());
}

std::string edge_desc(const StratPoset& P, int a, int b) {
  return P.stratum(a).slot + " -> " + P.stratum(b).slot + " over " +
         handle_name(P.stratum(a).handle) + " -> " + handle_name(P.stratum(b).handle);
}

void append_matrix(std::string& key, const FMatrix& m) {
  key += std::to_string(m.rows());
  key += 'x';
  key += std::to_string(m.cols());
  key += ':';
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) key += static_cast<char>('0' + m.at(i, j));
  key += ';';
}

}  // namespace

AxiomReport verify_axioms(const SheafFunctor& F, const VerifyOptions& opt,
                          VerifyCache* cache) {
  const StratPoset& P = F.poset();
  AxiomReport report;
  auto add = [&](CheckResult r) { report.checks.push_back(std::move(r)); };

  // Assembled generization matrix, shared across verification runs through
  // the cache (it does not depend on the chain homotopy diagram).
  auto xmat = [&](int a, int b) -> const FMatrix& {
    if (!cache) return F.X_matrix(a, b);
    auto key = std::make_pair(a, b);
    auto it = cache->xmats.find(key);
    if (it == cache->xmats.end())
      it = cache->xmats.emplace(key, F.X_map(a, b).assembled().matrix()).first;
    return it->second;
  };

  // Quasi-isomorphism of one generization, decided on the vertex complexes
  // at the first vertex of the source handle simplex when the reduction is
  // on, memoized by the three matrices the answer depends on.
  auto edge_qiso = [&](int a, int b) -> bool {
    if (!opt.vertex_reduction)
      return is_identity(F.map(a, b).matrix()) || is_quasi_iso(F.map(a, b));
    int v = P.stratum(a).handle.I.front();
    const CochainComplex& A = F.vertex_complex(a, v);
    const CochainComplex& B = F.vertex_complex(b, v);
    const FMatrix& phi = xmat(a, b);
    std::string key;
    if (cache) {
      key = "q:";
      append_matrix(key, A.differential());
      append_matrix(key, B.differential());
      append_matrix(key, phi);
      auto it = cache->verdicts.find(key);
      if (it != cache->verdicts.end()) return it->second;
    }
    bool ok = is_quasi_iso(ChainMap(A, B, phi));
    if (cache) cache->verdicts.emplace(std::move(key), ok);
    return ok;
  };

  // Acyclicity of the total complex of a square s1 -> s2a, s2b -> s3.
  auto square_acyclic = [&](int s1, int s2a, int s2b, int s3) -> bool {
    if (!opt.vertex_reduction) {
      CommutativeSquare c(F.map(s1, s2a), F.map(s1, s2b), F.map(s2a, s3),
                          F.map(s2b, s3));
      return is_acyclic(total_complex(c));
    }
    int v = P.stratum(s1).handle.I.front();
    const CochainComplex& A = F.vertex_complex(s1, v);
    const CochainComplex& B = F.vertex_complex(s2a, v);
    const CochainComplex& C = F.vertex_complex(s2b, v);
    const CochainComplex& D = F.vertex_complex(s3, v);
    const FMatrix& ab = xmat(s1, s2a);
    const FMatrix& ac = xmat(s1, s2b);
    const FMatrix& bd = xmat(s2a, s3);
    const FMatrix& cd = xmat(s2b, s3);
    std::string key;
    if (cache) {
      key = "s:";
      for (const CochainComplex* c : {&A, &B, &C, &D}) append_matrix(key, c->differential());
      for (const FMatrix* m : {&ab, &ac, &bd, &cd}) append_matrix(key, *m);
      auto it = cache->verdicts.find(key);
      if (it != cache->verdicts.end()) return it->second;
    }
    CommutativeSquare sq(ChainMap(A, B, ab), ChainMap(A, C, ac), ChainMap(B, D, bd),
                         ChainMap(C, D, cd));
    bool ok = is_acyclic(total_complex(sq));
    if (cache) cache->verdicts.emplace(std::move(key), ok);
    return ok;
  };

  CheckResult down_id{"downward maps are literal identities"};
  CheckResult down_qi{"downward maps are quasi-isomorphisms"};
  CheckResult level_qi{"maps between strata of equal front level are quasi-isomorphisms"};
  CheckResult gen_qi{"generalized-downward maps are quasi-isomorphisms"};
  for (const StratEdge& e : P.edges()) {
    if (e.downward) {
      ++down_id.instances;
      bool ident = F.X(e.from).X == F.X(e.to).X &&
                   is_identity(xmat(e.from, e.to));
      if (ident && !opt.vertex_reduction)
        ident = is_identity(F.map(e.from, e.to).matrix());
      if (!ident) {
        down_id.pass = false;
        down_id.failures.push_back(edge_desc(P, e.from, e.to));
      }
      ++down_qi.instances;
      if (!(ident || edge_qiso(e.from, e.to))) {
        down_qi.pass = false;
        down_qi.failures.push_back(edge_desc(P, e.from, e.to));
      }
    }
    if (e.same_level) {
      ++level_qi.instances;
      if (!edge_qiso(e.from, e.to)) {
        level_qi.pass = false;
        level_qi.failures.push_back(edge_desc(P, e.from, e.to));
      }
    }
    if (e.generalized_downward) {
      ++gen_qi.instances;
      if (!edge_qiso(e.from, e.to)) {
        gen_qi.pass = false;
        gen_qi.failures.push_back(edge_desc(P, e.from, e.to));
      }
    }
  }
  add(std::move(down_id));
  add(std::move(down_qi));
  add(std::move(level_qi));

  CheckResult cross{"crossing squares have acyclic total complexes"};
  for (const CrossingSquare& sq : P.crossing_squares()) {
    ++cross.instances;
    if (!square_acyclic(sq.O, sq.NW, sq.NE, sq.N)) {
      cross.pass = false;
      cross.failures.push_back(P.stratum(sq.O).slot + " over " +
                               handle_name(P.stratum(sq.O).handle));
    }
  }
  add(std::move(cross));
  add(std::move(gen_qi));

  CheckResult tops{"top-dimensional squares have acyclic total complexes"};
  for (const TopSquare& sq : P.top_squares()) {
    ++tops.instances;
    if (!square_acyclic(sq.s1, sq.s2a, sq.s2b, sq.s3)) {
      tops.pass = false;
      tops.failures.push_back(edge_desc(P, sq.s1, sq.s3));
    }
  }
  add(std::move(tops));

  if (opt.morphisms) {
    CheckResult morph{"generization maps are diagram morphisms"};
    for (const StratEdge& e : P.edges()) {
      ++morph.instances;
      SDMorphism m{F.diagram(e.from), F.diagram(e.to),
                   F.X_map(e.from, e.to).assembled().matrix()};
      if (!validate_morphism(m).empty()) {
        morph.pass = false;
        morph.failures.push_back(edge_desc(P, e.from, e.to));
      }
    }
    add(std::move(morph));
  }

  if (opt.functor_laws) {
    CheckResult laws{"composition law holds on all composable pairs"};
    std::vector<std::vector<int>> out_edges(P.strata().size());
    for (const StratEdge& e : P.edges()) out_edges[e.from].push_back(e.to);
    for (const StratEdge& e : P.edges())
      for (int c : out_edges[e.to]) {
        ++laws.instances;
        if (F.map(e.to, c).matrix() * F.map(e.from, e.to).matrix() !=
            F.map(e.from, c).matrix()) {
          laws.pass = false;
          laws.failures.push_back(edge_desc(P, e.from, c) + " via " +
                                  P.stratum(e.to).slot);
        }
      }
    add(std::move(laws));
  }

  return report;
}

int microlocal_rank(const SheafFunctor& F, int legendrian2, VerifyCache* cache) {
  const Stratum& s = F.poset().stratum(legendrian2);
  if (s.type != StratumType::Legendrian2)
    throw std::invalid_argument("microlocal rank is defined on Legendrian 2-strata");
  int up = F.poset().upward_region(legendrian2);
  int v = s.handle.I.front();
  const CochainComplex& A = F.vertex_complex(legendrian2, v);
  const CochainComplex& B = F.vertex_complex(up, v);
  const FMatrix* phi = nullptr;
  if (cache) {
    auto key = std::make_pair(legendrian2, up);
    auto it = cache->xmats.find(key);
    if (it == cache->xmats.end())
      it = cache->xmats.emplace(key, F.X_matrix(legendrian2, up)).first;
    phi = &it->second;
  } else {
    phi = &F.X_matrix(legendrian2, up);
  }
  std::string key;
  if (cache) {
    key = "r:";
    append_matrix(key, A.differential());
    append_matrix(key, B.differential());
    append_matrix(key, *phi);
    auto it = cache->ranks.find(key);
    if (it != cache->ranks.end()) return it->second;
  }
  int rank = total_homology_rank(cone(ChainMap(A, B, *phi)));
  if (cache) cache->ranks.emplace(std::move(key), rank);
  return rank;
}

}  // namespace frontsheaf
