#include "frontsheaf/simplex.hpp"

#include <random>
#include <stdexcept>

namespace frontsheaf {

namespace {

FMatrix signed_copy(const FMatrix& m, int sign_exponent) {
  return sign_exponent % 2 == 0 ? m : m.negated();
}

// Left-hand side of the face identity for F = [i_0,...,i_m] given all face
// maps: interior deletions plus the full convolution sum.
FMatrix face_identity_lhs(const SimplexDiagram& D, const SimplexIndex& F) {
  int m = simplex_dim(F);
  int n = D.V.dim();
  FMatrix acc(D.field, n, n);
  for (int k = 1; k < m; ++k) {
    SimplexIndex del = F;
    del.erase(del.begin() + k);
    acc = acc + signed_copy(D.a.at(del), k + 1);
  }
  for (int k = 0; k <= m; ++k) {
    SimplexIndex head(F.begin(), F.begin() + k + 1);
    SimplexIndex tail(F.begin() + k, F.end());
    acc = acc + signed_copy(D.a.at(tail) * D.a.at(head), k);
  }
  return acc;
}

}  // namespace

GradedLinearMap SimplexDiagram::face_map(const SimplexIndex& F) const {
  return GradedLinearMap(V, V, 1 - simplex_dim(F), a.at(F));
}

std::vector<std::string> validate_diagram(const SimplexDiagram& D) {
  std::vector<std::string> out;
  for (const SimplexIndex& F : faces_of(D.simplex)) {
    auto it = D.a.find(F);
    if (it == D.a.end()) {
      out.push_back("diagram: missing face map for " + simplex_name(F));
      continue;
    }
    if (it->second.rows() != D.V.dim() || it->second.cols() != D.V.dim() ||
        it->second.field() != D.field) {
      out.push_back("diagram: face map shape/field mismatch for " + simplex_name(F));
      continue;
    }
    try {
      D.face_map(F);
    } catch (const std::invalid_argument& e) {
      out.push_back("diagram: face map for " + simplex_name(F) +
                    " violates the grading: " + e.what());
    }
  }
  if (!out.empty()) return out;
  for (const SimplexIndex& F : faces_of(D.simplex)) {
    if (!face_identity_lhs(D, F).is_zero())
      out.push_back("diagram: face identity fails on " + simplex_name(F));
  }
  return out;
}

SimplexDiagram restrict_diagram(const SimplexDiagram& D, const SimplexIndex& face) {
  if (!is_face_of(face, D.simplex))
    throw std::invalid_argument("restrict_diagram: not a face");
  SimplexDiagram r;
  r.field = D.field;
  r.simplex = face;
  r.V = D.V;
  for (const SimplexIndex& F : faces_of(face)) r.a.insert_or_assign(F, D.a.at(F));
  return r;
}

std::vector<std::string> validate_morphism(const SDMorphism& m) {
  std::vector<std::string> out;
  if (!is_face_of(m.src.simplex, m.tgt.simplex))
    out.push_back("morphism: source simplex is not a face of the target simplex");
  if (m.src.field != m.tgt.field) out.push_back("morphism: field mismatch");
  if (m.phi.rows() != m.tgt.V.dim() || m.phi.cols() != m.src.V.dim()) {
    out.push_back("morphism: map shape mismatch");
    return out;
  }
  try {
    GradedLinearMap(m.src.V, m.tgt.V, 0, m.phi);
  } catch (const std::invalid_argument& e) {
    out.push_back(std::string("morphism: map violates the grading: ") + e.what());
  }
  if (!out.empty()) return out;
  for (const SimplexIndex& F : faces_of(m.src.simplex)) {
    if (m.phi * m.src.a.at(F) != m.tgt.a.at(F) * m.phi)
      out.push_back("morphism: does not commute with the face map of " + simplex_name(F));
  }
  return out;
}

CochainComplex mapping_cylinder(const SimplexDiagram& D) {
  std::vector<SimplexIndex> faces = faces_of(D.simplex);
  int v = D.V.dim();
  std::map<SimplexIndex, int> offset;
  GradedModule module;
  for (const SimplexIndex& F : faces) {
    offset[F] = module.dim();
    for (int i = 0; i < v; ++i)
      module.add(simplex_name(F) + ":" + D.V.label(i), D.V.degree(i) - simplex_dim(F));
  }
  int N = module.dim();
  FMatrix d(D.field, N, N);
  auto add_block = [&](int ro, int co, const FMatrix& b) {
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j)
        if (b.at(i, j) != 0)
          d.at(ro + i, co + j) = D.field.add(d.at(ro + i, co + j), b.at(i, j));
  };
  for (const SimplexIndex& E : faces) {
    int m = simplex_dim(E);
    int co = offset.at(E);
    // Tail-segment components carry the head-segment face map.
    for (int k = 0; k <= m; ++k) {
      SimplexIndex head(E.begin(), E.begin() + k + 1);
      SimplexIndex tail(E.begin() + k, E.end());
      add_block(offset.at(tail), co, signed_copy(D.a.at(head), m + 1));
    }
    // Interior vertex deletions carry signed identities.
    for (int k = 1; k <= m; ++k) {
      SimplexIndex del = E;
      del.erase(del.begin() + k);
      add_block(offset.at(del), co,
                signed_copy(FMatrix::identity(D.field, v), m + k + 1));
    }
  }
  return CochainComplex(D.field, module, d);
}

ChainMap cylinder_map(const SDMorphism& m) {
  CochainComplex src = mapping_cylinder(m.src);
  CochainComplex tgt = mapping_cylinder(m.tgt);
  std::vector<SimplexIndex> src_faces = faces_of(m.src.simplex);
  std::vector<SimplexIndex> tgt_faces = faces_of(m.tgt.simplex);
  std::map<SimplexIndex, int> src_off, tgt_off;
  for (size_t i = 0; i < src_faces.size(); ++i)
    src_off[src_faces[i]] = static_cast<int>(i) * m.src.V.dim();
  for (size_t i = 0; i < tgt_faces.size(); ++i)
    tgt_off[tgt_faces[i]] = static_cast<int>(i) * m.tgt.V.dim();
  FMatrix mat(m.src.field, tgt.module().dim(), src.module().dim());
  for (const SimplexIndex& F : src_faces) {
    int ro = tgt_off.at(F), co = src_off.at(F);
    for (int i = 0; i < m.phi.rows(); ++i)
      for (int j = 0; j < m.phi.cols(); ++j) mat.at(ro + i, co + j) = m.phi.at(i, j);
  }
  return ChainMap(src, tgt, mat);
}

ChainMap vertex_inclusion(const SimplexDiagram& D, int vertex) {
  SDMorphism m{restrict_diagram(D, {vertex}), D, FMatrix::identity(D.field, D.V.dim())};
  return cylinder_map(m);
}

bool edges_are_quasi_isos(const SimplexDiagram& D) {
  for (const SimplexIndex& F : faces_of(D.simplex)) {
    if (simplex_dim(F) != 1) continue;
    CochainComplex src(D.field, D.V, D.a.at({F[0]}));
    CochainComplex tgt(D.field, D.V, D.a.at({F[1]}));
    if (!is_quasi_iso(ChainMap(src, tgt, D.a.at(F)))) return false;
  }
  return true;
}

SimplexDiagram random_diagram(PrimeField field, int n, int basis_size, unsigned seed) {
  std::mt19937 rng(seed);
  auto rnd = [&](int bound) { return static_cast<int>(rng() % bound); };
  int p = field.modulus();

  SimplexDiagram D;
  D.field = field;
  for (int i = 0; i <= n; ++i) D.simplex.push_back(i);
  // Paired basis: each pair spans a two-term acyclic ladder; pair degrees are
  // spread out so that higher face maps have room to be nonzero.
  for (int i = 0; i < basis_size; ++i) {
    int t = i % (n + 1);
    D.V.add("p" + std::to_string(i) + "a", t);
    D.V.add("p" + std::to_string(i) + "b", t + 1);
  }
  int dim = D.V.dim();
  FMatrix base(field, dim, dim);
  for (int i = 0; i < basis_size; ++i) base.at(2 * i + 1, 2 * i) = 1;

  // Vertex differentials: conjugates of the base ladder by random invertible
  // degree-preserving changes of basis (so each vertex complex is acyclic).
  auto random_degree0_invertible = [&]() {
    while (true) {
      FMatrix g(field, dim, dim);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
          if (D.V.degree(r) == D.V.degree(c)) g.at(r, c) = rnd(p);
      if (g.rank() != dim) continue;
      // Invert by solving g x = e_i column by column.
      FMatrix inv(field, dim, dim);
      bool ok = true;
      for (int c = 0; c < dim && ok; ++c) {
        std::vector<int> e(dim, 0);
        e[c] = 1;
        auto x = solve_linear(g, e);
        if (!x) { ok = false; break; }
        for (int r = 0; r < dim; ++r) inv.at(r, c) = (*x)[r];
      }
      if (ok) return std::make_pair(g, inv);
    }
  };
  for (int vtx = 0; vtx <= n; ++vtx) {
    auto [g, ginv] = random_degree0_invertible();
    D.a.insert_or_assign({vtx}, g * base * ginv);
  }

  // Higher faces in increasing dimension: the face identity is linear in the
  // top map, x . a_{i_0} + (-1)^m a_{i_m} . x = -(interior terms). Because
  // every vertex complex is acyclic, the endomorphism complex is acyclic too
  // and the system is always solvable; add a random kernel element on top of
  // a particular solution.
  for (const SimplexIndex& F : faces_of(D.simplex)) {
    int m = simplex_dim(F);
    if (m == 0) continue;
    const FMatrix& A0 = D.a.at({F.front()});
    const FMatrix& Am = D.a.at({F.back()});
    // Degree-compatible slots for the unknown x (degree 1 - m).
    std::vector<std::pair<int, int>> xs, ys;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        if (D.V.degree(r) == D.V.degree(c) + 1 - m) xs.emplace_back(r, c);
        if (D.V.degree(r) == D.V.degree(c) + 2 - m) ys.emplace_back(r, c);
      }
    // Interior part of the face identity (everything not involving x).
    FMatrix R(field, dim, dim);
    for (int k = 1; k < m; ++k) {
      SimplexIndex del = F;
      del.erase(del.begin() + k);
      R = R + signed_copy(D.a.at(del), k + 1);
    }
    for (int k = 1; k < m; ++k) {
      SimplexIndex head(F.begin(), F.begin() + k + 1);
      SimplexIndex tail(F.begin() + k, F.end());
      R = R + signed_copy(D.a.at(tail) * D.a.at(head), k);
    }
    FMatrix L(field, static_cast<int>(ys.size()), static_cast<int>(xs.size()));
    for (size_t col = 0; col < xs.size(); ++col) {
      auto [u, v] = xs[col];
      for (size_t row = 0; row < ys.size(); ++row) {
        auto [r, c] = ys[row];
        int coef = 0;
        if (u == r) coef = field.add(coef, A0.at(v, c));
        if (v == c) {
          int t = Am.at(r, u);
          coef = field.add(coef, m % 2 == 0 ? t : field.neg(t));
        }
        L.at(static_cast<int>(row), static_cast<int>(col)) = coef;
      }
    }
    std::vector<int> rhs(ys.size());
    for (size_t row = 0; row < ys.size(); ++row)
      rhs[row] = field.neg(R.at(ys[row].first, ys[row].second));
    auto sol = solve_linear(L, rhs);
    if (!sol) throw std::logic_error("random_diagram: face system unexpectedly inconsistent");
    std::vector<int> x = *sol;
    for (const std::vector<int>& k : nullspace(L)) {
      int c = rnd(p);
      if (c == 0) continue;
      for (size_t i = 0; i < x.size(); ++i) x[i] = field.add(x[i], field.mul(c, k[i]));
    }
    FMatrix aF(field, dim, dim);
    for (size_t i = 0; i < xs.size(); ++i) aF.at(xs[i].first, xs[i].second) = x[i];
    D.a.insert_or_assign(F, aF);
  }
  return D;
}

}  // namespace frontsheaf
