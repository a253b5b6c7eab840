#include "frontsheaf/complex.hpp"

#include <stdexcept>

namespace frontsheaf {

CochainComplex::CochainComplex(PrimeField field, GradedModule module, FMatrix differential)
    : field_(field), module_(std::move(module)), d_(std::move(differential)) {
  int n = module_.dim();
  if (d_.rows() != n || d_.cols() != n)
    throw std::invalid_argument("differential must be square of the module dimension");
  if (d_.field() != field_) throw std::invalid_argument("differential field mismatch");
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      if (d_.at(t, s) != 0 && module_.degree(t) != module_.degree(s) + 1)
        throw std::invalid_argument("differential is not of degree +1 at (" +
                                    module_.label(t) + ", " + module_.label(s) + ")");
  if (!(d_ * d_).is_zero())
    throw std::invalid_argument("differential does not square to zero");
}

ChainMap::ChainMap(CochainComplex source, CochainComplex target, FMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.module().dim() || matrix_.cols() != source_.module().dim())
    throw std::invalid_argument("chain map matrix shape mismatch");
  for (int t = 0; t < matrix_.rows(); ++t)
    for (int s = 0; s < matrix_.cols(); ++s)
      if (matrix_.at(t, s) != 0 &&
          target_.module().degree(t) != source_.module().degree(s))
        throw std::invalid_argument("chain map is not of degree 0");
  if (matrix_ * source_.differential() != target_.differential() * matrix_)
    throw std::invalid_argument("map does not commute with differentials");
}

CommutativeSquare::CommutativeSquare(ChainMap ab_, ChainMap ac_, ChainMap bd_, ChainMap cd_)
    : ab(std::move(ab_)), ac(std::move(ac_)), bd(std::move(bd_)), cd(std::move(cd_)) {
  if (bd.matrix() * ab.matrix() != cd.matrix() * ac.matrix())
    throw std::invalid_argument("square does not commute");
}

std::map<int, int> homology_ranks(const CochainComplex& c) {
  const GradedModule& m = c.module();
  const FMatrix& d = c.differential();
  // Group basis indices by degree.
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < m.dim(); ++i) by_degree[m.degree(i)].push_back(i);

  auto block_rank = [&](int from_deg) {
    auto src = by_degree.find(from_deg);
    auto tgt = by_degree.find(from_deg + 1);
    if (src == by_degree.end() || tgt == by_degree.end()) return 0;
    FMatrix block(c.field(), static_cast<int>(tgt->second.size()),
                  static_cast<int>(src->second.size()));
    for (size_t r = 0; r < tgt->second.size(); ++r)
      for (size_t s = 0; s < src->second.size(); ++s)
        block.at(static_cast<int>(r), static_cast<int>(s)) =
            d.at(tgt->second[r], src->second[s]);
    return block.rank();
  };

  std::map<int, int> ranks;
  for (const auto& [deg, basis] : by_degree) {
    int h = static_cast<int>(basis.size()) - block_rank(deg) - block_rank(deg - 1);
    if (h != 0) ranks[deg] = h;
  }
  return ranks;
}

int total_homology_rank(const CochainComplex& c) {
  int total = 0;
  for (const auto& [deg, r] : homology_ranks(c)) {
    (void)deg;
    total += r;
  }
  return total;
}

bool is_acyclic(const CochainComplex& c) { return homology_ranks(c).empty(); }

CochainComplex cone(const ChainMap& f) {
  const PrimeField field = f.source().field();
  const GradedModule& a = f.source().module();
  const GradedModule& b = f.target().module();
  GradedModule m;
  for (int i = 0; i < a.dim(); ++i) m.add("cone.src:" + a.label(i), a.degree(i) - 1);
  for (int i = 0; i < b.dim(); ++i) m.add("cone.tgt:" + b.label(i), b.degree(i));
  int na = a.dim(), nb = b.dim();
  FMatrix d(field, na + nb, na + nb);
  const FMatrix& da = f.source().differential();
  const FMatrix& db = f.target().differential();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) d.at(i, j) = field.neg(da.at(i, j));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < na; ++j) d.at(na + i, j) = f.matrix().at(i, j);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) d.at(na + i, na + j) = db.at(i, j);
  return CochainComplex(field, std::move(m), std::move(d));
}

CochainComplex total_complex(const CommutativeSquare& sq) {
  const PrimeField field = sq.ab.source().field();
  const CochainComplex& A = sq.ab.source();
  const CochainComplex& B = sq.ab.target();
  const CochainComplex& C = sq.ac.target();
  const CochainComplex& D = sq.bd.target();

  GradedModule m;
  auto add_all = [&](const char* prefix, const GradedModule& part, int column) {
    for (int i = 0; i < part.dim(); ++i)
      m.add(std::string(prefix) + part.label(i), part.degree(i) + column);
  };
  add_all("tot.A:", A.module(), 0);
  add_all("tot.B:", B.module(), 1);
  add_all("tot.C:", C.module(), 1);
  add_all("tot.D:", D.module(), 2);

  int na = A.module().dim(), nb = B.module().dim(), nc = C.module().dim(),
      nd = D.module().dim();
  int oa = 0, ob = na, oc = na + nb, od = na + nb + nc;
  FMatrix d(field, m.dim(), m.dim());

  auto put = [&](int row_off, int col_off, const FMatrix& block, bool negate) {
    for (int i = 0; i < block.rows(); ++i)
      for (int j = 0; j < block.cols(); ++j)
        d.at(row_off + i, col_off + j) =
            negate ? field.neg(block.at(i, j)) : block.at(i, j);
  };

  // Vertical differentials twisted by (-1)^column.
  put(oa, oa, A.differential(), false);
  put(ob, ob, B.differential(), true);
  put(oc, oc, C.differential(), true);
  put(od, od, D.differential(), false);
  // Horizontal maps; the B->D branch carries the sign flip.
  put(ob, oa, sq.ab.matrix(), false);
  put(oc, oa, sq.ac.matrix(), false);
  put(od, ob, sq.bd.matrix(), true);
  put(od, oc, sq.cd.matrix(), false);

  return CochainComplex(field, std::move(m), std::move(d));
}

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(cone(f)); }

}  // namespace frontsheaf
