#include "frontsheaf/dga.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frontsheaf {

NCPoly NCPoly::scalar(long long c) {
  NCPoly p;
  p.add_term({}, c);
  return p;
}

NCPoly NCPoly::generator(const std::string& id) {
  NCPoly p;
  p.add_term({id}, 1);
  return p;
}

void NCPoly::add_term(const Word& w, long long c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly r;
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  }
  return r;
}

NCPoly NCPoly::scaled(long long c) const {
  NCPoly r;
  for (const auto& [w, k] : terms_) r.add_term(w, k * c);
  return r;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    long long a = c >= 0 ? c : -c;
    first = false;
    if (w.empty()) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) os << "*";
      os << w[i];
    }
  }
  return os.str();
}

NCMatrix NCMatrix::identity(int n) {
  NCMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = NCPoly::scalar(1);
  return m;
}

NCMatrix NCMatrix::operator+(const NCMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("NCMatrix: size mismatch");
  NCMatrix r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

NCMatrix NCMatrix::operator-(const NCMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("NCMatrix: size mismatch");
  NCMatrix r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

NCMatrix NCMatrix::operator*(const NCMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("NCMatrix: size mismatch");
  NCMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

NCMatrix NCMatrix::scaled(long long c) const {
  NCMatrix r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].scaled(c);
  return r;
}

std::string SimplicialDGA::canonical_id(const SimplexIndex& cell, int i, int j) const {
  std::ostringstream os;
  os << "m[";
  for (size_t k = 0; k < cell.size(); ++k) {
    if (k) os << ",";
    os << cell[k];
  }
  os << ";" << i << "," << j << "]";
  return os.str();
}

SimplicialDGA::SimplicialDGA(const FrontComplex& front) : front_(front) {
  // Generators: one for each strictly z-separated pair of sheets over each
  // cell, indexed by 1-based positions in descending-z order.
  for (const SimplexIndex& I : front_.cells()) {
    auto order = front_.sheet_order(I);
    int m = simplex_dim(I);
    int n = static_cast<int>(order.size());
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (!front_.strictly_above(I, order[i - 1], order[j - 1])) continue;
        DgaGenerator g;
        g.cell = I;
        g.i = i;
        g.j = j;
        g.degree = front_.mu(I, order[i - 1]) - front_.mu(I, order[j - 1]) + m - 1;
        g.id = canonical_id(I, i, j);
        by_id_[g.id] = generators_.size();
        generators_.push_back(std::move(g));
      }
    }
  }

  // Differential: entry (i,j) of
  //   Theta_I * ( -sum_k (-1)^k M_I(face with vertex k deleted)
  //               + sum_k (-1)^k M_I(front segment) * M_I(back segment) ),
  // with the deletion sum empty on 0-cells. Slots without a generator must
  // come out zero, which doubles as a consistency check on the input front.
  for (const SimplexIndex& I : front_.cells()) {
    int m = simplex_dim(I);
    int n = static_cast<int>(front_.sheet_order(I).size());
    NCMatrix rhs(n);
    if (m >= 1) {
      for (int k = 0; k <= m; ++k) {
        SimplexIndex face = I;
        face.erase(face.begin() + k);
        NCMatrix term = M_in(I, face);
        rhs = rhs - ((k % 2 == 0) ? term : term.scaled(-1));
      }
    }
    for (int k = 0; k <= m; ++k) {
      SimplexIndex left(I.begin(), I.begin() + k + 1);
      SimplexIndex right(I.begin() + k, I.end());
      NCMatrix prod = M_in(I, left) * M_in(I, right);
      rhs = rhs + ((k % 2 == 0) ? prod : prod.scaled(-1));
    }
    std::vector<int> th = theta(I);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        NCPoly entry = rhs.at(r, c).scaled(th[r]);
        std::string id = canonical_id(I, r + 1, c + 1);
        if (by_id_.count(id)) {
          diff_[id] = entry;
        } else if (!entry.is_zero()) {
          throw std::runtime_error("differential lands on a non-generator slot " + id +
                                   ": " + entry.str());
        }
      }
  }
}

const DgaGenerator& SimplicialDGA::generator(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw std::out_of_range("no generator " + id);
  return generators_[it->second];
}

int SimplicialDGA::degree_of_word(const NCPoly::Word& w) const {
  int d = 0;
  for (const auto& id : w) d += degree_of(id);
  return d;
}

const NCPoly& SimplicialDGA::diff_generator(const std::string& id) const {
  auto it = diff_.find(id);
  if (it == diff_.end()) throw std::out_of_range("no generator " + id);
  return it->second;
}

NCPoly SimplicialDGA::diff(const NCPoly& x) const {
  NCPoly out;
  for (const auto& [w, c] : x.terms()) {
    long long sign = 1;
    for (size_t i = 0; i < w.size(); ++i) {
      NCPoly piece = NCPoly::scalar(sign * c);
      for (size_t k = 0; k < i; ++k) piece = piece * NCPoly::generator(w[k]);
      piece = piece * diff_generator(w[i]);
      for (size_t k = i + 1; k < w.size(); ++k) piece = piece * NCPoly::generator(w[k]);
      out = out + piece;
      if (degree_of(w[i]) % 2 != 0) sign = -sign;
    }
  }
  return out;
}

NCMatrix SimplicialDGA::M(const SimplexIndex& I) const {
  int n = static_cast<int>(front_.sheet_order(I).size());
  NCMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) {
      std::string id = canonical_id(I, r + 1, c + 1);
      if (by_id_.count(id)) m.at(r, c) = NCPoly::generator(id);
    }
  return m;
}

NCMatrix SimplicialDGA::M_in(const SimplexIndex& I, const SimplexIndex& J) const {
  if (I == J) return M(I);
  if (!is_face_of(J, I)) throw std::invalid_argument("M_in: not a face pair");
  auto order_I = front_.sheet_order(I);
  auto order_J = front_.sheet_order(J);
  auto inc = front_.iota(J, I);
  auto pos = [&](const std::string& s) {
    return static_cast<int>(std::find(order_I.begin(), order_I.end(), s) - order_I.begin());
  };
  int n = static_cast<int>(order_I.size());
  NCMatrix m(n);
  int nj = static_cast<int>(order_J.size());
  for (int a = 1; a <= nj; ++a)
    for (int b = a + 1; b <= nj; ++b) {
      std::string id = canonical_id(J, a, b);
      if (!by_id_.count(id)) continue;
      int r = pos(inc.at(order_J[a - 1]));
      int c = pos(inc.at(order_J[b - 1]));
      m.at(r, c) = m.at(r, c) + NCPoly::generator(id);
    }
  if (simplex_dim(J) == 0) {
    for (const CuspPair& p : front_.cusp_pairs(J, I))
      m.at(pos(p.upper), pos(p.lower)) = m.at(pos(p.upper), pos(p.lower)) + NCPoly::scalar(1);
  }
  return m;
}

std::vector<int> SimplicialDGA::theta(const SimplexIndex& I) const {
  std::vector<int> th;
  for (const std::string& s : front_.sheet_order(I))
    th.push_back(front_.mu(I, s) % 2 == 0 ? 1 : -1);
  return th;
}

NCMatrix SimplicialDGA::matrix_hom(const SimplexIndex& I, const CobarElement& x) const {
  int n = static_cast<int>(front_.sheet_order(I).size());
  NCMatrix out(n);
  for (const auto& [w, c] : x.terms()) {
    NCMatrix prod = NCMatrix::identity(n);
    for (const SimplexIndex& letter : w) prod = prod * M_in(I, letter);
    out = out + prod.scaled(c);
  }
  return out;
}

NCMatrix SimplicialDGA::sigma(const NCMatrix& m) const {
  NCMatrix out(m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) {
      NCPoly e;
      for (const auto& [w, k] : m.at(r, c).terms())
        e.add_term(w, degree_of_word(w) % 2 == 0 ? k : -k);
      out.at(r, c) = e;
    }
  return out;
}

bool SimplicialDGA::check_d_squared() const {
  for (const DgaGenerator& g : generators_)
    if (!diff(diff_generator(g.id)).is_zero()) return false;
  return true;
}

int evaluate(const SimplicialDGA& dga, const Augmentation& eps, const NCPoly& x) {
  const PrimeField& F = eps.field;
  int acc = 0;
  for (const auto& [w, c] : x.terms()) {
    int term = F.reduce(c);
    for (const std::string& id : w) {
      if (dga.degree_of(id) != 0) {
        term = 0;
        break;
      }
      auto it = eps.values.find(id);
      term = F.mul(term, it == eps.values.end() ? 0 : it->second);
    }
    acc = F.add(acc, term);
  }
  return acc;
}

}  // namespace frontsheaf
