#include "frontsheaf/chd.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace frontsheaf {

namespace {

int sheet_pos(const std::vector<std::string>& order, const std::string& s) {
  auto it = std::find(order.begin(), order.end(), s);
  if (it == order.end()) throw std::logic_error("sheet not found: " + s);
  return static_cast<int>(it - order.begin());
}

// Admissible off-diagonal slots of c(e_I): (row, col) with the column sheet
// strictly above the row sheet and the degrees matching 1 - dim.
std::vector<std::pair<int, int>> admissible_slots(const FrontComplex& front,
                                                  const SimplexIndex& I) {
  auto order = front.sheet_order(I);
  int m = simplex_dim(I);
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < static_cast<int>(order.size()); ++r)
    for (int c = 0; c < static_cast<int>(order.size()); ++c) {
      if (!front.strictly_above(I, order[c], order[r])) continue;
      if (-front.mu(I, order[r]) != -front.mu(I, order[c]) + 1 - m) continue;
      out.emplace_back(r, c);
    }
  return out;
}

}  // namespace

FMatrix boundary_extend(const FrontComplex& front, const FMatrix& cF,
                        const SimplexIndex& F, const SimplexIndex& I) {
  if (F == I) return cF;
  if (!is_face_of(F, I)) throw std::invalid_argument("boundary_extend: not a face pair");
  auto order_I = front.sheet_order(I);
  auto order_F = front.sheet_order(F);
  auto inc = front.iota(F, I);
  FMatrix out(cF.field(), static_cast<int>(order_I.size()), static_cast<int>(order_I.size()));
  for (int r = 0; r < cF.rows(); ++r)
    for (int c = 0; c < cF.cols(); ++c)
      if (cF.at(r, c) != 0)
        out.at(sheet_pos(order_I, inc.at(order_F[r])),
               sheet_pos(order_I, inc.at(order_F[c]))) = cF.at(r, c);
  int m = simplex_dim(F);
  if (m <= 1) {
    for (const CuspPair& p : front.cusp_pairs(F, I)) {
      int u = sheet_pos(order_I, p.upper), l = sheet_pos(order_I, p.lower);
      if (m == 0) {
        out.at(l, u) = 1;  // upper sheet steps down to the lower sheet
      } else {
        out.at(u, u) = 1;
        out.at(l, l) = 1;
      }
    }
  }
  return out;
}

SimplexDiagram cell_diagram(const FrontComplex& front, const CHD& chd,
                            const SimplexIndex& I) {
  SimplexDiagram D;
  D.field = chd.field;
  D.simplex = I;
  D.V = front.V(I);
  for (const SimplexIndex& F : faces_of(I))
    D.a.insert_or_assign(F, boundary_extend(front, chd.c.at(F), F, I));
  return D;
}

std::vector<std::string> validate_chd(const FrontComplex& front, const CHD& chd) {
  std::vector<std::string> out;
  for (const SimplexIndex& I : front.cells()) {
    std::string name = simplex_name(I);
    auto it = chd.c.find(I);
    if (it == chd.c.end()) {
      out.push_back("chd: missing map for " + name);
      continue;
    }
    const FMatrix& c = it->second;
    auto order = front.sheet_order(I);
    int n = static_cast<int>(order.size());
    int m = simplex_dim(I);
    if (c.rows() != n || c.cols() != n || c.field() != chd.field) {
      out.push_back("chd: map shape/field mismatch for " + name);
      continue;
    }
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) {
        int v = c.at(r, col);
        if (r == col) {
          int want = m == 1 ? 1 : 0;
          if (v != want)
            out.push_back("chd: diagonal entry of " + name + " at " + order[r] +
                          " must be " + std::to_string(want));
          continue;
        }
        if (v == 0) continue;
        if (!front.strictly_above(I, order[col], order[r]))
          out.push_back("chd: entry of " + name + " at (" + order[r] + ", " + order[col] +
                        ") is not strictly lower triangular");
        else if (-front.mu(I, order[r]) != -front.mu(I, order[col]) + 1 - m)
          out.push_back("chd: entry of " + name + " at (" + order[r] + ", " + order[col] +
                        ") violates the grading");
      }
  }
  if (!out.empty()) return out;
  for (const SimplexIndex& I : front.cells()) {
    for (const std::string& d : validate_diagram(cell_diagram(front, chd, I)))
      out.push_back("chd: cell " + simplex_name(I) + ": " + d);
  }
  return out;
}

CHD aug_to_chd(const SimplicialDGA& dga, const Augmentation& eps) {
  CHD out;
  out.field = eps.field;
  const FrontComplex& front = dga.front();
  for (const SimplexIndex& I : front.cells()) {
    NCMatrix m = dga.M(I);
    int n = m.size();
    FMatrix c(eps.field, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c.at(j, i) = evaluate(dga, eps, m.at(i, j));
    if (simplex_dim(I) == 1)
      c = c + FMatrix::identity(eps.field, n);
    out.c.insert_or_assign(I, c);
  }
  return out;
}

Augmentation chd_to_aug(const SimplicialDGA& dga, const CHD& chd) {
  Augmentation eps;
  eps.field = chd.field;
  for (const DgaGenerator& g : dga.generators()) {
    if (g.degree != 0) continue;
    eps.values[g.id] = chd.c.at(g.cell).at(g.j - 1, g.i - 1);
  }
  return eps;
}

bool is_augmentation(const SimplicialDGA& dga, const Augmentation& eps) {
  for (const DgaGenerator& g : dga.generators())
    if (evaluate(dga, eps, dga.diff_generator(g.id)) != 0) return false;
  return true;
}

std::vector<Augmentation> enumerate_augmentations(const SimplicialDGA& dga,
                                                  PrimeField field,
                                                  unsigned long long bound) {
  std::vector<std::string> unknowns;
  std::map<std::string, size_t> slot;
  for (const DgaGenerator& g : dga.generators())
    if (g.degree == 0) {
      slot[g.id] = unknowns.size();
      unknowns.push_back(g.id);
    }

  // Scalar constraints on the unknowns: for each generator g, the surviving
  // part of its differential (monomials whose letters all have degree 0,
  // plus the constant term) must vanish under the assignment. Only |g| = 1
  // can contribute, but filtering by survival keeps this assumption-free.
  // Each constraint is checked as soon as its last unknown gets a value.
  struct Constraint {
    std::vector<std::pair<std::vector<size_t>, int>> terms;  // word slots, coeff
  };
  std::vector<std::vector<Constraint>> due(unknowns.size() + 1);
  for (const DgaGenerator& g : dga.generators()) {
    Constraint con;
    size_t last = 0;
    bool nonempty = false;
    for (const auto& [w, c] : dga.diff_generator(g.id).terms()) {
      int coeff = field.reduce(c);
      if (coeff == 0) continue;
      std::vector<size_t> slots;
      bool alive = true;
      for (const std::string& id : w) {
        auto it = slot.find(id);
        if (it == slot.end()) {
          alive = false;
          break;
        }
        slots.push_back(it->second);
        last = std::max(last, it->second + 1);
      }
      if (!alive) continue;
      con.terms.emplace_back(std::move(slots), coeff);
      nonempty = true;
    }
    if (nonempty) due[last].push_back(std::move(con));
  }

  std::vector<Augmentation> out;
  std::vector<int> digits(unknowns.size(), 0);
  unsigned long long visited = 0;
  auto satisfied = [&](const Constraint& con) {
    int acc = 0;
    for (const auto& [slots, coeff] : con.terms) {
      int term = coeff;
      for (size_t s : slots) term = field.mul(term, digits[s]);
      acc = field.add(acc, term);
    }
    return acc == 0;
  };
  auto check_depth = [&](size_t depth) {
    for (const Constraint& con : due[depth])
      if (!satisfied(con)) return false;
    return true;
  };
  std::function<void(size_t)> dfs = [&](size_t depth) {
    if (depth == unknowns.size()) {
      Augmentation eps;
      eps.field = field;
      for (size_t i = 0; i < unknowns.size(); ++i) eps.values[unknowns[i]] = digits[i];
      out.push_back(eps);
      return;
    }
    for (int v = 0; v < field.modulus(); ++v) {
      if (++visited > bound)
        throw std::runtime_error("enumerate_augmentations: search space exceeds bound");
      digits[depth] = v;
      if (check_depth(depth + 1)) dfs(depth + 1);
    }
    digits[depth] = 0;
  };
  if (check_depth(0)) dfs(0);
  return out;
}

std::vector<CHD> enumerate_chds(const FrontComplex& front, PrimeField field,
                                unsigned long long bound) {
  // Free entries in a deterministic order; everything else is forced (zero
  // off the admissible slots, identity diagonal on edges).
  std::vector<std::tuple<SimplexIndex, int, int>> slots;
  for (const SimplexIndex& I : front.cells())
    for (auto [r, c] : admissible_slots(front, I)) slots.emplace_back(I, r, c);
  unsigned long long total = 1;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (total > bound / field.modulus())
      throw std::runtime_error("enumerate_chds: search space exceeds bound");
    total *= static_cast<unsigned long long>(field.modulus());
  }
  std::vector<CHD> out;
  std::vector<int> digits(slots.size(), 0);
  while (true) {
    CHD chd;
    chd.field = field;
    for (const SimplexIndex& I : front.cells()) {
      int n = static_cast<int>(front.sheet_order(I).size());
      FMatrix c(field, n, n);
      if (simplex_dim(I) == 1)
        c = FMatrix::identity(field, n);
      chd.c.insert_or_assign(I, c);
    }
    for (size_t i = 0; i < slots.size(); ++i) {
      auto& [I, r, c] = slots[i];
      chd.c.at(I).at(r, c) = digits[i];
    }
    if (validate_chd(front, chd).empty()) out.push_back(chd);
    size_t k = 0;
    while (k < digits.size() && ++digits[k] == field.modulus()) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

}  // namespace frontsheaf
