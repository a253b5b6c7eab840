#include "frontsheaf/cobar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frontsheaf {

int simplex_dim(const SimplexIndex& I) {
  if (I.empty()) throw std::invalid_argument("empty simplex index");
  for (size_t k = 1; k < I.size(); ++k)
    if (I[k - 1] >= I[k]) throw std::invalid_argument("simplex index not strictly increasing");
  return static_cast<int>(I.size()) - 1;
}

int simplex_shifted_degree(const SimplexIndex& I) { return simplex_dim(I) - 1; }

std::string simplex_name(const SimplexIndex& I) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < I.size(); ++k) {
    if (k) os << ",";
    os << I[k];
  }
  os << ")";
  return os.str();
}

void CobarElement::add_term(const TensorWord& w, long long c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CobarElement CobarElement::scalar(long long c) {
  CobarElement e;
  e.add_term({}, c);
  return e;
}

CobarElement CobarElement::generator(const SimplexIndex& I) {
  simplex_dim(I);  // validates
  CobarElement e;
  e.add_term({I}, 1);
  return e;
}

CobarElement CobarElement::word(const TensorWord& w, long long c) {
  for (const SimplexIndex& l : w) simplex_dim(l);
  CobarElement e;
  e.add_term(w, c);
  return e;
}

CobarElement CobarElement::operator+(const CobarElement& o) const {
  CobarElement r(*this);
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

CobarElement CobarElement::operator-(const CobarElement& o) const {
  CobarElement r(*this);
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

CobarElement CobarElement::operator*(const CobarElement& o) const {
  CobarElement r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      TensorWord w(w1);
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  return r;
}

CobarElement CobarElement::scaled(long long c) const {
  CobarElement r;
  for (const auto& [w, k] : terms_) r.add_term(w, k * c);
  return r;
}

std::string CobarElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    long long a = c >= 0 ? c : -c;
    if (a != 1 || w.empty()) os << a;
    for (size_t k = 0; k < w.size(); ++k) {
      if (k || a != 1) os << (k ? "(x)" : "*");
      if (k) { /* separator already printed */ }
      os << "e" << simplex_name(w[k]);
    }
  }
  return os.str();
}

int word_shifted_degree(const TensorWord& w) {
  int d = 0;
  for (const SimplexIndex& l : w) d += simplex_shifted_degree(l);
  return d;
}

namespace {

// D_s on a single generator; if `reduced`, the first and last vertex-deletion
// terms are omitted.
CobarElement letter_diff(const SimplexIndex& I, bool reduced) {
  int m = simplex_dim(I);
  CobarElement r;
  // Vertex deletion sum, with the m = 0 term taken to be zero.
  if (m >= 1) {
    int k_first = reduced ? 1 : 0;
    int k_last = reduced ? m - 1 : m;
    for (int k = k_first; k <= k_last; ++k) {
      SimplexIndex face;
      for (int t = 0; t <= m; ++t)
        if (t != k) face.push_back(I[t]);
      long long sign = (k % 2 == 0) ? -1 : 1;  // overall minus times (-1)^k
      r.add_term({face}, sign);
    }
  }
  // Coproduct sum.
  for (int k = 0; k <= m; ++k) {
    SimplexIndex left(I.begin(), I.begin() + k + 1);
    SimplexIndex right(I.begin() + k, I.end());
    long long sign = (k % 2 == 0) ? 1 : -1;
    r.add_term({left, right}, sign);
  }
  return r;
}

CobarElement diff_impl(const CobarElement& x, bool reduced) {
  CobarElement r;
  for (const auto& [w, c] : x.terms()) {
    int sign = 1;
    for (size_t i = 0; i < w.size(); ++i) {
      CobarElement left = CobarElement::word(TensorWord(w.begin(), w.begin() + i));
      CobarElement right = CobarElement::word(TensorWord(w.begin() + i + 1, w.end()));
      CobarElement middle = letter_diff(w[i], reduced);
      r = r + (left * middle * right).scaled(static_cast<long long>(c) * sign);
      if (simplex_shifted_degree(w[i]) % 2 != 0) sign = -sign;
    }
  }
  return r;
}

}  // namespace

CobarElement cobar_diff(const CobarElement& x) { return diff_impl(x, false); }

CobarElement reduced_diff(const CobarElement& x) { return diff_impl(x, true); }

CobarElement phi(const CobarElement& x, bool inverse) {
  CobarElement r;
  for (const auto& [w, c] : x.terms()) {
    CobarElement prod = CobarElement::scalar(1);
    for (const SimplexIndex& l : w) {
      CobarElement image = CobarElement::generator(l);
      if (simplex_dim(l) == 1)
        image = inverse ? image + CobarElement::scalar(1) : image - CobarElement::scalar(1);
      prod = prod * image;
    }
    r = r + prod.scaled(c);
  }
  return r;
}

std::vector<SimplexIndex> faces_of(const SimplexIndex& I) {
  int n = static_cast<int>(I.size());
  std::vector<SimplexIndex> faces;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    SimplexIndex f;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) f.push_back(I[k]);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const SimplexIndex& a, const SimplexIndex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return faces;
}

std::vector<SimplexIndex> all_faces_of_standard_simplex(int n) {
  SimplexIndex top;
  for (int v = 0; v <= n; ++v) top.push_back(v);
  return faces_of(top);
}

bool is_face_of(const SimplexIndex& F, const SimplexIndex& I) {
  return std::includes(I.begin(), I.end(), F.begin(), F.end());
}

}  // namespace frontsheaf
