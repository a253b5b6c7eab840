#pragma once

#include <cstdint>
#include <stdexcept>

namespace frontsheaf {

// Arithmetic in GF(p) for a small prime modulus p. Elements are canonical
// representatives in [0, p). Everything is exact integer arithmetic.
class PrimeField {
public:
  explicit PrimeField(int p) : p_(p) {
    if (p < 2) throw std::invalid_argument("field modulus must be >= 2");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("field modulus must be prime");
  }

  int modulus() const { return p_; }

  int reduce(long long x) const {
    long long r = x % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r);
  }

  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int mul(int a, int b) const {
    return static_cast<int>((static_cast<long long>(a) * b) % p_);
  }

  // Multiplicative inverse by Fermat; p is tiny so repeated squaring is overkill
  // but harmless.
  int inv(int a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    int result = 1, base = reduce(a), e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
  int p_;
};

}  // namespace frontsheaf
