#pragma once

#include <string>
#include <vector>

#include "sylow/common.hpp"

namespace sylow {

// An element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}.
class CyclotomicInt {
 public:
  CyclotomicInt() = default;
  // The zero element for prime p.
  explicit CyclotomicInt(int p);
  CyclotomicInt(int p, std::vector<BigInt> coeffs);

  static CyclotomicInt integer(int p, const BigInt& c);

  int p() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_rational() const;
  bool is_zero() const;

  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator-=(const CyclotomicInt& other);
  CyclotomicInt& operator*=(const CyclotomicInt& other);
  CyclotomicInt& operator*=(const BigInt& scalar);

  // Adds c * zeta^j without building the root first.
  void add_root(int j, const BigInt& c);

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const BigInt& c) { return a *= c; }
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void check_same_p(const CyclotomicInt& other) const;

  int p_ = 0;
  std::vector<BigInt> coeffs_;
};

CyclotomicInt root_of_unity(int p, long long j);
// zeta -> zeta^{-1}.
CyclotomicInt conj(const CyclotomicInt& x);
// The rational integer x, or IntegrityError if x is not rational.
BigInt as_integer(const CyclotomicInt& x);

}  // namespace sylow
