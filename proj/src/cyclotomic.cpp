#include "sylow/cyclotomic.hpp"

namespace sylow {

CyclotomicInt::CyclotomicInt(int p) : p_(p) {
  if (p < 3 || !is_prime(p)) throw ArgumentError("cyclotomic: p must be an odd prime, got " + std::to_string(p));
  coeffs_.assign(static_cast<std::size_t>(p - 1), 0);
}

CyclotomicInt::CyclotomicInt(int p, std::vector<BigInt> coeffs) : CyclotomicInt(p) {
  if (coeffs.size() != coeffs_.size()) throw ArgumentError("cyclotomic: expected p-1 coefficients");
  coeffs_ = std::move(coeffs);
}

CyclotomicInt CyclotomicInt::integer(int p, const BigInt& c) {
  CyclotomicInt x(p);
  x.coeffs_[0] = c;
  return x;
}

bool CyclotomicInt::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CyclotomicInt::is_zero() const { return is_rational() && (coeffs_.empty() || coeffs_[0] == 0); }

void CyclotomicInt::check_same_p(const CyclotomicInt& other) const {
  if (p_ != other.p_)
    throw ArgumentError("cyclotomic: mismatched primes " + std::to_string(p_) + " and " + std::to_string(other.p_));
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  check_same_p(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
  check_same_p(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

void CyclotomicInt::add_root(int j, const BigInt& c) {
  j %= p_;
  if (j < 0) j += p_;
  if (j < p_ - 1) {
    coeffs_[static_cast<std::size_t>(j)] += c;
  } else {
    for (auto& x : coeffs_) x -= c;
  }
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& other) {
  check_same_p(other);
  // Multiply in Z[x]/(x^p - 1), then reduce by 1 + x + ... + x^{p-1}.
  std::vector<BigInt> full(static_cast<std::size_t>(p_), 0);
  const auto p = static_cast<std::size_t>(p_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      if (other.coeffs_[j] != 0) full[(i + j) % p] += coeffs_[i] * other.coeffs_[j];
  }
  for (std::size_t i = 0; i + 1 < p; ++i) coeffs_[i] = full[i] - full[p - 1];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string CyclotomicInt::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    std::string c = coeffs_[i].str();
    if (!out.empty()) out += c[0] == '-' ? " - " : " + ";
    else if (c[0] == '-') out += "-";
    if (c[0] == '-') c.erase(0, 1);
    if (i == 0) out += c;
    else {
      if (c != "1") out += c + "*";
      out += i == 1 ? std::string("z") : "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

CyclotomicInt root_of_unity(int p, long long j) {
  CyclotomicInt x(p);
  x.add_root(static_cast<int>(((j % p) + p) % p), 1);
  return x;
}

CyclotomicInt conj(const CyclotomicInt& x) {
  const int p = x.p();
  CyclotomicInt out(p);
  for (int i = 0; i < p - 1; ++i) {
    const auto& c = x.coeffs()[static_cast<std::size_t>(i)];
    if (c != 0) out.add_root(p - i, c);
  }
  return out;
}

BigInt as_integer(const CyclotomicInt& x) {
  if (!x.is_rational()) throw IntegrityError("as_integer: " + x.to_string() + " is not rational");
  return x.coeffs().empty() ? BigInt(0) : x.coeffs()[0];
}

}  // namespace sylow
