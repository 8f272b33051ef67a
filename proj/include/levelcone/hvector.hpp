#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <vector>

#include "levelcone/error.hpp"
#include "levelcone/rational.hpp"

namespace levelcone {

/// Finitely supported Laurent polynomial in t with rational coefficients.
///
/// Used both for h-vectors h(t) and for the alternating polynomials S_D(t)
/// of diagrams. Zero coefficients are never stored, so the empty map is the
/// zero polynomial and equality is plain map equality.
class HVector {
 public:
  HVector() = default;

  /// Coefficients of t^offset, t^(offset+1), ...
  explicit HVector(const std::vector<Rational>& coeffs, int offset = 0) {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      set(offset + static_cast<int>(i), coeffs[i]);
  }

  HVector(std::initializer_list<long long> coeffs) {
    int degree = 0;
    for (long long value : coeffs) set(degree++, Rational(value));
  }

  static HVector monomial(int degree, const Rational& coeff) {
    HVector h;
    h.set(degree, coeff);
    return h;
  }

  Rational operator[](int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void set(int degree, const Rational& value) {
    if (value == 0)
      coeffs_.erase(degree);
    else
      coeffs_[degree] = value;
  }

  void add(int degree, const Rational& value) { set(degree, (*this)[degree] + value); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Largest supported degree c. Throws on the zero polynomial.
  int degree() const {
    if (is_zero()) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
    return coeffs_.rbegin()->first;
  }

  /// Smallest supported degree.
  int offset() const {
    if (is_zero()) throw Error(Errc::ZeroPolynomial, "offset of the zero polynomial");
    return coeffs_.begin()->first;
  }

  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  /// Dense coefficient list h_0..h_c; requires offset() >= 0.
  std::vector<Rational> dense() const {
    if (is_zero()) return {};
    if (offset() < 0)
      throw Error(Errc::InvalidArgument, "negative degrees in a polynomial expected on [0,c]");
    std::vector<Rational> out(static_cast<std::size_t>(degree()) + 1);
    for (const auto& [d, v] : coeffs_) out[static_cast<std::size_t>(d)] = v;
    return out;
  }

  /// h(1), the multiplicity when h is an h-vector.
  Rational at_one() const {
    Rational sum = 0;
    for (const auto& [d, v] : coeffs_) sum += v;
    return sum;
  }

  bool is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& kv) { return is_integer(kv.second); });
  }

  HVector& operator+=(const HVector& other) {
    for (const auto& [d, v] : other.coeffs_) add(d, v);
    return *this;
  }
  HVector& operator-=(const HVector& other) {
    for (const auto& [d, v] : other.coeffs_) add(d, -v);
    return *this;
  }
  HVector& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [d, v] : coeffs_) v *= scalar;
    return *this;
  }

  friend HVector operator+(HVector a, const HVector& b) { return a += b; }
  friend HVector operator-(HVector a, const HVector& b) { return a -= b; }
  friend HVector operator*(HVector a, const Rational& s) { return a *= s; }
  friend HVector operator*(const Rational& s, HVector a) { return a *= s; }

  friend HVector operator*(const HVector& a, const HVector& b) {
    HVector out;
    for (const auto& [da, va] : a.coeffs_)
      for (const auto& [db, vb] : b.coeffs_) out.add(da + db, va * vb);
    return out;
  }

  friend bool operator==(const HVector& a, const HVector& b) = default;

 private:
  std::map<int, Rational> coeffs_;
};

using LaurentPoly = HVector;

/// (1 - t)^p
inline LaurentPoly one_minus_t_power(int p) {
  LaurentPoly out = LaurentPoly::monomial(0, 1);
  const LaurentPoly factor{1, -1};
  for (int k = 0; k < p; ++k) out = out * factor;
  return out;
}

/// Coefficients of (1 - t)^p h(t), i.e. the p-th difference of h.
inline LaurentPoly delta_power(const HVector& h, int p) { return h * one_minus_t_power(p); }

/// h_c + h_{c-1} t + ... + h_0 t^c.
inline HVector reverse(const HVector& h) {
  if (h.is_zero()) throw Error(Errc::ZeroPolynomial, "reverse of the zero polynomial");
  if (h.offset() < 0)
    throw Error(Errc::InvalidArgument, "reverse expects a polynomial supported on [0,c]");
  const int c = h.degree();
  HVector out;
  for (const auto& [d, v] : h.coeffs()) out.set(c - d, v);
  return out;
}

}  // namespace levelcone
