#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "levelcone/error.hpp"
#include "levelcone/hvector.hpp"
#include "levelcone/rational.hpp"

namespace levelcone {

/// Sparse diagram of codimension p: (column i in 0..p, row j) -> Rational.
///
/// The row index j is the absolute internal degree, so an entry D_{i,j}
/// describes R(-j) in homological degree i. Zero entries are not stored.
class BettiDiagram {
 public:
  using Key = std::pair<int, int>;  // (column, row)

  BettiDiagram() = default;
  explicit BettiDiagram(int codim) : codim_(codim) {
    if (codim < 0) throw Error(Errc::InvalidArgument, "negative codimension");
  }

  int codim() const noexcept { return codim_; }

  Rational at(int column, int row) const {
    auto it = entries_.find({column, row});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  void set(int column, int row, const Rational& value) {
    if (column < 0 || column > codim_)
      throw Error(Errc::InvalidArgument,
                  "column " + std::to_string(column) + " outside 0.." + std::to_string(codim_),
                  column);
    if (value == 0)
      entries_.erase({column, row});
    else
      entries_[{column, row}] = value;
  }

  void add(int column, int row, const Rational& value) {
    set(column, row, at(column, row) + value);
  }

  const std::map<Key, Rational>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Nonzero entries of one column, keyed by row.
  std::map<int, Rational> column(int i) const {
    std::map<int, Rational> out;
    for (auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
         it != entries_.end() && it->first.first == i; ++it)
      out.emplace(it->first.second, it->second);
    return out;
  }

  Rational column_total(int i) const {
    Rational total = 0;
    for (const auto& [row, v] : column(i)) total += v;
    return total;
  }

  bool is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& kv) { return kv.second > 0; });
  }

  BettiDiagram& operator+=(const BettiDiagram& other) {
    require_same_codim(other);
    for (const auto& [key, v] : other.entries_) add(key.first, key.second, v);
    return *this;
  }
  BettiDiagram& operator-=(const BettiDiagram& other) {
    require_same_codim(other);
    for (const auto& [key, v] : other.entries_) add(key.first, key.second, -v);
    return *this;
  }
  BettiDiagram& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [key, v] : entries_) v *= scalar;
    return *this;
  }

  friend BettiDiagram operator+(BettiDiagram a, const BettiDiagram& b) { return a += b; }
  friend BettiDiagram operator-(BettiDiagram a, const BettiDiagram& b) { return a -= b; }
  friend BettiDiagram operator*(BettiDiagram a, const Rational& s) { return a *= s; }
  friend BettiDiagram operator*(const Rational& s, BettiDiagram a) { return a *= s; }

  friend bool operator==(const BettiDiagram& a, const BettiDiagram& b) = default;

 private:
  void require_same_codim(const BettiDiagram& other) const {
    if (other.codim_ != codim_)
      throw Error(Errc::InvalidArgument, "codimension mismatch: " + std::to_string(codim_) +
                                             " vs " + std::to_string(other.codim_));
  }

  int codim_ = 0;
  std::map<Key, Rational> entries_;
};

/// Per-column row indices, one value per column 0..p.
using Shifts = std::vector<int>;

struct ShiftBounds {
  Shifts min;
  Shifts max;
};

/// S_D(t) = sum (-1)^i D_{i,j} t^j
inline LaurentPoly s_polynomial(const BettiDiagram& diagram) {
  LaurentPoly s;
  for (const auto& [key, v] : diagram.entries())
    s.add(key.second, key.first % 2 == 0 ? v : Rational(-v));
  return s;
}

/// Exact quotient of `poly` by (1 - t)^p, by p rounds of synthetic division.
inline HVector divide_by_one_minus_t(const LaurentPoly& poly, int p) {
  LaurentPoly current = poly;
  for (int round = 0; round < p; ++round) {
    if (current.is_zero()) return current;
    // (1 - t) q = f  <=>  q_j = sum_{k <= j} f_k, and the total must vanish.
    LaurentPoly quotient;
    Rational running = 0;
    const int lo = current.offset();
    const int hi = current.degree();
    for (int j = lo; j <= hi; ++j) {
      running += current[j];
      if (j < hi) quotient.set(j, running);
    }
    if (running != 0)
      throw Error(Errc::NotDivisible,
                  "S-polynomial is not divisible by (1-t)^" + std::to_string(p), round);
    current = std::move(quotient);
  }
  return current;
}

/// h_D(t) = S_D(t) / (1 - t)^p
inline HVector hvector_of(const BettiDiagram& diagram) {
  return divide_by_one_minus_t(s_polynomial(diagram), diagram.codim());
}

/// e(D) = h_D(1)
inline Rational multiplicity(const BettiDiagram& diagram) { return hvector_of(diagram).at_one(); }

/// D'_{i,j} = D_{p-i, p+shift-j}; shift = 0 is the plain dual.
inline BettiDiagram dual_flip(const BettiDiagram& diagram, int shift) {
  const int p = diagram.codim();
  BettiDiagram out(p);
  for (const auto& [key, v] : diagram.entries())
    out.set(p - key.first, p + shift - key.second, v);
  return out;
}

inline ShiftBounds shifts(const BettiDiagram& diagram) {
  ShiftBounds out;
  for (int i = 0; i <= diagram.codim(); ++i) {
    auto col = diagram.column(i);
    if (col.empty())
      throw Error(Errc::EmptyColumn, "column " + std::to_string(i) + " has no entries", i);
    out.min.push_back(col.begin()->first);
    out.max.push_back(col.rbegin()->first);
  }
  return out;
}

/// Removes column k, which must hold a single nonzero entry at row d_k, and
/// scales every remaining entry D_{i,j} by |d_k - j|.
inline BettiDiagram phi(const BettiDiagram& diagram, int k) {
  const int p = diagram.codim();
  if (k < 0 || k > p || p == 0)
    throw Error(Errc::InvalidArgument, "phi: column " + std::to_string(k) + " out of range", k);
  auto col = diagram.column(k);
  if (col.size() != 1)
    throw Error(Errc::NotSingleEntry,
                "column " + std::to_string(k) + " has " + std::to_string(col.size()) +
                    " nonzero entries",
                k);
  const int dk = col.begin()->first;
  BettiDiagram out(p - 1);
  for (const auto& [key, v] : diagram.entries()) {
    const auto [i, j] = key;
    if (i == k) continue;
    out.set(i < k ? i : i - 1, j, Rational(std::abs(dk - j)) * v);
  }
  return out;
}

/// Inverse of phi(., k) for a column-k entry placed at row dk.
inline BettiDiagram phi_inverse(const BettiDiagram& reduced, int k, int dk) {
  const int p = reduced.codim() + 1;
  if (k < 0 || k > p)
    throw Error(Errc::InvalidArgument, "phi_inverse: column " + std::to_string(k) + " out of range",
                k);
  BettiDiagram out(p);
  for (const auto& [key, v] : reduced.entries()) {
    const auto [i, j] = key;
    if (j == dk)
      throw Error(Errc::DivisionBySharedShift,
                  "entry at row " + std::to_string(dk) + " in column " + std::to_string(i), i);
    out.set(i < k ? i : i + 1, j, v / Rational(std::abs(dk - j)));
  }
  // S(1) = 0 pins the reinserted value; the remaining divisibility
  // conditions must then hold on their own.
  const Rational rest = s_polynomial(out).at_one();
  const Rational value = k % 2 == 0 ? Rational(-rest) : rest;
  out.set(k, dk, value);
  try {
    (void)hvector_of(out);
  } catch (const Error& e) {
    if (e.code() != Errc::NotDivisible) throw;
    throw Error(Errc::NoConsistentFill,
                "no value at (" + std::to_string(k) + "," + std::to_string(dk) +
                    ") makes the diagram divisible by (1-t)^" + std::to_string(p),
                k);
  }
  return out;
}

}  // namespace levelcone
