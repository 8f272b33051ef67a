#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "levelcone/diagram.hpp"
#include "levelcone/error.hpp"
#include "levelcone/hvector.hpp"
#include "levelcone/rational.hpp"

namespace levelcone {

/// r_i = C(p-1+i, p-1), the number of degree-i monomials in p variables;
/// zero for i < 0. Taking p-1 for p gives the s_i of the Lefschetz split.
inline Integer binom_r(int i, int p) {
  if (i < 0 || p <= 0) return (i == 0 && p == 0) ? Integer(1) : Integer(0);
  Integer out = 1;
  // C(p-1+i, i) computed incrementally; every partial product is integral.
  for (int k = 1; k <= i; ++k) out = out * (p - 1 + k) / k;
  return out;
}

inline Rational binom_r_q(int i, int p) { return Rational(binom_r(i, p)); }

/// Strictly increasing shift sequence (d_0, ..., d_p).
class PureType {
 public:
  PureType() = default;
  explicit PureType(std::vector<int> shifts) : d_(std::move(shifts)) {
    if (d_.empty()) throw Error(Errc::InvalidArgument, "empty pure type");
    for (std::size_t i = 1; i < d_.size(); ++i)
      if (d_[i] <= d_[i - 1])
        throw Error(Errc::NotIncreasing, "pure type is not strictly increasing",
                    static_cast<int>(i));
  }

  int codim() const { return static_cast<int>(d_.size()) - 1; }
  int operator[](int i) const { return d_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& shifts() const { return d_; }

  /// d <= d' componentwise.
  bool precedes(const PureType& other) const {
    if (other.d_.size() != d_.size()) return false;
    for (std::size_t i = 0; i < d_.size(); ++i)
      if (d_[i] > other.d_[i]) return false;
    return true;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(d_[i]);
    }
    return out + ")";
  }

  friend auto operator<=>(const PureType&, const PureType&) = default;

 private:
  std::vector<int> d_;
};

/// pi(d), normalized to 1 at (0, d_0). For k >= 1 the entry at (k, d_k) is
/// prod_{1<=i<=p, i!=k} |d_i - d_0| / |d_i - d_k|.
inline BettiDiagram pure_diagram(const PureType& type) {
  const int p = type.codim();
  BettiDiagram out(p);
  out.set(0, type[0], 1);
  for (int k = 1; k <= p; ++k) {
    Rational entry = 1;
    for (int i = 1; i <= p; ++i) {
      if (i == k) continue;
      entry *= Rational(std::abs(type[i] - type[0]), std::abs(type[i] - type[k]));
    }
    out.set(k, type[k], entry);
  }
  return out;
}

/// Multiplicity of pi(d): prod (d_i - d_0) / p!.
inline Rational pure_multiplicity(const PureType& type) {
  Rational e = 1;
  for (int i = 1; i <= type.codim(); ++i) e *= Rational(type[i] - type[0], i);
  return e;
}

/// (d0, d0+j+1, ..., d0+j+p-1, d0+c+p), 0 <= j <= c.
inline PureType ecomp_type(int d0, int j, int c, int p) {
  if (j < 0 || j > c || p < 1)
    throw Error(Errc::OutOfRange,
                "extremely compressed type needs 0 <= j <= c (j=" + std::to_string(j) +
                    ", c=" + std::to_string(c) + ")",
                j);
  std::vector<int> d{d0};
  for (int i = 1; i <= p - 1; ++i) d.push_back(d0 + j + i);
  d.push_back(d0 + c + p);
  return PureType(std::move(d));
}

/// Type of R/m^{j+1}: (0, j+1, ..., j+p).
inline PureType power_type(int j, int p) {
  std::vector<int> d{0};
  for (int i = 1; i <= p; ++i) d.push_back(j + i);
  return PureType(std::move(d));
}

/// h-vector of pi(0, j+1, ..., j+p-1, c+p):
/// r_i for i <= j, then (r_j / r_{c-j}) r_{c-i}.
inline HVector ecomp_hvector(int j, int c, int p) {
  if (j < 0 || j > c)
    throw Error(Errc::OutOfRange, "ecomp_hvector needs 0 <= j <= c", j);
  HVector h;
  const Rational ratio = binom_r_q(j, p) / binom_r_q(c - j, p);
  for (int i = 0; i <= c; ++i)
    h.set(i, i <= j ? binom_r_q(i, p) : ratio * binom_r_q(c - i, p));
  return h;
}

/// Weighted list of pure types of one codimension.
struct PureCombo {
  struct Term {
    Rational coeff;
    PureType type;
    friend bool operator==(const Term&, const Term&) = default;
  };

  int codim = 0;
  std::vector<Term> terms;

  BettiDiagram evaluate() const {
    BettiDiagram out(codim);
    for (const auto& term : terms) out += term.coeff * pure_diagram(term.type);
    return out;
  }

  /// True when consecutive types are increasing in the componentwise order.
  bool is_chain() const {
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (!terms[i - 1].type.precedes(terms[i].type)) return false;
    return true;
  }

  friend bool operator==(const PureCombo&, const PureCombo&) = default;
};

/// Peels off pure diagrams at the minimal shifts until nothing is left.
/// Succeeds exactly when every step sees strictly increasing minimal shifts.
inline PureCombo greedy_decompose(const BettiDiagram& diagram) {
  const int p = diagram.codim();
  if (!diagram.is_nonnegative())
    throw Error(Errc::NotInCone, "diagram has negative entries");
  PureCombo combo{p, {}};
  BettiDiagram rest = diagram;
  while (!rest.is_zero()) {
    std::vector<int> d;
    for (int i = 0; i <= p; ++i) {
      auto col = rest.column(i);
      if (col.empty())
        throw Error(Errc::NotInCone,
                    "column " + std::to_string(i) + " exhausted before the diagram", i);
      d.push_back(col.begin()->first);
    }
    for (int i = 1; i <= p; ++i)
      if (d[static_cast<std::size_t>(i)] <= d[static_cast<std::size_t>(i) - 1])
        throw Error(Errc::NotInCone, "minimal shifts are not strictly increasing", i);
    const PureType type(d);
    const BettiDiagram pure = pure_diagram(type);
    Rational q = rest.at(0, d[0]);
    for (int i = 1; i <= p; ++i) q = std::min(q, Rational(rest.at(i, type[i]) / pure.at(i, type[i])));
    rest -= q * pure;
    if (!rest.is_nonnegative())
      throw Error(Errc::NotInCone, "subtraction step went negative");
    combo.terms.push_back({q, type});
  }
  return combo;
}

/// Shift-separated diagrams (max shift of column i-1 < min shift of column i)
/// are in the cone; returns the greedy decomposition.
inline PureCombo quasipure_check(const BettiDiagram& diagram) {
  const auto bounds = shifts(diagram);
  for (int i = 1; i <= diagram.codim(); ++i)
    if (bounds.max[static_cast<std::size_t>(i) - 1] >= bounds.min[static_cast<std::size_t>(i)])
      throw Error(Errc::NotShiftSeparated,
                  "max shift of column " + std::to_string(i - 1) +
                      " is not below the min shift of column " + std::to_string(i),
                  i);
  try {
    return greedy_decompose(diagram);
  } catch (const Error& e) {
    throw Error(Errc::CertificateFailed,
                std::string("shift-separated diagram failed to decompose: ") + e.what());
  }
}

/// Cone membership for codim-3 diagrams with one entry in columns 0 and 3:
/// reduce to codimension one with phi_3 then phi_0 and check nonnegativity
/// and the prefix-sum dominance of column 0 over column 1.
inline bool codim3_level_membership(const BettiDiagram& diagram) {
  if (diagram.codim() != 3)
    throw Error(Errc::ShapeError, "codim3_level_membership needs codimension 3");
  if (diagram.column(0).size() != 1 || diagram.column(3).size() != 1)
    throw Error(Errc::ShapeError, "columns 0 and 3 must each hold exactly one nonzero entry");
  const BettiDiagram reduced = phi(phi(diagram, 3), 0);
  if (!reduced.is_nonnegative()) return false;

  const auto first = reduced.column(0);
  const auto second = reduced.column(1);
  if (first.empty() || second.empty()) return first.empty() && second.empty();
  const int lo = std::min(first.begin()->first, second.begin()->first - 1);
  const int hi = std::max(first.rbegin()->first, second.rbegin()->first);
  Rational left = 0;
  Rational right = 0;
  for (int l = lo; l <= hi; ++l) {
    auto a = first.find(l);
    if (a != first.end()) left += a->second;
    auto b = second.find(l + 1);
    if (b != second.end()) right += b->second;
    if (left < right) return false;
  }
  return reduced.column_total(0) == reduced.column_total(1);
}

}  // namespace levelcone
