#pragma once

#include <map>
#include <string>
#include <utility>

#include "levelcone/diagram.hpp"
#include "levelcone/error.hpp"
#include "levelcone/hvector.hpp"
#include "levelcone/rational.hpp"

namespace levelcone {

/// Amounts b_{k,l} >= 0 of the consecutive cancellations C^{k,l}, each of
/// which removes b from positions (k,l) and (k+1,l).
struct CancellationCertificate {
  std::map<std::pair<int, int>, Rational> amounts;

  void add(int k, int l, const Rational& b) {
    Rational& slot = amounts[{k, l}];
    slot += b;
    if (slot == 0) amounts.erase({k, l});
  }

  bool empty() const { return amounts.empty(); }

  friend bool operator==(const CancellationCertificate&, const CancellationCertificate&) = default;
};

/// D - sum b_{k,l} C^{k,l}. Only final entries are checked for sign: the
/// C^{k,l} subtract independently, so nonnegative amounts with a
/// nonnegative result always admit a valid ordering.
inline BettiDiagram apply_cancellations(const BettiDiagram& diagram,
                                        const CancellationCertificate& cert) {
  const int p = diagram.codim();
  BettiDiagram out = diagram;
  for (const auto& [key, b] : cert.amounts) {
    const auto [k, l] = key;
    if (k < 0 || k >= p)
      throw Error(Errc::InvalidArgument,
                  "cancellation column " + std::to_string(k) + " outside 0.." + std::to_string(p - 1),
                  k);
    if (b < 0)
      throw Error(Errc::NegativeEntry, "negative cancellation amount at (" + std::to_string(k) +
                                           "," + std::to_string(l) + ")",
                  k);
    out.add(k, l, -b);
    out.add(k + 1, l, -b);
  }
  for (const auto& [key, v] : out.entries())
    if (v < 0)
      throw Error(Errc::NegativeEntry,
                  "entry (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                      ") becomes " + to_string(v),
                  key.first);
  return out;
}

/// Solves D - sum b C = B for b: b_{i,j} is the alternating partial sum
/// sum_{k<=i} (-1)^{i-k} (D_{k,j} - B_{k,j}).
inline CancellationCertificate cancellation_certificate(const BettiDiagram& from,
                                                        const BettiDiagram& to) {
  if (from.codim() != to.codim())
    throw Error(Errc::NotACancellation, "diagrams have different codimension");
  const int p = from.codim();
  const BettiDiagram diff = from - to;

  std::map<int, bool> rows;
  for (const auto& [key, v] : diff.entries()) rows[key.second] = true;

  CancellationCertificate cert;
  for (const auto& [row, unused] : rows) {
    Rational running = 0;
    for (int i = 0; i <= p; ++i) {
      running = diff.at(i, row) - running;
      if (i == p) {
        if (running != 0)
          throw Error(Errc::NotACancellation,
                      "row " + std::to_string(row) + " leaves residual " + to_string(running) +
                          " in column " + std::to_string(p),
                      row);
      } else if (running < 0) {
        throw Error(Errc::NotACancellation,
                    "negative amount " + to_string(running) + " needed at (" + std::to_string(i) +
                        "," + std::to_string(row) + ")",
                    row);
      } else if (running > 0) {
        cert.add(i, row, running);
      }
    }
  }
  return cert;
}

/// The maximally cancelled codim-3 level diagram with h-vector h: h_0 at
/// (0,0), the last coefficient of (1-t)^3 h in column 3, and every interior
/// coefficient of (1-t)^3 h in column 1 (negative) or column 2 (positive).
inline BettiDiagram maximal_cancellation_level(const HVector& h) {
  if (h.is_zero() || h.offset() != 0 || h[0] <= 0)
    throw Error(Errc::InvalidArgument, "h must be supported on [0,c] with h_0 > 0");
  const int c = h.degree();
  const LaurentPoly delta = delta_power(h, 3);
  if (delta[0] != h[0])
    throw Error(Errc::NotLevelShape, "leading coefficient of (1-t)^3 h differs from h_0");
  if (delta[c + 3] >= 0)
    throw Error(Errc::NotLevelShape, "top coefficient of (1-t)^3 h is not negative", c + 3);

  BettiDiagram out(3);
  out.set(0, 0, h[0]);
  out.set(3, c + 3, -delta[c + 3]);
  for (int j = 1; j < c + 3; ++j) {
    const Rational v = delta[j];
    if (v < 0) out.set(1, j, -v);
    if (v > 0) out.set(2, j, v);
  }
  return out;
}

/// Sign-change degrees of (1-t)^3 h.
struct ZanelloIndices {
  int n1 = 0;
  int n2 = 0;
  int N1 = 0;
  int N2 = 0;
  friend bool operator==(const ZanelloIndices&, const ZanelloIndices&) = default;
};

inline ZanelloIndices zanello_indices(const HVector& h) {
  if (h.is_zero() || h.offset() < 0)
    throw Error(Errc::InvalidArgument, "h must be a nonzero polynomial on [0,c]");
  const int c = h.degree();
  const LaurentPoly delta = delta_power(h, 3);
  int n1 = -1, n2 = -1, N1 = -1, N2 = -1;
  for (const auto& [i, v] : delta.coeffs()) {
    if (v < 0 && n1 < 0) n1 = i;
    if (v > 0 && i > 0 && n2 < 0) n2 = i;
    if (v < 0 && i <= c + 1) N1 = i;
    if (v > 0) N2 = i;
  }
  if (n1 < 0 || n2 < 0 || N1 < 0 || N2 < 0)
    throw Error(Errc::NoSignChange, "(1-t)^3 h lacks the required sign changes");
  return {n1, n2, N1, N2};
}

}  // namespace levelcone
