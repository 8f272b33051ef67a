#pragma once

#include <string>
#include <vector>

#include "levelcone/cancellation.hpp"
#include "levelcone/diagram.hpp"
#include "levelcone/error.hpp"
#include "levelcone/hvec_analysis.hpp"
#include "levelcone/hvector.hpp"
#include "levelcone/pure.hpp"
#include "levelcone/rational.hpp"

namespace levelcone {

struct McBounds {
  Rational lower;
  Rational e;
  Rational upper;
  bool lower_ok = false;
  bool upper_ok = false;
  ShiftBounds shifts;  // translated so column 0 starts at row 0
};

/// beta_0 prod(min shifts)/p! <= e <= beta_0 prod(max shifts)/p!, evaluated
/// after translating the diagram so the smallest column-0 shift is zero.
inline McBounds mc_bounds(const BettiDiagram& diagram) {
  const int p = diagram.codim();
  ShiftBounds b = shifts(diagram);
  const int base = b.min[0];
  for (auto& v : b.min) v -= base;
  for (auto& v : b.max) v -= base;
  const Rational beta0 = diagram.column_total(0);
  Rational lower = beta0;
  Rational upper = beta0;
  for (int i = 1; i <= p; ++i) {
    const auto si = static_cast<std::size_t>(i);
    lower *= Rational(b.min[si], i);
    upper *= Rational(b.max[si], i);
  }
  McBounds out;
  out.e = multiplicity(diagram);
  out.lower = lower;
  out.upper = upper;
  out.lower_ok = lower <= out.e;
  out.upper_ok = out.e <= upper;
  out.shifts = std::move(b);
  return out;
}

struct ZanelloBounds {
  ZanelloIndices indices;
  Rational lower;
  Rational e;
  Rational upper;
  bool lower_ok = false;
  bool upper_ok = false;
};

/// n1 n2 (c+3)/6 <= h(1) <= N1 N2 (c+3)/6 with the sign-change indices of
/// (1-t)^3 h.
inline ZanelloBounds zanello_check(const HVector& h) {
  const ZanelloIndices idx = zanello_indices(h);
  const int c = h.degree();
  ZanelloBounds out;
  out.indices = idx;
  out.lower = Rational(idx.n1 * idx.n2 * (c + 3), 6);
  out.upper = Rational(idx.N1 * idx.N2 * (c + 3), 6);
  out.e = h.at_one();
  out.lower_ok = out.lower <= out.e;
  out.upper_ok = out.e <= out.upper;
  return out;
}

struct McCertificate {
  PureCombo combo;  // decomposition of F = E + D'
  Shifts max_shifts;
  Rational bound;  // h_0 dbar_1 dbar_2 dbar_3 / 6
  Rational e;
  CancellationCertificate cancellations;
  BettiDiagram separated;  // E
};

/// Upper-bound certificate for a codim-3 level diagram B with h-vector h.
///
/// D = sum a_j pi(0,j+1,j+2,j+3) is split at dbar_1 (largest row of B's
/// column 1): D' keeps j <= dbar_1 - 2, D'' the rest. Removing from D'' the
/// cancellations of D -> B at (1, j+1) and (2, j+2) for j >= dbar_1 gives a
/// shift-separated E, and F = E + D' decomposes into types <= dbar.
inline McCertificate mc_upper_certificate_codim3(const HVector& h, const BettiDiagram& B) {
  if (B.codim() != 3) throw Error(Errc::NotLevelShape, "certificate needs a codim-3 diagram");
  const auto col0 = B.column(0);
  const auto col3 = B.column(3);
  if (col0.size() != 1 || col3.size() != 1)
    throw Error(Errc::NotLevelShape, "columns 0 and 3 must each hold exactly one entry");
  if (col0.begin()->first != 0)
    throw Error(Errc::NotLevelShape, "column 0 must sit at row 0");
  if (hvector_of(B) != h)
    throw Error(Errc::NotACancellation, "diagram does not have the given h-vector");

  const MaxBettiCombo max = max_betti_combo(h, 3);
  const CancellationCertificate cert = cancellation_certificate(max.diagram, B);
  const ShiftBounds b = shifts(B);
  for (std::size_t i = 1; i < b.max.size(); ++i)
    if (b.min[i] <= b.min[i - 1] || b.max[i] <= b.max[i - 1])
      throw Error(Errc::NotLevelShape, "shifts are not strictly increasing", static_cast<int>(i));
  const int dbar1 = b.max[1];

  McCertificate out;
  out.max_shifts = b.max;
  out.cancellations = cert;
  out.combo.codim = 3;
  BettiDiagram rest(3);
  for (std::size_t j = 0; j < max.a.size(); ++j) {
    const Rational& a = max.a[j];
    if (a == 0) continue;
    const PureType type = power_type(static_cast<int>(j), 3);
    if (static_cast<int>(j) <= dbar1 - 2)
      out.combo.terms.push_back({a, type});
    else
      rest += a * pure_diagram(type);
  }
  CancellationCertificate removed;
  for (const auto& [key, amount] : cert.amounts) {
    const auto [k, l] = key;
    if ((k == 1 && l - 1 >= dbar1) || (k == 2 && l - 2 >= dbar1)) removed.add(k, l, amount);
  }
  try {
    out.separated = apply_cancellations(rest, removed);
    if (!out.separated.is_zero())
      for (auto& term : quasipure_check(out.separated).terms) out.combo.terms.push_back(term);
  } catch (const Error& e) {
    throw Error(Errc::CertificateFailed, std::string("E is not usable: ") + e.what());
  }

  for (const auto& term : out.combo.terms)
    for (int i = 0; i <= 3; ++i)
      if (term.type[i] > b.max[static_cast<std::size_t>(i)])
        throw Error(Errc::CertificateFailed, "type " + term.type.str() + " exceeds the maximal shift " +
                                                 std::to_string(b.max[static_cast<std::size_t>(i)]) +
                                                 " in column " + std::to_string(i));
  if (hvector_of(out.combo.evaluate()) != h)
    throw Error(Errc::CertificateFailed, "F does not have the h-vector of B");

  out.bound = h[0] * Rational(b.max[1]) * Rational(b.max[2]) * Rational(b.max[3]) / 6;
  out.e = h.at_one();
  return out;
}

}  // namespace levelcone
