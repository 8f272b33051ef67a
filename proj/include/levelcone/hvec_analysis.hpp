#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "levelcone/diagram.hpp"
#include "levelcone/error.hpp"
#include "levelcone/hvector.hpp"
#include "levelcone/pure.hpp"
#include "levelcone/rational.hpp"

namespace levelcone {

namespace detail {

using Row3 = std::array<Rational, 3>;

inline Rational det3(const Row3& a, const Row3& b, const Row3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

/// Checks h is supported on [0,c] with h_0 > 0 and returns c.
inline int require_hvector(const HVector& h, const char* what) {
  if (h.is_zero() || h.offset() != 0 || h[0] <= 0)
    throw Error(Errc::InvalidArgument,
                std::string(what) + ": h must be supported on [0,c] with h_0 > 0");
  return h.degree();
}

}  // namespace detail

struct MaxBettiCombo {
  std::vector<Rational> a;  // a_0..a_c
  BettiDiagram diagram;     // sum a_j beta(R/m^{j+1})
};

/// a_j = h_j / r_j - h_{j+1} / r_{j+1} and D = sum a_j pi(0, j+1, ..., j+p).
/// Throws NotModuleHVector at the first negative a_j.
inline MaxBettiCombo max_betti_combo(const HVector& h, int p) {
  const int c = detail::require_hvector(h, "max_betti_combo");
  MaxBettiCombo out{{}, BettiDiagram(p)};
  for (int j = 0; j <= c; ++j) {
    const Rational a = h[j] / binom_r_q(j, p) - h[j + 1] / binom_r_q(j + 1, p);
    if (a < 0)
      throw Error(Errc::NotModuleHVector, "a_" + std::to_string(j) + " = " + to_string(a) + " < 0",
                  j);
    out.a.push_back(a);
    if (a != 0) out.diagram += a * pure_diagram(power_type(j, p));
  }
  return out;
}

/// Coefficients f_i of h on the extremely compressed h-vectors of socle
/// degree c, with the 3x3 determinants that carry their signs.
struct LevelWitness {
  std::vector<Rational> f;
  std::vector<Rational> dets;
  bool pass = false;
  PureCombo combo;  // sum f_i pi(0, i+1, ..., i+p-1, c+p) over nonzero f_i
  BettiDiagram diagram;
};

/// Returns the determinant at index i; out-of-range h and negative-index r
/// are zero.
inline Rational level_determinant(const HVector& h, int i, int c, int p) {
  auto r = [p](int k) { return binom_r_q(k, p); };
  return detail::det3({h[i - 1], h[i], h[i + 1]}, {r(i - 1), r(i), r(i + 1)},
                      {r(c - i + 1), r(c - i), r(c - i - 1)});
}

inline LevelWitness level_condition(const HVector& h, int p) {
  const int c = detail::require_hvector(h, "level_condition");
  auto r = [p](int k) { return binom_r_q(k, p); };
  LevelWitness out;
  out.pass = true;
  out.combo.codim = p;
  for (int i = 0; i <= c; ++i) {
    const Rational det = level_determinant(h, i, c, p);
    // Both 2x2 minors are negative, so f_i has the sign of det.
    const Rational left = r(i - 1) * r(c - i) - r(i) * r(c - i + 1);
    const Rational right = r(i) * r(c - i - 1) - r(i + 1) * r(c - i);
    const Rational f = r(c - i) * det / (left * right);
    out.dets.push_back(det);
    out.f.push_back(f);
    if (det < 0) out.pass = false;
    if (f != 0) out.combo.terms.push_back({f, ecomp_type(0, i, c, p)});
  }
  out.diagram = out.combo.evaluate();
  return out;
}

/// Codimension two: the determinant at i equals -(c+2)(h_{i-1} - 2h_i + h_{i+1}),
/// so this is concavity of h.
inline bool codim2_level_condition(const HVector& h) { return level_condition(h, 2).pass; }

struct CancellableMargins {
  bool pass = false;
  std::vector<Rational> a;
  std::vector<Rational> margins;      // D_{p-1,p+j} - D_{p,p+j}, j = 0..c-1
  std::vector<Rational> det_margins;  // same values from the determinant form
};

inline Rational cancellation_margin_det(const HVector& h, int j, int p) {
  auto r = [p](int k) { return binom_r_q(k, p); };
  return detail::det3({h[j], h[j + 1], h[j + 2]}, {r(j), r(j + 1), r(j + 2)},
                      {Rational(p), Rational(1), Rational(0)}) /
         r(j + 2);
}

/// h is a rational multiple of a cancellable h-vector iff every a_j >= 0 and
/// every margin D_{p-1,p+j} - D_{p,p+j} >= 0.
inline CancellableMargins rational_cancellable(const HVector& h, int p) {
  const int c = detail::require_hvector(h, "rational_cancellable");
  auto r = [p](int k) { return binom_r_q(k, p); };
  CancellableMargins out;
  out.pass = true;
  for (int j = 0; j <= c; ++j) {
    out.a.push_back(h[j] / r(j) - h[j + 1] / r(j + 1));
    if (out.a.back() < 0) out.pass = false;
  }
  for (int j = 0; j < c; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    const Rational margin = out.a[sj + 1] * (Rational(p) * r(j + 1) - r(j)) - out.a[sj] * r(j);
    out.margins.push_back(margin);
    out.det_margins.push_back(cancellation_margin_det(h, j, p));
    if (margin < 0) out.pass = false;
  }
  return out;
}

/// The four condition families for "h and its reverse are both rational
/// multiples of cancellable h-vectors", evaluated directly on h.
struct DualCancelConditions {
  bool pass = false;
  std::vector<Rational> forward_dets;    // i = 1..c
  std::vector<Rational> reverse_dets;    // i = 0..c-1
  std::vector<Rational> forward_ratios;  // i = 0..c
  std::vector<Rational> reverse_ratios;  // i = -1..c-1
};

inline DualCancelConditions rational_dual_cancellable(const HVector& h, int p) {
  const int c = detail::require_hvector(h, "rational_dual_cancellable");
  auto r = [p](int k) { return binom_r_q(k, p); };
  // h_k / r_m with h_k = 0 reads as 0 even where r_m vanishes.
  auto ratio = [&](int k, int m) { return h[k] == 0 ? Rational(0) : h[k] / r(m); };
  DualCancelConditions out;
  out.pass = true;
  auto record = [&out](std::vector<Rational>& list, Rational v) {
    if (v < 0) out.pass = false;
    list.push_back(std::move(v));
  };
  for (int i = 1; i <= c; ++i)
    record(out.forward_dets,
           detail::det3({h[i - 1], h[i], h[i + 1]}, {r(i - 1), r(i), r(i + 1)},
                        {Rational(p), Rational(1), Rational(0)}));
  for (int i = 0; i <= c - 1; ++i)
    record(out.reverse_dets,
           detail::det3({h[i - 1], h[i], h[i + 1]}, {Rational(0), Rational(1), Rational(p)},
                        {r(c - i + 1), r(c - i), r(c - i - 1)}));
  for (int i = 0; i <= c; ++i) record(out.forward_ratios, ratio(i, i) - ratio(i + 1, i + 1));
  for (int i = -1; i <= c - 1; ++i)
    record(out.reverse_ratios, ratio(i + 1, c - i - 1) - ratio(i, c - i));
  return out;
}

struct LefschetzSplit {
  int u = 0;
  HVector cokernel;    // h_Q
  HVector kernel;      // h_P
  HVector kernel_dual; // h_{P'}, P' = P^dual(-c-1)
};

/// Smallest u with h_u >= h_{u+1}; always exists because h_{c+1} = 0.
inline int first_weak_descent(const HVector& h) {
  int u = 0;
  while (h[u] < h[u + 1]) ++u;
  return u;
}

inline LefschetzSplit lefschetz_split(const HVector& h) {
  const int c = detail::require_hvector(h, "lefschetz_split");
  LefschetzSplit out;
  out.u = first_weak_descent(h);
  for (int i = 0; i <= out.u; ++i) out.cokernel.set(i, h[i] - h[i - 1]);
  for (int i = out.u + 1; i <= c + 1; ++i) out.kernel.set(i, h[i - 1] - h[i]);
  for (int i = 0; i <= c - out.u; ++i) out.kernel_dual.set(i, h[c - i] - h[c - i + 1]);
  return out;
}

struct WlpData {
  int u = 0;
  std::vector<Rational> f;  // 0..u
  std::vector<Rational> g;  // 0..c-u
  BettiDiagram F;
  BettiDiagram G;
  BettiDiagram E;
  bool pass = false;
  std::optional<PureCombo> decomposition;  // greedy decomposition of E on pass
};

/// Upper bound for level modules with the weak Lefschetz property:
/// F and G are the codim p-1 maximal combinations of the cokernel and the
/// dual kernel, and E_{i,j} = F_{i,j} + G_{p-i,p+c-j}.
inline WlpData wlp_condition(const HVector& h, int p) {
  const int c = detail::require_hvector(h, "wlp_condition");
  if (p < 2) throw Error(Errc::InvalidArgument, "wlp_condition needs p >= 2");
  auto s = [p](int i) { return binom_r_q(i, p - 1); };
  WlpData out;
  out.u = first_weak_descent(h);
  const int u = out.u;
  out.pass = true;

  for (int i = 0; i < u; ++i)
    out.f.push_back((h[i] - h[i - 1]) / s(i) - (h[i + 1] - h[i]) / s(i + 1));
  out.f.push_back((h[u] - h[u - 1]) / s(u));
  for (int i = 0; i < c - u; ++i)
    out.g.push_back((h[c - i] - h[c - i + 1]) / s(i) - (h[c - i - 1] - h[c - i]) / s(i + 1));
  out.g.push_back((h[u] - h[u + 1]) / s(c - u));

  out.F = BettiDiagram(p - 1);
  out.G = BettiDiagram(p - 1);
  for (std::size_t i = 0; i < out.f.size(); ++i) {
    if (out.f[i] < 0) out.pass = false;
    if (out.f[i] != 0) out.F += out.f[i] * pure_diagram(power_type(static_cast<int>(i), p - 1));
  }
  for (std::size_t i = 0; i < out.g.size(); ++i) {
    if (out.g[i] < 0) out.pass = false;
    if (out.g[i] != 0) out.G += out.g[i] * pure_diagram(power_type(static_cast<int>(i), p - 1));
  }

  out.E = BettiDiagram(p);
  for (const auto& [key, v] : out.F.entries()) out.E.add(key.first, key.second, v);
  for (const auto& [key, v] : out.G.entries()) out.E.add(p - key.first, p + c - key.second, v);

  if (out.pass) {
    try {
      out.decomposition = greedy_decompose(out.E);
    } catch (const Error& e) {
      if (e.code() != Errc::NotInCone) throw;
    }
  }
  return out;
}

}  // namespace levelcone
