#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "levelcone/diagram.hpp"
#include "levelcone/error.hpp"
#include "levelcone/hvector.hpp"
#include "levelcone/pure.hpp"
#include "levelcone/rational.hpp"

namespace levelcone {

/// Exponent vector in p variables; x_1 is the largest variable.
using Monomial = std::vector<int>;

/// "x^2*y*z" for up to four variables (x, y, z, w), "x1^2*x3" beyond.
inline std::string monomial_str(const Monomial& m) {
  static const char* short_names[] = {"x", "y", "z", "w"};
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += m.size() <= 4 ? std::string(short_names[v]) : "x" + std::to_string(v + 1);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

namespace detail {

inline void fill_monomials(std::vector<Monomial>& out, Monomial& prefix, int left, int p) {
  const auto k = prefix.size();
  if (static_cast<int>(k) == p - 1) {
    prefix.push_back(left);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = left; e >= 0; --e) {
    prefix.push_back(e);
    fill_monomials(out, prefix, left - e, p);
    prefix.pop_back();
  }
}

struct LexTables {
  std::mutex mutex;
  std::map<std::pair<int, int>, std::vector<Monomial>> monomials;
  std::map<std::pair<int, int>, std::vector<long long>> shadows;
};

inline LexTables& lex_tables() {
  static LexTables tables;
  return tables;
}

inline const std::vector<Monomial>& monomials_locked(LexTables& t, int d, int p) {
  auto [it, fresh] = t.monomials.try_emplace({d, p});
  if (fresh && d >= 0 && p >= 1) {
    Monomial prefix;
    fill_monomials(it->second, prefix, d, p);
  }
  return it->second;
}

}  // namespace detail

/// Degree-d monomials in p variables, in descending lex order. The
/// reference stays valid for the life of the program.
inline const std::vector<Monomial>& lex_monomials(int d, int p) {
  auto& t = detail::lex_tables();
  std::lock_guard lock(t.mutex);
  return detail::monomials_locked(t, d, p);
}

/// Number of degree-(d+1) monomials divisible by one of the a largest
/// degree-d monomials, i.e. the degree-(d+1) part of the ideal they span.
inline long long lex_shadow(long long a, int d, int p) {
  auto& t = detail::lex_tables();
  std::lock_guard lock(t.mutex);
  auto [it, fresh] = t.shadows.try_emplace({d, p});
  auto& table = it->second;
  if (fresh) {
    const auto& mons = detail::monomials_locked(t, d, p);
    std::set<Monomial> seen;
    table.push_back(0);
    for (const auto& m : mons) {
      for (int v = 0; v < p; ++v) {
        Monomial up = m;
        ++up[static_cast<std::size_t>(v)];
        seen.insert(std::move(up));
      }
      table.push_back(static_cast<long long>(seen.size()));
    }
  }
  if (a < 0 || a >= static_cast<long long>(table.size()))
    throw Error(Errc::OutOfRange, "lex_shadow: a outside 0..r_d");
  return table[static_cast<std::size_t>(a)];
}

/// Largest possible degree-(d+1) value of a cyclic quotient whose degree-d
/// value is a: r_{d+1} minus the shadow of the r_d - a largest monomials.
inline long long macaulay_growth(long long a, int d, int p) {
  const Integer rd = binom_r(d, p);
  if (a < 0 || Integer(a) > rd)
    throw Error(Errc::OutOfRange, "macaulay_growth needs 0 <= a <= r_d");
  const long long r = static_cast<long long>(rd);
  return static_cast<long long>(binom_r(d + 1, p)) - lex_shadow(r - a, d, p);
}

/// The lex submodule of F = R^s (generators in degree 0) with quotient h,
/// split into its component ideals. Components with the same Hilbert
/// function are stored once with a count.
struct LexProfile {
  struct Component {
    Integer count;
    std::vector<long long> ideal_dims;              // degrees 0..c+1
    std::vector<std::pair<int, Monomial>> generators;  // minimal, by degree
  };
  int p = 0;
  int c = 0;
  std::vector<Component> components;
};

namespace detail {

/// clamp(s r_d - h_d - i r_d, 0, r_d) for component i (0-based).
inline Integer component_ideal_dim(const Integer& hd, const Integer& s, const Integer& rd,
                                   const Integer& i) {
  Integer v = s * rd - hd - i * rd;
  if (v < 0) v = 0;
  if (v > rd) v = rd;
  return v;
}

/// Integral coefficients h_0..h_{c+1}, or nullopt-like empty vector when h is
/// not an integral polynomial on [0,c].
inline std::vector<Integer> integral_coeffs(const HVector& h) {
  if (h.is_zero() || h.offset() < 0 || !h.is_integral()) return {};
  std::vector<Integer> out;
  for (int d = 0; d <= h.degree() + 1; ++d) out.push_back(numerator(h[d]));
  return out;
}

/// Component profiles grouped by Hilbert function. Only the components
/// where the ideal is neither 0 nor R in every degree can differ, so the
/// grouping walks the distinct values of floor((s r_d - h_d) / r_d).
inline std::vector<std::pair<Integer, std::vector<long long>>> component_groups(
    const std::vector<Integer>& h, const Integer& s, int p) {
  const int top = static_cast<int>(h.size()) - 1;
  std::vector<Integer> r;
  for (int d = 0; d <= top; ++d) r.push_back(binom_r(d, p));
  // Component i changes behaviour only at the breakpoints (s r_d - h_d) / r_d.
  std::set<Integer> cuts{Integer(0), s};
  for (int d = 0; d <= top; ++d) {
    const auto sd = static_cast<std::size_t>(d);
    const Integer ideal = s * r[sd] - h[sd];
    Integer q = ideal / r[sd];
    for (const Integer& k : {q, Integer(q + 1)})
      if (k >= 0 && k <= s) cuts.insert(k);
  }
  std::vector<std::pair<Integer, std::vector<long long>>> out;
  std::map<std::vector<long long>, std::size_t> index;
  auto prev = cuts.begin();
  for (auto it = std::next(cuts.begin()); it != cuts.end(); prev = it, ++it) {
    // Components *prev .. *it-1 share one profile except possibly the first.
    for (const Integer& lo : {*prev, Integer(*prev + 1)}) {
      if (lo >= *it) break;
      const Integer n = lo == *prev ? Integer(1) : *it - lo;
      std::vector<long long> dims;
      for (int d = 0; d <= top; ++d) {
        const auto sd = static_cast<std::size_t>(d);
        dims.push_back(static_cast<long long>(component_ideal_dim(h[sd], s, r[sd], lo)));
      }
      auto [pos, fresh] = index.try_emplace(dims, out.size());
      if (fresh)
        out.emplace_back(n, std::move(dims));
      else
        out[pos->second].first += n;
    }
  }
  return out;
}

}  // namespace detail

/// Macaulay's condition for a quotient of R^s generated in degree zero:
/// 0 <= h_d <= s r_d and every component's quotient grows within
/// macaulay_growth. False for non-integral h.
inline bool module_o_sequence(const HVector& h, const Integer& s, int p) {
  if (s < 1 || p < 1) throw Error(Errc::InvalidArgument, "module_o_sequence needs s, p >= 1");
  const auto coeffs = detail::integral_coeffs(h);
  if (coeffs.empty()) return false;
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    if (coeffs[d] < 0 || coeffs[d] > s * binom_r(static_cast<int>(d), p)) return false;
  for (const auto& [count, dims] : detail::component_groups(coeffs, s, p)) {
    for (std::size_t d = 0; d + 1 < dims.size(); ++d) {
      const int deg = static_cast<int>(d);
      const long long q0 = static_cast<long long>(binom_r(deg, p)) - dims[d];
      const long long q1 = static_cast<long long>(binom_r(deg + 1, p)) - dims[d + 1];
      if (q1 > macaulay_growth(q0, deg, p)) return false;
    }
  }
  return true;
}

inline bool module_o_sequence(const HVector& h, long long s, int p) {
  return module_o_sequence(h, Integer(s), p);
}

/// Lex component ideals and their minimal generators. Throws NotOSequence.
inline LexProfile lex_profile(const HVector& h, const Integer& s, int p) {
  if (!module_o_sequence(h, s, p))
    throw Error(Errc::NotOSequence, "h is not a Hilbert function of a quotient of R^" + s.str());
  const auto coeffs = detail::integral_coeffs(h);
  LexProfile out;
  out.p = p;
  out.c = h.degree();
  for (auto& [count, dims] : detail::component_groups(coeffs, s, p)) {
    LexProfile::Component comp{count, dims, {}};
    if (dims[0] == 0) {
      // The shadow of a lex segment is the initial lex segment one degree
      // up, so new generators are exactly the monomials past the shadow.
      for (std::size_t d = 1; d < dims.size(); ++d) {
        const int deg = static_cast<int>(d);
        const long long from = lex_shadow(dims[d - 1], deg - 1, p);
        const auto& mons = lex_monomials(deg, p);
        for (long long k = from; k < dims[d]; ++k)
          comp.generators.emplace_back(deg, mons[static_cast<std::size_t>(k)]);
      }
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

/// Betti diagram of F/L for the lex submodule L, by the stable-ideal rule:
/// a generator u of degree d whose largest variable index is m contributes
/// C(m-1, q) to beta_{q+1, d+q}.
inline BettiDiagram betti_lex(const HVector& h, const Integer& s, int p) {
  const LexProfile profile = lex_profile(h, s, p);
  BettiDiagram out(p);
  for (const auto& comp : profile.components) {
    if (comp.ideal_dims[0] != 0) continue;  // the unit ideal contributes nothing
    out.add(0, 0, Rational(comp.count));
    for (const auto& [deg, u] : comp.generators) {
      int m = 0;
      for (int v = 0; v < p; ++v)
        if (u[static_cast<std::size_t>(v)] > 0) m = v + 1;
      for (int q = 0; q < m; ++q)
        out.add(q + 1, deg + q, Rational(comp.count * binom_r(q, m - q)));
    }
  }
  return out;
}

inline BettiDiagram betti_lex(const HVector& h, long long s, int p) {
  return betti_lex(h, Integer(s), p);
}

struct NormalizedLex {
  Integer stabilizer;
  BettiDiagram diagram;
};

/// Smallest m with m h_d / r_d integral for every d; then every component of
/// the lex submodule of R^{ms} is 0 or a power of the maximal ideal.
inline Integer lex_stabilizer(const HVector& h, int p) {
  if (h.is_zero() || h.offset() < 0)
    throw Error(Errc::InvalidArgument, "h must be a nonzero polynomial on [0,c]");
  Integer m = 1;
  for (int d = 0; d <= h.degree(); ++d) {
    const Integer den = denominator(h[d] / binom_r_q(d, p));
    m = boost::multiprecision::lcm(m, den);
  }
  return m;
}

/// (1/m) betti_lex(m h, m s, p) for the stabilizer m.
inline NormalizedLex normalized_betti_lex(const HVector& h, const Integer& s, int p) {
  const Integer m = lex_stabilizer(h, p);
  BettiDiagram lex = betti_lex(h * Rational(m), s * m, p);
  return {m, lex * Rational(Integer(1), m)};
}

inline NormalizedLex normalized_betti_lex(const HVector& h, long long s, int p) {
  return normalized_betti_lex(h, Integer(s), p);
}

/// beta^lex_{p-1,j} >= beta^lex_{p,j} for every j != c+p, with s = h_0.
inline bool exact_cancellable(const HVector& h, int p) {
  if (h.is_zero() || h.offset() != 0 || !is_integer(h[0]) || h[0] < 1)
    throw Error(Errc::InvalidArgument, "exact_cancellable needs an integral h_0 >= 1");
  const int c = h.degree();
  const BettiDiagram lex = betti_lex(h, numerator(h[0]), p);
  for (const auto& [row, v] : lex.column(p))
    if (row != c + p && lex.at(p - 1, row) < v) return false;
  return true;
}

inline bool exact_dual_cancellable(const HVector& h, int p) {
  return exact_cancellable(h, p) && exact_cancellable(reverse(h), p);
}

}  // namespace levelcone
