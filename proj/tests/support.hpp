#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "levelcone/bounds.hpp"
#include "levelcone/cancellation.hpp"
#include "levelcone/census.hpp"
#include "levelcone/diagram.hpp"
#include "levelcone/hvec_analysis.hpp"
#include "levelcone/hvector.hpp"
#include "levelcone/io.hpp"
#include "levelcone/lex.hpp"
#include "levelcone/pure.hpp"
#include "levelcone/rational.hpp"

namespace support {

using namespace levelcone;

inline Rational q(long long n, long long d = 1) { return Rational(n, d); }

struct Cell {
  int i;
  int j;
  Rational v;
};

inline BettiDiagram diagram(int p, std::initializer_list<Cell> cells) {
  BettiDiagram d(p);
  for (const auto& c : cells) d.add(c.i, c.j, c.v);
  return d;
}

inline BettiDiagram koszul(int p) {
  std::vector<int> d;
  for (int i = 0; i <= p; ++i) d.push_back(i);
  return pure_diagram(PureType(d));
}

inline PureType type(std::initializer_list<int> d) { return PureType(std::vector<int>(d)); }

/// Seeded generator with the few shapes the tests need.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  long long uniform_ll(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen);
  }
  bool coin() { return uniform(0, 1) == 1; }

  /// n/d with |n| <= max_num, 1 <= d <= max_den.
  Rational rational(int max_num, int max_den, bool positive) {
    const int n = positive ? uniform(1, max_num) : uniform(-max_num, max_num);
    return Rational(n, uniform(1, max_den));
  }

  /// Strictly increasing type starting at d0 with gaps in 1..max_gap.
  PureType pure_type(int p, int d0 = 0, int max_gap = 3) {
    std::vector<int> d{d0};
    for (int i = 1; i <= p; ++i) d.push_back(d.back() + uniform(1, max_gap));
    return PureType(d);
  }

  /// Positive combination of a few random pure diagrams.
  BettiDiagram pure_combo(int p, int terms) {
    BettiDiagram out(p);
    for (int k = 0; k < terms; ++k) out += rational(9, 5, true) * pure_diagram(pure_type(p));
    return out;
  }

  /// Integer h with h_0 in 1..max_h0 and 1 <= h_i <= h_0 r_i.
  HVector bounded_h(int p, int max_c, int max_h0 = 3) {
    const int c = uniform(0, max_c);
    const long long h0 = uniform(1, max_h0);
    HVector h;
    h.set(0, h0);
    for (int i = 1; i <= c; ++i)
      h.set(i, uniform_ll(1, h0 * static_cast<long long>(binom_r(i, p))));
    return h;
  }

  /// h = sum f_j ecomp_hvector(j, c, p) with f >= 0 and at least one f_j > 0.
  HVector ecomp_combination(int p, int c) {
    HVector h;
    const int pick = uniform(0, c);
    for (int j = 0; j <= c; ++j) {
      if (j != pick && uniform(0, 2) != 0) continue;
      h += rational(6, 4, true) * ecomp_hvector(j, c, p);
    }
    return h;
  }

  /// Random quotient Hilbert function of R^s generated in degree 0, built
  /// degree by degree within the growth bound.
  HVector o_sequence(const Integer& s, int p, int max_c) {
    const int c = uniform(0, max_c);
    std::vector<Rational> coeffs{Rational(s)};
    for (int d = 1; d <= c; ++d) {
      std::vector<long long> ok;
      const long long top = static_cast<long long>(s * binom_r(d, p));
      for (long long v = 1; v <= top; ++v) {
        auto trial = coeffs;
        trial.emplace_back(v);
        if (module_o_sequence(HVector(trial), s, p)) ok.push_back(v);
      }
      if (ok.empty()) break;
      coeffs.emplace_back(ok[static_cast<std::size_t>(uniform(0, static_cast<int>(ok.size()) - 1))]);
    }
    return HVector(coeffs);
  }
};

}  // namespace support
