#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "levelcone/error.hpp"
#include "levelcone/hvec_analysis.hpp"
#include "levelcone/hvector.hpp"
#include "levelcone/lex.hpp"
#include "levelcone/pure.hpp"

namespace levelcone {

struct CensusOptions {
  /// Also enumerate h_1 < h_0 r_1 (by default h_1 is the full h_0 r_1 when c > 1).
  bool allow_degenerate = false;
  /// 0 means hardware concurrency, further capped by LEVELCONE_THREADS.
  unsigned threads = 0;
};

/// Integer h = h0 + h_1 t + ... + hc t^c, h_i >= 1, that satisfy Macaulay's
/// condition for R^{h0} and whose reverse does for R^{hc}. Lexicographic in
/// (h_1, ..., h_{c-1}).
inline std::vector<HVector> enumerate_candidates(long long h0, long long hc, int c, int p,
                                                 const CensusOptions& options = {}) {
  if (h0 < 1 || hc < 1 || c < 0 || p < 1)
    throw Error(Errc::InvalidArgument, "census needs h0, hc >= 1, c >= 0 and p >= 1");
  std::vector<HVector> out;
  if (c == 0) {
    if (h0 == hc) out.push_back(HVector{h0});
    return out;
  }
  std::vector<long long> prefix{h0};
  auto finish = [&] {
    std::vector<Rational> coeffs(prefix.begin(), prefix.end());
    coeffs.emplace_back(hc);
    HVector h(coeffs);
    if (module_o_sequence(h, h0, p) && module_o_sequence(reverse(h), hc, p))
      out.push_back(std::move(h));
  };
  auto recurse = [&](auto&& self) -> void {
    const int d = static_cast<int>(prefix.size());
    if (d == c) return finish();
    const long long top = h0 * static_cast<long long>(binom_r(d, p));
    const long long bottom = (d == 1 && !options.allow_degenerate) ? top : 1;
    for (long long v = bottom; v <= top; ++v) {
      prefix.push_back(v);
      // A prefix followed by zeros satisfies the growth condition exactly
      // when the prefix does, so this prunes without losing candidates.
      std::vector<Rational> coeffs(prefix.begin(), prefix.end());
      if (module_o_sequence(HVector(coeffs), h0, p)) self(self);
      prefix.pop_back();
    }
  };
  recurse(recurse);
  return out;
}

struct CensusFlags {
  bool macaulay_both = false;
  bool normhvec = false;
  bool exact_dual_cancellable = false;
  bool rational_dual_cancellable = false;
  bool wlp = false;
  friend bool operator==(const CensusFlags&, const CensusFlags&) = default;
};

inline CensusFlags classify(const HVector& h, int p) {
  CensusFlags f;
  const auto h0 = numerator(h[0]);
  const auto hc = numerator(h[h.degree()]);
  f.macaulay_both = h.is_integral() && module_o_sequence(h, h0, p) &&
                    module_o_sequence(reverse(h), hc, p);
  f.normhvec = level_condition(h, p).pass;
  f.exact_dual_cancellable = f.macaulay_both && exact_dual_cancellable(h, p);
  f.rational_dual_cancellable = rational_dual_cancellable(h, p).pass;
  f.wlp = p >= 2 && wlp_condition(h, p).pass;
  return f;
}

struct CensusReport {
  long long h0 = 0;
  long long hc = 0;
  int c = 0;
  int p = 0;
  bool allow_degenerate = false;

  struct Entry {
    HVector h;
    CensusFlags flags;
  };
  std::vector<Entry> entries;

  std::size_t total() const { return entries.size(); }

  template <class Pred>
  std::vector<HVector> select(Pred pred) const {
    std::vector<HVector> out;
    for (const auto& e : entries)
      if (pred(e.flags)) out.push_back(e.h);
    return out;
  }

  std::size_t count(bool CensusFlags::*flag) const {
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [flag](const Entry& e) { return e.flags.*flag; }));
  }
};

/// Worker count: options.threads or the hardware count, capped by
/// LEVELCONE_THREADS when that is a positive integer.
inline unsigned census_threads(const CensusOptions& options) {
  unsigned n = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("LEVELCONE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

/// Classifies every candidate. Results land at the candidate's index, so the
/// report does not depend on the thread count.
inline CensusReport run_census(long long h0, long long hc, int c, int p,
                               const CensusOptions& options = {}) {
  CensusReport report{h0, hc, c, p, options.allow_degenerate, {}};
  for (auto& h : enumerate_candidates(h0, hc, c, p, options))
    report.entries.push_back({std::move(h), {}});

  const std::size_t n = report.entries.size();
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(census_threads(options), std::max<std::size_t>(n, 1)));
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < n; i += workers)
        report.entries[i].flags = classify(report.entries[i].h, p);
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return report;
}

}  // namespace levelcone
