#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace support;

namespace {

HVector poly(std::initializer_list<long long> c) {
  std::vector<Rational> v;
  for (long long x : c) v.emplace_back(x);
  return HVector(v);
}

const CensusReport& standard() {
  static const CensusReport report = run_census(1, 2, 6, 3);
  return report;
}

std::set<std::string> names(const std::vector<HVector>& hs) {
  std::set<std::string> out;
  for (const auto& h : hs) out.insert(hvector_str(h));
  return out;
}

/// Enumerates every integer h with h_0 = 1, h_c = hc in {1, 2} directly and
/// filters with the binomial oracles.
std::vector<std::vector<long long>> brute_candidates(long long hc, int c, int p, bool degenerate) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> h{1};
  std::function<void()> rec = [&] {
    const int d = static_cast<int>(h.size());
    if (d == c) {
      h.push_back(hc);
      std::vector<long long> rev(h.rbegin(), h.rend());
      const bool back = hc == 1 ? oracles::cyclic_o_sequence(rev, p) : oracles::splits_in_two(rev, p);
      if (oracles::cyclic_o_sequence(h, p) && back) out.push_back(h);
      h.pop_back();
      return;
    }
    const long long top = static_cast<long long>(binom_r(d, p));
    for (long long v = 1; v <= top; ++v) {
      if (d == 1 && !degenerate && c > 1 && v != top) continue;
      h.push_back(v);
      rec();
      h.pop_back();
    }
  };
  if (c == 0) {
    if (hc == 1) out.push_back({1});
    return out;
  }
  rec();
  return out;
}

}  // namespace

TEST_CASE("candidate enumeration") {
  CHECK(enumerate_candidates(1, 2, 6, 3).size() == 148);
  const auto zero = enumerate_candidates(1, 1, 0, 3);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == HVector{1});
  const auto one = enumerate_candidates(1, 2, 1, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == HVector{1, 2});
  CHECK(enumerate_candidates(1, 2, 6, 3, {true, 0}).size() == 159);
  CHECK_THROWS_AS(enumerate_candidates(0, 2, 3, 3), Error);
}

TEST_CASE("enumeration matches a brute-force oracle") {
  int compared = 0;
  for (int p = 2; p <= 3; ++p)
    for (long long hc = 1; hc <= 2; ++hc)
      for (int c = 0; c <= (p == 2 ? 6 : 4); ++c)
        for (bool degenerate : {false, true}) {
          std::vector<std::vector<long long>> got;
          for (const auto& h : enumerate_candidates(1, hc, c, p, {degenerate, 1})) {
            std::vector<long long> v;
            for (int i = 0; i <= h.degree(); ++i) v.push_back(static_cast<long long>(numerator(h[i])));
            got.push_back(v);
          }
          CAPTURE(p);
          CAPTURE(hc);
          CAPTURE(c);
          CHECK(got == brute_candidates(hc, c, p, degenerate));
          compared += static_cast<int>(got.size());
        }
  CHECK(compared > 50);
}

TEST_CASE("classification of listed h-vectors") {
  const CensusFlags nine = classify(poly({1, 3, 4, 5, 6, 4, 2}), 3);
  CHECK(nine.macaulay_both);
  CHECK(nine.normhvec);
  const CensusFlags four = classify(poly({1, 3, 6, 10, 7, 6, 2}), 3);
  CHECK(four.exact_dual_cancellable);
  CHECK_FALSE(four.normhvec);
  const CensusFlags eight = classify(poly({1, 3, 6, 6, 7}), 3);
  CHECK(eight.normhvec);
  CHECK_FALSE(eight.exact_dual_cancellable);

  for (const auto& h : {poly({1, 3, 5, 6, 4, 3}), poly({1, 3, 6, 6, 4, 3}), poly({1, 3, 6, 10, 7, 6})}) {
    CAPTURE(hvector_str(h));
    const CensusFlags f = classify(h, 3);
    CHECK(f.exact_dual_cancellable);
    CHECK_FALSE(f.normhvec);
  }
  for (const auto& h : {poly({1, 3, 6, 8, 8, 9}), poly({1, 3, 6, 9, 9, 10}), poly({1, 3, 6, 8, 9, 11}),
                        poly({1, 3, 6, 9, 10, 12}), poly({1, 3, 6, 10, 11, 13}), poly({1, 3, 6, 10, 12, 15}),
                        poly({1, 3, 6, 6, 7}), poly({1, 3, 6, 7, 9})}) {
    CAPTURE(hvector_str(h));
    const CensusFlags f = classify(h, 3);
    CHECK(f.macaulay_both);
    CHECK(f.normhvec);
    CHECK_FALSE(f.exact_dual_cancellable);
    CHECK(f.rational_dual_cancellable);
  }
  const std::set<std::string> normhvec = names(standard().select([](const CensusFlags& f) { return f.normhvec; }));
  for (const auto& h : {poly({1, 3, 4, 5, 6, 4, 2}), poly({1, 3, 4, 5, 6, 6, 2}), poly({1, 3, 5, 5, 4, 3, 2}),
                        poly({1, 3, 5, 6, 7, 4, 2}), poly({1, 3, 5, 7, 7, 4, 2}), poly({1, 3, 5, 7, 9, 5, 2}),
                        poly({1, 3, 6, 5, 4, 3, 2}), poly({1, 3, 6, 6, 5, 4, 2}), poly({1, 3, 6, 10, 7, 5, 2})}) {
    CAPTURE(hvector_str(h));
    CHECK(normhvec.count(hvector_str(h)) == 1);
  }
}

TEST_CASE("socle degree six census") {
  const CensusReport& r = standard();
  CHECK(r.total() == 148);
  CHECK(r.count(&CensusFlags::macaulay_both) == 148);
  CHECK(r.count(&CensusFlags::normhvec) == 67);
  CHECK(r.count(&CensusFlags::exact_dual_cancellable) == 71);
  CHECK(r.count(&CensusFlags::rational_dual_cancellable) == 116);
  CHECK(r.count(&CensusFlags::wlp) == 66);

  const auto normhvec = names(r.select([](const CensusFlags& f) { return f.normhvec; }));
  const auto exact = names(r.select([](const CensusFlags& f) { return f.exact_dual_cancellable; }));
  const auto rational = names(r.select([](const CensusFlags& f) { return f.rational_dual_cancellable; }));
  CHECK(std::includes(exact.begin(), exact.end(), normhvec.begin(), normhvec.end()));
  CHECK(std::includes(rational.begin(), rational.end(), exact.begin(), exact.end()));
  std::set<std::string> diff;
  std::set_difference(exact.begin(), exact.end(), normhvec.begin(), normhvec.end(),
                      std::inserter(diff, diff.end()));
  CHECK(diff == names({poly({1, 3, 5, 7, 6, 6, 2}), poly({1, 3, 6, 7, 6, 6, 2}), poly({1, 3, 6, 9, 7, 6, 2}),
                       poly({1, 3, 6, 10, 7, 6, 2})}));
  for (const auto& e : r.entries)
    if (e.flags.wlp) CHECK(e.flags.normhvec);
}

TEST_CASE("census does not depend on the thread count") {
  const CensusReport a = run_census(1, 2, 5, 3, {false, 1});
  const CensusReport b = run_census(1, 2, 5, 3, {false, 4});
  REQUIRE(a.total() == b.total());
  for (std::size_t i = 0; i < a.total(); ++i) {
    CHECK(a.entries[i].h == b.entries[i].h);
    CHECK(a.entries[i].flags == b.entries[i].flags);
  }
}

TEST_CASE("degenerate census") {
  const CensusReport r = run_census(1, 2, 6, 3, {true, 0});
  CHECK(r.total() == 159);
  CHECK(r.count(&CensusFlags::normhvec) == 74);
  CHECK(r.count(&CensusFlags::exact_dual_cancellable) == 78);
  CHECK(r.count(&CensusFlags::rational_dual_cancellable) == 125);
  CHECK(r.count(&CensusFlags::wlp) == 73);
}
