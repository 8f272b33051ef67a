#include "doctest.h"
#include "support.hpp"

using namespace support;

namespace {

BettiDiagram non_level_cancelled() {
  return diagram(3, {{0, 0, 5}, {1, 2, 12}, {2, 3, 1}, {3, 4, 6}, {2, 5, 27}, {3, 6, 15}});
}

}  // namespace

TEST_CASE("multiplicity bounds on the two cancelled examples") {
  const BettiDiagram d = max_betti_combo(HVector{16, 48, 21, 10}, 3).diagram;
  CancellationCertificate cert;
  cert.add(1, 3, 25);
  cert.add(2, 4, q(75, 2));
  cert.add(2, 5, 15);
  const BettiDiagram low = apply_cancellations(d, cert);
  const ShiftBounds s = shifts(low);
  CHECK(s.min == Shifts{0, 2, 3, 6});
  const McBounds m = mc_bounds(low);
  CHECK(m.lower == 96);
  CHECK(m.e == 95);
  CHECK_FALSE(m.lower_ok);
  CHECK(m.upper_ok);

  // The non-level example is reached from its maximal combination by an
  // explicit certificate that puts a column-3 entry below the socle.
  const BettiDiagram top = max_betti_combo(HVector{5, 15, 18, 15}, 3).diagram;
  CancellationCertificate nl;
  nl.add(1, 3, 15);
  nl.add(1, 4, q(45, 2));
  nl.add(2, 5, 9);
  CHECK(apply_cancellations(top, nl) == non_level_cancelled());
  CHECK(cancellation_certificate(top, non_level_cancelled()) == nl);
  const McBounds n = mc_bounds(non_level_cancelled());
  CHECK(shifts(non_level_cancelled()).max == Shifts{0, 2, 5, 6});
  CHECK(n.upper == 50);
  CHECK(n.e == 53);
  CHECK_FALSE(n.upper_ok);
}

TEST_CASE("pure diagrams meet both bounds") {
  Rng rng(17);
  for (int n = 0; n < 200; ++n) {
    const int p = rng.uniform(1, 5);
    const PureType t = rng.pure_type(p, rng.uniform(0, 3));
    const BettiDiagram d = rng.rational(7, 4, true) * pure_diagram(t);
    const McBounds m = mc_bounds(d);
    CHECK(m.lower == m.e);
    CHECK(m.upper == m.e);
  }
}

TEST_CASE("random pure combinations satisfy both bounds") {
  Rng rng(18);
  for (int n = 0; n < 250; ++n) {
    const int p = rng.uniform(1, 4);
    const BettiDiagram d = rng.pure_combo(p, rng.uniform(1, 4));
    const McBounds m = mc_bounds(d);
    // Independent upper bound: every type sits below the maximal shifts.
    const Shifts top = shifts(d).max;
    Rational prod = d.column_total(0);
    for (int i = 1; i <= p; ++i) prod *= top[static_cast<std::size_t>(i)];
    Integer fact = 1;
    for (int i = 2; i <= p; ++i) fact *= i;
    if (shifts(d).min[0] == 0) CHECK(m.upper == prod / Rational(fact));
    CHECK(m.lower <= m.e);
    CHECK(m.e <= m.upper);
  }
}

TEST_CASE("Zanello bounds") {
  const ZanelloBounds a = zanello_check(HVector{1, 3, 3, 1});
  CHECK(a.lower == 8);
  CHECK(a.upper == 8);
  CHECK(a.e == 8);
  const ZanelloBounds one = zanello_check(HVector{1});
  CHECK(one.indices == ZanelloIndices{1, 2, 1, 2});
  CHECK(one.lower == 1);
  CHECK(one.upper == 1);
  const ZanelloBounds low = zanello_check(HVector{16, 48, 21, 10});
  CHECK(low.indices == ZanelloIndices{2, 3, 4, 5});
  CHECK(low.lower == 6);
  CHECK(low.e == 95);
  CHECK(low.lower_ok);
  CHECK_THROWS_AS(zanello_check(HVector{}), Error);
}

TEST_CASE("upper-bound certificate") {
  const WlpData w = wlp_condition(HVector{1, 3, 5, 6, 2}, 3);
  const McCertificate cert = mc_upper_certificate_codim3(HVector{1, 3, 5, 6, 2}, w.E);
  CHECK(cert.max_shifts == Shifts{0, 4, 5, 7});
  CHECK(cert.bound == q(70, 3));
  CHECK(cert.e == 17);
  CHECK(cert.e <= cert.bound);
  CHECK(cert.combo.evaluate().at(0, 0) == 1);
  CHECK(hvector_of(cert.combo.evaluate()) == HVector{1, 3, 5, 6, 2});
  for (const auto& term : cert.combo.terms)
    for (int i = 0; i <= 3; ++i) CHECK(term.type[i] <= cert.max_shifts[static_cast<std::size_t>(i)]);

  const BettiDiagram pure = q(3, 2) * pure_diagram(type({0, 2, 3, 5}));
  const McCertificate single = mc_upper_certificate_codim3(hvector_of(pure), pure);
  CHECK(single.combo.evaluate() == pure);
  CHECK(single.bound == single.e);

  try {
    (void)mc_upper_certificate_codim3(HVector{5, 15, 18, 15}, non_level_cancelled());
    FAIL("expected NotLevelShape");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLevelShape);
  }
  try {
    (void)mc_upper_certificate_codim3(HVector{1, 3, 5, 6}, w.E);
    FAIL("expected NotACancellation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotACancellation);
  }
  CHECK_THROWS_AS(mc_upper_certificate_codim3(HVector{1}, koszul(2)), Error);
}
