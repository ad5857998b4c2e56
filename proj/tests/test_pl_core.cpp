#include <doctest.h>

#include "support.hpp"

using namespace phfiber;
using namespace phfiber::testing;

TEST_CASE("scalar parsing is exact") {
  CHECK(q("0.25") == Q(1, 4));
  CHECK(q("1/3") == Q(1, 3));
  CHECK(q("-2.5e-1") == Q(-1, 4));
  CHECK(q("0.0571") == Q(571, 10000));
  CHECK(q("007") == Q(7));
  CHECK(from_double<Q>(0.1) == Q(1, 10));
  CHECK_THROWS_AS(q("abc"), Error);
  CHECK_THROWS_AS(q("1/0"), Error);
  CHECK(ScalarTraits<double>::parse("3/4") == doctest::Approx(0.75));
}

TEST_CASE("evaluation") {
  SUBCASE("affine segment on the interval") {
    const auto f = interval({"0", "0.5", "1"}, {"0", "1", "0"});
    CHECK(f(q("0.25")) == q("0.5"));
    CHECK(f(q("1")) == Q(0));
  }
  SUBCASE("constant circle function") {
    const auto f = circle({"0"}, {"3"});
    CHECK(is_constant(f));
    CHECK(f(q("0.3")) == Q(3));
    CHECK(f(q("1.7")) == Q(3));
  }
  SUBCASE("circle wraps around the base point") {
    const auto f = circle({"0", "0.5"}, {"0", "1"});
    CHECK(f(q("0.75")) == q("0.5"));
    CHECK(f(q("1.25")) == q("0.5"));
    CHECK(f(q("-0.25")) == q("0.5"));
  }
  SUBCASE("two-gon canonical representative against its closed form") {
    const auto f = canonical_representative(CyclicClass<Q>{{DomainKind::Circle, qs({"0", "1"})}});
    CHECK(f(q("0.25")) == q("0.5"));
    for (int k = 0; k < 1000; ++k) {
      const Q t(k, 1000);
      const Q expected = t <= Q(1, 2) ? 2 * t : 2 * (1 - t);
      CHECK(f(t) == expected);
    }
  }
}

TEST_CASE("function validation") {
  CHECK_THROWS_AS(interval({"0", "0.5", "0.4", "1"}, {"0", "1", "2", "3"}), Error);
  CHECK_THROWS_AS(interval({"0", "0.5"}, {"0", "1"}), Error);
  CHECK_THROWS_AS(circle({"0", "1"}, {"0", "1"}), Error);
  CHECK_THROWS_AS(circle({"0.1", "0.5"}, {"0", "1"}), Error);
  try {
    circle({"0", "0.5"}, {"0"});
    FAIL("expected InvalidFunction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidFunction);
  }
}

TEST_CASE("extrema") {
  SUBCASE("alternating samples on the circle") {
    const auto ex = extrema(circle_even(qs({"0", "1", "0.2", "0.8"})));
    CHECK(ex.sequence.values == qs({"0", "1", "0.2", "0.8"}));
    CHECK(ex.sequence.pair_count() == 2);
  }
  SUBCASE("monotone interval function") {
    const auto ex = extrema(interval({"0", "1"}, {"0", "1"}));
    REQUIRE(ex.sets.size() == 2);
    CHECK(ex.sets[0].is_minimum);
    CHECK(ex.sets[0].lo == Q(0));
    CHECK_FALSE(ex.sets[1].is_minimum);
    CHECK(ex.sets[1].lo == Q(1));
    CHECK(ex.sequence.values == qs({"0", "1"}));
  }
  SUBCASE("a flat top is a single critical set") {
    const auto ex = extrema(circle({"0", "0.25", "0.5", "0.75"}, {"0", "1", "1", "0"}));
    REQUIRE(ex.sets.size() == 2);
    const auto& top = ex.sets[1];
    CHECK_FALSE(top.is_minimum);
    CHECK(top.lo == q("0.25"));
    CHECK(top.hi == q("0.5"));
    CHECK(ex.sets[0].contains_base_point());
  }
  SUBCASE("a plateau straddling the base point") {
    const auto ex = extrema(circle({"0", "0.2", "0.5", "0.9"}, {"1", "0.5", "0", "1"}));
    REQUIRE(ex.sets.size() == 2);
    CHECK(ex.sequence.values == qs({"0", "1"}));
    CHECK(ex.sets[1].lo == q("0.9"));
    CHECK(ex.sets[1].hi == Q(1));
  }
  SUBCASE("interior points and intermediate flats are not critical") {
    const auto ex = extrema(interval({"0", "0.2", "0.4", "0.6", "1"}, {"0", "0.5", "0.5", "0.7", "1"}));
    CHECK(ex.sequence.values == qs({"0", "1"}));
  }
  CHECK_THROWS_AS(extrema(circle({"0", "0.5"}, {"2", "2"})), Error);
}

TEST_CASE("cyclic normal form") {
  using Seq = ExtremaSequence<Q>;
  CHECK(normalize_cyclic(Seq{DomainKind::Circle, qs({"0", "1", "0.2", "0.8"})}).values == qs({"0", "1", "0.2", "0.8"}));
  CHECK(normalize_cyclic(Seq{DomainKind::Circle, qs({"0.2", "0.8", "0", "1"})}).values == qs({"0", "1", "0.2", "0.8"}));

  random::Engine rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(random::uniform_int(rng, 0, 4));
    const Seq seq{DomainKind::Circle, random::alternating_values<Q>(rng, 2 * n, true, true, true)};
    const auto normal = normalize_cyclic(seq);
    for (std::size_t k = 0; k < n; ++k) {
      const auto rotated = rotate_pairs(seq, k);
      CHECK(normalize_cyclic(rotated) == normal);
      const auto shifts = cyclic_shifts(seq, rotated);
      CHECK(std::find(shifts.begin(), shifts.end(), k) != shifts.end());
    }
    // Brute-force minimum over rotations.
    auto best = seq.values;
    for (std::size_t k = 0; k < n; ++k) best = std::min(best, rotate_pairs(seq, k).values);
    CHECK(normal.values == best);
  }
}

TEST_CASE("reparametrization and composition") {
  const auto f = circle_even(qs({"0", "1", "0.2", "0.8"}));
  SUBCASE("identity") {
    const auto g = compose(f, Reparametrization<Q>::identity(DomainKind::Circle));
    for (const auto& t : f.breakpoints()) CHECK(g(t) == f(t));
    CHECK(sampled_distance(f, g) == 0.0);
  }
  SUBCASE("half turn of the two-gon swaps its extremal sets") {
    const auto tilde = canonical_representative(CyclicClass<Q>{{DomainKind::Circle, qs({"0", "1"})}});
    const auto g = compose(tilde, Reparametrization<Q>::rotation(Q(1, 2)));
    CHECK(g(Q(0)) == Q(1));
    CHECK(g(Q(1, 2)) == Q(0));
    CHECK(extrema(g).sequence.values == qs({"0", "1"}));
  }
  SUBCASE("non-injective maps collapse arcs") {
    const Reparametrization<Q> phi(DomainKind::Circle, qs({"0", "0.3", "0.6", "1"}), qs({"0", "0.5", "0.5", "1"}));
    const auto g = compose(f, phi);
    CHECK(g(q("0.4")) == f(q("0.5")));
    CHECK(barcode(g) == barcode(f));
  }
  SUBCASE("lift must have degree one") {
    CHECK_THROWS_AS(Reparametrization<Q>(DomainKind::Circle, qs({"0", "1"}), qs({"0", "2"})), Error);
    CHECK_THROWS_AS(Reparametrization<Q>(DomainKind::Circle, qs({"0", "0.5", "1"}), qs({"0", "0.7", "0.6"})), Error);
    CHECK_THROWS_AS(Reparametrization<Q>(DomainKind::Interval, qs({"0", "1"}), qs({"0.1", "1"})), Error);
  }
  SUBCASE("composition of maps agrees pointwise") {
    const auto a = Reparametrization<Q>::rotation(q("0.3"));
    const Reparametrization<Q> b(DomainKind::Circle, qs({"0", "0.5", "1"}), qs({"0", "0.25", "1"}));
    const auto ab = compose(a, b);
    for (int k = 0; k <= 20; ++k) {
      const Q s(k, 20);
      CHECK(ab.lift(s) == a.lift(b.lift(s)));
    }
  }
}

TEST_CASE("base point normalization moves onto a monotone arc") {
  const auto f = circle({"0", "0.1", "0.6"}, {"0", "1", "0.5"});
  const auto moved = normalize_base_point(f);
  const auto ex = extrema(moved.function);
  for (const auto& set : ex.sets) CHECK_FALSE(set.contains_base_point());
  CHECK(barcode(moved.function) == barcode(f));
}
