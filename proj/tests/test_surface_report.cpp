#include <doctest.h>

#include "support.hpp"

using namespace phfiber;
using namespace phfiber::testing;

namespace {

BarCounts closed_counts(int infinite1, int bounded0, int bounded1, int infinite2 = 1) {
  BarCounts c;
  c.infinite[0] = 1;
  c.infinite[1] = infinite1;
  c.infinite[2] = infinite2;
  c.bounded[0] = bounded0;
  c.bounded[1] = bounded1;
  c.total = 1 + infinite1 + infinite2 + bounded0 + bounded1;
  return c;
}

// Barcode counts with a prescribed number of saddles on S.
BarCounts counts_with_saddles(const SurfaceSpec& s, int c1) {
  BarCounts c;
  c.infinite[0] = 1;
  c.infinite[2] = s.resolved_beta2();
  c.bounded[0] = c1 + s.boundary_min_count();
  c.total = 1 + c.infinite[2] + c.bounded[0];
  return c;
}

std::string type_of(NamedSurface named, int c1) {
  const auto s = SurfaceSpec::named(named);
  return fiber_homotopy_type(counts_with_saddles(s, c1), s).homotopy_type.to_string();
}

SurfaceSpec surface(bool orientable, int genus, int boundary) {
  SurfaceSpec s;
  s.orientable = orientable;
  s.genus = genus;
  s.boundary.assign(static_cast<std::size_t>(boundary), BoundaryTag::Min);
  return s;
}

}  // namespace

TEST_CASE("saddle counts from barcodes") {
  CHECK(saddle_count(bars({{0, "0", nullptr}, {2, "1", nullptr}}), SurfaceSpec::named(NamedSurface::Sphere)) == 0);
  const auto torus = bars({{0, "0", nullptr}, {1, "1", nullptr}, {1, "2", nullptr}, {2, "3", nullptr}});
  CHECK(saddle_count(torus, SurfaceSpec::named(NamedSurface::Torus)) == 2);
  CHECK(saddle_count(bars({{0, "0", nullptr}, {1, "0", "1"}}), SurfaceSpec::named(NamedSurface::Disk, {BoundaryTag::Min})) == 0);

  SUBCASE("Euler characteristic of closed surfaces") {
    const auto s = SurfaceSpec::named(NamedSurface::Torus);
    const auto cc = critical_counts(count_bars(torus), s);
    CHECK(cc.minima - cc.saddles + cc.maxima == s.euler_characteristic());
    const auto sphere = SurfaceSpec::named(NamedSurface::Sphere);
    const auto counts = closed_counts(0, 2, 0);  // three minima, two saddles, one maximum
    const auto sc = critical_counts(counts, sphere);
    CHECK(sc.saddles == 2);
    CHECK(sc.minima - sc.saddles + sc.maxima == sphere.euler_characteristic());
  }
  SUBCASE("inconsistent inputs") {
    auto disk = SurfaceSpec::named(NamedSurface::Disk, {BoundaryTag::Min});
    try {
      saddle_count(bars({{0, "0", nullptr}}), disk);
      FAIL("expected NegativeCount");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NegativeCount);
    }
    CHECK_THROWS_AS(saddle_count(bars({{0, "0", nullptr}}), SurfaceSpec::named(NamedSurface::Sphere)), Error);
    CHECK_THROWS_AS(saddle_count(bars({{0, "0", nullptr}, {0, "1", nullptr}, {2, "3", nullptr}}),
                                 SurfaceSpec::named(NamedSurface::Sphere)),
                    Error);
  }
}

TEST_CASE("no-saddle table") {
  CHECK(type_of(NamedSurface::Sphere, 0) == "S^2");
  CHECK(type_of(NamedSurface::Annulus, 0) == "{*}");
  CHECK(type_of(NamedSurface::Disk, 0) == "{*}");
  CHECK_THROWS_AS(type_of(NamedSurface::Torus, 0), Error);
}

TEST_CASE("saddle table") {
  CHECK(type_of(NamedSurface::Sphere, 1) == "SO(3)");
  CHECK(type_of(NamedSurface::Sphere, 3) == "SO(3) x (S^1)^2");
  CHECK(type_of(NamedSurface::ProjectivePlane, 2) == "SO(3) x S^1");
  CHECK(type_of(NamedSurface::Torus, 2) == "(S^1)^3");
  CHECK(type_of(NamedSurface::Annulus, 1) == "S^1");
  CHECK(type_of(NamedSurface::Disk, 3) == "(S^1)^3");
  CHECK(type_of(NamedSurface::MobiusStrip, 2) == "(S^1)^2");
  CHECK(type_of(NamedSurface::KleinBottle, 3) == "(S^1)^k_f with k_f <= 4");

  SUBCASE("surfaces with disks removed") {
    const auto pants = surface(true, 0, 3);
    CHECK(fiber_homotopy_type(counts_with_saddles(pants, 3), pants).homotopy_type.to_string() == "(S^1)^2");
    const auto punctured_torus = surface(true, 1, 1);
    CHECK(fiber_homotopy_type(counts_with_saddles(punctured_torus, 2), punctured_torus).formula == "(S^1)^(c1-1)");
  }
  SUBCASE("other surfaces") {
    const auto genus_two = surface(true, 2, 0);
    const auto report = fiber_homotopy_type(counts_with_saddles(genus_two, 6), genus_two);
    CHECK(report.homotopy_type.to_string() == "(S^1)^4");
    const auto three_caps = surface(false, 3, 0);
    CHECK(fiber_homotopy_type(counts_with_saddles(three_caps, 4), three_caps).homotopy_type.to_string() ==
          "(S^1)^k_f with k_f <= 3");
  }
  SUBCASE("repeated endpoints are flagged") {
    const auto torus = SurfaceSpec::named(NamedSurface::Torus);
    const auto d = bars({{0, "0", nullptr}, {0, "0.5", "1.5"}, {1, "1", nullptr}, {1, "1.5", "3"}, {1, "2", nullptr},
                         {2, "5", nullptr}});
    const auto report = fiber_homotopy_type(d, torus);
    CHECK_FALSE(report.distinct_endpoints);
    CHECK_FALSE(report.guaranteed);
  }
}

TEST_CASE("higher homotopy groups") {
  for (auto named : {NamedSurface::Sphere, NamedSurface::Torus, NamedSurface::KleinBottle, NamedSurface::Disk}) {
    CHECK(homotopy_groups(SurfaceSpec::named(named), 1, 2) == "0");
  }
  CHECK(homotopy_groups(SurfaceSpec::named(NamedSurface::Torus), 1, 3) == "0");
  CHECK(homotopy_groups(SurfaceSpec::named(NamedSurface::Sphere), 1, 3) == "Z");
  CHECK(homotopy_groups(SurfaceSpec::named(NamedSurface::ProjectivePlane), 2, 4) == "Z/2");
  CHECK(homotopy_groups(SurfaceSpec::named(NamedSurface::Sphere), 1, 6) == "Z/12");
  CHECK_THROWS_AS(homotopy_groups(SurfaceSpec::named(NamedSurface::Sphere), 0, 3), Error);
}

TEST_CASE("circle and interval reports") {
  const auto d = bars({{0, "0", nullptr}, {0, "0.2", "0.8"}, {1, "1", nullptr}});
  const auto circle_report = circle_interval_report(DomainKind::Circle, d);
  CHECK(circle_report.homotopy_type.to_string() == "S^1");
  CHECK(circle_report.component_count == enumerate_components(d).size());

  const auto constant = circle_interval_report(DomainKind::Circle, trivial_barcode(DomainKind::Circle, Q(1)));
  CHECK(constant.homotopy_type.to_string() == "{*}");
  CHECK(constant.component_count == 1u);

  const auto interval_report = circle_interval_report(DomainKind::Interval, bars({{0, "0", nullptr}, {0, "0.2", "0.8"}}));
  CHECK(interval_report.homotopy_type.to_string() == "{*}");
  CHECK_THROWS_AS(circle_interval_report(DomainKind::Interval, d), Error);
}

TEST_CASE("surface names") {
  CHECK(parse_named_surface("RP2") == NamedSurface::ProjectivePlane);
  CHECK(parse_named_surface("mobius") == NamedSurface::MobiusStrip);
  CHECK_FALSE(parse_named_surface("pretzel").has_value());
  CHECK(SurfaceSpec::named(NamedSurface::KleinBottle).euler_characteristic() == 0);
  CHECK(SurfaceSpec::named(NamedSurface::MobiusStrip).euler_characteristic() == 0);
  CHECK(SurfaceSpec::named(NamedSurface::Disk).euler_characteristic() == 1);
  CHECK(surface(true, 0, 2).shortcut() == NamedSurface::Annulus);
}
