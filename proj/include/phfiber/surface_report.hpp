#ifndef PHFIBER_SURFACE_REPORT_HPP
#define PHFIBER_SURFACE_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phfiber/barcode.hpp"
#include "phfiber/error.hpp"
#include "phfiber/fiber_circle.hpp"
#include "phfiber/fiber_interval.hpp"

namespace phfiber {

/// Which side of a Morse function a boundary circle sits on.
enum class BoundaryTag { Min, Max };

enum class NamedSurface { Sphere, ProjectivePlane, Torus, KleinBottle, Annulus, Disk, MobiusStrip };

const char* to_string(NamedSurface surface);
std::optional<NamedSurface> parse_named_surface(const std::string& name);

/// Compact connected surface. `genus` is the non-orientable genus (number of
/// cross-caps) when `orientable` is false.
struct SurfaceSpec {
  bool orientable = true;
  int genus = 0;
  std::vector<BoundaryTag> boundary;
  /// Second Betti number over the coefficient field of the barcode. When
  /// unset: 1 for closed orientable surfaces, 0 otherwise.
  std::optional<int> beta2;

  static SurfaceSpec named(NamedSurface surface, std::vector<BoundaryTag> tags = {});

  /// Throws InvalidSurface on negative genus or an out-of-range beta2.
  void validate() const;

  bool closed() const { return boundary.empty(); }
  int euler_characteristic() const;
  int beta0() const { return 1; }
  int resolved_beta2() const;
  int boundary_min_count() const;
  std::optional<NamedSurface> shortcut() const;
  std::string describe() const;

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// Symbolic homotopy type: a point, S^2, SO(3)^a x (S^1)^k, an unknown
/// torus power (S^1)^{k_f} with k_f <= bound, or the empty space.
struct HomotopyType {
  enum class Kind { Empty, Point, Sphere2, Product, BoundedTorus };

  Kind kind = Kind::Point;
  bool so3 = false;
  int circles = 0;
  int bound = 0;

  static HomotopyType empty() { return {Kind::Empty}; }
  static HomotopyType point() { return {Kind::Point}; }
  static HomotopyType sphere2() { return {Kind::Sphere2}; }
  static HomotopyType product(bool so3, int circles);
  static HomotopyType bounded_torus(int bound) { return {Kind::BoundedTorus, false, 0, bound}; }

  std::string to_string() const;

  friend bool operator==(const HomotopyType&, const HomotopyType&) = default;
};

struct FiberReport {
  std::string surface;
  std::optional<int> c1;
  HomotopyType homotopy_type;
  /// The classification entry that produced the type, e.g. "(S^1)^(c1+1)".
  std::string formula;
  std::map<int, std::string> pi_n;
  bool distinct_endpoints = true;
  bool c1_positive = false;
  /// False when a hypothesis of the classification (distinct endpoints) fails.
  bool guaranteed = true;
  std::optional<std::size_t> component_count;

  friend bool operator==(const FiberReport&, const FiberReport&) = default;
};

/// Bar counts that the surface formulas consume.
struct BarCounts {
  int total = 0;
  int infinite[3] = {0, 0, 0};
  int bounded[3] = {0, 0, 0};
  bool distinct_endpoints = true;
};

template <class Scalar>
BarCounts count_bars(const Barcode<Scalar>& d, Tolerance tol = {}) {
  BarCounts counts;
  std::vector<Scalar> endpoints;
  for (const auto& bar : d.bars()) {
    ++counts.total;
    if (bar.infinite()) {
      ++counts.infinite[bar.degree];
    } else {
      ++counts.bounded[bar.degree];
      endpoints.push_back(bar.birth);
      endpoints.push_back(*bar.death);
    }
  }
  std::sort(endpoints.begin(), endpoints.end());
  for (std::size_t i = 1; i < endpoints.size(); ++i) {
    if (approx_equal(endpoints[i - 1], endpoints[i], tol)) counts.distinct_endpoints = false;
  }
  return counts;
}

/// c1 = #bars - beta0 - beta2 - #(boundary circles tagged min).
int saddle_count(const BarCounts& counts, const SurfaceSpec& surface);

/// (c0, c1, c2) read off the critical-value correspondence: minima are
/// degree-0 births, maxima are degree-1 deaths and degree-2 births.
struct CriticalCounts {
  int minima = 0;
  int saddles = 0;
  int maxima = 0;
};
CriticalCounts critical_counts(const BarCounts& counts, const SurfaceSpec& surface);

FiberReport fiber_homotopy_type(const BarCounts& counts, const SurfaceSpec& surface);

/// pi_n of the fiber component for n >= 2, when c1 > 0.
std::string homotopy_groups(const SurfaceSpec& surface, int c1, int n);

template <class Scalar>
int saddle_count(const Barcode<Scalar>& d, const SurfaceSpec& surface, Tolerance tol = {}) {
  return saddle_count(count_bars(d, tol), surface);
}

template <class Scalar>
FiberReport fiber_homotopy_type(const Barcode<Scalar>& d, const SurfaceSpec& surface, Tolerance tol = {}) {
  return fiber_homotopy_type(count_bars(d, tol), surface);
}

/// Homotopy type of every fiber component over D for functions on the circle
/// (S^1 each, a point for the constant component) or the interval (a point
/// each), with the number of components.
template <class Scalar>
FiberReport circle_interval_report(DomainKind domain, const Barcode<Scalar>& d,
                                   const std::optional<BoundaryValues<Scalar>>& boundary = std::nullopt,
                                   const EnumerationOptions& options = {}, Tolerance tol = {}) {
  FiberReport report;
  report.surface = to_string(domain);
  report.distinct_endpoints = count_bars(d, tol).distinct_endpoints;
  if (domain == DomainKind::Circle) {
    const auto components = enumerate_components(d, options, tol);
    report.component_count = components.size();
    if (components.empty()) {
      report.homotopy_type = HomotopyType::empty();
      report.formula = "empty";
    } else if (components.front().is_constant()) {
      report.homotopy_type = HomotopyType::point();
      report.formula = "{*}";
    } else {
      report.homotopy_type = HomotopyType::product(false, 1);
      report.formula = "S^1";
    }
  } else {
    const auto components = enumerate_components_interval(d, boundary, options, tol);
    report.component_count = components.size();
    report.homotopy_type = components.empty() ? HomotopyType::empty() : HomotopyType::point();
    report.formula = components.empty() ? "empty" : "{*}";
  }
  return report;
}

}  // namespace phfiber

#endif  // PHFIBER_SURFACE_REPORT_HPP
