#include "phfiber/surface_report.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <utility>

namespace phfiber {

namespace {

struct NamedEntry {
  NamedSurface surface;
  const char* name;
  bool orientable;
  int genus;
  int boundary;
};

constexpr std::array<NamedEntry, 7> kNamed{{
    {NamedSurface::Sphere, "sphere", true, 0, 0},
    {NamedSurface::ProjectivePlane, "projective_plane", false, 1, 0},
    {NamedSurface::Torus, "torus", true, 1, 0},
    {NamedSurface::KleinBottle, "klein_bottle", false, 2, 0},
    {NamedSurface::Annulus, "annulus", true, 0, 2},
    {NamedSurface::Disk, "disk", true, 0, 1},
    {NamedSurface::MobiusStrip, "mobius_strip", false, 1, 1},
}};

const NamedEntry& entry(NamedSurface surface) {
  for (const auto& e : kNamed) {
    if (e.surface == surface) return e;
  }
  throw Error(ErrorCode::InvalidSurface, "unknown surface");
}

// pi_n(S^2) = pi_n(S^3) for n >= 3.
std::string sphere_homotopy_group(int n) {
  static const std::array<const char*, 8> known{"Z", "Z/2", "Z/2", "Z/12", "Z/2", "Z/2", "Z/3", "Z/15"};
  if (n >= 3 && n < 3 + static_cast<int>(known.size())) return known[static_cast<std::size_t>(n - 3)];
  return "pi_" + std::to_string(n) + "(S^2)";
}

bool covered_by_sphere(const SurfaceSpec& s) {
  auto named = s.shortcut();
  return named == NamedSurface::Sphere || named == NamedSurface::ProjectivePlane;
}

std::map<int, std::string> groups_of(const HomotopyType& type) {
  switch (type.kind) {
    case HomotopyType::Kind::Point:
      return {{2, "0"}, {3, "0"}};
    case HomotopyType::Kind::Sphere2:
      return {{2, "Z"}, {3, "Z"}};
    default:
      return {};
  }
}

}  // namespace

const char* to_string(NamedSurface surface) { return entry(surface).name; }

std::optional<NamedSurface> parse_named_surface(const std::string& name) {
  std::string key;
  for (char c : name) key.push_back(c == '-' || c == ' ' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "s2" || key == "2_sphere") key = "sphere";
  if (key == "rp2" || key == "real_projective_plane") key = "projective_plane";
  if (key == "moebius_strip" || key == "mobius") key = "mobius_strip";
  if (key == "klein") key = "klein_bottle";
  for (const auto& e : kNamed) {
    if (key == e.name) return e.surface;
  }
  return std::nullopt;
}

SurfaceSpec SurfaceSpec::named(NamedSurface surface, std::vector<BoundaryTag> tags) {
  const auto& e = entry(surface);
  if (tags.empty()) tags.assign(static_cast<std::size_t>(e.boundary), BoundaryTag::Min);
  if (static_cast<int>(tags.size()) != e.boundary) {
    throw Error(ErrorCode::InvalidSurface, std::string(e.name) + " has " + std::to_string(e.boundary) +
                                               " boundary components, got " + std::to_string(tags.size()) + " tags");
  }
  SurfaceSpec spec;
  spec.orientable = e.orientable;
  spec.genus = e.genus;
  spec.boundary = std::move(tags);
  return spec;
}

void SurfaceSpec::validate() const {
  if (genus < 0) throw Error(ErrorCode::InvalidSurface, "genus must be non-negative");
  if (!orientable && genus < 1) throw Error(ErrorCode::InvalidSurface, "non-orientable genus must be at least 1");
  if (beta2 && (*beta2 < 0 || *beta2 > 1)) throw Error(ErrorCode::InvalidSurface, "beta2 must be 0 or 1");
  if (beta2 == 1 && !closed()) throw Error(ErrorCode::InvalidSurface, "surfaces with boundary have beta2 = 0");
  if (beta2 == 0 && closed() && orientable) throw Error(ErrorCode::InvalidSurface, "closed orientable surfaces have beta2 = 1");
}

int SurfaceSpec::euler_characteristic() const {
  const int b = static_cast<int>(boundary.size());
  return orientable ? 2 - 2 * genus - b : 2 - genus - b;
}

int SurfaceSpec::resolved_beta2() const {
  if (beta2) return *beta2;
  return closed() && orientable ? 1 : 0;
}

int SurfaceSpec::boundary_min_count() const {
  int count = 0;
  for (auto tag : boundary) count += tag == BoundaryTag::Min ? 1 : 0;
  return count;
}

std::optional<NamedSurface> SurfaceSpec::shortcut() const {
  for (const auto& e : kNamed) {
    if (e.orientable == orientable && e.genus == genus && e.boundary == static_cast<int>(boundary.size())) return e.surface;
  }
  return std::nullopt;
}

std::string SurfaceSpec::describe() const {
  if (auto named = shortcut()) return to_string(*named);
  std::ostringstream out;
  out << (orientable ? "orientable" : "non_orientable") << "_genus_" << genus << "_boundary_" << boundary.size();
  return out.str();
}

HomotopyType HomotopyType::product(bool so3, int circles) {
  if (!so3 && circles == 0) return point();
  return {Kind::Product, so3, circles, 0};
}

std::string HomotopyType::to_string() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Point: return "{*}";
    case Kind::Sphere2: return "S^2";
    case Kind::BoundedTorus: return "(S^1)^k_f with k_f <= " + std::to_string(bound);
    case Kind::Product: break;
  }
  std::string out = so3 ? "SO(3)" : "";
  if (circles > 0) {
    if (!out.empty()) out += " x ";
    out += circles == 1 ? std::string("S^1") : "(S^1)^" + std::to_string(circles);
  }
  return out;
}

int saddle_count(const BarCounts& counts, const SurfaceSpec& surface) {
  surface.validate();
  if (counts.infinite[0] != surface.beta0()) {
    throw Error(ErrorCode::InconsistentBarcode, "a connected surface has exactly one infinite degree-0 bar, got " +
                                                    std::to_string(counts.infinite[0]));
  }
  if (counts.infinite[2] != surface.resolved_beta2()) {
    throw Error(ErrorCode::InconsistentBarcode, "expected " + std::to_string(surface.resolved_beta2()) +
                                                    " infinite degree-2 bars, got " + std::to_string(counts.infinite[2]));
  }
  const int c1 = counts.total - surface.beta0() - surface.resolved_beta2() - surface.boundary_min_count();
  if (c1 < 0) {
    throw Error(ErrorCode::NegativeCount, "barcode cannot come from a Morse function on " + surface.describe() +
                                              " (saddle count " + std::to_string(c1) + ")");
  }
  return c1;
}

CriticalCounts critical_counts(const BarCounts& counts, const SurfaceSpec& surface) {
  CriticalCounts out;
  out.saddles = saddle_count(counts, surface);
  out.minima = counts.infinite[0] + counts.bounded[0] - surface.boundary_min_count();
  out.maxima = counts.bounded[1] + counts.infinite[2] + counts.bounded[2];
  return out;
}

std::string homotopy_groups(const SurfaceSpec& surface, int c1, int n) {
  if (c1 <= 0) throw Error(ErrorCode::RequiresPositiveSaddles, "higher homotopy groups are reported only when c1 > 0");
  if (n < 2) throw Error(ErrorCode::NotClassified, "homotopy groups are reported for n >= 2");
  if (n == 2) return "0";
  return covered_by_sphere(surface) ? sphere_homotopy_group(n) : "0";
}

FiberReport fiber_homotopy_type(const BarCounts& counts, const SurfaceSpec& surface) {
  FiberReport report;
  const int c1 = saddle_count(counts, surface);
  const int chi = surface.euler_characteristic();
  const int b = static_cast<int>(surface.boundary.size());
  const auto named = surface.shortcut();
  report.surface = surface.describe();
  report.c1 = c1;
  report.distinct_endpoints = counts.distinct_endpoints;
  report.c1_positive = c1 > 0;

  auto not_classified = [&] {
    return Error(ErrorCode::NotClassified, "no classification entry for " + surface.describe() + " with c1 = " +
                                               std::to_string(c1));
  };

  if (c1 == 0) {
    if (named == NamedSurface::Sphere) {
      report.homotopy_type = HomotopyType::sphere2();
      report.formula = "S^2";
    } else if (named == NamedSurface::Annulus || named == NamedSurface::Disk) {
      report.homotopy_type = HomotopyType::point();
      report.formula = "{*}";
    } else {
      throw not_classified();
    }
    report.pi_n = groups_of(report.homotopy_type);
    return report;
  }

  report.guaranteed = counts.distinct_endpoints;
  auto circles = [&](int exponent, const char* formula) {
    if (exponent < 0) throw not_classified();
    report.homotopy_type = HomotopyType::product(false, exponent);
    report.formula = formula;
  };
  const bool removed_disks = (surface.orientable && surface.genus == 0 && b >= 3) ||
                             (surface.orientable && surface.genus == 1 && b >= 1) ||
                             (!surface.orientable && surface.genus == 1 && b >= 2);

  if (named == NamedSurface::Sphere || named == NamedSurface::ProjectivePlane) {
    report.homotopy_type = HomotopyType::product(true, c1 - 1);
    report.formula = "SO(3) x (S^1)^(c1-1)";
  } else if (named == NamedSurface::Torus) {
    circles(c1 + 1, "(S^1)^(c1+1)");
  } else if (named == NamedSurface::Annulus || named == NamedSurface::Disk) {
    circles(c1, "(S^1)^(c1)");
  } else if (named == NamedSurface::MobiusStrip) {
    circles(c1, "(S^1)^(c1)");
  } else if (removed_disks) {
    circles(c1 - 1, "(S^1)^(c1-1)");
  } else if (surface.orientable) {
    circles(c1 + chi, "(S^1)^(c1+chi)");
  } else if (named == NamedSurface::KleinBottle) {
    report.homotopy_type = HomotopyType::bounded_torus(c1 + 1);
    report.formula = "(S^1)^(k_f), k_f <= c1+1";
  } else {
    if (c1 + chi < 0) throw not_classified();
    report.homotopy_type = HomotopyType::bounded_torus(c1 + chi);
    report.formula = "(S^1)^(k_f), k_f <= c1+chi";
  }
  report.pi_n = {{2, homotopy_groups(surface, c1, 2)}, {3, homotopy_groups(surface, c1, 3)}};
  return report;
}

}  // namespace phfiber
