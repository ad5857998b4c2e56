// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace phfiber;
using namespace phfiber::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) messages_ << (messages_.tellp() > 0 ? "; " : "") << what;
  }
  Outcome done(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    return {false, summary + ", " + std::to_string(failures_) + " failures: " + messages_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream messages_;
};

std::size_t random_n(random::Engine& rng, long hi) { return static_cast<std::size_t>(random::uniform_int(rng, 1, hi)); }

Outcome barcode_oracle() {
  random::Engine rng(1001);
  Check check;
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random::circle_function<Q>(rng, random_n(rng, 6), {}, random::coin(rng, 0.2));
    if (barcode(f) != barcode_bruteforce(f, oracle_resolution(f))) check.expect(false, "trial " + std::to_string(trial));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(seconds < 30.0, "took " + std::to_string(seconds) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "500 functions, %.2f s", seconds);
  return check.done(buf);
}

bool injective(const Reparametrization<Q>& phi) {
  const auto& v = phi.lift_values();
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] == v[i - 1]) return false;
  }
  return true;
}

Outcome reparametrization_invariance() {
  random::Engine rng(1002);
  Check check;
  int collapsing = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const bool on_circle = trial % 4 != 3;
    const auto domain = on_circle ? DomainKind::Circle : DomainKind::Interval;
    const auto f = on_circle ? random::circle_function<Q>(rng, random_n(rng, 5))
                             : random::interval_function<Q>(rng, 1 + random_n(rng, 6));
    const auto phi = random::monotone_map<Q>(rng, domain, static_cast<std::size_t>(random::uniform_int(rng, 2, 8)),
                                             trial % 2 == 0 ? 0.4 : 0.0);
    if (!injective(phi)) ++collapsing;
    const auto d = bottleneck_distance(barcode(f), barcode(compose(f, phi)));
    check.expect(!d.infinite && d.value == 0, "trial " + std::to_string(trial));
  }
  check.expect(collapsing > 0, "no non-injective map was drawn");
  return check.done("200 pairs, " + std::to_string(collapsing) + " with non-injective maps");
}

Outcome round_trip() {
  random::Engine rng(1003);
  Check check;
  std::vector<std::vector<Q>> classes;
  for (std::size_t n = 1; n <= 5; ++n) classes.push_back(random::alternating_values<Q>(rng, 2 * n, true, true));
  classes.push_back(qs({"0", "1", "0", "1"}));
  classes.push_back(qs({"0", "3", "1", "2", "0", "3", "1", "2"}));
  classes.push_back(qs({"0", "2", "0", "2", "0", "2"}));
  double worst = 0.0;
  std::size_t checked = 0;
  for (const auto& values : classes) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = random::function_with_sequence<Q>(rng, DomainKind::Circle, values);
      const auto component = component_of(f);
      const auto shifts = cyclic_shifts(component.cls.normal_form, extrema(f).sequence);
      check.expect(!shifts.empty(), "no valid shift");
      for (auto shift : shifts) {
        const double residual = sampled_distance(compose(component.canonical, reparametrization(f, component, shift)), f, 1000);
        worst = std::max(worst, residual);
        check.expect(residual <= 1e-9, "residual " + std::to_string(residual));
        ++checked;
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu classes, %zu (function, shift) pairs, max residual %g", classes.size(), checked, worst);
  return check.done(buf);
}

Outcome in_fiber_paths() {
  random::Engine rng(1004);
  Check check;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random::circle_function<Q>(rng, random_n(rng, 4));
    const auto seq = extrema(f).sequence;
    const auto g = random::function_with_sequence<Q>(rng, DomainKind::Circle, rotate_pairs(seq, random_n(rng, 4) % seq.pair_count()).values);
    const auto d = barcode(f);
    for (const auto& h : fiber_path(f, g, 16)) {
      const auto dist = bottleneck_distance(barcode(h), d);
      check.expect(!dist.infinite && dist.value == 0, "circle trial " + std::to_string(trial));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random::interval_function<Q>(rng, 1 + random_n(rng, 7));
    const auto d = barcode(f);
    for (const auto& h : contraction_path(f, 16)) {
      const auto dist = bottleneck_distance(barcode(h), d);
      check.expect(!dist.infinite && dist.value == 0, "interval trial " + std::to_string(trial));
    }
  }
  return check.done("100 circle paths and 100 interval contractions, 17 steps each");
}

Outcome stabilizers() {
  Check check;
  const std::vector<std::pair<std::size_t, std::vector<Q>>> cases{
      {1, qs({"0", "3", "1", "2", "0.5", "4"})}, {2, qs({"0", "3", "1", "2", "0", "3", "1", "2"})}, {3, qs({"0", "3", "0", "3", "0", "3"})}};
  std::string summary;
  for (const auto& [k, values] : cases) {
    const auto tilde = component_of(circle_even(values)).canonical;
    const auto shifts = same_component(tilde, tilde).shifts;
    check.expect(shifts.size() == k, "k=" + std::to_string(k) + " gave " + std::to_string(shifts.size()));
    summary += (summary.empty() ? "" : ", ") + std::string("k=") + std::to_string(k) + ": " + std::to_string(shifts.size());
  }
  return check.done(summary);
}

// Distinct endpoints on a grid; the circle barcode keeps every bar inside [b0, b1].
Barcode<Q> random_barcode(random::Engine& rng, std::size_t bounded, bool on_circle) {
  std::set<long> picked;
  while (picked.size() < 2 * bounded + 2) picked.insert(random::uniform_int(rng, 0, 40));
  std::vector<long> v(picked.begin(), picked.end());
  Barcode<Q> d;
  d.add({0, Q(v.front()), std::nullopt});
  std::vector<long> inner(v.begin() + 1, v.end() - 1);
  if (on_circle) {
    d.add({1, Q(v.back()), std::nullopt});
  } else {
    inner.push_back(v.back());
  }
  std::shuffle(inner.begin(), inner.end(), rng);
  for (std::size_t i = 0; i < bounded; ++i) {
    const long a = std::min(inner[2 * i], inner[2 * i + 1]);
    const long b = std::max(inner[2 * i], inner[2 * i + 1]);
    d.add({0, Q(a), Q(b)});
  }
  return d;
}

Outcome enumeration_consistency() {
  random::Engine rng(1006);
  Check check;
  std::ostringstream counts;
  for (int domain = 0; domain < 2; ++domain) {
    const bool on_circle = domain == 0;
    counts << (on_circle ? "circle counts" : "; interval counts");
    for (std::size_t bounded = 0; bounded <= 3; ++bounded) {
      std::size_t total = 0;
      for (int trial = 0; trial < 10; ++trial) {
        const auto d = random_barcode(rng, bounded, on_circle);
        std::vector<PLFunction<Q>> reps;
        if (on_circle) {
          for (const auto& c : enumerate_components(d)) reps.push_back(c.canonical);
        } else {
          for (const auto& c : enumerate_components_interval(d)) reps.push_back(c.canonical);
        }
        total += reps.size();
        for (std::size_t i = 0; i < reps.size(); ++i) {
          check.expect(barcode(reps[i]) == d, "elder rule differs from D");
          check.expect(barcode_bruteforce(reps[i], oracle_resolution(reps[i])) == d, "union-find differs from D");
          for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const bool same = on_circle ? same_component(reps[i], reps[j]).same : same_component_interval(reps[i], reps[j]);
            check.expect(!same, "distinct components compare equal");
          }
        }
      }
      counts << (bounded == 0 ? " " : "/") << total;
    }
  }
  return check.done(counts.str() + " (10 barcodes per bounded-bar count 0..3)");
}

BarCounts with_saddles(const SurfaceSpec& s, int c1) {
  BarCounts c;
  c.infinite[0] = 1;
  c.infinite[2] = s.resolved_beta2();
  c.bounded[0] = c1 + s.boundary_min_count();
  c.total = 1 + c.infinite[2] + c.bounded[0];
  return c;
}

Outcome surface_tables() {
  Check check;
  int rows = 0;
  auto row = [&](const SurfaceSpec& s, int c1, const std::string& expected) {
    ++rows;
    std::string got;
    try {
      got = fiber_homotopy_type(with_saddles(s, c1), s).homotopy_type.to_string();
    } catch (const Error& e) {
      got = to_string(e.code());
    }
    check.expect(got == expected, s.describe() + " c1=" + std::to_string(c1) + ": " + got + " != " + expected);
  };
  auto power = [](int k) { return k == 0 ? std::string("{*}") : k == 1 ? std::string("S^1") : "(S^1)^" + std::to_string(k); };
  auto so3 = [&](int k) { return k == 0 ? std::string("SO(3)") : "SO(3) x " + power(k); };
  auto named = [](NamedSurface n) { return SurfaceSpec::named(n); };
  auto general = [](bool orientable, int genus, int boundary) {
    SurfaceSpec s;
    s.orientable = orientable;
    s.genus = genus;
    s.boundary.assign(static_cast<std::size_t>(boundary), BoundaryTag::Min);
    return s;
  };

  row(named(NamedSurface::Sphere), 0, "S^2");
  row(named(NamedSurface::Annulus), 0, "{*}");
  row(named(NamedSurface::Disk), 0, "{*}");
  row(named(NamedSurface::Torus), 0, "NotClassified");
  for (int c1 = 1; c1 <= 3; ++c1) {
    row(named(NamedSurface::Sphere), c1, so3(c1 - 1));
    row(named(NamedSurface::ProjectivePlane), c1, so3(c1 - 1));
    row(named(NamedSurface::Torus), c1, power(c1 + 1));
    row(named(NamedSurface::Annulus), c1, power(c1));
    row(named(NamedSurface::Disk), c1, power(c1));
    row(named(NamedSurface::MobiusStrip), c1, power(c1));
    row(named(NamedSurface::KleinBottle), c1, "(S^1)^k_f with k_f <= " + std::to_string(c1 + 1));
    row(general(true, 0, 3), c1, power(c1 - 1));
    row(general(true, 1, 2), c1, power(c1 - 1));
    row(general(false, 1, 2), c1, power(c1 - 1));
  }
  row(general(true, 2, 0), 1, "NotClassified");
  row(general(true, 2, 0), 5, power(3));
  row(general(false, 3, 0), 2, "(S^1)^k_f with k_f <= 1");

  int groups = 0;
  for (auto n : {NamedSurface::Sphere, NamedSurface::ProjectivePlane, NamedSurface::Torus, NamedSurface::KleinBottle,
                 NamedSurface::Annulus, NamedSurface::Disk, NamedSurface::MobiusStrip}) {
    for (int c1 = 1; c1 <= 3; ++c1) {
      const auto s = named(n);
      const bool covered = n == NamedSurface::Sphere || n == NamedSurface::ProjectivePlane;
      check.expect(homotopy_groups(s, c1, 2) == "0", std::string(to_string(n)) + " pi_2");
      check.expect(homotopy_groups(s, c1, 3) == (covered ? "Z" : "0"), std::string(to_string(n)) + " pi_3");
      groups += 2;
    }
  }
  return check.done(std::to_string(rows) + " table rows, " + std::to_string(groups) + " homotopy group checks");
}

Outcome saddle_counts() {
  Check check;
  const int sphere = saddle_count(bars({{0, "0", nullptr}, {2, "1", nullptr}}), SurfaceSpec::named(NamedSurface::Sphere));
  const auto torus_d = bars({{0, "0", nullptr}, {1, "1", nullptr}, {1, "2", nullptr}, {2, "3", nullptr}});
  const auto torus_s = SurfaceSpec::named(NamedSurface::Torus);
  const int torus = saddle_count(torus_d, torus_s);
  const auto cc = critical_counts(count_bars(torus_d), torus_s);
  const int disk = saddle_count(bars({{0, "0", nullptr}, {1, "0", "1"}}), SurfaceSpec::named(NamedSurface::Disk, {BoundaryTag::Min}));
  check.expect(sphere == 0, "sphere");
  check.expect(torus == 2, "torus");
  check.expect(cc.minima - cc.saddles + cc.maxima == 0, "torus Euler characteristic");
  check.expect(disk == 0, "disk");
  bool negative = false;
  try {
    saddle_count(bars({{0, "0", nullptr}}), SurfaceSpec::named(NamedSurface::Disk, {BoundaryTag::Min}));
  } catch (const Error& e) {
    negative = e.code() == ErrorCode::NegativeCount;
  }
  check.expect(negative, "NegativeCount not raised");
  return check.done("sphere " + std::to_string(sphere) + ", torus " + std::to_string(torus) + ", disk " +
                    std::to_string(disk) + ", inconsistent disk raises NegativeCount");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"barcode equals union-find oracle", barcode_oracle},
      {"reparametrization leaves the barcode unchanged", reparametrization_invariance},
      {"canonical o phi reproduces f for every shift", round_trip},
      {"paths stay in the fiber", in_fiber_paths},
      {"stabilizer cardinality", stabilizers},
      {"component enumeration consistency", enumeration_consistency},
      {"surface classification tables", surface_tables},
      {"saddle count formula", saddle_counts},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failed += outcome.pass ? 0 : 1;
    std::printf("[%s] %zu. %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, outcome.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
