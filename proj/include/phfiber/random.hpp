#ifndef PHFIBER_RANDOM_HPP
#define PHFIBER_RANDOM_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "phfiber/extrema.hpp"
#include "phfiber/pl_function.hpp"
#include "phfiber/reparametrization.hpp"

namespace phfiber::random {

using Engine = std::mt19937_64;

inline long uniform_int(Engine& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool coin(Engine& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Rationals with denominator `denominator` drawn from an integer range;
/// alternating (cyclically when `cyclic`) and starting with a minimum when
/// `starts_with_min`. Distinct unless `allow_repeats`.
template <class Scalar>
std::vector<Scalar> alternating_values(Engine& rng, std::size_t length, bool cyclic, bool starts_with_min,
                                       bool allow_repeats = false, long denominator = 7) {
  const long range = allow_repeats ? static_cast<long>(length) + 2 : 10 * static_cast<long>(length) + 20;
  std::vector<long> pool(static_cast<std::size_t>(range));
  std::iota(pool.begin(), pool.end(), 0L);
  std::vector<long> draw(length);
  for (;;) {
    if (allow_repeats) {
      for (auto& x : draw) x = uniform_int(rng, 0, range - 1);
    } else {
      std::shuffle(pool.begin(), pool.end(), rng);
      std::copy_n(pool.begin(), length, draw.begin());
    }
    bool ok = true;
    const std::size_t links = cyclic ? length : length - 1;
    for (std::size_t i = 0; i < links && ok; ++i) {
      const long a = draw[i], b = draw[(i + 1) % length];
      const bool rising = (i % 2 == 0) == starts_with_min;
      ok = rising ? a < b : a > b;
    }
    if (ok) break;
  }
  std::vector<Scalar> out;
  for (long x : draw) out.push_back(Scalar(x) / Scalar(denominator));
  return out;
}

struct ShapeOptions {
  double plateau_probability = 0.2;
  int max_intermediate = 2;
  double flat_intermediate_probability = 0.1;
  long grid = 240;
  long value_denominator = 7;
  bool rotate = true;
};

/// A random PL function whose extrema, read along the domain, are
/// `sequence` (up to a cyclic shift of pairs on the circle when rotated).
/// Breakpoints lie on the grid k / options.grid.
template <class Scalar>
PLFunction<Scalar> function_with_sequence(Engine& rng, DomainKind domain, const std::vector<Scalar>& sequence,
                                          const ShapeOptions& options = {}) {
  const bool circle = domain == DomainKind::Circle;
  std::vector<Scalar> points;
  const std::size_t count = sequence.size();
  for (std::size_t i = 0; i < count; ++i) {
    points.push_back(sequence[i]);
    if (coin(rng, options.plateau_probability)) points.push_back(sequence[i]);
    if (!circle && i + 1 == count) break;
    const Scalar& a = sequence[i];
    const Scalar& b = sequence[(i + 1) % count];
    const long extra = uniform_int(rng, 0, options.max_intermediate);
    std::vector<long> ks;
    for (long e = 0; e < extra; ++e) ks.push_back(uniform_int(rng, 1, 9));
    std::sort(ks.begin(), ks.end());
    for (long k : ks) {
      const Scalar mid = a + (b - a) * Scalar(k) / Scalar(10);
      points.push_back(mid);
      if (coin(rng, options.flat_intermediate_probability)) points.push_back(mid);
    }
  }
  if (circle && options.rotate) {
    std::rotate(points.begin(), points.begin() + uniform_int(rng, 0, static_cast<long>(points.size()) - 1), points.end());
  }

  const long grid = std::max<long>(options.grid, 2 * static_cast<long>(points.size()) + 2);
  std::vector<long> slots;
  if (circle) {
    std::vector<long> pool(static_cast<std::size_t>(grid - 1));
    std::iota(pool.begin(), pool.end(), 1L);
    std::shuffle(pool.begin(), pool.end(), rng);
    slots.assign(pool.begin(), pool.begin() + static_cast<long>(points.size()) - 1);
    slots.push_back(0);
  } else {
    std::vector<long> pool(static_cast<std::size_t>(grid - 1));
    std::iota(pool.begin(), pool.end(), 1L);
    std::shuffle(pool.begin(), pool.end(), rng);
    slots.assign(pool.begin(), pool.begin() + static_cast<long>(points.size()) - 2);
    slots.push_back(0);
    slots.push_back(grid);
  }
  std::sort(slots.begin(), slots.end());
  std::vector<Scalar> knots;
  for (long s : slots) knots.push_back(Scalar(s) / Scalar(grid));
  return PLFunction<Scalar>(domain, std::move(knots), std::move(points));
}

/// Random circle function with n minima and n maxima.
template <class Scalar>
PLFunction<Scalar> circle_function(Engine& rng, std::size_t n, const ShapeOptions& options = {},
                                   bool allow_repeats = false) {
  return function_with_sequence(rng, DomainKind::Circle,
                                alternating_values<Scalar>(rng, 2 * n, true, true, allow_repeats, options.value_denominator),
                                options);
}

/// Random interval function with `length` extrema (boundary ones included).
template <class Scalar>
PLFunction<Scalar> interval_function(Engine& rng, std::size_t length, const ShapeOptions& options = {}) {
  const bool starts_with_min = coin(rng, 0.5);
  return function_with_sequence(rng, DomainKind::Interval,
                                alternating_values<Scalar>(rng, length, false, starts_with_min, false, options.value_denominator),
                                options);
}

/// Random monotone map with `knots` interior knots on the grid; each piece is
/// flat with probability `flat_probability`.
template <class Scalar>
Reparametrization<Scalar> monotone_map(Engine& rng, DomainKind domain, std::size_t knots,
                                       double flat_probability = 0.25, long grid = 240) {
  std::vector<long> pool(static_cast<std::size_t>(grid - 1));
  std::iota(pool.begin(), pool.end(), 1L);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<long> slots(pool.begin(), pool.begin() + static_cast<long>(std::min<std::size_t>(knots, pool.size())));
  slots.push_back(0);
  slots.push_back(grid);
  std::sort(slots.begin(), slots.end());

  std::vector<long> weights(slots.size() - 1);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& w : weights) {
      w = coin(rng, flat_probability) ? 0 : uniform_int(rng, 1, 9);
      total += w;
    }
  }
  const Scalar offset = domain == DomainKind::Circle ? Scalar(uniform_int(rng, 0, grid - 1)) / Scalar(grid) : Scalar(0);
  std::vector<Scalar> s, lift;
  long acc = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    s.push_back(Scalar(slots[i]) / Scalar(grid));
    lift.push_back(offset + Scalar(acc) / Scalar(total));
    if (i < weights.size()) acc += weights[i];
  }
  return Reparametrization<Scalar>(domain, std::move(s), std::move(lift));
}

}  // namespace phfiber::random

#endif  // PHFIBER_RANDOM_HPP
