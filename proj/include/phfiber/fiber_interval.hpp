#ifndef PHFIBER_FIBER_INTERVAL_HPP
#define PHFIBER_FIBER_INTERVAL_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "phfiber/barcode.hpp"
#include "phfiber/error.hpp"
#include "phfiber/extrema.hpp"
#include "phfiber/fiber_circle.hpp"
#include "phfiber/pl_function.hpp"
#include "phfiber/reparametrization.hpp"

namespace phfiber {

/// Prescribed values f(0) and f(1).
template <class Scalar>
struct BoundaryValues {
  Scalar start;
  Scalar end;
};

template <class Scalar>
struct FiberComponentInterval {
  Barcode<Scalar> barcode;
  ExtremaSequence<Scalar> sequence;
  PLFunction<Scalar> canonical;
  std::optional<BoundaryValues<Scalar>> boundary;
};

template <class Scalar>
void check_boundary(const PLFunction<Scalar>& f, const BoundaryValues<Scalar>& boundary, Tolerance tol = {}) {
  if (!approx_equal(f.values().front(), boundary.start, tol) || !approx_equal(f.values().back(), boundary.end, tol)) {
    throw Error(ErrorCode::BoundaryViolation, "function does not take the prescribed boundary values");
  }
}

/// Full extrema sequence on [0,1]; a constant function gives its single value.
template <class Scalar>
ExtremaSequence<Scalar> interval_sequence(const PLFunction<Scalar>& f, Tolerance tol = {}) {
  if (f.domain() != DomainKind::Interval) throw Error(ErrorCode::DomainMismatch, "expected an interval function");
  if (is_constant(f, tol)) return {DomainKind::Interval, {f.values().front()}};
  return extrema(f, tol).sequence;
}

/// Extrema sequence with the boundary maxima dropped. Without prescribed
/// boundary values a boundary maximum can move freely without changing the
/// barcode, so this is the invariant that identifies components.
template <class Scalar>
ExtremaSequence<Scalar> reduced_sequence(const PLFunction<Scalar>& f, Tolerance tol = {}) {
  auto seq = interval_sequence(f, tol);
  auto& v = seq.values;
  if (v.size() < 2) return seq;
  const bool drop_end = v[v.size() - 1] > v[v.size() - 2];
  const bool drop_start = v[0] > v[1];
  if (drop_end) v.pop_back();
  if (drop_start) v.erase(v.begin());
  return seq;
}

/// Same fiber component on [0,1]. With a boundary prescription both
/// functions must satisfy it and the full ordered sequences are compared;
/// otherwise the reduced sequences are.
template <class Scalar>
bool same_component_interval(const PLFunction<Scalar>& f, const PLFunction<Scalar>& g,
                             const std::optional<BoundaryValues<Scalar>>& boundary = std::nullopt,
                             Tolerance tol = {}) {
  if (f.domain() != DomainKind::Interval || g.domain() != DomainKind::Interval) {
    throw Error(ErrorCode::DomainMismatch, "same_component_interval expects interval functions");
  }
  if (boundary) {
    check_boundary(f, *boundary, tol);
    check_boundary(g, *boundary, tol);
    return sequences_equal(interval_sequence(f, tol).values, interval_sequence(g, tol).values, tol);
  }
  return sequences_equal(reduced_sequence(f, tol).values, reduced_sequence(g, tol).values, tol);
}

/// Extrema at equally spaced parameters j / (L - 1), affine in between.
template <class Scalar>
PLFunction<Scalar> canonical_representative_interval(const std::vector<Scalar>& sequence, Tolerance tol = {}) {
  if (sequence.empty()) throw Error(ErrorCode::InvalidFunction, "empty extrema sequence");
  if (sequence.size() == 1) return PLFunction<Scalar>::constant(DomainKind::Interval, sequence.front());
  if (!detail::strictly_alternating(sequence, false, sequence[0] < sequence[1], tol)) {
    throw Error(ErrorCode::InvalidFunction, "extrema sequence must alternate strictly");
  }
  std::vector<Scalar> knots;
  const long last = static_cast<long>(sequence.size()) - 1;
  for (long j = 0; j <= last; ++j) knots.push_back(Scalar(j) / Scalar(last));
  return PLFunction<Scalar>(DomainKind::Interval, std::move(knots), sequence);
}

template <class Scalar>
PLFunction<Scalar> canonical_representative_interval(const FiberComponentInterval<Scalar>& component,
                                                     Tolerance tol = {}) {
  auto f = canonical_representative_interval(component.sequence.values, tol);
  if (component.boundary) check_boundary(f, *component.boundary, tol);
  return f;
}

template <class Scalar>
struct IntervalFactorization {
  PLFunction<Scalar> canonical;     // canonical representative of Val(f)
  Reparametrization<Scalar> phi;    // canonical o phi = f
};

/// Writes f = canonical o phi with phi monotone, fixing 0 and 1, constant on
/// critical sets and affine in f on each monotone arc.
template <class Scalar>
IntervalFactorization<Scalar> factor_through_canonical(const PLFunction<Scalar>& f, Tolerance tol = {}) {
  if (f.domain() != DomainKind::Interval) throw Error(ErrorCode::DomainMismatch, "expected an interval function");
  if (is_constant(f, tol)) {
    return {f, Reparametrization<Scalar>::identity(DomainKind::Interval)};
  }
  const auto ex = extrema(f, tol);
  const auto& vals = ex.sequence.values;
  const auto& sets = ex.sets;
  const std::size_t count = vals.size();
  const Scalar step = Scalar(1) / Scalar(static_cast<long>(count - 1));
  std::vector<Scalar> lift;
  lift.reserve(f.size());
  std::size_t j = 0;
  for (std::size_t b = 0; b < f.size(); ++b) {
    const Scalar& t = f.breakpoints()[b];
    while (j + 1 < count && sets[j + 1].lo <= t) ++j;
    const Scalar base = Scalar(static_cast<long>(j)) * step;
    if (t <= sets[j].hi) {
      lift.push_back(base);
    } else {
      lift.push_back(base + (f.values()[b] - vals[j]) / (vals[j + 1] - vals[j]) * step);
    }
  }
  return {canonical_representative_interval(vals, tol),
          Reparametrization<Scalar>(DomainKind::Interval, f.breakpoints(), std::move(lift), tol)};
}

/// f_t = canonical o ((1 - t) phi + t Id) for t = 0, 1/steps, ..., 1.
template <class Scalar>
std::vector<PLFunction<Scalar>> contraction_path(const PLFunction<Scalar>& f, std::size_t steps, Tolerance tol = {}) {
  if (steps == 0) steps = 1;
  const auto factor = factor_through_canonical(f, tol);
  if (is_constant(f, tol)) return std::vector<PLFunction<Scalar>>(steps + 1, f);
  const auto id = Reparametrization<Scalar>::identity(DomainKind::Interval);
  std::vector<PLFunction<Scalar>> path;
  path.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const Scalar t = Scalar(static_cast<long>(i)) / Scalar(static_cast<long>(steps));
    path.push_back(compose(factor.canonical, interpolate(factor.phi, id, t)));
  }
  return path;
}

/// One infinite degree-0 bar, every other bar bounded and of degree 0 with
/// birth at or above the infinite one.
template <class Scalar>
void validate_interval_barcode(const Barcode<Scalar>& d, Tolerance tol = {}) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::MalformedBarcode, "not an interval barcode: " + why); };
  const auto inf0 = d.infinite(0);
  if (inf0.size() != 1) fail("need exactly one infinite bar in degree 0");
  if (!d.in_degree(1).empty() || !d.in_degree(2).empty()) fail("only degree-0 bars are allowed");
  for (const auto& bar : d.bounded(0)) {
    if (definitely_less(bar.birth, inf0[0].birth, tol)) fail("bounded bars must be born after the global minimum");
  }
}

/// Brute force over the orderings of minima {b0, births} and interior
/// maxima {deaths}; with boundary values, each end is either one of those
/// minima or an extra boundary maximum. Keeps sequences whose canonical
/// representative has barcode exactly D, in lexicographic order.
template <class Scalar>
std::vector<FiberComponentInterval<Scalar>> enumerate_components_interval(
    const Barcode<Scalar>& d, const std::optional<BoundaryValues<Scalar>>& boundary = std::nullopt,
    const EnumerationOptions& options = {}, Tolerance tol = {}) {
  validate_interval_barcode(d, tol);
  const auto bounded = d.bounded(0);
  if (bounded.size() > options.max_bars && !options.allow_large) {
    throw Error(ErrorCode::TooLarge, "more than " + std::to_string(options.max_bars) +
                                         " bounded bars; pass the override flag to enumerate anyway");
  }
  std::vector<Scalar> minima{d.infinite(0)[0].birth}, maxima, endpoints{minima.front()};
  for (const auto& bar : bounded) {
    minima.push_back(bar.birth);
    maxima.push_back(*bar.death);
    endpoints.push_back(bar.birth);
    endpoints.push_back(*bar.death);
  }
  detail::require_distinct(endpoints, options, tol);
  std::sort(minima.begin(), minima.end());
  std::sort(maxima.begin(), maxima.end());

  const std::size_t n = minima.size();
  std::vector<std::vector<Scalar>> candidates;
  std::vector<Scalar> reduced(2 * n - 1);
  do {
    do {
      for (std::size_t i = 0; i < n; ++i) {
        reduced[2 * i] = minima[i];
        if (i + 1 < n) reduced[2 * i + 1] = maxima[i];
      }
      if (!detail::strictly_alternating(reduced, false, true, tol)) continue;
      if (!boundary) {
        candidates.push_back(reduced);
        continue;
      }
      for (int start_is_max = 0; start_is_max <= 1; ++start_is_max) {
        for (int end_is_max = 0; end_is_max <= 1; ++end_is_max) {
          const Scalar& first = reduced.front();
          const Scalar& last = reduced.back();
          if (start_is_max ? !definitely_less(first, boundary->start, tol) : !approx_equal(first, boundary->start, tol)) continue;
          if (end_is_max ? !definitely_less(last, boundary->end, tol) : !approx_equal(last, boundary->end, tol)) continue;
          std::vector<Scalar> full;
          if (start_is_max) full.push_back(boundary->start);
          full.insert(full.end(), reduced.begin(), reduced.end());
          if (end_is_max) full.push_back(boundary->end);
          candidates.push_back(std::move(full));
        }
      }
    } while (std::next_permutation(maxima.begin(), maxima.end()));
  } while (std::next_permutation(minima.begin(), minima.end()));

  std::sort(candidates.begin(), candidates.end(),
            [&](const auto& a, const auto& b) { return lexicographic_compare(a, b, tol) < 0; });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [&](const auto& a, const auto& b) { return sequences_equal(a, b, tol); }),
                   candidates.end());

  std::vector<FiberComponentInterval<Scalar>> out;
  for (auto& seq : candidates) {
    auto canonical = canonical_representative_interval(seq, tol);
    auto realized = barcode(canonical, tol);
    if (!same_barcode(realized, d, tol)) continue;
    out.push_back({std::move(realized), ExtremaSequence<Scalar>{DomainKind::Interval, std::move(seq)},
                   std::move(canonical), boundary});
  }
  return out;
}

}  // namespace phfiber

#endif  // PHFIBER_FIBER_INTERVAL_HPP
