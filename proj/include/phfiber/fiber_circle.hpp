#ifndef PHFIBER_FIBER_CIRCLE_HPP
#define PHFIBER_FIBER_CIRCLE_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "phfiber/barcode.hpp"
#include "phfiber/error.hpp"
#include "phfiber/extrema.hpp"
#include "phfiber/pl_function.hpp"
#include "phfiber/reparametrization.hpp"

namespace phfiber {

/// Orbit of an extrema sequence under cyclic shifts of its (min, max) pairs,
/// stored by its lexicographically minimal member. n = 0 marks the
/// component of a constant function.
template <class Scalar>
struct CyclicClass {
  ExtremaSequence<Scalar> normal_form;

  std::size_t n() const { return normal_form.pair_count(); }
  friend bool operator==(const CyclicClass&, const CyclicClass&) = default;
};

template <class Scalar>
struct FiberComponentCircle {
  Barcode<Scalar> barcode;
  CyclicClass<Scalar> cls;
  PLFunction<Scalar> canonical;

  bool is_constant() const { return cls.n() == 0; }
};

enum class Mismatch { None, BarcodeMismatch, ClassMismatch };

inline const char* to_string(Mismatch m) {
  switch (m) {
    case Mismatch::None: return "None";
    case Mismatch::BarcodeMismatch: return "BarcodeMismatch";
    case Mismatch::ClassMismatch: return "ClassMismatch";
  }
  return "Unknown";
}

struct SameComponentResult {
  bool same = false;
  std::vector<std::size_t> shifts;  // every k with Val(g) = shift_k . Val(f)
  Mismatch reason = Mismatch::None;
};

template <class Scalar>
CyclicClass<Scalar> cyclic_class(const ExtremaSequence<Scalar>& seq, Tolerance tol = {}) {
  if (seq.domain != DomainKind::Circle || seq.size() % 2 != 0) {
    throw Error(ErrorCode::ClassMismatch, "cyclic classes need an even-length circle sequence");
  }
  return {normalize_cyclic(seq, tol)};
}

/// Evenly spaced extrema on the regular 2n-gon: c_i at (2i-2)/2n, d_i at
/// (2i-1)/2n, affine in between.
template <class Scalar>
PLFunction<Scalar> canonical_representative(const CyclicClass<Scalar>& cls) {
  const auto& v = cls.normal_form.values;
  if (v.empty()) throw Error(ErrorCode::ConstantFunction, "the constant component has no cyclic class representative");
  std::vector<Scalar> knots;
  for (std::size_t i = 0; i < v.size(); ++i) {
    knots.push_back(Scalar(static_cast<long>(i)) / Scalar(static_cast<long>(v.size())));
  }
  return PLFunction<Scalar>(DomainKind::Circle, std::move(knots), v);
}

/// The fiber component containing a circle function.
template <class Scalar>
FiberComponentCircle<Scalar> component_of(const PLFunction<Scalar>& f, Tolerance tol = {}) {
  if (f.domain() != DomainKind::Circle) throw Error(ErrorCode::DomainMismatch, "expected a circle function");
  if (is_constant(f, tol)) {
    const Scalar c = f.values().front();
    return {trivial_barcode(DomainKind::Circle, c), {ExtremaSequence<Scalar>{DomainKind::Circle, {}}},
            PLFunction<Scalar>::constant(DomainKind::Circle, c)};
  }
  auto cls = cyclic_class(extrema(f, tol).sequence, tol);
  auto canonical = canonical_representative(cls);
  return {barcode(canonical, tol), std::move(cls), std::move(canonical)};
}

/// Decides whether two circle functions lie in the same path component of
/// their common fiber: equal barcodes and cyclically equivalent extrema.
template <class Scalar>
SameComponentResult same_component(const PLFunction<Scalar>& f, const PLFunction<Scalar>& g, Tolerance tol = {}) {
  if (f.domain() != DomainKind::Circle || g.domain() != DomainKind::Circle) {
    throw Error(ErrorCode::DomainMismatch, "same_component expects circle functions");
  }
  SameComponentResult out;
  if (!same_barcode(barcode(f, tol), barcode(g, tol), tol)) {
    out.reason = Mismatch::BarcodeMismatch;
    return out;
  }
  if (is_constant(f, tol)) {
    // Equal trivial barcodes force equal constants.
    out.same = true;
    out.shifts = {0};
    return out;
  }
  out.shifts = cyclic_shifts(extrema(f, tol).sequence, extrema(g, tol).sequence, tol);
  out.same = !out.shifts.empty();
  if (!out.same) out.reason = Mismatch::ClassMismatch;
  return out;
}

/// phi^{f,pi}: the monotone map with canonical o phi = f that sends the i-th
/// critical set of f onto the (i + shift)-th vertex of the 2n-gon. On each
/// monotone arc of f it is the inverse of the canonical representative's
/// affine piece composed with f, so plateaus of f collapse to points.
template <class Scalar>
Reparametrization<Scalar> reparametrization(const PLFunction<Scalar>& f, const FiberComponentCircle<Scalar>& target,
                                            std::size_t shift, Tolerance tol = {}) {
  if (f.domain() != DomainKind::Circle) throw Error(ErrorCode::DomainMismatch, "expected a circle function");
  if (target.is_constant() || is_constant(f, tol)) {
    throw Error(ErrorCode::ConstantFunction, "reparametrizations are only built for non-constant functions");
  }
  const auto ex = extrema(f, tol);
  const auto& vals = ex.sequence.values;
  const std::size_t count = vals.size();
  const std::size_t n = count / 2;
  if (n != target.cls.n() || !sequences_equal(rotate_pairs(target.cls.normal_form, shift).values, vals, tol)) {
    throw Error(ErrorCode::ClassMismatch, "Val(f) is not the requested shift of the target class");
  }

  // Critical sets unwrapped into [a, a + 1), closed by c_1 + 1.
  std::vector<CriticalSet<Scalar>> sets = ex.sets;
  for (std::size_t i = 1; i < count; ++i) {
    while (sets[i].lo < sets[i - 1].hi) {
      sets[i].lo += Scalar(1);
      sets[i].hi += Scalar(1);
    }
  }
  const Scalar a = sets[0].lo;
  const Scalar step = Scalar(1) / Scalar(static_cast<long>(count));
  auto vertex = [&](std::size_t i) { return Scalar(static_cast<long>(2 * shift + i)) * step; };
  auto value_at = [&](std::size_t i) -> const Scalar& { return vals[i % count]; };
  auto set_lo = [&](std::size_t i) { return i < count ? sets[i].lo : Scalar(sets[0].lo + Scalar(1)); };

  auto lift_at = [&](const Scalar& p) {
    std::size_t j = 0;
    while (j + 1 < count && set_lo(j + 1) <= p) ++j;
    if (p <= sets[j].hi) return vertex(j);
    return vertex(j) + (f(p) - value_at(j)) / (value_at(j + 1) - value_at(j)) * step;
  };

  std::vector<Scalar> knots = f.breakpoints();
  knots.push_back(Scalar(1));
  std::vector<Scalar> lift;
  lift.reserve(knots.size());
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const Scalar& t = knots[i];
    lift.push_back(t >= a ? lift_at(t) : Scalar(lift_at(Scalar(t + Scalar(1))) - Scalar(1)));
  }
  lift.push_back(lift.front() + Scalar(1));
  return Reparametrization<Scalar>(DomainKind::Circle, std::move(knots), std::move(lift), tol);
}

/// Shifts that map the canonical representative onto itself; their
/// reparametrizations are rotations by shift / n.
template <class Scalar>
std::vector<std::size_t> stabilizer_shifts(const FiberComponentCircle<Scalar>& component, Tolerance tol = {}) {
  if (component.is_constant()) return {0};
  return cyclic_shifts(component.cls.normal_form, component.cls.normal_form, tol);
}

/// Path f = f_0, ..., f_steps = g inside the fiber, obtained by linear
/// interpolation of the lifts of phi^{f} and phi^{g} (aligned to the nearest
/// integer offset, ties toward the smaller offset) composed with the shared
/// canonical representative.
template <class Scalar>
std::vector<PLFunction<Scalar>> fiber_path(const PLFunction<Scalar>& f, const PLFunction<Scalar>& g, std::size_t steps,
                                           Tolerance tol = {}) {
  const auto same = same_component(f, g, tol);
  if (!same.same) {
    throw Error(ErrorCode::NotSameComponent, std::string("functions lie in different fiber components (") +
                                                 to_string(same.reason) + ")");
  }
  if (steps == 0) steps = 1;
  if (is_constant(f, tol)) return std::vector<PLFunction<Scalar>>(steps + 1, f);

  const auto component = component_of(f, tol);
  const auto shift_f = cyclic_shifts(component.cls.normal_form, extrema(f, tol).sequence, tol);
  const auto shift_g = cyclic_shifts(component.cls.normal_form, extrema(g, tol).sequence, tol);
  const auto phi_f = reparametrization(f, component, shift_f.front(), tol);
  auto phi_g = reparametrization(g, component, shift_g.front(), tol);

  const Scalar gap = phi_f.lift(Scalar(0)) - phi_g.lift(Scalar(0));
  // ceil(gap - 1/2) is the nearest integer, rounding ties down.
  const Scalar shifted = gap - Scalar(1) / Scalar(2);
  Scalar offset = floor_of(shifted);
  if (offset < shifted) offset += Scalar(1);
  phi_g = phi_g.shifted_lift(static_cast<long>(to_double(offset)));

  std::vector<PLFunction<Scalar>> path;
  path.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const Scalar t = Scalar(static_cast<long>(i)) / Scalar(static_cast<long>(steps));
    path.push_back(compose(component.canonical, interpolate(phi_f, phi_g, t)));
  }
  return path;
}

struct EnumerationOptions {
  bool allow_repeated_endpoints = false;
  bool allow_large = false;
  std::size_t max_bars = 10;
};

namespace detail {

template <class Scalar>
void require_distinct(std::vector<Scalar> values, const EnumerationOptions& options, Tolerance tol) {
  if (options.allow_repeated_endpoints) return;
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (approx_equal(values[i - 1], values[i], tol)) {
      throw Error(ErrorCode::RepeatedEndpoints,
                  "barcode has repeated endpoints; pass the allow-repeated flag to enumerate anyway");
    }
  }
}

template <class Scalar>
bool strictly_alternating(const std::vector<Scalar>& seq, bool cyclic, bool starts_with_min, Tolerance tol) {
  const std::size_t count = seq.size();
  if (count < 2) return true;
  const std::size_t links = cyclic ? count : count - 1;
  for (std::size_t i = 0; i < links; ++i) {
    const Scalar& a = seq[i];
    const Scalar& b = seq[(i + 1) % count];
    const bool rising = (i % 2 == 0) == starts_with_min;
    if (rising ? !definitely_less(a, b, tol) : !definitely_less(b, a, tol)) return false;
  }
  return true;
}

}  // namespace detail

/// Checks the shape of a circle barcode: one infinite bar in each of degrees
/// 0 and 1 with b0 <= b1 (equal only for the trivial barcode), bounded
/// degree-0 bars inside [b0, b1], nothing else.
template <class Scalar>
void validate_circle_barcode(const Barcode<Scalar>& d, Tolerance tol = {}) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::MalformedBarcode, "not a circle barcode: " + why); };
  const auto inf0 = d.infinite(0);
  const auto inf1 = d.infinite(1);
  if (inf0.size() != 1 || inf1.size() != 1) fail("need exactly one infinite bar in degrees 0 and 1");
  if (!d.in_degree(2).empty() || !d.bounded(1).empty()) fail("only bounded bars of degree 0 are allowed");
  const Scalar& b0 = inf0[0].birth;
  const Scalar& b1 = inf1[0].birth;
  const auto bounded = d.bounded(0);
  if (approx_equal(b0, b1, tol)) {
    if (!bounded.empty()) fail("the trivial barcode has no bounded bars");
    return;
  }
  if (b1 < b0) fail("degree-1 bar must be born after the degree-0 bar");
  for (const auto& bar : bounded) {
    if (definitely_less(bar.birth, b0, tol) || definitely_less(b1, *bar.death, tol)) {
      fail("bounded endpoints must lie in [b0, b1]");
    }
  }
}

/// One component per cyclic class of alternating arrangements of the minima
/// {b0, births} and maxima {b1, deaths} whose canonical representative has
/// barcode exactly D. Brute force over (n-1)! n! arrangements. Returns an
/// empty list when no arrangement realizes D.
template <class Scalar>
std::vector<FiberComponentCircle<Scalar>> enumerate_components(const Barcode<Scalar>& d,
                                                               const EnumerationOptions& options = {},
                                                               Tolerance tol = {}) {
  validate_circle_barcode(d, tol);
  const Scalar b0 = d.infinite(0)[0].birth;
  const Scalar b1 = d.infinite(1)[0].birth;
  const auto bounded = d.bounded(0);
  if (approx_equal(b0, b1, tol)) {
    return {FiberComponentCircle<Scalar>{d, {ExtremaSequence<Scalar>{DomainKind::Circle, {}}},
                                         PLFunction<Scalar>::constant(DomainKind::Circle, b0)}};
  }
  if (bounded.size() > options.max_bars && !options.allow_large) {
    throw Error(ErrorCode::TooLarge, "more than " + std::to_string(options.max_bars) +
                                         " bounded bars; pass the override flag to enumerate anyway");
  }
  std::vector<Scalar> minima, maxima{b1}, endpoints{b0, b1};
  for (const auto& bar : bounded) {
    minima.push_back(bar.birth);
    maxima.push_back(*bar.death);
    endpoints.push_back(bar.birth);
    endpoints.push_back(*bar.death);
  }
  detail::require_distinct(endpoints, options, tol);
  std::sort(minima.begin(), minima.end());
  std::sort(maxima.begin(), maxima.end());

  const std::size_t n = maxima.size();
  std::vector<FiberComponentCircle<Scalar>> out;
  std::vector<std::vector<Scalar>> seen;
  std::vector<Scalar> seq(2 * n);
  do {
    do {
      seq[0] = b0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) seq[2 * i] = minima[i - 1];
        seq[2 * i + 1] = maxima[i];
      }
      if (!detail::strictly_alternating(seq, true, true, tol)) continue;
      auto cls = cyclic_class(ExtremaSequence<Scalar>{DomainKind::Circle, seq}, tol);
      const bool duplicate = std::any_of(seen.begin(), seen.end(), [&](const std::vector<Scalar>& s) {
        return sequences_equal(s, cls.normal_form.values, tol);
      });
      if (duplicate) continue;
      seen.push_back(cls.normal_form.values);
      auto canonical = canonical_representative(cls);
      auto realized = barcode(canonical, tol);
      if (same_barcode(realized, d, tol)) out.push_back({std::move(realized), std::move(cls), std::move(canonical)});
    } while (std::next_permutation(maxima.begin(), maxima.end()));
  } while (std::next_permutation(minima.begin(), minima.end()));

  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return lexicographic_compare(x.cls.normal_form.values, y.cls.normal_form.values, tol) < 0;
  });
  return out;
}

}  // namespace phfiber

#endif  // PHFIBER_FIBER_CIRCLE_HPP
