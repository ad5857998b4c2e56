#ifndef PHFIBER_EXTREMA_HPP
#define PHFIBER_EXTREMA_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "phfiber/error.hpp"
#include "phfiber/pl_function.hpp"
#include "phfiber/reparametrization.hpp"
#include "phfiber/scalar.hpp"

namespace phfiber {

/// Alternating sequence of extremal values.
///
/// Circle: m_1 < M_1 > m_2 < ... > m_n < M_n, read from the base point,
/// starting with the first minimum met, and closing up cyclically.
/// Interval: read from 0 to 1; may start and end with either kind.
template <class Scalar>
struct ExtremaSequence {
  DomainKind domain = DomainKind::Circle;
  std::vector<Scalar> values;

  std::size_t size() const { return values.size(); }
  /// Number of (min, max) pairs on the circle.
  std::size_t pair_count() const { return values.size() / 2; }
  bool starts_with_min() const { return values.size() < 2 || values[0] < values[1]; }

  friend bool operator==(const ExtremaSequence&, const ExtremaSequence&) = default;
};

/// A maximal connected piece of a level set at an extremal value, as the arc
/// [lo, hi] with lo in [0,1). On the circle hi may exceed 1 when the arc
/// contains the base point.
template <class Scalar>
struct CriticalSet {
  Scalar lo;
  Scalar hi;
  bool is_minimum = false;

  bool contains_base_point() const { return lo == Scalar(0) || hi >= Scalar(1); }
};

template <class Scalar>
struct Extrema {
  ExtremaSequence<Scalar> sequence;
  std::vector<CriticalSet<Scalar>> sets;
};

/// Extremal values Val(f) and critical sets Seq(f). Plateaus are merged into a
/// single critical set. Interval endpoints always count as extrema
/// (one-sided test). Throws ConstantFunction for constant f.
template <class Scalar>
Extrema<Scalar> extrema(const PLFunction<Scalar>& f, Tolerance tol = {}) {
  const auto& t = f.breakpoints();
  const auto& v = f.values();
  const std::size_t k = t.size();
  const bool circle = f.domain() == DomainKind::Circle;

  struct Run {
    Scalar lo, hi, value;
  };
  std::vector<Run> runs;
  std::size_t start = 0;
  if (circle) {
    while (start < k && approx_equal(v[(start + k - 1) % k], v[start], tol)) ++start;
    if (start == k) throw Error(ErrorCode::ConstantFunction, "constant function has no extrema");
  }
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t idx = (start + j) % k;
    const Scalar u = start + j >= k ? Scalar(t[idx] + Scalar(1)) : t[idx];
    if (!runs.empty() && approx_equal(runs.back().value, v[idx], tol)) {
      runs.back().hi = u;
    } else {
      runs.push_back({u, u, v[idx]});
    }
  }
  if (runs.size() == 1) throw Error(ErrorCode::ConstantFunction, "constant function has no extrema");

  Extrema<Scalar> out;
  out.sequence.domain = f.domain();
  const std::size_t r = runs.size();
  for (std::size_t i = 0; i < r; ++i) {
    const bool has_prev = circle || i > 0;
    const bool has_next = circle || i + 1 < r;
    const Scalar& here = runs[i].value;
    const Scalar* prev = has_prev ? &runs[(i + r - 1) % r].value : nullptr;
    const Scalar* next = has_next ? &runs[(i + 1) % r].value : nullptr;
    const bool is_min = (!prev || here < *prev) && (!next || here < *next);
    const bool is_max = (!prev || *prev < here) && (!next || *next < here);
    if (!is_min && !is_max) continue;
    CriticalSet<Scalar> set{runs[i].lo, runs[i].hi, is_min};
    if (circle && set.lo >= Scalar(1)) {
      set.lo -= Scalar(1);
      set.hi -= Scalar(1);
    }
    out.sets.push_back(set);
  }

  if (circle) {
    // The first set met going around from the base point, then the first minimum from there.
    auto encounter = [](const CriticalSet<Scalar>& set) { return set.contains_base_point() ? Scalar(-1) : set.lo; };
    std::size_t first = 0;
    for (std::size_t i = 1; i < out.sets.size(); ++i) {
      if (encounter(out.sets[i]) < encounter(out.sets[first])) first = i;
    }
    if (!out.sets[first].is_minimum) first = (first + 1) % out.sets.size();
    std::rotate(out.sets.begin(), out.sets.begin() + static_cast<std::ptrdiff_t>(first), out.sets.end());
  }
  for (const auto& set : out.sets) out.sequence.values.push_back(f(set.lo));
  return out;
}

/// Cyclic action of the shift k on the pairs of a circle sequence:
/// (shift . seq) pair i = seq pair (i + k) mod n.
template <class Scalar>
ExtremaSequence<Scalar> rotate_pairs(const ExtremaSequence<Scalar>& seq, std::size_t shift) {
  ExtremaSequence<Scalar> out{seq.domain, seq.values};
  if (!out.values.empty()) {
    const std::size_t offset = (2 * shift) % out.values.size();
    std::rotate(out.values.begin(), out.values.begin() + static_cast<std::ptrdiff_t>(offset), out.values.end());
  }
  return out;
}

template <class Scalar>
int lexicographic_compare(const std::vector<Scalar>& a, const std::vector<Scalar>& b, Tolerance tol = {}) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (int c = compare(a[i], b[i], tol); c != 0) return c;
  }
  return a.size() == b.size() ? 0 : (a.size() < b.size() ? -1 : 1);
}

template <class Scalar>
bool sequences_equal(const std::vector<Scalar>& a, const std::vector<Scalar>& b, Tolerance tol = {}) {
  return a.size() == b.size() && lexicographic_compare(a, b, tol) == 0;
}

/// Lexicographically minimal rotation of the (min, max) pairs.
template <class Scalar>
ExtremaSequence<Scalar> normalize_cyclic(const ExtremaSequence<Scalar>& seq, Tolerance tol = {}) {
  ExtremaSequence<Scalar> best = seq;
  for (std::size_t k = 1; k < seq.pair_count(); ++k) {
    auto candidate = rotate_pairs(seq, k);
    if (lexicographic_compare(candidate.values, best.values, tol) < 0) best = std::move(candidate);
  }
  return best;
}

/// Every k with to = shift_k . from, in increasing order.
template <class Scalar>
std::vector<std::size_t> cyclic_shifts(const ExtremaSequence<Scalar>& from, const ExtremaSequence<Scalar>& to,
                                       Tolerance tol = {}) {
  std::vector<std::size_t> shifts;
  if (from.size() != to.size() || from.size() % 2 != 0) return shifts;
  for (std::size_t k = 0; k < from.pair_count(); ++k) {
    if (sequences_equal(rotate_pairs(from, k).values, to.values, tol)) shifts.push_back(k);
  }
  return shifts;
}

template <class Scalar>
struct BasePointNormalization {
  PLFunction<Scalar> function;  // function(s) = f(s + offset)
  Scalar offset;
};

/// Rotates a circle function so that the base point sits at the midpoint of
/// its longest monotone arc (the first one on ties).
template <class Scalar>
BasePointNormalization<Scalar> normalize_base_point(const PLFunction<Scalar>& f, Tolerance tol = {}) {
  if (f.domain() != DomainKind::Circle) throw Error(ErrorCode::DomainMismatch, "base point normalization needs a circle function");
  const auto ex = extrema(f, tol);
  const auto& sets = ex.sets;
  Scalar best_length(-1), best_mid(0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Scalar from = sets[i].hi;
    Scalar to = sets[(i + 1) % sets.size()].lo;
    while (to < from) to += Scalar(1);
    if (best_length < to - from) {
      best_length = to - from;
      best_mid = (from + to) / Scalar(2);
    }
  }
  best_mid -= floor_of(best_mid);
  return {compose(f, Reparametrization<Scalar>::rotation(best_mid)), best_mid};
}

}  // namespace phfiber

#endif  // PHFIBER_EXTREMA_HPP
