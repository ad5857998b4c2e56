#ifndef PHFIBER_BARCODE_HPP
#define PHFIBER_BARCODE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "phfiber/error.hpp"
#include "phfiber/extrema.hpp"
#include "phfiber/pl_function.hpp"
#include "phfiber/scalar.hpp"

namespace phfiber {

/// Half-open interval [birth, death) in a given homological degree.
/// An empty `death` means +infinity.
template <class Scalar>
struct Bar {
  int degree = 0;
  Scalar birth;
  std::optional<Scalar> death;

  bool infinite() const { return !death.has_value(); }

  friend bool operator==(const Bar&, const Bar&) = default;
};

template <class Scalar>
bool canonical_less(const Bar<Scalar>& a, const Bar<Scalar>& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.infinite() != b.infinite()) return b.infinite();
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.infinite()) return false;
  return *a.death < *b.death;
}

/// Multiset of bars, kept in canonical order (degree, finite before
/// infinite, birth, death).
template <class Scalar>
class Barcode {
 public:
  Barcode() = default;
  explicit Barcode(std::vector<Bar<Scalar>> bars) : bars_(std::move(bars)) {
    for (const auto& bar : bars_) check(bar);
    std::sort(bars_.begin(), bars_.end(), canonical_less<Scalar>);
  }

  void add(Bar<Scalar> bar) {
    check(bar);
    bars_.insert(std::upper_bound(bars_.begin(), bars_.end(), bar, canonical_less<Scalar>), std::move(bar));
  }

  const std::vector<Bar<Scalar>>& bars() const { return bars_; }
  std::size_t size() const { return bars_.size(); }
  bool empty() const { return bars_.empty(); }

  std::vector<Bar<Scalar>> in_degree(int degree) const {
    std::vector<Bar<Scalar>> out;
    for (const auto& bar : bars_) {
      if (bar.degree == degree) out.push_back(bar);
    }
    return out;
  }

  std::vector<Bar<Scalar>> bounded(int degree) const {
    std::vector<Bar<Scalar>> out;
    for (const auto& bar : bars_) {
      if (bar.degree == degree && !bar.infinite()) out.push_back(bar);
    }
    return out;
  }

  std::vector<Bar<Scalar>> infinite(int degree) const {
    std::vector<Bar<Scalar>> out;
    for (const auto& bar : bars_) {
      if (bar.degree == degree && bar.infinite()) out.push_back(bar);
    }
    return out;
  }

  friend bool operator==(const Barcode&, const Barcode&) = default;

 private:
  static void check(const Bar<Scalar>& bar) {
    if (bar.degree < 0 || bar.degree > 2) throw Error(ErrorCode::MalformedBarcode, "bar degree must be 0, 1 or 2");
    if (bar.death && !(bar.birth < *bar.death)) throw Error(ErrorCode::MalformedBarcode, "bar birth must precede death");
  }

  std::vector<Bar<Scalar>> bars_;
};

template <class Scalar>
Barcode<Scalar> trivial_barcode(DomainKind domain, const Scalar& c) {
  Barcode<Scalar> out;
  out.add({0, c, std::nullopt});
  if (domain == DomainKind::Circle) out.add({1, c, std::nullopt});
  return out;
}

namespace detail {

// Union-find whose roots carry the birth value and the parameter of the
// oldest minimum of their component.
template <class Scalar>
class ElderForest {
 public:
  std::size_t make(const Scalar& birth, const Scalar& param) {
    parent_.push_back(parent_.size());
    birth_.push_back(birth);
    param_.push_back(param);
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Merges the components of two distinct roots at `level`. The younger one
  /// (larger birth; on ties the larger parameter) dies and its bar is
  /// returned unless it has zero length.
  std::optional<Bar<Scalar>> merge(std::size_t a, std::size_t b, const Scalar& level, Tolerance tol) {
    const bool a_older = definitely_less(birth_[a], birth_[b], tol) ||
                         (approx_equal(birth_[a], birth_[b], tol) && param_[a] < param_[b]);
    const std::size_t survivor = a_older ? a : b;
    const std::size_t victim = a_older ? b : a;
    parent_[victim] = survivor;
    if (definitely_less(birth_[victim], level, tol)) return Bar<Scalar>{0, birth_[victim], level};
    return std::nullopt;
  }

  const Scalar& birth(std::size_t root) const { return birth_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<Scalar> birth_;
  std::vector<Scalar> param_;
};

}  // namespace detail

/// Sublevel-set persistence barcode in degrees 0 and 1.
///
/// Minima are births; maxima between two minima merge their components and
/// the younger dies (elder rule). On the circle the last maximum closes the
/// loop and gives the infinite degree-1 bar. Interval boundary maxima merge
/// nothing.
template <class Scalar>
Barcode<Scalar> barcode(const PLFunction<Scalar>& f, Tolerance tol = {}) {
  if (is_constant(f, tol)) return trivial_barcode(f.domain(), f.values().front());
  const auto ex = extrema(f, tol);
  const auto& vals = ex.sequence.values;
  const auto& sets = ex.sets;
  const bool circle = f.domain() == DomainKind::Circle;
  const std::size_t count = vals.size();

  detail::ElderForest<Scalar> forest;
  std::vector<std::size_t> node(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    if (sets[i].is_minimum) node[i] = forest.make(vals[i], sets[i].lo);
  }

  struct Merge {
    Scalar level, param;
    std::size_t left, right;
  };
  std::vector<Merge> merges;
  for (std::size_t i = 0; i < count; ++i) {
    if (sets[i].is_minimum) continue;
    if (!circle && (i == 0 || i + 1 == count)) continue;
    merges.push_back({vals[i], sets[i].lo, node[(i + count - 1) % count], node[(i + 1) % count]});
  }
  std::sort(merges.begin(), merges.end(), [](const Merge& a, const Merge& b) {
    return std::tie(a.level, a.param) < std::tie(b.level, b.param);
  });

  Barcode<Scalar> out;
  for (const auto& m : merges) {
    const std::size_t a = forest.find(m.left);
    const std::size_t b = forest.find(m.right);
    if (a == b) {
      out.add({1, m.level, std::nullopt});
      continue;
    }
    if (auto bar = forest.merge(a, b, m.level, tol)) out.add(*bar);
  }
  const std::size_t any_min = sets[0].is_minimum ? 0 : 1;
  out.add({0, forest.birth(forest.find(node[any_min])), std::nullopt});
  return out;
}

/// Independent oracle: union-find over a uniform grid of `resolution` cells,
/// sweeping the sampled values upwards. Every breakpoint where the slope
/// changes sign must be a grid point.
template <class Scalar>
Barcode<Scalar> barcode_bruteforce(const PLFunction<Scalar>& f, std::size_t resolution, Tolerance tol = {}) {
  const std::size_t k = f.size();
  if (resolution < 10 * k) {
    throw Error(ErrorCode::ResolutionTooLow,
                "resolution " + std::to_string(resolution) + " is below 10 x " + std::to_string(k) + " breakpoints");
  }
  const bool circle = f.domain() == DomainKind::Circle;
  const auto& t = f.breakpoints();
  const auto& v = f.values();
  auto sign = [&](const Scalar& a, const Scalar& b) { return compare(b, a, tol); };
  for (std::size_t j = 0; j < k; ++j) {
    if (!circle && (j == 0 || j + 1 == k)) continue;
    const int before = sign(v[(j + k - 1) % k], v[j]);
    const int after = sign(v[j], v[(j + 1) % k]);
    if (before != after && !ScalarTraits<Scalar>::is_integer(Scalar(t[j] * Scalar(resolution)), tol)) {
      throw Error(ErrorCode::ResolutionTooLow,
                  "grid of resolution " + std::to_string(resolution) + " skips the breakpoint at " +
                      shortest_decimal(to_double(t[j])));
    }
  }

  const std::size_t samples = circle ? resolution : resolution + 1;
  std::vector<Scalar> y(samples);
  for (std::size_t i = 0; i < samples; ++i) y[i] = f(Scalar(static_cast<long>(i)) / Scalar(static_cast<long>(resolution)));

  std::vector<std::size_t> order(samples);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return y[a] < y[b]; });

  detail::ElderForest<Scalar> forest;
  std::vector<std::size_t> node(samples, 0);
  std::vector<bool> present(samples, false);
  const std::size_t edges = circle ? samples : samples - 1;
  std::vector<bool> edge_added(edges, false);  // edge e joins e and e + 1 (mod samples)

  Barcode<Scalar> out;
  std::size_t begin = 0;
  while (begin < samples) {
    std::size_t end = begin + 1;
    while (end < samples && approx_equal(y[order[end]], y[order[begin]], tol)) ++end;
    const Scalar level = y[order[begin]];
    for (std::size_t p = begin; p < end; ++p) {
      const std::size_t i = order[p];
      present[i] = true;
      node[i] = forest.make(y[i], Scalar(static_cast<long>(i)));
    }
    for (std::size_t p = begin; p < end; ++p) {
      const std::size_t i = order[p];
      const std::size_t left_edge = circle ? (i + samples - 1) % samples : i - 1;
      for (std::size_t e : {left_edge, i}) {
        if (!circle && (e >= edges || (i == 0 && e == left_edge))) continue;
        const std::size_t a = e, b = (e + 1) % samples;
        if (edge_added[e] || !present[a] || !present[b]) continue;
        edge_added[e] = true;
        const std::size_t ra = forest.find(node[a]);
        const std::size_t rb = forest.find(node[b]);
        if (ra == rb) {
          out.add({1, level, std::nullopt});
        } else if (auto bar = forest.merge(ra, rb, level, tol)) {
          out.add(*bar);
        }
      }
    }
    begin = end;
  }
  out.add({0, forest.birth(forest.find(node[0])), std::nullopt});
  return out;
}

/// Smallest multiple of the common denominator of the breakpoints that is at
/// least 10 x the number of breakpoints: a grid the oracle accepts.
template <class Scalar>
std::size_t oracle_resolution(const PLFunction<Scalar>& f, std::size_t limit = 1000000) {
  Integer common(1);
  for (const auto& t : f.breakpoints()) {
    Rational q;
    if constexpr (ScalarTraits<Scalar>::exact) {
      q = t;
    } else {
      q = from_double<Rational>(t);
    }
    common = boost::multiprecision::lcm(common, Integer(boost::multiprecision::denominator(q)));
    if (common > limit) {
      throw Error(ErrorCode::ResolutionTooLow, "breakpoints need a grid finer than " + std::to_string(limit));
    }
  }
  const std::size_t base = common.convert_to<std::size_t>();
  const std::size_t need = 10 * f.size();
  return base * ((need + base - 1) / base);
}

namespace detail {

template <class Scalar>
bool bars_match(const Bar<Scalar>& a, const Bar<Scalar>& b, Tolerance tol) {
  if (a.degree != b.degree || a.infinite() != b.infinite()) return false;
  if (!approx_equal(a.birth, b.birth, tol)) return false;
  return a.infinite() || approx_equal(*a.death, *b.death, tol);
}

}  // namespace detail

/// Multiset equality per degree, endpoints compared under tolerance.
template <class Scalar>
bool same_barcode(const Barcode<Scalar>& a, const Barcode<Scalar>& b, Tolerance tol = {}) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& bar : a.bars()) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && detail::bars_match(bar, b.bars()[j], tol)) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace phfiber

#endif  // PHFIBER_BARCODE_HPP
