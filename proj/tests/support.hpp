#ifndef PHFIBER_TESTS_SUPPORT_HPP
#define PHFIBER_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "phfiber/phfiber.hpp"
#include "phfiber/random.hpp"

namespace phfiber::testing {

using Q = Rational;

inline Q q(const std::string& text) { return ScalarTraits<Q>::parse(text); }

inline std::vector<Q> qs(std::initializer_list<const char*> items) {
  std::vector<Q> out;
  for (const char* s : items) out.push_back(q(s));
  return out;
}

inline PLFunction<Q> circle(std::initializer_list<const char*> t, std::initializer_list<const char*> v) {
  return PLFunction<Q>(DomainKind::Circle, qs(t), qs(v));
}

inline PLFunction<Q> interval(std::initializer_list<const char*> t, std::initializer_list<const char*> v) {
  return PLFunction<Q>(DomainKind::Interval, qs(t), qs(v));
}

/// Circle function with the given values on evenly spaced breakpoints.
inline PLFunction<Q> circle_even(const std::vector<Q>& values) {
  std::vector<Q> t;
  for (std::size_t i = 0; i < values.size(); ++i) t.push_back(Q(static_cast<long>(i)) / Q(static_cast<long>(values.size())));
  return PLFunction<Q>(DomainKind::Circle, t, values);
}

struct BarSpec {
  int degree;
  const char* birth;
  const char* death;  // nullptr for infinity
};

inline Barcode<Q> bars(std::initializer_list<BarSpec> items) {
  Barcode<Q> out;
  for (const auto& b : items) {
    out.add({b.degree, q(b.birth), b.death ? std::optional<Q>(q(b.death)) : std::nullopt});
  }
  return out;
}

/// Bottleneck distance by trying every bijection between A + diagonal(B)
/// and B + diagonal(A). Only for a handful of bars.
inline std::optional<Q> exhaustive_bottleneck(const Barcode<Q>& a, const Barcode<Q>& b) {
  Q worst(0);
  for (int degree = 0; degree <= 2; ++degree) {
    auto ia = a.infinite(degree);
    auto ib = b.infinite(degree);
    if (ia.size() != ib.size()) return std::nullopt;
    for (std::size_t i = 0; i < ia.size(); ++i) worst = std::max(worst, abs(ia[i].birth - ib[i].birth));

    const auto fa = a.bounded(degree);
    const auto fb = b.bounded(degree);
    const std::size_t p = fa.size();
    const std::size_t m = p + fb.size();
    if (m == 0) continue;
    auto half = [](const Bar<Q>& x) { return (*x.death - x.birth) / 2; };
    // Left slot i < p is fa[i], otherwise a diagonal point. Right slot j < |fb| is fb[j].
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::optional<Q> best;
    do {
      Q cost(0);
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = perm[i];
        const bool left_real = i < p;
        const bool right_real = j < fb.size();
        Q c(0);
        if (left_real && right_real) {
          c = std::max(abs(fa[i].birth - fb[j].birth), abs(*fa[i].death - *fb[j].death));
        } else if (left_real) {
          c = half(fa[i]);
        } else if (right_real) {
          c = half(fb[j]);
        }
        cost = std::max(cost, c);
      }
      if (!best || cost < *best) best = cost;
    } while (std::next_permutation(perm.begin(), perm.end()));
    worst = std::max(worst, *best);
  }
  return worst;
}

inline Q bottleneck_or_throw(const Barcode<Q>& a, const Barcode<Q>& b) {
  const auto d = bottleneck_distance(a, b);
  if (d.infinite) throw Error(ErrorCode::VerificationFailed, "infinite bottleneck distance");
  return d.value;
}

/// Independent membership test for the circle: every cyclic arrangement of
/// the minima {b0} u births and maxima {b1} u deaths with the first minimum
/// fixed, kept when the union-find oracle reproduces D on its 2n-gon.
inline std::vector<std::vector<Q>> brute_force_circle_classes(const Barcode<Q>& d) {
  std::vector<Q> minima{d.infinite(0)[0].birth};
  std::vector<Q> maxima{d.infinite(1)[0].birth};
  for (const auto& bar : d.bounded(0)) {
    minima.push_back(bar.birth);
    maxima.push_back(*bar.death);
  }
  const std::size_t n = minima.size();
  std::sort(minima.begin() + 1, minima.end());
  std::sort(maxima.begin(), maxima.end());
  std::vector<std::vector<Q>> found;
  do {
    do {
      std::vector<Q> seq;
      for (std::size_t i = 0; i < n; ++i) {
        seq.push_back(minima[i]);
        seq.push_back(maxima[i]);
      }
      bool alternating = true;
      for (std::size_t i = 0; i < 2 * n; ++i) {
        const Q& x = seq[i];
        const Q& y = seq[(i + 1) % (2 * n)];
        if (i % 2 == 0 ? !(x < y) : !(y < x)) alternating = false;
      }
      if (!alternating) continue;
      const auto f = circle_even(seq);
      if (!same_barcode(barcode_bruteforce(f, 20 * n), d)) continue;
      const auto normal = normalize_cyclic(ExtremaSequence<Q>{DomainKind::Circle, seq}).values;
      if (std::find(found.begin(), found.end(), normal) == found.end()) found.push_back(normal);
    } while (std::next_permutation(maxima.begin(), maxima.end()));
  } while (std::next_permutation(minima.begin() + 1, minima.end()));
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace phfiber::testing

#endif
