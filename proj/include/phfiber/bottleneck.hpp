#ifndef PHFIBER_BOTTLENECK_HPP
#define PHFIBER_BOTTLENECK_HPP

#include <algorithm>
#include <limits>
#include <vector>

#include "phfiber/barcode.hpp"
#include "phfiber/scalar.hpp"

namespace phfiber {

/// A non-negative scalar or +infinity.
template <class Scalar>
struct ExtendedReal {
  Scalar value{0};
  bool infinite = false;

  static ExtendedReal inf() { return {Scalar(0), true}; }
  double to_double() const {
    return infinite ? std::numeric_limits<double>::infinity() : phfiber::to_double(value);
  }
  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
  }
};

namespace detail {

template <class Scalar>
Scalar abs_diff(const Scalar& a, const Scalar& b) {
  return a < b ? Scalar(b - a) : Scalar(a - b);
}

template <class Scalar>
Scalar linf_cost(const Bar<Scalar>& a, const Bar<Scalar>& b) {
  return std::max(abs_diff(a.birth, b.birth), abs_diff(*a.death, *b.death));
}

template <class Scalar>
Scalar diagonal_cost(const Bar<Scalar>& a) {
  return (*a.death - a.birth) / Scalar(2);
}

// Kuhn's augmenting paths on a dense adjacency matrix.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(std::vector<std::vector<bool>> adjacency)
      : adj_(std::move(adjacency)), match_right_(adj_.empty() ? 0 : adj_[0].size(), npos) {}

  bool has_perfect_matching() {
    for (std::size_t left = 0; left < adj_.size(); ++left) {
      std::vector<bool> seen(match_right_.size(), false);
      if (!augment(left, seen)) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool augment(std::size_t left, std::vector<bool>& seen) {
    for (std::size_t right = 0; right < match_right_.size(); ++right) {
      if (!adj_[left][right] || seen[right]) continue;
      seen[right] = true;
      if (match_right_[right] == npos || augment(match_right_[right], seen)) {
        match_right_[right] = left;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<bool>> adj_;
  std::vector<std::size_t> match_right_;
};

// Left: bars of a, then diagonal copies of b. Right: bars of b, then diagonal copies of a.
template <class Scalar>
bool matching_within(const std::vector<Bar<Scalar>>& a, const std::vector<Bar<Scalar>>& b, const Scalar& radius) {
  const std::size_t p = a.size(), q = b.size();
  std::vector<std::vector<bool>> adj(p + q, std::vector<bool>(q + p, false));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) adj[i][j] = linf_cost(a[i], b[j]) <= radius;
    adj[i][q + i] = diagonal_cost(a[i]) <= radius;
  }
  for (std::size_t j = 0; j < q; ++j) {
    adj[p + j][j] = diagonal_cost(b[j]) <= radius;
    for (std::size_t i = 0; i < p; ++i) adj[p + j][q + i] = true;
  }
  return BipartiteMatcher(std::move(adj)).has_perfect_matching();
}

template <class Scalar>
Scalar bounded_bottleneck(const std::vector<Bar<Scalar>>& a, const std::vector<Bar<Scalar>>& b) {
  std::vector<Scalar> candidates{Scalar(0)};
  for (const auto& x : a) {
    candidates.push_back(diagonal_cost(x));
    for (const auto& y : b) candidates.push_back(linf_cost(x, y));
  }
  for (const auto& y : b) candidates.push_back(diagonal_cost(y));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::size_t lo = 0, hi = candidates.size() - 1;  // the largest candidate is always feasible
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (matching_within(a, b, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

}  // namespace detail

/// Bottleneck distance, degree by degree. Infinite bars match only infinite
/// bars (sorted matching by birth); bounded bars may also match the
/// diagonal. Exact for rational scalars: the answer is one of the candidate
/// costs, found by binary search with a perfect-matching test.
template <class Scalar>
ExtendedReal<Scalar> bottleneck_distance(const Barcode<Scalar>& a, const Barcode<Scalar>& b) {
  Scalar worst(0);
  for (int degree = 0; degree <= 2; ++degree) {
    auto ia = a.infinite(degree);
    auto ib = b.infinite(degree);
    if (ia.size() != ib.size()) return ExtendedReal<Scalar>::inf();
    for (std::size_t i = 0; i < ia.size(); ++i) {
      worst = std::max(worst, detail::abs_diff(ia[i].birth, ib[i].birth));
    }
    worst = std::max(worst, detail::bounded_bottleneck(a.bounded(degree), b.bounded(degree)));
  }
  return {worst, false};
}

}  // namespace phfiber

#endif  // PHFIBER_BOTTLENECK_HPP
