#ifndef PHFIBER_PL_FUNCTION_HPP
#define PHFIBER_PL_FUNCTION_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "phfiber/error.hpp"
#include "phfiber/scalar.hpp"

namespace phfiber {

/// Interval is [0,1]. Circle is R/Z parametrized by [0,1), with 0 as the
/// base point ("north pole").
enum class DomainKind { Interval, Circle };

inline const char* to_string(DomainKind domain) {
  return domain == DomainKind::Circle ? "circle" : "interval";
}

/// Piecewise-linear function on the interval or the circle, given by its
/// values at strictly increasing breakpoints t_0 = 0 < t_1 < ... < t_k.
///
/// On the interval t_k = 1. On the circle t_k < 1 and the last segment wraps
/// from t_k back to t_0 + 1.
template <class Scalar>
class PLFunction {
 public:
  PLFunction(DomainKind domain, std::vector<Scalar> breakpoints, std::vector<Scalar> values)
      : domain_(domain), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    validate();
  }

  static PLFunction constant(DomainKind domain, const Scalar& c) {
    if (domain == DomainKind::Circle) return PLFunction(domain, {Scalar(0)}, {c});
    return PLFunction(domain, {Scalar(0), Scalar(1)}, {c, c});
  }

  DomainKind domain() const { return domain_; }
  const std::vector<Scalar>& breakpoints() const { return breakpoints_; }
  const std::vector<Scalar>& values() const { return values_; }
  std::size_t size() const { return breakpoints_.size(); }

  /// Affine interpolation. Circle parameters are taken mod 1; interval
  /// parameters are clamped to [0,1].
  Scalar operator()(Scalar t) const {
    if (domain_ == DomainKind::Circle) {
      t -= floor_of(t);
    } else {
      if (t <= breakpoints_.front()) return values_.front();
      if (t >= breakpoints_.back()) return values_.back();
    }
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    if (t == breakpoints_[i]) return values_[i];
    Scalar t_next, v_next;
    if (i + 1 < breakpoints_.size()) {
      t_next = breakpoints_[i + 1];
      v_next = values_[i + 1];
    } else {
      t_next = Scalar(1);
      v_next = values_.front();
    }
    return values_[i] + (v_next - values_[i]) * (t - breakpoints_[i]) / (t_next - breakpoints_[i]);
  }

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.domain_ == b.domain_ && a.breakpoints_ == b.breakpoints_ && a.values_ == b.values_;
  }

 private:
  void validate() const {
    auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidFunction, why); };
    if (breakpoints_.empty()) fail("at least one breakpoint is required");
    if (breakpoints_.size() != values_.size()) fail("breakpoints and values differ in length");
    if (breakpoints_.front() != Scalar(0)) fail("first breakpoint must be 0");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
      if (!(breakpoints_[i - 1] < breakpoints_[i])) fail("breakpoints must be strictly increasing");
    }
    if (domain_ == DomainKind::Interval) {
      if (breakpoints_.size() < 2 || breakpoints_.back() != Scalar(1)) {
        fail("interval functions need a last breakpoint at 1");
      }
    } else if (!(breakpoints_.back() < Scalar(1))) {
      fail("circle breakpoints must lie in [0,1)");
    }
    if constexpr (!ScalarTraits<Scalar>::exact) {
      for (const auto& v : values_) {
        if (!std::isfinite(v)) fail("values must be finite");
      }
    }
  }

  DomainKind domain_;
  std::vector<Scalar> breakpoints_;
  std::vector<Scalar> values_;
};

template <class Scalar>
Scalar eval(const PLFunction<Scalar>& f, const Scalar& t) {
  return f(t);
}

template <class Scalar>
bool is_constant(const PLFunction<Scalar>& f, Tolerance tol = {}) {
  const auto& v = f.values();
  return std::all_of(v.begin(), v.end(), [&](const Scalar& x) { return approx_equal(x, v.front(), tol); });
}

/// Maximum of |f(t) - g(t)| over `samples` equally spaced parameters.
template <class Scalar>
double sampled_distance(const PLFunction<Scalar>& f, const PLFunction<Scalar>& g, int samples = 1000) {
  double worst = 0.0;
  const int count = f.domain() == DomainKind::Circle ? samples : samples + 1;
  for (int k = 0; k < count; ++k) {
    const Scalar t = Scalar(k) / Scalar(samples);
    worst = std::max(worst, std::abs(to_double(Scalar(f(t) - g(t)))));
  }
  return worst;
}

}  // namespace phfiber

#endif  // PHFIBER_PL_FUNCTION_HPP
