#ifndef PHFIBER_REPARAMETRIZATION_HPP
#define PHFIBER_REPARAMETRIZATION_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "phfiber/error.hpp"
#include "phfiber/pl_function.hpp"
#include "phfiber/scalar.hpp"

namespace phfiber {

/// Monotone non-decreasing PL self-map of the interval or the circle.
///
/// Stored as a lift Phi: [0,1] -> R sampled at knots 0 = s_0 < ... < s_k = 1.
/// On the circle Phi(1) = Phi(0) + 1 and Phi extends to R by
/// Phi(s + m) = Phi(s) + m. On the interval Phi(0) = 0 and Phi(1) = 1.
/// Flat pieces are allowed, so this covers non-injective limits of
/// homeomorphisms.
template <class Scalar>
class Reparametrization {
 public:
  Reparametrization(DomainKind domain, std::vector<Scalar> knots, std::vector<Scalar> lift,
                    Tolerance tol = {})
      : domain_(domain), knots_(std::move(knots)), lift_(std::move(lift)) {
    validate(tol);
  }

  static Reparametrization identity(DomainKind domain) {
    return Reparametrization(domain, {Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1)});
  }

  /// s -> s + r on the circle.
  static Reparametrization rotation(const Scalar& r) {
    return Reparametrization(DomainKind::Circle, {Scalar(0), Scalar(1)}, {r, Scalar(r + Scalar(1))});
  }

  DomainKind domain() const { return domain_; }
  const std::vector<Scalar>& knots() const { return knots_; }
  const std::vector<Scalar>& lift_values() const { return lift_; }

  /// Value of the lift at any real s (periodically extended on the circle).
  Scalar lift(const Scalar& s) const {
    if (domain_ == DomainKind::Circle) {
      const Scalar whole = floor_of(s);
      return lift_in_unit(s - whole) + whole;
    }
    if (s <= Scalar(0)) return lift_.front();
    if (s >= Scalar(1)) return lift_.back();
    return lift_in_unit(s);
  }

  /// phi(s) as a point of the domain (reduced mod 1 on the circle).
  Scalar operator()(const Scalar& s) const {
    Scalar x = lift(s);
    if (domain_ == DomainKind::Circle) x -= floor_of(x);
    return x;
  }

  /// Same map, lift shifted by an integer.
  Reparametrization shifted_lift(long offset) const {
    std::vector<Scalar> lifted = lift_;
    for (auto& x : lifted) x += Scalar(offset);
    return Reparametrization(domain_, knots_, std::move(lifted));
  }

 private:
  Scalar lift_in_unit(const Scalar& s) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), s);
    if (it == knots_.end()) return lift_.back();
    const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
    if (s == knots_[i]) return lift_[i];
    return lift_[i] + (lift_[i + 1] - lift_[i]) * (s - knots_[i]) / (knots_[i + 1] - knots_[i]);
  }

  void validate(Tolerance tol) const {
    auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidReparametrization, why); };
    if (knots_.size() < 2 || knots_.size() != lift_.size()) fail("need at least two matched knots");
    if (knots_.front() != Scalar(0) || knots_.back() != Scalar(1)) fail("knots must span [0,1]");
    for (std::size_t i = 1; i < knots_.size(); ++i) {
      if (!(knots_[i - 1] < knots_[i])) fail("knots must be strictly increasing");
      if (definitely_less(lift_[i], lift_[i - 1], tol)) fail("reparametrization must be non-decreasing");
    }
    if (domain_ == DomainKind::Circle) {
      if (!approx_equal(Scalar(lift_.back() - lift_.front()), Scalar(1), tol)) {
        fail("circle lift must satisfy Phi(1) = Phi(0) + 1");
      }
    } else if (!approx_equal(lift_.front(), Scalar(0), tol) || !approx_equal(lift_.back(), Scalar(1), tol)) {
      fail("interval reparametrization must fix 0 and 1");
    }
  }

  DomainKind domain_;
  std::vector<Scalar> knots_;
  std::vector<Scalar> lift_;
};

namespace detail {

// Knots of `inner` together with every parameter in [0,1] that `inner` maps
// onto a target (targets taken mod 1 on the circle). Sorted, unique.
template <class Scalar>
std::vector<Scalar> pullback_knots(const Reparametrization<Scalar>& inner, const std::vector<Scalar>& targets) {
  const auto& s = inner.knots();
  const auto& lift = inner.lift_values();
  const bool periodic = inner.domain() == DomainKind::Circle;
  std::vector<Scalar> out(s.begin(), s.end());
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const Scalar& a = lift[i];
    const Scalar& b = lift[i + 1];
    if (!(a < b)) continue;
    for (const Scalar& tau : targets) {
      Scalar x = periodic ? Scalar(tau + floor_of(Scalar(a - tau))) : tau;
      for (; x < b; x += Scalar(1)) {
        if (x > a) out.push_back(s[i] + (x - a) * (s[i + 1] - s[i]) / (b - a));
        if (!periodic) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// f o phi. The result is exactly PL: its breakpoints are the knots of phi
/// and the phi-preimages of the breakpoints of f.
template <class Scalar>
PLFunction<Scalar> compose(const PLFunction<Scalar>& f, const Reparametrization<Scalar>& phi) {
  if (f.domain() != phi.domain()) throw Error(ErrorCode::DomainMismatch, "function and reparametrization domains differ");
  std::vector<Scalar> knots = detail::pullback_knots(phi, f.breakpoints());
  if (f.domain() == DomainKind::Circle) {
    while (!knots.empty() && knots.back() >= Scalar(1)) knots.pop_back();
  }
  std::vector<Scalar> values;
  values.reserve(knots.size());
  for (const auto& s : knots) values.push_back(f(phi.lift(s)));
  return PLFunction<Scalar>(f.domain(), std::move(knots), std::move(values));
}

/// outer o inner.
template <class Scalar>
Reparametrization<Scalar> compose(const Reparametrization<Scalar>& outer, const Reparametrization<Scalar>& inner) {
  if (outer.domain() != inner.domain()) throw Error(ErrorCode::DomainMismatch, "reparametrization domains differ");
  std::vector<Scalar> targets = outer.knots();
  if (outer.domain() == DomainKind::Circle) targets.pop_back();
  std::vector<Scalar> knots = detail::pullback_knots(inner, targets);
  std::vector<Scalar> lift;
  lift.reserve(knots.size());
  for (const auto& s : knots) lift.push_back(outer.lift(inner.lift(s)));
  return Reparametrization<Scalar>(outer.domain(), std::move(knots), std::move(lift));
}

/// Pointwise (1 - t) a + t b of two lifts. Stays in the monotone class.
template <class Scalar>
Reparametrization<Scalar> interpolate(const Reparametrization<Scalar>& a, const Reparametrization<Scalar>& b,
                                      const Scalar& t) {
  if (a.domain() != b.domain()) throw Error(ErrorCode::DomainMismatch, "reparametrization domains differ");
  std::vector<Scalar> knots;
  std::set_union(a.knots().begin(), a.knots().end(), b.knots().begin(), b.knots().end(), std::back_inserter(knots));
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  std::vector<Scalar> lift;
  lift.reserve(knots.size());
  const Scalar one_minus_t = Scalar(1) - t;
  for (const auto& s : knots) lift.push_back(one_minus_t * a.lift(s) + t * b.lift(s));
  return Reparametrization<Scalar>(a.domain(), std::move(knots), std::move(lift));
}

}  // namespace phfiber

#endif  // PHFIBER_REPARAMETRIZATION_HPP
