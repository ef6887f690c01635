#ifndef NETGAME_CLOSED_FORM_HPP
#define NETGAME_CLOSED_FORM_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace netgame {

// Closed-form scaled Katz values and stability thresholds for complete, nearly
// complete and star graphs. Thresholds are in cost-per-reward units (gamma / R).

class ClosedFormDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <typename Scalar>
struct CentralityPair {
  Scalar big;    ///< K_b: hub, or a vertex untouched by the missing edge
  Scalar small;  ///< K_s: leaf, or an endpoint of the missing edge
};

template <typename Scalar>
struct StarWindow {
  Scalar delta_lo;
  Scalar delta_hi;
  Scalar zeta_hi;

  bool meaningful() const { return delta_lo < delta_hi; }
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ClosedFormDomainError(what);
}

template <typename Scalar>
void require_alpha(Scalar alpha) {
  require(alpha > Scalar(0) && alpha < Scalar(1), "alpha must lie in (0, 1)");
}

}  // namespace detail

/// Every vertex of K_n carries 1/n.
template <typename Scalar = double>
Scalar complete_scaled(int n) {
  detail::require(n >= 2, "complete graph needs n >= 2");
  return Scalar(1) / Scalar(n);
}

/// K_n minus one edge. K_s is the value at the two endpoints of the missing
/// edge. K_b uses the numerator 2 alpha (n - 2) + n - 1, which makes
/// (n - 2) K_b + 2 K_s sum to one.
template <typename Scalar = double>
CentralityPair<Scalar> nearly_complete_scaled(int n, Scalar alpha) {
  detail::require(n >= 3, "nearly-complete graph needs n >= 3");
  detail::require_alpha(alpha);
  detail::require(alpha * Scalar(n - 1) < Scalar(1), "alpha * (n - 1) must be below 1");
  const Scalar nn = Scalar(n);
  const Scalar denom = Scalar(2) * nn * alpha + nn + Scalar(1);
  return {(Scalar(2) * alpha * (nn - Scalar(2)) + nn - Scalar(1)) / ((nn - Scalar(2)) * denom),
          (Scalar(2) * alpha + Scalar(1)) / denom};
}

/// Variant of K_b with numerator (2n - 2) alpha + n. It does not normalize;
/// kept only so the verifier can report the discrepancy.
template <typename Scalar = double>
Scalar nearly_complete_big_as_printed(int n, Scalar alpha) {
  detail::require(n >= 3, "nearly-complete graph needs n >= 3");
  detail::require_alpha(alpha);
  const Scalar nn = Scalar(n);
  return ((Scalar(2) * nn - Scalar(2)) * alpha + nn) /
         ((nn - Scalar(2)) * (Scalar(2) * nn * alpha + nn + Scalar(1)));
}

/// Star S_n with hub K_b and leaves K_s.
template <typename Scalar = double>
CentralityPair<Scalar> star_scaled(int n, Scalar alpha) {
  detail::require(n >= 3, "star needs n >= 3");
  detail::require_alpha(alpha);
  detail::require(alpha * alpha * Scalar(n - 1) < Scalar(1), "alpha^2 (n - 1) must be below 1");
  const Scalar nn = Scalar(n);
  const Scalar denom = nn * alpha + Scalar(2);
  return {(alpha + Scalar(1)) / denom,
          ((nn - Scalar(1)) * alpha + Scalar(1)) / ((nn - Scalar(1)) * denom)};
}

/// Scaled value of each of two leaves of S_n after they link to each other.
template <typename Scalar = double>
Scalar star_leaf_link_scaled(int n, Scalar alpha) {
  detail::require(n >= 4, "leaf link needs n >= 4");
  detail::require_alpha(alpha);
  // Connected with n edges, so lambda_0 <= sqrt(2m - n + 1) = sqrt(n + 1).
  detail::require(alpha * alpha * Scalar(n + 1) < Scalar(1),
                  "alpha too large for a star with a leaf link");
  const Scalar nn = Scalar(n);
  const Scalar num = (nn - Scalar(3)) * alpha * alpha + (Scalar(1) - nn) * alpha - Scalar(2);
  const Scalar den = (nn - Scalar(3)) * (alpha - Scalar(1)) * nn * alpha - Scalar(2) * nn -
                     Scalar(6) * alpha;
  return num / den;
}

/// K_n is stable against every deletion iff gamma / R does not exceed this.
template <typename Scalar = double>
Scalar complete_stable_threshold(int n, Scalar alpha) {
  detail::require(n >= 3, "complete-graph threshold needs n >= 3");
  detail::require_alpha(alpha);
  detail::require(alpha * Scalar(n - 1) < Scalar(1), "alpha * (n - 1) must be below 1");
  const Scalar nn = Scalar(n);
  return (nn - Scalar(1)) / (nn * (Scalar(2) * nn * alpha + nn + Scalar(1)));
}

template <typename Scalar = double>
StarWindow<Scalar> star_window(int n, Scalar alpha) {
  detail::require(n >= 4, "star window needs n >= 4");
  const auto star = star_scaled<Scalar>(n, alpha);
  const Scalar linked = star_leaf_link_scaled<Scalar>(n, alpha);
  const Scalar nn = Scalar(n);
  StarWindow<Scalar> w;
  w.delta_lo = (nn - Scalar(1)) * (linked - star.small);
  w.delta_hi = ((nn - Scalar(1)) * alpha + Scalar(1)) / (nn * alpha + Scalar(2));
  w.zeta_hi = (alpha + Scalar(1)) * (alpha + Scalar(2)) /
              ((nn * alpha + Scalar(2)) * ((nn - Scalar(1)) * alpha + Scalar(2)));
  return w;
}

/// Ties are stable: a move that leaves a player indifferent is never taken.
template <typename Scalar = double>
bool complete_is_stable(int n, Scalar alpha, Scalar cost_per_reward) {
  return cost_per_reward <= complete_stable_threshold<Scalar>(n, alpha);
}

struct StarVerdict {
  bool stable;
  bool leaves_link;      ///< leaf cost below delta_lo
  bool leaves_isolate;   ///< leaf cost above delta_hi
  bool hub_drops;        ///< hub cost above zeta_hi
  bool zeta_exceeds_delta;
};

template <typename Scalar = double>
StarVerdict star_is_stable(int n, Scalar alpha, Scalar leaf_cost_per_reward,
                                   Scalar hub_cost_per_reward) {
  const auto w = star_window<Scalar>(n, alpha);
  StarVerdict v{};
  v.leaves_link = leaf_cost_per_reward < w.delta_lo;
  v.leaves_isolate = leaf_cost_per_reward > w.delta_hi;
  v.hub_drops = hub_cost_per_reward > w.zeta_hi;
  v.zeta_exceeds_delta = hub_cost_per_reward > leaf_cost_per_reward;
  v.stable = !v.leaves_link && !v.leaves_isolate && !v.hub_drops;
  return v;
}

}  // namespace netgame

#endif  // NETGAME_CLOSED_FORM_HPP
