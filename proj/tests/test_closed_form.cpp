#include "doctest.h"
#include "netgame/closed_form.hpp"
#include "netgame/katz.hpp"

using namespace netgame;
using doctest::Approx;

namespace {

// Symmetry reduces each graph to a couple of vertex classes; these solve the
// class equations c = alpha * sum over neighbours of (1 + c) by hand.

CentralityPair<double> nearly_complete_recurrence(int n, double a) {
  // s: endpoints of the missing edge, b: everyone else.
  //   c_s = a (n - 2) (1 + c_b)
  //   c_b = a ((n - 3)(1 + c_b) + 2 (1 + c_s))
  const double m = n - 2.0;
  const double cb = a * ((n - 3.0) + 2.0 + 2.0 * a * m) / (1.0 - a * (n - 3.0) - 2.0 * a * a * m);
  const double cs = a * m * (1.0 + cb);
  const double total = m * cb + 2.0 * cs;
  return {cb / total, cs / total};
}

CentralityPair<double> star_recurrence(int n, double a) {
  //   c_h = a (n - 1)(1 + c_l),  c_l = a (1 + c_h)
  const double ch = a * (n - 1.0) * (1.0 + a) / (1.0 - a * a * (n - 1.0));
  const double cl = a * (1.0 + ch);
  const double total = ch + (n - 1.0) * cl;
  return {ch / total, cl / total};
}

double leaf_link_recurrence(int n, double a) {
  // h hub, x the two linked leaves, l the n - 3 others.
  //   c_l = a (1 + c_h),  c_x = a (2 + c_h) / (1 - a)
  //   c_h = a (2 (1 + c_x) + (n - 3)(1 + c_l))
  const double k = 1.0 - 2.0 * a * a / (1.0 - a) - (n - 3.0) * a * a;
  const double ch = a * ((n - 1.0) + 4.0 * a / (1.0 - a) + (n - 3.0) * a) / k;
  const double cx = a * (2.0 + ch) / (1.0 - a);
  const double cl = a * (1.0 + ch);
  return cx / (ch + 2.0 * cx + (n - 3.0) * cl);
}

}  // namespace

TEST_CASE("complete graph") {
  CHECK(complete_scaled(5) == 0.2);
  CHECK(complete_scaled(2) == 0.5);
  CHECK(complete_scaled(100) == Approx(0.01).epsilon(1e-15));
  CHECK_THROWS_AS(complete_scaled(1), ClosedFormDomainError);
}

TEST_CASE("nearly complete graph") {
  const auto four = nearly_complete_scaled(4, 0.1);
  CHECK(four.small == Approx(1.2 / 5.8).epsilon(1e-14));
  CHECK(four.big == Approx(3.4 / 11.6).epsilon(1e-14));
  CHECK(2 * four.big + 2 * four.small == Approx(1.0).epsilon(1e-15));

  const auto three = nearly_complete_scaled(3, 0.1);
  CHECK(three.small == Approx(1.2 / 4.6).epsilon(1e-14));
  CHECK(three.big == Approx(2.2 / 4.6).epsilon(1e-14));

  CHECK(nearly_complete_big_as_printed(4, 0.1) == Approx(0.396552).epsilon(1e-6));

  for (int n = 3; n <= 40; ++n)
    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double a = s / (n - 1);
      const auto k = nearly_complete_scaled(n, a);
      const auto oracle = nearly_complete_recurrence(n, a);
      CHECK(std::abs(k.big - oracle.big) < 1e-13);
      CHECK(std::abs(k.small - oracle.small) < 1e-13);
      CHECK(std::abs((n - 2) * k.big + 2 * k.small - 1.0) < 1e-13);
      CHECK(k.small < k.big);
      CHECK(k.small < 1.0 / n);
    }

  CHECK_THROWS_AS(nearly_complete_scaled(2, 0.1), ClosedFormDomainError);
  CHECK_THROWS_AS(nearly_complete_scaled(5, 0.3), ClosedFormDomainError);
  CHECK_THROWS_AS(nearly_complete_scaled(5, 0.0), ClosedFormDomainError);
}

TEST_CASE("printed big-vertex value fails normalization") {
  for (int n = 4; n <= 12; ++n) {
    const double a = 0.5 / (n - 1);
    const double sum = (n - 2) * nearly_complete_big_as_printed(n, a) + 2 * nearly_complete_scaled(n, a).small;
    CHECK(std::abs(sum - 1.0) > 1e-3);
  }
}

TEST_CASE("star") {
  const auto five = star_scaled(5, 0.1);
  CHECK(five.big == Approx(0.44).epsilon(1e-14));
  CHECK(five.small == Approx(0.14).epsilon(1e-14));

  const auto limit = star_scaled(3, 1e-12);
  CHECK(limit.big == Approx(0.5).epsilon(1e-9));
  CHECK(limit.small == Approx(0.25).epsilon(1e-9));

  for (int n = 3; n <= 40; ++n)
    for (double s : {0.1, 0.5, 0.9}) {
      const double a = s / std::sqrt(n - 1.0);
      const auto k = star_scaled(n, a);
      const auto oracle = star_recurrence(n, a);
      CHECK(std::abs(k.big - oracle.big) < 1e-13);
      CHECK(std::abs(k.small - oracle.small) < 1e-13);
      CHECK(std::abs(k.big + (n - 1) * k.small - 1.0) < 1e-13);
    }
  CHECK_THROWS_AS(star_scaled(2, 0.1), ClosedFormDomainError);
  CHECK_THROWS_AS(star_scaled(5, 0.6), ClosedFormDomainError);
}

TEST_CASE("star with linked leaves") {
  CHECK(star_leaf_link_scaled(4, 0.1) == Approx(2.29 / 8.96).epsilon(1e-13));
  CHECK(star_leaf_link_scaled(5, 0.1) == Approx(2.38 / 11.5).epsilon(1e-13));
  for (int n = 4; n <= 40; ++n)
    for (double s : {0.1, 0.5, 0.9}) {
      const double a = s / (n - 1);
      CHECK(std::abs(star_leaf_link_scaled(n, a) - leaf_link_recurrence(n, a)) < 1e-13);
    }
  CHECK_THROWS_AS(star_leaf_link_scaled(3, 0.1), ClosedFormDomainError);
}

TEST_CASE("complete-graph threshold") {
  CHECK(complete_stable_threshold(5, 0.1) == Approx(4.0 / 35.0).epsilon(1e-14));
  CHECK(complete_stable_threshold(3, 0.1) == Approx(2.0 / 13.8).epsilon(1e-14));
  for (int n = 3; n <= 30; ++n)
    for (double s : {0.25, 0.5, 0.75}) {
      const double a = s / (n - 1);
      const double via_lemma = (n - 1) * (1.0 / n - nearly_complete_scaled(n, a).small);
      CHECK(std::abs(complete_stable_threshold(n, a) - via_lemma) < 1e-12);
    }
  CHECK(complete_is_stable(5, 0.1, 0.1));
  CHECK_FALSE(complete_is_stable(5, 0.1, 0.12));
  CHECK(complete_is_stable(5, 0.1, complete_stable_threshold(5, 0.1)));
  CHECK_THROWS_AS(complete_stable_threshold(2, 0.1), ClosedFormDomainError);
}

TEST_CASE("star window") {
  const auto w = star_window(5, 0.1);
  CHECK(w.delta_lo == Approx(0.267826).epsilon(1e-6));
  CHECK(w.delta_hi == Approx(0.56).epsilon(1e-14));
  CHECK(w.zeta_hi == Approx(0.385).epsilon(1e-14));
  CHECK(w.meaningful());
  // The hub bound is what the hub loses by dropping one leaf.
  CHECK(w.zeta_hi == Approx(4 * star_scaled(5, 0.1).big - 3 * star_scaled(4, 0.1).big).epsilon(1e-13));

  const auto inside = star_is_stable(5, 0.1, 0.3, 0.2);
  CHECK(inside.stable);
  CHECK_FALSE(inside.zeta_exceeds_delta);

  const auto isolate = star_is_stable(5, 0.1, 0.6, 0.2);
  CHECK_FALSE(isolate.stable);
  CHECK(isolate.leaves_isolate);

  const auto link = star_is_stable(5, 0.1, 0.2, 0.2);
  CHECK_FALSE(link.stable);
  CHECK(link.leaves_link);

  const auto hub = star_is_stable(5, 0.1, 0.3, 0.5);
  CHECK_FALSE(hub.stable);
  CHECK(hub.hub_drops);
  CHECK(hub.zeta_exceeds_delta);

  CHECK(star_is_stable(5, 0.1, w.delta_hi, w.zeta_hi).stable);
  CHECK_THROWS_AS(star_window(3, 0.1), ClosedFormDomainError);
}

TEST_CASE("closed forms agree with the linear solve") {
  for (int n = 4; n <= 15; ++n) {
    const double a = 0.5 / (n - 1);
    const auto nc = scaled_component_katz(Graph::nearly_complete(n), a);
    CHECK(std::abs(nc.scaled(0) - nearly_complete_scaled(n, a).small) < 1e-13);
    CHECK(std::abs(nc.scaled(2) - nearly_complete_scaled(n, a).big) < 1e-13);
    Graph linked = Graph::star(n);
    linked.add_edge(2, 3);
    CHECK(std::abs(scaled_component_katz(linked, a).scaled(1) - star_leaf_link_scaled(n, a)) < 1e-13);
  }
}

TEST_CASE("long double instantiation") {
  const auto k = nearly_complete_scaled<long double>(6, 0.1L);
  CHECK(std::abs(static_cast<double>(4 * k.big + 2 * k.small - 1.0L)) < 1e-17);
}
