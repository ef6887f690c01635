#ifndef NETGAME_KATZ_HPP
#define NETGAME_KATZ_HPP

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netgame/graph.hpp"

namespace netgame {

/// Safety margin on alpha * lambda_0 below 1.
inline constexpr double kAlphaGuardEpsilon = 1e-9;

class AlphaGuardError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
struct CentralityReport {
  Vec<Scalar> raw;     ///< Katz centrality C_K, indexed by v - 1
  Vec<Scalar> scaled;  ///< C_K divided by the sum over the vertex's component; 1 for isolates
  ComponentLabeling components;
  Scalar alpha{};
};

inline void check_alpha_range(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw AlphaGuardError("alpha must lie in (0, 1), got " + std::to_string(alpha));
}

/// True iff the Katz series converges with margin: alpha * lambda_0 < 1 - eps.
/// lambda_0 is bounded by the maximum degree, so the eigensolver only runs
/// when that bound is inconclusive.
inline bool alpha_guard(const Graph& g, double alpha) {
  check_alpha_range(alpha);
  const double limit = 1.0 - kAlphaGuardEpsilon;
  if (alpha * g.max_degree() < limit) return true;
  return alpha * spectral_radius(g) < limit;
}

inline void require_alpha_guard(const Graph& g, double alpha) {
  if (!alpha_guard(g, alpha))
    throw AlphaGuardError("alpha = " + std::to_string(alpha) +
                          " does not satisfy alpha * lambda_0 < 1 for this graph");
}

namespace detail {

/// Solves (I - alpha A^T) y = 1 on an adjacency block and returns y - 1.
template <typename Scalar>
Vec<Scalar> katz_block(const Mat<Scalar>& adjacency, Scalar alpha) {
  const Eigen::Index m = adjacency.rows();
  const Mat<Scalar> system = Mat<Scalar>::Identity(m, m) - alpha * adjacency.transpose();
  const Vec<Scalar> y = system.partialPivLu().solve(Vec<Scalar>::Ones(m));
  return y.array() - Scalar(1);
}

}  // namespace detail

/// Katz centrality C = (I - alpha A^T)^{-1} 1 - 1 over the whole graph.
template <typename Scalar = double>
Vec<Scalar> raw_katz(const Graph& g, Scalar alpha) {
  require_alpha_guard(g, static_cast<double>(alpha));
  return detail::katz_block<Scalar>(g.adjacency_matrix<Scalar>(), alpha);
}

/// Component-scaled Katz values for the given vertex set, which must be one
/// whole connected component. Entry k corresponds to vertices[k]. The caller
/// is responsible for the alpha guard.
template <typename Scalar = double>
Vec<Scalar> scaled_katz_on_component(const Graph& g, const std::vector<Vertex>& vertices,
                                     Scalar alpha, Vec<Scalar>* raw_out = nullptr) {
  const auto m = static_cast<Eigen::Index>(vertices.size());
  if (m == 1) {
    if (raw_out) *raw_out = Vec<Scalar>::Zero(1);
    return Vec<Scalar>::Ones(1);
  }
  Vec<Scalar> raw = detail::katz_block<Scalar>(g.induced_matrix<Scalar>(vertices), alpha);
  const Scalar total = raw.sum();
  assert(total > Scalar(0) && "connected component with zero Katz mass");
  if (!(total > Scalar(0))) throw std::logic_error("connected component with zero Katz mass");
  Vec<Scalar> scaled = raw / total;
  if (raw_out) *raw_out = std::move(raw);
  return scaled;
}

/// Raw Katz plus the per-component scaling used by the payoff.
/// Each component is solved on its own induced block; (I - alpha A^T) is
/// block diagonal across components so this equals the global solve.
template <typename Scalar = double>
CentralityReport<Scalar> scaled_component_katz(const Graph& g, Scalar alpha) {
  require_alpha_guard(g, static_cast<double>(alpha));
  CentralityReport<Scalar> report;
  report.alpha = alpha;
  report.components = components(g);
  report.raw = Vec<Scalar>::Zero(g.order());
  report.scaled = Vec<Scalar>::Ones(g.order());
  for (int c = 0; c < report.components.count(); ++c) {
    const auto members = report.components.members(c);
    if (members.size() == 1) continue;
    Vec<Scalar> raw;
    const Vec<Scalar> scaled = scaled_katz_on_component<Scalar>(g, members, alpha, &raw);
    for (std::size_t k = 0; k < members.size(); ++k) {
      report.raw(members[k] - 1) = raw(static_cast<Eigen::Index>(k));
      report.scaled(members[k] - 1) = scaled(static_cast<Eigen::Index>(k));
    }
  }
  return report;
}

}  // namespace netgame

#endif  // NETGAME_KATZ_HPP
