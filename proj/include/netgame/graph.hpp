#ifndef NETGAME_GRAPH_HPP
#define NETGAME_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace netgame {

/// Player id. Vertices are numbered 1..n; vectors indexed by vertex use
/// position v - 1.
using Vertex = int;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SelfLoopError : public GraphError {
 public:
  using GraphError::GraphError;
};

class VertexRangeError : public GraphError {
 public:
  using GraphError::GraphError;
};

class EdgePresentError : public GraphError {
 public:
  using GraphError::GraphError;
};

class EdgeAbsentError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct ComponentLabeling {
  /// label[v - 1] is the component id of vertex v. Ids are assigned in order
  /// of each component's smallest vertex, starting at 0.
  std::vector<int> label;
  std::vector<int> sizes;

  int count() const { return static_cast<int>(sizes.size()); }
  int size_of(Vertex v) const { return sizes[label[v - 1]]; }
  /// Vertices of component c in ascending order.
  std::vector<Vertex> members(int c) const;
};

/// Undirected simple graph on vertices 1..n with dense adjacency.
class Graph {
 public:
  using Adjacency = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

  explicit Graph(int n);

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);
  static Graph star(int n);
  /// Complete graph minus the edge (1, 2).
  static Graph nearly_complete(int n);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  bool has_edge(Vertex i, Vertex j) const;
  void add_edge(Vertex i, Vertex j);
  void remove_edge(Vertex i, Vertex j);
  /// Adds the edge if absent, removes it otherwise.
  void toggle_edge(Vertex i, Vertex j);

  int degree(Vertex i) const;
  int max_degree() const;
  std::vector<int> degrees() const;
  std::vector<Vertex> neighbors(Vertex i) const;

  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const Adjacency& adjacency() const { return adj_; }

  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const {
    return adj_.cast<Scalar>();
  }

  /// Adjacency of the subgraph induced by `vertices`, in the given order.
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> induced_matrix(
      const std::vector<Vertex>& vertices) const {
    const auto m = static_cast<Eigen::Index>(vertices.size());
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sub(m, m);
    for (Eigen::Index r = 0; r < m; ++r)
      for (Eigen::Index c = 0; c < m; ++c)
        sub(r, c) = static_cast<Scalar>(adj_(vertices[r] - 1, vertices[c] - 1));
    return sub;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_pair(Vertex i, Vertex j) const;
  void check_vertex(Vertex i) const;

  int n_;
  std::size_t edges_ = 0;
  Adjacency adj_;
};

ComponentLabeling components(const Graph& g);

/// Vertices in the component of `v`, ascending.
std::vector<Vertex> component_of(const Graph& g, Vertex v);

/// Largest adjacency eigenvalue, from a dense self-adjoint eigensolver.
double spectral_radius(const Graph& g);

}  // namespace netgame

#endif  // NETGAME_GRAPH_HPP
