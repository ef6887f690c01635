#include "netgame/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace netgame {

std::vector<Vertex> ComponentLabeling::members(int c) const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(sizes.at(c)));
  for (std::size_t k = 0; k < label.size(); ++k)
    if (label[k] == c) out.push_back(static_cast<Vertex>(k + 1));
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw GraphError("graph needs at least one vertex, got " + std::to_string(n));
  adj_ = Adjacency::Zero(n, n);
}

Graph Graph::complete(int n) {
  if (n < 2) throw GraphError("complete graph needs n >= 2");
  Graph g(n);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::star(int n) {
  if (n < 2) throw GraphError("star graph needs n >= 2");
  Graph g(n);
  for (Vertex j = 2; j <= n; ++j) g.add_edge(1, j);
  return g;
}

Graph Graph::nearly_complete(int n) {
  if (n < 3) throw GraphError("nearly-complete graph needs n >= 3");
  Graph g = complete(n);
  g.remove_edge(1, 2);
  return g;
}

void Graph::check_vertex(Vertex i) const {
  if (i < 1 || i > n_)
    throw VertexRangeError("vertex " + std::to_string(i) + " outside 1.." + std::to_string(n_));
}

void Graph::check_pair(Vertex i, Vertex j) const {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw SelfLoopError("self-loop on vertex " + std::to_string(i));
}

bool Graph::has_edge(Vertex i, Vertex j) const {
  check_vertex(i);
  check_vertex(j);
  return adj_(i - 1, j - 1) != 0;
}

void Graph::add_edge(Vertex i, Vertex j) {
  check_pair(i, j);
  if (adj_(i - 1, j - 1))
    throw EdgePresentError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") already present");
  adj_(i - 1, j - 1) = adj_(j - 1, i - 1) = 1;
  ++edges_;
}

void Graph::remove_edge(Vertex i, Vertex j) {
  check_pair(i, j);
  if (!adj_(i - 1, j - 1))
    throw EdgeAbsentError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") absent");
  adj_(i - 1, j - 1) = adj_(j - 1, i - 1) = 0;
  --edges_;
}

void Graph::toggle_edge(Vertex i, Vertex j) {
  if (has_edge(i, j))
    remove_edge(i, j);
  else
    add_edge(i, j);
}

int Graph::degree(Vertex i) const {
  check_vertex(i);
  return adj_.row(i - 1).cast<int>().sum();
}

int Graph::max_degree() const {
  return adj_.cast<int>().rowwise().sum().maxCoeff();
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (Vertex i = 1; i <= n_; ++i) d[i - 1] = degree(i);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex i) const {
  check_vertex(i);
  std::vector<Vertex> out;
  for (int j = 0; j < n_; ++j)
    if (adj_(i - 1, j)) out.push_back(j + 1);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adj_(i, j)) out.emplace_back(i + 1, j + 1);
  return out;
}

ComponentLabeling components(const Graph& g) {
  const int n = g.order();
  const auto& adj = g.adjacency();
  ComponentLabeling out;
  out.label.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (out.label[s] >= 0) continue;
    const int id = out.count();
    out.sizes.push_back(0);
    out.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++out.sizes[id];
      for (int w = 0; w < n; ++w) {
        if (adj(u, w) && out.label[w] < 0) {
          out.label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

std::vector<Vertex> component_of(const Graph& g, Vertex v) {
  const int n = g.order();
  if (v < 1 || v > n) throw VertexRangeError("vertex " + std::to_string(v) + " out of range");
  const auto& adj = g.adjacency();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{v - 1};
  seen[v - 1] = 1;
  std::vector<Vertex> out;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    out.push_back(u + 1);
    for (int w = 0; w < n; ++w) {
      if (adj(u, w) && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double spectral_radius(const Graph& g) {
  if (g.edge_count() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency_matrix<double>(),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("adjacency eigensolver did not converge");
  // The Perron root of a nonnegative matrix dominates every other eigenvalue
  // in magnitude, so the largest eigenvalue is the spectral radius.
  return solver.eigenvalues().maxCoeff();
}

}  // namespace netgame
