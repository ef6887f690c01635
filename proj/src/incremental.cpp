#include "netgame/incremental.hpp"

#include <algorithm>
#include <numeric>

namespace netgame {

IncrementalPayoffs::IncrementalPayoffs(Graph g, GameConfig cfg)
    : graph_(std::move(g)), cfg_(std::move(cfg)) {
  cfg_.validate();
  if (graph_.order() != cfg_.n) throw ConfigError("graph and config disagree on n");
  const auto n = static_cast<std::size_t>(graph_.order());
  block_of_.assign(n, -1);
  index_in_block_.assign(n, -1);
  payoff_.assign(n, 0.0);
  const auto labels = components(graph_);
  for (int c = 0; c < labels.count(); ++c) {
    Block b = factor(labels.members(c));
    refresh_payoffs(b);
    install(std::move(b));
  }
}

double IncrementalPayoffs::total_payoff() const {
  return std::accumulate(payoff_.begin(), payoff_.end(), 0.0);
}

IncrementalPayoffs::Block IncrementalPayoffs::factor(std::vector<Vertex> members) const {
  Block b;
  b.members = std::move(members);
  const auto m = static_cast<Eigen::Index>(b.members.size());
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(m, m) - cfg_.alpha * graph_.induced_matrix<double>(b.members).transpose();
  b.inverse = system.partialPivLu().inverse();
  finish(b);
  return b;
}

void IncrementalPayoffs::finish(Block& b) const {
  b.y = b.inverse.rowwise().sum();
  b.colsum = b.inverse.colwise().sum();
  b.ysum = b.y.sum();
}

void IncrementalPayoffs::install(Block b) {
  const int id = static_cast<int>(blocks_.size());
  for (std::size_t k = 0; k < b.members.size(); ++k) {
    block_of_[b.members[k] - 1] = id;
    index_in_block_[b.members[k] - 1] = static_cast<int>(k);
  }
  blocks_.push_back(std::move(b));
}

void IncrementalPayoffs::remove_block(int id) {
  const int last = static_cast<int>(blocks_.size()) - 1;
  if (id != last) {
    blocks_[id] = std::move(blocks_[last]);
    for (Vertex v : blocks_[id].members) block_of_[v - 1] = id;
  }
  blocks_.pop_back();
}

void IncrementalPayoffs::refresh_payoffs(const Block& b) {
  const auto size = static_cast<int>(b.members.size());
  for (std::size_t k = 0; k < b.members.size(); ++k) {
    const Vertex v = b.members[k];
    if (size == 1) {
      payoff_[v - 1] = 0.0;
      continue;
    }
    const double scaled = (b.y(static_cast<Eigen::Index>(k)) - 1.0) / (b.ysum - size);
    payoff_[v - 1] = cfg_.reward(v) * (size - 1) * scaled - cfg_.cost(v) * graph_.degree(v);
  }
}

double IncrementalPayoffs::inv(Vertex r, Vertex c) const {
  const int br = block_of_[r - 1];
  if (br != block_of_[c - 1]) return 0.0;
  return blocks_[br].inverse(index_in_block_[r - 1], index_in_block_[c - 1]);
}

// Toggling (i, j) changes M by -sign * alpha (e_i e_j^T + e_j e_i^T) = -U V^T
// with U = sign * alpha [e_i e_j] and V = [e_j e_i].
IncrementalPayoffs::Perturbation IncrementalPayoffs::perturb(Vertex i, Vertex j, bool add) const {
  Perturbation p;
  p.sign = add ? 1.0 : -1.0;
  const double a = p.sign * cfg_.alpha;
  Eigen::Matrix2d s;
  s << 1.0 - a * inv(j, i), -a * inv(j, j),
       -a * inv(i, i), 1.0 - a * inv(i, j);
  p.s_inv = s.inverse();
  const Block& bi = blocks_[block_of_[i - 1]];
  const Block& bj = blocks_[block_of_[j - 1]];
  const Eigen::Vector2d z(bj.y(index_in_block_[j - 1]), bi.y(index_in_block_[i - 1]));
  p.w = p.s_inv * z;
  return p;
}

std::vector<Vertex> IncrementalPayoffs::reach_without(Vertex from, Vertex i, Vertex j) const {
  const Block& b = blocks_[block_of_[from - 1]];
  const auto& adj = graph_.adjacency();
  std::vector<char> seen(b.members.size(), 0);
  std::vector<int> stack{index_in_block_[from - 1]};
  seen[stack.front()] = 1;
  std::vector<Vertex> out;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    const Vertex vu = b.members[u];
    out.push_back(vu);
    for (std::size_t w = 0; w < b.members.size(); ++w) {
      if (seen[w]) continue;
      const Vertex vw = b.members[w];
      if (!adj(vu - 1, vw - 1)) continue;
      if ((vu == i && vw == j) || (vu == j && vw == i)) continue;
      seen[w] = 1;
      stack.push_back(static_cast<int>(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double IncrementalPayoffs::endpoint_payoff(Vertex v, const std::vector<Vertex>& part, Vertex i,
                                           Vertex j, const Perturbation& p, int new_degree) const {
  const double a = p.sign * cfg_.alpha;
  const Block& bv = blocks_[block_of_[v - 1]];
  const double yv =
      bv.y(index_in_block_[v - 1]) + a * (inv(v, i) * p.w(0) + inv(v, j) * p.w(1));
  double size;
  double ysum;
  if (part.empty()) {
    // Post-move component is the union of the endpoint blocks.
    const Block& bi = blocks_[block_of_[i - 1]];
    const Block& bj = blocks_[block_of_[j - 1]];
    const bool same = block_of_[i - 1] == block_of_[j - 1];
    size = static_cast<double>(bi.members.size() + (same ? 0 : bj.members.size()));
    ysum = bi.ysum + (same ? 0.0 : bj.ysum) +
           a * (bi.colsum(index_in_block_[i - 1]) * p.w(0) +
                bj.colsum(index_in_block_[j - 1]) * p.w(1));
  } else {
    size = static_cast<double>(part.size());
    double base = 0.0, col_i = 0.0, col_j = 0.0;
    for (Vertex u : part) {
      base += bv.y(index_in_block_[u - 1]);
      col_i += inv(u, i);
      col_j += inv(u, j);
    }
    ysum = base + a * (col_i * p.w(0) + col_j * p.w(1));
  }
  if (size == 1.0) return 0.0;
  const double scaled = (yv - 1.0) / (ysum - size);
  return cfg_.reward(v) * (size - 1.0) * scaled - cfg_.cost(v) * new_degree;
}

MoveDeltas IncrementalPayoffs::marginal(Vertex i, Vertex j) const {
  if (i == j) throw SelfLoopError("self-loop on vertex " + std::to_string(i));
  const bool add = !graph_.has_edge(i, j);
  const Perturbation p = perturb(i, j, add);
  const int step = add ? 1 : -1;
  const int di = graph_.degree(i) + step;
  const int dj = graph_.degree(j) + step;
  std::vector<Vertex> part_i, part_j;
  if (!add) {
    part_i = reach_without(i, i, j);
    if (part_i.size() < blocks_[block_of_[i - 1]].members.size()) {
      const auto& all = blocks_[block_of_[i - 1]].members;
      std::set_difference(all.begin(), all.end(), part_i.begin(), part_i.end(),
                          std::back_inserter(part_j));
    } else {
      part_i.clear();
    }
  }
  return {endpoint_payoff(i, part_i, i, j, p, di) - payoff(i),
          endpoint_payoff(j, part_j, i, j, p, dj) - payoff(j)};
}

void IncrementalPayoffs::apply(Vertex i, Vertex j) {
  if (i == j) throw SelfLoopError("self-loop on vertex " + std::to_string(i));
  const bool add = !graph_.has_edge(i, j);
  const Perturbation p = perturb(i, j, add);
  const double a = p.sign * cfg_.alpha;

  const int id_i = block_of_[i - 1];
  const int id_j = block_of_[j - 1];
  Block merged;
  if (id_i == id_j) {
    merged = std::move(blocks_[id_i]);
    remove_block(id_i);
  } else {
    Block bi = std::move(blocks_[id_i]);
    Block bj = std::move(blocks_[id_j]);
    remove_block(std::max(id_i, id_j));
    remove_block(std::min(id_i, id_j));
    std::merge(bi.members.begin(), bi.members.end(), bj.members.begin(), bj.members.end(),
               std::back_inserter(merged.members));
    const auto m = static_cast<Eigen::Index>(merged.members.size());
    merged.inverse = Eigen::MatrixXd::Zero(m, m);
    std::vector<Eigen::Index> pos_i, pos_j;
    for (Vertex v : bi.members)
      pos_i.push_back(std::lower_bound(merged.members.begin(), merged.members.end(), v) -
                      merged.members.begin());
    for (Vertex v : bj.members)
      pos_j.push_back(std::lower_bound(merged.members.begin(), merged.members.end(), v) -
                      merged.members.begin());
    for (std::size_t r = 0; r < pos_i.size(); ++r)
      for (std::size_t c = 0; c < pos_i.size(); ++c)
        merged.inverse(pos_i[r], pos_i[c]) = bi.inverse(static_cast<Eigen::Index>(r),
                                                        static_cast<Eigen::Index>(c));
    for (std::size_t r = 0; r < pos_j.size(); ++r)
      for (std::size_t c = 0; c < pos_j.size(); ++c)
        merged.inverse(pos_j[r], pos_j[c]) = bj.inverse(static_cast<Eigen::Index>(r),
                                                        static_cast<Eigen::Index>(c));
    merged.updates = std::max(bi.updates, bj.updates);
  }

  const auto pos = [&](Vertex v) {
    return std::lower_bound(merged.members.begin(), merged.members.end(), v) -
           merged.members.begin();
  };
  const Eigen::Index pi = pos(i), pj = pos(j);
  Eigen::Matrix<double, Eigen::Dynamic, 2> left(merged.inverse.rows(), 2);
  left.col(0) = merged.inverse.col(pi);
  left.col(1) = merged.inverse.col(pj);
  Eigen::Matrix<double, 2, Eigen::Dynamic> right(2, merged.inverse.cols());
  right.row(0) = merged.inverse.row(pj);
  right.row(1) = merged.inverse.row(pi);
  merged.inverse.noalias() += a * left * p.s_inv * right;
  ++merged.updates;

  graph_.toggle_edge(i, j);

  std::vector<Block> pieces;
  if (!add) {
    // Vertices still reachable from i after the deletion, in merged order.
    std::vector<char> seen(merged.members.size(), 0);
    std::vector<Eigen::Index> stack{pi};
    seen[pi] = 1;
    std::size_t reached = 0;
    const auto& adj = graph_.adjacency();
    while (!stack.empty()) {
      const Eigen::Index u = stack.back();
      stack.pop_back();
      ++reached;
      for (std::size_t w = 0; w < merged.members.size(); ++w) {
        if (!seen[w] && adj(merged.members[u] - 1, merged.members[w] - 1)) {
          seen[w] = 1;
          stack.push_back(static_cast<Eigen::Index>(w));
        }
      }
    }
    if (reached < merged.members.size()) {
      for (int side = 1; side >= 0; --side) {
        std::vector<Eigen::Index> idx;
        Block piece;
        for (std::size_t k = 0; k < merged.members.size(); ++k) {
          if (seen[k] == side) {
            idx.push_back(static_cast<Eigen::Index>(k));
            piece.members.push_back(merged.members[k]);
          }
        }
        piece.inverse = merged.inverse(idx, idx);
        piece.updates = merged.updates;
        pieces.push_back(std::move(piece));
      }
    }
  }
  if (pieces.empty()) pieces.push_back(std::move(merged));

  for (auto& piece : pieces) {
    if (piece.updates >= kRefreshInterval || piece.members.size() == 1)
      piece = factor(std::move(piece.members));
    else
      finish(piece);
    refresh_payoffs(piece);
    install(std::move(piece));
  }
}

}  // namespace netgame
