#ifndef NETGAME_IO_HPP
#define NETGAME_IO_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "netgame/dynamics.hpp"
#include "netgame/graph.hpp"
#include "netgame/katz.hpp"
#include "netgame/payoff.hpp"

namespace netgame {

/// Malformed edge-list input; `line()` is 1-based.
class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Every writer takes `comments`, emitted first as "# ..." lines (or the
// format's comment syntax) so artifacts carry the resolved run config.

/// Edge list: header "n <count>", then one "i j" line per edge with i < j.
/// Blank lines and lines starting with '#' are ignored on read.
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

void write_dot(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
void write_graphml(std::ostream& out, const Graph& g,
                   const std::vector<std::string>& comments = {});

/// vertex,raw,scaled,component
void write_centrality_csv(std::ostream& out, const CentralityReport<double>& report,
                          const std::vector<std::string>& comments = {});
/// vertex,benefit,cost,payoff
void write_payoff_csv(std::ostream& out, const PayoffReport& report,
                      const std::vector<std::string>& comments = {});

/// Event log line: index,i,j,action,delta_i,delta_j
void write_event_header(std::ostream& out, const std::vector<std::string>& comments = {});
void write_event(std::ostream& out, const ProposalEvent& ev);
void write_event_summary(std::ostream& out, const SimulationTrace& trace);

/// Metrics record: one header line and one value line. Field order:
/// seed,n,alpha,converged,proposals,accepted,edges,avg_degree,total_payoff,
/// components,largest_component,giant_fraction,max_degree,
/// incentivized_mean_degree,incentivized_mean_payoff,component_sizes
void write_metrics(std::ostream& out, const RunSummary& summary, double alpha,
                   const std::vector<Vertex>& incentivized,
                   const std::vector<std::string>& comments = {});

std::string format_double(double x);

/// Writes through `fill` into a sibling temporary file, then renames it over
/// `path`.
void write_atomically(const std::filesystem::path& path,
                      const std::function<void(std::ostream&)>& fill);

}  // namespace netgame

#endif  // NETGAME_IO_HPP
