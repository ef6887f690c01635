#include "netgame/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace netgame {

EdgeListError::EdgeListError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string format_double(double x) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf, static_cast<std::size_t>(len));
}

namespace {

void hash_comments(std::ostream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
}

bool parse_int(const std::string& token, long long& value) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

/// Comment text safe inside <!-- -->.
std::string xml_comment(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '-' && !out.empty() && out.back() == '-') out += ' ';
    out += c;
  }
  return out;
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  hash_comments(out, comments);
  out << "n " << g.order() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Graph> g;
  std::set<std::pair<long long, long long>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!g) {
      long long n = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_int(tokens[1], n))
        throw EdgeListError(line_no, "expected header 'n <count>'");
      if (n < 1) throw EdgeListError(line_no, "vertex count must be positive");
      g.emplace(static_cast<int>(n));
      continue;
    }
    long long i = 0, j = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], i) || !parse_int(tokens[1], j))
      throw EdgeListError(line_no, "expected 'i j'");
    if (i == j) throw EdgeListError(line_no, "self-loop on vertex " + std::to_string(i));
    if (i < 1 || j < 1 || i > g->order() || j > g->order())
      throw EdgeListError(line_no, "vertex out of range 1.." + std::to_string(g->order()));
    if (i > j) throw EdgeListError(line_no, "edges must be written with i < j");
    if (!seen.emplace(i, j).second)
      throw EdgeListError(line_no, "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
    g->add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  if (!g) throw EdgeListError(line_no, "missing header 'n <count>'");
  return std::move(*g);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_edge_list(in);
}

void write_dot(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "// " << c << '\n';
  out << "graph netgame {\n";
  const int top = std::max(1, g.max_degree());
  for (Vertex v = 1; v <= g.order(); ++v) {
    const int d = g.degree(v);
    // Size and shade grow with degree.
    const double width = 0.2 + 0.8 * d / top;
    const int shade = 95 - static_cast<int>(70.0 * d / top);
    out << "  " << v << " [degree=" << d << ", width=" << format_double(width)
        << ", style=filled, fillcolor=\"gray" << shade << "\"];\n";
  }
  for (const auto& [i, j] : g.edges()) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
}

void write_graphml(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  for (const auto& c : comments) out << "<!-- " << xml_comment(c) << " -->\n";
  out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"degree\" for=\"node\" attr.name=\"degree\" attr.type=\"int\"/>\n"
      << "  <graph id=\"netgame\" edgedefault=\"undirected\">\n";
  for (Vertex v = 1; v <= g.order(); ++v)
    out << "    <node id=\"n" << v << "\"><data key=\"degree\">" << g.degree(v)
        << "</data></node>\n";
  int e = 0;
  for (const auto& [i, j] : g.edges())
    out << "    <edge id=\"e" << e++ << "\" source=\"n" << i << "\" target=\"n" << j << "\"/>\n";
  out << "  </graph>\n</graphml>\n";
}

void write_centrality_csv(std::ostream& out, const CentralityReport<double>& report,
                          const std::vector<std::string>& comments) {
  hash_comments(out, comments);
  out << "vertex,raw,scaled,component\n";
  for (Eigen::Index k = 0; k < report.raw.size(); ++k)
    out << k + 1 << ',' << format_double(report.raw(k)) << ','
        << format_double(report.scaled(k)) << ',' << report.components.label[k] << '\n';
}

void write_payoff_csv(std::ostream& out, const PayoffReport& report,
                      const std::vector<std::string>& comments) {
  hash_comments(out, comments);
  out << "vertex,benefit,cost,payoff\n";
  for (Eigen::Index k = 0; k < report.payoff.size(); ++k)
    out << k + 1 << ',' << format_double(report.benefit(k)) << ','
        << format_double(report.cost(k)) << ',' << format_double(report.payoff(k)) << '\n';
}

void write_event_header(std::ostream& out, const std::vector<std::string>& comments) {
  hash_comments(out, comments);
  out << "index,i,j,action,delta_i,delta_j\n";
}

void write_event(std::ostream& out, const ProposalEvent& ev) {
  out << ev.index << ',' << ev.i << ',' << ev.j << ',' << to_string(ev.action) << ','
      << format_double(ev.deltas.i) << ',' << format_double(ev.deltas.j) << '\n';
}

void write_event_summary(std::ostream& out, const SimulationTrace& trace) {
  out << "# summary proposals=" << trace.proposals << " accepted=" << trace.accepted
      << " converged=" << (trace.converged ? 1 : 0)
      << " stable=" << (trace.certificate.stable ? 1 : 0)
      << " edges=" << trace.final_graph.edge_count() << '\n';
}

void write_metrics(std::ostream& out, const RunSummary& s, double alpha,
                   const std::vector<Vertex>& incentivized,
                   const std::vector<std::string>& comments) {
  hash_comments(out, comments);
  out << "seed,n,alpha,converged,proposals,accepted,edges,avg_degree,total_payoff,components,"
         "largest_component,giant_fraction,max_degree,incentivized_mean_degree,"
         "incentivized_mean_payoff,component_sizes\n";
  const auto n = s.degrees.size();
  out << s.seed << ',' << n << ',' << format_double(alpha) << ',' << (s.converged ? 1 : 0) << ','
      << s.proposals << ',' << s.accepted << ',' << s.edges << ',' << format_double(s.average_degree)
      << ',' << format_double(s.total_payoff) << ',' << s.component_sizes.size() << ','
      << s.largest_component() << ',' << format_double(s.giant_fraction()) << ','
      << s.max_degree << ',';
  if (incentivized.empty())
    out << ",,";
  else
    out << format_double(s.mean_degree(incentivized)) << ','
        << format_double(s.mean_payoff(incentivized)) << ',';
  for (std::size_t k = 0; k < s.component_sizes.size(); ++k)
    out << (k ? " " : "") << s.component_sizes[k];
  out << '\n';
}

void write_atomically(const std::filesystem::path& path,
                      const std::function<void(std::ostream&)>& fill) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    fill(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace netgame
