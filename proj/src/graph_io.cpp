#include "mwist/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mwist/error.hpp"

namespace mwist {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view tok, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw parse_error(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int stage = 0;  // 0 header, 1 weights, 2 edges, 3 done
  std::int64_t n = 0, m = 0;
  std::vector<Weight> weights;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view s(raw);
    if (auto h = s.find('#'); h != std::string_view::npos) s = s.substr(0, h);
    auto tok = split_ws(s);
    if (tok.empty()) continue;
    switch (stage) {
      case 0:
        if (tok.size() != 2) throw parse_error(line_no, "header must be `n m`");
        n = to_int(tok[0], line_no);
        m = to_int(tok[1], line_no);
        if (n < 0 || m < 0) throw parse_error(line_no, "negative count in header");
        if (n > 100000000 || m > 1000000000) throw parse_error(line_no, "header counts too large");
        weights.reserve(n);
        edges.reserve(m);
        stage = n > 0 ? 1 : (m > 0 ? 2 : 3);
        break;
      case 1: {
        if (tok.size() != 1) throw parse_error(line_no, "weight line must hold one integer");
        auto w = to_int(tok[0], line_no);
        if (w < 0) throw parse_error(line_no, "negative weight");
        weights.push_back(w);
        if (static_cast<std::int64_t>(weights.size()) == n) stage = m > 0 ? 2 : 3;
        break;
      }
      case 2: {
        if (tok.size() != 2) throw parse_error(line_no, "edge line must be `u v`");
        auto u = to_int(tok[0], line_no), v = to_int(tok[1], line_no);
        if (u < 0 || v < 0 || u >= n || v >= n) throw parse_error(line_no, "edge endpoint out of range");
        if (u == v) throw parse_error(line_no, "self-loop");
        edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
        if (static_cast<std::int64_t>(edges.size()) == m) stage = 3;
        break;
      }
      default:
        throw parse_error(line_no, "unexpected content after the last edge");
    }
  }
  if (stage != 3) {
    if (stage == 0) throw parse_error(line_no, "missing header");
    if (stage == 1) throw parse_error(line_no, "expected " + std::to_string(n) + " weights");
    throw parse_error(line_no, "expected " + std::to_string(m) + " edges");
  }
  try {
    return Graph(std::move(weights), std::move(edges));
  } catch (const invalid_graph_error& e) {
    throw parse_error(line_no, e.what());
  }
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open " + path.string());
  Graph g = parse_graph(in);
  if (!is_connected(g)) throw disconnected_error(path.string() + ": graph is disconnected");
  return g;
}

std::vector<std::string> read_comments(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string raw;
  while (std::getline(in, raw)) {
    auto h = raw.find('#');
    if (h == std::string::npos) continue;
    auto c = raw.substr(h + 1);
    if (!c.empty() && c.front() == ' ') c.erase(0, 1);
    out.push_back(c);
  }
  return out;
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.n() << ' ' << g.m() << '\n';
  for (auto w : g.weights()) out << w << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string graph_to_string(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream s;
  write_graph(s, g, comments);
  return s.str();
}

void save_graph(const std::filesystem::path& path, const Graph& g,
                const std::vector<std::string>& comments) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path.string());
  write_graph(out, g, comments);
}

Graph tree_as_graph(const Graph& g, const SpanningTree& t) { return Graph(g.weights(), t.edges); }

}  // namespace mwist
