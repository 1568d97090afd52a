#include "hublab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "hublab/error.hpp"

namespace hublab {

std::string to_string(Distance d) {
  return d.is_finite() ? std::to_string(d.value()) : std::string("inf");
}

Graph::Graph(bool directed, std::size_t n) : directed_(directed), adjacency_(n) {}

std::pair<Vertex, Vertex> Graph::key(Vertex tail, Vertex head) const {
  if (!directed_ && head < tail) std::swap(tail, head);
  return {tail, head};
}

std::optional<Length> Graph::arc_length(Vertex tail, Vertex head) const {
  auto it = arc_index_.find(key(tail, head));
  if (it == arc_index_.end()) return std::nullopt;
  return arcs_[it->second].length;
}

bool Graph::zero_path_exists(Vertex from, Vertex to) const {
  std::vector<char> seen(num_vertices(), 0);
  std::vector<Vertex> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (const auto& nb : adjacency_[v]) {
      if (nb.length == 0 && !seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        stack.push_back(nb.vertex);
      }
    }
  }
  return false;
}

void Graph::rebuild_adjacency() {
  for (auto& list : adjacency_) list.clear();
  for (const Arc& a : arcs_) {
    adjacency_[a.tail].push_back({a.head, a.length});
    if (!directed_) adjacency_[a.head].push_back({a.tail, a.length});
  }
}

void Graph::add_arc(Vertex tail, Vertex head, Length length) {
  const std::size_t n = num_vertices();
  if (tail >= n || head >= n) {
    throw Error(ErrorCode::VertexOutOfRange,
                "arc " + std::to_string(tail) + " -> " + std::to_string(head) +
                    " with n = " + std::to_string(n));
  }
  if (tail == head) {
    throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(tail));
  }
  if (length < 0) {
    throw Error(ErrorCode::NegativeLength, "length " + std::to_string(length));
  }
  auto k = key(tail, head);
  auto it = arc_index_.find(k);
  if (it != arc_index_.end() && arcs_[it->second].length <= length) return;

  // For undirected graphs the existing copy of this edge (if any) is positive
  // here, so it cannot be part of the zero-length path being searched for.
  if (length == 0 && zero_path_exists(directed_ ? k.second : k.first,
                                      directed_ ? k.first : k.second)) {
    throw Error(ErrorCode::ZeroLengthCycle,
                "arc " + std::to_string(tail) + " -> " + std::to_string(head));
  }

  if (it != arc_index_.end()) {
    arcs_[it->second].length = length;
    rebuild_adjacency();
    return;
  }
  arc_index_.emplace(k, arcs_.size());
  arcs_.push_back({k.first, k.second, length});
  adjacency_[k.first].push_back({k.second, length});
  if (!directed_) adjacency_[k.second].push_back({k.first, length});
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::MalformedLine, "bad integer '" + std::string(tok) + "'", line_no);
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  std::int64_t expected_arcs = 0;
  std::int64_t seen_arcs = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;

    if (tok[0] == "p") {
      if (g) throw Error(ErrorCode::MalformedLine, "duplicate header", line_no);
      if (tok.size() != 4 || (tok[1] != "directed" && tok[1] != "undirected")) {
        throw Error(ErrorCode::MalformedLine, "expected 'p <directed|undirected> <n> <m>'", line_no);
      }
      std::int64_t n = parse_int(tok[2], line_no);
      expected_arcs = parse_int(tok[3], line_no);
      if (n < 0 || expected_arcs < 0) {
        throw Error(ErrorCode::MalformedLine, "negative count", line_no);
      }
      g.emplace(tok[1] == "directed", static_cast<std::size_t>(n));
    } else if (tok[0] == "a") {
      if (!g) throw Error(ErrorCode::MalformedLine, "arc before header", line_no);
      if (tok.size() != 4) {
        throw Error(ErrorCode::MalformedLine, "expected 'a <tail> <head> <length>'", line_no);
      }
      std::int64_t tail = parse_int(tok[1], line_no);
      std::int64_t head = parse_int(tok[2], line_no);
      std::int64_t length = parse_int(tok[3], line_no);
      const auto n = static_cast<std::int64_t>(g->num_vertices());
      if (tail < 0 || head < 0 || tail >= n || head >= n) {
        throw Error(ErrorCode::VertexOutOfRange, "vertex id out of range", line_no);
      }
      try {
        g->add_arc(static_cast<Vertex>(tail), static_cast<Vertex>(head), length);
      } catch (const Error& e) {
        throw Error(e.code(), "", line_no);
      }
      ++seen_arcs;
    } else {
      throw Error(ErrorCode::MalformedLine, "unknown line type '" + std::string(tok[0]) + "'",
                  line_no);
    }
  }
  if (!g) throw Error(ErrorCode::MalformedLine, "missing 'p' header", line_no);
  if (seen_arcs != expected_arcs) {
    throw Error(ErrorCode::MalformedLine,
                "header announces " + std::to_string(expected_arcs) + " arcs, found " +
                    std::to_string(seen_arcs),
                line_no);
  }
  return std::move(*g);
}

std::string serialize_graph(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "p " << (g.directed() ? "directed" : "undirected") << ' ' << g.num_vertices() << ' '
      << g.num_arcs() << '\n';
  for (const Arc& a : g.arcs()) out << "a " << a.tail << ' ' << a.head << ' ' << a.length << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

DistMatrix::DistMatrix(bool directed, std::size_t n)
    : directed_(directed), n_(n), dist_(n * n) {}

void DistMatrix::set(Vertex from, Vertex to, Distance d) {
  dist_[from * n_ + to] = d;
  if (d.is_finite()) diameter_ = std::max(diameter_, d.value());
}

VertexPair DistMatrix::canonical(Vertex u, Vertex w) const {
  if (!directed_ && w < u) std::swap(u, w);
  return {u, w};
}

DistMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DistMatrix d(g.directed(), n);
  using Item = std::pair<Length, Vertex>;
  std::vector<Distance> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), Distance::infinity());
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = Distance(0);
    heap.push({0, s});
    while (!heap.empty()) {
      auto [du, u] = heap.top();
      heap.pop();
      if (du != dist[u].value()) continue;
      for (const auto& nb : g.neighbors(u)) {
        Distance cand(du + nb.length);
        if (cand < dist[nb.vertex]) {
          dist[nb.vertex] = cand;
          heap.push({cand.value(), nb.vertex});
        }
      }
    }
    for (Vertex t = 0; t < n; ++t) d.set(s, t, dist[t]);
  }
  return d;
}

bool on_shortest_path(const DistMatrix& d, Vertex u, Vertex w, Vertex v) {
  Distance uv = d.at(u, v);
  Distance vw = d.at(v, w);
  if (!uv.is_finite() || !vw.is_finite()) return false;
  return uv + vw == d.at(u, w);
}

std::vector<Vertex> shortest_path_vertices(const DistMatrix& d, Vertex u, Vertex w) {
  if (!d.reachable(u, w)) {
    throw Error(ErrorCode::UnreachablePair,
                std::to_string(w) + " is not reachable from " + std::to_string(u));
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    if (on_shortest_path(d, u, w, v)) out.push_back(v);
  }
  return out;
}

Graph undirected_version(const Graph& g) {
  Graph out(false, g.num_vertices());
  for (const Arc& a : g.arcs()) out.add_arc(a.tail, a.head, a.length);
  return out;
}

}  // namespace hublab
