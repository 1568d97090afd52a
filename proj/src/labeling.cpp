#include "hublab/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "hublab/error.hpp"

namespace hublab {

Labeling::Labeling(bool directed, std::size_t n)
    : directed_(directed), forward_(n), backward_(directed ? n : 0) {}

const Label& Labeling::label(Side side, Vertex v) const {
  return (directed_ && side == Side::Backward) ? backward_[v] : forward_[v];
}

Label& Labeling::mutable_label(Side side, Vertex v) {
  return (directed_ && side == Side::Backward) ? backward_[v] : forward_[v];
}

bool Labeling::add_hub(Side side, Vertex v, Vertex hub, Length dist) {
  Label& list = mutable_label(side, v);
  auto it = std::lower_bound(list.begin(), list.end(), hub,
                             [](const HubEntry& e, Vertex h) { return e.hub < h; });
  if (it != list.end() && it->hub == hub) return false;
  list.insert(it, HubEntry{hub, dist});
  return true;
}

bool Labeling::remove_hub(Side side, Vertex v, Vertex hub) {
  Label& list = mutable_label(side, v);
  auto it = std::lower_bound(list.begin(), list.end(), hub,
                             [](const HubEntry& e, Vertex h) { return e.hub < h; });
  if (it == list.end() || it->hub != hub) return false;
  list.erase(it);
  return true;
}

bool Labeling::contains(Side side, Vertex v, Vertex hub) const {
  const Label& list = label(side, v);
  return std::binary_search(list.begin(), list.end(), HubEntry{hub, 0},
                            [](const HubEntry& a, const HubEntry& b) { return a.hub < b.hub; });
}

std::size_t Labeling::size() const {
  std::size_t total = 0;
  for (const auto& l : forward_) total += l.size();
  for (const auto& l : backward_) total += l.size();
  return total;
}

Order::Order(std::vector<Vertex> sequence) : sequence_(std::move(sequence)) {
  const std::size_t n = sequence_.size();
  rank_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = sequence_[i];
    if (v >= n || rank_[v] != n) {
      throw Error(ErrorCode::InvalidOrder, "order is not a permutation of 0.." +
                                               std::to_string(n == 0 ? 0 : n - 1));
    }
    rank_[v] = i;
  }
}

Order Order::identity(std::size_t n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  return Order(std::move(seq));
}

Order parse_order(std::string_view text, std::size_t n) {
  std::vector<Vertex> seq;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok.front() == '#') continue;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
      throw Error(ErrorCode::MalformedLine, "bad vertex id '" + tok + "'", line_no);
    }
    seq.push_back(static_cast<Vertex>(v));
  }
  if (seq.size() != n) {
    throw Error(ErrorCode::InvalidOrder, "order lists " + std::to_string(seq.size()) +
                                             " vertices, graph has " + std::to_string(n));
  }
  return Order(std::move(seq));
}

std::string serialize_order(const Order& order) {
  std::ostringstream out;
  for (Vertex v : order.sequence()) out << v << '\n';
  return out.str();
}

Distance query(const Labeling& l, Vertex s, Vertex t) {
  const Label& fwd = l.forward(s);
  const Label& bwd = l.backward(t);
  Distance best = Distance::infinity();
  auto i = fwd.begin();
  auto j = bwd.begin();
  while (i != fwd.end() && j != bwd.end()) {
    if (i->hub < j->hub) {
      ++i;
    } else if (j->hub < i->hub) {
      ++j;
    } else {
      best = std::min(best, Distance(i->dist + j->dist));
      ++i;
      ++j;
    }
  }
  return best;
}

std::size_t labeling_size(const Labeling& l) { return l.size(); }

namespace {

bool entry_correct(const DistMatrix& d, Side side, Vertex v, const HubEntry& e) {
  Distance truth = side == Side::Forward ? d.at(v, e.hub) : d.at(e.hub, v);
  return truth.is_finite() && truth.value() == e.dist;
}

// True iff some hub common to L_f(s) and L_b(t) lies on a shortest s-t path
// and both stored distances are exact.
bool pair_covered(const Labeling& l, const DistMatrix& d, Vertex s, Vertex t) {
  const Label& fwd = l.forward(s);
  const Label& bwd = l.backward(t);
  const Distance target = d.at(s, t);
  auto i = fwd.begin();
  auto j = bwd.begin();
  while (i != fwd.end() && j != bwd.end()) {
    if (i->hub < j->hub) {
      ++i;
    } else if (j->hub < i->hub) {
      ++j;
    } else {
      if (entry_correct(d, Side::Forward, s, *i) && entry_correct(d, Side::Backward, t, *j) &&
          Distance(i->dist + j->dist) == target) {
        return true;
      }
      ++i;
      ++j;
    }
  }
  return false;
}

void check_entries(const Labeling& l, const DistMatrix& d, std::vector<VertexPair>& out) {
  const std::size_t n = l.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    for (const HubEntry& e : l.forward(v)) {
      if (e.hub >= n || !entry_correct(d, Side::Forward, v, e)) {
        out.push_back(d.canonical(v, e.hub));
      }
    }
    if (!l.directed()) continue;
    for (const HubEntry& e : l.backward(v)) {
      if (e.hub >= n || !entry_correct(d, Side::Backward, v, e)) out.push_back({e.hub, v});
    }
  }
}

CoverReport finish(std::vector<VertexPair> violations) {
  std::sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
  CoverReport report;
  report.valid = violations.empty();
  report.violations = std::move(violations);
  return report;
}

void require_same_size(const Labeling& l, const DistMatrix& d) {
  if (l.num_vertices() != d.num_vertices() || l.directed() != d.directed()) {
    throw Error(ErrorCode::Mismatch, "labeling and graph disagree on vertex count or direction");
  }
}

}  // namespace

CoverReport verify_cover(const Labeling& l, const DistMatrix& d) {
  require_same_size(l, d);
  std::vector<VertexPair> violations;
  check_entries(l, d, violations);
  const std::size_t n = d.num_vertices();
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = d.directed() ? 0 : s; t < n; ++t) {
      if (d.reachable(s, t) && !pair_covered(l, d, s, t)) violations.push_back({s, t});
    }
  }
  return finish(std::move(violations));
}

CoverReport verify_cover(const Labeling& l, const DistMatrix& d,
                         std::span<const VertexPair> pairs) {
  require_same_size(l, d);
  std::vector<VertexPair> violations;
  check_entries(l, d, violations);
  for (const VertexPair& p : pairs) {
    if (d.reachable(p.first, p.second) && !pair_covered(l, d, p.first, p.second)) {
      violations.push_back(d.canonical(p.first, p.second));
    }
  }
  return finish(std::move(violations));
}

Labeling canonical_hhl(const DistMatrix& d, const Order& order) {
  const std::size_t n = d.num_vertices();
  if (order.size() != n) throw Error(ErrorCode::InvalidOrder, "order size differs from n");
  Labeling l(d.directed(), n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = d.directed() ? 0 : x; y < n; ++y) {
      if (!d.reachable(x, y)) continue;
      Vertex top = x;
      for (Vertex v : order.sequence()) {
        if (on_shortest_path(d, x, y, v)) {
          top = v;
          break;
        }
      }
      if (top == y) l.add_hub(Side::Forward, x, y, d.at(x, y).value());
      if (top == x) l.add_hub(Side::Backward, y, x, d.at(x, y).value());
    }
  }
  return l;
}

bool respects_order(const Labeling& l, const Order& order) {
  for (Vertex v = 0; v < l.num_vertices(); ++v) {
    for (Side side : {Side::Forward, Side::Backward}) {
      for (const HubEntry& e : l.label(side, v)) {
        if (order.rank(e.hub) > order.rank(v)) return false;
      }
    }
  }
  return true;
}

bool is_sublabeling(const Labeling& a, const Labeling& b) {
  if (a.directed() != b.directed() || a.num_vertices() != b.num_vertices()) return false;
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    for (Side side : {Side::Forward, Side::Backward}) {
      const Label& la = a.label(side, v);
      const Label& lb = b.label(side, v);
      if (!std::includes(lb.begin(), lb.end(), la.begin(), la.end())) return false;
    }
  }
  return true;
}

std::string serialize_labeling(const Labeling& l) {
  std::ostringstream out;
  auto emit = [&](char tag, Vertex v, const Label& list) {
    out << tag << ' ' << v;
    for (const HubEntry& e : list) out << ' ' << e.hub << ':' << e.dist;
    out << '\n';
  };
  for (Vertex v = 0; v < l.num_vertices(); ++v) {
    if (l.directed()) {
      emit('f', v, l.forward(v));
      emit('b', v, l.backward(v));
    } else {
      emit('l', v, l.forward(v));
    }
  }
  return out.str();
}

Labeling parse_labeling(std::string_view text) {
  struct Line {
    char tag;
    Vertex v;
    Label hubs;
    std::size_t line_no;
  };
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<bool> directed;
  std::size_t n = 0;

  auto parse_num = [&](std::string_view tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
      throw Error(ErrorCode::MalformedLine, "bad number '" + std::string(tok) + "'", line_no);
    }
    return value;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string tag;
    if (!(ls >> tag) || tag.front() == '#') continue;
    if (tag != "l" && tag != "f" && tag != "b") {
      throw Error(ErrorCode::MalformedLine, "unknown label line '" + tag + "'", line_no);
    }
    const bool is_directed = tag != "l";
    if (directed && *directed != is_directed) {
      throw Error(ErrorCode::MalformedLine, "mixed directed and undirected label lines", line_no);
    }
    directed = is_directed;
    std::string tok;
    if (!(ls >> tok)) throw Error(ErrorCode::MalformedLine, "missing vertex id", line_no);
    Line line{tag[0], static_cast<Vertex>(parse_num(tok)), {}, line_no};
    while (ls >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) {
        throw Error(ErrorCode::MalformedLine, "expected hub:dist, got '" + tok + "'", line_no);
      }
      std::string_view sv(tok);
      line.hubs.push_back({static_cast<Vertex>(parse_num(sv.substr(0, colon))),
                           parse_num(sv.substr(colon + 1))});
    }
    n = std::max<std::size_t>(n, line.v + 1);
    lines.push_back(std::move(line));
  }

  Labeling l(directed.value_or(false), n);
  std::vector<int> seen_f(n, 0), seen_b(n, 0);
  for (const Line& line : lines) {
    const Side side = line.tag == 'b' ? Side::Backward : Side::Forward;
    auto& seen = side == Side::Backward ? seen_b : seen_f;
    if (seen[line.v]++) {
      throw Error(ErrorCode::MalformedLine, "duplicate label line for vertex " +
                                                std::to_string(line.v), line.line_no);
    }
    for (const HubEntry& e : line.hubs) {
      if (e.hub >= n) {
        throw Error(ErrorCode::VertexOutOfRange, "hub " + std::to_string(e.hub), line.line_no);
      }
      if (!l.add_hub(side, line.v, e.hub, e.dist)) {
        throw Error(ErrorCode::MalformedLine, "duplicate hub " + std::to_string(e.hub),
                    line.line_no);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen_f[v] || (l.directed() && !seen_b[v])) {
      throw Error(ErrorCode::MalformedLine, "missing label line for vertex " + std::to_string(v));
    }
  }
  return l;
}

Labeling read_labeling_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_labeling(buf.str());
}

}  // namespace hublab
