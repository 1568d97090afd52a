#include "hublab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>

#include "hublab/error.hpp"
#include "hublab/highway.hpp"
#include "highway_internal.hpp"

namespace hublab {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

void require_small(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw Error(ErrorCode::TooLarge, std::string(what) + ": " + std::to_string(n) +
                                         " exceeds the limit of " + std::to_string(limit));
  }
}

Mask path_mask(const DistMatrix& d, Vertex u, Vertex w) {
  Mask m = 0;
  for (Vertex v : shortest_path_vertices(d, u, w)) m |= bit(v);
  return m;
}

struct PairMask {
  Vertex first;
  Vertex second;
  Mask path;
};

std::vector<PairMask> pair_masks(const DistMatrix& d, const std::vector<VertexPair>& pairs) {
  std::vector<PairMask> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({p.first, p.second, path_mask(d, p.first, p.second)});
  return out;
}

// before[v] = vertices strictly more important than v.
std::vector<Mask> before_masks(const std::vector<Vertex>& sequence) {
  std::vector<Mask> before(sequence.size(), 0);
  Mask prefix = 0;
  for (Vertex v : sequence) {
    before[v] = prefix;
    prefix |= bit(v);
  }
  return before;
}

std::size_t count_canonical(const std::vector<PairMask>& pairs, const std::vector<Mask>& before,
                            bool directed) {
  std::size_t total = 0;
  for (const auto& p : pairs) {
    if (p.first == p.second) {
      total += directed ? 2 : 1;
      continue;
    }
    total += (p.path & before[p.second]) == 0 ? 1 : 0;
    total += (p.path & before[p.first]) == 0 ? 1 : 0;
  }
  return total;
}

}  // namespace

std::size_t canonical_size(const DistMatrix& d, const Order& order) {
  require_small(d.num_vertices(), 64, "canonical_size");
  const auto pairs = pair_masks(d, initial_uncovered(d).pairs());
  return count_canonical(pairs, before_masks(order.sequence()), d.directed());
}

OptimalHhl optimal_hhl_bruteforce(const DistMatrix& d, std::size_t limit_n) {
  const std::size_t n = d.num_vertices();
  require_small(n, std::min<std::size_t>(limit_n, 64), "optimal_hhl_bruteforce");
  const auto pairs = pair_masks(d, initial_uncovered(d).pairs());
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  OptimalHhl best;
  bool first = true;
  do {
    const std::size_t size = count_canonical(pairs, before_masks(seq), d.directed());
    if (first || size < best.size) {
      best.size = size;
      best.order = Order(seq);
      first = false;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  if (n == 0) best.order = Order(seq);
  return best;
}

namespace {

class HlSearch {
 public:
  HlSearch(const DistMatrix& d, const UncoveredSet& targets, std::uint64_t budget)
      : d_(d),
        n_(d.num_vertices()),
        directed_(d.directed()),
        pairs_(pair_masks(d, targets.pairs())),
        budget_(budget),
        fwd_(n_, 0),
        bwd_(n_, 0) {}

  OptimalHl run() {
    CohenResult seed = run_cohen_hl(d_, targets_from_pairs(), false);
    best_fwd_.assign(n_, 0);
    best_bwd_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (const auto& e : seed.labeling.forward(v)) best_fwd_[v] |= bit(e.hub);
      for (const auto& e : seed.labeling.backward(v)) best_bwd_[v] |= bit(e.hub);
    }
    best_ = seed.labeling.size();

    const std::size_t root_bound = bound();
    search(0);

    OptimalHl out;
    out.complete = !aborted_;
    out.upper = best_;
    out.lower = aborted_ ? std::min(root_bound, best_) : best_;
    out.nodes = nodes_;
    out.labeling = Labeling(directed_, n_);
    for (Vertex v = 0; v < n_; ++v) {
      for (Mask m = best_fwd_[v]; m; m &= m - 1) {
        const Vertex h = static_cast<Vertex>(std::countr_zero(m));
        out.labeling.add_hub(Side::Forward, v, h, d_.at(v, h).value());
      }
      if (!directed_) continue;
      for (Mask m = best_bwd_[v]; m; m &= m - 1) {
        const Vertex h = static_cast<Vertex>(std::countr_zero(m));
        out.labeling.add_hub(Side::Backward, v, h, d_.at(h, v).value());
      }
    }
    return out;
  }

 private:
  UncoveredSet targets_from_pairs() const {
    UncoveredSet u(directed_, n_);
    for (const auto& p : pairs_) u.insert(p.first, p.second);
    return u;
  }

  Mask& back(Vertex v) { return directed_ ? bwd_[v] : fwd_[v]; }

  bool covered(const PairMask& p) const {
    const Mask b = directed_ ? bwd_[p.second] : fwd_[p.second];
    return (fwd_[p.first] & b & p.path) != 0;
  }

  std::size_t option_cost(const PairMask& p, Vertex v) const {
    const Mask b = directed_ ? bwd_[p.second] : fwd_[p.second];
    if (!directed_ && p.first == p.second) return (fwd_[p.first] & bit(v)) ? 0 : 1;
    return ((fwd_[p.first] & bit(v)) ? 0 : 1) + ((b & bit(v)) ? 0 : 1);
  }

  std::size_t min_cost(const PairMask& p) const {
    std::size_t best = 2;
    for (Mask m = p.path; m; m &= m - 1) {
      best = std::min(best, option_cost(p, static_cast<Vertex>(std::countr_zero(m))));
    }
    return best;
  }

  // Uncovered pairs with pairwise disjoint label owners need disjoint new
  // entries, so their cheapest completions add up.
  std::size_t bound() const {
    std::vector<std::pair<std::size_t, std::size_t>> cand;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (!covered(pairs_[i])) cand.push_back({min_cost(pairs_[i]), i});
    }
    std::stable_sort(cand.begin(), cand.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<char> used_f(n_, 0), used_b(n_, 0);
    std::size_t total = 0;
    for (const auto& [cost, i] : cand) {
      const auto& p = pairs_[i];
      auto& second_used = directed_ ? used_b : used_f;
      if (used_f[p.first] || second_used[p.second]) continue;
      used_f[p.first] = 1;
      second_used[p.second] = 1;
      total += cost;
    }
    return total;
  }

  std::string key() const {
    std::string k(reinterpret_cast<const char*>(fwd_.data()), n_ * sizeof(Mask));
    if (directed_) k.append(reinterpret_cast<const char*>(bwd_.data()), n_ * sizeof(Mask));
    return k;
  }

  void search(std::size_t cost) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    const PairMask* pick = nullptr;
    std::size_t pick_options = 0;
    for (const auto& p : pairs_) {
      if (covered(p)) continue;
      const auto options = static_cast<std::size_t>(std::popcount(p.path));
      if (!pick || options < pick_options) {
        pick = &p;
        pick_options = options;
      }
    }
    if (!pick) {
      if (cost < best_) {
        best_ = cost;
        best_fwd_ = fwd_;
        best_bwd_ = bwd_;
      }
      return;
    }
    if (cost + bound() >= best_) return;
    if (seen_.size() < kSeenCap && !seen_.insert(key()).second) return;

    std::vector<std::pair<std::size_t, Vertex>> options;
    for (Mask m = pick->path; m; m &= m - 1) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(m));
      options.push_back({option_cost(*pick, v), v});
    }
    std::sort(options.begin(), options.end());
    for (const auto& [extra, v] : options) {
      const Mask old_f = fwd_[pick->first];
      fwd_[pick->first] |= bit(v);
      const Mask old_b = back(pick->second);
      back(pick->second) |= bit(v);
      search(cost + extra);
      back(pick->second) = old_b;
      fwd_[pick->first] = old_f;
      if (aborted_) return;
    }
  }

  static constexpr std::size_t kSeenCap = 2'000'000;

  const DistMatrix& d_;
  std::size_t n_;
  bool directed_;
  std::vector<PairMask> pairs_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Mask> fwd_, bwd_;
  std::vector<Mask> best_fwd_, best_bwd_;
  std::size_t best_ = 0;
  std::unordered_set<std::string> seen_;
};

}  // namespace

OptimalHl optimal_hl_bnb(const DistMatrix& d, const UncoveredSet& targets, std::uint64_t budget) {
  require_small(d.num_vertices(), 64, "optimal_hl_bnb");
  if (targets.num_vertices() != d.num_vertices() || targets.directed() != d.directed()) {
    throw Error(ErrorCode::Mismatch, "target pairs do not match the distance table");
  }
  return HlSearch(d, targets, budget).run();
}

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& cover) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : cover) {
    if (v < g.num_vertices()) in[v] = 1;
  }
  return std::all_of(g.arcs().begin(), g.arcs().end(),
                     [&](const Arc& a) { return in[a.tail] || in[a.head]; });
}

namespace {

class VcSearch {
 public:
  explicit VcSearch(const Graph& g) : n_(g.num_vertices()), adj_(n_, 0) {
    for (const Arc& a : g.arcs()) {
      adj_[a.tail] |= bit(a.head);
      adj_[a.head] |= bit(a.tail);
    }
    best_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  Mask run() {
    search(0);
    return best_;
  }

 private:
  void search(Mask cover) {
    const int size = std::popcount(cover);
    if (size >= std::popcount(best_)) return;
    // Greedy matching on uncovered edges: one endpoint of each is needed.
    Mask matched = cover;
    int extra = 0;
    std::optional<Vertex> branch;
    for (Vertex u = 0; u < n_; ++u) {
      if (matched & bit(u)) continue;
      const Mask free = adj_[u] & ~matched;
      if (!free) continue;
      if (!branch) branch = u;
      matched |= bit(u) | bit(static_cast<Vertex>(std::countr_zero(free)));
      ++extra;
    }
    if (!branch) {
      best_ = cover;
      return;
    }
    if (size + extra >= std::popcount(best_)) return;
    const Vertex u = *branch;
    search(cover | bit(u));
    search(cover | (adj_[u] & ~cover));
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  Mask best_;
};

std::vector<Vertex> mask_to_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

}  // namespace

std::vector<Vertex> min_vertex_cover(const Graph& g) {
  if (g.directed()) throw Error(ErrorCode::DirectedInput, "vertex cover needs an undirected graph");
  require_small(g.num_vertices(), 64, "min_vertex_cover");
  if (g.num_arcs() == 0) return {};
  return mask_to_vertices(VcSearch(g).run());
}

namespace {

class HittingSearch {
 public:
  explicit HittingSearch(std::vector<Mask> sets, std::size_t elements)
      : sets_(std::move(sets)), elements_(elements) {}

  Mask run() {
    // Greedy start for the incumbent.
    Mask chosen = 0;
    for (;;) {
      std::vector<std::size_t> score(elements_, 0);
      bool open = false;
      for (Mask s : sets_) {
        if (s & chosen) continue;
        open = true;
        for (Mask m = s; m; m &= m - 1) ++score[std::countr_zero(m)];
      }
      if (!open) break;
      const auto best = std::max_element(score.begin(), score.end()) - score.begin();
      chosen |= Mask{1} << best;
    }
    best_ = chosen;
    search(0);
    return best_;
  }

 private:
  void search(Mask chosen) {
    const int size = std::popcount(chosen);
    if (size >= std::popcount(best_)) return;
    const Mask* pick = nullptr;
    Mask used = 0;
    int disjoint = 0;
    for (const Mask& s : sets_) {
      if (s & chosen) continue;
      if (!pick || std::popcount(s) < std::popcount(*pick)) pick = &s;
      if (!(s & used)) {
        used |= s;
        ++disjoint;
      }
    }
    if (!pick) {
      best_ = chosen;
      return;
    }
    if (size + disjoint >= std::popcount(best_)) return;
    for (Mask m = *pick; m; m &= m - 1) search(chosen | (Mask{1} << std::countr_zero(m)));
  }

  std::vector<Mask> sets_;
  std::size_t elements_;
  Mask best_ = 0;
};

}  // namespace

std::vector<Vertex> min_hitting_set(const std::vector<std::vector<Vertex>>& sets,
                                    std::size_t limit) {
  require_small(sets.size(), limit, "min_hitting_set");
  std::vector<Vertex> elements;
  for (const auto& s : sets) {
    if (s.empty()) throw Error(ErrorCode::InfeasibleParams, "an empty set cannot be hit");
    elements.insert(elements.end(), s.begin(), s.end());
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  require_small(elements.size(), 64, "min_hitting_set elements");

  std::set<Mask> unique;
  for (const auto& s : sets) {
    Mask m = 0;
    for (Vertex v : s) {
      m |= Mask{1} << (std::lower_bound(elements.begin(), elements.end(), v) - elements.begin());
    }
    unique.insert(m);
  }
  // A set containing another one is hit whenever the smaller one is.
  std::vector<Mask> minimal;
  for (Mask m : unique) {
    const bool redundant = std::any_of(unique.begin(), unique.end(), [&](Mask o) {
      return o != m && (o & m) == o;
    });
    if (!redundant) minimal.push_back(m);
  }
  const Mask chosen = HittingSearch(std::move(minimal), elements.size()).run();
  std::vector<Vertex> out;
  for (Vertex i : mask_to_vertices(chosen)) out.push_back(elements[i]);
  return out;
}

HighwayDimension highway_dimension_bruteforce(const Graph& g, std::size_t limit_n) {
  if (g.directed()) {
    throw Error(ErrorCode::DirectedInput, "highway dimension needs an undirected graph");
  }
  const std::size_t n = g.num_vertices();
  require_small(n, limit_n, "highway_dimension_bruteforce");
  const DistMatrix d = all_pairs_distances(g);
  const auto all = detail::enumerate_shortest_paths(g, d, kDefaultPathCap);

  std::set<Rational> breaks;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = 0; w < n; ++w) {
      const Distance x = d.at(u, w);
      if (!x.is_finite() || x.value() == 0) continue;
      breaks.insert(Rational(x.value()));
      breaks.insert(Rational(x.value(), 2));
    }
  }
  std::vector<Rational> candidates;
  Rational prev(0);
  for (const Rational& b : breaks) {
    candidates.push_back((prev + b) / 2);
    candidates.push_back(b);
    prev = b;
  }

  HighwayDimension out;
  for (const Rational& r : candidates) {
    const auto significant = detail::significant_subset(all, r);
    if (significant.empty()) continue;
    for (Vertex v = 0; v < n; ++v) {
      const auto near = neighborhood_S(significant, d, v, r);
      if (near.size() <= out.h) continue;
      std::vector<std::vector<Vertex>> sets;
      sets.reserve(near.size());
      for (const auto& p : near) sets.push_back(p.vertices);
      const std::size_t h = min_hitting_set(sets).size();
      if (h > out.h) {
        out.h = h;
        out.vertex = v;
        out.r = r;
      }
    }
  }
  return out;
}

}  // namespace hublab
