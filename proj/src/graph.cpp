#include "mxp/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace mxp {

  ////////////////////////////////////////////////////////////////////////
  // LabeledGraph
  ////////////////////////////////////////////////////////////////////////

  void LabeledGraph::add_edge(Vertex u, LetterCode l, Vertex v) {
    if (u >= num_vertices_ || v >= num_vertices_ || l >= alphabet_.size()) {
      throw InputError("edge refers to an unknown vertex or letter");
    }
    if (alphabet_.is_positive(l)) {
      edges_.push_back({u, l, v});
    } else {
      edges_.push_back({v, alphabet_.inverse(l), u});
    }
  }

  void LabeledGraph::set_roots(Vertex initial, Vertex terminal) {
    if (initial >= num_vertices_ || terminal >= num_vertices_) {
      throw InputError("root is not a vertex of the graph");
    }
    initial_  = initial;
    terminal_ = terminal;
  }

  ////////////////////////////////////////////////////////////////////////
  // Automaton
  ////////////////////////////////////////////////////////////////////////

  Automaton Automaton::from_edges(Alphabet              alphabet,
                                  std::size_t           num_vertices,
                                  std::span<Edge const> edges,
                                  Vertex                initial,
                                  Vertex                terminal) {
    if (num_vertices == 0) {
      throw InputError("automaton has no vertices");
    }
    if (initial >= num_vertices || terminal >= num_vertices) {
      throw InputError("root is not a vertex of the automaton");
    }
    Automaton a(alphabet, num_vertices);
    a.initial_  = initial;
    a.terminal_ = terminal;
    auto L      = alphabet.size();
    auto set    = [&](Vertex u, LetterCode l, Vertex v) {
      auto& s = a.table_[static_cast<std::size_t>(u) * L + l];
      if (s != kNoVertex && s != v) {
        throw InputError("determinism violated at vertex "
                         + std::to_string(u));
      }
      s = v;
    };
    for (auto const& e : edges) {
      if (e.source >= num_vertices || e.target >= num_vertices) {
        throw InputError("edge refers to an unknown vertex");
      }
      if (e.label >= L) {
        throw InputError("edge has an unknown label");
      }
      set(e.source, e.label, e.target);
      set(e.target, alphabet.inverse(e.label), e.source);
    }
    if (canonical_order(a).size() != num_vertices) {
      throw InputError("automaton is not connected");
    }
    return a;
  }

  std::vector<Edge> Automaton::positive_edges() const {
    std::vector<Edge> result;
    for (Vertex v = 0; v < num_vertices_; ++v) {
      for (LetterCode l = 0; l < alphabet_.size(); ++l) {
        if (!alphabet_.is_positive(l)) {
          continue;
        }
        Vertex t = target(v, l);
        if (t == kNoVertex || (alphabet_.is_cell(l) && t < v)) {
          continue;
        }
        result.push_back({v, l, t});
      }
    }
    return result;
  }

  std::size_t Automaton::count_edges(LetterCode l) const {
    auto edges = positive_edges();
    return std::count_if(edges.begin(), edges.end(), [l](Edge const& e) {
      return e.label == l;
    });
  }

  std::size_t Automaton::count_cell_loops() const {
    std::size_t result = 0;
    for (Vertex v = 0; v < num_vertices_; ++v) {
      for (LetterCode l = 2 * alphabet_.num_x; l < alphabet_.size(); ++l) {
        result += target(v, l) == v;
      }
    }
    return result;
  }

  Automaton Automaton::rerooted(Vertex initial, Vertex terminal) const {
    if (initial >= num_vertices_ || terminal >= num_vertices_) {
      throw InputError("root is not a vertex of the automaton");
    }
    Automaton result = *this;
    result.initial_  = initial;
    result.terminal_ = terminal;
    return result;
  }

  Automaton Automaton::relabeled(std::span<Vertex const> perm) const {
    Automaton result(alphabet_, num_vertices_);
    auto      L = alphabet_.size();
    for (Vertex v = 0; v < num_vertices_; ++v) {
      for (LetterCode l = 0; l < L; ++l) {
        Vertex t = target(v, l);
        result.table_[static_cast<std::size_t>(perm[v]) * L + l]
            = t == kNoVertex ? kNoVertex : perm[t];
      }
    }
    result.initial_  = perm[initial_];
    result.terminal_ = perm[terminal_];
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // FoldingGraph
  ////////////////////////////////////////////////////////////////////////

  FoldingGraph::FoldingGraph(Alphabet alphabet) : alphabet_(alphabet) {}

  Vertex FoldingGraph::add_vertex() {
    auto v = static_cast<Vertex>(parent_.size());
    parent_.push_back(v);
    size_.push_back(1);
    out_.resize(out_.size() + alphabet_.size(), kNoVertex);
    return v;
  }

  Vertex FoldingGraph::find(Vertex v) const {
    Vertex root = v;
    while (parent_[root] != root) {
      root = parent_[root];
    }
    while (parent_[v] != root) {
      Vertex next = parent_[v];
      parent_[v]  = root;
      v           = next;
    }
    return root;
  }

  Vertex FoldingGraph::target(Vertex v, LetterCode l) const {
    Vertex t = out_[static_cast<std::size_t>(find(v)) * alphabet_.size() + l];
    return t == kNoVertex ? kNoVertex : find(t);
  }

  // u and v are representatives.
  void FoldingGraph::set_half(Vertex u, LetterCode l, Vertex v) {
    Vertex& s = slot(u, l);
    if (s == kNoVertex) {
      s = v;
      return;
    }
    Vertex current = find(s);
    if (current != v) {
      pending_.emplace_back(current, v);
    }
  }

  void FoldingGraph::add_edge(Vertex u, LetterCode l, Vertex v) {
    u = find(u);
    v = find(v);
    set_half(u, l, v);
    set_half(v, alphabet_.inverse(l), u);
    touched_.push_back(u);
    touched_.push_back(v);
  }

  void FoldingGraph::merge(Vertex u, Vertex v) {
    pending_.emplace_back(u, v);
  }

  bool FoldingGraph::unite(Vertex u, Vertex v) {
    u = find(u);
    v = find(v);
    if (u == v) {
      return false;
    }
    if (size_[u] < size_[v]) {
      std::swap(u, v);
    }
    parent_[v] = u;
    size_[u] += size_[v];
    for (LetterCode l = 0; l < alphabet_.size(); ++l) {
      Vertex t = slot(v, l);
      if (t != kNoVertex) {
        set_half(u, l, find(t));
      }
    }
    touched_.push_back(u);
    return true;
  }

  std::size_t FoldingGraph::fold(std::size_t max_unions) {
    std::size_t unions = 0;
    while (!pending_.empty() && unions < max_unions) {
      std::size_t i = pending_.size() - 1;
      if (rng_ != nullptr) {
        i = std::uniform_int_distribution<std::size_t>(0, i)(*rng_);
        std::swap(pending_[i], pending_.back());
      }
      auto [u, v] = pending_.back();
      pending_.pop_back();
      unions += unite(u, v);
    }
    return unions;
  }

  std::vector<Vertex> FoldingGraph::take_touched() {
    std::vector<Vertex> result;
    result.swap(touched_);
    return result;
  }

  Automaton FoldingGraph::to_automaton(Vertex initial, Vertex terminal) const {
    auto                L     = alphabet_.size();
    Vertex              start = find(initial);
    std::vector<Vertex> number(parent_.size(), kNoVertex);
    std::vector<Vertex> order{start};
    number[start] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (LetterCode l = 0; l < L; ++l) {
        Vertex t = target(order[i], l);
        if (t != kNoVertex && number[t] == kNoVertex) {
          number[t] = static_cast<Vertex>(order.size());
          order.push_back(t);
        }
      }
    }
    Automaton result(alphabet_, order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (LetterCode l = 0; l < L; ++l) {
        Vertex t = target(order[i], l);
        if (t != kNoVertex) {
          result.table_[i * L + l] = number[t];
        }
      }
    }
    result.initial_  = 0;
    result.terminal_ = number[find(terminal)];
    if (result.terminal_ == kNoVertex) {
      throw InputError("terminal root is not connected to the initial root");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Folding and queries
  ////////////////////////////////////////////////////////////////////////

  namespace {
    FoldingGraph load(LabeledGraph const& g, std::span<Edge const> edges) {
      FoldingGraph fg(g.alphabet());
      for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        fg.add_vertex();
      }
      for (auto const& e : edges) {
        fg.add_edge(e.source, e.label, e.target);
      }
      return fg;
    }
  }  // namespace

  Automaton fold(LabeledGraph const& g) {
    auto fg = load(g, g.edges());
    fg.fold();
    return fg.to_automaton(g.initial(), g.terminal());
  }

  Automaton fold(LabeledGraph const& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto            edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    auto fg = load(g, edges);
    fg.shuffle_with(&rng);
    fg.fold();
    return fg.to_automaton(g.initial(), g.terminal());
  }

  std::size_t count_folds(LabeledGraph const& g) {
    auto fg = load(g, g.edges());
    return fg.fold();
  }

  std::optional<Vertex> act(Automaton const&        a,
                            Vertex                  v,
                            std::span<Letter const> w) {
    auto alphabet = a.alphabet();
    for (Letter l : w) {
      auto c = alphabet.code(l);
      if (c >= alphabet.size()) {
        return std::nullopt;
      }
      v = a.target(v, c);
      if (v == kNoVertex) {
        return std::nullopt;
      }
    }
    return v;
  }

  bool member(Automaton const& a, std::span<Letter const> w) {
    auto end = act(a, a.initial(), w);
    return end && *end == a.terminal();
  }

  std::vector<Vertex> canonical_order(Automaton const& a) {
    std::vector<bool>   seen(a.num_vertices(), false);
    std::vector<Vertex> order{a.initial()};
    seen[a.initial()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (LetterCode l = 0; l < a.alphabet().size(); ++l) {
        Vertex t = a.target(order[i], l);
        if (t != kNoVertex && !seen[t]) {
          seen[t] = true;
          order.push_back(t);
        }
      }
    }
    return order;
  }

  CanonicalCode canonical_code(Automaton const& a) {
    CanonicalCode code;
    auto          put = [&code](std::uint32_t x) {
      for (int i = 0; i < 4; ++i) {
        code.bytes.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
      }
    };
    auto                order = canonical_order(a);
    std::vector<Vertex> number(a.num_vertices(), kNoVertex);
    for (std::size_t i = 0; i < order.size(); ++i) {
      number[order[i]] = static_cast<Vertex>(i);
    }
    put(a.alphabet().num_x);
    put(a.alphabet().num_p);
    put(static_cast<std::uint32_t>(a.num_vertices()));
    put(static_cast<std::uint32_t>(order.size()));
    for (Vertex v : order) {
      for (LetterCode l = 0; l < a.alphabet().size(); ++l) {
        Vertex t = a.target(v, l);
        put(t == kNoVertex ? kNoVertex : number[t]);
      }
    }
    put(number[a.terminal()]);
    return code;
  }

  bool iso_rooted(Automaton const& a, Automaton const& b) {
    return canonical_code(a) == canonical_code(b);
  }

  std::optional<std::vector<Vertex>> iso_unrooted(Automaton const& a,
                                                  Automaton const& b) {
    if (a.alphabet() != b.alphabet() || a.num_vertices() != b.num_vertices()) {
      return std::nullopt;
    }
    auto code = canonical_code(a.rerooted(a.initial(), a.initial()));
    for (Vertex u = 0; u < b.num_vertices(); ++u) {
      if (canonical_code(b.rerooted(u, u)) == code) {
        return graph_morphism(a, b, a.initial(), u);
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<Vertex>> graph_morphism(Automaton const& a,
                                                    Automaton const& b,
                                                    Vertex           from,
                                                    Vertex           to) {
    if (a.alphabet() != b.alphabet() || from >= a.num_vertices()
        || to >= b.num_vertices()) {
      return std::nullopt;
    }
    std::vector<Vertex> map(a.num_vertices(), kNoVertex);
    std::deque<Vertex>  queue{from};
    map[from] = to;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (LetterCode l = 0; l < a.alphabet().size(); ++l) {
        Vertex t = a.target(v, l);
        if (t == kNoVertex) {
          continue;
        }
        Vertex image = b.target(map[v], l);
        if (image == kNoVertex) {
          return std::nullopt;
        }
        if (map[t] == kNoVertex) {
          map[t] = image;
          queue.push_back(t);
        } else if (map[t] != image) {
          return std::nullopt;
        }
      }
    }
    return map;
  }

  Word shortest_path_label(Automaton const& a, Vertex v) {
    std::vector<std::pair<Vertex, LetterCode>> parent(
        a.num_vertices(), {kNoVertex, 0});
    std::vector<bool>  seen(a.num_vertices(), false);
    std::deque<Vertex> queue{a.initial()};
    seen[a.initial()] = true;
    while (!queue.empty() && !seen[v]) {
      Vertex u = queue.front();
      queue.pop_front();
      for (LetterCode l = 0; l < a.alphabet().size(); ++l) {
        Vertex t = a.target(u, l);
        if (t != kNoVertex && !seen[t]) {
          seen[t]   = true;
          parent[t] = {u, l};
          queue.push_back(t);
        }
      }
    }
    Word result;
    for (Vertex u = v; u != a.initial(); u = parent[u].first) {
      result.push_back(a.alphabet().letter(parent[u].second));
    }
    std::reverse(result.begin(), result.end());
    return result;
  }

}  // namespace mxp
