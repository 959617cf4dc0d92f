#include "mxp/complex.hpp"

#include <algorithm>

namespace mxp {

  ////////////////////////////////////////////////////////////////////////
  // TwoComplex
  ////////////////////////////////////////////////////////////////////////

  TwoComplex::TwoComplex(Presentation const&      pres,
                         std::size_t              num_vertices,
                         std::vector<OneCell>     one_cells,
                         std::vector<TwoCell>     two_cells,
                         std::vector<std::string> vertex_names)
      : alphabet_(pres.alphabet()),
        num_vertices_(num_vertices),
        one_cells_(std::move(one_cells)),
        two_cells_(std::move(two_cells)),
        names_(std::move(vertex_names)) {
    if (!names_.empty() && names_.size() != num_vertices_) {
      throw InputError("vertex name list has the wrong length");
    }
    for (auto const& e : one_cells_) {
      if (e.source >= num_vertices_ || e.target >= num_vertices_) {
        throw InputError("1-cell refers to an unknown vertex");
      }
      if (e.x >= alphabet_.num_x) {
        throw InputError("1-cell has an unknown label");
      }
    }
    for (std::size_t i = 0; i < two_cells_.size(); ++i) {
      auto const& cell = two_cells_[i];
      auto        what = "2-cell " + std::to_string(i) + ": ";
      if (cell.label >= alphabet_.num_p) {
        throw InputError(what + "unknown label");
      }
      if (cell.root >= num_vertices_) {
        throw InputError(what + "unknown root vertex");
      }
      auto const& bl = pres.boundary(cell.label);
      if (bl.size() != cell.boundary.size()) {
        throw InputError(what + "boundary walk does not spell "
                         + pres.format(bl));
      }
      Vertex at = cell.root;
      for (std::size_t k = 0; k < bl.size(); ++k) {
        auto step = cell.boundary[k];
        if (step.edge >= one_cells_.size()) {
          throw InputError(what + "boundary walk uses an unknown 1-cell");
        }
        if (step_source(step) != at) {
          throw InputError(what + "boundary walk is not a path");
        }
        if (step_label(step) != alphabet_.code(bl[k])) {
          throw InputError(what + "boundary walk does not spell "
                           + pres.format(bl));
        }
        at = step_target(step);
      }
      if (at != cell.root) {
        throw InputError(what + "boundary walk is not closed at its root");
      }
    }
  }

  std::string TwoComplex::vertex_name(Vertex v) const {
    return names_.empty() ? "v" + std::to_string(v) : names_.at(v);
  }

  Vertex TwoComplex::step_source(WalkStep s) const {
    auto const& e = one_cells_.at(s.edge);
    return s.reversed ? e.target : e.source;
  }

  Vertex TwoComplex::step_target(WalkStep s) const {
    auto const& e = one_cells_.at(s.edge);
    return s.reversed ? e.source : e.target;
  }

  LetterCode TwoComplex::step_label(WalkStep s) const {
    return 2 * one_cells_.at(s.edge).x + (s.reversed ? 1 : 0);
  }

  ////////////////////////////////////////////////////////////////////////
  // Complexes and graphs
  ////////////////////////////////////////////////////////////////////////

  Automaton graph_of_complex(TwoComplex const& c) {
    auto              alphabet = c.alphabet();
    std::vector<Edge> edges;
    for (auto const& e : c.one_cells()) {
      edges.push_back({e.source, 2 * e.x, e.target});
    }
    for (auto const& cell : c.two_cells()) {
      edges.push_back(
          {cell.root, 2 * alphabet.num_x + cell.label, cell.root});
    }
    // from_edges tolerates repeated edges; a complex may not repeat cells.
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("graph of complex: two cells with the same label and ends");
    }
    try {
      return Automaton::from_edges(alphabet, c.num_vertices(), edges, 0, 0);
    } catch (InputError const& e) {
      throw InputError(std::string("graph of complex: ") + e.what());
    }
  }

  namespace {
    // index[v * num_x + x] = the 1-cell labelled x leaving v.
    std::vector<std::uint32_t> one_cell_index(TwoComplex const& c) {
      std::vector<std::uint32_t> index(c.num_vertices() * c.alphabet().num_x,
                                       UINT32_MAX);
      for (std::uint32_t i = 0; i < c.one_cells().size(); ++i) {
        auto const& e = c.one_cells()[i];
        index[e.source * c.alphabet().num_x + e.x] = i;
      }
      return index;
    }

    std::vector<std::uint32_t> two_cell_index(TwoComplex const& c) {
      std::vector<std::uint32_t> index(c.num_vertices() * c.alphabet().num_p,
                                       UINT32_MAX);
      for (std::uint32_t i = 0; i < c.two_cells().size(); ++i) {
        auto const& cell = c.two_cells()[i];
        index[cell.root * c.alphabet().num_p + cell.label] = i;
      }
      return index;
    }
  }  // namespace

  TwoComplex complex_of_automaton(Automaton const& a, Presentation const& pres) {
    auto alphabet = a.alphabet();
    if (alphabet != pres.alphabet()) {
      throw InputError("automaton and presentation have different alphabets");
    }
    std::vector<OneCell> one_cells;
    std::vector<TwoCell> two_cells;
    for (auto const& e : a.positive_edges()) {
      if (!alphabet.is_cell(e.label)) {
        one_cells.push_back({e.source, e.label / 2, e.target});
      }
    }
    auto index = [&](Vertex v, std::uint32_t x) -> std::uint32_t {
      auto it = std::find_if(
          one_cells.begin(), one_cells.end(), [&](OneCell const& e) {
            return e.source == v && e.x == x;
          });
      return static_cast<std::uint32_t>(it - one_cells.begin());
    };
    for (Vertex v = 0; v < a.num_vertices(); ++v) {
      for (std::uint32_t j = 0; j < alphabet.num_p; ++j) {
        Vertex t = a.target(v, 2 * alphabet.num_x + j);
        if (t == kNoVertex) {
          continue;
        }
        if (t != v) {
          throw InputError("automaton is not saturated: cell edge at vertex "
                           + std::to_string(v) + " is not a loop");
        }
        TwoCell cell{j, v, {}};
        Vertex  at = v;
        for (Letter l : pres.boundary(j)) {
          Vertex next = a.target(at, alphabet.code(l));
          if (next == kNoVertex) {
            throw InputError("automaton is not saturated: boundary of "
                             + pres.cells()[j].name + " at vertex "
                             + std::to_string(v) + " is missing");
          }
          if (l.kind == LetterKind::positive) {
            cell.boundary.push_back({index(at, l.index), false});
          } else {
            cell.boundary.push_back({index(next, l.index), true});
          }
          at = next;
        }
        if (at != v) {
          throw InputError("automaton is not saturated: boundary of "
                           + pres.cells()[j].name + " at vertex "
                           + std::to_string(v) + " is not closed");
        }
        two_cells.push_back(std::move(cell));
      }
    }
    return TwoComplex(pres,
                      a.num_vertices(),
                      std::move(one_cells),
                      std::move(two_cells));
  }

  TwoComplex bouquet(Presentation const& pres) {
    auto                 alphabet = pres.alphabet();
    std::vector<OneCell> one_cells;
    for (std::uint32_t x = 0; x < alphabet.num_x; ++x) {
      one_cells.push_back({0, x, 0});
    }
    std::vector<TwoCell> two_cells;
    for (std::uint32_t j = 0; j < alphabet.num_p; ++j) {
      TwoCell cell{j, 0, {}};
      for (Letter l : pres.boundary(j)) {
        cell.boundary.push_back({l.index, l.kind == LetterKind::negative});
      }
      two_cells.push_back(std::move(cell));
    }
    return TwoComplex(pres, 1, std::move(one_cells), std::move(two_cells));
  }

  std::optional<Morphism> immersion(TwoComplex const& c,
                                    TwoComplex const& d,
                                    Vertex            v_c,
                                    Vertex            v_d) {
    if (c.alphabet() != d.alphabet()) {
      return std::nullopt;
    }
    auto map = graph_morphism(graph_of_complex(c), graph_of_complex(d), v_c, v_d);
    if (!map) {
      return std::nullopt;
    }
    Morphism m;
    m.vertex_map    = std::move(*map);
    auto edges_of_d = one_cell_index(d);
    auto cells_of_d = two_cell_index(d);
    for (auto const& e : c.one_cells()) {
      m.edge_map.push_back(
          edges_of_d[m.vertex_map[e.source] * d.alphabet().num_x + e.x]);
    }
    for (auto const& cell : c.two_cells()) {
      m.cell_map.push_back(
          cells_of_d[m.vertex_map[cell.root] * d.alphabet().num_p + cell.label]);
    }
    return m;
  }

  std::optional<Morphism> find_immersion(TwoComplex const& c,
                                         TwoComplex const& d) {
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
      if (auto m = immersion(c, d, 0, v)) {
        return m;
      }
    }
    return std::nullopt;
  }

  bool is_covering(Morphism const& m, TwoComplex const& c, TwoComplex const& d) {
    auto gc = graph_of_complex(c);
    auto gd = graph_of_complex(d);
    for (Vertex u = 0; u < gc.num_vertices(); ++u) {
      for (LetterCode l = 0; l < gc.alphabet().size(); ++l) {
        if (gd.target(m.vertex_map.at(u), l) != kNoVertex
            && gc.target(u, l) == kNoVertex) {
          return false;
        }
      }
    }
    return true;
  }

  Automaton stabilizer(TwoComplex const& c, Vertex v) {
    return graph_of_complex(c).rerooted(v, v);
  }

  bool isomorphic(TwoComplex const& c, TwoComplex const& d) {
    if (c.alphabet() != d.alphabet() || c.num_vertices() != d.num_vertices()
        || c.one_cells().size() != d.one_cells().size()
        || c.two_cells().size() != d.two_cells().size()) {
      return false;
    }
    return iso_unrooted(graph_of_complex(c), graph_of_complex(d)).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Rebasing boundary walks
  ////////////////////////////////////////////////////////////////////////

  Word BoundaryTranslator::translate(std::span<Letter const> w) const {
    Word result;
    auto suffix = invert(prefix_);
    for (Letter l : w) {
      if (l.is_cell() && l.index == cell_) {
        result.insert(result.end(), prefix_.begin(), prefix_.end());
        result.push_back(l);
        result.insert(result.end(), suffix.begin(), suffix.end());
      } else {
        result.push_back(l);
      }
    }
    return result;
  }

  std::vector<Word> BoundaryTranslator::translate(
      std::span<Word const> ws) const {
    std::vector<Word> result;
    for (auto const& w : ws) {
      result.push_back(translate(w));
    }
    return result;
  }

  RebasedPresentation rebase_boundary(Presentation const& pres,
                                      std::uint32_t       cell,
                                      std::size_t         k,
                                      bool                reverse) {
    if (cell >= pres.cells().size()) {
      throw InputError("unknown cell letter");
    }
    auto const& bl = pres.boundary(cell);
    if (k != 0 && k >= bl.size()) {
      throw InputError("rotation amount must be smaller than the boundary");
    }
    Word prefix(bl.begin(), bl.begin() + static_cast<std::ptrdiff_t>(k));
    Word rotated(bl.begin() + static_cast<std::ptrdiff_t>(k), bl.end());
    rotated.insert(rotated.end(), prefix.begin(), prefix.end());
    if (reverse) {
      rotated = invert(rotated);
    }
    return {pres.with_boundary(cell, std::move(rotated)),
            BoundaryTranslator(cell, std::move(prefix))};
  }

}  // namespace mxp
