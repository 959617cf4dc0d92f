#include "mxp/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mxp::io {

  using json = nlohmann::ordered_json;

  namespace {

    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r\n");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r\n");
      return std::string(s.substr(b, e - b + 1));
    }

    std::vector<std::string> split(std::string_view s) {
      std::istringstream       in{std::string(s)};
      std::vector<std::string> result;
      std::string              token;
      while (in >> token) {
        result.push_back(token);
      }
      return result;
    }

    // Significant lines with their 1-based line numbers.
    std::vector<std::pair<std::size_t, std::string>> lines_of(
        std::string_view text) {
      std::vector<std::pair<std::size_t, std::string>> result;
      std::istringstream in{std::string(text)};
      std::string        line;
      for (std::size_t n = 1; std::getline(in, line); ++n) {
        auto t = trim(line);
        if (!t.empty() && t.front() != '#') {
          result.emplace_back(n, std::move(t));
        }
      }
      return result;
    }

    [[noreturn]] void fail(std::size_t line, std::string const& what) {
      throw InputError("line " + std::to_string(line) + ": " + what);
    }

    Automaton canonical(Automaton const& a) {
      auto                order = canonical_order(a);
      std::vector<Vertex> perm(a.num_vertices());
      for (std::size_t i = 0; i < order.size(); ++i) {
        perm[order[i]] = static_cast<Vertex>(i);
      }
      return a.relabeled(perm);
    }

    json presentation_json(Presentation const& pres) {
      json cells = json::array();
      for (auto const& c : pres.cells()) {
        cells.push_back({{"name", c.name}, {"boundary", pres.format(c.boundary)}});
      }
      return {{"letters", pres.x_letters()}, {"cells", cells}};
    }

    Presentation presentation_from(json const& j) {
      auto letters = j.at("letters").get<std::vector<std::string>>();
      Presentation                    x_only(letters, {});
      std::vector<Presentation::Cell> cells;
      for (auto const& c : j.at("cells")) {
        cells.push_back({c.at("name").get<std::string>(),
                         x_only.parse_word(c.at("boundary").get<std::string>())});
      }
      return Presentation(std::move(letters), std::move(cells));
    }

    // Maps the "vertices" array to dense indices.
    std::map<std::int64_t, Vertex> vertex_index(json const& j) {
      std::map<std::int64_t, Vertex> index;
      for (auto const& v : j.at("vertices")) {
        auto id = v.get<std::int64_t>();
        if (!index.emplace(id, static_cast<Vertex>(index.size())).second) {
          throw InputError("duplicate vertex " + std::to_string(id));
        }
      }
      return index;
    }

    Vertex lookup(std::map<std::int64_t, Vertex> const& index, json const& v) {
      auto it = index.find(v.get<std::int64_t>());
      if (it == index.end()) {
        throw InputError("reference to unknown vertex " + v.dump());
      }
      return it->second;
    }

    Letter positive_label(Presentation const& pres, json const& label) {
      auto name   = label.get<std::string>();
      auto letter = pres.find(name);
      if (!letter) {
        throw InputError("malformed edge label '" + name + "'");
      }
      return *letter;
    }

    template <typename F>
    auto guarded(F&& f) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw InputError(std::string("JSON schema violation: ") + e.what());
      }
    }

    std::string dot_escape(std::string const& s) {
      return "\"" + s + "\"";
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  Presentation parse_presentation(std::string_view text) {
    auto lines = lines_of(text);
    if (lines.empty() || lines.front().second.rfind("letters:", 0) != 0) {
      fail(lines.empty() ? 1 : lines.front().first,
           "expected 'letters: ...'");
    }
    auto         letters = split(lines.front().second.substr(8));
    Presentation x_only;
    try {
      x_only = Presentation(letters, {});
    } catch (InputError const& e) {
      fail(lines.front().first, e.what());
    }
    std::set<std::string> cell_names;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const& [n, line] = lines[i];
      auto colon            = line.find(':');
      auto head             = split(line.substr(0, colon));
      if (colon == std::string::npos || head.size() != 2 || head[0] != "cell") {
        fail(n, "expected 'cell <name>: <boundary>'");
      }
      cell_names.insert(head[1]);
    }
    std::vector<Presentation::Cell> cells;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const& [n, line] = lines[i];
      auto colon            = line.find(':');
      auto name             = split(line.substr(0, colon))[1];
      auto body             = line.substr(colon + 1);
      for (auto token : split(body)) {
        if (!token.empty() && token.back() == '\'') {
          token.pop_back();
        }
        if (cell_names.count(token) != 0) {
          fail(n, "cell letter '" + token + "' inside a boundary label");
        }
      }
      try {
        cells.push_back({name, x_only.parse_word(body)});
      } catch (InputError const& e) {
        fail(n, e.what());
      }
    }
    try {
      return Presentation(std::move(letters), std::move(cells));
    } catch (InputError const& e) {
      fail(lines.back().first, e.what());
    }
  }

  std::string format_presentation(Presentation const& pres) {
    std::string result = "letters:";
    for (auto const& x : pres.x_letters()) {
      result += " " + x;
    }
    result += "\n";
    for (auto const& c : pres.cells()) {
      result += "cell " + c.name + ": " + pres.format(c.boundary) + "\n";
    }
    return result;
  }

  TwoComplex parse_complex(std::string_view text, Presentation const& pres) {
    std::map<std::string, Vertex> index;
    std::vector<std::string>      names;
    std::vector<OneCell>          one_cells;
    std::vector<TwoCell>          two_cells;

    auto vertex = [&](std::size_t n, std::string const& name) {
      auto it = index.find(name);
      if (it == index.end()) {
        fail(n, "undeclared vertex '" + name + "'");
      }
      return it->second;
    };

    for (auto const& [n, line] : lines_of(text)) {
      auto colon = line.find(':');
      auto head  = split(line.substr(0, colon));
      if (head.empty()) {
        fail(n, "expected 'vertex', 'edge' or 'cell'");
      }
      if (head[0] == "vertex") {
        for (std::size_t i = 1; i < head.size(); ++i) {
          if (!index.emplace(head[i], static_cast<Vertex>(names.size())).second) {
            fail(n, "duplicate vertex '" + head[i] + "'");
          }
          names.push_back(head[i]);
        }
      } else if (head[0] == "edge") {
        if (head.size() != 4) {
          fail(n, "expected 'edge <vertex> <letter> <vertex>'");
        }
        auto letter = pres.find(head[2]);
        if (!letter || letter->kind != LetterKind::positive) {
          fail(n, "'" + head[2] + "' is not a declared X letter");
        }
        one_cells.push_back(
            {vertex(n, head[1]), letter->index, vertex(n, head[3])});
      } else if (head[0] == "cell") {
        if (colon == std::string::npos || head.size() != 3) {
          fail(n, "expected 'cell <letter> <root>: <steps>'");
        }
        auto letter = pres.find(head[1]);
        if (!letter || !letter->is_cell()) {
          fail(n, "'" + head[1] + "' is not a declared cell letter");
        }
        TwoCell cell{letter->index, vertex(n, head[2]), {}};
        auto    steps = split(line.substr(colon + 1));
        if (steps.size() % 3 != 0) {
          fail(n, "boundary steps must be '<vertex> <letter> <vertex>' triples");
        }
        for (std::size_t i = 0; i < steps.size(); i += 3) {
          Vertex from = vertex(n, steps[i]);
          Vertex to   = vertex(n, steps[i + 2]);
          auto   l    = pres.find(
              steps[i + 1].back() == '\''
                       ? steps[i + 1].substr(0, steps[i + 1].size() - 1)
                       : steps[i + 1]);
          if (!l || l->is_cell()) {
            fail(n, "'" + steps[i + 1] + "' is not an X letter");
          }
          bool reversed = steps[i + 1].back() == '\'';
          auto it       = std::find_if(
              one_cells.begin(), one_cells.end(), [&](OneCell const& e) {
                return e.x == l->index
                       && (reversed ? (e.source == to && e.target == from)
                                          : (e.source == from && e.target == to));
              });
          if (it == one_cells.end()) {
            fail(n,
                 "no edge " + steps[i] + " " + steps[i + 1] + " "
                     + steps[i + 2]);
          }
          cell.boundary.push_back(
              {static_cast<std::uint32_t>(it - one_cells.begin()), reversed});
        }
        two_cells.push_back(std::move(cell));
      } else {
        fail(n, "expected 'vertex', 'edge' or 'cell'");
      }
    }
    auto num_vertices = names.size();
    return TwoComplex(pres,
                      num_vertices,
                      std::move(one_cells),
                      std::move(two_cells),
                      std::move(names));
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT
  ////////////////////////////////////////////////////////////////////////

  std::string to_dot(Automaton const& automaton, Presentation const& pres) {
    auto              a = canonical(automaton);
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (Vertex v = 0; v < a.num_vertices(); ++v) {
      out << "  " << v;
      if (v == a.initial() || v == a.terminal()) {
        out << " [peripheries=2]";
      }
      out << ";\n";
    }
    for (auto const& e : a.positive_edges()) {
      out << "  " << e.source << " -> " << e.target
          << " [label=" << dot_escape(pres.name(e.label));
      if (a.alphabet().is_cell(e.label) && e.source != e.target) {
        out << ", dir=none";
      }
      out << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string to_dot(TwoComplex const& c, Presentation const& pres) {
    std::ostringstream out;
    out << "digraph complex {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (Vertex v = 0; v < c.num_vertices(); ++v) {
      out << "  " << dot_escape(c.vertex_name(v)) << ";\n";
    }
    for (auto const& e : c.one_cells()) {
      out << "  " << dot_escape(c.vertex_name(e.source)) << " -> "
          << dot_escape(c.vertex_name(e.target))
          << " [label=" << dot_escape(pres.x_letters()[e.x]) << "];\n";
    }
    for (auto const& cell : c.two_cells()) {
      auto const& name = pres.cells()[cell.label].name;
      out << "  // cell " << name << " at " << c.vertex_name(cell.root) << ":";
      for (auto step : cell.boundary) {
        out << " " << c.vertex_name(c.step_source(step)) << " "
            << pres.name(c.step_label(step)) << " "
            << c.vertex_name(c.step_target(step));
      }
      out << "\n  " << dot_escape(c.vertex_name(cell.root)) << " -> "
          << dot_escape(c.vertex_name(cell.root)) << " [label="
          << dot_escape(name) << ", style=dashed];\n";
    }
    out << "}\n";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  std::string to_json(Automaton const& automaton, Presentation const& pres) {
    auto a = canonical(automaton);
    json j = presentation_json(pres);
    json vertices = json::array();
    for (Vertex v = 0; v < a.num_vertices(); ++v) {
      vertices.push_back(v);
    }
    json edges = json::array();
    for (auto const& e : a.positive_edges()) {
      edges.push_back(
          {{"from", e.source}, {"label", pres.name(e.label)}, {"to", e.target}});
    }
    j["vertices"]  = vertices;
    j["edges"]     = edges;
    j["root_init"] = a.initial();
    j["root_term"] = a.terminal();
    return j.dump(2) + "\n";
  }

  std::string to_json(TwoComplex const& c, Presentation const& pres) {
    json j        = presentation_json(pres);
    json vertices = json::array();
    for (Vertex v = 0; v < c.num_vertices(); ++v) {
      vertices.push_back(v);
    }
    json edges = json::array();
    for (auto const& e : c.one_cells()) {
      edges.push_back({{"from", e.source},
                       {"label", pres.x_letters()[e.x]},
                       {"to", e.target}});
    }
    json cells = json::array();
    for (auto const& cell : c.two_cells()) {
      json walk = json::array();
      for (auto step : cell.boundary) {
        walk.push_back({{"from", c.step_source(step)},
                        {"label", pres.name(c.step_label(step))},
                        {"to", c.step_target(step)}});
      }
      cells.push_back({{"label", pres.cells()[cell.label].name},
                       {"root", cell.root},
                       {"boundary", walk}});
    }
    j["vertices"]   = vertices;
    j["edges"]      = edges;
    j["two_cells"]  = cells;
    return j.dump(2) + "\n";
  }

  LoadedAutomaton automaton_from_json(std::string_view text) {
    return guarded([&] {
      auto j     = json::parse(text);
      auto pres  = presentation_from(j);
      auto index = vertex_index(j);
      std::vector<Edge> edges;
      for (auto const& e : j.at("edges")) {
        auto letter = positive_label(pres, e.at("label"));
        edges.push_back({lookup(index, e.at("from")),
                         pres.alphabet().code(letter),
                         lookup(index, e.at("to"))});
      }
      auto a = Automaton::from_edges(pres.alphabet(),
                                     index.size(),
                                     edges,
                                     lookup(index, j.at("root_init")),
                                     lookup(index, j.at("root_term")));
      return LoadedAutomaton{std::move(pres), std::move(a)};
    });
  }

  LoadedComplex complex_from_json(std::string_view text) {
    return guarded([&] {
      auto j     = json::parse(text);
      auto pres  = presentation_from(j);
      auto index = vertex_index(j);
      std::vector<OneCell> one_cells;
      for (auto const& e : j.at("edges")) {
        auto letter = positive_label(pres, e.at("label"));
        if (letter.kind != LetterKind::positive) {
          throw InputError("1-cell label must be an X letter");
        }
        one_cells.push_back({lookup(index, e.at("from")),
                             letter.index,
                             lookup(index, e.at("to"))});
      }
      std::vector<TwoCell> two_cells;
      for (auto const& c : j.at("two_cells")) {
        auto letter = positive_label(pres, c.at("label"));
        if (!letter.is_cell()) {
          throw InputError("2-cell label must be a cell letter");
        }
        TwoCell cell{letter.index, lookup(index, c.at("root")), {}};
        for (auto const& s : c.at("boundary")) {
          auto   name     = s.at("label").get<std::string>();
          bool   reversed = !name.empty() && name.back() == '\'';
          auto   l        = pres.find(reversed ? name.substr(0, name.size() - 1)
                                                 : name);
          Vertex from     = lookup(index, s.at("from"));
          Vertex to       = lookup(index, s.at("to"));
          if (!l || l->is_cell()) {
            throw InputError("malformed boundary label '" + name + "'");
          }
          auto it = std::find_if(
              one_cells.begin(), one_cells.end(), [&](OneCell const& e) {
                return e.x == l->index
                       && (reversed ? (e.source == to && e.target == from)
                                    : (e.source == from && e.target == to));
              });
          if (it == one_cells.end()) {
            throw InputError("boundary step does not follow a 1-cell");
          }
          cell.boundary.push_back(
              {static_cast<std::uint32_t>(it - one_cells.begin()), reversed});
        }
        two_cells.push_back(std::move(cell));
      }
      TwoComplex c(pres, index.size(), std::move(one_cells), std::move(two_cells));
      return LoadedComplex{std::move(pres), std::move(c)};
    });
  }

  TwoComplex load_complex(std::string_view text, Presentation const& pres) {
    auto t = trim(text);
    if (!t.empty() && t.front() == '{') {
      auto loaded = complex_from_json(t);
      if (!(loaded.presentation == pres)) {
        throw InputError("complex was built over a different presentation");
      }
      return std::move(loaded.complex);
    }
    return parse_complex(text, pres);
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

}  // namespace mxp::io
