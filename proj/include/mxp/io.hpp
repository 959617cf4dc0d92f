// Text formats, JSON persistence and DOT export.
//
// Presentation text:
//
//   letters: a b
//   cell rho: a b a' b'
//
// Complex text:
//
//   vertex v w
//   edge v a w
//   edge w a v
//   cell rho v: v a w w a v
//
// where each boundary step is a `source letter target` triple and `a'`
// traverses an a-edge backwards.  Blank lines and lines starting with '#'
// are ignored in both formats.

#ifndef MXP_IO_HPP_
#define MXP_IO_HPP_

#include <string>
#include <string_view>

#include "complex.hpp"
#include "core.hpp"
#include "graph.hpp"

namespace mxp::io {

  [[nodiscard]] Presentation parse_presentation(std::string_view text);
  [[nodiscard]] std::string  format_presentation(Presentation const& pres);

  [[nodiscard]] TwoComplex parse_complex(std::string_view    text,
                                         Presentation const& pres);

  //! Vertices numbered canonically; roots drawn with a double border.
  [[nodiscard]] std::string to_dot(Automaton const& a, Presentation const& pres);
  [[nodiscard]] std::string to_dot(TwoComplex const&   c,
                                   Presentation const& pres);

  //! Vertices numbered canonically, so isomorphic automata serialise to the
  //! same bytes.
  [[nodiscard]] std::string to_json(Automaton const& a, Presentation const& pres);
  [[nodiscard]] std::string to_json(TwoComplex const&   c,
                                    Presentation const& pres);

  struct LoadedAutomaton {
    Presentation presentation;
    Automaton    automaton;
  };

  struct LoadedComplex {
    Presentation presentation;
    TwoComplex   complex;
  };

  //! Throw InputError on schema violations, dangling vertex references,
  //! non-deterministic automata and boundary walks that do not spell bl.
  [[nodiscard]] LoadedAutomaton automaton_from_json(std::string_view text);
  [[nodiscard]] LoadedComplex   complex_from_json(std::string_view text);

  //! Loads a complex from JSON or from the complex text format (chosen by
  //! the first non-blank character).  `pres` is used for the text format
  //! and must match the presentation stored in JSON.
  [[nodiscard]] TwoComplex load_complex(std::string_view    text,
                                        Presentation const& pres);

  [[nodiscard]] std::string read_file(std::string const& path);

}  // namespace mxp::io

#endif  // MXP_IO_HPP_
