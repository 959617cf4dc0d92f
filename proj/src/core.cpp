#include "mxp/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mxp {

  Word invert(std::span<Letter const> w) {
    Word result;
    result.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result.push_back(it->inverse());
    }
    return result;
  }

  Word concat(std::span<Letter const> u, std::span<Letter const> v) {
    Word result(u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  bool is_identifier(std::string_view s) noexcept {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) {
      return false;
    }
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  Presentation::Presentation(std::vector<std::string> x_letters,
                             std::vector<Cell>        cells)
      : x_(std::move(x_letters)), cells_(std::move(cells)) {
    std::set<std::string_view> seen;
    auto declare = [&seen](std::string const& name) {
      if (!is_identifier(name)) {
        throw InputError("invalid identifier '" + name + "'");
      }
      if (!seen.insert(name).second) {
        throw InputError("duplicate identifier '" + name + "'");
      }
    };
    for (auto const& x : x_) {
      declare(x);
    }
    for (auto const& c : cells_) {
      declare(c.name);
    }
    for (auto const& c : cells_) {
      for (Letter l : c.boundary) {
        if (l.is_cell()) {
          throw InputError("boundary label of '" + c.name
                           + "' contains a cell letter");
        }
        if (l.index >= x_.size()) {
          throw InputError("boundary label of '" + c.name
                           + "' uses an undeclared letter");
        }
      }
    }
  }

  std::optional<Letter> Presentation::find(std::string_view name) const {
    for (std::uint32_t i = 0; i < x_.size(); ++i) {
      if (x_[i] == name) {
        return Letter{LetterKind::positive, i};
      }
    }
    for (std::uint32_t i = 0; i < cells_.size(); ++i) {
      if (cells_[i].name == name) {
        return Letter{LetterKind::cell, i};
      }
    }
    return std::nullopt;
  }

  std::string Presentation::name(Letter l) const {
    switch (l.kind) {
      case LetterKind::positive:
        return x_.at(l.index);
      case LetterKind::negative:
        return x_.at(l.index) + "'";
      case LetterKind::cell:
        break;
    }
    return cells_.at(l.index).name;
  }

  Word Presentation::parse_word(std::string_view text) const {
    Word               result;
    std::istringstream in{std::string(text)};
    std::string        token;
    while (in >> token) {
      if (token == "1") {
        continue;
      }
      bool inverse = false;
      if (token.back() == '\'') {
        inverse = true;
        token.pop_back();
      }
      auto letter = find(token);
      if (!letter) {
        throw InputError("undeclared letter '" + token + "'");
      }
      result.push_back(inverse ? letter->inverse() : *letter);
    }
    return result;
  }

  std::vector<Word> Presentation::parse_words(std::string_view text) const {
    std::vector<Word> result;
    std::size_t       start = 0;
    while (start <= text.size()) {
      auto end = text.find(';', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto piece = text.substr(start, end - start);
      if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos) {
        result.push_back(parse_word(piece));
      }
      start = end + 1;
    }
    return result;
  }

  std::string Presentation::format(std::span<Letter const> w) const {
    if (w.empty()) {
      return "1";
    }
    std::string result;
    for (Letter l : w) {
      if (!result.empty()) {
        result += ' ';
      }
      result += name(l);
    }
    return result;
  }

  Presentation Presentation::with_boundary(std::uint32_t cell, Word bl) const {
    auto cells = cells_;
    cells.at(cell).boundary = std::move(bl);
    return Presentation(x_, std::move(cells));
  }

  std::string GroupPresentationText::to_string(Presentation const& pres) const {
    std::string result = "Gp< ";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      result += (i == 0 ? "" : ", ") + generators[i];
    }
    result += generators.empty() ? "| " : " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) {
      result += (i == 0 ? "" : ", ") + pres.format(relators[i]);
    }
    result += relators.empty() ? ">" : " >";
    return result;
  }

  GroupPresentationText group_image(Presentation const& pres) {
    GroupPresentationText result;
    result.generators = pres.x_letters();
    for (auto const& c : pres.cells()) {
      result.relators.push_back(c.boundary);
    }
    return result;
  }

}  // namespace mxp
