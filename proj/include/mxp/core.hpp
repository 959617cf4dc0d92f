// Alphabets, words and presentations of the inverse monoids M(X,P).
//
// M(X,P) is presented as Inv< X u P | r^2 = r, r = r bl(r) : r in P >, where
// each cell letter r carries a boundary label bl(r), a word over X u X^-1.
// Cell letters are self-inverse.

#ifndef MXP_CORE_HPP_
#define MXP_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mxp {

  //! Raised for malformed or inconsistent input (syntax, undeclared letters,
  //! schema and invariant violations on load).
  class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  enum class LetterKind : std::uint8_t { positive, negative, cell };

  //! A signed generator.  `index` refers to the presentation's X letters for
  //! positive/negative letters and to its P letters for cell letters.
  struct Letter {
    LetterKind    kind  = LetterKind::positive;
    std::uint32_t index = 0;

    [[nodiscard]] Letter inverse() const noexcept {
      switch (kind) {
        case LetterKind::positive:
          return {LetterKind::negative, index};
        case LetterKind::negative:
          return {LetterKind::positive, index};
        case LetterKind::cell:
          break;
      }
      return *this;
    }

    [[nodiscard]] bool is_cell() const noexcept {
      return kind == LetterKind::cell;
    }

    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  using Word = std::vector<Letter>;

  //! Dense integer code of a letter; the code order is the canonical letter
  //! order: x0, x0', x1, x1', ..., then the cell letters in declared order.
  using LetterCode = std::uint32_t;

  //! Shape of a letter set: how many X and P letters there are.
  struct Alphabet {
    std::uint32_t num_x = 0;
    std::uint32_t num_p = 0;

    [[nodiscard]] std::uint32_t size() const noexcept {
      return 2 * num_x + num_p;
    }

    [[nodiscard]] LetterCode code(Letter l) const noexcept {
      switch (l.kind) {
        case LetterKind::positive:
          return 2 * l.index;
        case LetterKind::negative:
          return 2 * l.index + 1;
        case LetterKind::cell:
          break;
      }
      return 2 * num_x + l.index;
    }

    [[nodiscard]] Letter letter(LetterCode c) const noexcept {
      if (c < 2 * num_x) {
        return {(c & 1U) ? LetterKind::negative : LetterKind::positive, c / 2};
      }
      return {LetterKind::cell, c - 2 * num_x};
    }

    [[nodiscard]] LetterCode inverse(LetterCode c) const noexcept {
      return c < 2 * num_x ? (c ^ 1U) : c;
    }

    [[nodiscard]] bool is_cell(LetterCode c) const noexcept {
      return c >= 2 * num_x;
    }

    //! Positive X letters and cell letters; the labels stored on edges.
    [[nodiscard]] bool is_positive(LetterCode c) const noexcept {
      return is_cell(c) || (c & 1U) == 0;
    }

    friend bool operator==(Alphabet const&, Alphabet const&) = default;
  };

  //! w^-1: reversed, each letter inverted, cell letters fixed.
  [[nodiscard]] Word invert(std::span<Letter const> w);

  [[nodiscard]] Word concat(std::span<Letter const> u, std::span<Letter const> v);

  //! True for identifiers of the form [A-Za-z][A-Za-z0-9_]*.
  [[nodiscard]] bool is_identifier(std::string_view s) noexcept;

  //! The data (X, P, bl) defining M(X,P).
  class Presentation {
   public:
    struct Cell {
      std::string name;
      Word        boundary;
    };

    Presentation() = default;

    //! Validates identifiers, disjointness and that every boundary label is
    //! a word over X u X^-1 only.
    Presentation(std::vector<std::string> x_letters, std::vector<Cell> cells);

    [[nodiscard]] Alphabet alphabet() const noexcept {
      return {static_cast<std::uint32_t>(x_.size()),
              static_cast<std::uint32_t>(cells_.size())};
    }

    [[nodiscard]] std::vector<std::string> const& x_letters() const noexcept {
      return x_;
    }
    [[nodiscard]] std::vector<Cell> const& cells() const noexcept {
      return cells_;
    }
    [[nodiscard]] Word const& boundary(std::uint32_t cell) const {
      return cells_.at(cell).boundary;
    }

    [[nodiscard]] std::optional<Letter> find(std::string_view name) const;

    //! Name of a letter, with a trailing apostrophe for negative letters.
    [[nodiscard]] std::string name(Letter l) const;
    [[nodiscard]] std::string name(LetterCode c) const {
      return name(alphabet().letter(c));
    }

    //! Whitespace separated letters, `x'` for inverses, `1` for the empty
    //! word.  `r'` for a cell letter is accepted and normalised to `r`.
    [[nodiscard]] Word parse_word(std::string_view text) const;

    //! Semicolon separated list of words; empty entries are skipped.
    [[nodiscard]] std::vector<Word> parse_words(std::string_view text) const;

    [[nodiscard]] std::string format(std::span<Letter const> w) const;

    //! Presentation with the same letters but cell letter `cell` carrying
    //! a different boundary label.
    [[nodiscard]] Presentation with_boundary(std::uint32_t cell, Word bl) const;

    friend bool operator==(Presentation const& a, Presentation const& b) {
      if (a.x_ != b.x_ || a.cells_.size() != b.cells_.size()) {
        return false;
      }
      for (std::size_t i = 0; i < a.cells_.size(); ++i) {
        if (a.cells_[i].name != b.cells_[i].name
            || a.cells_[i].boundary != b.cells_[i].boundary) {
          return false;
        }
      }
      return true;
    }

   private:
    std::vector<std::string> x_;
    std::vector<Cell>        cells_;
  };

  struct GroupPresentationText {
    std::vector<std::string> generators;
    std::vector<Word>        relators;

    //! `Gp< a, b | a b a' b' >`
    [[nodiscard]] std::string to_string(Presentation const& pres) const;
  };

  //! The greatest group image G_{X,P} = Gp< X | bl(r) = 1 >.
  [[nodiscard]] GroupPresentationText group_image(Presentation const& pres);

}  // namespace mxp

#endif  // MXP_CORE_HPP_
