// Shared presentations, word helpers and random instance generators.

#ifndef MXP_TESTS_FIXTURES_HPP_
#define MXP_TESTS_FIXTURES_HPP_

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mxp/core.hpp"
#include "mxp/io.hpp"

namespace mxp::test {

  // X = {a}, bl(rho) = a a.
  inline Presentation projective_plane() {
    return io::parse_presentation("letters: a\ncell rho: a a\n");
  }

  // X = {a, b}, bl(rho) = a b a' b'.
  inline Presentation torus() {
    return io::parse_presentation("letters: a b\ncell rho: a b a' b'\n");
  }

  // X = {a, b}, bl(rho) = b.
  inline Presentation wedge() {
    return io::parse_presentation("letters: a b\ncell rho: b\n");
  }

  inline Presentation free_on(std::vector<std::string> letters) {
    return Presentation(std::move(letters), {});
  }

  inline Word w(Presentation const& p, std::string_view text) {
    return p.parse_word(text);
  }

  inline std::vector<Word> ws(Presentation const& p, std::string_view text) {
    return p.parse_words(text);
  }

  class RandomInstances {
   public:
    explicit RandomInstances(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    }

    // |X| <= max_x, |P| <= max_p, |bl| <= max_bl.
    Presentation presentation(std::size_t max_x  = 2,
                              std::size_t max_p  = 1,
                              std::size_t max_bl = 4) {
      std::vector<std::string> xs;
      auto                     nx = 1 + below(max_x);
      for (std::size_t i = 0; i < nx; ++i) {
        xs.push_back(std::string(1, static_cast<char>('a' + i)));
      }
      Presentation                    x_only(xs, {});
      std::vector<Presentation::Cell> cells;
      auto                            np = below(max_p + 1);
      for (std::size_t j = 0; j < np; ++j) {
        cells.push_back({j == 0 ? "rho" : "rho" + std::to_string(j),
                         word_over(x_only, below(max_bl + 1), false)});
      }
      return Presentation(xs, std::move(cells));
    }

    Word word_over(Presentation const& p, std::size_t length, bool cells = true) {
      auto a = p.alphabet();
      auto n = cells ? a.size() : 2 * a.num_x;
      Word result;
      for (std::size_t i = 0; i < length; ++i) {
        result.push_back(a.letter(static_cast<LetterCode>(below(n))));
      }
      return result;
    }

    Word word(Presentation const& p, std::size_t max_len, bool cells = true) {
      return word_over(p, below(max_len + 1), cells);
    }

    std::vector<Word> generators(Presentation const& p,
                                 std::size_t         max_count,
                                 std::size_t         max_len) {
      std::vector<Word> result;
      auto              n = below(max_count + 1);
      for (std::size_t i = 0; i < n; ++i) {
        result.push_back(word(p, max_len));
      }
      return result;
    }

    std::mt19937_64& engine() {
      return rng_;
    }

   private:
    std::mt19937_64 rng_;
  };

}  // namespace mxp::test

#endif  // MXP_TESTS_FIXTURES_HPP_
