#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace plactic {

  // Letters are 1-based positive integers; 0 is never a valid letter.
  using letter_type = std::uint32_t;
  using word_type   = std::vector<letter_type>;

  enum class WordStyle { compact, separated };

  // Occurrence counts of each letter of a word (its Parikh image), stored
  // sparsely so that no alphabet size has to be fixed in advance.
  class Content {
   public:
    using map_type = std::map<letter_type, std::size_t>;

    Content() = default;
    explicit Content(map_type counts);

    // Number of occurrences of x; 0 for letters that never occur.
    [[nodiscard]] std::size_t operator[](letter_type x) const;

    // Largest letter with nonzero count, 0 for the empty content.
    [[nodiscard]] letter_type rank() const noexcept {
      return _counts.empty() ? 0 : _counts.rbegin()->first;
    }

    // Sum of all counts, i.e. the length of any word with this content.
    [[nodiscard]] std::size_t length() const noexcept {
      return _length;
    }

    [[nodiscard]] bool empty() const noexcept {
      return _length == 0;
    }

    [[nodiscard]] map_type const& counts() const noexcept {
      return _counts;
    }

    void add(letter_type x, std::size_t count = 1);

    // The unique weakly increasing word with this content.
    [[nodiscard]] word_type row_word() const;

    Content& operator+=(Content const& that);

    friend Content operator+(Content lhs, Content const& rhs) {
      lhs += rhs;
      return lhs;
    }

    friend bool operator==(Content const&, Content const&) = default;

   private:
    map_type    _counts;
    std::size_t _length = 0;
  };

  // Parses either a compact digit string ("34231122", letters 1-9) or a
  // list of positive integers separated by whitespace and/or commas
  // ("10 2 10", "1,2,3"). A single all-digit token is read as compact unless
  // the text contains a comma, so "12" is [1, 2] and "12," is [12]. Blank
  // text yields the empty word.
  [[nodiscard]] word_type parse_word(std::string_view text);

  // Inverse of parse_word. Compact style throws FormatError for letters
  // greater than 9; separated style writes a one-letter word [k] with k > 9
  // as "k,".
  [[nodiscard]] std::string format_word(word_type const& w,
                                        WordStyle        style);

  // Compact when every letter fits in one digit, separated otherwise.
  [[nodiscard]] std::string format_word(word_type const& w);

  [[nodiscard]] Content content_of(word_type const& w);

  // Largest letter of w, 0 for the empty word.
  [[nodiscard]] letter_type rank_of(word_type const& w) noexcept;

  // Throws DomainError if w contains the letter 0.
  void validate_word(word_type const& w);

  // Reads one word per line, skipping lines whose first non-blank
  // character is '#'. Blank lines are empty words.
  [[nodiscard]] std::vector<word_type> read_words(std::istream& in);

  std::ostream& operator<<(std::ostream& os, Content const& c);

}  // namespace plactic
