#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "plactic/word.hpp"

namespace plactic {

  // A semistandard Young tableau in French convention: rows weakly increase
  // left to right, columns strictly increase from bottom to top, and the
  // longest row is at the bottom.
  //
  // Rows are stored bottom-up, so rows()[0] is the bottom (longest) row and
  // Schensted insertion starts there.
  class Tableau {
   public:
    using row_type = std::vector<letter_type>;

    Tableau() = default;

    // Throws InvalidTableau if rows (listed bottom-up) are not a valid
    // tableau.
    static Tableau from_rows(std::vector<row_type> rows);

    // Recovers the tableau whose row reading is w. The rows of a row reading
    // are exactly its maximal weakly increasing factors, read top row first.
    // Throws InvalidTableau if w is not the row reading of any tableau.
    static Tableau from_row_reading(word_type const& w);

    // Schensted row insertion of x: x replaces the leftmost strictly larger
    // letter of the bottom row, which is then inserted into the row above;
    // if there is no such letter, x is appended to the row.
    void insert(letter_type x);

    [[nodiscard]] std::vector<row_type> const& rows() const noexcept {
      return _rows;
    }

    [[nodiscard]] std::size_t number_of_rows() const noexcept {
      return _rows.size();
    }

    // Number of boxes.
    [[nodiscard]] std::size_t size() const noexcept;

    [[nodiscard]] bool empty() const noexcept {
      return _rows.empty();
    }

    // Row lengths, bottom row first.
    [[nodiscard]] std::vector<std::size_t> shape() const;

    friend bool operator==(Tableau const&, Tableau const&) = default;

   private:
    explicit Tableau(std::vector<row_type> rows) : _rows(std::move(rows)) {}

    std::vector<row_type> _rows;
  };

  // True iff rows (listed bottom-up) weakly increase, columns strictly
  // increase upwards, and row lengths weakly decrease upwards. Empty rows are
  // rejected.
  [[nodiscard]] bool is_valid_tableau(
      std::vector<Tableau::row_type> const& rows);

  [[nodiscard]] Tableau insert_letter(Tableau t, letter_type x);

  // Left fold of insert_letter over w, starting from the empty tableau.
  [[nodiscard]] Tableau tableau_of_word(word_type const& w);

  // Rows concatenated from the top row down, each read left to right.
  [[nodiscard]] word_type row_reading(Tableau const& t);

  // Columns concatenated left to right, each read from top to bottom.
  [[nodiscard]] word_type column_reading(Tableau const& t);

  // One row per line, top row first, entries separated by spaces.
  [[nodiscard]] std::string to_string(Tableau const& t);

  std::ostream& operator<<(std::ostream& os, Tableau const& t);

}  // namespace plactic
