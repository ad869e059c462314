#include "plactic/tableau.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "plactic/errors.hpp"

namespace plactic {

  bool is_valid_tableau(std::vector<Tableau::row_type> const& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto const& row = rows[r];
      if (row.empty()) {
        return false;
      }
      if (std::find(row.begin(), row.end(), letter_type(0)) != row.end()) {
        return false;
      }
      if (!std::is_sorted(row.begin(), row.end())) {
        return false;
      }
      if (r == 0) {
        continue;
      }
      auto const& below = rows[r - 1];
      if (row.size() > below.size()) {
        return false;
      }
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] <= below[c]) {
          return false;
        }
      }
    }
    return true;
  }

  Tableau Tableau::from_rows(std::vector<row_type> rows) {
    if (!is_valid_tableau(rows)) {
      throw InvalidTableau("rows do not form a semistandard tableau");
    }
    return Tableau(std::move(rows));
  }

  Tableau Tableau::from_row_reading(word_type const& w) {
    std::vector<row_type> top_down;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i == 0 || w[i] < w[i - 1]) {
        top_down.emplace_back();
      }
      top_down.back().push_back(w[i]);
    }
    std::reverse(top_down.begin(), top_down.end());
    return from_rows(std::move(top_down));
  }

  void Tableau::insert(letter_type x) {
    if (x == 0) {
      throw DomainError("letters start at 1, found 0");
    }
    for (auto& row : _rows) {
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        return;
      }
      std::swap(*it, x);
    }
    _rows.push_back(row_type{x});
  }

  std::size_t Tableau::size() const noexcept {
    std::size_t n = 0;
    for (auto const& row : _rows) {
      n += row.size();
    }
    return n;
  }

  std::vector<std::size_t> Tableau::shape() const {
    std::vector<std::size_t> result;
    result.reserve(_rows.size());
    for (auto const& row : _rows) {
      result.push_back(row.size());
    }
    return result;
  }

  Tableau insert_letter(Tableau t, letter_type x) {
    t.insert(x);
    return t;
  }

  Tableau tableau_of_word(word_type const& w) {
    Tableau t;
    for (auto x : w) {
      t.insert(x);
    }
    return t;
  }

  word_type row_reading(Tableau const& t) {
    word_type w;
    w.reserve(t.size());
    auto const& rows = t.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      w.insert(w.end(), it->begin(), it->end());
    }
    return w;
  }

  word_type column_reading(Tableau const& t) {
    word_type   w;
    auto const& rows = t.rows();
    w.reserve(t.size());
    std::size_t const width = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < width; ++c) {
      // Column c occupies rows [0, h) where h is the number of rows of
      // length > c; row lengths decrease upwards.
      std::size_t h = 0;
      while (h < rows.size() && rows[h].size() > c) {
        ++h;
      }
      for (std::size_t r = h; r-- > 0;) {
        w.push_back(rows[r][c]);
      }
    }
    return w;
  }

  std::string to_string(Tableau const& t) {
    std::ostringstream os;
    os << t;
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, Tableau const& t) {
    auto const& rows = t.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      for (std::size_t c = 0; c < it->size(); ++c) {
        os << (c == 0 ? "" : " ") << (*it)[c];
      }
      os << '\n';
    }
    return os;
  }

}  // namespace plactic
