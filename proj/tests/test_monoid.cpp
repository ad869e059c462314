#include <map>

#include "doctest.h"

#include "plactic/errors.hpp"
#include "plactic/monoid.hpp"

#include "support.hpp"

using namespace plactic;

namespace {
  bool is_row_reading(word_type const& w) {
    try {
      static_cast<void>(Tableau::from_row_reading(w));
      return true;
    } catch (InvalidTableau const&) {
      return false;
    }
  }

  // Splits w into maximal strictly decreasing factors and checks that they
  // are the columns, left to right and read top-down, of a tableau.
  bool is_column_reading(word_type const& w) {
    std::vector<word_type> columns;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i == 0 || w[i] >= w[i - 1]) {
        columns.emplace_back();
      }
      columns.back().push_back(w[i]);
    }
    std::vector<Tableau::row_type> rows;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c > 0 && columns[c].size() > columns[c - 1].size()) {
        return false;
      }
      for (std::size_t r = 0; r < columns[c].size(); ++r) {
        if (rows.size() <= r) {
          rows.emplace_back();
        }
        rows[r].push_back(columns[c][columns[c].size() - 1 - r]);
      }
    }
    return is_valid_tableau(rows);
  }
}  // namespace

TEST_CASE("element_of") {
  CHECK(element_of(word_type{2, 1, 2}).normal_form() == word_type{2, 1, 2});
  CHECK(element_of(word_type{}).is_identity());
  CHECK(element_of(word_type{3, 2, 1, 4, 3, 1, 2, 2}).normal_form()
        == word_type{3, 4, 2, 3, 1, 1, 2, 2});
  CHECK(test::knuth_equivalent({3, 2, 1, 4, 3, 1, 2, 2},
                               {3, 4, 2, 3, 1, 1, 2, 2}));
  auto const a = element_of(word_type{3, 1, 2});
  CHECK(a.content() == content_of({1, 2, 3}));
  CHECK(a.rank() == 3);
  CHECK(a.length() == 3);
}

TEST_CASE("from_normal_form validates") {
  CHECK(Element::from_normal_form({2, 1, 2}) == element_of(word_type{2, 2, 1}));
  CHECK_THROWS_AS(static_cast<void>(Element::from_normal_form({1, 2, 1})), InvalidTableau);
}

TEST_CASE("multiply") {
  auto const e = Element();
  auto const a = element_of(word_type{2});
  auto const b = element_of(word_type{1});
  CHECK((a * b).normal_form() == word_type{2, 1});
  CHECK((element_of(word_type{3, 2}) * b).normal_form()
        == word_type{3, 2, 1});
  auto const w = element_of(word_type{3, 1, 4, 1, 5});
  CHECK(e * w == w);
  CHECK(w * e == w);
  CHECK(power(a, 0).is_identity());
  CHECK(power(a, 3).normal_form() == word_type{2, 2, 2});
}

TEST_CASE("equals") {
  CHECK_FALSE(equals(element_of(word_type{1, 2}), element_of(word_type{2, 1})));
  CHECK(equals(element_of(word_type{2, 1, 2}), element_of(word_type{2, 2, 1})));
  auto const w = element_of(word_type{4, 4, 1, 3});
  CHECK(equals(w, w));
}

TEST_CASE("knuth_neighbors") {
  CHECK(knuth_neighbors({1, 3, 2}) == std::set<word_type>{{3, 1, 2}});
  CHECK(knuth_neighbors({3, 1, 2}) == std::set<word_type>{{1, 3, 2}});
  CHECK(knuth_neighbors({1, 2, 3}).empty());
  CHECK(knuth_neighbors({}).empty());
  CHECK(knuth_neighbors({2, 1}).empty());
  CHECK(knuth_neighbors({2, 1, 2}) == std::set<word_type>{{2, 2, 1}});
  // 2 1 3: the second schema (y = 2) swaps 1 and 3; the first would need
  // 1 <= 3 < 2.
  CHECK(knuth_neighbors({2, 1, 3}) == std::set<word_type>{{2, 3, 1}});
}

TEST_CASE("relation instances") {
  auto const r = knuth_relation_instances({1, 3, 2});
  REQUIRE(r.size() == 1);
  CHECK(r[0].position == 0);
  CHECK(r[0].schema == KnuthSchema::swap_front);
  CHECK(apply({1, 3, 2}, r[0]) == word_type{3, 1, 2});
  CHECK_THROWS_AS(static_cast<void>(apply({1, 2, 3}, {0, KnuthSchema::swap_back})),
                  PreconditionError);
  CHECK_THROWS_AS(static_cast<void>(apply({1, 2}, {0, KnuthSchema::swap_back})), DomainError);
}

TEST_CASE("knuth_class") {
  CHECK(knuth_class({1, 2}) == std::set<word_type>{{1, 2}});
  auto const c = knuth_class({2, 1, 2});
  CHECK(c.count({2, 1, 2}) == 1);
  CHECK(c.count({2, 2, 1}) == 1);
  CHECK(c.size() == 2);
  CHECK(knuth_class({}) == std::set<word_type>{{}});
  // Tableau of 2143 has shape (2, 2), which has two standard fillings.
  CHECK(knuth_class({2, 1, 4, 3}).size() == 2);
  CHECK_THROWS_AS(static_cast<void>(knuth_class({3, 1, 4, 2, 5, 6}, 2)),
                  BudgetExceeded);
}

TEST_CASE("column_generator") {
  CHECK(column_generator(1, 3).normal_form() == word_type{3, 2, 1});
  CHECK(column_generator(3, 3).normal_form() == word_type{3});
  CHECK(column_generator(2, 3) * element_of(word_type{1})
        == column_generator(1, 3));
  CHECK_THROWS_AS(static_cast<void>(column_generator(0, 3)), DomainError);
  CHECK_THROWS_AS(static_cast<void>(column_generator(4, 3)), DomainError);
  for (letter_type n = 2; n <= 8; ++n) {
    for (letter_type i = 1; i < n; ++i) {
      CHECK(column_generator(i + 1, n) * element_of(word_type{i})
            == column_generator(i, n));
    }
  }
}

TEST_CASE("is_row and is_column") {
  CHECK(is_row({1, 1, 2, 2}));
  CHECK_FALSE(is_column({1, 1, 2, 2}));
  CHECK(is_column({3, 2, 1}));
  CHECK_FALSE(is_row({3, 2, 1}));
  CHECK(is_row({}));
  CHECK(is_column({}));
  CHECK_FALSE(is_column({3, 3}));
}

TEST_CASE("neighbour relation is symmetric and preserves the element") {
  for (auto const& w : test::all_words(4, 6)) {
    auto const a = element_of(w);
    for (auto const& n : knuth_neighbors(w)) {
      REQUIRE(knuth_neighbors(n).count(w) == 1);
      REQUIRE(element_of(n) == a);
      REQUIRE(content_of(n) == content_of(w));
    }
  }
}

TEST_CASE("normal forms agree with the rewriting oracle up to length 7") {
  std::map<Content::map_type, std::vector<word_type>> by_content;
  for (auto const& w : test::all_words(3, 7)) {
    by_content[content_of(w).counts()].push_back(w);
  }
  std::size_t disagreements = 0;
  for (auto const& [c, words] : by_content) {
    for (auto const& u : words) {
      auto const cls = knuth_class(u);
      auto const a   = element_of(u);
      for (auto const& v : words) {
        if ((a == element_of(v)) != (cls.count(v) == 1)) {
          ++disagreements;
        }
      }
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("each class has exactly one row reading and one column reading") {
  std::set<word_type> done;
  for (auto const& w : test::all_words(3, 6)) {
    if (done.count(w)) {
      continue;
    }
    auto const cls = knuth_class(w);
    done.insert(cls.begin(), cls.end());
    std::size_t rows = 0, columns = 0;
    for (auto const& m : cls) {
      rows += is_row_reading(m);
      columns += is_column_reading(m);
    }
    REQUIRE(rows == 1);
    REQUIRE(columns == 1);
    auto const t = tableau_of_word(w);
    CHECK(cls.count(row_reading(t)) == 1);
    CHECK(cls.count(column_reading(t)) == 1);
  }
}

TEST_CASE("monoid laws on random elements") {
  test::rng_type rng(3);
  for (int i = 0; i < 500; ++i) {
    auto const a = element_of(test::random_word(rng, 8, 5));
    auto const b = element_of(test::random_word(rng, 8, 5));
    auto const c = element_of(test::random_word(rng, 8, 5));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).content() == a.content() + b.content());
    word_type ab = a.normal_form();
    ab.insert(ab.end(), b.normal_form().begin(), b.normal_form().end());
    CHECK(a * b == element_of(ab));
  }
}
