#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace plactic {

  // Default state budget for knuth_class.
  inline constexpr std::size_t default_class_budget = 100'000;

  // An element of the plactic monoid (of any rank), i.e. a class of words
  // modulo the Knuth relations. Represented by its normal form: the row
  // reading of the unique tableau in the class.
  class Element {
   public:
    // The identity (empty word).
    Element() = default;

    // Wraps a word that is already the row reading of a tableau. Throws
    // InvalidTableau otherwise. Use element_of for arbitrary words.
    static Element from_normal_form(word_type w);

    [[nodiscard]] word_type const& normal_form() const noexcept {
      return _normal_form;
    }

    [[nodiscard]] Content const& content() const noexcept {
      return _content;
    }

    // Largest letter, 0 for the identity.
    [[nodiscard]] letter_type rank() const noexcept {
      return _content.rank();
    }

    [[nodiscard]] std::size_t length() const noexcept {
      return _normal_form.size();
    }

    [[nodiscard]] bool is_identity() const noexcept {
      return _normal_form.empty();
    }

    [[nodiscard]] Tableau tableau() const;

    friend bool operator==(Element const& a, Element const& b) noexcept {
      return a._normal_form == b._normal_form;
    }

    friend bool operator<(Element const& a, Element const& b) noexcept {
      return a._normal_form < b._normal_form;
    }

   private:
    friend Element element_of(Tableau const& t);

    explicit Element(word_type nf)
        : _normal_form(std::move(nf)), _content(content_of(_normal_form)) {}

    word_type _normal_form;
    Content   _content;
  };

  [[nodiscard]] Element element_of(word_type const& w);
  [[nodiscard]] Element element_of(Tableau const& t);

  // Normal form of the concatenation of the normal forms of a and b,
  // computed by inserting b's letters into a's tableau.
  [[nodiscard]] Element multiply(Element const& a, Element const& b);

  inline Element operator*(Element const& a, Element const& b) {
    return multiply(a, b);
  }

  [[nodiscard]] inline bool equals(Element const& a, Element const& b) {
    return a == b;
  }

  // a^k, with a^0 the identity.
  [[nodiscard]] Element power(Element const& a, std::size_t k);

  // The column n, n-1, ..., i. Throws DomainError unless 1 <= i <= n.
  [[nodiscard]] Element column_generator(letter_type i, letter_type n);

  // Weakly increasing.
  [[nodiscard]] bool is_row(word_type const& w) noexcept;

  // Strictly decreasing.
  [[nodiscard]] bool is_column(word_type const& w) noexcept;

  ////////////////////////////////////////////////////////////////////////
  // Knuth rewriting
  ////////////////////////////////////////////////////////////////////////

  // The two Knuth schemas. Both act on a window of three consecutive letters:
  //
  //   swap_front:  xzy <-> zxy  when x <= y < z (the first two letters swap)
  //   swap_back:   yxz <-> yzx  when x < y <= z (the last two letters swap)
  //
  // Each schema is symmetric in the pair it swaps, so a single test per
  // window covers both directions.
  enum class KnuthSchema { swap_front, swap_back };

  struct KnuthRelationInstance {
    std::size_t position;  // index of the first letter of the window
    KnuthSchema schema;
  };

  // Every way of applying one Knuth relation to w.
  [[nodiscard]] std::vector<KnuthRelationInstance>
  knuth_relation_instances(word_type const& w);

  // w with the relation instance applied.
  [[nodiscard]] word_type apply(word_type w, KnuthRelationInstance const& r);

  // All words reachable from w by one Knuth relation.
  [[nodiscard]] std::set<word_type> knuth_neighbors(word_type const& w);

  // The Knuth class of w by breadth-first closure under knuth_neighbors.
  // Independent of Schensted insertion, so it serves as an oracle for the
  // normal forms. Throws BudgetExceeded once more than max_size words have
  // been discovered.
  [[nodiscard]] std::set<word_type>
  knuth_class(word_type const& w, std::size_t max_size = default_class_budget);

  std::ostream& operator<<(std::ostream& os, Element const& a);

  // FNV-1a over the letters, for unordered containers of words.
  struct WordHash {
    std::size_t operator()(word_type const& w) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto x : w) {
        h = (h ^ x) * 0x100000001b3ULL;
      }
      return h;
    }
  };

}  // namespace plactic
