#include "plactic/monoid.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <unordered_set>

#include "plactic/errors.hpp"

namespace plactic {

  Element Element::from_normal_form(word_type w) {
    // Validates; the tableau itself is not kept.
    static_cast<void>(Tableau::from_row_reading(w));
    return Element(std::move(w));
  }

  Tableau Element::tableau() const {
    return Tableau::from_row_reading(_normal_form);
  }

  Element element_of(word_type const& w) {
    return element_of(tableau_of_word(w));
  }

  Element element_of(Tableau const& t) {
    return Element(row_reading(t));
  }

  Element multiply(Element const& a, Element const& b) {
    if (a.is_identity()) {
      return b;
    }
    if (b.is_identity()) {
      return a;
    }
    Tableau t = a.tableau();
    for (auto x : b.normal_form()) {
      t.insert(x);
    }
    return element_of(t);
  }

  Element power(Element const& a, std::size_t k) {
    Element result;
    for (std::size_t i = 0; i < k; ++i) {
      result = multiply(result, a);
    }
    return result;
  }

  Element column_generator(letter_type i, letter_type n) {
    if (i < 1 || i > n) {
      throw DomainError("column generator index " + std::to_string(i)
                        + " outside 1.." + std::to_string(n));
    }
    word_type w;
    w.reserve(n - i + 1);
    for (letter_type x = n; x >= i; --x) {
      w.push_back(x);
    }
    return Element::from_normal_form(std::move(w));
  }

  bool is_row(word_type const& w) noexcept {
    return std::is_sorted(w.begin(), w.end());
  }

  bool is_column(word_type const& w) noexcept {
    return std::adjacent_find(w.begin(), w.end(), std::less_equal<>())
           == w.end();
  }

  ////////////////////////////////////////////////////////////////////////
  // Knuth rewriting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // min(a, b) <= c < max(a, b)
    bool front_applies(letter_type a, letter_type b, letter_type c) {
      return std::min(a, b) <= c && c < std::max(a, b);
    }

    // min(b, c) < a <= max(b, c)
    bool back_applies(letter_type a, letter_type b, letter_type c) {
      return std::min(b, c) < a && a <= std::max(b, c);
    }
  }  // namespace

  std::vector<KnuthRelationInstance>
  knuth_relation_instances(word_type const& w) {
    std::vector<KnuthRelationInstance> result;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      if (front_applies(w[i], w[i + 1], w[i + 2])) {
        result.push_back({i, KnuthSchema::swap_front});
      }
      if (back_applies(w[i], w[i + 1], w[i + 2])) {
        result.push_back({i, KnuthSchema::swap_back});
      }
    }
    return result;
  }

  word_type apply(word_type w, KnuthRelationInstance const& r) {
    if (r.position + 2 >= w.size()) {
      throw DomainError("relation window exceeds the word");
    }
    auto const i = r.position;
    if (r.schema == KnuthSchema::swap_front) {
      if (!front_applies(w[i], w[i + 1], w[i + 2])) {
        throw PreconditionError("xzy <-> zxy does not apply at position "
                                + std::to_string(i));
      }
      std::swap(w[i], w[i + 1]);
    } else {
      if (!back_applies(w[i], w[i + 1], w[i + 2])) {
        throw PreconditionError("yxz <-> yzx does not apply at position "
                                + std::to_string(i));
      }
      std::swap(w[i + 1], w[i + 2]);
    }
    return w;
  }

  std::set<word_type> knuth_neighbors(word_type const& w) {
    std::set<word_type> result;
    for (auto const& r : knuth_relation_instances(w)) {
      result.insert(apply(w, r));
    }
    return result;
  }

  std::set<word_type> knuth_class(word_type const& w, std::size_t max_size) {
    std::unordered_set<word_type, WordHash> seen{w};
    std::deque<word_type>                   queue{w};
    while (!queue.empty()) {
      word_type current = std::move(queue.front());
      queue.pop_front();
      for (auto const& r : knuth_relation_instances(current)) {
        word_type next = apply(current, r);
        if (seen.insert(next).second) {
          if (seen.size() > max_size) {
            throw BudgetExceeded("Knuth class of \"" + format_word(w)
                                 + "\" exceeds the budget of "
                                 + std::to_string(max_size) + " words");
          }
          queue.push_back(std::move(next));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::ostream& operator<<(std::ostream& os, Element const& a) {
    return os << format_word(a.normal_form());
  }

}  // namespace plactic
