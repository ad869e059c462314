#pragma once

// Generators and brute-force oracles shared by the test suites. Nothing
// here calls into Schensted insertion except through the public API being
// checked.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "plactic/monoid.hpp"
#include "plactic/reversibility.hpp"
#include "plactic/word.hpp"

namespace plactic::test {

  using rng_type = std::mt19937_64;

  inline word_type random_word(rng_type&   rng,
                               std::size_t max_length,
                               letter_type alphabet) {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<letter_type> letter(1, alphabet);
    word_type                                  w(len(rng));
    for (auto& x : w) {
      x = letter(rng);
    }
    return w;
  }

  inline word_type shuffled(word_type w, rng_type& rng) {
    std::shuffle(w.begin(), w.end(), rng);
    return w;
  }

  // Every word over {1, ..., alphabet} of length at most max_length.
  inline std::vector<word_type> all_words(letter_type alphabet,
                                          std::size_t max_length) {
    std::vector<word_type> result{{}};
    std::size_t            begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::size_t const end = result.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (letter_type x = 1; x <= alphabet; ++x) {
          auto w = result[i];
          w.push_back(x);
          result.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return result;
  }

  // Knuth equivalence decided by exhaustive rewriting only.
  inline bool knuth_equivalent(word_type const& u, word_type const& v) {
    if (u.size() != v.size() || content_of(u) != content_of(v)) {
      return false;
    }
    return knuth_class(u).count(v) == 1;
  }

  // f_1^{e_1} ... f_n^{e_n} computed by multiplying column generators, as
  // opposed to column_product which lays out the tableau directly.
  inline Element column_product_by_multiplication(
      std::vector<std::size_t> const& exponents) {
    auto const n = static_cast<letter_type>(exponents.size());
    Element    result;
    for (letter_type i = 1; i <= n; ++i) {
      result = result * power(column_generator(i, n), exponents[i - 1]);
    }
    return result;
  }

  // Runs prop on `trials` generated cases; returns the number that failed.
  template <typename Gen, typename Prop>
  std::size_t count_counterexamples(std::size_t trials, Gen&& gen, Prop&& prop) {
    std::size_t failures = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      if (!std::invoke(prop, std::invoke(gen))) {
        ++failures;
      }
    }
    return failures;
  }

}  // namespace plactic::test
