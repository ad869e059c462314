#pragma once

#include "plactic/monoid.hpp"
#include "plactic/word.hpp"

namespace plactic {

  // The rank n of a finite plactic monoid over {1, ..., n}. The involution
  // depends on n, so it always needs one of these.
  class RankContext {
   public:
    // Throws DomainError if n == 0.
    explicit RankContext(letter_type n);

    // Smallest context containing every letter of w (and at least rank 1).
    static RankContext covering(word_type const& w);

    [[nodiscard]] letter_type n() const noexcept {
      return _n;
    }

    // Throws DomainError if w has a letter outside {1, ..., n}.
    void check(word_type const& w) const;

   private:
    letter_type _n;
  };

  // Reverses w and maps each letter k to n - k + 1.
  [[nodiscard]] word_type theta_word(word_type const& w, RankContext ctx);

  // The Schützenberger involution on P_n: theta_word of the normal form,
  // renormalized. Anti-automorphism and self-inverse.
  [[nodiscard]] Element theta_element(Element const& a, RankContext ctx);

}  // namespace plactic
