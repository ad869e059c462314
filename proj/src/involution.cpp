#include "plactic/involution.hpp"

#include <algorithm>
#include <string>

#include "plactic/errors.hpp"

namespace plactic {

  RankContext::RankContext(letter_type n) : _n(n) {
    if (n == 0) {
      throw DomainError("rank must be at least 1");
    }
  }

  RankContext RankContext::covering(word_type const& w) {
    return RankContext(std::max<letter_type>(rank_of(w), 1));
  }

  void RankContext::check(word_type const& w) const {
    for (auto x : w) {
      if (x == 0 || x > _n) {
        throw DomainError("letter " + std::to_string(x) + " outside 1.."
                          + std::to_string(_n));
      }
    }
  }

  word_type theta_word(word_type const& w, RankContext ctx) {
    ctx.check(w);
    word_type result(w.rbegin(), w.rend());
    for (auto& x : result) {
      x = ctx.n() - x + 1;
    }
    return result;
  }

  Element theta_element(Element const& a, RankContext ctx) {
    return element_of(theta_word(a.normal_form(), ctx));
  }

}  // namespace plactic
