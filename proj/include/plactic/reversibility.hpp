#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "plactic/monoid.hpp"

namespace plactic {

  // The word equations whose solutions witness that two principal ideals
  // intersect.
  enum class Equation {
    left_ideals,   // X u = Y v, so Mu and Mv intersect
    right_ideals,  // u X = v Y, so uM and vM intersect
    mixed          // u X = Y v, so uM and Mv intersect
  };

  // "Xu=Yv", "uX=vY" or "uX=Yv".
  [[nodiscard]] std::string_view to_string(Equation eq) noexcept;

  // Inverse of to_string; std::nullopt for unknown names.
  [[nodiscard]] std::optional<Equation> equation_from_string(
      std::string_view name) noexcept;

  // A solution (X, Y) = (left, right) of `equation` for some pair u, v,
  // together with the common value of both sides. `rank` is the n of the
  // finite monoid P_n the solution was built in.
  struct WitnessPair {
    Equation    equation;
    Element     left;
    Element     right;
    Element     common_value;
    letter_type rank;
  };

  // X = f_1^{x_1} f_2^{x_2} ... f_n^{x_n}, a product of the column generators
  // f_i = n (n-1) ... i, with Xu = Xv.
  struct EqualContentWitness {
    std::vector<std::size_t> exponents;  // x_1, ..., x_n
    Element                  witness;
  };

  // The element f_1^{e_1} ... f_n^{e_n} with n = exponents.size(), built
  // directly as the tableau whose columns are those generators, without any
  // insertion.
  [[nodiscard]] Element column_product(std::vector<std::size_t> const& exponents);

  // Exponents of Xu for X = f_1^{x_1} ... f_n^{x_n} when every letter i of u
  // can bump an i+1 from the bottom row of X, i.e. c_i(u) <= x_{i+1} for
  // i < n: x_1 + c_1(u), then x_i - c_{i-1}(u) + c_i(u) for i >= 2.
  // Throws PreconditionError if that bound fails or rank(u) > n.
  [[nodiscard]] std::vector<std::size_t>
  product_exponents(std::vector<std::size_t> const& exponents,
                    Content const&                  u);

  // Solves Xu = Xv for u, v of equal content in P_n, with the minimal
  // exponents x_1 = 0 and x_i = c_{i-1}(u) for i >= 2.
  //
  // Throws PreconditionError if the contents differ and DomainError if u or v
  // has a letter greater than n (or n == 0).
  [[nodiscard]] EqualContentWitness
  equal_content_witness(Element const& u, Element const& v, letter_type n);

  // As above with caller-chosen exponents, which must satisfy x_1 = 0 and
  // x_i >= c_{i-1}(u); exponents.size() is the rank.
  [[nodiscard]] EqualContentWitness
  equal_content_witness(Element const&                  u,
                        Element const&                  v,
                        std::vector<std::size_t> const& exponents);

  // (alpha, beta) with content(alpha u) = content(beta v): alpha is the row
  // with the content of v and beta the row with the content of u.
  [[nodiscard]] std::pair<Element, Element>
  content_equalizers(Element const& u, Element const& v);

  // Solves X u = Y v in P_n. With (alpha, beta) = content_equalizers(u, v)
  // and Z the equal content witness of (alpha u, beta v), returns
  // X = Z alpha and Y = Z beta.
  [[nodiscard]] WitnessPair solve_left(Element const& u,
                                       Element const& v,
                                       letter_type    n);

  // Solves u X = v Y in P_n by solving A theta(u) = B theta(v) and applying
  // the involution: u theta(A) = v theta(B).
  [[nodiscard]] WitnessPair solve_right(Element const& u,
                                        Element const& v,
                                        letter_type    n);

  // u X = Y v with X = v and Y = u.
  [[nodiscard]] WitnessPair solve_mixed(Element const& u, Element const& v);

  enum class Side { left, right };

  // Solves in the infinite rank monoid by working in P_n with n the largest
  // letter of u and v (at least 1); P_n embeds in P_N.
  [[nodiscard]] WitnessPair solve_infinite(Element const& u,
                                           Element const& v,
                                           Side           side);

  // Recomputes both sides of w.equation for (u, v) and checks that they agree
  // with each other and with w.common_value, and that no letter of u, v or the
  // witnesses exceeds w.rank.
  [[nodiscard]] bool verify_witness(WitnessPair const& w,
                                    Element const&     u,
                                    Element const&     v);

}  // namespace plactic
