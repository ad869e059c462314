#include "plactic/reversibility.hpp"

#include <algorithm>
#include <string>

#include "plactic/errors.hpp"
#include "plactic/involution.hpp"

namespace plactic {

  namespace {
    void check_rank(Element const& a, letter_type n, char const* name) {
      if (n == 0) {
        throw DomainError("rank must be at least 1");
      }
      if (a.rank() > n) {
        throw DomainError(std::string(name) + " contains the letter "
                          + std::to_string(a.rank()) + " outside 1.."
                          + std::to_string(n));
      }
    }
  }  // namespace

  std::string_view to_string(Equation eq) noexcept {
    switch (eq) {
      case Equation::left_ideals:
        return "Xu=Yv";
      case Equation::right_ideals:
        return "uX=vY";
      case Equation::mixed:
        return "uX=Yv";
    }
    return "";
  }

  std::optional<Equation> equation_from_string(std::string_view name) noexcept {
    for (auto eq : {Equation::left_ideals, Equation::right_ideals,
                    Equation::mixed}) {
      if (to_string(eq) == name) {
        return eq;
      }
    }
    return std::nullopt;
  }

  Element column_product(std::vector<std::size_t> const& exponents) {
    auto const n = exponents.size();
    // Bottom row is row 1. Column f_i has height n - i + 1 and holds
    // i + r - 1 in row r.
    std::vector<Tableau::row_type> rows;
    for (std::size_t r = 1; r <= n; ++r) {
      Tableau::row_type row;
      for (std::size_t i = 1; i + r - 1 <= n; ++i) {
        row.insert(row.end(), exponents[i - 1],
                   static_cast<letter_type>(i + r - 1));
      }
      if (row.empty()) {
        break;
      }
      rows.push_back(std::move(row));
    }
    return element_of(Tableau::from_rows(std::move(rows)));
  }

  std::vector<std::size_t>
  product_exponents(std::vector<std::size_t> const& exponents,
                    Content const&                  u) {
    auto const n = exponents.size();
    if (u.rank() > n) {
      throw PreconditionError("content has letters beyond the rank "
                              + std::to_string(n));
    }
    std::vector<std::size_t> result(exponents);
    for (std::size_t i = 1; i <= n; ++i) {
      auto const x = static_cast<letter_type>(i);
      if (i < n && u[x] > exponents[i]) {
        throw PreconditionError(
            "exponent of f_" + std::to_string(i + 1) + " is "
            + std::to_string(exponents[i]) + " but the content has "
            + std::to_string(u[x]) + " copies of " + std::to_string(i));
      }
      result[i - 1] += u[x];
      if (i >= 2) {
        result[i - 1] -= u[x - 1];
      }
    }
    return result;
  }

  EqualContentWitness equal_content_witness(Element const& u,
                                            Element const& v,
                                            letter_type    n) {
    check_rank(u, n, "u");
    check_rank(v, n, "v");
    std::vector<std::size_t> exponents(n, 0);
    for (letter_type i = 2; i <= n; ++i) {
      exponents[i - 1] = u.content()[i - 1];
    }
    return equal_content_witness(u, v, exponents);
  }

  EqualContentWitness
  equal_content_witness(Element const&                  u,
                        Element const&                  v,
                        std::vector<std::size_t> const& exponents) {
    auto const n = static_cast<letter_type>(exponents.size());
    check_rank(u, n, "u");
    check_rank(v, n, "v");
    if (u.content() != v.content()) {
      throw PreconditionError("Xu = Xv needs u and v of equal content");
    }
    if (exponents[0] != 0) {
      throw PreconditionError("the exponent of f_1 must be 0");
    }
    for (letter_type i = 2; i <= n; ++i) {
      if (exponents[i - 1] < u.content()[i - 1]) {
        throw PreconditionError("the exponent of f_" + std::to_string(i)
                                + " must be at least the number of "
                                + std::to_string(i - 1) + "s in u");
      }
    }
    return {exponents, column_product(exponents)};
  }

  std::pair<Element, Element> content_equalizers(Element const& u,
                                                 Element const& v) {
    return {Element::from_normal_form(v.content().row_word()),
            Element::from_normal_form(u.content().row_word())};
  }

  WitnessPair solve_left(Element const& u, Element const& v, letter_type n) {
    check_rank(u, n, "u");
    check_rank(v, n, "v");
    auto const [alpha, beta] = content_equalizers(u, v);
    auto const alpha_u       = alpha * u;
    auto const beta_v        = beta * v;
    auto const x = equal_content_witness(alpha_u, beta_v, n).witness;
    return {Equation::left_ideals, x * alpha, x * beta, x * alpha_u, n};
  }

  WitnessPair solve_right(Element const& u, Element const& v, letter_type n) {
    check_rank(u, n, "u");
    check_rank(v, n, "v");
    RankContext const ctx(n);
    auto const        dual
        = solve_left(theta_element(u, ctx), theta_element(v, ctx), n);
    return {Equation::right_ideals,
            theta_element(dual.left, ctx),
            theta_element(dual.right, ctx),
            theta_element(dual.common_value, ctx),
            n};
  }

  WitnessPair solve_mixed(Element const& u, Element const& v) {
    return {Equation::mixed, v, u, u * v, std::max(u.rank(), v.rank())};
  }

  WitnessPair solve_infinite(Element const& u, Element const& v, Side side) {
    letter_type const n = std::max({u.rank(), v.rank(), letter_type(1)});
    return side == Side::left ? solve_left(u, v, n) : solve_right(u, v, n);
  }

  bool verify_witness(WitnessPair const& w, Element const& u, Element const& v) {
    for (auto const* a : {&u, &v, &w.left, &w.right, &w.common_value}) {
      if (a->rank() > w.rank) {
        return false;
      }
    }
    Element lhs, rhs;
    switch (w.equation) {
      case Equation::left_ideals:
        lhs = w.left * u;
        rhs = w.right * v;
        break;
      case Equation::right_ideals:
        lhs = u * w.left;
        rhs = v * w.right;
        break;
      case Equation::mixed:
        lhs = u * w.left;
        rhs = w.right * v;
        break;
      default:
        return false;
    }
    return lhs == rhs && lhs == w.common_value;
  }

}  // namespace plactic
