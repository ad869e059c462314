#pragma once

// Data-parallel drivers over many independent inputs. Every kernel has a
// serial reference in plactic::serial and an OpenMP version in
// plactic::parallel with identical signatures and results; without OpenMP
// the parallel versions run serially.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "plactic/monoid.hpp"
#include "plactic/reversibility.hpp"

namespace plactic {

  using ElementPair = std::pair<Element, Element>;

  namespace serial {
    [[nodiscard]] std::vector<Element> normalize(std::span<word_type const> words);

    // Solves `eq` for every pair. For the left and right ideal equations, a
    // rank of 0 selects the smallest rank covering each pair (the infinite
    // rank embedding); the mixed equation ignores rank.
    [[nodiscard]] std::vector<WitnessPair>
    solve(std::span<ElementPair const> pairs, Equation eq, letter_type rank = 0);

    // Number of witnesses failing verify_witness against their pair.
    [[nodiscard]] std::size_t
    count_failures(std::span<WitnessPair const> witnesses,
                   std::span<ElementPair const> pairs);
  }  // namespace serial

  namespace parallel {
    [[nodiscard]] std::vector<Element> normalize(std::span<word_type const> words);

    [[nodiscard]] std::vector<WitnessPair>
    solve(std::span<ElementPair const> pairs, Equation eq, letter_type rank = 0);

    [[nodiscard]] std::size_t
    count_failures(std::span<WitnessPair const> witnesses,
                   std::span<ElementPair const> pairs);

    // Threads an OpenMP parallel region would use; 1 without OpenMP.
    [[nodiscard]] int max_threads() noexcept;
  }  // namespace parallel

}  // namespace plactic
