#include "plactic/batch.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include "plactic/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plactic {

  namespace {
    WitnessPair solve_one(ElementPair const& p, Equation eq, letter_type rank) {
      auto const& [u, v] = p;
      switch (eq) {
        case Equation::left_ideals:
          return rank == 0 ? solve_infinite(u, v, Side::left)
                           : solve_left(u, v, rank);
        case Equation::right_ideals:
          return rank == 0 ? solve_infinite(u, v, Side::right)
                           : solve_right(u, v, rank);
        case Equation::mixed:
          return solve_mixed(u, v);
      }
      throw DomainError("unknown equation");
    }

    void check_sizes(std::size_t witnesses, std::size_t pairs) {
      if (witnesses != pairs) {
        throw PreconditionError("got " + std::to_string(witnesses)
                                + " witnesses for " + std::to_string(pairs)
                                + " pairs");
      }
    }

    // Runs body(i) for i in [0, n) across threads. The first exception
    // thrown by any iteration is rethrown once the loop has finished.
    template <typename Body>
    void parallel_for(std::size_t n, Body&& body) {
      std::exception_ptr error;
      std::mutex         error_mutex;
      auto const         count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
          body(static_cast<std::size_t>(i));
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }
  }  // namespace

  namespace serial {
    std::vector<Element> normalize(std::span<word_type const> words) {
      std::vector<Element> result;
      result.reserve(words.size());
      for (auto const& w : words) {
        result.push_back(element_of(w));
      }
      return result;
    }

    std::vector<WitnessPair>
    solve(std::span<ElementPair const> pairs, Equation eq, letter_type rank) {
      std::vector<WitnessPair> result;
      result.reserve(pairs.size());
      for (auto const& p : pairs) {
        result.push_back(solve_one(p, eq, rank));
      }
      return result;
    }

    std::size_t count_failures(std::span<WitnessPair const> witnesses,
                               std::span<ElementPair const> pairs) {
      check_sizes(witnesses.size(), pairs.size());
      std::size_t failures = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!verify_witness(witnesses[i], pairs[i].first, pairs[i].second)) {
          ++failures;
        }
      }
      return failures;
    }
  }  // namespace serial

  namespace parallel {
    std::vector<Element> normalize(std::span<word_type const> words) {
      std::vector<Element> result(words.size());
      parallel_for(words.size(),
                   [&](std::size_t i) { result[i] = element_of(words[i]); });
      return result;
    }

    std::vector<WitnessPair>
    solve(std::span<ElementPair const> pairs, Equation eq, letter_type rank) {
      // WitnessPair has no default constructor worth using; fill with
      // placeholders and overwrite.
      std::vector<WitnessPair> result(
          pairs.size(), WitnessPair{eq, Element(), Element(), Element(), 0});
      parallel_for(pairs.size(), [&](std::size_t i) {
        result[i] = solve_one(pairs[i], eq, rank);
      });
      return result;
    }

    std::size_t count_failures(std::span<WitnessPair const> witnesses,
                               std::span<ElementPair const> pairs) {
      check_sizes(witnesses.size(), pairs.size());
      std::size_t failures = 0;
      auto const  count    = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : failures)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        auto const k = static_cast<std::size_t>(i);
        if (!verify_witness(witnesses[k], pairs[k].first, pairs[k].second)) {
          ++failures;
        }
      }
      return failures;
    }

    int max_threads() noexcept {
#ifdef _OPENMP
      return omp_get_max_threads();
#else
      return 1;
#endif
    }
  }  // namespace parallel

}  // namespace plactic
