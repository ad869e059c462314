#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "plactic/reversibility.hpp"

namespace plactic::cli {

  // Exit codes.
  inline constexpr int ok       = 0;
  inline constexpr int negative = 1;  // `equal`: unequal, `verify`: invalid
  inline constexpr int failure  = 2;

  // A witness as read back from JSON. u and v are optional in the input
  // because they may be given on the command line instead.
  struct WitnessRecord {
    WitnessPair            witness;
    std::optional<Element> u;
    std::optional<Element> v;
  };

  // {"equation", "left", "right", "common", "rank", "u", "v"}, with every
  // word in separated form.
  [[nodiscard]] nlohmann::json witness_to_json(WitnessPair const& w,
                                               Element const&     u,
                                               Element const&     v);

  // Throws plactic::ParseError on a malformed or incomplete record.
  [[nodiscard]] WitnessRecord witness_from_json(nlohmann::json const& j);

  // Runs one command. args excludes the program name. Reads stdin words
  // (for `-`) and witness JSON from in.
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace plactic::cli
