#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "plactic/errors.hpp"
#include "plactic/involution.hpp"
#include "plactic/monoid.hpp"
#include "plactic/tableau.hpp"
#include "plactic/word.hpp"

namespace plactic::cli {

  using nlohmann::json;

  namespace {
    enum class Format { text, json };

    std::string separated(word_type const& w) {
      return format_word(w, WordStyle::separated);
    }

    std::string separated(Element const& a) {
      return separated(a.normal_form());
    }

    Element element_field(json const& j, char const* key) {
      if (!j.contains(key) || !j[key].is_string()) {
        throw ParseError(std::string("witness is missing the word field \"")
                         + key + "\"");
      }
      return element_of(parse_word(j[key].get<std::string>()));
    }

    std::size_t class_budget() {
      char const* env = std::getenv("PLACTIC_CLASS_BUDGET");
      if (env == nullptr || *env == '\0') {
        return default_class_budget;
      }
      std::string const text(env);
      if (!std::all_of(text.begin(), text.end(), [](char c) {
            return c >= '0' && c <= '9';
          })) {
        throw ParseError("PLACTIC_CLASS_BUDGET must be a positive integer, got \""
                         + text + "\"");
      }
      auto const budget = std::stoull(text);
      if (budget == 0) {
        throw ParseError("PLACTIC_CLASS_BUDGET must be positive");
      }
      return budget;
    }

    // Expands a single "-" argument into the words read from in.
    std::vector<word_type> gather_words(std::vector<std::string> const& args,
                                        std::istream&                   in) {
      if (std::count(args.begin(), args.end(), "-") > 1) {
        throw ParseError("\"-\" may appear at most once");
      }
      std::vector<word_type> words;
      for (auto const& a : args) {
        if (a == "-") {
          auto more = read_words(in);
          words.insert(words.end(), std::make_move_iterator(more.begin()),
                       std::make_move_iterator(more.end()));
        } else {
          words.push_back(parse_word(a));
        }
      }
      return words;
    }

    void require_count(std::vector<word_type> const& words,
                       std::size_t                   expected,
                       std::string const&            verb) {
      if (words.size() != expected) {
        throw ParseError(verb + " takes exactly " + std::to_string(expected)
                         + " words, got " + std::to_string(words.size()));
      }
    }

    void require_some(std::vector<word_type> const& words,
                      std::string const&            verb) {
      if (words.empty()) {
        throw ParseError(verb + " needs at least one word");
      }
    }

    // The rank to work in: --rank if given (checked against the letters),
    // otherwise the largest letter of the inputs, and at least 1.
    letter_type resolve_rank(std::vector<word_type> const& words,
                             std::optional<letter_type>    requested) {
      letter_type max_letter = 0;
      for (auto const& w : words) {
        max_letter = std::max(max_letter, rank_of(w));
      }
      if (!requested) {
        return std::max<letter_type>(max_letter, 1);
      }
      if (*requested == 0) {
        throw DomainError("--rank must be at least 1");
      }
      if (*requested < max_letter) {
        throw DomainError("--rank " + std::to_string(*requested)
                          + " is smaller than the largest letter "
                          + std::to_string(max_letter));
      }
      return *requested;
    }

    void print_witness_text(std::ostream& out, WitnessPair const& w) {
      out << "equation: " << to_string(w.equation) << '\n'
          << "left: " << format_word(w.left.normal_form()) << '\n'
          << "right: " << format_word(w.right.normal_form()) << '\n'
          << "common: " << format_word(w.common_value.normal_form()) << '\n'
          << "rank: " << w.rank << '\n';
    }

    json tableau_rows_json(Tableau const& t) {
      json rows = json::array();
      for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) {
        rows.push_back(*it);
      }
      return rows;
    }

    json content_json(word_type const& w) {
      auto const c      = content_of(w);
      json       counts = json::object();
      for (auto const& [x, k] : c.counts()) {
        counts[std::to_string(x)] = k;
      }
      return {{"word", separated(w)},
              {"counts", counts},
              {"rank", c.rank()},
              {"length", c.length()}};
    }

    std::string read_all(std::istream& in) {
      return {std::istreambuf_iterator<char>(in),
              std::istreambuf_iterator<char>()};
    }
  }  // namespace

  json witness_to_json(WitnessPair const& w, Element const& u, Element const& v) {
    return {{"equation", std::string(to_string(w.equation))},
            {"left", separated(w.left)},
            {"right", separated(w.right)},
            {"common", separated(w.common_value)},
            {"rank", w.rank},
            {"u", separated(u)},
            {"v", separated(v)}};
  }

  WitnessRecord witness_from_json(json const& j) {
    if (!j.is_object()) {
      throw ParseError("witness must be a JSON object");
    }
    if (!j.contains("equation") || !j["equation"].is_string()) {
      throw ParseError("witness is missing \"equation\"");
    }
    auto const eq = equation_from_string(j["equation"].get<std::string>());
    if (!eq) {
      throw ParseError("unknown equation \"" + j["equation"].get<std::string>()
                       + "\"");
    }
    if (!j.contains("rank") || !j["rank"].is_number_unsigned()) {
      throw ParseError("witness is missing a nonnegative integer \"rank\"");
    }
    WitnessRecord r{WitnessPair{*eq,
                                element_field(j, "left"),
                                element_field(j, "right"),
                                element_field(j, "common"),
                                j["rank"].get<letter_type>()},
                    std::nullopt,
                    std::nullopt};
    if (j.contains("u")) {
      r.u = element_field(j, "u");
    }
    if (j.contains("v")) {
      r.v = element_field(j, "v");
    }
    return r;
  }

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Plactic monoid normal forms, involution and ideal-intersection "
                 "witnesses"};
    app.name("plactic");
    app.require_subcommand(1);

    std::vector<std::string>   words_arg;
    std::optional<letter_type> rank;
    bool                       normalize_theta = false;
    std::map<std::string, Format> const formats{{"text", Format::text},
                                                {"json", Format::json}};

    struct Verb {
      CLI::App* app;
      Format    format;
    };
    std::map<std::string, Verb> verbs;

    auto add_verb = [&](std::string const& name,
                        std::string const& description,
                        Format             default_format,
                        bool               takes_rank) {
      auto* sub = app.add_subcommand(name, description);
      verbs.emplace(name, Verb{sub, default_format});
      sub->add_option("words", words_arg,
                      "Words: compact digits (\"3241\") or separated integers "
                      "(\"10 2 10\"); \"-\" reads one word per line from stdin");
      sub->add_option("--format", verbs.at(name).format, "Output format")
          ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
      if (takes_rank) {
        sub->add_option("--rank,-n", rank,
                        "Rank n of P_n (default: largest letter)");
      }
      return sub;
    };

    add_verb("normalize", "Row-reading normal form of each word", Format::text,
             false);
    add_verb("multiply", "Product of two elements", Format::text, false);
    add_verb("equal", "Exit 0 if two words are Knuth equivalent, 1 otherwise",
             Format::text, false);
    add_verb("content", "Letter counts of each word", Format::text, false);
    add_verb("tableau", "Tableau of each word, top row first", Format::text,
             false);
    add_verb("involute", "Schützenberger involution of each word",
             Format::text, true)
        ->add_flag("--normalize", normalize_theta,
                   "Print the normal form of the result");
    add_verb("solve-left", "Solve X u = Y v", Format::json, true);
    add_verb("solve-right", "Solve u X = v Y", Format::json, true);
    add_verb("solve-mixed", "Solve u X = Y v", Format::json, true);
    add_verb("class", "List the Knuth class of each word "
                      "(budget: PLACTIC_CLASS_BUDGET)",
             Format::text, false);
    add_verb("verify",
             "Check a witness read as JSON from FILE or stdin; exit 0 if valid, "
             "1 if not. Usage: verify [U V] [FILE]",
             Format::text, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? ok : failure;
    }

    try {
      std::string name;
      Verb        verb{nullptr, Format::text};
      for (auto const& [n, v] : verbs) {
        if (v.app->parsed()) {
          name = n;
          verb = v;
        }
      }
      bool const as_json = verb.format == Format::json;

      if (name == "verify") {
        std::vector<std::string> pos(words_arg);
        std::optional<std::string> file;
        if (pos.size() == 1 || pos.size() == 3) {
          file = pos.back();
          pos.pop_back();
        }
        if (pos.size() != 0 && pos.size() != 2) {
          throw ParseError("verify takes [U V] [FILE]");
        }
        std::string text;
        if (file && *file != "-") {
          std::ifstream f(*file);
          if (!f) {
            throw ParseError("cannot open \"" + *file + "\"");
          }
          text = read_all(f);
        } else {
          text = read_all(in);
        }
        auto record = witness_from_json(json::parse(text));
        if (pos.size() == 2) {
          record.u = element_of(parse_word(pos[0]));
          record.v = element_of(parse_word(pos[1]));
        }
        if (!record.u || !record.v) {
          throw ParseError("verify needs u and v, in the JSON or as arguments");
        }
        bool const valid = verify_witness(record.witness, *record.u, *record.v);
        if (as_json) {
          out << json{{"valid", valid}}.dump() << '\n';
        } else {
          out << (valid ? "valid" : "invalid") << '\n';
        }
        return valid ? ok : negative;
      }

      auto const words = gather_words(words_arg, in);

      if (name == "normalize") {
        require_some(words, name);
        for (auto const& w : words) {
          auto const a = element_of(w);
          if (as_json) {
            out << json{{"word", separated(w)},
                        {"normal_form", separated(a)}}
                       .dump()
                << '\n';
          } else {
            out << format_word(a.normal_form()) << '\n';
          }
        }
        return ok;
      }

      if (name == "multiply") {
        require_count(words, 2, name);
        auto const p = element_of(words[0]) * element_of(words[1]);
        if (as_json) {
          out << json{{"u", separated(words[0])},
                      {"v", separated(words[1])},
                      {"product", separated(p)}}
                     .dump()
              << '\n';
        } else {
          out << format_word(p.normal_form()) << '\n';
        }
        return ok;
      }

      if (name == "equal") {
        require_count(words, 2, name);
        auto const a  = element_of(words[0]);
        auto const b  = element_of(words[1]);
        bool const eq = a == b;
        if (as_json) {
          out << json{{"u", separated(words[0])},
                      {"v", separated(words[1])},
                      {"u_normal_form", separated(a)},
                      {"v_normal_form", separated(b)},
                      {"equal", eq}}
                     .dump()
              << '\n';
        } else {
          out << (eq ? "equal" : "not equal") << '\n';
        }
        return eq ? ok : negative;
      }

      if (name == "content") {
        require_some(words, name);
        for (auto const& w : words) {
          if (as_json) {
            out << content_json(w).dump() << '\n';
          } else {
            out << content_of(w) << '\n';
          }
        }
        return ok;
      }

      if (name == "tableau") {
        require_some(words, name);
        bool first = true;
        for (auto const& w : words) {
          auto const t = tableau_of_word(w);
          if (as_json) {
            out << json{{"word", separated(w)},
                        {"rows", tableau_rows_json(t)},
                        {"row_reading", separated(row_reading(t))},
                        {"column_reading", separated(column_reading(t))}}
                       .dump()
                << '\n';
          } else {
            out << (first ? "" : "\n") << t;
          }
          first = false;
        }
        return ok;
      }

      if (name == "involute") {
        require_some(words, name);
        RankContext const ctx(resolve_rank(words, rank));
        for (auto const& w : words) {
          auto const theta = theta_word(w, ctx);
          auto const nf    = element_of(theta).normal_form();
          if (as_json) {
            out << json{{"word", separated(w)},
                        {"rank", ctx.n()},
                        {"theta", separated(theta)},
                        {"normal_form", separated(nf)}}
                       .dump()
                << '\n';
          } else {
            out << format_word(normalize_theta ? nf : theta) << '\n';
          }
        }
        return ok;
      }

      if (name == "solve-left" || name == "solve-right"
          || name == "solve-mixed") {
        require_count(words, 2, name);
        auto const  n = resolve_rank(words, rank);
        auto const  u = element_of(words[0]);
        auto const  v = element_of(words[1]);
        WitnessPair w = name == "solve-left"    ? solve_left(u, v, n)
                        : name == "solve-right" ? solve_right(u, v, n)
                                                : solve_mixed(u, v);
        if (name == "solve-mixed") {
          w.rank = n;
        }
        if (as_json) {
          out << witness_to_json(w, u, v).dump() << '\n';
        } else {
          print_witness_text(out, w);
        }
        return ok;
      }

      if (name == "class") {
        require_some(words, name);
        auto const budget = class_budget();
        for (auto const& w : words) {
          auto const members = knuth_class(w, budget);
          if (as_json) {
            json list = json::array();
            for (auto const& m : members) {
              list.push_back(separated(m));
            }
            out << json{{"word", separated(w)},
                        {"size", members.size()},
                        {"members", list}}
                       .dump()
                << '\n';
          } else {
            for (auto const& m : members) {
              out << format_word(m) << '\n';
            }
          }
        }
        return ok;
      }

      throw ParseError("unknown command");
    } catch (Error const& e) {
      err << "plactic: error: " << e.what() << '\n';
    } catch (json::exception const& e) {
      err << "plactic: error: malformed JSON: " << e.what() << '\n';
    } catch (std::exception const& e) {
      err << "plactic: error: " << e.what() << '\n';
    }
    return failure;
  }

}  // namespace plactic::cli
