#include "plactic/word.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

#include "plactic/errors.hpp"

namespace plactic {

  namespace {
    bool is_separator(char c) {
      return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'
             || c == '\v' || c == '\f';
    }

    bool all_digits(std::string_view s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return c >= '0' && c <= '9';
      });
    }

    std::vector<std::string_view> tokenize(std::string_view text) {
      std::vector<std::string_view> tokens;
      std::size_t                   i = 0;
      while (i < text.size()) {
        while (i < text.size() && is_separator(text[i])) {
          ++i;
        }
        std::size_t const start = i;
        while (i < text.size() && !is_separator(text[i])) {
          ++i;
        }
        if (i > start) {
          tokens.push_back(text.substr(start, i - start));
        }
      }
      return tokens;
    }

    letter_type parse_letter(std::string_view token) {
      letter_type value = 0;
      auto const* first = token.data();
      auto const* last  = token.data() + token.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (!all_digits(token) || ec != std::errc() || ptr != last) {
        throw ParseError("invalid letter \"" + std::string(token)
                         + "\": expected a positive integer");
      }
      if (value == 0) {
        throw ParseError("invalid letter \"" + std::string(token)
                         + "\": letters start at 1");
      }
      return value;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Content
  ////////////////////////////////////////////////////////////////////////

  Content::Content(map_type counts) {
    for (auto const& [x, k] : counts) {
      add(x, k);
    }
  }

  std::size_t Content::operator[](letter_type x) const {
    auto it = _counts.find(x);
    return it == _counts.end() ? 0 : it->second;
  }

  void Content::add(letter_type x, std::size_t count) {
    if (x == 0) {
      throw DomainError("letters start at 1, found 0");
    }
    if (count == 0) {
      return;
    }
    _counts[x] += count;
    _length += count;
  }

  word_type Content::row_word() const {
    word_type w;
    w.reserve(_length);
    for (auto const& [x, k] : _counts) {
      w.insert(w.end(), k, x);
    }
    return w;
  }

  Content& Content::operator+=(Content const& that) {
    for (auto const& [x, k] : that._counts) {
      add(x, k);
    }
    return *this;
  }

  std::ostream& operator<<(std::ostream& os, Content const& c) {
    bool first = true;
    for (auto const& [x, k] : c.counts()) {
      os << (first ? "" : " ") << x << ':' << k;
      first = false;
    }
    return os;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  word_type parse_word(std::string_view text) {
    auto const tokens = tokenize(text);
    word_type  w;
    bool const has_comma = text.find(',') != std::string_view::npos;
    if (tokens.size() == 1 && !has_comma && all_digits(tokens[0])) {
      for (char c : tokens[0]) {
        if (c == '0') {
          throw ParseError("invalid letter \"0\" in \"" + std::string(tokens[0])
                           + "\": letters start at 1");
        }
        w.push_back(static_cast<letter_type>(c - '0'));
      }
      return w;
    }
    w.reserve(tokens.size());
    for (auto token : tokens) {
      w.push_back(parse_letter(token));
    }
    return w;
  }

  std::string format_word(word_type const& w, WordStyle style) {
    std::string out;
    if (style == WordStyle::compact) {
      out.reserve(w.size());
      for (auto x : w) {
        if (x == 0 || x > 9) {
          throw FormatError("letter " + std::to_string(x)
                            + " has no compact (single digit) form");
        }
        out.push_back(static_cast<char>('0' + x));
      }
      return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out.push_back(' ');
      }
      out += std::to_string(w[i]);
    }
    // A lone multi-digit token would read back as a compact word.
    if (w.size() == 1 && w[0] > 9) {
      out.push_back(',');
    }
    return out;
  }

  std::string format_word(word_type const& w) {
    bool const compact = std::all_of(
        w.begin(), w.end(), [](letter_type x) { return x >= 1 && x <= 9; });
    return format_word(w, compact ? WordStyle::compact : WordStyle::separated);
  }

  Content content_of(word_type const& w) {
    Content c;
    for (auto x : w) {
      c.add(x);
    }
    return c;
  }

  letter_type rank_of(word_type const& w) noexcept {
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  }

  void validate_word(word_type const& w) {
    if (std::find(w.begin(), w.end(), letter_type(0)) != w.end()) {
      throw DomainError("letters start at 1, found 0");
    }
  }

  std::vector<word_type> read_words(std::istream& in) {
    std::vector<word_type> words;
    std::string            line;
    while (std::getline(in, line)) {
      auto const first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] == '#') {
        continue;
      }
      words.push_back(parse_word(line));
    }
    return words;
  }

}  // namespace plactic
