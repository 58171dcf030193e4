#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "olyndon/factorize.hpp"

// Text form of every value the CLI exchanges.
//   finite word          abba
//   eventually periodic  p(q), p possibly empty:  ab(ba)  (ab)
//   alphabet order       permutation string, smallest first:  ab
//   order scheme         comma-separated orders, optional preperiod before |:
//                        ab   ab,ba   ab|ba,ab
// Formatting always emits canonical values, so print-then-parse is identity.

namespace olyndon {

struct ParseError : InvalidInput {
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " (at position " + std::to_string(position + 1) + ")"),
        position(position) {}
  std::size_t position = 0;  // 0-based offset into the literal
};

inline FiniteWord parse_finite_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto idx = alphabet.index_of(text[i]);
    if (!idx) throw ParseError("character not in alphabet", i);
    letters.push_back(*idx);
  }
  return FiniteWord(std::move(letters));
}

inline EventuallyPeriodicWord parse_ev_periodic(std::string_view text, const Alphabet& alphabet) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) throw ParseError("expected '(' in p(q) literal", text.size());
  if (text.empty() || text.back() != ')')
    throw ParseError("expected ')' at end of p(q) literal", text.empty() ? 0 : text.size() - 1);
  const std::string_view period = text.substr(open + 1, text.size() - open - 2);
  if (period.find('(') != std::string_view::npos)
    throw ParseError("nested '(' in literal", open + 1 + period.find('('));
  if (period.empty()) throw ParseError("period must be nonempty", open + 1);
  FiniteWord pre = parse_finite_word(text.substr(0, open), alphabet);
  FiniteWord per = parse_finite_word(period, alphabet);  // offsets inside reported loosely
  return normalize(std::move(pre), std::move(per));
}

using WordLiteral = std::variant<FiniteWord, EventuallyPeriodicWord>;

/// Finite literal when no parentheses appear, p(q) literal otherwise.
inline WordLiteral parse_word_literal(std::string_view text, const Alphabet& alphabet) {
  if (text.find('(') == std::string_view::npos && text.find(')') == std::string_view::npos)
    return parse_finite_word(text, alphabet);
  return parse_ev_periodic(text, alphabet);
}

inline std::string format(const FiniteWord& w, const Alphabet& alphabet) {
  std::string out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(alphabet.symbol(a));
  return out;
}

inline std::string format(const EventuallyPeriodicWord& x, const Alphabet& alphabet) {
  return format(x.preperiod(), alphabet) + "(" + format(x.period(), alphabet) + ")";
}

inline AlphabetOrder parse_alphabet_order(std::string_view text, const Alphabet& alphabet) {
  if (text.size() != alphabet.size())
    throw ParseError("order must list every alphabet symbol exactly once", 0);
  std::vector<Letter> ranking;
  ranking.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto idx = alphabet.index_of(text[i]);
    if (!idx) throw ParseError("character not in alphabet", i);
    ranking.push_back(*idx);
  }
  return AlphabetOrder(std::move(ranking));  // rejects repeats
}

inline PositionalOrderScheme parse_scheme(std::string_view text, const Alphabet& alphabet) {
  if (text.empty()) throw ParseError("empty order scheme", 0);
  const auto bar = text.find('|');
  if (bar != std::string_view::npos && text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("at most one '|' in a scheme", text.find('|', bar + 1));
  std::string_view pre_part = bar == std::string_view::npos ? std::string_view{} : text.substr(0, bar);
  std::string_view cycle_part = bar == std::string_view::npos ? text : text.substr(bar + 1);

  auto parse_list = [&](std::string_view part, std::size_t base_offset) {
    std::vector<AlphabetOrder> orders;
    std::size_t start = 0;
    while (start <= part.size()) {
      auto comma = part.find(',', start);
      if (comma == std::string_view::npos) comma = part.size();
      const std::string_view item = part.substr(start, comma - start);
      if (item.empty()) throw ParseError("empty order in scheme", base_offset + start);
      try {
        orders.push_back(parse_alphabet_order(item, alphabet));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), base_offset + start + e.position);
      }
      if (comma == part.size()) break;
      start = comma + 1;
    }
    return orders;
  };

  std::vector<AlphabetOrder> pre;
  if (!pre_part.empty()) pre = parse_list(pre_part, 0);
  if (cycle_part.empty()) throw ParseError("scheme cycle must be nonempty", text.size());
  std::vector<AlphabetOrder> cycle = parse_list(cycle_part, bar == std::string_view::npos ? 0 : bar + 1);
  return {std::move(pre), std::move(cycle)};
}

inline std::string format(const AlphabetOrder& order, const Alphabet& alphabet) {
  std::string out;
  for (Letter a : order.ranking()) out.push_back(alphabet.symbol(a));
  return out;
}

inline std::string format(const PositionalOrderScheme& scheme, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < scheme.preperiod_orders().size(); ++i) {
    if (i) out.push_back(',');
    out += format(scheme.preperiod_orders()[i], alphabet);
  }
  if (!scheme.preperiod_orders().empty()) out.push_back('|');
  for (std::size_t i = 0; i < scheme.cycle_orders().size(); ++i) {
    if (i) out.push_back(',');
    out += format(scheme.cycle_orders()[i], alphabet);
  }
  return out;
}

/// Union of the letters appearing in the given literals, as a sorted alphabet.
/// Punctuation of the two grammars is skipped.
inline Alphabet infer_alphabet(const std::vector<std::string>& literals) {
  std::set<char> chars;
  for (const auto& lit : literals)
    for (char c : lit) {
      if (c == '(' || c == ')' || c == '|' || c == ',') continue;
      if (!std::isprint(static_cast<unsigned char>(c)))
        throw InvalidInput("alphabet symbols must be printable");
      chars.insert(c);
    }
  if (chars.empty()) throw InvalidInput("cannot infer an alphabet from empty literals");
  return Alphabet(std::string(chars.begin(), chars.end()));
}

}  // namespace olyndon
