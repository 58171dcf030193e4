#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "olyndon/errors.hpp"

namespace olyndon {

// Letters are alphabet indices. The mapping to printable characters lives at
// the CLI boundary (see literals.hpp), so order schemes are permutations of
// indices and words stay alphabet-agnostic.
using Letter = std::uint8_t;

/// Ordered set of distinct printable symbols; index i names letter i.
class Alphabet {
 public:
  explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw InvalidInput("alphabet must contain at least one symbol");
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      for (std::size_t j = i + 1; j < symbols_.size(); ++j)
        if (symbols_[i] == symbols_[j]) throw InvalidInput("alphabet symbols must be distinct");
  }

  std::size_t size() const { return symbols_.size(); }
  char symbol(Letter i) const { return symbols_.at(i); }
  std::optional<Letter> index_of(char c) const {
    auto pos = symbols_.find(c);
    if (pos == std::string::npos) return std::nullopt;
    return static_cast<Letter>(pos);
  }
  const std::string& symbols() const { return symbols_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::string symbols_;
};

/// Immutable finite sequence of letters (an element of A*).
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static FiniteWord single(Letter a) { return FiniteWord(std::vector<Letter>{a}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  FiniteWord prefix(std::size_t n) const {
    n = std::min(n, size());
    return FiniteWord({letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)});
  }

  /// The suffix obtained by dropping the first `offset` letters.
  FiniteWord suffix_from(std::size_t offset) const {
    offset = std::min(offset, size());
    return FiniteWord({letters_.begin() + static_cast<std::ptrdiff_t>(offset), letters_.end()});
  }

  FiniteWord substr(std::size_t pos, std::size_t len) const {
    pos = std::min(pos, size());
    len = std::min(len, size() - pos);
    auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
    return FiniteWord({first, first + static_cast<std::ptrdiff_t>(len)});
  }

  FiniteWord operator+(const FiniteWord& rhs) const {
    std::vector<Letter> out;
    out.reserve(size() + rhs.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return FiniteWord(std::move(out));
  }

  FiniteWord repeated(std::size_t times) const {
    std::vector<Letter> out;
    out.reserve(size() * times);
    for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), letters_.begin(), letters_.end());
    return FiniteWord(std::move(out));
  }

  /// Cyclic shift moving the first k letters to the back. Pre: nonempty.
  FiniteWord rotated_left(std::size_t k) const {
    if (empty()) throw InvalidInput("rotated_left: empty word");
    k %= size();
    std::vector<Letter> out;
    out.reserve(size());
    out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
    return FiniteWord(std::move(out));
  }

  Letter max_letter() const {
    Letter m = 0;
    for (Letter a : letters_) m = std::max(m, a);
    return m;
  }

  // Index order on the raw letter sequence. Used for containers and
  // canonical output only; the omega-orders live in orders.hpp.
  bool operator==(const FiniteWord&) const = default;
  auto operator<=>(const FiniteWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Longest-proper-border length of every prefix (KMP failure function).
inline std::vector<std::size_t> border_table(const FiniteWord& w) {
  std::vector<std::size_t> b(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = b[i - 1];
    while (k > 0 && w[i] != w[k]) k = b[k - 1];
    if (w[i] == w[k]) ++k;
    b[i] = k;
  }
  return b;
}

/// Longest proper word that is both a prefix and a suffix of w (may be empty).
inline FiniteWord longest_border(const FiniteWord& w) {
  if (w.empty()) throw InvalidInput("longest_border: empty word");
  return w.prefix(border_table(w).back());
}

struct PrimitiveRoot {
  FiniteWord root;
  std::size_t exponent = 0;
};

/// Shortest word r with w = r^e; e is maximal.
inline PrimitiveRoot primitive_root(const FiniteWord& w) {
  if (w.empty()) throw InvalidInput("primitive_root: empty word");
  const std::size_t n = w.size();
  const std::size_t d = n - border_table(w).back();
  if (n % d == 0) return {w.prefix(d), n / d};
  return {w, 1};
}

inline bool is_primitive(const FiniteWord& w) { return primitive_root(w).exponent == 1; }

/// p·q^omega in canonical form: the period is primitive and the preperiod is
/// minimal (empty, or its last letter differs from the period's last letter).
/// Canonical values denote the same infinite word iff they are equal
/// field-wise, so == below is equality in A^N.
class EventuallyPeriodicWord {
 public:
  EventuallyPeriodicWord(FiniteWord preperiod, FiniteWord period) {
    if (period.empty()) throw InvalidInput("eventually periodic word needs a nonempty period");
    period_ = primitive_root(period).root;
    preperiod_ = std::move(preperiod);
    // p'a·(q'a)^omega = p'·(aq')^omega: absorb shared trailing letters into
    // the period by rotating it right. Rotations keep the period primitive.
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
      preperiod_ = preperiod_.prefix(preperiod_.size() - 1);
      period_ = period_.rotated_left(period_.size() - 1);
    }
  }

  const FiniteWord& preperiod() const { return preperiod_; }
  const FiniteWord& period() const { return period_; }
  bool purely_periodic() const { return preperiod_.empty(); }

  /// Letter at 0-based position i.
  Letter at(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
  }

  FiniteWord prefix(std::size_t n) const {
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return FiniteWord(std::move(out));
  }

  /// The proper suffix obtained by dropping the first j letters, canonical.
  EventuallyPeriodicWord drop(std::size_t j) const {
    if (j <= preperiod_.size()) return {preperiod_.suffix_from(j), period_};
    const std::size_t t = (j - preperiod_.size()) % period_.size();
    return {FiniteWord{}, period_.rotated_left(t)};
  }

  Letter max_letter() const { return std::max(preperiod_.max_letter(), period_.max_letter()); }

  bool operator==(const EventuallyPeriodicWord&) const = default;
  auto operator<=>(const EventuallyPeriodicWord&) const = default;

 private:
  FiniteWord preperiod_;
  FiniteWord period_;
};

/// Canonical representative of p·q^omega.
inline EventuallyPeriodicWord normalize(FiniteWord preperiod, FiniteWord period) {
  return {std::move(preperiod), std::move(period)};
}

/// w^omega = www···
inline EventuallyPeriodicWord omega(FiniteWord w) {
  if (w.empty()) throw InvalidInput("omega power of the empty word");
  return {FiniteWord{}, std::move(w)};
}

/// u followed by the infinite word x.
inline EventuallyPeriodicWord prepend(const FiniteWord& u, const EventuallyPeriodicWord& x) {
  return {u + x.preperiod(), x.period()};
}

/// First 1-based position where x and y differ; nullopt when x == y.
/// Two eventually periodic words that agree through
/// max(preperiods) + lcm(periods) letters agree everywhere.
inline std::optional<std::size_t> first_difference(const EventuallyPeriodicWord& x,
                                                   const EventuallyPeriodicWord& y) {
  const std::size_t bound = std::max(x.preperiod().size(), y.preperiod().size()) +
                            std::lcm(x.period().size(), y.period().size());
  for (std::size_t i = 0; i < bound; ++i)
    if (x.at(i) != y.at(i)) return i + 1;
  return std::nullopt;
}

struct SuffixEntry {
  std::size_t offset = 0;  // letters dropped, >= 1
  EventuallyPeriodicWord suffix;
  // The suffix coincides with the whole word. Happens exactly for purely
  // periodic words at offsets that are multiples of the period; reported
  // rather than omitted so callers can detect suffix-equals-word.
  bool equal_to_word = false;
};

/// All distinct proper suffixes of x, keyed by the first offset at which each
/// appears. At most |preperiod| + |period| entries: suffixes at offsets j and
/// j + |period| coincide once j >= |preperiod|.
inline std::vector<SuffixEntry> distinct_suffixes(const EventuallyPeriodicWord& x) {
  std::vector<SuffixEntry> out;
  const std::size_t limit = x.preperiod().size() + x.period().size();
  for (std::size_t j = 1; j <= limit; ++j) {
    EventuallyPeriodicWord s = x.drop(j);
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const SuffixEntry& e) { return e.suffix == s; });
    if (seen) continue;
    const bool self = (s == x);
    out.push_back(SuffixEntry{j, std::move(s), self});
  }
  return out;
}

/// Exactly the length-n factors of x, computed from the finite window
/// preperiod + period repeated ceil((n+|q|)/|q|) + 1 times.
inline std::set<FiniteWord> factors_of_length(const EventuallyPeriodicWord& x, std::size_t n) {
  if (n == 0) throw InvalidInput("factors_of_length: n must be positive");
  const std::size_t q = x.period().size();
  const std::size_t reps = (n + q + q - 1) / q + 1;
  const FiniteWord window = x.prefix(x.preperiod().size() + reps * q);
  std::set<FiniteWord> out;
  for (std::size_t pos = 0; pos + n <= window.size(); ++pos) out.insert(window.substr(pos, n));
  return out;
}

}  // namespace olyndon
