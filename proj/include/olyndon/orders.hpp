#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "olyndon/words.hpp"

namespace olyndon {

enum class Ordering { Less, Equal, Greater };

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

inline Ordering opposite(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return Ordering::Equal;
}

/// One total order on the alphabet, as the permutation of letters listed from
/// smallest to largest.
class AlphabetOrder {
 public:
  explicit AlphabetOrder(std::vector<Letter> ranking) : ranking_(std::move(ranking)) {
    if (ranking_.empty()) throw InvalidInput("alphabet order must not be empty");
    rank_.assign(ranking_.size(), 0);
    std::vector<bool> seen(ranking_.size(), false);
    for (std::size_t r = 0; r < ranking_.size(); ++r) {
      const Letter a = ranking_[r];
      if (a >= ranking_.size() || seen[a])
        throw InvalidInput("alphabet order must be a permutation of 0..k-1");
      seen[a] = true;
      rank_[a] = r;
    }
  }

  static AlphabetOrder identity(std::size_t k) {
    std::vector<Letter> r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<Letter>(i);
    return AlphabetOrder(std::move(r));
  }

  std::size_t alphabet_size() const { return ranking_.size(); }
  std::size_t rank(Letter a) const {
    if (a >= rank_.size()) throw InvalidInput("letter outside the order's alphabet");
    return rank_[a];
  }
  bool less(Letter a, Letter b) const { return rank(a) < rank(b); }
  const std::vector<Letter>& ranking() const { return ranking_; }

  bool operator==(const AlphabetOrder&) const = default;

 private:
  std::vector<Letter> ranking_;    // smallest to largest
  std::vector<std::size_t> rank_;  // rank_[letter] = position in ranking_
};

/// Eventually periodic sequence of alphabet orders. A mismatch at (1-based)
/// position i is resolved by order_at(i), which makes the induced order on
/// A^N total and gives it the lexicographic-like property checked by
/// validate_star.
class PositionalOrderScheme {
 public:
  PositionalOrderScheme(std::vector<AlphabetOrder> preperiod, std::vector<AlphabetOrder> cycle)
      : preperiod_(std::move(preperiod)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw InvalidInput("order scheme needs a nonempty cycle");
    const std::size_t k = cycle_.front().alphabet_size();
    for (const auto& o : preperiod_)
      if (o.alphabet_size() != k) throw InvalidInput("order scheme mixes alphabets");
    for (const auto& o : cycle_)
      if (o.alphabet_size() != k) throw InvalidInput("order scheme mixes alphabets");
  }

  static PositionalOrderScheme constant(AlphabetOrder o) { return {{}, {std::move(o)}}; }

  const AlphabetOrder& order_at(std::size_t i) const {
    if (i == 0) throw InvalidInput("order_at: positions are 1-based");
    if (i <= preperiod_.size()) return preperiod_[i - 1];
    return cycle_[(i - 1 - preperiod_.size()) % cycle_.size()];
  }

  std::size_t alphabet_size() const { return cycle_.front().alphabet_size(); }
  const std::vector<AlphabetOrder>& preperiod_orders() const { return preperiod_; }
  const std::vector<AlphabetOrder>& cycle_orders() const { return cycle_; }

  bool operator==(const PositionalOrderScheme&) const = default;

 private:
  std::vector<AlphabetOrder> preperiod_;
  std::vector<AlphabetOrder> cycle_;
};

/// Exact comparison of two eventually periodic words under a positional
/// scheme. A mismatch, if any, occurs within max(preperiods) + lcm(periods)
/// letters; past that bound the words agree everywhere, and canonicity makes
/// them field-equal.
inline Ordering compare_ev_periodic(const EventuallyPeriodicWord& x,
                                    const EventuallyPeriodicWord& y,
                                    const PositionalOrderScheme& scheme) {
  if (x.max_letter() >= scheme.alphabet_size() || y.max_letter() >= scheme.alphabet_size())
    throw InvalidInput("compare_ev_periodic: word letter outside the scheme's alphabet");
  const std::size_t bound = std::max(x.preperiod().size(), y.preperiod().size()) +
                            std::lcm(x.period().size(), y.period().size());
  for (std::size_t i = 0; i < bound; ++i) {
    const Letter a = x.at(i);
    const Letter b = y.at(i);
    if (a == b) continue;
    return scheme.order_at(i + 1).less(a, b) ? Ordering::Less : Ordering::Greater;
  }
  if (!(x == y))
    throw std::logic_error("compare_ev_periodic: agreement bound reached for distinct words");
  return Ordering::Equal;
}

/// u^omega vs v^omega. Equal iff u and v share a primitive root.
inline Ordering omega_compare_finite(const FiniteWord& u, const FiniteWord& v,
                                     const PositionalOrderScheme& scheme) {
  if (u.empty() || v.empty()) throw InvalidInput("omega_compare_finite: empty word");
  return compare_ev_periodic(omega(u), omega(v), scheme);
}

/// Total-order comparator contract on eventually periodic words. Implementors
/// must be total orders satisfying the lexicographic-like condition: for
/// equal-length u, v with u^omega < v^omega, every ux precedes every vy.
/// Neither property is enforceable statically; validate_star samples both.
/// Comparators must be safe for concurrent read-only use.
class OmegaOrder {
 public:
  virtual ~OmegaOrder() = default;
  virtual Ordering compare(const EventuallyPeriodicWord& x,
                           const EventuallyPeriodicWord& y) const = 0;

  /// u^omega vs v^omega.
  Ordering compare_omega(const FiniteWord& u, const FiniteWord& v) const {
    return compare(omega(u), omega(v));
  }
};

/// The concrete comparator induced by a positional scheme.
class PositionalOmegaOrder final : public OmegaOrder {
 public:
  explicit PositionalOmegaOrder(PositionalOrderScheme scheme) : scheme_(std::move(scheme)) {}
  Ordering compare(const EventuallyPeriodicWord& x,
                   const EventuallyPeriodicWord& y) const override {
    return compare_ev_periodic(x, y, scheme_);
  }
  const PositionalOrderScheme& scheme() const { return scheme_; }

 private:
  PositionalOrderScheme scheme_;
};

struct StarValidationReport {
  bool pass = true;
  std::size_t star_checks = 0;   // (u,v,x,y) condition checks performed
  std::size_t order_checks = 0;  // totality/antisymmetry/transitivity samples
  std::string failure;           // empty when pass
  std::optional<FiniteWord> u, v;
  std::optional<EventuallyPeriodicWord> x, y;
};

namespace detail {

// Deterministic helpers for sampling; avoids std distributions, whose output
// is implementation-defined.
inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline FiniteWord random_word(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t min_len,
                              std::size_t max_len) {
  const std::size_t len = pick(rng, min_len, max_len);
  std::vector<Letter> letters(len);
  for (auto& a : letters) a = static_cast<Letter>(pick(rng, 0, alphabet_size - 1));
  return FiniteWord(std::move(letters));
}

inline EventuallyPeriodicWord random_ev_word(std::mt19937_64& rng, std::size_t alphabet_size,
                                             std::size_t max_pre, std::size_t max_period) {
  FiniteWord pre = random_word(rng, alphabet_size, 0, max_pre);
  FiniteWord per = random_word(rng, alphabet_size, 1, max_period);
  return normalize(std::move(pre), std::move(per));
}

// Words of length n over 0..k-1 in counting order.
inline std::vector<FiniteWord> all_words(std::size_t alphabet_size, std::size_t n) {
  std::vector<FiniteWord> out;
  std::vector<Letter> cur(n, 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] + 1u == alphabet_size) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

}  // namespace detail

/// Empirical check that `order` behaves like a total order with the
/// lexicographic-like condition. For every n <= n_max and every pair of
/// distinct length-n words with u^omega < v^omega, checks ux < vy against
/// `tail_samples` random eventually periodic tails plus the deterministic
/// tails u^omega / v^omega; then samples totality, antisymmetry and
/// transitivity triples. Returns the first counterexample found, if any.
inline StarValidationReport validate_star(const OmegaOrder& order, std::size_t alphabet_size,
                                          std::size_t n_max, std::size_t tail_samples = 8,
                                          std::uint64_t rng_seed = 1) {
  if (n_max == 0) throw InvalidInput("validate_star: n_max must be positive");
  if (alphabet_size == 0) throw InvalidInput("validate_star: empty alphabet");
  StarValidationReport report;
  std::mt19937_64 rng(rng_seed);

  auto fail = [&](std::string what, const FiniteWord* u, const FiniteWord* v,
                  const EventuallyPeriodicWord* x, const EventuallyPeriodicWord* y) {
    report.pass = false;
    report.failure = std::move(what);
    if (u) report.u = *u;
    if (v) report.v = *v;
    if (x) report.x = *x;
    if (y) report.y = *y;
  };

  for (std::size_t n = 1; n <= n_max && report.pass; ++n) {
    const auto words = detail::all_words(alphabet_size, n);
    for (const auto& u : words) {
      for (const auto& v : words) {
        if (u == v) continue;
        if (order.compare_omega(u, v) != Ordering::Less) continue;
        std::vector<std::pair<EventuallyPeriodicWord, EventuallyPeriodicWord>> tails;
        tails.emplace_back(omega(u), omega(v));
        tails.emplace_back(omega(v), omega(u));
        for (std::size_t s = 0; s < tail_samples; ++s)
          tails.emplace_back(detail::random_ev_word(rng, alphabet_size, 4, 4),
                             detail::random_ev_word(rng, alphabet_size, 4, 4));
        for (const auto& [tx, ty] : tails) {
          ++report.star_checks;
          if (order.compare(prepend(u, tx), prepend(v, ty)) != Ordering::Less) {
            fail("condition (*) violated: u^omega < v^omega but not ux < vy", &u, &v, &tx, &ty);
            break;
          }
        }
        if (!report.pass) break;
      }
      if (!report.pass) break;
    }
  }

  const std::size_t triples = 1000;
  for (std::size_t t = 0; t < triples && report.pass; ++t) {
    const auto a = detail::random_ev_word(rng, alphabet_size, 4, 4);
    const auto b = detail::random_ev_word(rng, alphabet_size, 4, 4);
    const auto c = detail::random_ev_word(rng, alphabet_size, 4, 4);
    ++report.order_checks;
    const Ordering ab = order.compare(a, b);
    if (order.compare(b, a) != opposite(ab)) {
      fail("antisymmetry violated", nullptr, nullptr, &a, &b);
      break;
    }
    if ((ab == Ordering::Equal) != (a == b)) {
      fail("Equal must coincide with canonical equality", nullptr, nullptr, &a, &b);
      break;
    }
    const Ordering bc = order.compare(b, c);
    const Ordering ac = order.compare(a, c);
    if (ab != Ordering::Greater && bc != Ordering::Greater && ac == Ordering::Greater) {
      fail("transitivity violated", nullptr, nullptr, &a, &c);
      break;
    }
  }
  return report;
}

}  // namespace olyndon
