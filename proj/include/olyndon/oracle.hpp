#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "olyndon/factorize.hpp"

// Independent brute-force references for the main algorithms. These share no
// code with the implementations they check beyond the comparator, and the
// comparator itself is cross-checked here by a naive expansion comparator.
// All of them are exponential or quadratic and guarded for desk scale.

namespace olyndon {

/// Every factorization of w into omega-Lyndon factors with non-increasing
/// omega-powers, found by trying all 2^(|w|-1) split patterns. Proposition-1
/// uniqueness predicts exactly one survivor.
inline std::vector<std::vector<FiniteWord>> enumerate_factorizations(const FiniteWord& w,
                                                                     const OmegaOrder& order) {
  if (w.empty()) throw InvalidInput("enumerate_factorizations: empty word");
  if (w.size() > 16) throw TooLarge("enumerate_factorizations: |w| > 16");
  const std::size_t n = w.size();

  // memoized omega-Lyndon test per substring
  std::vector<std::vector<int>> lyndon(n, std::vector<int>(n + 1, -1));
  auto part_is_lyndon = [&](std::size_t pos, std::size_t len) {
    int& memo = lyndon[pos][len];
    if (memo < 0) memo = is_omega_lyndon_finite(w.substr(pos, len), order).is_lyndon ? 1 : 0;
    return memo == 1;
  };

  std::vector<std::vector<FiniteWord>> survivors;
  const std::uint32_t patterns = 1u << (n - 1);
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> parts;  // (pos, len)
    std::size_t start = 0;
    bool ok = true;
    for (std::size_t gap = 0; gap + 1 <= n; ++gap) {
      const bool cut = gap + 1 == n || (mask >> gap) & 1u;
      if (!cut) continue;
      const std::size_t len = gap + 1 - start;
      if (!part_is_lyndon(start, len)) {
        ok = false;
        break;
      }
      parts.emplace_back(start, len);
      start = gap + 1;
    }
    if (!ok) continue;
    for (std::size_t i = 0; ok && i + 1 < parts.size(); ++i)
      if (order.compare_omega(w.substr(parts[i].first, parts[i].second),
                              w.substr(parts[i + 1].first, parts[i + 1].second)) == Ordering::Less)
        ok = false;
    if (!ok) continue;
    std::vector<FiniteWord> factors;
    factors.reserve(parts.size());
    for (const auto& [pos, len] : parts) factors.push_back(w.substr(pos, len));
    survivors.push_back(std::move(factors));
  }
  return survivors;
}

/// Classical Chen–Fox–Lyndon factorization under one constant alphabet order,
/// by Duval's three-index scan. Cross-checks factorize_finite on constant
/// schemes, where the two notions coincide.
inline std::vector<FiniteWord> duval_factorize(const FiniteWord& w, const AlphabetOrder& base) {
  if (w.empty()) throw InvalidInput("duval_factorize: empty word");
  const std::size_t n = w.size();
  std::vector<FiniteWord> out;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && !base.less(w[j], w[k])) {
      if (base.less(w[k], w[j]))
        k = i;
      else
        ++k;
      ++j;
    }
    const std::size_t len = j - k;
    while (i <= k) {
      out.push_back(w.substr(i, len));
      i += len;
    }
  }
  return out;
}

/// Second route for the comparator: expand both words letter by letter to the
/// agreement bound and resolve the first mismatch positionally.
inline Ordering naive_compare(const EventuallyPeriodicWord& x, const EventuallyPeriodicWord& y,
                              const PositionalOrderScheme& scheme) {
  const std::size_t bound = std::max(x.preperiod().size(), y.preperiod().size()) +
                            std::lcm(x.period().size(), y.period().size());
  const FiniteWord ex = x.prefix(bound);
  const FiniteWord ey = y.prefix(bound);
  for (std::size_t i = 0; i < bound; ++i) {
    if (ex[i] == ey[i]) continue;
    return scheme.order_at(i + 1).less(ex[i], ey[i]) ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

/// Deterministic pseudo-random instances: same seed, same stream, on every
/// platform (raw mt19937_64 output, no std distributions).
class InstanceGenerator {
 public:
  struct Bounds {
    std::size_t alphabet_size = 2;
    std::size_t max_word_length = 8;
    std::size_t max_preperiod = 4;      // may be 0: purely periodic instances only
    std::size_t max_period = 4;
    std::size_t max_scheme_preperiod = 2;
    std::size_t max_scheme_cycle = 3;
  };

  InstanceGenerator(std::uint64_t seed, Bounds bounds) : rng_(seed), bounds_(bounds) {
    if (bounds_.alphabet_size == 0 || bounds_.max_word_length == 0 || bounds_.max_period == 0 ||
        bounds_.max_scheme_cycle == 0)
      throw InvalidInput("InstanceGenerator: bounds must allow nonempty instances");
  }

  FiniteWord next_finite_word() { return word(1, bounds_.max_word_length); }

  EventuallyPeriodicWord next_ev_periodic() {
    FiniteWord pre = word(0, bounds_.max_preperiod);
    FiniteWord per = word(1, bounds_.max_period);
    return normalize(std::move(pre), std::move(per));
  }

  AlphabetOrder next_order() {
    std::vector<Letter> perm(bounds_.alphabet_size);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Letter>(i);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[pick(0, i - 1)]);
    return AlphabetOrder(std::move(perm));
  }

  PositionalOrderScheme next_scheme() {
    std::vector<AlphabetOrder> pre;
    std::vector<AlphabetOrder> cycle;
    const std::size_t pre_len = pick(0, bounds_.max_scheme_preperiod);
    const std::size_t cycle_len = pick(1, bounds_.max_scheme_cycle);
    for (std::size_t i = 0; i < pre_len; ++i) pre.push_back(next_order());
    for (std::size_t i = 0; i < cycle_len; ++i) cycle.push_back(next_order());
    return {std::move(pre), std::move(cycle)};
  }

  std::size_t pick(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
  }

  const Bounds& bounds() const { return bounds_; }

 private:
  FiniteWord word(std::size_t min_len, std::size_t max_len) {
    const std::size_t len = pick(min_len, max_len);
    std::vector<Letter> letters(len);
    for (auto& a : letters) a = static_cast<Letter>(pick(0, bounds_.alphabet_size - 1));
    return FiniteWord(std::move(letters));
  }

  std::mt19937_64 rng_;
  Bounds bounds_;
};

}  // namespace olyndon
