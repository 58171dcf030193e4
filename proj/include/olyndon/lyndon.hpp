#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "olyndon/orders.hpp"

namespace olyndon {

struct LyndonWitness {
  std::size_t offset = 0;  // letters dropped (suffix) or split point (splits variant)
  Ordering outcome = Ordering::Equal;  // the violating comparison's result
};

struct LyndonVerdict {
  bool is_lyndon = false;
  std::optional<LyndonWitness> witness;  // present iff !is_lyndon
};

/// w is omega-Lyndon iff w^omega < v^omega for every proper nonempty suffix v.
/// Single letters pass vacuously; imprimitive words fail (the suffix dropping
/// one root has the same omega-power).
inline LyndonVerdict is_omega_lyndon_finite(const FiniteWord& w, const OmegaOrder& order) {
  if (w.empty()) throw InvalidInput("is_omega_lyndon_finite: empty word");
  const EventuallyPeriodicWord w_omega = omega(w);
  for (std::size_t j = 1; j < w.size(); ++j) {
    const Ordering c = order.compare(w_omega, omega(w.suffix_from(j)));
    if (c != Ordering::Less) return {false, LyndonWitness{j, c}};
  }
  return {true, std::nullopt};
}

/// Equivalent split characterisation: every split w = uv with u, v nonempty
/// must satisfy u^omega < v^omega. Agrees with is_omega_lyndon_finite on all
/// inputs; kept as an independent route for cross-checking.
inline LyndonVerdict is_omega_lyndon_finite_splits(const FiniteWord& w, const OmegaOrder& order) {
  if (w.empty()) throw InvalidInput("is_omega_lyndon_finite_splits: empty word");
  for (std::size_t j = 1; j < w.size(); ++j) {
    const Ordering c = order.compare_omega(w.prefix(j), w.suffix_from(j));
    if (c != Ordering::Less) return {false, LyndonWitness{j, c}};
  }
  return {true, std::nullopt};
}

/// x is omega-Lyndon iff x < y for every proper suffix y. Only the distinct
/// suffix classes need checking: suffixes deeper in the periodic part repeat,
/// so the test is exact, not sampled. Purely periodic words fail via the
/// suffix that equals x itself.
inline LyndonVerdict is_omega_lyndon_infinite(const EventuallyPeriodicWord& x,
                                              const OmegaOrder& order) {
  for (const auto& entry : distinct_suffixes(x)) {
    if (entry.equal_to_word) return {false, LyndonWitness{entry.offset, Ordering::Equal}};
    const Ordering c = order.compare(x, entry.suffix);
    if (c != Ordering::Less) return {false, LyndonWitness{entry.offset, c}};
  }
  return {true, std::nullopt};
}

/// All lengths l <= max_length whose prefix of x is finite omega-Lyndon.
inline std::vector<std::size_t> omega_lyndon_prefixes(const EventuallyPeriodicWord& x,
                                                      std::size_t max_length,
                                                      const OmegaOrder& order) {
  if (max_length == 0) throw InvalidInput("omega_lyndon_prefixes: length cap must be positive");
  std::vector<std::size_t> out;
  for (std::size_t len = 1; len <= max_length; ++len)
    if (is_omega_lyndon_finite(x.prefix(len), order).is_lyndon) out.push_back(len);
  return out;
}

struct L1Classification {
  enum class Kind { IsLyndon, PeriodicPowerOfLyndon, FinitelyManyLyndonPrefixes };
  Kind kind = Kind::IsLyndon;
  std::optional<FiniteWord> root;  // PeriodicPowerOfLyndon: x = root^omega
  // FinitelyManyLyndonPrefixes: certified bound B; no omega-Lyndon prefix of x
  // is longer than B.
  std::optional<std::size_t> prefix_length_bound;
  std::size_t verified_window_end = 0;  // prefix lengths in (B, window_end] were re-checked
};

/// Trichotomy for infinite words: x is omega-Lyndon, or x = l^omega for some
/// finite omega-Lyndon l, or only finitely many prefixes of x are omega-Lyndon.
/// In the last case the bound is derived constructively from a violating
/// suffix: if the suffix at offset j first differs from x at position m, the
/// length-m prefix of that suffix beats the corresponding prefix of x, so any
/// prefix of x long enough to contain it (length >= j + m) cannot be Lyndon.
/// For a periodic word with non-Lyndon primitive root u, any prefix of length
/// >= 2|u| contains a strictly smaller conjugate, giving B = 2|u| - 1.
inline L1Classification classify_l1(const EventuallyPeriodicWord& x, const OmegaOrder& order,
                                    std::size_t cap) {
  if (is_omega_lyndon_infinite(x, order).is_lyndon)
    return {L1Classification::Kind::IsLyndon, std::nullopt, std::nullopt, 0};

  std::size_t bound = std::numeric_limits<std::size_t>::max();
  if (x.purely_periodic()) {
    if (is_omega_lyndon_finite(x.period(), order).is_lyndon)
      return {L1Classification::Kind::PeriodicPowerOfLyndon, x.period(), std::nullopt, 0};
    bound = 2 * x.period().size() - 1;
  } else {
    for (const auto& entry : distinct_suffixes(x)) {
      if (order.compare(x, entry.suffix) == Ordering::Less) continue;
      const auto diff = first_difference(x, entry.suffix);
      if (!diff) throw std::logic_error("classify_l1: non-periodic word equal to a proper suffix");
      bound = std::min(bound, entry.offset + *diff - 1);
    }
    if (bound == std::numeric_limits<std::size_t>::max())
      throw std::logic_error("classify_l1: no violating suffix for a non-Lyndon word");
  }

  if (cap < bound) throw CapTooSmall("classify_l1: cap is below the certified prefix bound");
  const std::size_t window_end = std::min(cap, bound + 2 * x.period().size() + 8);
  for (std::size_t len = bound + 1; len <= window_end; ++len)
    if (is_omega_lyndon_finite(x.prefix(len), order).is_lyndon)
      throw std::logic_error("classify_l1: omega-Lyndon prefix beyond the certified bound");
  return {L1Classification::Kind::FinitelyManyLyndonPrefixes, std::nullopt, bound, window_end};
}

/// Extends a finite omega-Lyndon word w (|w| >= 2) to an infinite one with w
/// as a prefix: w·(last letter)^omega when w is unbordered, else w·u^omega
/// with u the longest border. The construction is re-verified; a failure
/// raises ConstructionFailed rather than returning an unchecked value.
inline EventuallyPeriodicWord extend_to_infinite(const FiniteWord& w, const OmegaOrder& order) {
  if (w.size() < 2) throw InvalidInput("extend_to_infinite: need |w| >= 2");
  if (!is_omega_lyndon_finite(w, order).is_lyndon)
    throw NotLyndon("extend_to_infinite: input is not omega-Lyndon");
  FiniteWord tail = longest_border(w);
  if (tail.empty()) tail = FiniteWord::single(w.back());
  const EventuallyPeriodicWord extension = normalize(w, tail);
  if (!is_omega_lyndon_infinite(extension, order).is_lyndon || extension.prefix(w.size()) != w)
    throw ConstructionFailed("extend_to_infinite: extension failed verification");
  return extension;
}

/// The length-n factor u of x with u^omega <= v^omega for every length-n
/// factor v. Scanning the covering window in occurrence order and replacing
/// only on strict improvement keeps the first occurrence; distinct equal-length
/// factors cannot tie (equal omega-powers of equal length force equality).
inline FiniteWord minimal_factor(const EventuallyPeriodicWord& x, std::size_t n,
                                 const OmegaOrder& order) {
  if (n == 0) throw InvalidInput("minimal_factor: n must be positive");
  const std::size_t q = x.period().size();
  const std::size_t reps = (n + q + q - 1) / q + 1;
  const FiniteWord window = x.prefix(x.preperiod().size() + reps * q);
  FiniteWord best = window.substr(0, n);
  for (std::size_t pos = 1; pos + n <= window.size(); ++pos) {
    FiniteWord candidate = window.substr(pos, n);
    if (candidate == best) continue;
    if (order.compare_omega(candidate, best) == Ordering::Less) best = std::move(candidate);
  }
  return best;
}

}  // namespace olyndon
