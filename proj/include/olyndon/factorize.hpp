#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "olyndon/lyndon.hpp"

namespace olyndon {

/// x = head[0]···head[k-2]·tail with the tail an infinite omega-Lyndon word,
/// head factors finite omega-Lyndon with non-increasing omega-powers, and the
/// last head factor strictly above the tail.
struct FiniteShape {
  std::vector<FiniteWord> head;
  EventuallyPeriodicWord tail;
  bool operator==(const FiniteShape&) const = default;
};

/// x = head[0]···head[k-1]·repeating·repeating···, all factors finite
/// omega-Lyndon, omega-powers non-increasing. Canonical: no trailing head
/// factor equals `repeating`.
struct InfiniteShape {
  std::vector<FiniteWord> head;
  FiniteWord repeating;
  bool operator==(const InfiniteShape&) const = default;
};

using OmegaLyndonFactorization = std::variant<FiniteShape, InfiniteShape>;

inline FiniteWord concat(const std::vector<FiniteWord>& factors) {
  std::vector<Letter> out;
  for (const auto& f : factors) out.insert(out.end(), f.begin(), f.end());
  return FiniteWord(std::move(out));
}

/// Unique factorization of w into finite omega-Lyndon factors with
/// non-increasing omega-powers. Works by repeatedly peeling the longest
/// omega-Lyndon suffix: every longer suffix extends the final factor on the
/// left and such extensions are never omega-Lyndon, so the longest Lyndon
/// suffix is exactly the last factor.
inline std::vector<FiniteWord> factorize_finite(const FiniteWord& w, const OmegaOrder& order) {
  if (w.empty()) throw InvalidInput("factorize_finite: empty word");
  std::vector<FiniteWord> reversed;
  FiniteWord rest = w;
  while (!rest.empty()) {
    std::size_t j = 0;
    while (true) {
      FiniteWord suffix = rest.suffix_from(j);
      if (is_omega_lyndon_finite(suffix, order).is_lyndon) {
        reversed.push_back(std::move(suffix));
        rest = rest.prefix(j);
        break;
      }
      ++j;  // terminates: single letters are omega-Lyndon
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

namespace detail {

// Rotation of the period whose omega-power is minimal. If x has an infinite
// shape its repeating factor must be this rotation: the repeating factor's
// omega-power sits strictly below the omega-power of every other conjugate
// (each such conjugate is s·rho^omega for a proper suffix s of rho, and
// rho^omega < s^omega pushes rho^omega < s·rho^omega).
inline std::size_t min_rotation_offset(const FiniteWord& period, const OmegaOrder& order) {
  std::size_t best = 0;
  for (std::size_t t = 1; t < period.size(); ++t)
    if (order.compare_omega(period.rotated_left(t), period.rotated_left(best)) == Ordering::Less)
      best = t;
  return best;
}

}  // namespace detail

/// The unique non-increasing omega-Lyndon factorization of x.
///
/// Finite shape: the tail must be an omega-Lyndon suffix of x, and suffixes
/// at offsets >= |preperiod| are purely periodic, hence never omega-Lyndon —
/// so only offsets 0..|preperiod|-1 are candidates. Once any suffix of x is
/// omega-Lyndon, no infinite factorization exists, so the infinite-shape
/// search is skipped.
///
/// Infinite shape: the repeating factor is the omega-minimal rotation of the
/// period, and the boundary where the pure tail starts is searched by whole
/// periods, up to `cap` periods. Uniqueness of the factorization makes any
/// candidate that validates the correct answer; finding none within the cap
/// raises CapExceeded.
inline OmegaLyndonFactorization factorize_ev_periodic(const EventuallyPeriodicWord& x,
                                                      const OmegaOrder& order,
                                                      std::size_t cap = 64) {
  if (cap == 0) throw InvalidInput("factorize_ev_periodic: cap must be positive");

  std::vector<FiniteShape> finite_candidates;
  for (std::size_t j = 0; j < x.preperiod().size(); ++j) {
    EventuallyPeriodicWord tail = x.drop(j);
    if (!is_omega_lyndon_infinite(tail, order).is_lyndon) continue;
    std::vector<FiniteWord> head =
        j == 0 ? std::vector<FiniteWord>{} : factorize_finite(x.prefix(j), order);
    if (!head.empty() && order.compare(omega(head.back()), tail) != Ordering::Greater) continue;
    finite_candidates.push_back(FiniteShape{std::move(head), std::move(tail)});
  }
  if (finite_candidates.size() > 1)
    throw std::logic_error("factorize_ev_periodic: multiple finite factorizations");
  if (finite_candidates.size() == 1) return finite_candidates.front();

  const std::size_t t = detail::min_rotation_offset(x.period(), order);
  const FiniteWord rho = x.period().rotated_left(t);
  if (is_omega_lyndon_finite(rho, order).is_lyndon) {
    const std::size_t base = x.preperiod().size() + t;
    for (std::size_t m = 0; m <= cap; ++m) {
      const std::size_t boundary = base + m * x.period().size();
      std::vector<FiniteWord> head =
          boundary == 0 ? std::vector<FiniteWord>{} : factorize_finite(x.prefix(boundary), order);
      if (!head.empty() && order.compare_omega(head.back(), rho) == Ordering::Less) continue;
      while (!head.empty() && head.back() == rho) head.pop_back();
      return InfiniteShape{std::move(head), rho};
    }
    std::ostringstream msg;
    msg << "factorize_ev_periodic: no factorization within cap (searched " << (cap + 1)
        << " period-aligned boundaries for the omega-minimal Lyndon rotation)";
    throw CapExceeded(msg.str());
  }
  throw std::logic_error(
      "factorize_ev_periodic: no candidate in either shape; the comparator likely violates "
      "the order contract");
}

struct CertificateCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FactorizationCertificate {
  std::vector<CertificateCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Re-derives every invariant of a factorization against x: factors Lyndon,
/// omega-powers non-increasing, shape-specific tail conditions, canonicity,
/// and exact reconstruction through the comparator.
inline FactorizationCertificate validate_factorization(const EventuallyPeriodicWord& x,
                                                       const OmegaLyndonFactorization& f,
                                                       const OmegaOrder& order) {
  FactorizationCertificate cert;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    cert.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const auto& head =
      std::holds_alternative<FiniteShape>(f) ? std::get<FiniteShape>(f).head : std::get<InfiniteShape>(f).head;

  bool head_lyndon = true;
  std::string bad;
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head[i].empty() || !is_omega_lyndon_finite(head[i], order).is_lyndon) {
      head_lyndon = false;
      bad = "head factor " + std::to_string(i) + " is not omega-Lyndon";
      break;
    }
  }
  add("head factors omega-Lyndon", head_lyndon, bad);

  bool non_increasing = true;
  for (std::size_t i = 0; i + 1 < head.size(); ++i) {
    if (order.compare_omega(head[i], head[i + 1]) == Ordering::Less) {
      non_increasing = false;
      bad = "head omega-powers increase at index " + std::to_string(i);
      break;
    }
  }
  add("head omega-powers non-increasing", non_increasing, non_increasing ? "" : bad);

  if (const auto* fin = std::get_if<FiniteShape>(&f)) {
    add("tail infinite omega-Lyndon", is_omega_lyndon_infinite(fin->tail, order).is_lyndon);
    add("last head factor strictly above tail",
        head.empty() || order.compare(omega(head.back()), fin->tail) == Ordering::Greater);
    const EventuallyPeriodicWord rebuilt = prepend(concat(head), fin->tail);
    add("reconstructs x", rebuilt == x && order.compare(rebuilt, x) == Ordering::Equal);
  } else {
    const auto& inf = std::get<InfiniteShape>(f);
    add("repeating factor omega-Lyndon",
        !inf.repeating.empty() && is_omega_lyndon_finite(inf.repeating, order).is_lyndon);
    add("last head factor at least repeating",
        head.empty() ||
            order.compare_omega(head.back(), inf.repeating) != Ordering::Less);
    add("no trailing head factor equals repeating", head.empty() || head.back() != inf.repeating);
    if (inf.repeating.empty()) {
      add("reconstructs x", false, "empty repeating factor");
    } else {
      const EventuallyPeriodicWord rebuilt = normalize(concat(head), inf.repeating);
      add("reconstructs x", rebuilt == x && order.compare(rebuilt, x) == Ordering::Equal);
    }
  }
  return cert;
}

struct BoundaryReport {
  std::size_t factor_length = 0;  // n
  FiniteWord minimal;             // the omega-minimal length-n factor of the prefix
  std::size_t boundary = 0;       // letters before its first occurrence
};

/// For each n <= n_max, the omega-minimal length-n factor of the prefix and
/// the length of the longest prefix preceding its first occurrence. When the
/// underlying infinite word is aperiodic with an infinite factorization whose
/// factor lengths are unbounded, each boundary is a cumulative factor boundary
/// of that factorization. On a finite prefix the minimal factor is provisional:
/// a smaller factor may appear later in the full word.
inline std::vector<BoundaryReport> detect_boundaries(const FiniteWord& prefix,
                                                     const OmegaOrder& order, std::size_t n_max) {
  if (prefix.empty()) throw InvalidInput("detect_boundaries: empty prefix");
  if (n_max == 0 || n_max > prefix.size() / 2)
    throw InvalidInput("detect_boundaries: n_max must be in [1, |prefix|/2]");
  std::vector<BoundaryReport> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t best_pos = 0;
    FiniteWord best = prefix.substr(0, n);
    for (std::size_t pos = 1; pos + n <= prefix.size(); ++pos) {
      FiniteWord candidate = prefix.substr(pos, n);
      if (candidate == best) continue;
      if (order.compare_omega(candidate, best) == Ordering::Less) {
        best = std::move(candidate);
        best_pos = pos;
      }
    }
    out.push_back({n, std::move(best), best_pos});
  }
  return out;
}

}  // namespace olyndon
