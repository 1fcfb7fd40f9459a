// Brute-force ground truth for small instances: every injective assignment of
// men to women is tried and filtered by the stability predicate.

#ifndef STABLEPATH_ORACLE_HPP_
#define STABLEPATH_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stablepath/instance.hpp"
#include "stablepath/lattice.hpp"

namespace stablepath::oracle {

/// Above this many men the enumeration is slow; it still runs.
inline constexpr int kRecommendedMaxMen = 9;

/// Calls `visit` with the vector of every man-saturating assignment.
inline void for_each_saturating(const Instance& inst,
                                const std::function<void(const ProposalVector&)>& visit) {
  const int m = inst.men(), w = inst.women();
  std::vector<char> used(w, 0);
  ProposalVector g = ProposalVector::filled(m, 1);
  std::function<void(int)> place = [&](int man) {
    if (man == m) {
      visit(g);
      return;
    }
    for (int c = 1; c <= w; ++c) {
      const int q = inst.woman_at(man, c);
      if (used[q]) continue;
      used[q] = 1;
      g[man] = c;
      place(man + 1);
      used[q] = 0;
    }
  };
  place(0);
}

/// All stable vectors in lexicographic order.
inline std::vector<ProposalVector> enumerate_stable(const Instance& inst) {
  std::vector<ProposalVector> out;
  for_each_saturating(inst, [&](const ProposalVector& g) {
    if (is_stable(inst, g)) out.push_back(g);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// The candidate below (or above) every other candidate. Throws when there is
// none, which would contradict the sublattice property.
inline std::optional<ProposalVector> extreme(const std::vector<ProposalVector>& candidates,
                                             bool least) {
  for (const auto& c : candidates) {
    const bool bounds_all = std::all_of(candidates.begin(), candidates.end(), [&](const auto& o) {
      return least ? leq(c, o) : leq(o, c);
    });
    if (bounds_all) return c;
  }
  if (candidates.empty()) return std::nullopt;
  throw std::logic_error("stable vectors on one side of the start have no extreme element");
}

}  // namespace detail

/// Least stable vector >= start, found by direct comparison.
inline std::optional<ProposalVector> least_above(const std::vector<ProposalVector>& stable,
                                                 const ProposalVector& start) {
  std::vector<ProposalVector> above;
  for (const auto& s : stable)
    if (leq(start, s)) above.push_back(s);
  return detail::extreme(above, true);
}

inline std::optional<ProposalVector> greatest_below(const std::vector<ProposalVector>& stable,
                                                    const ProposalVector& start) {
  std::vector<ProposalVector> below;
  for (const auto& s : stable)
    if (leq(s, start)) below.push_back(s);
  return detail::extreme(below, false);
}

/// Every stable vector at minimum L1 distance from start, lexicographic.
inline std::vector<ProposalVector> nearest(const std::vector<ProposalVector>& stable,
                                           const ProposalVector& start) {
  std::vector<ProposalVector> out;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& s : stable) {
    const auto d = dist(start, s);
    if (d < best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(s);
  }
  return out;
}

inline std::optional<ProposalVector> least_above(const Instance& inst, const ProposalVector& start) {
  return least_above(enumerate_stable(inst), start);
}
inline std::optional<ProposalVector> greatest_below(const Instance& inst,
                                                    const ProposalVector& start) {
  return greatest_below(enumerate_stable(inst), start);
}
inline std::vector<ProposalVector> nearest(const Instance& inst, const ProposalVector& start) {
  return nearest(enumerate_stable(inst), start);
}

}  // namespace stablepath::oracle

#endif  // STABLEPATH_ORACLE_HPP_
