// Stable vector closest to a start under L1 distance.
//
// With c(i, j) = |I[i] - mrank[i][j]|, the distance of a stable matching
// from I equals its total cost. Eliminating a rotation changes that cost by
// the rotation's weight, so the closest matching is the man-optimal one with
// a minimum-weight closed rotation set eliminated, found by a minimum cut.
// Ties resolve to the inclusion-minimal closed set, i.e. the lattice-least
// closest vector.

#ifndef STABLEPATH_DELTA_HPP_
#define STABLEPATH_DELTA_HPP_

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "stablepath/instance.hpp"
#include "stablepath/lattice.hpp"
#include "stablepath/max_flow.hpp"
#include "stablepath/rotation.hpp"

namespace stablepath {

class CostMatrix {
 public:
  CostMatrix(const Instance& inst, const ProposalVector& initial)
      : w_(inst.women()), cost_(static_cast<std::size_t>(inst.men()) * inst.women()) {
    require_valid(inst, initial);
    for (int i = 0; i < inst.men(); ++i)
      for (int j = 0; j < w_; ++j)
        cost_[static_cast<std::size_t>(i) * w_ + j] = std::abs(initial[i] - inst.man_choice(i, j));
  }

  std::int64_t operator()(int man, int woman) const {
    return cost_[static_cast<std::size_t>(man) * w_ + woman];
  }

  std::int64_t of(const Instance& inst, const ProposalVector& g) const {
    std::int64_t total = 0;
    for (int i = 0; i < inst.men(); ++i) total += (*this)(i, rho(inst, g, i));
    return total;
  }

 private:
  int w_;
  std::vector<std::int64_t> cost_;
};

inline void assign_weights(RotationPoset& poset, const CostMatrix& cost) {
  for (auto& rot : poset.rotations) {
    rot.weight = 0;
    for (const auto& e : rot.cycle)
      rot.weight += cost(e.man, e.to_woman) - cost(e.man, e.from_woman);
  }
}

/// Inclusion-minimal closed set of minimum total weight.
inline std::vector<char> min_weight_closure(const RotationPoset& poset) {
  const int r = static_cast<int>(poset.rotations.size());
  const int source = r, sink = r + 1;
  MaxFlow::Cap unbounded = 1;
  for (const auto& rot : poset.rotations) unbounded += std::abs(rot.weight);
  MaxFlow flow(r + 2);
  for (int k = 0; k < r; ++k) {
    const auto wt = poset.rotations[k].weight;
    if (wt < 0) flow.add_edge(source, k, -wt);
    if (wt > 0) flow.add_edge(k, sink, wt);
    for (int pred : poset.direct_predecessors[k]) flow.add_edge(k, pred, unbounded);
  }
  flow.solve(source, sink);
  const auto side = flow.source_side(source);
  return std::vector<char>(side.begin(), side.begin() + r);
}

inline ProposalVector run_delta(const Instance& inst, const ProposalVector& initial,
                                const RotationPoset& rotations) {
  const CostMatrix cost(inst, initial);
  RotationPoset poset = rotations;
  assign_weights(poset, cost);
  return apply_rotations(inst, poset, min_weight_closure(poset));
}

inline ProposalVector run_delta(const Instance& inst, const ProposalVector& initial) {
  require_valid(inst, initial);
  return run_delta(inst, initial, extract_rotations(inst));
}

/// Checks the stable-matching linear system at the 0/1 point with
/// x[i][rho(s, i)] = 1. For a man-saturating s this is its matching, and the
/// point is feasible iff s is stable.
inline bool lp_certificate(const Instance& inst, const ProposalVector& s) {
  require_valid(inst, s);
  const int m = inst.men(), w = inst.women();
  // Row sums are 1 by construction, one proposal per man.
  std::vector<int> column(w, 0);
  for (int i = 0; i < m; ++i) ++column[rho(inst, s, i)];
  for (int j = 0; j < w; ++j)
    if (column[j] > 1) return false;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < w; ++j) {
      int lhs = 0;
      for (int other = 0; other < m; ++other)
        if (rho(inst, s, other) == j && inst.woman_rank(j, other) <= inst.woman_rank(j, i)) ++lhs;
      if (inst.man_choice(i, j) > s[i]) ++lhs;  // x[i][j'] for some j' he prefers to j
      if (lhs < 1) return false;
    }
  }
  return true;
}

}  // namespace stablepath

#endif  // STABLEPATH_DELTA_HPP_
