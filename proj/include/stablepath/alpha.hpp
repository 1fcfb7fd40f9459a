// Upward traversal: least stable proposal vector >= a given start.
//
// The engine keeps, for every woman, the best man who proposed to her in any
// vector <= G (cur_best), and a FIFO list of men whose current woman has a
// better proposer in that sense. Those men are exactly the forbidden ones, so
// advancing them one choice at a time never skips a stable vector. The whole
// run is O(m^2 + w).

#ifndef STABLEPATH_ALPHA_HPP_
#define STABLEPATH_ALPHA_HPP_

#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stablepath/instance.hpp"
#include "stablepath/lattice.hpp"
#include "stablepath/path.hpp"

namespace stablepath {

struct AlphaState {
  ProposalVector g;
  std::vector<int> cur_best;  // per woman, kNone before any proposal
  std::deque<int> men_list;
  int numw = 0;
};

class AlphaEngine {
 public:
  enum class Status { running, stable, no_stable };

  AlphaEngine(const Instance& inst, ProposalVector initial) : inst_(inst) {
    require_valid(inst, initial);
    const int m = inst.men();
    state_.g = std::move(initial);
    state_.cur_best.assign(inst.women(), kNone);
    auto& g = state_.g;
    for (int i = 0; i < m; ++i) {
      if (g[i] > m) {
        status_ = Status::no_stable;
        return;
      }
    }
    // Best proposer over all vectors <= G, counting distinct women on the way.
    for (int i = 0; i < m; ++i) {
      for (int k = 1; k <= g[i]; ++k) {
        const int q = inst.woman_at(i, k);
        int& best = state_.cur_best[q];
        if (best == kNone) {
          best = i;
          if (++state_.numw > m) {
            status_ = Status::no_stable;
            return;
          }
        } else if (inst.woman_prefers(q, i, best)) {
          best = i;
        }
      }
    }
    for (int i = 0; i < m; ++i)
      if (state_.cur_best[rho(inst, g, i)] != i) state_.men_list.push_back(i);
    status_ = state_.men_list.empty() ? Status::stable : Status::running;
  }

  Status status() const { return status_; }
  const AlphaState& state() const { return state_; }

  /// One iteration of the advance loop: the head of the list moves one
  /// choice further. Returns the move, or nothing once the run has ended.
  std::optional<PathEvent> step() {
    if (status_ != Status::running) return std::nullopt;
    auto& g = state_.g;
    const int i = state_.men_list.front();
    if (g[i] >= inst_.men()) {
      status_ = Status::no_stable;
      return std::nullopt;
    }
    const PathEvent event{Phase::up, i, g[i], g[i] + 1, Reason::forbidden};
    ++g[i];
    const int q = rho(inst_, g, i);
    int& best = state_.cur_best[q];
    if (best == kNone) {
      if (++state_.numw > inst_.men()) {
        status_ = Status::no_stable;
        return event;
      }
      best = i;
      state_.men_list.pop_front();
    } else if (inst_.woman_prefers(q, i, best)) {
      if (rho(inst_, g, best) == q) state_.men_list.push_back(best);
      best = i;
      state_.men_list.pop_front();
    }
    if (state_.men_list.empty()) status_ = Status::stable;
    return event;
  }

  Status run(std::vector<PathEvent>* events = nullptr) {
    while (status_ == Status::running) {
      auto e = step();
      if (e && events) events->push_back(*e);
    }
    return status_;
  }

 private:
  const Instance& inst_;
  AlphaState state_;
  Status status_ = Status::running;
};

/// Least stable vector >= initial, or nothing when none exists. Appends one
/// up event per unit increment to `events` when given.
inline std::optional<ProposalVector> run_alpha(const Instance& inst, const ProposalVector& initial,
                                               std::vector<PathEvent>* events = nullptr) {
  AlphaEngine engine(inst, initial);
  if (engine.run(events) != AlphaEngine::Status::stable) return std::nullopt;
  return engine.state().g;
}

/// Man-optimal stable vector (the deferred-acceptance result).
inline ProposalVector man_optimal(const Instance& inst) {
  auto result = run_alpha(inst, ProposalVector::filled(inst.men(), 1));
  if (!result) throw std::logic_error("upward traversal from the bottom found no stable vector");
  return *result;
}

}  // namespace stablepath

#endif  // STABLEPATH_ALPHA_HPP_
