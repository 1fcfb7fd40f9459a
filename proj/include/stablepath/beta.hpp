// Downward traversal: greatest stable proposal vector <= a given start.
//
// After clamping every choice to m and trimming proposals to the women of
// the man-optimal matching (W'), each tracked woman walks down her own list
// (wchoice) until she meets the best man who proposed to her in some vector
// <= G. If that man has since moved past her, he is her best blocking
// partner and jumps back to her. The whole run is O(m^2 + w).

#ifndef STABLEPATH_BETA_HPP_
#define STABLEPATH_BETA_HPP_

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stablepath/alpha.hpp"
#include "stablepath/instance.hpp"
#include "stablepath/lattice.hpp"
#include "stablepath/path.hpp"

namespace stablepath {

struct BetaState {
  ProposalVector g;
  std::vector<char> tracked;   // W' for a plain run
  std::vector<int> wchoice;    // per tracked woman, 1-based rank in her list
  std::deque<int> women_list;  // FIFO, no duplicates
  std::vector<char> listed;
};

/// Blocking-pair satisfaction loop over a fixed set of tracked women. Every
/// woman that receives a proposal in some vector <= the starting G must be
/// tracked.
class DownwardEngine {
 public:
  DownwardEngine(const Instance& inst, ProposalVector g, std::vector<char> tracked)
      : inst_(inst) {
    const int w = inst.women();
    state_.g = std::move(g);
    state_.tracked = std::move(tracked);
    state_.wchoice.assign(w, 0);
    state_.listed.assign(w, 0);
    for (int j = 0; j < w; ++j)
      if (state_.tracked[j]) state_.wchoice[j] = 1;
    // Women held at G by men 1..m first, then the remaining tracked women.
    for (int i = 0; i < inst.men(); ++i) enlist(rho(inst, state_.g, i));
    for (int j = 0; j < w; ++j)
      if (state_.tracked[j]) enlist(j);
  }

  bool done() const { return state_.women_list.empty(); }
  const BetaState& state() const { return state_; }

  /// One iteration of the loop. Returns the move when a blocking pair was
  /// satisfied.
  std::optional<PathEvent> step() {
    if (done()) return std::nullopt;
    auto& g = state_.g;
    const int q = state_.women_list.front();
    int& choice = state_.wchoice[q];
    if (choice > inst_.men()) {
      // Nobody proposes to q in any vector <= G any more.
      delist_front();
      return std::nullopt;
    }
    const int p = inst_.man_at(q, choice);
    const int r = inst_.man_choice(p, q);
    if (r == g[p]) {
      delist_front();
      return std::nullopt;
    }
    if (r > g[p]) {
      ++choice;
      return std::nullopt;
    }
    const int left = rho(inst_, g, p);
    if (!state_.tracked[left]) throw std::logic_error("proposal to an untracked woman");
    const PathEvent event{Phase::down, p, g[p], r, Reason::blocking_pair};
    g[p] = r;
    delist_front();
    enlist(left);
    return event;
  }

  void run(std::vector<PathEvent>* events = nullptr) {
    while (!done()) {
      auto e = step();
      if (e && events) events->push_back(*e);
    }
  }

 private:
  void enlist(int q) {
    if (!state_.tracked[q] || state_.listed[q]) return;
    state_.listed[q] = 1;
    state_.women_list.push_back(q);
  }
  void delist_front() {
    state_.listed[state_.women_list.front()] = 0;
    state_.women_list.pop_front();
  }

  const Instance& inst_;
  BetaState state_;
};

/// Clamp, guard against the man-optimal vector, trim to W', then satisfy
/// best blocking pairs.
class BetaEngine {
 public:
  enum class Status { running, stable, no_stable };

  BetaEngine(const Instance& inst, const ProposalVector& initial) {
    require_valid(inst, initial);
    const int m = inst.men();
    ProposalVector g = initial;
    for (int i = 0; i < m; ++i) {
      if (g[i] > m) {
        prep_events_.push_back({Phase::down, i, g[i], m, Reason::clamp});
        g[i] = m;
      }
    }
    if (numw(inst, g) < m) {
      status_ = Status::no_stable;
      return;
    }
    man_optimal_ = man_optimal(inst);
    const auto& low = man_optimal_;
    for (int i = 0; i < m; ++i) {
      if (g[i] < low[i]) {
        status_ = Status::no_stable;
        return;
      }
    }
    std::vector<char> in_core(inst.women(), 0);
    for (int i = 0; i < m; ++i) in_core[rho(inst, low, i)] = 1;
    for (int i = 0; i < m; ++i) {
      int k = low[i];
      while (k < g[i] && in_core[inst.woman_at(i, k + 1)]) ++k;
      if (k < g[i]) {
        prep_events_.push_back({Phase::down, i, g[i], k, Reason::trim});
        g[i] = k;
      }
    }
    engine_.emplace(inst, std::move(g), std::move(in_core));
    status_ = engine_->done() ? Status::stable : Status::running;
  }

  Status status() const { return status_; }
  /// Clamp and trim moves made before the blocking-pair loop.
  const std::vector<PathEvent>& prep_events() const { return prep_events_; }
  /// Present unless a guard rejected the start.
  const DownwardEngine* engine() const { return engine_ ? &*engine_ : nullptr; }
  const ProposalVector& man_optimal_vector() const { return man_optimal_; }

  std::optional<PathEvent> step() {
    if (status_ != Status::running) return std::nullopt;
    auto e = engine_->step();
    if (engine_->done()) status_ = Status::stable;
    return e;
  }

  Status run(std::vector<PathEvent>* events = nullptr) {
    if (events) events->insert(events->end(), prep_events_.begin(), prep_events_.end());
    while (status_ == Status::running) {
      auto e = step();
      if (e && events) events->push_back(*e);
    }
    return status_;
  }

  const ProposalVector& vector() const { return engine_->state().g; }

 private:
  Status status_ = Status::running;
  std::vector<PathEvent> prep_events_;
  ProposalVector man_optimal_;
  std::optional<DownwardEngine> engine_;
};

/// Greatest stable vector <= initial, or nothing when none exists. Logged
/// events are the clamp/trim adjustments followed by one jump per satisfied
/// blocking pair.
inline std::optional<ProposalVector> run_beta(const Instance& inst, const ProposalVector& initial,
                                              std::vector<PathEvent>* events = nullptr) {
  BetaEngine engine(inst, initial);
  std::vector<PathEvent> local;
  if (engine.run(&local) != BetaEngine::Status::stable) return std::nullopt;
  if (events) events->insert(events->end(), local.begin(), local.end());
  return engine.vector();
}

/// Woman-optimal stable vector.
inline ProposalVector woman_optimal(const Instance& inst) {
  auto result = run_beta(inst, ProposalVector::filled(inst.men(), inst.men()));
  if (!result) throw std::logic_error("downward traversal from the top found no stable vector");
  return *result;
}

}  // namespace stablepath

#endif  // STABLEPATH_BETA_HPP_
