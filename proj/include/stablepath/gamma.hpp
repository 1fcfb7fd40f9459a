// Path to stability from any start: a downward phase that brings G under the
// woman-optimal vector U, then an upward traversal from there.
//
// The downward phase watches K = max(G, U). Best blocking pairs of K only
// ever involve men with K[i] = G[i] > U[i]; each one moves both K[i] and
// G[i] to the blocking woman. When K reaches U, G = min(G_0, U) and the
// upward traversal from G cannot fail. At most 2m^2 events in total.

#ifndef STABLEPATH_GAMMA_HPP_
#define STABLEPATH_GAMMA_HPP_

#include <stdexcept>
#include <vector>

#include "stablepath/alpha.hpp"
#include "stablepath/beta.hpp"
#include "stablepath/lattice.hpp"
#include "stablepath/path.hpp"

namespace stablepath {

/// Intermediate vectors of a path run, for callers that check the phases.
struct GammaTrace {
  ProposalVector woman_optimal;
  ProposalVector clamped;        // start after choices beyond m were clamped
  ProposalVector after_descent;  // G when the downward phase ends
  ProposalVector k_after_descent;
  std::size_t down_events = 0;
};

inline PathLog run_gamma(const Instance& inst, const ProposalVector& initial,
                         GammaTrace* trace = nullptr) {
  require_valid(inst, initial);
  const int m = inst.men();
  PathLog log{initial, {}, {}};
  const ProposalVector upper = woman_optimal(inst);

  ProposalVector g = initial;
  for (int i = 0; i < m; ++i) {
    if (g[i] > m) {
      log.events.push_back({Phase::down, i, g[i], m, Reason::clamp});
      g[i] = m;
    }
  }
  const ProposalVector clamped = g;

  // The descent tracks every woman proposed to at or below K rather than
  // trimming K to W', so that every move is a best blocking pair of K.
  const ProposalVector k0 = join(g, upper);
  std::vector<char> tracked(inst.women(), 0);
  for (int i = 0; i < m; ++i)
    for (int c = 1; c <= k0[i]; ++c) tracked[inst.woman_at(i, c)] = 1;
  DownwardEngine descent(inst, k0, std::move(tracked));
  while (!descent.done()) {
    auto e = descent.step();
    if (!e) continue;
    if (g[e->man] != e->from_choice)
      throw std::logic_error("descent moved a man whose G and K components differ");
    g[e->man] = e->to_choice;
    log.events.push_back(*e);
  }
  const std::size_t down_events = log.events.size();

  AlphaEngine ascent(inst, g);
  if (ascent.run(&log.events) != AlphaEngine::Status::stable)
    throw std::logic_error("upward phase failed below the woman-optimal vector");
  log.final = ascent.state().g;

  if (trace) {
    *trace = GammaTrace{upper, clamped, g, descent.state().g, down_events};
  }
  return log;
}

/// Induced matching at the start and after every event of the log.
inline std::vector<Matching> matchings_of_path(const Instance& inst, const PathLog& log) {
  std::vector<Matching> out;
  for (const auto& g : replay(log)) {
    require_valid(inst, g);
    out.push_back(induced_matching(inst, g));
  }
  return out;
}

}  // namespace stablepath

#endif  // STABLEPATH_GAMMA_HPP_
