// Path logs: sequences of single-man choice changes between proposal vectors.

#ifndef STABLEPATH_PATH_HPP_
#define STABLEPATH_PATH_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "stablepath/lattice.hpp"

namespace stablepath {

enum class Phase { down, up };

/// Why an engine moved a man. Only `blocking_pair` and `forbidden` moves are
/// certified by a lattice predicate; `clamp` (choice beyond m) and `trim`
/// (proposals past the man-optimal women) are bound adjustments.
enum class Reason { blocking_pair, forbidden, clamp, trim };

struct PathEvent {
  Phase phase;
  int man;
  int from_choice;
  int to_choice;
  Reason reason;

  friend bool operator==(const PathEvent&, const PathEvent&) = default;
};

inline const char* phase_name(Phase p) { return p == Phase::down ? "down" : "up"; }

inline const char* reason_name(Reason r) {
  switch (r) {
    case Reason::blocking_pair: return "blocking_pair";
    case Reason::forbidden: return "forbidden";
    case Reason::clamp: return "clamp";
    case Reason::trim: return "trim";
  }
  return "?";
}

struct PathLog {
  ProposalVector initial;
  std::vector<PathEvent> events;
  ProposalVector final;
};

class ReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies one event to `g`, checking it against the running vector.
inline void apply_event(ProposalVector& g, const PathEvent& e) {
  if (e.man < 0 || e.man >= g.size())
    throw ReplayError("event names man " + std::to_string(e.man + 1) + " out of range");
  if (g[e.man] != e.from_choice) {
    throw ReplayError("event for man " + std::to_string(e.man + 1) + " starts at choice " +
                      std::to_string(e.from_choice) + " but the vector holds " +
                      std::to_string(g[e.man]));
  }
  const bool shape_ok = e.phase == Phase::down ? e.to_choice < e.from_choice
                                               : e.to_choice == e.from_choice + 1;
  if (!shape_ok || e.to_choice < 1)
    throw ReplayError("malformed " + std::string(phase_name(e.phase)) + " event");
  g[e.man] = e.to_choice;
}

/// Vectors G_0..G_t visited by the log.
inline std::vector<ProposalVector> replay(const PathLog& log) {
  std::vector<ProposalVector> out{log.initial};
  ProposalVector g = log.initial;
  for (const auto& e : log.events) {
    apply_event(g, e);
    out.push_back(g);
  }
  if (g != log.final) throw ReplayError("replayed vector differs from the logged final vector");
  return out;
}

/// Splits each down jump into unit decrements; up events are unit already.
inline std::vector<PathEvent> expand_unit_steps(const std::vector<PathEvent>& events) {
  std::vector<PathEvent> out;
  for (const auto& e : events) {
    if (e.phase == Phase::up) {
      out.push_back(e);
      continue;
    }
    for (int c = e.from_choice; c > e.to_choice; --c)
      out.push_back({Phase::down, e.man, c, c - 1, e.reason});
  }
  return out;
}

}  // namespace stablepath

#endif  // STABLEPATH_PATH_HPP_
