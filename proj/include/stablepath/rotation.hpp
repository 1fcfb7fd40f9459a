// Rotations between the man-optimal and woman-optimal matchings, and the
// precedence order among them. Down-closed rotation sets correspond one to
// one with stable matchings.

#ifndef STABLEPATH_ROTATION_HPP_
#define STABLEPATH_ROTATION_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stablepath/alpha.hpp"
#include "stablepath/instance.hpp"
#include "stablepath/lattice.hpp"

namespace stablepath {

struct RotationEntry {
  int man;
  int from_woman;
  int to_woman;
  friend bool operator==(const RotationEntry&, const RotationEntry&) = default;
};

struct Rotation {
  std::vector<RotationEntry> cycle;  // starts at its smallest man
  std::int64_t weight = 0;
};

struct RotationPoset {
  ProposalVector man_optimal;
  std::vector<Rotation> rotations;  // listed in a valid elimination order
  std::vector<std::vector<int>> direct_predecessors;
  std::vector<std::vector<char>> precedes;  // precedes[a][b]: a strictly before b
};

/// A stable matching held as partner arrays, every man matched.
struct StableMarriage {
  std::vector<int> wife;
  std::vector<int> husband;

  static StableMarriage from_vector(const Instance& inst, const ProposalVector& g) {
    StableMarriage out{std::vector<int>(inst.men()), std::vector<int>(inst.women(), kNone)};
    for (int i = 0; i < inst.men(); ++i) {
      out.wife[i] = rho(inst, g, i);
      out.husband[out.wife[i]] = i;
    }
    return out;
  }
};

namespace detail {

// First woman after man's partner who prefers him to her own partner; kNone
// when an unmatched woman comes first (passing her would create a blocking
// pair) or the list runs out.
inline int next_woman(const Instance& inst, const StableMarriage& s, int man) {
  for (int c = inst.man_choice(man, s.wife[man]) + 1; c <= inst.women(); ++c) {
    const int q = inst.woman_at(man, c);
    const int h = s.husband[q];
    if (h == kNone) return kNone;
    if (inst.woman_prefers(q, man, h)) return q;
  }
  return kNone;
}

using RotationKey = std::vector<std::pair<int, int>>;

inline RotationKey key_of(const Rotation& r) {
  RotationKey key;
  for (const auto& e : r.cycle) key.emplace_back(e.man, e.from_woman);
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace detail

/// Cycles of the next-man graph of `s`, each starting at its smallest man,
/// ordered by that man.
inline std::vector<Rotation> exposed_rotations(const Instance& inst, const StableMarriage& s) {
  const int m = inst.men();
  std::vector<int> to(m, kNone), next_man(m, kNone);
  for (int i = 0; i < m; ++i) {
    to[i] = detail::next_woman(inst, s, i);
    if (to[i] != kNone) next_man[i] = s.husband[to[i]];
  }
  std::vector<int> color(m, 0);  // 0 new, 1 on current walk, 2 finished
  std::vector<Rotation> out;
  for (int start = 0; start < m; ++start) {
    std::vector<int> walk;
    int u = start;
    while (u != kNone && color[u] == 0) {
      color[u] = 1;
      walk.push_back(u);
      u = next_man[u];
    }
    if (u != kNone && color[u] == 1) {
      Rotation rot;
      auto it = std::find(walk.begin(), walk.end(), u);
      std::vector<int> men(it, walk.end());
      std::rotate(men.begin(), std::min_element(men.begin(), men.end()), men.end());
      for (int man : men) rot.cycle.push_back({man, s.wife[man], to[man]});
      out.push_back(std::move(rot));
    }
    for (int v : walk) color[v] = 2;
  }
  std::sort(out.begin(), out.end(), [](const Rotation& a, const Rotation& b) {
    return a.cycle.front().man < b.cycle.front().man;
  });
  return out;
}

inline bool is_exposed(const Instance& inst, const StableMarriage& s, const Rotation& rot) {
  for (const auto& e : rot.cycle) {
    if (s.wife[e.man] != e.from_woman) return false;
    if (detail::next_woman(inst, s, e.man) != e.to_woman) return false;
  }
  return true;
}

inline void eliminate(StableMarriage& s, const Rotation& rot) {
  for (const auto& e : rot.cycle) s.wife[e.man] = e.to_woman;
  for (const auto& e : rot.cycle) s.husband[e.to_woman] = e.man;
}

/// All rotations, found along one maximal elimination chain from the
/// man-optimal matching, with precedence computed by avoidance: a precedes
/// b iff b never becomes exposed when every rotation except a may be
/// eliminated.
inline RotationPoset extract_rotations(const Instance& inst) {
  RotationPoset poset;
  poset.man_optimal = man_optimal(inst);
  const auto bottom = StableMarriage::from_vector(inst, poset.man_optimal);

  auto s = bottom;
  std::map<detail::RotationKey, int> index;
  for (auto exposed = exposed_rotations(inst, s); !exposed.empty();
       exposed = exposed_rotations(inst, s)) {
    index.emplace(detail::key_of(exposed.front()), static_cast<int>(poset.rotations.size()));
    eliminate(s, exposed.front());
    poset.rotations.push_back(std::move(exposed.front()));
  }

  const int r = static_cast<int>(poset.rotations.size());
  poset.precedes.assign(r, std::vector<char>(r, 0));
  for (int a = 0; a < r; ++a) {
    const auto avoided = detail::key_of(poset.rotations[a]);
    std::vector<char> reached(r, 0);
    auto t = bottom;
    for (;;) {
      const Rotation* pick = nullptr;
      const auto exposed = exposed_rotations(inst, t);
      for (const auto& cand : exposed) {
        if (detail::key_of(cand) != avoided) {
          pick = &cand;
          break;
        }
      }
      if (!pick) break;
      const auto found = index.find(detail::key_of(*pick));
      if (found == index.end()) throw std::logic_error("rotation missing from the chain");
      reached[found->second] = 1;
      eliminate(t, *pick);
    }
    for (int b = 0; b < r; ++b)
      if (b != a && !reached[b]) poset.precedes[a][b] = 1;
  }

  poset.direct_predecessors.assign(r, {});
  for (int b = 0; b < r; ++b) {
    for (int a = 0; a < r; ++a) {
      if (!poset.precedes[a][b]) continue;
      bool direct = true;
      for (int c = 0; c < r && direct; ++c)
        if (poset.precedes[a][c] && poset.precedes[c][b]) direct = false;
      if (direct) poset.direct_predecessors[b].push_back(a);
    }
  }
  return poset;
}

inline bool is_closed(const RotationPoset& poset, const std::vector<char>& chosen) {
  for (std::size_t b = 0; b < chosen.size(); ++b) {
    if (!chosen[b]) continue;
    for (int a : poset.direct_predecessors[b])
      if (!chosen[a]) return false;
  }
  return true;
}

/// Stable vector reached from the man-optimal one by eliminating a closed
/// set of rotations (in list order, which extends the precedence order).
inline ProposalVector apply_rotations(const Instance& inst, const RotationPoset& poset,
                                      const std::vector<char>& chosen) {
  if (!is_closed(poset, chosen)) throw std::invalid_argument("rotation set is not closed");
  auto s = StableMarriage::from_vector(inst, poset.man_optimal);
  for (std::size_t k = 0; k < poset.rotations.size(); ++k) {
    if (!chosen[k]) continue;
    if (!is_exposed(inst, s, poset.rotations[k]))
      throw std::logic_error("rotation not exposed at its turn");
    eliminate(s, poset.rotations[k]);
  }
  return vector_of(inst, s.wife);
}

}  // namespace stablepath

#endif  // STABLEPATH_ROTATION_HPP_
