// Proposal-vector primitives shared by every traversal engine: the induced
// matching, blocking pairs, the forbidden / rForbidden predicates, stability,
// and the lattice operations on vectors.
//
// The predicates here are direct reference implementations. The engines in
// alpha.hpp and beta.hpp keep incremental state that must agree with them.

#ifndef STABLEPATH_LATTICE_HPP_
#define STABLEPATH_LATTICE_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stablepath/instance.hpp"

namespace stablepath {

/// Per-man 1-based choice numbers. Ordered componentwise for lattice
/// purposes (see leq); operator<=> is lexicographic and only used for
/// sorting.
class ProposalVector {
 public:
  ProposalVector() = default;
  explicit ProposalVector(std::vector<int> choices) : choices_(std::move(choices)) {}
  ProposalVector(std::initializer_list<int> choices) : choices_(choices) {}

  static ProposalVector filled(int men, int choice) {
    return ProposalVector(std::vector<int>(men, choice));
  }

  int size() const { return static_cast<int>(choices_.size()); }
  int operator[](int man) const { return choices_[man]; }
  int& operator[](int man) { return choices_[man]; }

  auto begin() const { return choices_.begin(); }
  auto end() const { return choices_.end(); }
  const std::vector<int>& choices() const { return choices_; }

  friend bool operator==(const ProposalVector&, const ProposalVector&) = default;
  friend auto operator<=>(const ProposalVector&, const ProposalVector&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < choices_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(choices_[i]);
    }
    return out;
  }

 private:
  std::vector<int> choices_;
};

inline bool valid_for(const Instance& inst, const ProposalVector& g) {
  if (g.size() != inst.men()) return false;
  return std::all_of(g.begin(), g.end(),
                     [&](int c) { return c >= 1 && c <= inst.women(); });
}

inline void require_valid(const Instance& inst, const ProposalVector& g) {
  if (g.size() != inst.men()) {
    throw std::invalid_argument("proposal vector has " + std::to_string(g.size()) +
                                " entries, expected " + std::to_string(inst.men()));
  }
  for (int i = 0; i < g.size(); ++i) {
    if (g[i] < 1 || g[i] > inst.women()) {
      throw std::invalid_argument("choice " + std::to_string(g[i]) + " of man " +
                                  std::to_string(i + 1) + " out of range [1.." +
                                  std::to_string(inst.women()) + "]");
    }
  }
}

/// Woman that man `man` proposes to in `g`.
inline int rho(const Instance& inst, const ProposalVector& g, int man) {
  return inst.woman_at(man, g[man]);
}

inline constexpr int kNone = -1;

struct Matching {
  std::vector<int> wife;     // per man, kNone when unmatched
  std::vector<int> husband;  // per woman, kNone when unmatched

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(wife.size()); ++i)
      if (wife[i] != kNone) out.emplace_back(i, wife[i]);
    return out;
  }
  int size() const {
    return static_cast<int>(std::count_if(wife.begin(), wife.end(),
                                          [](int j) { return j != kNone; }));
  }
  friend bool operator==(const Matching&, const Matching&) = default;
};

struct BlockingPair {
  int man;
  int woman;
  friend auto operator<=>(const BlockingPair&, const BlockingPair&) = default;
};

/// Best proposer each woman receives at exactly `g`, or kNone.
inline std::vector<int> best_proposer_at(const Instance& inst, const ProposalVector& g) {
  std::vector<int> best(inst.women(), kNone);
  for (int i = 0; i < inst.men(); ++i) {
    const int q = rho(inst, g, i);
    if (best[q] == kNone || inst.woman_prefers(q, i, best[q])) best[q] = i;
  }
  return best;
}

/// Man i is matched to rho(g, i) iff his proposal is that woman's best in g.
inline Matching induced_matching(const Instance& inst, const ProposalVector& g) {
  Matching out{std::vector<int>(inst.men(), kNone), best_proposer_at(inst, g)};
  for (int j = 0; j < inst.women(); ++j)
    if (out.husband[j] != kNone) out.wife[out.husband[j]] = j;
  return out;
}

/// Number of distinct women proposed to in any vector <= g.
inline int numw(const Instance& inst, const ProposalVector& g) {
  std::vector<char> seen(inst.women(), 0);
  int count = 0;
  for (int i = 0; i < inst.men(); ++i) {
    for (int k = 1; k <= g[i]; ++k) {
      const int q = inst.woman_at(i, k);
      if (!seen[q]) {
        seen[q] = 1;
        ++count;
      }
    }
  }
  return count;
}

inline bool is_man_saturating(const Instance& inst, const ProposalVector& g) {
  std::vector<char> taken(inst.women(), 0);
  for (int i = 0; i < inst.men(); ++i) {
    const int q = rho(inst, g, i);
    if (taken[q]) return false;
    taken[q] = 1;
  }
  return true;
}

namespace detail {

inline bool blocks_given(const Instance& inst, const ProposalVector& g,
                         const std::vector<int>& best_at, int p, int q) {
  if (inst.man_choice(p, q) >= g[p]) return false;  // covers rho(g, p) == q
  return best_at[q] == kNone || inst.woman_prefers(q, p, best_at[q]);
}

}  // namespace detail

/// (p, q) blocks g: p prefers q to rho(g, p), and q prefers p to every
/// proposal she receives at exactly g.
inline bool is_blocking_pair(const Instance& inst, const ProposalVector& g, int p, int q) {
  return detail::blocks_given(inst, g, best_proposer_at(inst, g), p, q);
}

/// All blocking pairs of g in lexicographic (man, woman) order.
inline std::vector<BlockingPair> blocking_pairs(const Instance& inst, const ProposalVector& g) {
  const auto best_at = best_proposer_at(inst, g);
  std::vector<BlockingPair> out;
  for (int p = 0; p < inst.men(); ++p)
    for (int q = 0; q < inst.women(); ++q)
      if (detail::blocks_given(inst, g, best_at, p, q)) out.push_back({p, q});
  return out;
}

/// The blocking partner q likes best, if any.
inline std::optional<int> best_blocking_pair(const Instance& inst, const ProposalVector& g,
                                             int q) {
  const auto best_at = best_proposer_at(inst, g);
  for (int r = 1; r <= inst.men(); ++r) {
    const int p = inst.man_at(q, r);
    if (detail::blocks_given(inst, g, best_at, p, q)) return p;
  }
  return std::nullopt;
}

/// Man i shares his woman with a man she prefers, or some j with
/// (j, rho(g, i)) blocking g exists.
inline bool forbidden(const Instance& inst, const ProposalVector& g, int i) {
  const auto best_at = best_proposer_at(inst, g);
  const int q = rho(inst, g, i);
  for (int j = 0; j < inst.men(); ++j) {
    if (j == i) continue;
    if (rho(inst, g, j) == q && inst.woman_prefers(q, j, i)) return true;
    if (detail::blocks_given(inst, g, best_at, j, q)) return true;
  }
  return false;
}

/// Man i is the best blocking partner of some woman.
inline bool r_forbidden(const Instance& inst, const ProposalVector& g, int i) {
  const auto best_at = best_proposer_at(inst, g);
  for (int q = 0; q < inst.women(); ++q) {
    if (!detail::blocks_given(inst, g, best_at, i, q)) continue;
    bool best = true;
    for (int r = 1; r < inst.woman_rank(q, i); ++r) {
      if (detail::blocks_given(inst, g, best_at, inst.man_at(q, r), q)) {
        best = false;
        break;
      }
    }
    if (best) return true;
  }
  return false;
}

/// Man-saturating with no blocking pair.
inline bool is_stable(const Instance& inst, const ProposalVector& g) {
  if (!is_man_saturating(inst, g)) return false;
  const auto best_at = best_proposer_at(inst, g);
  for (int p = 0; p < inst.men(); ++p) {
    for (int k = 1; k < g[p]; ++k) {
      const int q = inst.woman_at(p, k);
      if (best_at[q] == kNone || inst.woman_prefers(q, p, best_at[q])) return false;
    }
  }
  return true;
}

namespace detail {

inline void require_same_length(const ProposalVector& a, const ProposalVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("proposal vectors differ in length (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
}

}  // namespace detail

/// L1 distance between choice vectors.
inline std::int64_t dist(const ProposalVector& a, const ProposalVector& b) {
  detail::require_same_length(a, b);
  std::int64_t d = 0;
  for (int i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

inline ProposalVector join(const ProposalVector& a, const ProposalVector& b) {
  detail::require_same_length(a, b);
  std::vector<int> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return ProposalVector(std::move(out));
}

inline ProposalVector meet(const ProposalVector& a, const ProposalVector& b) {
  detail::require_same_length(a, b);
  std::vector<int> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return ProposalVector(std::move(out));
}

/// Componentwise a <= b.
inline bool leq(const ProposalVector& a, const ProposalVector& b) {
  detail::require_same_length(a, b);
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Vector of the man-saturating matching `wife` (every man matched).
inline ProposalVector vector_of(const Instance& inst, const std::vector<int>& wife) {
  std::vector<int> out(wife.size());
  for (std::size_t i = 0; i < wife.size(); ++i)
    out[i] = inst.man_choice(static_cast<int>(i), wife[i]);
  return ProposalVector(std::move(out));
}

}  // namespace stablepath

#endif  // STABLEPATH_LATTICE_HPP_
