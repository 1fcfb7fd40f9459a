// Shared fixtures and independent reference code for the test suites.

#ifndef STABLEPATH_TESTS_SUPPORT_HPP_
#define STABLEPATH_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <deque>
#include <functional>
#include <random>
#include <vector>

#include "stablepath/stablepath.hpp"

namespace stablepath::testing {

/// Builds an instance from 1-based rows, as written in the text format.
inline Instance from_rows(const std::vector<std::vector<int>>& men_rows,
                          const std::vector<std::vector<int>>& women_rows) {
  auto shift = [](std::vector<std::vector<int>> rows) {
    for (auto& row : rows)
      for (int& v : row) --v;
    return rows;
  };
  return Instance(shift(men_rows), shift(women_rows));
}

/// Three men and three women whose stable vectors are (1,1,1) and (3,3,3).
inline Instance three_by_three() {
  return from_rows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}, {{2, 1, 3}, {3, 2, 1}, {1, 3, 2}});
}

/// Both men want w1, who prefers m2: the only stable vector is (2,1).
inline Instance unique_two() { return from_rows({{1, 2}, {1, 2}}, {{2, 1}, {1, 2}}); }

/// Stable vectors (1,1) and (2,2).
inline Instance pair_two() { return from_rows({{1, 2}, {2, 1}}, {{2, 1}, {1, 2}}); }

/// Two men, three women, opposite lists.
inline Instance two_by_three() {
  return from_rows({{1, 2, 3}, {3, 2, 1}}, {{1, 2}, {2, 1}, {1, 2}});
}

inline ProposalVector random_vector(const Instance& inst, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, inst.women());
  std::vector<int> out(inst.men());
  for (int& c : out) c = pick(rng);
  return ProposalVector(std::move(out));
}

inline ProposalVector random_vector_upto(int men, int top, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, top);
  std::vector<int> out(men);
  for (int& c : out) c = pick(rng);
  return ProposalVector(std::move(out));
}

/// Men-proposing deferred acceptance written from the textbook description:
/// free men propose down their lists, each woman keeps her best offer.
inline ProposalVector textbook_gale_shapley(const Instance& inst) {
  const int m = inst.men();
  std::vector<int> next(m, 0), fiance(inst.women(), -1), wife(m, -1);
  std::deque<int> free_men;
  for (int i = 0; i < m; ++i) free_men.push_back(i);
  while (!free_men.empty()) {
    const int man = free_men.front();
    free_men.pop_front();
    const int woman = inst.man_list(man)[next[man]++];
    const int current = fiance[woman];
    const auto list = inst.woman_list(woman);
    auto position = [&](int x) {
      for (std::size_t k = 0; k < list.size(); ++k)
        if (list[k] == x) return static_cast<int>(k);
      return static_cast<int>(list.size());
    };
    if (current == -1) {
      fiance[woman] = man;
      wife[man] = woman;
    } else if (position(man) < position(current)) {
      fiance[woman] = man;
      wife[man] = woman;
      wife[current] = -1;
      free_men.push_back(current);
    } else {
      free_men.push_back(man);
    }
  }
  std::vector<int> out(m);
  for (int i = 0; i < m; ++i) {
    const auto list = inst.man_list(i);
    for (std::size_t k = 0; k < list.size(); ++k)
      if (list[k] == wife[i]) out[i] = static_cast<int>(k) + 1;
  }
  return ProposalVector(std::move(out));
}

/// Every down-closed rotation set, by brute force over the precedence
/// relation. Makes no use of the list order of the rotations.
inline void for_each_closed_subset(const RotationPoset& poset,
                                   const std::function<void(const std::vector<char>&)>& visit) {
  const int r = static_cast<int>(poset.rotations.size());
  std::vector<char> chosen(r, 0);
  std::function<void(int)> go = [&](int k) {
    if (k == r) {
      visit(chosen);
      return;
    }
    bool can_skip = true, can_take = true;
    for (int a = 0; a < k; ++a) {
      if (poset.precedes[k][a] && chosen[a]) can_skip = false;
      if (poset.precedes[a][k] && !chosen[a]) can_take = false;
    }
    if (can_skip) go(k + 1);
    if (can_take) {
      chosen[k] = 1;
      go(k + 1);
      chosen[k] = 0;
    }
  };
  go(0);
}

inline std::int64_t count_closed_subsets(const RotationPoset& poset) {
  std::int64_t count = 0;
  for_each_closed_subset(poset, [&](const std::vector<char>&) { ++count; });
  return count;
}

/// Highest-ranked proposer to each woman over all vectors <= g, or kNone.
inline std::vector<int> top_proposer_below(const Instance& inst, const ProposalVector& g) {
  std::vector<int> best(inst.women(), kNone);
  for (int i = 0; i < inst.men(); ++i) {
    for (int k = 1; k <= g[i]; ++k) {
      const int q = inst.woman_at(i, k);
      if (best[q] == kNone || inst.woman_prefers(q, i, best[q])) best[q] = i;
    }
  }
  return best;
}

}  // namespace stablepath::testing

#endif  // STABLEPATH_TESTS_SUPPORT_HPP_
