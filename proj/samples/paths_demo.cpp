// Walks the three-by-three sample instance through every traversal.

#include <iostream>

#include "stablepath/stablepath.hpp"

int main() {
  using namespace stablepath;
  const auto inst = parse_instance(R"(men 3
women 3
mpref
1 2 3
2 3 1
3 1 2
wpref
2 1 3
3 2 1
1 3 2
)");
  const ProposalVector start{2, 2, 2};

  if (auto up = run_alpha(inst, start)) std::cout << "alpha: " << up->to_string() << '\n';
  if (auto down = run_beta(inst, start)) std::cout << "beta:  " << down->to_string() << '\n';

  const auto log = run_gamma(inst, start);
  std::cout << "gamma: " << log.final.to_string() << " after " << log.events.size()
            << " moves\n";
  for (const auto& e : log.events) {
    std::cout << "  " << phase_name(e.phase) << " man " << e.man + 1 << ": " << e.from_choice
              << " -> " << e.to_choice << '\n';
  }

  const auto closest = run_delta(inst, start);
  std::cout << "delta: " << closest.to_string() << " (distance " << dist(start, closest)
            << ")\n";
}
