#pragma once

#include <random>
#include <vector>

#include "conescope/group_model.hpp"
#include "conescope/order.hpp"

namespace conescope::testing {

inline GroupModel f2() { return GroupModel::free_group(2); }
inline GroupModel z2() { return GroupModel::free_abelian(2); }
inline GroupModel klein() { return GroupModel::klein_bottle(); }
inline GroupModel f2_times_z() { return GroupModel::direct_product(f2(), GroupModel::free_abelian(1)); }

inline Order magnus_f2() { return Order::magnus(f2()); }
// Weights (1, sqrt 2).
inline Order irrational_z2() { return Order::hyperplane(z2(), {{1, 0}, {0, 1}}); }
// Weights (1, 0): x decides, y breaks ties.
inline Order lex_z2() { return Order::hyperplane(z2(), {{1, 0}, {0, 0}}); }
inline Order klein_order() { return Order::klein(klein()); }
inline Order z_order() { return Order::hyperplane(GroupModel::free_abelian(1), {{1, 0}}); }
// (P x Z) ∪ ({1} x Z>=1).
inline Order f2_leading() {
  const GroupModel m = f2_times_z();
  return Order::lex_pair(m, Order::magnus(m.factor(0)), z_order(), 0);
}
// The Z coordinate decides; z = c is central and cofinal.
inline Order z_leading() {
  const GroupModel m = f2_times_z();
  return Order::lex_pair(m, z_order(), Order::magnus(m.factor(0)), 1);
}

inline Word random_word(std::mt19937_64& rng, int generators, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> code(0, 2 * generators - 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& l : w) l = Letter{static_cast<std::uint8_t>(code(rng))};
  return w;
}

}  // namespace conescope::testing
