#pragma once

#include "hibi/poset.hpp"

namespace fixtures {

inline hibi::Poset point() { return hibi::Poset({"p"}, {}); }
inline hibi::Poset chain2() { return hibi::Poset({"a", "b"}, {{0, 1}}); }
inline hibi::Poset a2() { return hibi::Poset({"a", "b"}, {}); }
// a < c, b < c
inline hibi::Poset vee() { return hibi::Poset({"a", "b", "c"}, {{0, 2}, {1, 2}}); }
// p1 < p2, p3 isolated
inline hibi::Poset p4() { return hibi::Poset({"p1", "p2", "p3"}, {{0, 1}}); }

// Multichain from ideals written as element masks.
inline hibi::Multichain mc(std::initializer_list<hibi::ElementSet> ideals) { return hibi::Multichain{ideals}; }

}  // namespace fixtures

#include <utility>
#include <vector>

#include "hibi/monomial.hpp"

namespace fixtures {

// Monomial from 1-based (level, elem) factors.
inline hibi::Monomial x(const hibi::Ambient& amb, std::initializer_list<std::pair<int, int>> factors) {
  hibi::Monomial m(amb.size());
  for (auto [i, j] : factors) m.increment(amb.index(i - 1, j - 1));
  return m;
}

inline hibi::MonomialIdeal ideal(const hibi::Ambient& amb, std::vector<hibi::Monomial> gens) {
  return hibi::MonomialIdeal(amb, std::move(gens));
}

}  // namespace fixtures
