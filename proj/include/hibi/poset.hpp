#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hibi {

// Subsets of a poset are bitmasks over the canonical element indices.
using ElementSet = std::uint64_t;
inline constexpr int kMaxElements = 64;

inline int popcount(std::uint64_t m) { return __builtin_popcountll(m); }
inline bool is_subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }
inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// A finite poset whose elements are indexed 0..n-1 along a linear extension:
// p_i < p_j implies i < j. Immutable after construction.
class Poset {
 public:
  // `relations` are pairs (a, b) meaning a < b, given in input indices. The
  // order is transitively closed, checked for cycles, and the elements are
  // relabeled by a stable topological sort of the input order.
  Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& relations);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // Position of canonical element i in the input list.
  int input_index(int i) const { return input_index_[i]; }

  bool leq(int a, int b) const { return (down_[b] >> a) & 1; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  // Principal ideal <p> = {q : q <= p}.
  ElementSet down(int p) const { return down_[p]; }
  ElementSet up(int p) const { return up_[p]; }
  ElementSet all() const { return size() == 64 ? ~ElementSet{0} : bit(size()) - 1; }

  std::vector<std::pair<int, int>> covers() const;
  bool is_ideal(ElementSet s) const;
  // Minimal elements of the subset s.
  ElementSet minimal_elements(ElementSet s) const;
  int index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> input_index_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
};

// Chain I_1 ⊆ ... ⊆ I_r = P of poset ideals.
struct Multichain {
  std::vector<ElementSet> ideals;

  int length() const { return static_cast<int>(ideals.size()); }
  ElementSet operator[](int i) const { return ideals[i]; }
  // Componentwise inclusion; a partial order making the multichains a
  // distributive lattice.
  bool leq(const Multichain& other) const;
  Multichain meet(const Multichain& other) const;
  Multichain join(const Multichain& other) const;
  int rank() const;  // sum of |I_i|

  friend bool operator==(const Multichain&, const Multichain&) = default;
  friend auto operator<=>(const Multichain&, const Multichain&) = default;
};

// Validates downward closure, nesting, and I_r = P.
void check_multichain(const Poset& poset, const Multichain& chain);
ElementSet checked_ideal(const Poset& poset, ElementSet members);

// Weakly increasing sequence p_{j_1} <= ... <= p_{j_r} of elements.
using ElementMultichain = std::vector<int>;

// Canonical order on ideals: by cardinality, then lexicographically on the
// sorted list of member indices.
bool ideal_order_less(ElementSet a, ElementSet b);

Poset parse_poset(std::string_view document);
Poset chain_poset(int m);
Poset antichain_poset(int m);
Poset direct_product(const Poset& p, const Poset& q);

std::vector<ElementSet> poset_ideals(const Poset& poset);
std::vector<Multichain> multichain_ideals(const Poset& poset, int r);
std::vector<ElementMultichain> element_multichains(const Poset& poset, int r);

int width(const Poset& poset);
bool is_pure(const Poset& poset);
bool is_antichain(const Poset& poset);

// Join-irreducible elements of the multichain lattice for r >= 2, each one
// the chain ∅ ⊆ ... ⊆ ∅ ⊂ <p> = ... = <p> ⊂ P with k copies of <p>.
struct JoinIrreducibles {
  Poset poset;                             // ordered componentwise
  std::vector<Multichain> chains;          // aligned with poset elements
  std::vector<std::pair<int, int>> labels;  // (p, k) with 1 <= k <= r-1
};

JoinIrreducibles join_irreducibles_of_multichain_lattice(const Poset& poset, int r);
// The multichain attached to (p, k) by the bijection above.
Multichain principal_multichain(const Poset& poset, int r, int p, int k);

bool is_isomorphic(const Poset& a, const Poset& b);
// All posets on n elements up to isomorphism, in a deterministic order.
std::vector<Poset> all_posets(int n);

}  // namespace hibi
