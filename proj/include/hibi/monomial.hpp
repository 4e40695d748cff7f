#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hibi {

// Squarefree supports are bitmasks over variable indices.
using VarMask = std::uint64_t;

// The r x n grid of variables x_{ij}. Variable (level, elem) has flat index
// level * elems + elem, both 0-based.
struct Ambient {
  int levels = 0;
  int elems = 0;

  int size() const { return levels * elems; }
  int index(int level, int elem) const { return level * elems + elem; }
  int level_of(int var) const { return var / elems; }
  int elem_of(int var) const { return var % elems; }
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

struct GridVariable {
  int level;
  int elem;
  friend auto operator<=>(const GridVariable&, const GridVariable&) = default;
};

// Dense exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);
  static Monomial variable(int nvars, int var);
  static Monomial from_mask(int nvars, VarMask mask);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int operator[](int var) const { return exps_[var]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return degree_; }
  VarMask support() const;
  bool is_squarefree() const;
  bool is_one() const { return degree_ == 0; }

  void increment(int var, int by = 1);
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  // Arbitrary but fixed total order, for containers.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

// Total order on variables: rank[var] is the position in decreasing order
// (rank 0 is the largest variable).
class VariableOrder {
 public:
  static VariableOrder row_major(const Ambient& ambient);
  static VariableOrder column_major(const Ambient& ambient);
  // `decreasing` lists every variable index once, largest first.
  static VariableOrder custom(std::vector<int> decreasing);

  int size() const { return static_cast<int>(sequence_.size()); }
  int rank(int var) const { return rank_[var]; }
  // Variable at position `pos` (0 is the largest).
  int at(int pos) const { return sequence_[pos]; }
  bool greater(int a, int b) const { return rank_[a] < rank_[b]; }
  // Lexicographic comparison induced by the variable order: negative if
  // u < v, zero if equal, positive if u > v.
  int lex_compare(const Monomial& u, const Monomial& v) const;

 private:
  explicit VariableOrder(std::vector<int> decreasing);
  std::vector<int> sequence_;
  std::vector<int> rank_;
};

// A monomial ideal given by its minimal generators, stored in decreasing
// RowMajor lex order.
class MonomialIdeal {
 public:
  MonomialIdeal(Ambient ambient, std::vector<Monomial> generators);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int size() const { return static_cast<int>(gens_.size()); }
  bool is_squarefree() const;
  // Common degree of all generators, or -1 if mixed (or no generators).
  int equigenerated_degree() const;
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
  }

 private:
  Ambient ambient_;
  std::vector<Monomial> gens_;
};

// Divisibility-minimal subset, duplicates removed.
MonomialIdeal minimalize(const Ambient& ambient, std::vector<Monomial> gens);
MonomialIdeal power(const MonomialIdeal& ideal, int k);
// Ideal generated by the squarefree elements of I^k.
MonomialIdeal squarefree_power(const MonomialIdeal& ideal, int k);
// Inclusion-minimal vertex covers of the generator supports.
std::vector<VarMask> minimal_primes(const MonomialIdeal& ideal);
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

struct PolymatroidalWitness {
  Monomial u, v;
  int t;  // variable index
};

struct PolymatroidalResult {
  bool holds = true;
  std::optional<PolymatroidalWitness> witness;
};

PolymatroidalResult is_weakly_polymatroidal(const MonomialIdeal& ideal, const VariableOrder& order);

struct LinearQuotients {
  bool ok = true;
  int failed_at = -1;                // first index whose colon ideal is not linear
  std::vector<Monomial> order;       // generator order used
  std::vector<VarMask> sets;         // set(u_i), aligned with `order`
};

std::vector<Monomial> decreasing_lex(std::vector<Monomial> gens, const VariableOrder& order);
LinearQuotients linear_quotients(const MonomialIdeal& ideal, const std::vector<Monomial>& gen_order);
LinearQuotients linear_quotients(const MonomialIdeal& ideal, const VariableOrder& order);

// `x[i,j]^e` factors joined by `*`, 1-based indices; "1" for the unit.
std::string to_string(const Monomial& m, const Ambient& ambient);
std::string variable_name(int var, const Ambient& ambient);

}  // namespace hibi
