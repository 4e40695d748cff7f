#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hibi/monomial.hpp"
#include "hibi/poset.hpp"

namespace hibi {

// K[y_1..y_m] -> K[x], y_i -> images[i]. With `with_base` the x variables are
// adjoined and y_i -> images[i] t (the Rees algebra). Ring variables are laid
// out as x (only when with_base) followed by y.
struct ToricPresentation {
  Ambient ambient;
  std::vector<Monomial> images;
  std::vector<std::string> names;
  // Factorization of each image into hibi generators, largest first; empty
  // for presentations not built from a poset.
  std::vector<std::vector<Multichain>> factors;
  bool with_base = false;

  int fiber_count() const { return static_cast<int>(images.size()); }
  int base_count() const { return with_base ? ambient.size() : 0; }
  int nvars() const { return base_count() + fiber_count(); }
  int y(int i) const { return base_count() + i; }
  std::string variable_name(int var) const;
};

// y-variables for G_{r,s}(P), named y[I_1;...;I_r] (factors joined by '|').
ToricPresentation fiber_presentation(const Poset& poset, int r, int s);
// Squarefree Veronese of degree d in r variables, generators in decreasing
// lex order and named a, b, c, ...
ToricPresentation veronese_presentation(int r, int d);
ToricPresentation rees_presentation(ToricPresentation fiber);

struct Binomial {
  Monomial lead;
  Monomial trail;
  bool marked = false;  // lead fixed by a marking rather than by an order

  int degree() const { return lead.degree(); }
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

std::string to_string(const Binomial& b, const ToricPresentation& pres);
std::string to_string(const Monomial& m, const ToricPresentation& pres);

// A block order on ring variables. Blocks compare in sequence; Lex blocks
// compare exponents along `vars` (largest variable first), RevLex blocks
// compare the weighted degree and then reverse lexicographically along `vars`.
struct OrderBlock {
  enum class Kind { Lex, RevLex };
  Kind kind;
  std::vector<int> vars;
  std::vector<long long> weights;  // aligned with vars; empty means all 1
};

struct TermOrder {
  std::string name;
  std::vector<OrderBlock> blocks;

  // -1, 0, 1 as a <, =, > b.
  int compare(const std::vector<int>& a, const std::vector<int>& b) const;
  int compare(const Monomial& a, const Monomial& b) const { return compare(a.exponents(), b.exponents()); }

  // Reverse lexicographic order on the y-variables, y_order listing fiber
  // indices from largest to smallest.
  static TermOrder revlex(const ToricPresentation& pres, const std::vector<int>& y_order);
  // x^a y^b > x^a' y^b' iff x^a >lex x^a' (ColumnMajor), or equal x-parts and
  // y^b > y^b' under the weighted order on y.
  static TermOrder bigraded_sharp(const ToricPresentation& pres, const std::vector<long long>& y_weights,
                                  const std::vector<int>& y_order);
};

struct GroebnerBasis {
  std::vector<Binomial> binomials;
  std::string order;
  bool reduced = true;
};

// Reduced Groebner basis of the toric ideal by binomial Buchberger on the
// graph ideal, eliminating the image variables (and t for Rees presentations).
// The iteration cap comes from HIBI_STEP_BUDGET.
GroebnerBasis toric_gb(const ToricPresentation& pres, const TermOrder& order);
// Buchberger criterion: every S-pair reduces to zero.
bool is_groebner_basis(const std::vector<Binomial>& basis, const TermOrder& order);
bool is_reduced(const std::vector<Binomial>& basis);
// Lead > trail for every element.
bool respects_order(const std::vector<Binomial>& basis, const TermOrder& order);
// Same elements up to order.
bool same_basis(std::vector<Binomial> a, std::vector<Binomial> b);
// phi(lead) == phi(trail).
bool in_kernel(const ToricPresentation& pres, const Binomial& b);

// y orders, largest first. The canonical one extends "componentwise smaller
// tuple => larger variable" by (total rank, membership vectors); a seed picks
// a random linear extension of the same partial order instead.
std::vector<int> canonical_y_order(const ToricPresentation& pres);
std::vector<int> random_y_order(const ToricPresentation& pres, std::uint64_t seed);
std::vector<int> identity_y_order(const ToricPresentation& pres);

// y_I y_J - y_{I meet J} y_{I join J} over incomparable pairs, unverified.
std::vector<Binomial> hibi_relation_family(const ToricPresentation& pres);
// The same family, verified as a reduced Groebner basis under revlex and
// against toric_gb.
GroebnerBasis hibi_relations(const Poset& poset, int r, std::optional<std::uint64_t> y_order_seed = std::nullopt);
GroebnerBasis hibi_relations(const ToricPresentation& pres, const std::vector<int>& y_order);

// Sorting in weakly increasing ColumnMajor position.
std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v, const Ambient& ambient);

struct SortableResult {
  bool sortable;
  std::optional<std::pair<Monomial, Monomial>> witness;
};
SortableResult is_sortable(const std::vector<Monomial>& set, const Ambient& ambient);

// Marked binomials y_u y_v - y_u' y_v' over unsorted pairs; every S-pair is
// reduced with the marking, which must end in a common normal form.
GroebnerBasis sorting_gb(const ToricPresentation& pres);
GroebnerBasis sorting_gb(const Poset& poset, int r, int s);
// Integer weights on y that make every unsorted lead heavier than its sorted
// trail; found by perceptron updates.
std::vector<long long> sorting_weights(const ToricPresentation& pres);

struct RevlexResult {
  GroebnerBasis basis;
  bool squarefree_initials;
  int max_degree;
};
RevlexResult revlex_gb(const ToricPresentation& pres, const std::vector<int>& y_order);
RevlexResult revlex_gb_L(const Poset& poset, int r, int s, std::optional<std::uint64_t> y_order_seed = std::nullopt);

struct ExchangeWitness {
  Monomial a;  // y-monomials
  Monomial b;
  int q;       // flat x index
};
struct ExchangeResult {
  bool holds;
  std::optional<ExchangeWitness> witness;
};
// The l-exchange property over standard monomials of degree <= max_degree
// with respect to the sorting relations. Pairs with no sorted image in the
// set are treated as standard.
ExchangeResult l_exchange_check(const ToricPresentation& pres, int max_degree = 2);
ExchangeResult l_exchange_check(const Poset& poset, int r, int s);

struct ReesResult {
  GroebnerBasis basis;      // constructed family
  int fiber_part;
  int linear_part;
  bool squarefree_quadratic;
  bool x_condition;
};
// Sorting relations plus the x-linear relations, compared with toric_gb on
// the Rees presentation under bigraded_sharp.
ReesResult rees_gb(const ToricPresentation& fiber);
ReesResult rees_gb(const Poset& poset, int r, int s);

int krull_dim(const ToricPresentation& pres);
// Minimal number of generators of the toric ideal, from the fibers of the
// degrees of a Groebner basis.
int minimal_generator_count(const ToricPresentation& pres, const GroebnerBasis& basis);

}  // namespace hibi
