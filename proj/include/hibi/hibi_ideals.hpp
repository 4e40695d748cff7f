#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hibi/monomial.hpp"
#include "hibi/poset.hpp"

namespace hibi {

Ambient grid(const Poset& poset, int r);

// u_I = x_{1 J_1} ... x_{r J_r} with J_m = I_m \ I_{m-1}.
Monomial hibi_generator(const Poset& poset, const Multichain& chain);
// Inverse of hibi_generator on squarefree monomials of the right shape.
Multichain multichain_of(const Poset& poset, int r, const Monomial& u);

MonomialIdeal multichain_ideal_I(const Poset& poset, int r, int s);
MonomialIdeal hibi_ideal_H(const Poset& poset, int r);

// H_{r,s}(P) with each generator's factorization u_{I_1} ... u_{I_k},
// I_1 > ... > I_k, k = r - s + 1.
struct GeneralizedHibi {
  MonomialIdeal ideal;
  std::vector<std::vector<Multichain>> factors;  // aligned with ideal.generators()
};

// Computes the ideal as the Alexander dual of I_{r,s}, as a squarefree power
// of H_r and from strict chains in the multichain lattice; all three must agree.
GeneralizedHibi generalized_hibi_H(const Poset& poset, int r, int s);
// Strict chains I_1 > ... > I_k with squarefree product.
GeneralizedHibi hibi_squarefree_power(const Poset& poset, int r, int k);
// Splits a squarefree monomial whose columns each meet exactly k levels into
// hibi generators, largest first.
std::vector<Multichain> factor_squarefree(const Poset& poset, int r, int k, const Monomial& u);

// H_r(P)^k with every generator written as u_{I_1} ... u_{I_k},
// I_1 <= ... <= I_k.
struct HibiPower {
  MonomialIdeal ideal;
  std::vector<std::vector<Multichain>> factors;
};
HibiPower hibi_power(const Poset& poset, int r, int k);
// Rewrites a tuple into a chain using u_I u_J = u_{I meet J} u_{I join J}.
std::vector<Multichain> chain_normal_form(std::vector<Multichain> tuple);

VarMask set_of(const Poset& poset, const Multichain& chain);
// Requires I_1 <= ... <= I_k.
VarMask set_of_power(const Poset& poset, const std::vector<Multichain>& chains);

struct ProjdimReg {
  int pd;
  int reg;
};
ProjdimReg projdim_and_reg(const Poset& poset, int r);

// g(x_{mj} u_I) for x_{mj} in set(u_I). `var` is the flat index of x_{mj}.
struct Decomposition {
  Multichain chain;  // I'
  int t;             // 0-based level with u_{I'} = x_{mj} u_I / x_{tj}
};
Decomposition decomposition_g(const Poset& poset, const Multichain& chain, int var);

// Free resolution of S/H_r(P). F_0 has the single basis element e; for i >= 1
// the basis of F_i is f(sigma; u_I) with sigma in set(u_I), |sigma| = i - 1.
struct ResolutionSymbol {
  int gen;        // index into ResolutionComplex::chains
  VarMask sigma;
};

struct ResolutionTerm {
  int target;     // index into bases[i - 1]
  int sign;       // +1 or -1
  Monomial coeff;
};

struct ResolutionComplex {
  Ambient ambient;
  std::vector<Multichain> chains;                       // generators, decreasing lex
  std::vector<std::vector<ResolutionSymbol>> bases;     // bases[i] spans F_i; bases[0] = {e}
  std::vector<std::vector<std::vector<ResolutionTerm>>> differential;  // [i][symbol] -> terms in F_{i-1}
  std::vector<std::vector<Monomial>> twists;            // multidegree of each basis element

  std::vector<long long> ranks() const;
};

// Builds the complex and verifies d^2 = 0, homogeneity of every term and
// that no coefficient is a unit.
ResolutionComplex resolution_of_H(const Poset& poset, int r);
// Alternating sum of the twists: the multigraded K-polynomial of S/H_r(P).
std::map<Monomial, long long> twist_alternating_sum(const ResolutionComplex& complex);

// (i, j) -> beta_{i,j}(S/H_r(P)).
using BettiTable = std::map<std::pair<int, int>, long long>;
BettiTable betti_from_sets(const Poset& poset, int r);
std::vector<long long> betti_totals(const BettiTable& table);

struct GorensteinStatusI {
  int dim;
  int height;
  bool antichain;
  bool complete_intersection;
  bool gorenstein;  // decided by the CI/antichain equivalence
};
GorensteinStatusI gorenstein_status_I(const Poset& poset, int r);

}  // namespace hibi
