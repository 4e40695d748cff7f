#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hibi/monomial.hpp"

// Brute-force checkers. Nothing here calls into the constructions; inputs are
// plain ideal values and exponent vectors.
namespace hibi::oracle {

struct GradedBetti {
  // (i, squarefree multidegree) -> beta_{i,sigma}(S/I)
  std::map<std::pair<int, VarMask>, long long> multigraded;
  // (i, total degree) -> beta_{i,j}(S/I)
  std::map<std::pair<int, int>, long long> graded;
  std::vector<long long> totals;
};

// Hochster's formula, with homology ranks computed exactly over Q and again
// modulo 32003; the two must agree.
GradedBetti hochster_betti(const MonomialIdeal& ideal, int max_vars = 12);

// Multigraded numerator of the Hilbert series of S/I over prod (1 - x_i).
using Numerator = std::map<std::vector<int>, long long>;
Numerator hilbert_numerator(const MonomialIdeal& ideal);
// Coefficients of the single-variable numerator, index = degree.
std::vector<long long> hilbert_numerator_total(const Numerator& numerator);

// phi(lead) == phi(trail) where phi sends variable i to images[i].
bool kernel_membership(const std::vector<std::vector<int>>& images, const std::vector<int>& lead,
                       const std::vector<int>& trail);

// Alexander dual by enumerating every subset of the variables.
MonomialIdeal definitional_dual(const MonomialIdeal& ideal, int max_vars = 20);

}  // namespace hibi::oracle
