#include "hibi/hibi_ideals.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hibi/error.hpp"

namespace hibi {

Ambient grid(const Poset& poset, int r) {
  require(r >= 1, "r must be at least 1");
  require(r * poset.size() <= 64, "at most 64 grid variables are supported");
  return Ambient{r, poset.size()};
}

Monomial hibi_generator(const Poset& poset, const Multichain& chain) {
  const int r = chain.length();
  const Ambient amb{r, poset.size()};
  Monomial u(amb.size());
  ElementSet prev = 0;
  for (int m = 0; m < r; ++m) {
    ElementSet fresh = chain[m] & ~prev;
    for (int j = 0; j < poset.size(); ++j)
      if ((fresh >> j) & 1) u.increment(amb.index(m, j));
    prev = chain[m];
  }
  return u;
}

Multichain multichain_of(const Poset& poset, int r, const Monomial& u) {
  const Ambient amb = grid(poset, r);
  require(u.nvars() == amb.size(), "monomial lives in the wrong ring");
  Multichain chain{std::vector<ElementSet>(r, 0)};
  ElementSet acc = 0;
  for (int m = 0; m < r; ++m) {
    for (int j = 0; j < poset.size(); ++j)
      if (u[amb.index(m, j)]) acc |= bit(j);
    chain.ideals[m] = acc;
  }
  check_multichain(poset, chain);
  require(hibi_generator(poset, chain) == u, "monomial is not a hibi generator");
  return chain;
}

MonomialIdeal multichain_ideal_I(const Poset& poset, int r, int s) {
  const Ambient amb = grid(poset, r);
  require(s >= 1 && s <= r, "s must satisfy 1 <= s <= r");
  std::vector<Monomial> gens;
  for (const auto& c : element_multichains(poset, r)) {
    for (unsigned levels = 0; levels < (1u << r); ++levels) {
      if (__builtin_popcount(levels) != s) continue;
      Monomial u(amb.size());
      for (int i = 0; i < r; ++i)
        if ((levels >> i) & 1) u.increment(amb.index(i, c[i]));
      gens.push_back(std::move(u));
    }
  }
  return minimalize(amb, std::move(gens));
}

MonomialIdeal hibi_ideal_H(const Poset& poset, int r) {
  const Ambient amb = grid(poset, r);
  std::vector<Monomial> gens;
  for (const auto& chain : multichain_ideals(poset, r)) gens.push_back(hibi_generator(poset, chain));
  MonomialIdeal ideal(amb, gens);
  verify(std::adjacent_find(ideal.generators().begin(), ideal.generators().end()) == ideal.generators().end(),
         "distinct multichains give distinct generators");
  return ideal;
}

std::vector<Multichain> factor_squarefree(const Poset& poset, int r, int k, const Monomial& u) {
  const Ambient amb = grid(poset, r);
  require(u.is_squarefree() && u.degree() == k * poset.size(), "not a squarefree product of k generators");
  std::vector<Multichain> out;
  Monomial rest = u;
  for (int f = 0; f < k; ++f) {
    // Peel off the first appearance of every column.
    Monomial part(amb.size());
    ElementSet seen = 0;
    for (int m = 0; m < r; ++m)
      for (int j = 0; j < poset.size(); ++j)
        if (rest[amb.index(m, j)] && !((seen >> j) & 1)) {
          part.increment(amb.index(m, j));
          seen |= bit(j);
        }
    require(seen == poset.all(), "monomial does not meet every column k times");
    out.push_back(multichain_of(poset, r, part));
    rest = rest / part;
  }
  for (int f = 1; f < k; ++f)
    verify(out[f].leq(out[f - 1]) && out[f] != out[f - 1], "squarefree factors form a strict chain");
  return out;
}

GeneralizedHibi hibi_squarefree_power(const Poset& poset, int r, int k) {
  const Ambient amb = grid(poset, r);
  require(k >= 1 && k <= r, "k must satisfy 1 <= k <= r");
  const auto lattice = multichain_ideals(poset, r);
  std::vector<VarMask> supports;
  for (const auto& c : lattice) supports.push_back(hibi_generator(poset, c).support());
  std::map<VarMask, std::vector<Multichain>> found;
  std::vector<int> path;
  // Walk strict chains downward in the lattice, keeping the product squarefree.
  std::function<void(VarMask)> rec = [&](VarMask used) {
    if (static_cast<int>(path.size()) == k) {
      std::vector<Multichain> chain;
      for (int i : path) chain.push_back(lattice[i]);
      found.emplace(used, std::move(chain));
      return;
    }
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      if (supports[i] & used) continue;
      if (!path.empty()) {
        const auto& last = lattice[path.back()];
        if (!(lattice[i].leq(last) && lattice[i] != last)) continue;
      }
      path.push_back(static_cast<int>(i));
      rec(used | supports[i]);
      path.pop_back();
    }
  };
  rec(0);
  std::vector<Monomial> gens;
  for (const auto& [mask, chain] : found) gens.push_back(Monomial::from_mask(amb.size(), mask));
  GeneralizedHibi out{MonomialIdeal(amb, gens), {}};
  for (const auto& g : out.ideal.generators()) out.factors.push_back(found.at(g.support()));
  return out;
}

GeneralizedHibi generalized_hibi_H(const Poset& poset, int r, int s) {
  require(s >= 1 && s <= r, "s must satisfy 1 <= s <= r");
  const int k = r - s + 1;
  MonomialIdeal dual = alexander_dual(multichain_ideal_I(poset, r, s));
  MonomialIdeal brute = squarefree_power(hibi_ideal_H(poset, r), k);
  GeneralizedHibi chains = hibi_squarefree_power(poset, r, k);
  verify(dual == brute, "Alexander dual of I_{r,s} equals the squarefree power of H_r");
  verify(chains.ideal == brute, "squarefree power is spanned by strict chains");
  for (std::size_t i = 0; i < chains.factors.size(); ++i)
    verify(factor_squarefree(poset, r, k, chains.ideal.generators()[i]) == chains.factors[i],
           "first-appearance factorization matches the strict chain");
  return chains;
}

std::vector<Multichain> chain_normal_form(std::vector<Multichain> tuple) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      for (std::size_t j = i + 1; j < tuple.size(); ++j)
        if (!tuple[i].leq(tuple[j]) && !tuple[j].leq(tuple[i])) {
          Multichain lo = tuple[i].meet(tuple[j]), hi = tuple[i].join(tuple[j]);
          tuple[i] = std::move(lo);
          tuple[j] = std::move(hi);
          changed = true;
        }
  }
  std::sort(tuple.begin(), tuple.end(), [](const Multichain& a, const Multichain& b) { return a.rank() < b.rank(); });
  for (std::size_t i = 1; i < tuple.size(); ++i) verify(tuple[i - 1].leq(tuple[i]), "normal form is a chain");
  return tuple;
}

HibiPower hibi_power(const Poset& poset, int r, int k) {
  const Ambient amb = grid(poset, r);
  require(k >= 1, "power exponent must be positive");
  const auto lattice = multichain_ideals(poset, r);
  std::vector<Monomial> gens;
  for (const auto& c : lattice) gens.push_back(hibi_generator(poset, c));
  std::map<Monomial, std::vector<int>> products;
  std::vector<int> pick;
  std::function<void(std::size_t, const Monomial&)> rec = [&](std::size_t start, const Monomial& acc) {
    if (static_cast<int>(pick.size()) == k) {
      products.emplace(acc, pick);
      return;
    }
    for (std::size_t i = start; i < lattice.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      rec(i, acc * gens[i]);
      pick.pop_back();
    }
  };
  rec(0, Monomial(amb.size()));
  // All products have degree kn, so distinct products are minimal.
  std::vector<Monomial> all;
  for (const auto& [m, idx] : products) all.push_back(m);
  HibiPower out{MonomialIdeal(amb, all), {}};
  for (const auto& g : out.ideal.generators()) {
    std::vector<Multichain> tuple;
    for (int i : products.at(g)) tuple.push_back(lattice[i]);
    auto normal = chain_normal_form(std::move(tuple));
    Monomial check(amb.size());
    for (const auto& c : normal) check = check * hibi_generator(poset, c);
    verify(check == g, "lattice exchange preserves the product");
    out.factors.push_back(std::move(normal));
  }
  return out;
}

VarMask set_of(const Poset& poset, const Multichain& chain) {
  const Ambient amb{chain.length(), poset.size()};
  VarMask out = 0;
  for (int m = 0; m + 1 < chain.length(); ++m) {
    ElementSet mins = poset.minimal_elements(poset.all() & ~chain[m]);
    for (int j = 0; j < poset.size(); ++j)
      if ((mins >> j) & 1) out |= VarMask{1} << amb.index(m, j);
  }
  return out;
}

VarMask set_of_power(const Poset& poset, const std::vector<Multichain>& chains) {
  require(!chains.empty(), "empty product");
  for (std::size_t i = 1; i < chains.size(); ++i)
    require(chains[i - 1].leq(chains[i]), "factors must satisfy I_1 <= ... <= I_k");
  VarMask out = 0;
  for (const auto& c : chains) out |= set_of(poset, c);
  return out;
}

ProjdimReg projdim_and_reg(const Poset& poset, int r) {
  grid(poset, r);
  const int formula = (r - 1) * width(poset);
  int largest = 0;
  for (const auto& c : multichain_ideals(poset, r)) largest = std::max(largest, popcount(set_of(poset, c)));
  verify(largest == formula, "pd H_r(P) = (r-1) * width(P)");
  return {formula, formula};
}

Decomposition decomposition_g(const Poset& poset, const Multichain& chain, int var) {
  const int r = chain.length();
  const Ambient amb = grid(poset, r);
  require(var >= 0 && var < amb.size() && ((set_of(poset, chain) >> var) & 1),
          "decomposition needs x_{mj} in set(u_I)");
  const int m = amb.level_of(var), j = amb.elem_of(var);
  int t = 0;
  while (!((chain[t] >> j) & 1)) ++t;
  Multichain next = chain;
  for (int l = m; l < t; ++l) next.ideals[l] |= bit(j);
  check_multichain(poset, next);
  Monomial u = hibi_generator(poset, chain);
  Monomial expected = u * Monomial::variable(amb.size(), var) / Monomial::variable(amb.size(), amb.index(t, j));
  verify(hibi_generator(poset, next) == expected, "u_{I'} = x_{mj} u_I / x_{tj}");
  auto order = VariableOrder::row_major(amb);
  verify(order.lex_compare(expected, u) > 0, "u_{I'} >lex u_I");
  return {next, t};
}

std::vector<long long> ResolutionComplex::ranks() const {
  std::vector<long long> out;
  for (const auto& b : bases) out.push_back(static_cast<long long>(b.size()));
  return out;
}

namespace {

using Polynomial = std::map<Monomial, long long>;

void add_term(Polynomial& p, const Monomial& m, long long c) {
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

}  // namespace

ResolutionComplex resolution_of_H(const Poset& poset, int r) {
  const Ambient amb = grid(poset, r);
  const int nv = amb.size();
  ResolutionComplex cx{amb, {}, {}, {}, {}};
  auto lattice = multichain_ideals(poset, r);
  auto order = VariableOrder::row_major(amb);
  std::sort(lattice.begin(), lattice.end(), [&](const Multichain& a, const Multichain& b) {
    return order.lex_compare(hibi_generator(poset, a), hibi_generator(poset, b)) > 0;
  });
  cx.chains = lattice;
  std::map<Multichain, int> gen_index;
  std::vector<Monomial> gens;
  std::vector<VarMask> sets;
  for (std::size_t g = 0; g < lattice.size(); ++g) {
    gen_index[lattice[g]] = static_cast<int>(g);
    gens.push_back(hibi_generator(poset, lattice[g]));
    sets.push_back(set_of(poset, lattice[g]));
  }
  int top = 0;
  for (VarMask s : sets) top = std::max(top, popcount(s));

  cx.bases.assign(top + 2, {});
  cx.twists.assign(top + 2, {});
  cx.differential.assign(top + 2, {});
  cx.bases[0].push_back({-1, 0});
  cx.twists[0].push_back(Monomial(nv));
  cx.differential[0].push_back({});
  std::vector<std::map<std::pair<int, VarMask>, int>> index(top + 2);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    // Enumerate subsets of set(u) in increasing order of the mask.
    VarMask s = sets[g];
    VarMask sub = 0;
    while (true) {
      int i = popcount(sub) + 1;
      index[i][{static_cast<int>(g), sub}] = static_cast<int>(cx.bases[i].size());
      cx.bases[i].push_back({static_cast<int>(g), sub});
      cx.twists[i].push_back(gens[g] * Monomial::from_mask(nv, sub));
      if (sub == s) break;
      sub = (sub - s) & s;
    }
  }
  for (std::size_t i = 1; i < cx.bases.size(); ++i) {
    for (const auto& sym : cx.bases[i]) {
      std::vector<ResolutionTerm> terms;
      if (sym.sigma == 0) {
        terms.push_back({0, 1, gens[sym.gen]});
      } else {
        for (int var = 0; var < nv; ++var) {
          VarMask vb = VarMask{1} << var;
          if (!(sym.sigma & vb)) continue;
          // Variables greater than x_{mj} in RowMajor order have smaller index.
          int alpha = popcount(sym.sigma & (vb - 1));
          int sign = alpha % 2 ? -1 : 1;
          VarMask rest = sym.sigma & ~vb;
          auto dec = decomposition_g(poset, lattice[sym.gen], var);
          int moved = gen_index.at(dec.chain);
          // f(tau; w) vanishes unless tau lies in set(w).
          if ((rest & ~sets[moved]) == 0)
            terms.push_back({index[i - 1].at({moved, rest}), sign,
                             Monomial::variable(nv, amb.index(dec.t, amb.elem_of(var)))});
          terms.push_back({index[i - 1].at({sym.gen, rest}), -sign, Monomial::variable(nv, var)});
        }
      }
      cx.differential[i].push_back(std::move(terms));
    }
  }

  // Homogeneity and minimality.
  for (std::size_t i = 1; i < cx.bases.size(); ++i)
    for (std::size_t a = 0; a < cx.bases[i].size(); ++a)
      for (const auto& term : cx.differential[i][a]) {
        verify(term.coeff.degree() > 0, "differential has no unit coefficients");
        verify(term.coeff * cx.twists[i - 1][term.target] == cx.twists[i][a], "differential is homogeneous");
      }
  // d o d = 0.
  for (std::size_t i = 2; i < cx.bases.size(); ++i)
    for (std::size_t a = 0; a < cx.bases[i].size(); ++a) {
      std::map<int, Polynomial> image;
      for (const auto& outer : cx.differential[i][a])
        for (const auto& inner : cx.differential[i - 1][outer.target])
          add_term(image[inner.target], outer.coeff * inner.coeff, static_cast<long long>(outer.sign) * inner.sign);
      for (const auto& [target, poly] : image) verify(poly.empty(), "d^2 = 0 in the resolution of H_r(P)");
    }
  return cx;
}

std::map<Monomial, long long> twist_alternating_sum(const ResolutionComplex& complex) {
  Polynomial sum;
  for (std::size_t i = 0; i < complex.bases.size(); ++i)
    for (const auto& t : complex.twists[i]) add_term(sum, t, i % 2 ? -1 : 1);
  return sum;
}

BettiTable betti_from_sets(const Poset& poset, int r) {
  grid(poset, r);
  const int n = poset.size();
  BettiTable table;
  table[{0, 0}] = 1;
  for (const auto& c : multichain_ideals(poset, r)) {
    int s = popcount(set_of(poset, c));
    long long binom = 1;
    for (int i = 1; i <= s + 1; ++i) {
      table[{i, n + i - 1}] += binom;
      binom = binom * (s - (i - 1)) / i;
    }
  }
  return table;
}

std::vector<long long> betti_totals(const BettiTable& table) {
  std::vector<long long> out;
  for (const auto& [key, value] : table) {
    if (static_cast<int>(out.size()) <= key.first) out.resize(key.first + 1, 0);
    out[key.first] += value;
  }
  return out;
}

GorensteinStatusI gorenstein_status_I(const Poset& poset, int r) {
  const Ambient amb = grid(poset, r);
  const int n = poset.size();
  MonomialIdeal ideal = multichain_ideal_I(poset, r, r);
  auto primes = minimal_primes(ideal);
  int height = amb.size();
  for (VarMask p : primes) {
    height = std::min(height, popcount(p));
    verify(popcount(p) == n, "I_r(P) is unmixed of height n");
  }
  bool coprime = true;
  const auto& gens = ideal.generators();
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
      coprime = (gens[a].support() & gens[b].support()) == 0;
  bool anti = is_antichain(poset);
  // For r = 1 the ideal is generated by the variables.
  verify(coprime == (anti || r == 1), "I_r(P) is a complete intersection iff P is an antichain");
  return {amb.size() - height, height, anti, coprime, coprime};
}

}  // namespace hibi
