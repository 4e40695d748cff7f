#include "hibi/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hibi/error.hpp"
#include "hibi/linalg.hpp"

namespace hibi::oracle {

namespace {

// Reduced homology ranks h[d + 1] = dim H~_d for d = -1 .. top, from a list
// of faces (bitmasks, closed under subsets, containing the empty face).
std::vector<long long> reduced_homology(const std::vector<VarMask>& faces) {
  int top = 0;
  for (VarMask f : faces) top = std::max(top, __builtin_popcountll(f));
  std::vector<std::vector<VarMask>> by_size(top + 1);
  for (VarMask f : faces) by_size[__builtin_popcountll(f)].push_back(f);
  for (auto& v : by_size) std::sort(v.begin(), v.end());

  // rank of the boundary from faces of size k to faces of size k - 1.
  std::vector<long long> boundary_rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto& hi = by_size[k];
    const auto& lo = by_size[k - 1];
    if (hi.empty() || lo.empty()) continue;
    std::vector<std::vector<long long>> m(hi.size(), std::vector<long long>(lo.size(), 0));
    for (std::size_t a = 0; a < hi.size(); ++a) {
      int position = 0;
      for (int v = 0; v < 64; ++v) {
        VarMask vb = VarMask{1} << v;
        if (!(hi[a] & vb)) continue;
        auto it = std::lower_bound(lo.begin(), lo.end(), hi[a] & ~vb);
        verify(it != lo.end() && *it == (hi[a] & ~vb), "complex is closed under taking faces");
        m[a][it - lo.begin()] = position % 2 ? -1 : 1;
        ++position;
      }
    }
    long long q = rank_rational(m);
    long long modp = rank_mod_p(m, 32003);
    verify(q == modp, "boundary rank over Q agrees with the rank mod 32003");
    boundary_rank[k] = q;
  }
  std::vector<long long> h(top + 1, 0);
  for (int k = 0; k <= top; ++k)
    h[k] = static_cast<long long>(by_size[k].size()) - boundary_rank[k] - boundary_rank[k + 1];
  return h;
}

std::vector<VarMask> minimal_supports(std::vector<VarMask> s) {
  std::sort(s.begin(), s.end(), [](VarMask a, VarMask b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<VarMask> out;
  for (VarMask m : s)
    if (std::none_of(out.begin(), out.end(), [&](VarMask k) { return (k & ~m) == 0; })) out.push_back(m);
  return out;
}

}  // namespace

GradedBetti hochster_betti(const MonomialIdeal& ideal, int max_vars) {
  const int nv = ideal.ambient().size();
  require(nv <= max_vars, "Hochster oracle is limited to " + std::to_string(max_vars) + " variables");
  require(ideal.is_squarefree(), "Hochster oracle needs a squarefree ideal");
  std::vector<VarMask> supports;
  for (const auto& g : ideal.generators()) supports.push_back(g.support());
  supports = minimal_supports(supports);

  GradedBetti out;
  out.multigraded[{0, 0}] = 1;
  if (!supports.empty()) {
    // contains[m]: m contains the support of a generator.
    std::vector<char> contains(std::size_t{1} << nv, 0);
    for (VarMask s : supports) contains[s] = 1;
    for (int v = 0; v < nv; ++v)
      for (std::size_t m = 0; m < contains.size(); ++m)
        if ((m >> v) & 1) contains[m] |= contains[m ^ (std::size_t{1} << v)];

    // Only multidegrees in the lcm lattice can carry Betti numbers.
    std::vector<VarMask> lattice = supports;
    std::vector<char> seen(contains.size(), 0);
    for (VarMask s : supports) seen[s] = 1;
    for (std::size_t i = 0; i < lattice.size(); ++i)
      for (VarMask s : supports) {
        VarMask u = lattice[i] | s;
        if (!seen[u]) {
          seen[u] = 1;
          lattice.push_back(u);
        }
      }

    for (VarMask sigma : lattice) {
      const int size = __builtin_popcountll(sigma);
      // Two complexes carry the same information: the restriction of the
      // Stanley–Reisner complex, and the upper Koszul complex
      // K = {tau : x^(sigma - tau) in I}. Use whichever is smaller.
      std::vector<VarMask> restriction, koszul;
      VarMask tau = 0;
      while (true) {
        if (!contains[tau]) restriction.push_back(tau);
        if (contains[sigma & ~tau]) koszul.push_back(tau);
        if (tau == sigma) break;
        tau = (tau - sigma) & sigma;
      }
      if (koszul.size() <= restriction.size()) {
        // beta_{i,sigma}(S/I) = dim H~_{i-2}(K), i >= 1.
        auto h = reduced_homology(koszul);
        for (std::size_t k = 0; k < h.size(); ++k)
          if (h[k]) out.multigraded[{static_cast<int>(k) + 1, sigma}] = h[k];
      } else {
        // beta_{i,sigma}(S/I) = dim H~_{|sigma|-i-1}(Delta_sigma).
        auto h = reduced_homology(restriction);
        for (std::size_t k = 0; k < h.size(); ++k)
          if (h[k]) out.multigraded[{size - static_cast<int>(k), sigma}] = h[k];
      }
    }
  }
  for (const auto& [key, value] : out.multigraded) {
    out.graded[{key.first, __builtin_popcountll(key.second)}] += value;
    if (static_cast<int>(out.totals.size()) <= key.first) out.totals.resize(key.first + 1, 0);
    out.totals[key.first] += value;
  }
  return out;
}

namespace {

using Exps = std::vector<int>;

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Exps> minimal_exps(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

Numerator multiply(const Numerator& a, const Numerator& b) {
  Numerator out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

Numerator one_minus(const Exps& m) {
  Numerator out;
  out[Exps(m.size(), 0)] = 1;
  out[m] = -1;
  return out;
}

Numerator numerator_of(std::vector<Exps> gens, int nv) {
  Numerator result;
  result[Exps(nv, 0)] = 1;
  gens = minimal_exps(std::move(gens));
  std::vector<Exps> rest;
  for (auto& g : gens) {
    int deg = 0;
    for (int e : g) deg += e;
    if (deg == 1) result = multiply(result, one_minus(g));
    else rest.push_back(std::move(g));
  }
  if (rest.empty()) return result;
  bool coprime = true;
  std::vector<int> count(nv, 0);
  for (const auto& g : rest)
    for (int v = 0; v < nv; ++v)
      if (g[v]) {
        if (++count[v] > 1) coprime = false;
      }
  if (coprime) {
    for (const auto& g : rest) result = multiply(result, one_minus(g));
    return result;
  }
  int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  // H(S/I) = H(S/(I + x)) + x H(S/(I : x)).
  std::vector<Exps> plus{Exps(nv, 0)}, colon;
  plus[0][pivot] = 1;
  for (const auto& g : rest) {
    if (!g[pivot]) plus.push_back(g);
    Exps q = g;
    if (q[pivot]) --q[pivot];
    colon.push_back(std::move(q));
  }
  Numerator a = numerator_of(std::move(plus), nv);
  Exps x(nv, 0);
  x[pivot] = 1;
  Numerator shift;
  shift[x] = 1;
  Numerator b = multiply(shift, numerator_of(std::move(colon), nv));
  for (const auto& [e, c] : b) {
    auto& slot = a[e];
    slot += c;
    if (slot == 0) a.erase(e);
  }
  return multiply(result, a);
}

}  // namespace

Numerator hilbert_numerator(const MonomialIdeal& ideal) {
  std::vector<Exps> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
  return numerator_of(std::move(gens), ideal.ambient().size());
}

std::vector<long long> hilbert_numerator_total(const Numerator& numerator) {
  std::vector<long long> out;
  for (const auto& [e, c] : numerator) {
    int d = 0;
    for (int v : e) d += v;
    if (static_cast<int>(out.size()) <= d) out.resize(d + 1, 0);
    out[d] += c;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool kernel_membership(const std::vector<std::vector<int>>& images, const std::vector<int>& lead,
                       const std::vector<int>& trail) {
  require(lead.size() == images.size() && trail.size() == images.size(), "binomial does not match the presentation");
  if (images.empty()) return true;
  std::vector<long long> a(images[0].size(), 0), b(images[0].size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = 0; j < images[i].size(); ++j) {
      a[j] += static_cast<long long>(lead[i]) * images[i][j];
      b[j] += static_cast<long long>(trail[i]) * images[i][j];
    }
  return a == b;
}

MonomialIdeal definitional_dual(const MonomialIdeal& ideal, int max_vars) {
  const int nv = ideal.ambient().size();
  require(nv <= max_vars, "definitional dual is limited to " + std::to_string(max_vars) + " variables");
  require(ideal.is_squarefree(), "definitional dual needs a squarefree ideal");
  std::vector<VarMask> edges;
  for (const auto& g : ideal.generators()) edges.push_back(g.support());
  auto covers = [&](VarMask s) {
    return std::all_of(edges.begin(), edges.end(), [&](VarMask e) { return (e & s) != 0; });
  };
  std::vector<Monomial> gens;
  for (VarMask s = 0; s < (VarMask{1} << nv); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (int v = 0; v < nv && minimal; ++v)
      if (((s >> v) & 1) && covers(s & ~(VarMask{1} << v))) minimal = false;
    if (minimal) gens.push_back(Monomial::from_mask(nv, s));
  }
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

}  // namespace hibi::oracle
