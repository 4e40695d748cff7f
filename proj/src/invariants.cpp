#include "hibi/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hibi/error.hpp"
#include "hibi/oracle.hpp"

namespace hibi {

CmCertificates cm_certificates(const Poset& poset, int r, int s) {
  require(r >= 1 && s >= 1 && s <= r, "need 1 <= s <= r");
  CmCertificates out{};
  auto gh = generalized_hibi_H(poset, r, s);
  auto row = VariableOrder::row_major(gh.ideal.ambient());
  auto wp = is_weakly_polymatroidal(gh.ideal, row);
  out.weakly_polymatroidal = wp.holds;
  out.polymatroidal_failure = wp.witness;
  out.linear_quotients = linear_quotients(gh.ideal, row).ok;
  verify(!out.weakly_polymatroidal || out.linear_quotients, "weakly polymatroidal ideals have linear quotients");

  auto pres = fiber_presentation(poset, r, s);
  auto sorting = sorting_gb(pres);
  out.sorting_relations = static_cast<int>(sorting.binomials.size());
  out.sorting_squarefree_quadratic = std::all_of(sorting.binomials.begin(), sorting.binomials.end(),
                                                 [](const Binomial& b) { return b.degree() == 2 && b.lead.is_squarefree(); });

  if (pres.fiber_count() <= kReesCertificateLimit) {
    auto rees = rees_gb(pres);
    out.rees = ReesCertificate{rees.squarefree_quadratic, rees.x_condition, static_cast<int>(rees.basis.binomials.size())};
  }

  if (s == r) out.hibi_relations = static_cast<int>(hibi_relations(poset, r).binomials.size());
  return out;
}

InvariantReport full_report(const Poset& poset, int r, int s) {
  require(r >= 1 && s >= 1 && s <= r, "need 1 <= s <= r");
  const int n = poset.size();
  InvariantReport rep{};
  rep.n = n;
  rep.elements = poset.names();
  for (auto [a, b] : poset.covers()) rep.covers.emplace_back(poset.name(a), poset.name(b));
  rep.width = width(poset);
  rep.pure = is_pure(poset);
  rep.antichain = is_antichain(poset);
  rep.r = r;
  rep.s = s;

  rep.ring_dim = krull_dim(fiber_presentation(poset, r, r));
  verify(rep.ring_dim == n * (r - 1) + 1, "dim R_r(P) = n(r-1) + 1");
  rep.ring_dim_rs = s == r ? rep.ring_dim : krull_dim(fiber_presentation(poset, r, s));
  rep.analytic_spread = rep.ring_dim;

  auto g = gorenstein_status_I(poset, r);
  rep.dim_quotient = g.dim;
  rep.height = g.height;
  verify(rep.height == n && rep.dim_quotient == n * (r - 1), "I_r(P) has height n");
  rep.predicted_depth_limit = r * n - rep.analytic_spread;
  verify(rep.predicted_depth_limit == n - 1, "limit depth of S/H_r(P)^k is n - 1");

  auto pr = projdim_and_reg(poset, r);
  rep.pd = pr.pd;
  rep.reg = pr.reg;
  verify(rep.pd == (r - 1) * rep.width, "pd H_r(P) = (r-1) width(P)");
  if (r * n <= 12) {
    auto betti = oracle::hochster_betti(multichain_ideal_I(poset, r, r));
    int reg = 0;
    for (const auto& [key, value] : betti.graded)
      if (value) reg = std::max(reg, key.second - key.first);
    rep.reg_quotient_I = reg;
    verify(reg == rep.pd, "reg S/I_r(P) = pd H_r(P)");
  }

  rep.generators_I = static_cast<int>(multichain_ideal_I(poset, r, s).generators().size());
  rep.generators_H = static_cast<int>(generalized_hibi_H(poset, r, s).ideal.generators().size());

  rep.complete_intersection = g.complete_intersection;
  rep.gorenstein_I = g.gorenstein;
  verify(r == 1 || (rep.complete_intersection == rep.antichain && rep.gorenstein_I == rep.antichain),
         "I_r(P) is Gorenstein iff a complete intersection iff P is an antichain");
  rep.gorenstein_R = rep.pure;
  if (r >= 2)
    verify(is_pure(direct_product(poset, chain_poset(r - 1))) == rep.pure,
           "P x Q_{r-1} is pure iff P is pure");

  rep.certificates = cm_certificates(poset, r, s);
  return rep;
}

HibiIsomorphism verify_hibi_isomorphism(const Poset& poset, int r) {
  require(r >= 2, "the isomorphism needs r >= 2");
  const int n = poset.size(), m = r - 1;
  HibiIsomorphism out{direct_product(poset, chain_poset(m)), multichain_ideals(poset, r), {}, 0};
  const Poset& prod = out.product;

  std::vector<int> canonical(n * m);
  for (int c = 0; c < prod.size(); ++c) canonical[prod.input_index(c)] = c;

  // (p, k) lies in the image iff p lies in I_{r-k}, k = 1 .. r-1.
  auto phi = [&](const Multichain& chain) {
    ElementSet img = 0;
    for (int p = 0; p < n; ++p)
      for (int k = 1; k <= m; ++k)
        if ((chain[r - k - 1] >> p) & 1) img |= bit(canonical[p * m + (k - 1)]);
    return img;
  };

  std::map<Multichain, ElementSet> image_of;
  for (const auto& c : out.chains) {
    ElementSet img = phi(c);
    verify(prod.is_ideal(img), "the image of a multichain is an ideal of P x Q_{r-1}");
    out.images.push_back(img);
    image_of[c] = img;
  }
  auto targets = poset_ideals(prod);
  std::set<ElementSet> hit(out.images.begin(), out.images.end());
  verify(hit.size() == out.images.size() && hit == std::set<ElementSet>(targets.begin(), targets.end()),
         "multichains correspond bijectively to ideals of P x Q_{r-1}");
  for (std::size_t a = 0; a < out.chains.size(); ++a)
    for (std::size_t b = a + 1; b < out.chains.size(); ++b) {
      verify(phi(out.chains[a].meet(out.chains[b])) == (out.images[a] & out.images[b]), "the bijection preserves meets");
      verify(phi(out.chains[a].join(out.chains[b])) == (out.images[a] | out.images[b]), "the bijection preserves joins");
    }

  auto pres_r = fiber_presentation(poset, r, r);
  auto pres_2 = fiber_presentation(prod, 2, 2);
  std::map<ElementSet, int> var_2;
  for (int j = 0; j < pres_2.fiber_count(); ++j) var_2[pres_2.factors[j][0][0]] = j;
  std::vector<int> substitution(pres_r.fiber_count());
  for (int i = 0; i < pres_r.fiber_count(); ++i) substitution[i] = var_2.at(image_of.at(pres_r.factors[i][0]));

  auto mapped = [&](const Monomial& u) {
    Monomial v(pres_2.fiber_count());
    for (int i = 0; i < pres_r.fiber_count(); ++i)
      for (int e = 0; e < u[i]; ++e) v.increment(substitution[i]);
    return v;
  };
  std::vector<Binomial> carried;
  for (const auto& b : hibi_relation_family(pres_r)) carried.push_back(Binomial{mapped(b.lead), mapped(b.trail), false});
  auto relations_2 = hibi_relation_family(pres_2);
  verify(same_basis(carried, relations_2), "the substitution carries Hibi relations onto Hibi relations");
  out.relations = static_cast<int>(relations_2.size());
  return out;
}

}  // namespace hibi
