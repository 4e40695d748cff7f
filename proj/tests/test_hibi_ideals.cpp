#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hibi/error.hpp"
#include "hibi/hibi_ideals.hpp"

using namespace hibi;
using fixtures::mc;
using fixtures::x;

namespace {

const Ambient kGrid{2, 2};

VarMask vars(const Ambient& amb, std::initializer_list<std::pair<int, int>> xs) {
  VarMask m = 0;
  for (auto [i, j] : xs) m |= VarMask{1} << amb.index(i - 1, j - 1);
  return m;
}

long long binomial(int n, int k) {
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_CASE("I_{r,s}") {
  for (int r = 1; r <= 5; ++r)
    for (int s = 1; s <= r; ++s) {
      auto ideal = multichain_ideal_I(fixtures::point(), r, s);
      CHECK(ideal.size() == binomial(r, s));
      CHECK(ideal.is_squarefree());
      CHECK(ideal.equigenerated_degree() == s);
    }
  CHECK(multichain_ideal_I(fixtures::chain2(), 2, 2) ==
        fixtures::ideal(kGrid, {x(kGrid, {{1, 1}, {2, 1}}), x(kGrid, {{1, 1}, {2, 2}}), x(kGrid, {{1, 2}, {2, 2}})}));
  auto linear = multichain_ideal_I(fixtures::vee(), 3, 1);
  CHECK(linear.size() == 9);
  CHECK(linear.equigenerated_degree() == 1);
  CHECK_THROWS_AS(multichain_ideal_I(fixtures::chain2(), 2, 3), InputError);
  CHECK_THROWS_AS(multichain_ideal_I(fixtures::chain2(), 2, 0), InputError);
}

TEST_CASE("H_r") {
  CHECK(hibi_ideal_H(fixtures::chain2(), 2) ==
        fixtures::ideal(kGrid, {x(kGrid, {{2, 1}, {2, 2}}), x(kGrid, {{1, 1}, {2, 2}}), x(kGrid, {{1, 1}, {1, 2}})}));
  auto anti = hibi_ideal_H(fixtures::a2(), 2);
  std::vector<Monomial> product;
  for (int i : {1, 2})
    for (int j : {1, 2}) product.push_back(x(kGrid, {{i, 1}, {j, 2}}));
  CHECK(anti == fixtures::ideal(kGrid, product));
  auto one = hibi_ideal_H(fixtures::vee(), 1);
  CHECK(one.generators() == std::vector<Monomial>{Monomial({1, 1, 1})});

  for (int r = 1; r <= 3; ++r)
    for (const auto& c : multichain_ideals(fixtures::vee(), r))
      CHECK(multichain_of(fixtures::vee(), r, hibi_generator(fixtures::vee(), c)) == c);
}

TEST_CASE("H_{r,s}") {
  for (const auto& p : {fixtures::chain2(), fixtures::vee()})
    for (int r = 1; r <= 3; ++r) CHECK(generalized_hibi_H(p, r, r).ideal == hibi_ideal_H(p, r));
  auto full = generalized_hibi_H(fixtures::vee(), 3, 1).ideal;
  CHECK(full.generators() == std::vector<Monomial>{Monomial(std::vector<int>(9, 1))});

  // For one element H_{r,s} is the squarefree Veronese ideal of degree
  // r - s + 1, the Alexander dual of I_{r,s}.
  Ambient column{4, 1};
  auto veronese = generalized_hibi_H(fixtures::point(), 4, 3);
  CHECK(veronese.ideal.size() == 6);
  CHECK(veronese.ideal.generators().front() == x(column, {{1, 1}, {2, 1}}));
  for (const auto& f : veronese.factors) CHECK(f.size() == 2);
  CHECK(generalized_hibi_H(fixtures::point(), 4, 2).ideal.size() == 4);
  CHECK(multichain_ideal_I(fixtures::point(), 4, 2) == veronese.ideal);

  // Duality and the strict-chain description over every small poset.
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= r; ++s) CHECK_NOTHROW(generalized_hibi_H(p, r, s));
}

TEST_CASE("powers of H_r factor through chains") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 3; ++k) {
          auto hp = hibi_power(p, r, k);
          CHECK(hp.ideal == power(hibi_ideal_H(p, r), k));
        }
}

TEST_CASE("set formula") {
  Poset c = fixtures::chain2();
  CHECK(set_of(c, mc({0b01, 0b11})) == vars(kGrid, {{1, 2}}));
  CHECK(set_of(c, mc({0b11, 0b11})) == 0);
  CHECK(set_of(fixtures::a2(), mc({0b00, 0b11})) == vars(kGrid, {{1, 1}, {1, 2}}));

  CHECK(set_of_power(fixtures::a2(), {mc({0b00, 0b11}), mc({0b00, 0b11})}) == vars(kGrid, {{1, 1}, {1, 2}}));
  CHECK(set_of_power(c, {mc({0b01, 0b11}), mc({0b11, 0b11})}) == vars(kGrid, {{1, 2}}));
  CHECK_THROWS_AS(set_of_power(c, {mc({0b11, 0b11}), mc({0b01, 0b11})}), InputError);

  // Against colon ideals in decreasing RowMajor lex order.
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 4; ++r) {
        auto h = hibi_ideal_H(p, r);
        auto lq = linear_quotients(h, VariableOrder::row_major(h.ambient()));
        REQUIRE(lq.ok);
        for (std::size_t i = 0; i < lq.order.size(); ++i)
          CHECK(lq.sets[i] == set_of(p, multichain_of(p, r, lq.order[i])));
      }
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 3; ++r)
        for (int k = 2; k <= 3; ++k) {
          auto hp = hibi_power(p, r, k);
          auto lq = linear_quotients(hp.ideal, VariableOrder::row_major(hp.ideal.ambient()));
          REQUIRE(lq.ok);
          for (std::size_t i = 0; i < lq.order.size(); ++i) {
            auto at = std::find(hp.ideal.generators().begin(), hp.ideal.generators().end(), lq.order[i]) -
                      hp.ideal.generators().begin();
            CHECK(lq.sets[i] == set_of_power(p, hp.factors[at]));
          }
        }
}

TEST_CASE("projective dimension") {
  for (int n = 1; n <= 4; ++n) CHECK(projdim_and_reg(chain_poset(n), 3).pd == 2);
  CHECK(projdim_and_reg(fixtures::a2(), 2).pd == 2);
  CHECK(projdim_and_reg(antichain_poset(4), 2).pd == 4);
  CHECK(projdim_and_reg(fixtures::vee(), 1).pd == 0);
}

TEST_CASE("decomposition function") {
  Poset c = fixtures::chain2();
  auto d = decomposition_g(c, mc({0b01, 0b11}), kGrid.index(0, 1));
  CHECK(d.chain == mc({0b11, 0b11}));
  CHECK(d.t == 1);
  CHECK(hibi_generator(c, d.chain) == x(kGrid, {{1, 1}, {1, 2}}));
  CHECK(decomposition_g(fixtures::a2(), mc({0b00, 0b11}), kGrid.index(0, 0)).chain == mc({0b01, 0b11}));
  CHECK_THROWS_AS(decomposition_g(c, mc({0b11, 0b11}), kGrid.index(0, 0)), InputError);

  // set(u_{I'}) need not lie inside set(u_I): here b becomes minimal in the
  // complement once a is inserted.
  Ambient amb{3, 2};
  auto e = decomposition_g(c, mc({0b00, 0b00, 0b11}), amb.index(0, 0));
  CHECK(e.chain == mc({0b01, 0b01, 0b11}));
  CHECK(set_of(c, mc({0b00, 0b00, 0b11})) == vars(amb, {{1, 1}, {2, 1}}));
  CHECK(set_of(c, e.chain) == vars(amb, {{1, 2}, {2, 2}}));
}

TEST_CASE("resolution of S/H_r") {
  Poset c = fixtures::chain2();
  auto cx = resolution_of_H(c, 2);
  CHECK(cx.ranks() == std::vector<long long>{1, 3, 2});
  // f({x[1,2]}; ({a} in P)) maps to x[2,2] f(0; (P in P)) - x[1,2] f(0; ({a} in P)).
  int gen = static_cast<int>(std::find(cx.chains.begin(), cx.chains.end(), mc({0b01, 0b11})) - cx.chains.begin());
  int top = static_cast<int>(std::find(cx.chains.begin(), cx.chains.end(), mc({0b11, 0b11})) - cx.chains.begin());
  auto sym = std::find_if(cx.bases[2].begin(), cx.bases[2].end(), [&](const ResolutionSymbol& s) { return s.gen == gen; });
  REQUIRE(sym != cx.bases[2].end());
  CHECK(sym->sigma == vars(kGrid, {{1, 2}}));
  const auto& terms = cx.differential[2][sym - cx.bases[2].begin()];
  REQUIRE(terms.size() == 2);
  CHECK(cx.bases[1][terms[0].target].gen == top);
  CHECK(terms[0].sign == 1);
  CHECK(terms[0].coeff == x(kGrid, {{2, 2}}));
  CHECK(cx.bases[1][terms[1].target].gen == gen);
  CHECK(terms[1].sign == -1);
  CHECK(terms[1].coeff == x(kGrid, {{1, 2}}));

  CHECK(resolution_of_H(fixtures::a2(), 2).ranks() == std::vector<long long>{1, 4, 4, 1});
  CHECK(resolution_of_H(fixtures::vee(), 1).ranks() == std::vector<long long>{1, 1});

  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 3; ++r) {
        auto complex = resolution_of_H(p, r);
        CHECK(complex.ranks() == betti_totals(betti_from_sets(p, r)));
      }
}

TEST_CASE("Betti numbers from sets") {
  CHECK(betti_totals(betti_from_sets(fixtures::chain2(), 2)) == std::vector<long long>{1, 3, 2});
  CHECK(betti_totals(betti_from_sets(fixtures::a2(), 2)) == std::vector<long long>{1, 4, 4, 1});
  CHECK(betti_totals(betti_from_sets(fixtures::vee(), 1)) == std::vector<long long>{1, 1});
  auto table = betti_from_sets(fixtures::a2(), 2);
  CHECK(table.at({2, 3}) == 4);
  CHECK(table.at({3, 4}) == 1);
}

TEST_CASE("Gorenstein status of I_r") {
  auto anti = gorenstein_status_I(antichain_poset(3), 2);
  CHECK(anti.complete_intersection);
  CHECK(anti.gorenstein);
  CHECK(anti.dim == 3);
  CHECK(anti.height == 3);
  auto gens = multichain_ideal_I(antichain_poset(3), 2, 2);
  CHECK(gens.size() == 3);
  CHECK_FALSE(gorenstein_status_I(fixtures::chain2(), 2).complete_intersection);
  CHECK(gorenstein_status_I(fixtures::point(), 4).complete_intersection);
}
