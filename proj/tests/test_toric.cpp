#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "hibi/error.hpp"
#include "hibi/hibi_ideals.hpp"
#include "hibi/oracle.hpp"
#include "hibi/toric.hpp"

using namespace hibi;
using fixtures::x;

namespace {

std::vector<std::vector<int>> oracle_images(const ToricPresentation& pres) {
  // x_i -> e_i and y_j -> (u_j, 1) for Rees presentations.
  const int nx = pres.ambient.size();
  std::vector<std::vector<int>> out;
  for (int v = 0; v < pres.base_count(); ++v) {
    std::vector<int> e(nx + 1, 0);
    e[v] = 1;
    out.push_back(e);
  }
  for (const auto& u : pres.images) {
    std::vector<int> e = u.exponents();
    if (pres.with_base) e.push_back(1);
    out.push_back(e);
  }
  return out;
}

bool all_in_kernel(const ToricPresentation& pres, const GroebnerBasis& gb) {
  auto images = oracle_images(pres);
  return std::all_of(gb.binomials.begin(), gb.binomials.end(), [&](const Binomial& b) {
    return oracle::kernel_membership(images, b.lead.exponents(), b.trail.exponents());
  });
}

int incomparable_pairs(const std::vector<Multichain>& chains) {
  int count = 0;
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = i + 1; j < chains.size(); ++j)
      if (!chains[i].leq(chains[j]) && !chains[j].leq(chains[i])) ++count;
  return count;
}

}  // namespace

TEST_CASE("term orders") {
  auto pres = veronese_presentation(3, 1);
  auto order = TermOrder::revlex(pres, {0, 1, 2});
  // a > b > c; revlex: ac < b^2 since c is the smallest variable.
  CHECK(order.compare(Monomial({0, 2, 0}), Monomial({1, 0, 1})) == 1);
  CHECK(order.compare(Monomial({1, 1, 0}), Monomial({0, 2, 0})) == 1);
  CHECK(order.compare(Monomial({1, 0, 0}), Monomial({1, 0, 0})) == 0);
  CHECK_THROWS_AS(TermOrder::revlex(pres, {0, 0, 1}), InputError);
}

TEST_CASE("toric_gb examples") {
  auto single = fiber_presentation(fixtures::point(), 2, 2);
  CHECK(single.fiber_count() == 2);
  CHECK(toric_gb(veronese_presentation(2, 2), TermOrder::revlex(veronese_presentation(2, 2), {0})).binomials.empty());

  auto a2 = fiber_presentation(fixtures::a2(), 2, 2);
  auto gb = toric_gb(a2, TermOrder::revlex(a2, canonical_y_order(a2)));
  REQUIRE(gb.binomials.size() == 1);
  CHECK(gb.binomials[0].degree() == 2);
  CHECK(all_in_kernel(a2, gb));
  CHECK(is_groebner_basis(gb.binomials, TermOrder::revlex(a2, canonical_y_order(a2))));

  // Twisted cubic: three quadrics.
  ToricPresentation cubic;
  cubic.ambient = Ambient{2, 1};
  cubic.images = {Monomial({3, 0}), Monomial({2, 1}), Monomial({1, 2}), Monomial({0, 3})};
  cubic.names = {"a", "b", "c", "d"};
  auto cgb = toric_gb(cubic, TermOrder::revlex(cubic, {0, 1, 2, 3}));
  CHECK(cgb.binomials.size() == 3);
  CHECK(is_reduced(cgb.binomials));
  CHECK(all_in_kernel(cubic, cgb));
  CHECK(minimal_generator_count(cubic, cgb) == 3);
  CHECK(to_string(cgb.binomials[0], cubic).find(" - ") != std::string::npos);
}

TEST_CASE("R_{4,2} has two minimal generators") {
  auto pres = veronese_presentation(4, 2);
  CHECK(pres.fiber_count() == 6);
  CHECK(pres.images[0] == Monomial({1, 1, 0, 0}));
  auto result = revlex_gb(pres, identity_y_order(pres));
  CHECK(result.max_degree == 2);
  CHECK(result.squarefree_initials);
  CHECK(minimal_generator_count(pres, result.basis) == 2);
  auto sorted = sorting_gb(pres);
  CHECK(sorted.binomials.size() >= 2);
  CHECK(minimal_generator_count(pres, sorted) == 2);
}

TEST_CASE("R_{6,3} degree-3 elements") {
  auto pres = veronese_presentation(6, 3);
  REQUIRE(pres.fiber_count() == 20);
  CHECK(pres.names.back() == "t");
  auto result = revlex_gb(pres, identity_y_order(pres));
  CHECK(result.squarefree_initials);
  CHECK(result.max_degree == 3);
  std::set<std::string> cubics;
  for (const auto& b : result.basis.binomials)
    if (b.degree() == 3) cubics.insert(to_string(b, pres));
  std::set<std::string> expected{"kps - lmt", "ejs - fgt", "bjp - cdt", "drs - gmt", "cqs - flt", "ajp - cds",
                                 "bqr - ekt", "aqr - eks", "ano - bkp", "aio - bdr", "ahi - bej", "ahn - bcq"};
  CHECK(cubics == expected);
  CHECK(all_in_kernel(pres, result.basis));
}

TEST_CASE("Hibi relations") {
  CHECK(hibi_relations(fixtures::a2(), 2).binomials.size() == 1);
  CHECK(hibi_relations(fixtures::point(), 4).binomials.empty());
  CHECK(hibi_relations(chain_poset(3), 2).binomials.empty());
  // The 3x3 grid lattice: 36 pairs, 27 of them comparable.
  CHECK(hibi_relations(fixtures::a2(), 3).binomials.size() == 9);
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 3; ++r) {
        auto gb = hibi_relations(p, r);
        CHECK(gb.binomials.size() == incomparable_pairs(multichain_ideals(p, r)));
        CHECK_NOTHROW(hibi_relations(p, r, 17));
      }
}

TEST_CASE("sorting") {
  Ambient line{4, 1};
  auto [a, b] = sort_pair(Monomial({1, 1, 0, 0}), Monomial({0, 0, 1, 1}), line);
  CHECK(a == Monomial({1, 0, 1, 0}));
  CHECK(b == Monomial({0, 1, 0, 1}));
  CHECK(sort_pair(a, b, line) == std::make_pair(a, b));
  CHECK(sort_pair(a, a, line) == std::make_pair(a, a));
  CHECK_THROWS_AS(sort_pair(Monomial({1, 0, 0, 0}), a, line), InputError);

  auto bad = is_sortable({Monomial({1, 1, 0, 0}), Monomial({0, 0, 1, 1})}, line);
  CHECK_FALSE(bad.sortable);
  REQUIRE(bad.witness);
  CHECK(is_sortable({a}, line).sortable);

  // ColumnMajor: x[1,1] > x[2,1] > x[1,2] > x[2,2].
  Ambient grid{2, 2};
  auto [c, d] = sort_pair(x(grid, {{1, 1}, {2, 2}}), x(grid, {{1, 2}, {2, 1}}), grid);
  CHECK(c == x(grid, {{1, 1}, {1, 2}}));
  CHECK(d == x(grid, {{2, 1}, {2, 2}}));

  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= r; ++s) {
          auto pres = fiber_presentation(p, r, s);
          CHECK(is_sortable(pres.images, pres.ambient).sortable);
          CHECK_NOTHROW(sorting_gb(pres));
        }
}

TEST_CASE("sorting relations against Buchberger") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= r; ++s) {
          auto pres = fiber_presentation(p, r, s);
          auto sorted = sorting_gb(pres);
          auto weights = sorting_weights(pres);
          TermOrder order{"weighted", {OrderBlock{OrderBlock::Kind::RevLex, {}, weights}}};
          for (int i = 0; i < pres.fiber_count(); ++i) order.blocks[0].vars.push_back(i);
          CHECK(same_basis(sorted.binomials, toric_gb(pres, order).binomials));
          if (s == r) CHECK(sorted.binomials.size() >= hibi_relations(p, r).binomials.size());
        }
}

TEST_CASE("revlex bases of L_{r,s}") {
  for (const auto& p : all_posets(2))
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= r; ++s) {
        auto result = revlex_gb_L(p, r, s);
        CHECK(result.max_degree <= 3);
        CHECK(result.squarefree_initials);
        if (s == r) CHECK(result.max_degree <= 2);
      }
}

TEST_CASE("l-exchange property") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= r; ++s) CHECK(l_exchange_check(p, r, s).holds);
  CHECK(l_exchange_check(fixtures::point(), 1, 1).holds);

  ToricPresentation bad;
  bad.ambient = Ambient{2, 2};
  bad.images = {x(bad.ambient, {{1, 1}, {2, 2}}), x(bad.ambient, {{1, 2}, {2, 1}})};
  bad.names = {"a", "b"};
  auto result = l_exchange_check(bad);
  CHECK_FALSE(result.holds);
  REQUIRE(result.witness);
  CHECK(result.witness->q == bad.ambient.index(0, 0));
}

TEST_CASE("Rees algebra") {
  auto single = rees_gb(fixtures::point(), 1, 1);
  CHECK(single.fiber_part == 0);
  CHECK(single.linear_part == 0);

  auto chain = rees_gb(fixtures::chain2(), 2, 2);
  CHECK(chain.fiber_part == 0);
  CHECK(chain.linear_part > 0);

  auto anti = rees_gb(fixtures::a2(), 2, 2);
  CHECK(anti.fiber_part == 1);
  CHECK(anti.linear_part > 0);

  for (int n = 1; n <= 2; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= r; ++s) {
          auto result = rees_gb(p, r, s);
          CHECK(result.squarefree_quadratic);
          CHECK(result.x_condition);
          CHECK(all_in_kernel(rees_presentation(fiber_presentation(p, r, s)), result.basis));
        }
}

TEST_CASE("Krull dimension") {
  CHECK(krull_dim(fiber_presentation(fixtures::chain2(), 2, 2)) == 3);
  CHECK(krull_dim(fiber_presentation(fixtures::a2(), 2, 2)) == 3);
  CHECK(krull_dim(veronese_presentation(3, 3)) == 1);
  CHECK(krull_dim(rees_presentation(fiber_presentation(fixtures::a2(), 2, 2))) == 5);
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= 3; ++r) CHECK(krull_dim(fiber_presentation(p, r, r)) == n * (r - 1) + 1);
}

TEST_CASE("step budget") {
  setenv("HIBI_STEP_BUDGET", "5", 1);
  auto pres = veronese_presentation(6, 3);
  CHECK_THROWS_AS(toric_gb(pres, TermOrder::revlex(pres, identity_y_order(pres))), BudgetExceeded);
  setenv("HIBI_STEP_BUDGET", "junk", 1);
  CHECK_THROWS_AS(toric_gb(pres, TermOrder::revlex(pres, identity_y_order(pres))), InputError);
  unsetenv("HIBI_STEP_BUDGET");
}
