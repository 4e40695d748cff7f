#include <doctest.h>

#include "fixtures.hpp"
#include "hibi/error.hpp"
#include "hibi/invariants.hpp"

using namespace hibi;

TEST_CASE("report: chain of three") {
  Poset c3 = chain_poset(3);
  auto rep = full_report(c3, 2, 2);
  CHECK(rep.pure);
  CHECK(rep.gorenstein_R);
  CHECK_FALSE(rep.antichain);
  CHECK_FALSE(rep.gorenstein_I);
  CHECK_FALSE(rep.complete_intersection);
  CHECK(rep.pd == 1);
  CHECK(rep.ring_dim == 4);
  CHECK(rep.dim_quotient == 3);
  CHECK(rep.height == 3);
  CHECK(rep.predicted_depth_limit == 2);
  CHECK(rep.reg_quotient_I == 1);
  CHECK(rep.certificates.weakly_polymatroidal);
  CHECK(rep.certificates.hibi_relations == 0);
}

TEST_CASE("report: p1 < p2 plus an isolated point is not pure") {
  auto rep = full_report(fixtures::p4(), 2, 2);
  CHECK_FALSE(rep.pure);
  CHECK_FALSE(rep.gorenstein_R);
  CHECK(rep.width == 2);
  CHECK(rep.pd == 2);
}

TEST_CASE("report: antichain") {
  auto rep = full_report(fixtures::a2(), 3, 3);
  CHECK(rep.complete_intersection);
  CHECK(rep.gorenstein_I);
  CHECK(rep.pd == 4);
  CHECK(rep.generators_I == 2);
  CHECK(rep.reg_quotient_I == 4);
  CHECK(rep.ring_dim == 5);

  auto r2 = full_report(fixtures::a2(), 2, 2);
  CHECK(r2.complete_intersection);
  CHECK(r2.gorenstein_I);
  CHECK(r2.covers.empty());
}

TEST_CASE("report: s < r") {
  auto rep = full_report(fixtures::chain2(), 3, 2);
  CHECK(rep.ring_dim == 5);
  CHECK(rep.ring_dim_rs >= 1);
  CHECK(rep.certificates.sorting_squarefree_quadratic);
  REQUIRE(rep.certificates.rees.has_value());
  CHECK(rep.certificates.rees->squarefree_quadratic);
  CHECK(rep.certificates.rees->x_condition);
  CHECK_FALSE(rep.certificates.hibi_relations.has_value());
  CHECK_THROWS_AS(full_report(fixtures::chain2(), 2, 3), InputError);
}

TEST_CASE("certificates hold for n <= 3, r <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 1; r <= (n == 3 ? 2 : 3); ++r)
        for (int s = 1; s <= r; ++s) {
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(s);
          auto c = cm_certificates(p, r, s);
          CHECK(c.weakly_polymatroidal);
          CHECK(c.linear_quotients);
          CHECK(c.sorting_squarefree_quadratic);
          REQUIRE(c.rees.has_value());
          CHECK(c.rees->squarefree_quadratic);
          CHECK(c.rees->x_condition);
        }
}

TEST_CASE("reg S/I_r equals pd H_r") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 2; r * n <= 9; ++r) {
        auto rep = full_report(p, r, r);
        REQUIRE(rep.reg_quotient_I.has_value());
        CHECK(*rep.reg_quotient_I == rep.pd);
      }
}

TEST_CASE("isomorphism: small cases") {
  auto iso = verify_hibi_isomorphism(fixtures::point(), 3);
  CHECK(iso.chains.size() == 3);
  CHECK(iso.product.size() == 2);
  CHECK(iso.relations == 0);

  auto c = verify_hibi_isomorphism(fixtures::chain2(), 3);
  CHECK(c.chains.size() == 6);
  CHECK(c.relations == 1);

  auto a = verify_hibi_isomorphism(fixtures::a2(), 2);
  CHECK(a.relations == 1);
  CHECK_THROWS_AS(verify_hibi_isomorphism(fixtures::a2(), 1), InputError);
}

TEST_CASE("isomorphism for n <= 3, r <= 4") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n))
      for (int r = 2; r <= 4; ++r) CHECK_NOTHROW(verify_hibi_isomorphism(p, r));
}

TEST_CASE("large fibers leave out the Rees certificate") {
  auto c = cm_certificates(antichain_poset(3), 4, 3);
  CHECK_FALSE(c.rees.has_value());
  CHECK(c.sorting_squarefree_quadratic);
  CHECK(c.weakly_polymatroidal);
}
