// One line per criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "hibi/error.hpp"
#include "hibi/hibi_ideals.hpp"
#include "hibi/invariants.hpp"
#include "hibi/oracle.hpp"
#include "hibi/toric.hpp"

using namespace hibi;

namespace {

struct Failed {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

std::string describe(const Poset& p, int r, int s) {
  std::ostringstream os;
  os << "n=" << p.size() << " covers=" << p.covers().size() << " r=" << r << " s=" << s;
  return os.str();
}

std::vector<Poset> posets_up_to(int n) {
  std::vector<Poset> out;
  for (int k = 1; k <= n; ++k)
    for (auto& p : all_posets(k)) out.push_back(std::move(p));
  return out;
}

BettiTable nonzero(const BettiTable& t) {
  BettiTable out;
  for (const auto& [k, v] : t)
    if (v) out[k] = v;
  return out;
}

std::string c1() {
  auto pres = veronese_presentation(6, 3);
  auto result = revlex_gb(pres, identity_y_order(pres));
  std::set<std::string> cubics;
  for (const auto& b : result.basis.binomials)
    if (b.degree() == 3) cubics.insert(to_string(b, pres));
  const std::set<std::string> expected{"kps - lmt", "ejs - fgt", "bjp - cdt", "drs - gmt", "cqs - flt", "ajp - cds",
                                       "bqr - ekt", "aqr - eks", "ano - bkp", "aio - bdr", "ahi - bej", "ahn - bcq"};
  expect(cubics == expected, "degree-3 elements differ from the expected list");
  expect(result.squarefree_initials, "an initial term is not squarefree");
  expect(result.max_degree == 3, "max degree " + std::to_string(result.max_degree));
  return std::to_string(result.basis.binomials.size()) + " elements, 12 cubics";
}

std::string c2() {
  auto pres = veronese_presentation(4, 2);
  auto result = revlex_gb(pres, identity_y_order(pres));
  int count = minimal_generator_count(pres, result.basis);
  expect(count == 2, "minimal generators: " + std::to_string(count));
  return "2 minimal generators";
}

std::string c3() {
  int cases = 0;
  auto posets = posets_up_to(4);
  expect(posets.size() == 24, "expected 24 posets on at most 4 elements, got " + std::to_string(posets.size()));
  for (const auto& p : posets)
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= r; ++s) {
        auto dual = alexander_dual(multichain_ideal_I(p, r, s));
        expect(dual == hibi_squarefree_power(p, r, r - s + 1).ideal, describe(p, r, s));
        ++cases;
      }
  return std::to_string(posets.size()) + " posets, " + std::to_string(cases) + " cases";
}

std::string c4() {
  int cases = 0;
  for (const auto& p : posets_up_to(3)) {
    for (int r = 1; r <= 3; ++r)
      for (int k = 1; k <= 3; ++k) {
        auto hp = hibi_power(p, r, k);
        expect(is_weakly_polymatroidal(hp.ideal, VariableOrder::row_major(hp.ideal.ambient())).holds,
               "H_r^k " + describe(p, r, k));
        ++cases;
      }
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= r; ++s) {
        auto gh = generalized_hibi_H(p, r, s);
        expect(is_weakly_polymatroidal(gh.ideal, VariableOrder::row_major(gh.ideal.ambient())).holds,
               "H_{r,s} " + describe(p, r, s));
        ++cases;
      }
  }
  return std::to_string(cases) + " ideals";
}

std::string c5() {
  int cases = 0;
  // Posets are enumerated up to 6 elements; beyond that only r = 1 fits.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : all_posets(n))
      for (int r = 1; r * n <= 12; ++r) {
        auto h = hibi_ideal_H(p, r);
        auto lq = linear_quotients(h, VariableOrder::row_major(h.ambient()));
        expect(lq.ok, "linear quotients " + describe(p, r, r));
        for (std::size_t i = 0; i < lq.order.size(); ++i)
          expect(lq.sets[i] == set_of(p, multichain_of(p, r, lq.order[i])), "set formula " + describe(p, r, r));
        auto table = betti_from_sets(p, r);
        auto hochster = oracle::hochster_betti(h);
        expect(nonzero(table) == BettiTable(hochster.graded.begin(), hochster.graded.end()),
               "graded Betti numbers " + describe(p, r, r));
        expect(betti_totals(table) == hochster.totals, "Betti totals " + describe(p, r, r));
        ++cases;
      }
  }
  int pd_cases = 0;
  for (const auto& p : posets_up_to(5))
    for (int r = 1; r <= 4; ++r) {
      expect(projdim_and_reg(p, r).pd == (r - 1) * width(p), "pd " + describe(p, r, r));
      ++pd_cases;
    }
  auto chain2 = Poset({"a", "b"}, {{0, 1}});
  auto a2 = Poset({"a", "b"}, {});
  expect(betti_totals(betti_from_sets(chain2, 2)) == std::vector<long long>{1, 3, 2}, "chain of 2");
  expect(betti_totals(betti_from_sets(a2, 2)) == std::vector<long long>{1, 4, 4, 1}, "antichain of 2");
  return std::to_string(cases) + " oracle cases, " + std::to_string(pd_cases) + " pd cases";
}

std::string c6() {
  int cases = 0;
  for (const auto& p : posets_up_to(3))
    for (int r = 1; r <= 3; ++r) {
      auto complex = resolution_of_H(p, r);
      oracle::Numerator twists;
      for (const auto& [m, c] : twist_alternating_sum(complex))
        if (c) twists[m.exponents()] = c;
      expect(twists == oracle::hilbert_numerator(hibi_ideal_H(p, r)), "Hilbert series " + describe(p, r, r));
      ++cases;
    }
  return std::to_string(cases) + " complexes";
}

std::string c7() {
  int cases = 0;
  for (const auto& p : posets_up_to(3))
    for (int r = 1; r <= 3; ++r) {
      auto pres = fiber_presentation(p, r, r);
      auto order = TermOrder::revlex(pres, canonical_y_order(pres));
      expect(same_basis(hibi_relations(p, r).binomials, toric_gb(pres, order).binomials), describe(p, r, r));
      ++cases;
    }
  auto count = hibi_relations(Poset({"a", "b"}, {}), 2).binomials.size();
  expect(count == 1, "antichain of 2 has " + std::to_string(count) + " relations");
  return std::to_string(cases) + " cases";
}

std::string c8() {
  int cases = 0;
  for (const auto& p : posets_up_to(3))
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= r; ++s) {
        auto pres = fiber_presentation(p, r, s);
        expect(is_sortable(pres.images, pres.ambient).sortable, "sortable " + describe(p, r, s));
        sorting_gb(pres);
        ++cases;
      }
  return std::to_string(cases) + " cases";
}

std::string c9() {
  int cases = 0;
  for (const auto& p : posets_up_to(2))
    for (int r = 1; r <= 3; ++r)
      for (int s = 1; s <= r; ++s) {
        auto result = rees_gb(p, r, s);
        expect(result.squarefree_quadratic, "squarefree quadratic " + describe(p, r, s));
        expect(result.x_condition, "x-condition " + describe(p, r, s));
        ++cases;
      }
  return std::to_string(cases) + " cases";
}

std::string c10() {
  int cases = 0;
  for (const auto& p : posets_up_to(5))
    for (int r = 1; r <= 4; ++r) {
      const int n = p.size();
      expect(krull_dim(fiber_presentation(p, r, r)) == n * (r - 1) + 1, "dim " + describe(p, r, r));
      if (r >= 2) {
        expect(is_pure(direct_product(p, chain_poset(r - 1))) == is_pure(p), "purity " + describe(p, r, r));
        auto g = gorenstein_status_I(p, r);
        expect(g.complete_intersection == is_antichain(p), "CI " + describe(p, r, r));
      }
      ++cases;
    }
  return std::to_string(cases) + " cases";
}

std::string c11() {
  int cases = 0;
  for (const auto& p : posets_up_to(4))
    for (int r = 2; r <= 4; ++r) {
      verify_hibi_isomorphism(p, r);
      ++cases;
    }
  return std::to_string(cases) + " cases";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double seconds;  // 0 = no limit
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {"R(6,3) revlex basis", 10, c1},
      {"R(4,2) minimal generators", 1, c2},
      {"Alexander dual of I_{r,s} is a squarefree power", 120, c3},
      {"weak polymatroidality", 0, c4},
      {"set formula, Betti numbers and pd", 0, c5},
      {"resolution reproduces the Hilbert series", 0, c6},
      {"Hibi relations are the reduced basis", 0, c7},
      {"sortability and the sorting basis", 0, c8},
      {"Rees algebra basis", 0, c9},
      {"dimension, purity and complete intersections", 0, c10},
      {"multichain lattice isomorphism", 0, c11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failed& f) {
      ok = false;
      detail = f.why;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.seconds > 0 && elapsed > c.seconds) {
      ok = false;
      detail += ", over the " + std::to_string(static_cast<int>(c.seconds)) + "s limit";
    }
    if (!ok) ++failures;
    std::printf("%s %2zu  %-48s %s (%.2fs)\n", ok ? "PASS" : "FAIL", i + 1, c.name, detail.c_str(), elapsed);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
