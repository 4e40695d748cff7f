#include "hibi/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hibi/error.hpp"
#include "hibi/hibi_ideals.hpp"
#include "hibi/linalg.hpp"

namespace hibi {

namespace {

using Exps = std::vector<int>;

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Support bitmask, exact up to 128 variables and a divisibility filter beyond.
struct Sig {
  std::uint64_t lo = 0, hi = 0;
  bool within(const Sig& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
  bool disjoint(const Sig& o) const { return (lo & o.lo) == 0 && (hi & o.hi) == 0; }
};

Sig signature(const Exps& e) {
  Sig s;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) (i % 128 < 64 ? s.lo : s.hi) |= std::uint64_t{1} << (i % 64);
  return s;
}

long long step_budget() {
  if (const char* env = std::getenv("HIBI_STEP_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("HIBI_STEP_BUDGET must be a positive integer, got '") + env + "'");
  }
  return 50'000'000;
}

std::string letter_name(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "y" + std::to_string(i + 1);
}

std::string ideal_text(const Poset& poset, ElementSet ideal) {
  std::string out = "{";
  bool first = true;
  for (int p = 0; p < poset.size(); ++p)
    if ((ideal >> p) & 1) {
      if (!first) out += ",";
      out += poset.name(p);
      first = false;
    }
  return out + "}";
}

// Binomial with lead > trail, kept as raw exponent vectors.
struct Bin {
  Exps lead;
  Exps trail;
  Sig sig;
};

class Buchberger {
 public:
  Buchberger(const TermOrder& order, std::vector<long long> grading, bool cancel_gcd)
      : order_(order), grading_(std::move(grading)), cancel_gcd_(cancel_gcd), budget_(step_budget()) {}

  // Orients a - b; nullopt when zero.
  std::optional<Bin> make(Exps a, Exps b) const {
    if (cancel_gcd_)
      for (std::size_t v = 0; v < a.size(); ++v) {
        int g = std::min(a[v], b[v]);
        a[v] -= g;
        b[v] -= g;
      }
    int c = order_.compare(a, b);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(a, b);
    Sig s = signature(a);
    return Bin{std::move(a), std::move(b), s};
  }

  const Bin* divisor_of(const Exps& m, const Sig& sig, const std::vector<Bin>& basis) const {
    for (const auto& g : basis)
      if (g.sig.within(sig) && divides(g.lead, m)) return &g;
    return nullptr;
  }

  // Reduces the lead until it is irreducible; with `tail` the trail too.
  std::optional<Bin> reduce(Bin p, const std::vector<Bin>& basis, bool tail) {
    while (true) {
      tick();
      if (const Bin* g = divisor_of(p.lead, p.sig, basis)) {
        Exps a = p.lead;
        for (std::size_t v = 0; v < a.size(); ++v) a[v] += g->trail[v] - g->lead[v];
        auto next = make(std::move(a), std::move(p.trail));
        if (!next) return std::nullopt;
        p = std::move(*next);
        continue;
      }
      if (!tail) return p;
      const Bin* g = divisor_of(p.trail, signature(p.trail), basis);
      if (!g) return p;
      Exps b = p.trail;
      for (std::size_t v = 0; v < b.size(); ++v) b[v] += g->trail[v] - g->lead[v];
      auto next = make(std::move(p.lead), std::move(b));
      if (!next) return std::nullopt;
      p = std::move(*next);
    }
  }

  std::optional<Bin> spoly(const Bin& f, const Bin& g) const {
    Exps a(f.lead.size()), b(f.lead.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
      int m = std::max(f.lead[v], g.lead[v]);
      a[v] = f.trail[v] + m - f.lead[v];
      b[v] = g.trail[v] + m - g.lead[v];
    }
    return make(std::move(a), std::move(b));
  }

  long long grade(const Exps& e) const {
    long long d = 0;
    for (std::size_t v = 0; v < e.size(); ++v) d += grading_[v] * e[v];
    return d;
  }

  std::vector<Bin> run(std::vector<Bin> input) {
    std::vector<Bin> basis;
    using Pair = std::tuple<long long, int, int>;
    std::priority_queue<Pair, std::vector<Pair>, std::greater<>> queue;
    // pending[j][i], i < j: the pair is queued and not yet treated.
    std::vector<std::vector<char>> pending;
    auto is_pending = [&](int a, int b) { return a < b ? pending[b][a] : pending[a][b]; };

    auto add = [&](Bin b) {
      int k = static_cast<int>(basis.size());
      basis.push_back(std::move(b));
      pending.emplace_back(k, 0);
      const Bin& h = basis[k];
      for (int i = 0; i < k; ++i) {
        const Bin& g = basis[i];
        // Coprime leads: the S-pair reduces to zero, nothing to queue.
        if (g.sig.disjoint(h.sig)) {
          bool coprime = true;
          for (std::size_t v = 0; v < h.lead.size() && coprime; ++v) coprime = !(g.lead[v] && h.lead[v]);
          if (coprime) continue;
        }
        long long deg = 0;
        for (std::size_t v = 0; v < h.lead.size(); ++v) deg += grading_[v] * std::max(g.lead[v], h.lead[v]);
        queue.emplace(deg, i, k);
        pending[k][i] = 1;
      }
    };

    for (auto& b : input)
      if (auto r = reduce(std::move(b), basis, false)) add(std::move(*r));

    Exps l;
    while (!queue.empty()) {
      auto [deg, i, j] = queue.top();
      queue.pop();
      pending[j][i] = 0;
      const Bin& f = basis[i];
      const Bin& g = basis[j];
      l.assign(f.lead.size(), 0);
      for (std::size_t v = 0; v < l.size(); ++v) l[v] = std::max(f.lead[v], g.lead[v]);
      // Chain criterion: some lead divides the lcm and both pairs with it are treated.
      bool chain = false;
      Sig ls = signature(l);
      for (int k = 0; k < static_cast<int>(basis.size()) && !chain; ++k) {
        if (k == i || k == j || !basis[k].sig.within(ls) || !divides(basis[k].lead, l)) continue;
        chain = !is_pending(i, k) && !is_pending(j, k);
      }
      if (chain) continue;
      auto s = spoly(f, g);
      if (!s) continue;
      if (auto r = reduce(std::move(*s), basis, false)) add(std::move(*r));
    }
    return interreduce(std::move(basis));
  }

  std::vector<Bin> interreduce(std::vector<Bin> basis) {
    std::sort(basis.begin(), basis.end(), [&](const Bin& a, const Bin& b) { return order_.compare(a.lead, b.lead) < 0; });
    std::vector<Bin> minimal;
    for (auto& b : basis) {
      if (divisor_of(b.lead, b.sig, minimal)) continue;
      minimal.push_back(std::move(b));
    }
    std::vector<Bin> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Bin b = minimal[i];
      while (true) {
        tick();
        const Bin* g = divisor_of(b.trail, signature(b.trail), minimal);
        if (!g) break;
        for (std::size_t v = 0; v < b.trail.size(); ++v) b.trail[v] += g->trail[v] - g->lead[v];
      }
      for (std::size_t v = 0; v < b.lead.size(); ++v)
        verify(!(b.lead[v] && b.trail[v]), "reduced binomials of a prime ideal have coprime terms");
      out.push_back(std::move(b));
    }
    return out;
  }

 private:
  void tick() {
    if (++steps_ > budget_)
      throw BudgetExceeded("Buchberger step budget of " + std::to_string(budget_) + " exhausted");
  }

  const TermOrder& order_;
  std::vector<long long> grading_;
  bool cancel_gcd_;
  long long budget_;
  long long steps_ = 0;
};

Exps image_of(const ToricPresentation& pres, const Exps& e) {
  // Coordinates: x variables, then t for Rees presentations.
  const int nx = pres.ambient.size();
  Exps out(nx + (pres.with_base ? 1 : 0), 0);
  for (int v = 0; v < pres.base_count(); ++v) out[v] += e[v];
  for (int i = 0; i < pres.fiber_count(); ++i) {
    int c = e[pres.y(i)];
    if (!c) continue;
    for (int v = 0; v < nx; ++v) out[v] += c * pres.images[i][v];
    if (pres.with_base) out[nx] += c;
  }
  return out;
}

void sort_canonically(std::vector<Binomial>& basis, const TermOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const Binomial& a, const Binomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    int c = order.compare(a.lead, b.lead);
    if (c != 0) return c > 0;
    return order.compare(a.trail, b.trail) > 0;
  });
}

}  // namespace

std::string ToricPresentation::variable_name(int var) const {
  if (var < base_count()) return hibi::variable_name(var, ambient);
  return names[var - base_count()];
}

ToricPresentation fiber_presentation(const Poset& poset, int r, int s) {
  GeneralizedHibi g = generalized_hibi_H(poset, r, s);
  ToricPresentation pres;
  pres.ambient = g.ideal.ambient();
  pres.images = g.ideal.generators();
  pres.factors = g.factors;
  for (const auto& tuple : g.factors) {
    std::string name = "y[";
    for (std::size_t f = 0; f < tuple.size(); ++f) {
      if (f) name += "|";
      for (int i = 0; i < tuple[f].length(); ++i) {
        if (i) name += ";";
        name += ideal_text(poset, tuple[f][i]);
      }
    }
    pres.names.push_back(name + "]");
  }
  return pres;
}

ToricPresentation veronese_presentation(int r, int d) {
  require(r >= 1 && d >= 1 && d <= r, "Veronese degree must satisfy 1 <= d <= r");
  require(r <= 64, "at most 64 variables");
  Ambient amb{r, 1};
  std::vector<Monomial> gens;
  std::vector<int> pick(d);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == d) {
      std::vector<int> e(r, 0);
      for (int i : pick) e[i] = 1;
      gens.emplace_back(e);
      return;
    }
    for (int i = start; i < r; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  ToricPresentation pres;
  pres.ambient = amb;
  pres.images = MonomialIdeal(amb, gens).generators();
  for (int i = 0; i < pres.fiber_count(); ++i) pres.names.push_back(letter_name(i));
  return pres;
}

ToricPresentation rees_presentation(ToricPresentation fiber) {
  fiber.with_base = true;
  return fiber;
}

std::string to_string(const Monomial& m, const ToricPresentation& pres) {
  std::vector<std::string> parts;
  bool letters = true;
  for (int v = 0; v < m.nvars(); ++v) {
    if (!m[v]) continue;
    std::string name = pres.variable_name(v);
    if (name.size() != 1) letters = false;
    if (m[v] > 1) name += "^" + std::to_string(m[v]);
    parts.push_back(name);
  }
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i && !letters) out += "*";
    out += parts[i];
  }
  return out;
}

std::string to_string(const Binomial& b, const ToricPresentation& pres) {
  return to_string(b.lead, pres) + " - " + to_string(b.trail, pres);
}

int TermOrder::compare(const std::vector<int>& a, const std::vector<int>& b) const {
  for (const auto& block : blocks) {
    if (block.kind == OrderBlock::Kind::Lex) {
      for (int v : block.vars)
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
      continue;
    }
    long long wa = 0, wb = 0;
    for (std::size_t i = 0; i < block.vars.size(); ++i) {
      long long w = block.weights.empty() ? 1 : block.weights[i];
      wa += w * a[block.vars[i]];
      wb += w * b[block.vars[i]];
    }
    if (wa != wb) return wa > wb ? 1 : -1;
    for (auto it = block.vars.rbegin(); it != block.vars.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
  }
  return 0;
}

namespace {

void check_y_order(const ToricPresentation& pres, const std::vector<int>& y_order) {
  std::vector<int> sorted = y_order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(pres.fiber_count());
  std::iota(expected.begin(), expected.end(), 0);
  require(sorted == expected, "y order must list every fiber variable once");
}

}  // namespace

TermOrder TermOrder::revlex(const ToricPresentation& pres, const std::vector<int>& y_order) {
  require(!pres.with_base, "revlex is an order on the fiber variables only");
  check_y_order(pres, y_order);
  OrderBlock block{OrderBlock::Kind::RevLex, {}, {}};
  for (int i : y_order) block.vars.push_back(pres.y(i));
  return TermOrder{"revlex", {block}};
}

TermOrder TermOrder::bigraded_sharp(const ToricPresentation& pres, const std::vector<long long>& y_weights,
                                    const std::vector<int>& y_order) {
  require(pres.with_base, "bigraded-sharp needs the base variables");
  require(static_cast<int>(y_weights.size()) == pres.fiber_count(), "one weight per fiber variable");
  check_y_order(pres, y_order);
  auto col = VariableOrder::column_major(pres.ambient);
  OrderBlock x{OrderBlock::Kind::Lex, {}, {}};
  for (int pos = 0; pos < col.size(); ++pos) x.vars.push_back(col.at(pos));
  OrderBlock y{OrderBlock::Kind::RevLex, {}, {}};
  for (int i : y_order) {
    y.vars.push_back(pres.y(i));
    y.weights.push_back(y_weights[i]);
  }
  return TermOrder{"bigraded-sharp", {x, y}};
}

GroebnerBasis toric_gb(const ToricPresentation& pres, const TermOrder& order) {
  const int nx = pres.ambient.size();
  const int m = pres.fiber_count();
  // Eliminated block first: x for fiber presentations, t for Rees ones.
  const int elim = pres.with_base ? 1 : nx;
  const int total = elim + pres.nvars();

  TermOrder full{order.name, {}};
  OrderBlock first{OrderBlock::Kind::RevLex, {}, {}};
  for (int v = 0; v < elim; ++v) first.vars.push_back(v);
  full.blocks.push_back(first);
  for (auto block : order.blocks) {
    for (int& v : block.vars) v += elim;
    full.blocks.push_back(std::move(block));
  }

  std::vector<long long> grading(total, 1);
  for (int i = 0; i < m; ++i) grading[elim + pres.y(i)] = pres.images[i].degree() + (pres.with_base ? 1 : 0);

  Buchberger engine(full, grading, true);
  std::vector<Bin> gens;
  for (int i = 0; i < m; ++i) {
    Exps a(total, 0), b(total, 0);
    a[elim + pres.y(i)] = 1;
    if (pres.with_base) {
      b[0] = 1;
      for (int v = 0; v < nx; ++v) b[1 + v] = pres.images[i][v];
    } else {
      for (int v = 0; v < nx; ++v) b[v] = pres.images[i][v];
    }
    if (auto g = engine.make(a, b)) gens.push_back(std::move(*g));
  }
  auto basis = engine.run(std::move(gens));

  GroebnerBasis out{{}, order.name, true};
  for (const auto& b : basis) {
    bool free = true;
    for (int v = 0; v < elim; ++v) free = free && !b.lead[v] && !b.trail[v];
    if (!free) continue;
    Exps lead(b.lead.begin() + elim, b.lead.end()), trail(b.trail.begin() + elim, b.trail.end());
    out.binomials.push_back(Binomial{Monomial(std::move(lead)), Monomial(std::move(trail)), false});
  }
  sort_canonically(out.binomials, order);
  for (const auto& b : out.binomials) verify(in_kernel(pres, b), "toric_gb elements lie in the kernel");
  return out;
}

bool is_groebner_basis(const std::vector<Binomial>& basis, const TermOrder& order) {
  if (basis.empty()) return true;
  const int nv = basis[0].lead.nvars();
  Buchberger engine(order, std::vector<long long>(nv, 1), false);
  std::vector<Bin> bins;
  for (const auto& b : basis) {
    if (order.compare(b.lead, b.trail) <= 0) return false;
    bins.push_back(Bin{b.lead.exponents(), b.trail.exponents(), signature(b.lead.exponents())});
  }
  for (std::size_t i = 0; i < bins.size(); ++i)
    for (std::size_t j = i + 1; j < bins.size(); ++j) {
      bool coprime = true;
      for (int v = 0; v < nv && coprime; ++v) coprime = !(bins[i].lead[v] && bins[j].lead[v]);
      if (coprime) continue;
      auto s = engine.spoly(bins[i], bins[j]);
      if (s && engine.reduce(std::move(*s), bins, false)) return false;
    }
  return true;
}

bool is_reduced(const std::vector<Binomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i != j && basis[j].lead.divides(basis[i].lead)) return false;
      if (basis[j].lead.divides(basis[i].trail)) return false;
    }
  return true;
}

bool respects_order(const std::vector<Binomial>& basis, const TermOrder& order) {
  return std::all_of(basis.begin(), basis.end(),
                     [&](const Binomial& b) { return order.compare(b.lead, b.trail) > 0; });
}

bool same_basis(std::vector<Binomial> a, std::vector<Binomial> b) {
  auto key = [](const Binomial& x) { return std::make_pair(x.lead, x.trail); };
  auto less = [&](const Binomial& x, const Binomial& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [&](const Binomial& x, const Binomial& y) { return key(x) == key(y); });
}

bool in_kernel(const ToricPresentation& pres, const Binomial& b) {
  return image_of(pres, b.lead.exponents()) == image_of(pres, b.trail.exponents());
}

std::vector<int> identity_y_order(const ToricPresentation& pres) {
  std::vector<int> order(pres.fiber_count());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> canonical_y_order(const ToricPresentation& pres) {
  if (pres.factors.empty()) return identity_y_order(pres);
  std::vector<std::pair<long long, std::vector<ElementSet>>> keys;
  for (const auto& tuple : pres.factors) {
    long long rank = 0;
    std::vector<ElementSet> masks;
    for (const auto& chain : tuple) {
      rank += chain.rank();
      masks.insert(masks.end(), chain.ideals.begin(), chain.ideals.end());
    }
    keys.emplace_back(rank, std::move(masks));
  }
  auto order = identity_y_order(pres);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  return order;
}

namespace {

bool tuple_leq(const std::vector<Multichain>& a, const std::vector<Multichain>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].leq(b[i])) return false;
  return true;
}

}  // namespace

std::vector<int> random_y_order(const ToricPresentation& pres, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto order = identity_y_order(pres);
  if (pres.factors.empty()) {
    std::shuffle(order.begin(), order.end(), rng);
    return order;
  }
  const int m = pres.fiber_count();
  // Componentwise smaller tuples must come first (they are larger variables).
  std::vector<int> out;
  std::vector<char> used(m, 0);
  while (static_cast<int>(out.size()) < m) {
    std::vector<int> ready;
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      bool minimal = true;
      for (int j = 0; j < m && minimal; ++j)
        if (!used[j] && j != i && tuple_leq(pres.factors[j], pres.factors[i])) minimal = false;
      if (minimal) ready.push_back(i);
    }
    int pick = ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)];
    used[pick] = 1;
    out.push_back(pick);
  }
  return out;
}

std::vector<Binomial> hibi_relation_family(const ToricPresentation& pres) {
  require(!pres.factors.empty(), "Hibi relations need a presentation indexed by multichains");
  std::map<Multichain, int> index;
  for (int i = 0; i < pres.fiber_count(); ++i) {
    require(pres.factors[i].size() == 1, "Hibi relations need s = r");
    index[pres.factors[i][0]] = i;
  }
  const int m = pres.fiber_count();
  std::vector<Binomial> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& a = pres.factors[i][0];
      const auto& b = pres.factors[j][0];
      if (a.leq(b) || b.leq(a)) continue;
      Monomial lead(m), trail(m);
      lead.increment(i);
      lead.increment(j);
      trail.increment(index.at(a.meet(b)));
      trail.increment(index.at(a.join(b)));
      out.push_back(Binomial{lead, trail, false});
    }
  return out;
}

GroebnerBasis hibi_relations(const ToricPresentation& pres, const std::vector<int>& y_order) {
  TermOrder order = TermOrder::revlex(pres, y_order);
  GroebnerBasis out{hibi_relation_family(pres), order.name, true};
  for (const auto& rel : out.binomials) {
    verify(order.compare(rel.lead, rel.trail) > 0, "the lead of a Hibi relation is the incomparable pair");
    verify(in_kernel(pres, rel), "Hibi relations lie in the toric ideal");
  }
  sort_canonically(out.binomials, order);
  verify(is_reduced(out.binomials), "Hibi relations are reduced");
  verify(is_groebner_basis(out.binomials, order), "Hibi relations satisfy the Buchberger criterion");
  verify(same_basis(out.binomials, toric_gb(pres, order).binomials),
         "Hibi relations equal the reduced Groebner basis computed by Buchberger");
  return out;
}

GroebnerBasis hibi_relations(const Poset& poset, int r, std::optional<std::uint64_t> y_order_seed) {
  require(r >= 1, "r must be at least 1");
  auto pres = fiber_presentation(poset, r, r);
  auto order = y_order_seed ? random_y_order(pres, *y_order_seed) : canonical_y_order(pres);
  return hibi_relations(pres, order);
}

std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v, const Ambient& ambient) {
  require(u.degree() == v.degree(), "sort_pair needs monomials of equal degree");
  require(u.nvars() == ambient.size() && v.nvars() == ambient.size(), "monomials do not match the ambient ring");
  auto col = VariableOrder::column_major(ambient);
  std::vector<int> positions;
  for (int var = 0; var < ambient.size(); ++var)
    for (int k = 0; k < u[var] + v[var]; ++k) positions.push_back(col.rank(var));
  std::sort(positions.begin(), positions.end());
  Monomial a(ambient.size()), b(ambient.size());
  for (std::size_t i = 0; i < positions.size(); ++i) (i % 2 ? b : a).increment(col.at(positions[i]));
  return {a, b};
}

SortableResult is_sortable(const std::vector<Monomial>& set, const Ambient& ambient) {
  std::unordered_set<Monomial, MonomialHash> members(set.begin(), set.end());
  for (const auto& u : set)
    for (const auto& v : set) {
      auto [a, b] = sort_pair(u, v, ambient);
      if (!members.count(a) || !members.count(b)) return {false, std::make_pair(u, v)};
    }
  return {true, std::nullopt};
}

namespace {

struct Sorter {
  const ToricPresentation& pres;
  std::unordered_map<Monomial, int, MonomialHash> index;
  // sorted[i][j] = (i', j') with i' <= j', or (-1, -1) if the sorted pair leaves the set.
  std::vector<std::vector<std::pair<int, int>>> sorted;
  long long budget = step_budget();
  long long steps = 0;

  explicit Sorter(const ToricPresentation& p) : pres(p) {
    const int m = pres.fiber_count();
    for (int i = 0; i < m; ++i) index[pres.images[i]] = i;
    sorted.assign(m, std::vector<std::pair<int, int>>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        auto [a, b] = sort_pair(pres.images[i], pres.images[j], pres.ambient);
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end()) sorted[i][j] = {-1, -1};
        else sorted[i][j] = std::minmax(ia->second, ib->second);
      }
  }

  bool is_sorted(int i, int j) const {
    auto [a, b] = std::minmax(i, j);
    return sorted[i][j] == std::make_pair(a, b);
  }
  // Whether y_i y_j is a marked lead.
  bool unsorted(int i, int j) const { return sorted[i][j].first >= 0 && !is_sorted(i, j); }

  // Normal form under the marking: sort pairs until every pair is sorted.
  std::vector<int> normal_form(std::vector<int> ys) {
    std::set<std::vector<int>> seen;
    while (true) {
      std::sort(ys.begin(), ys.end());
      if (!seen.insert(ys).second) throw VerificationError("marked sorting reduction cycles");
      if (++steps > budget) throw BudgetExceeded("marked reduction step budget exhausted");
      bool changed = false;
      for (std::size_t a = 0; a < ys.size() && !changed; ++a)
        for (std::size_t b = a + 1; b < ys.size() && !changed; ++b)
          if (unsorted(ys[a], ys[b])) {
            auto [i, j] = sorted[ys[a]][ys[b]];
            ys[a] = i;
            ys[b] = j;
            changed = true;
          }
      if (!changed) return ys;
    }
  }
};

}  // namespace

GroebnerBasis sorting_gb(const ToricPresentation& pres) {
  require(!pres.with_base, "sorting relations live on the fiber variables");
  auto sortable = is_sortable(pres.images, pres.ambient);
  verify(sortable.sortable, "the generator set is sortable");
  Sorter sorter(pres);
  const int m = pres.fiber_count();
  GroebnerBasis out{{}, "sorting", true};
  std::vector<std::pair<int, int>> leads;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (!sorter.unsorted(i, j)) continue;
      auto [a, b] = sorter.sorted[i][j];
      Monomial lead(m), trail(m);
      lead.increment(i);
      lead.increment(j);
      trail.increment(a);
      trail.increment(b);
      verify(lead.is_squarefree() && lead.degree() == 2, "sorting leads are squarefree quadrics");
      out.binomials.push_back(Binomial{lead, trail, true});
      leads.emplace_back(i, j);
    }
  // S-pairs of marked quadrics sharing a variable.
  for (std::size_t p = 0; p < leads.size(); ++p)
    for (std::size_t q = p + 1; q < leads.size(); ++q) {
      auto [a, b] = leads[p];
      auto [c, d] = leads[q];
      int shared = (a == c || a == d) ? a : (b == c || b == d) ? b : -1;
      if (shared < 0) continue;
      int other_p = shared == a ? b : a;
      int other_q = shared == c ? d : c;
      auto [s1, s2] = sorter.sorted[a][b];
      auto [t1, t2] = sorter.sorted[c][d];
      std::vector<int> left{s1, s2, other_q}, right{t1, t2, other_p};
      verify(sorter.normal_form(left) == sorter.normal_form(right), "every S-pair of the sorting relations reduces to zero");
    }
  for (const auto& b : out.binomials) verify(in_kernel(pres, b), "sorting relations lie in the toric ideal");
  return out;
}

GroebnerBasis sorting_gb(const Poset& poset, int r, int s) { return sorting_gb(fiber_presentation(poset, r, s)); }

std::vector<long long> sorting_weights(const ToricPresentation& pres) {
  auto basis = sorting_gb(pres);
  const int m = pres.fiber_count();
  std::vector<std::vector<int>> diffs;
  for (const auto& b : basis.binomials) {
    std::vector<int> d(m);
    for (int i = 0; i < m; ++i) d[i] = b.lead[i] - b.trail[i];
    diffs.push_back(std::move(d));
  }
  std::vector<long long> w(m, 0);
  auto dot = [&](const std::vector<int>& d) {
    long long s = 0;
    for (int i = 0; i < m; ++i) s += w[i] * d[i];
    return s;
  };
  bool done = false;
  for (int pass = 0; pass < 100000 && !done; ++pass) {
    done = true;
    for (const auto& d : diffs)
      if (dot(d) <= 0) {
        for (int i = 0; i < m; ++i) w[i] += d[i];
        done = false;
      }
  }
  verify(done, "found weights realizing the sorting order");
  // Shift to positive weights; every constraint compares equal degrees.
  long long low = m ? *std::min_element(w.begin(), w.end()) : 0;
  for (auto& v : w) v += 1 - low;
  for (const auto& d : diffs) verify(dot(d) > 0, "weights realize the sorting order");
  return w;
}

RevlexResult revlex_gb(const ToricPresentation& pres, const std::vector<int>& y_order) {
  TermOrder order = TermOrder::revlex(pres, y_order);
  RevlexResult out{toric_gb(pres, order), true, 0};
  for (const auto& b : out.basis.binomials) {
    out.squarefree_initials = out.squarefree_initials && b.lead.is_squarefree();
    out.max_degree = std::max(out.max_degree, b.degree());
  }
  return out;
}

RevlexResult revlex_gb_L(const Poset& poset, int r, int s, std::optional<std::uint64_t> y_order_seed) {
  auto pres = fiber_presentation(poset, r, s);
  return revlex_gb(pres, y_order_seed ? random_y_order(pres, *y_order_seed) : canonical_y_order(pres));
}

ExchangeResult l_exchange_check(const ToricPresentation& pres, int max_degree) {
  require(!pres.with_base, "the exchange property concerns the fiber");
  const int m = pres.fiber_count();
  const int nx = pres.ambient.size();
  Sorter sorter(pres);
  std::unordered_set<Monomial, MonomialHash> members(pres.images.begin(), pres.images.end());
  auto col = VariableOrder::column_major(pres.ambient);

  for (int d = 1; d <= max_degree; ++d) {
    // Standard monomials of degree d: no marked lead divides them.
    std::vector<std::vector<int>> standard;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(cur.size()) == d) {
        standard.push_back(cur);
        return;
      }
      for (int i = start; i < m; ++i) {
        bool ok = std::none_of(cur.begin(), cur.end(), [&](int j) { return sorter.unsorted(i, j); });
        if (!ok) continue;
        cur.push_back(i);
        rec(i);
        cur.pop_back();
      }
    };
    rec(0);
    std::vector<Exps> images;
    for (const auto& ys : standard) {
      Exps e(nx, 0);
      for (int i : ys)
        for (int v = 0; v < nx; ++v) e[v] += pres.images[i][v];
      images.push_back(std::move(e));
    }
    for (std::size_t a = 0; a < standard.size(); ++a)
      for (std::size_t b = 0; b < standard.size(); ++b) {
        if (a == b) continue;
        int q = -1;
        for (int pos = 0; pos < nx; ++pos) {
          int var = col.at(pos);
          if (images[a][var] != images[b][var]) {
            q = pos;
            break;
          }
        }
        if (q < 0 || q == nx - 1) continue;
        const int xq = col.at(q);
        if (images[a][xq] >= images[b][xq]) continue;
        bool found = false;
        for (int i : standard[a]) {
          for (int pos = q + 1; pos < nx && !found; ++pos) {
            int xj = col.at(pos);
            if (!pres.images[i][xj]) continue;
            Monomial w = pres.images[i];
            w.increment(xq);
            w.increment(xj, -1);
            found = members.count(w) > 0;
          }
          if (found) break;
        }
        if (!found) {
          Monomial ya(m), yb(m);
          for (int i : standard[a]) ya.increment(i);
          for (int i : standard[b]) yb.increment(i);
          return {false, ExchangeWitness{ya, yb, xq}};
        }
      }
  }
  return {true, std::nullopt};
}

ExchangeResult l_exchange_check(const Poset& poset, int r, int s) {
  return l_exchange_check(fiber_presentation(poset, r, s));
}

ReesResult rees_gb(const ToricPresentation& fiber) {
  require(!fiber.with_base, "rees_gb takes the fiber presentation");
  ToricPresentation rees = rees_presentation(fiber);
  const int nx = fiber.ambient.size();
  const int m = fiber.fiber_count();
  const int nv = rees.nvars();

  auto sorting = sorting_gb(fiber);
  auto weights = sorting_weights(fiber);
  TermOrder order = TermOrder::bigraded_sharp(rees, weights, identity_y_order(rees));

  ReesResult out{{{}, order.name, true}, 0, 0, true, true};
  auto embed = [&](const Monomial& y) {
    Monomial e(nv);
    for (int i = 0; i < m; ++i) e.increment(rees.y(i), y[i]);
    return e;
  };
  for (const auto& b : sorting.binomials) {
    out.basis.binomials.push_back(Binomial{embed(b.lead), embed(b.trail), true});
    ++out.fiber_part;
  }

  std::unordered_map<Monomial, int, MonomialHash> index;
  for (int i = 0; i < m; ++i) index[fiber.images[i]] = i;
  auto col = VariableOrder::column_major(fiber.ambient);
  // x_a y_k - x_b y_l with x_a > x_b, x_a u_k = x_b u_l; the trail takes the
  // smallest admissible x_b, which is the normal form under lex on x.
  for (int k = 0; k < m; ++k)
    for (int pa = 0; pa < nx; ++pa) {
      int xa = col.at(pa);
      for (int pb = nx - 1; pb > pa; --pb) {
        int xb = col.at(pb);
        if (!fiber.images[k][xb]) continue;
        Monomial w = fiber.images[k];
        w.increment(xa);
        w.increment(xb, -1);
        auto it = index.find(w);
        if (it == index.end()) continue;
        Monomial lead(nv), trail(nv);
        lead.increment(xa);
        lead.increment(rees.y(k));
        trail.increment(xb);
        trail.increment(rees.y(it->second));
        out.basis.binomials.push_back(Binomial{lead, trail, false});
        ++out.linear_part;
        break;
      }
    }
  sort_canonically(out.basis.binomials, order);

  for (const auto& b : out.basis.binomials) {
    verify(in_kernel(rees, b), "Rees relations lie in the toric ideal");
    out.squarefree_quadratic = out.squarefree_quadratic && b.lead.is_squarefree() && b.degree() == 2;
    for (int v = 0; v < nx; ++v) out.x_condition = out.x_condition && b.lead[v] <= 1;
  }
  verify(respects_order(out.basis.binomials, order), "Rees relations are oriented by the bigraded order");
  verify(same_basis(out.basis.binomials, toric_gb(rees, order).binomials),
         "Rees relations equal the reduced Groebner basis computed by Buchberger");
  verify(out.squarefree_quadratic, "the Rees initial ideal is squarefree and quadratic");
  verify(out.x_condition, "the Rees initial ideal satisfies the x-condition");
  return out;
}

ReesResult rees_gb(const Poset& poset, int r, int s) { return rees_gb(fiber_presentation(poset, r, s)); }

int krull_dim(const ToricPresentation& pres) {
  const int nx = pres.ambient.size();
  std::vector<std::vector<long long>> rows;
  for (int v = 0; v < pres.base_count(); ++v) {
    std::vector<long long> row(nx + 1, 0);
    row[v] = 1;
    rows.push_back(std::move(row));
  }
  for (const auto& u : pres.images) {
    std::vector<long long> row(nx + 1, 0);
    for (int v = 0; v < nx; ++v) row[v] = u[v];
    // Homogenizing coordinate: t for Rees, total degree otherwise.
    row[nx] = pres.with_base ? 1 : u.degree();
    rows.push_back(std::move(row));
  }
  return static_cast<int>(rank_rational(std::move(rows)));
}

int minimal_generator_count(const ToricPresentation& pres, const GroebnerBasis& basis) {
  const int nv = pres.nvars();
  std::vector<Exps> var_image;
  for (int v = 0; v < nv; ++v) {
    Exps e(nv, 0);
    e[v] = 1;
    var_image.push_back(image_of(pres, e));
  }
  std::set<Exps> degrees;
  for (const auto& b : basis.binomials) degrees.insert(image_of(pres, b.lead.exponents()));

  int count = 0;
  for (const auto& target : degrees) {
    // Every monomial with this image, then components under "shares a variable".
    std::vector<Exps> fiber;
    Exps cur(nv, 0), rest = target;
    std::function<void(int)> rec = [&](int v) {
      if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
        fiber.push_back(cur);
        return;
      }
      if (v == nv) return;
      int most = INT32_MAX;
      bool nonzero = false;
      for (std::size_t c = 0; c < rest.size(); ++c)
        if (var_image[v][c]) {
          most = std::min(most, rest[c] / var_image[v][c]);
          nonzero = true;
        }
      if (!nonzero) most = 0;
      for (int k = most; k >= 0; --k) {
        cur[v] = k;
        for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= k * var_image[v][c];
        rec(v + 1);
        for (std::size_t c = 0; c < rest.size(); ++c) rest[c] += k * var_image[v][c];
      }
      cur[v] = 0;
    };
    rec(0);
    std::vector<int> parent(fiber.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int components = static_cast<int>(fiber.size());
    for (std::size_t i = 0; i < fiber.size(); ++i)
      for (std::size_t j = i + 1; j < fiber.size(); ++j) {
        bool share = false;
        for (int v = 0; v < nv && !share; ++v) share = fiber[i][v] && fiber[j][v];
        if (share && find(i) != find(j)) {
          parent[find(i)] = find(j);
          --components;
        }
      }
    count += components - 1;
  }
  return count;
}

}  // namespace hibi
