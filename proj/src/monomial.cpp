#include "hibi/monomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "hibi/error.hpp"

namespace hibi {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    require(e >= 0, "negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(int nvars, int var) {
  Monomial m(nvars);
  m.increment(var);
  return m;
}

Monomial Monomial::from_mask(int nvars, VarMask mask) {
  Monomial m(nvars);
  for (int v = 0; v < nvars; ++v)
    if ((mask >> v) & 1) m.increment(v);
  return m;
}

VarMask Monomial::support() const {
  VarMask m = 0;
  for (int v = 0; v < nvars(); ++v)
    if (exps_[v]) m |= VarMask{1} << v;
  return m;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

void Monomial::increment(int var, int by) {
  exps_[var] += by;
  degree_ += by;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int v = 0; v < nvars(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (int v = 0; v < nvars(); ++v) out.exps_[v] += other.exps_[v];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out = *this;
  for (int v = 0; v < nvars(); ++v) {
    out.exps_[v] -= other.exps_[v];
    verify(out.exps_[v] >= 0, "monomial division is exact");
  }
  out.degree_ -= other.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out(nvars());
  for (int v = 0; v < nvars(); ++v) out.increment(v, std::min(exps_[v], other.exps_[v]));
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(nvars());
  for (int v = 0; v < nvars(); ++v) out.increment(v, std::max(exps_[v], other.exps_[v]));
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

VariableOrder::VariableOrder(std::vector<int> decreasing) : sequence_(std::move(decreasing)) {
  rank_.assign(sequence_.size(), -1);
  for (int pos = 0; pos < size(); ++pos) {
    int v = sequence_[pos];
    require(v >= 0 && v < size() && rank_[v] < 0, "variable order must be a permutation");
    rank_[v] = pos;
  }
}

VariableOrder VariableOrder::row_major(const Ambient& ambient) {
  std::vector<int> seq(ambient.size());
  std::iota(seq.begin(), seq.end(), 0);
  return VariableOrder(std::move(seq));
}

VariableOrder VariableOrder::column_major(const Ambient& ambient) {
  std::vector<int> seq;
  for (int j = 0; j < ambient.elems; ++j)
    for (int i = 0; i < ambient.levels; ++i) seq.push_back(ambient.index(i, j));
  return VariableOrder(std::move(seq));
}

VariableOrder VariableOrder::custom(std::vector<int> decreasing) { return VariableOrder(std::move(decreasing)); }

int VariableOrder::lex_compare(const Monomial& u, const Monomial& v) const {
  for (int var : sequence_)
    if (u[var] != v[var]) return u[var] > v[var] ? 1 : -1;
  return 0;
}

MonomialIdeal::MonomialIdeal(Ambient ambient, std::vector<Monomial> generators)
    : ambient_(ambient), gens_(std::move(generators)) {
  for (const auto& g : gens_) require(g.nvars() == ambient_.size(), "generator lives in the wrong ring");
  auto order = VariableOrder::row_major(ambient_);
  std::sort(gens_.begin(), gens_.end(),
            [&](const Monomial& a, const Monomial& b) { return order.lex_compare(a, b) > 0; });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

int MonomialIdeal::equigenerated_degree() const {
  if (gens_.empty()) return -1;
  int d = gens_.front().degree();
  for (const auto& g : gens_)
    if (g.degree() != d) return -1;
  return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal minimalize(const Ambient& ambient, std::vector<Monomial> gens) {
  // Low degree first: a generator can only be divided by earlier ones.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  std::vector<VarMask> supports;
  for (auto& g : gens) {
    VarMask s = g.support();
    bool redundant = false;
    for (std::size_t i = 0; i < kept.size() && !redundant; ++i)
      redundant = (supports[i] & ~s) == 0 && kept[i].divides(g);
    if (!redundant) {
      kept.push_back(std::move(g));
      supports.push_back(s);
    }
  }
  return MonomialIdeal(ambient, std::move(kept));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  require(k >= 1, "power exponent must be positive");
  MonomialIdeal acc = ideal;
  for (int step = 1; step < k; ++step) {
    std::vector<Monomial> products;
    for (const auto& a : acc.generators())
      for (const auto& b : ideal.generators()) products.push_back(a * b);
    acc = minimalize(ideal.ambient(), std::move(products));
  }
  return acc;
}

namespace {

void require_squarefree(const MonomialIdeal& ideal) {
  require(ideal.is_squarefree(), "ideal must be squarefree");
  require(ideal.ambient().size() <= 64, "squarefree routines support at most 64 variables");
}

}  // namespace

MonomialIdeal squarefree_power(const MonomialIdeal& ideal, int k) {
  require_squarefree(ideal);
  require(k >= 1, "power exponent must be positive");
  const auto& gens = ideal.generators();
  const int nv = ideal.ambient().size();
  std::vector<VarMask> supports;
  for (const auto& g : gens) supports.push_back(g.support());
  // A product of k generators is squarefree iff they are distinct with
  // pairwise disjoint supports.
  std::unordered_set<VarMask> found;
  std::function<void(std::size_t, int, VarMask)> rec = [&](std::size_t start, int left, VarMask used) {
    if (left == 0) {
      found.insert(used);
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i)
      if ((supports[i] & used) == 0) rec(i + 1, left - 1, used | supports[i]);
  };
  rec(0, k, 0);
  std::vector<Monomial> products;
  for (VarMask m : found) products.push_back(Monomial::from_mask(nv, m));
  return minimalize(ideal.ambient(), std::move(products));
}

std::vector<VarMask> minimal_primes(const MonomialIdeal& ideal) {
  require_squarefree(ideal);
  std::vector<VarMask> edges;
  for (const auto& g : ideal.generators()) edges.push_back(g.support());
  if (edges.empty()) return {VarMask{0}};
  for (VarMask e : edges) require(e != 0, "the unit ideal has no minimal primes");
  const int nv = ideal.ambient().size();

  // MMCS (Murakami–Uno): grow a cover one vertex at a time, branching on the
  // vertices of an uncovered edge with fewest candidates; every chosen vertex
  // must keep a private (critical) edge.
  std::vector<VarMask> out;
  std::vector<int> uncov(edges.size());
  std::iota(uncov.begin(), uncov.end(), 0);

  auto all_critical = [&](VarMask s) {
    for (int v = 0; v < nv; ++v) {
      if (!((s >> v) & 1)) continue;
      bool critical = false;
      for (VarMask e : edges)
        if ((e & s) == (VarMask{1} << v)) {
          critical = true;
          break;
        }
      if (!critical) return false;
    }
    return true;
  };

  std::function<void(VarMask, VarMask, const std::vector<int>&)> rec =
      [&](VarMask s, VarMask cand, const std::vector<int>& open) {
        if (open.empty()) {
          out.push_back(s);
          return;
        }
        int best = open.front();
        int best_count = 65;
        for (int e : open) {
          int c = __builtin_popcountll(edges[e] & cand);
          if (c < best_count) {
            best = e;
            best_count = c;
          }
        }
        VarMask choice = edges[best] & cand;
        cand &= ~choice;
        for (int v = 0; v < nv; ++v) {
          VarMask vb = VarMask{1} << v;
          if (!(choice & vb)) continue;
          VarMask next = s | vb;
          if (all_critical(next)) {
            std::vector<int> rest;
            for (int e : open)
              if (!(edges[e] & vb)) rest.push_back(e);
            rec(next, cand, rest);
          }
          cand |= vb;
        }
      };
  rec(0, (nv == 64 ? ~VarMask{0} : (VarMask{1} << nv) - 1), uncov);
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  const int nv = ideal.ambient().size();
  std::vector<Monomial> gens;
  for (VarMask p : minimal_primes(ideal)) gens.push_back(Monomial::from_mask(nv, p));
  return minimalize(ideal.ambient(), std::move(gens));
}

PolymatroidalResult is_weakly_polymatroidal(const MonomialIdeal& ideal, const VariableOrder& order) {
  const auto& gens = ideal.generators();
  if (gens.size() <= 1) return {};
  require(ideal.equigenerated_degree() >= 0, "weak polymatroidality needs generators of one degree");
  std::unordered_set<Monomial, MonomialHash> members(gens.begin(), gens.end());
  const int nv = order.size();
  for (const auto& u : gens) {
    for (const auto& v : gens) {
      if (u == v) continue;
      int pos = 0;
      while (u[order.at(pos)] == v[order.at(pos)]) ++pos;
      int t = order.at(pos);
      if (u[t] < v[t]) continue;
      // Equal degrees force some smaller variable to divide v; look for one
      // whose exchange lands in G(I).
      bool exchanged = false;
      for (int q = pos + 1; q < nv && !exchanged; ++q) {
        int l = order.at(q);
        if (v[l] == 0) continue;
        Monomial w = v;
        w.increment(t);
        w.increment(l, -1);
        exchanged = members.count(w) > 0;
      }
      if (!exchanged) return {false, PolymatroidalWitness{u, v, t}};
    }
  }
  return {};
}

std::vector<Monomial> decreasing_lex(std::vector<Monomial> gens, const VariableOrder& order) {
  std::sort(gens.begin(), gens.end(),
            [&](const Monomial& a, const Monomial& b) { return order.lex_compare(a, b) > 0; });
  return gens;
}

LinearQuotients linear_quotients(const MonomialIdeal& ideal, const std::vector<Monomial>& gen_order) {
  {
    auto a = gen_order, b = ideal.generators();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    require(a == b, "generator order must be a permutation of the minimal generators");
  }
  LinearQuotients out;
  out.order = gen_order;
  for (std::size_t i = 0; i < gen_order.size(); ++i) {
    const Monomial& ui = gen_order[i];
    // Colon (u_1..u_{i-1}) : u_i is generated by u_j / gcd(u_j, u_i). It is
    // linear iff every quotient is divisible by a degree-one quotient.
    VarMask linear = 0;
    std::vector<Monomial> quotients;
    for (std::size_t j = 0; j < i; ++j) {
      Monomial q = gen_order[j] / gen_order[j].gcd(ui);
      if (q.degree() == 1) linear |= q.support();
      else quotients.push_back(std::move(q));
    }
    bool ok = std::all_of(quotients.begin(), quotients.end(),
                          [&](const Monomial& q) { return (q.support() & linear) != 0; });
    if (!ok && out.ok) {
      out.ok = false;
      out.failed_at = static_cast<int>(i);
    }
    out.sets.push_back(linear);
  }
  return out;
}

LinearQuotients linear_quotients(const MonomialIdeal& ideal, const VariableOrder& order) {
  return linear_quotients(ideal, decreasing_lex(ideal.generators(), order));
}

std::string variable_name(int var, const Ambient& ambient) {
  return "x[" + std::to_string(ambient.level_of(var) + 1) + "," + std::to_string(ambient.elem_of(var) + 1) + "]";
}

std::string to_string(const Monomial& m, const Ambient& ambient) {
  if (m.is_one()) return "1";
  std::string out;
  for (int v = 0; v < m.nvars(); ++v) {
    if (!m[v]) continue;
    if (!out.empty()) out += "*";
    out += variable_name(v, ambient);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

}  // namespace hibi
