#include "hibi/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hibi/error.hpp"

namespace hibi {

Poset::Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& relations) {
  const int n = static_cast<int>(names.size());
  require(n > 0, "poset must have at least one element");
  require(n <= kMaxElements, "poset has more than 64 elements");

  // below[b] collects a with a <= b, in input indices.
  std::vector<ElementSet> below(n);
  for (int i = 0; i < n; ++i) below[i] = bit(i);
  for (auto [a, b] : relations) {
    require(a >= 0 && a < n && b >= 0 && b < n, "relation refers to an unknown element");
    if (a == b) throw InputError("not a poset: reflexive cover " + names[a] + " < " + names[a]);
    below[b] |= bit(a);
  }
  // Transitive closure (Floyd–Warshall over bitsets).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((below[i] >> k) & 1) below[i] |= below[k];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (((below[i] >> j) & 1) && ((below[j] >> i) & 1))
        throw InputError("not a poset: cycle through " + names[i] + " and " + names[j]);

  // Stable topological sort: repeatedly place the first unplaced element
  // whose strict predecessors are all placed.
  std::vector<int> order;
  ElementSet placed = 0;
  while (static_cast<int>(order.size()) < n) {
    for (int i = 0; i < n; ++i) {
      if ((placed >> i) & 1) continue;
      if (is_subset(below[i] & ~bit(i), placed)) {
        order.push_back(i);
        placed |= bit(i);
        break;
      }
    }
  }
  std::vector<int> canonical(n);
  for (int c = 0; c < n; ++c) canonical[order[c]] = c;

  names_.resize(n);
  input_index_ = order;
  down_.assign(n, 0);
  up_.assign(n, 0);
  for (int c = 0; c < n; ++c) {
    names_[c] = std::move(names[order[c]]);
    ElementSet src = below[order[c]];
    for (int i = 0; i < n; ++i)
      if ((src >> i) & 1) down_[c] |= bit(canonical[i]);
  }
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      if ((down_[d] >> c) & 1) up_[c] |= bit(d);
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int b = 0; b < size(); ++b) {
    ElementSet strict = down_[b] & ~bit(b);
    for (int a = 0; a < size(); ++a) {
      if (!((strict >> a) & 1)) continue;
      // a < b is a cover iff no c with a < c < b.
      bool cover = true;
      for (int c = 0; c < size() && cover; ++c)
        if (c != a && ((strict >> c) & 1) && less(a, c)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

bool Poset::is_ideal(ElementSet s) const {
  if (!is_subset(s, all())) return false;
  for (int i = 0; i < size(); ++i)
    if (((s >> i) & 1) && !is_subset(down_[i], s)) return false;
  return true;
}

ElementSet Poset::minimal_elements(ElementSet s) const {
  ElementSet out = 0;
  for (int i = 0; i < size(); ++i)
    if (((s >> i) & 1) && (down_[i] & s) == bit(i)) out |= bit(i);
  return out;
}

int Poset::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

bool Multichain::leq(const Multichain& other) const {
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (!is_subset(ideals[i], other.ideals[i])) return false;
  return true;
}

Multichain Multichain::meet(const Multichain& other) const {
  Multichain out{ideals};
  for (std::size_t i = 0; i < ideals.size(); ++i) out.ideals[i] &= other.ideals[i];
  return out;
}

Multichain Multichain::join(const Multichain& other) const {
  Multichain out{ideals};
  for (std::size_t i = 0; i < ideals.size(); ++i) out.ideals[i] |= other.ideals[i];
  return out;
}

int Multichain::rank() const {
  int total = 0;
  for (ElementSet s : ideals) total += popcount(s);
  return total;
}

ElementSet checked_ideal(const Poset& poset, ElementSet members) {
  require(poset.is_ideal(members), "subset is not downward closed");
  return members;
}

void check_multichain(const Poset& poset, const Multichain& chain) {
  require(chain.length() >= 1, "multichain must have length at least 1");
  for (int i = 0; i < chain.length(); ++i) {
    checked_ideal(poset, chain[i]);
    if (i > 0) require(is_subset(chain[i - 1], chain[i]), "multichain is not nested");
  }
  require(chain.ideals.back() == poset.all(), "last ideal of a multichain must be P");
}

bool ideal_order_less(ElementSet a, ElementSet b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  if (a == b) return false;
  // Lowest differing element decides: the set containing it comes first.
  ElementSet diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

namespace {

Poset parse_json(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed poset JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    throw InputError("poset JSON must be an object with an \"elements\" array");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < doc["elements"].size(); ++i) {
    const auto& e = doc["elements"][i];
    if (!e.is_string()) throw InputError("elements[" + std::to_string(i) + "] is not a string");
    auto name = e.get<std::string>();
    if (index.count(name)) throw InputError("duplicate element '" + name + "' at elements[" + std::to_string(i) + "]");
    index[name] = static_cast<int>(names.size());
    names.push_back(name);
  }
  std::vector<std::pair<int, int>> relations;
  if (doc.contains("covers")) {
    const auto& covers = doc["covers"];
    if (!covers.is_array()) throw InputError("\"covers\" must be an array");
    for (std::size_t i = 0; i < covers.size(); ++i) {
      const auto& c = covers[i];
      std::string where = "covers[" + std::to_string(i) + "]";
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        throw InputError(where + " must be a pair of element names");
      auto a = c[0].get<std::string>(), b = c[1].get<std::string>();
      if (!index.count(a)) throw InputError("unknown element '" + a + "' in " + where);
      if (!index.count(b)) throw InputError("unknown element '" + b + "' in " + where);
      relations.emplace_back(index[a], index[b]);
    }
  }
  return Poset(std::move(names), relations);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Line DSL: `a < b` (chains `a < b < c` allowed), or a bare name declaring an
// element. `#` starts a comment.
Poset parse_dsl(std::string_view document) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> relations;
  auto intern = [&](const std::string& name, int line) {
    if (name.empty()) throw InputError("line " + std::to_string(line) + ": empty element name");
    for (char ch : name)
      if (ch == ' ' || ch == '\t')
        throw InputError("line " + std::to_string(line) + ": element name '" + name + "' contains whitespace");
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    index[name] = static_cast<int>(names.size());
    names.push_back(name);
    return static_cast<int>(names.size()) - 1;
  };
  std::istringstream in{std::string(document)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string text = trim(raw);
    if (text.empty()) continue;
    std::vector<int> parts;
    std::size_t start = 0;
    while (true) {
      auto lt = text.find('<', start);
      parts.push_back(intern(trim(std::string_view(text).substr(start, lt - start)), line));
      if (lt == std::string::npos) break;
      start = lt + 1;
    }
    for (std::size_t i = 1; i < parts.size(); ++i) relations.emplace_back(parts[i - 1], parts[i]);
  }
  if (names.empty()) throw InputError("poset document declares no elements");
  return Poset(std::move(names), relations);
}

}  // namespace

Poset parse_poset(std::string_view document) {
  auto first = document.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("empty poset document");
  if (document[first] == '{') return parse_json(document);
  return parse_dsl(document);
}

Poset chain_poset(int m) {
  require(m >= 1, "chain length must be positive");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < m; ++i) {
    names.push_back(std::to_string(i + 1));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return Poset(std::move(names), rel);
}

Poset antichain_poset(int m) {
  require(m >= 1, "antichain size must be positive");
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('a' + i % 26)) + (i >= 26 ? std::to_string(i / 26) : ""));
  return Poset(std::move(names), {});
}

Poset direct_product(const Poset& p, const Poset& q) {
  const int n = p.size(), m = q.size();
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) names.push_back("(" + p.name(i) + "," + q.name(j) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < m; ++j2)
          if ((i != i2 || j != j2) && p.leq(i, i2) && q.leq(j, j2)) rel.emplace_back(i * m + j, i2 * m + j2);
  return Poset(std::move(names), rel);
}

std::vector<ElementSet> poset_ideals(const Poset& poset) {
  std::vector<ElementSet> out;
  const int n = poset.size();
  // Elements are in a linear extension, so deciding them in index order
  // only ever needs predecessors that are already decided.
  std::function<void(int, ElementSet)> rec = [&](int i, ElementSet cur) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    rec(i + 1, cur);
    if (is_subset(poset.down(i) & ~bit(i), cur)) rec(i + 1, cur | bit(i));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), ideal_order_less);
  return out;
}

std::vector<Multichain> multichain_ideals(const Poset& poset, int r) {
  require(r >= 1, "r must be at least 1");
  const auto ideals = poset_ideals(poset);
  std::vector<Multichain> out;
  Multichain cur{std::vector<ElementSet>(r, poset.all())};
  std::function<void(int, ElementSet)> rec = [&](int level, ElementSet lower) {
    if (level == r - 1) {
      out.push_back(cur);
      return;
    }
    for (ElementSet s : ideals) {
      if (!is_subset(lower, s)) continue;
      cur.ideals[level] = s;
      rec(level + 1, s);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<ElementMultichain> element_multichains(const Poset& poset, int r) {
  require(r >= 1, "r must be at least 1");
  std::vector<ElementMultichain> out;
  ElementMultichain cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int p = 0; p < poset.size(); ++p) {
      if (!cur.empty() && !poset.leq(cur.back(), p)) continue;
      cur.push_back(p);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

int width(const Poset& poset) {
  const int n = poset.size();
  int best = 0;
  // Branch over elements in order; `allowed` holds candidates incomparable to
  // everything chosen so far. Prune when even taking all of them can't win.
  std::function<void(int, ElementSet, int)> rec = [&](int i, ElementSet allowed, int size) {
    best = std::max(best, size);
    if (size + popcount(allowed >> i) <= best) return;
    for (int j = i; j < n; ++j) {
      if (!((allowed >> j) & 1)) continue;
      rec(j + 1, allowed & ~(poset.down(j) | poset.up(j)), size + 1);
    }
  };
  rec(0, poset.all(), 0);
  return best;
}

bool is_pure(const Poset& poset) {
  const int n = poset.size();
  std::vector<std::vector<int>> upper(n);
  for (auto [a, b] : poset.covers()) upper[a].push_back(b);
  int length = -1;
  bool pure = true;
  std::function<void(int, int)> rec = [&](int p, int depth) {
    if (!pure) return;
    if (upper[p].empty()) {
      if (length < 0) length = depth;
      else if (length != depth) pure = false;
      return;
    }
    for (int q : upper[p]) rec(q, depth + 1);
  };
  ElementSet minimal = poset.minimal_elements(poset.all());
  for (int p = 0; p < n; ++p)
    if ((minimal >> p) & 1) rec(p, 1);
  return pure;
}

bool is_antichain(const Poset& poset) {
  for (int p = 0; p < poset.size(); ++p)
    if (poset.down(p) != bit(p)) return false;
  return true;
}

Multichain principal_multichain(const Poset& poset, int r, int p, int k) {
  require(r >= 2 && k >= 1 && k <= r - 1, "principal multichain needs r >= 2 and 1 <= k <= r-1");
  Multichain m{std::vector<ElementSet>(r, 0)};
  m.ideals[r - 1] = poset.all();
  for (int i = r - 1 - k; i < r - 1; ++i) m.ideals[i] = poset.down(p);
  return m;
}

JoinIrreducibles join_irreducibles_of_multichain_lattice(const Poset& poset, int r) {
  require(r >= 2, "join irreducibles need r >= 2");
  const auto lattice = multichain_ideals(poset, r);
  std::vector<Multichain> found;
  for (const auto& x : lattice) {
    // x is join irreducible iff it is not the join of the elements strictly
    // below it (the empty join being the bottom element).
    bool any = false;
    Multichain acc{std::vector<ElementSet>(r, 0)};
    acc.ideals[r - 1] = poset.all();
    for (const auto& y : lattice) {
      if (y == x || !y.leq(x)) continue;
      any = true;
      acc = acc.join(y);
    }
    if (any && acc != x) found.push_back(x);
  }

  JoinIrreducibles out{Poset({"_"}, {}), {}, {}};
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rel;
  for (const auto& chain : found) {
    // Recover (p, k): the first nonempty level holds <p>, repeated k times.
    int first = 0;
    while (chain[first] == 0) ++first;
    ElementSet principal = chain[first];
    int k = r - 1 - first;
    int top = -1;
    for (int p = 0; p < poset.size(); ++p)
      if (poset.down(p) == principal) top = p;
    verify(top >= 0 && principal_multichain(poset, r, top, k) == chain,
           "join irreducible multichain has the form (<p>, k)");
    out.labels.emplace_back(top, k);
    names.push_back("(" + poset.name(top) + "," + std::to_string(k) + ")");
  }
  for (std::size_t a = 0; a < found.size(); ++a)
    for (std::size_t b = 0; b < found.size(); ++b)
      if (a != b && found[a].leq(found[b])) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
  out.poset = Poset(names, rel);
  // Align chains and labels with the relabeled element order.
  std::vector<Multichain> chains;
  std::vector<std::pair<int, int>> labels;
  for (int c = 0; c < out.poset.size(); ++c) {
    chains.push_back(found[out.poset.input_index(c)]);
    labels.push_back(out.labels[out.poset.input_index(c)]);
  }
  out.chains = std::move(chains);
  out.labels = std::move(labels);
  return out;
}

namespace {

struct Signature {
  int below, above;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const Poset& p) {
  std::vector<Signature> s;
  for (int i = 0; i < p.size(); ++i) s.push_back({popcount(p.down(i)), popcount(p.up(i))});
  return s;
}

}  // namespace

bool is_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  auto sa = signatures(a), sb = signatures(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<int> image(n, -1);
  ElementSet used = 0;
  std::function<bool(int)> rec = [&](int i) {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (((used >> j) & 1) || sa[i] != sb[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        ok = a.leq(k, i) == b.leq(image[k], j) && a.leq(i, k) == b.leq(j, image[k]);
      if (!ok) continue;
      image[i] = j;
      used |= bit(j);
      if (rec(i + 1)) return true;
      used &= ~bit(j);
    }
    return false;
  };
  return rec(0);
}

namespace {

// Canonical code: minimum over signature-respecting relabelings of the
// strict-order adjacency bits.
std::vector<bool> canonical_code(const std::vector<ElementSet>& down, int n) {
  std::vector<Signature> sig(n);
  for (int i = 0; i < n; ++i) {
    int above = 0;
    for (int j = 0; j < n; ++j) above += (down[j] >> i) & 1;
    sig[i] = {popcount(down[i]), above};
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) { return sig[x] < sig[y]; });
  std::vector<bool> best;
  // Enumerate permutations within equal-signature blocks.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && sig[perm[j]] == sig[perm[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::vector<bool> code;
      code.reserve(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) code.push_back((down[perm[j]] >> perm[i]) & 1);
      if (best.empty() || code < best) best = code;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  rec(0);
  return best;
}

}  // namespace

std::vector<Poset> all_posets(int n) {
  require(n >= 1 && n <= 7, "poset enumeration supports 1 <= n <= 7");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::map<std::vector<bool>, std::vector<std::pair<int, int>>> seen;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<ElementSet> down(n);
    for (int i = 0; i < n; ++i) down[i] = bit(i);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1) down[pairs[e].second] |= bit(pairs[e].first);
    bool closed = true;
    for (int j = 0; j < n && closed; ++j)
      for (int i = 0; i < n && closed; ++i)
        if (((down[j] >> i) & 1) && !is_subset(down[i], down[j])) closed = false;
    if (!closed) continue;
    auto code = canonical_code(down, n);
    if (seen.count(code)) continue;
    std::vector<std::pair<int, int>> rel;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1) rel.push_back(pairs[e]);
    seen.emplace(std::move(code), std::move(rel));
  }
  std::vector<std::vector<std::pair<int, int>>> relations;
  for (auto& [code, rel] : seen) relations.push_back(rel);
  std::stable_sort(relations.begin(), relations.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::vector<Poset> out;
  for (const auto& rel : relations) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i + 1));
    out.emplace_back(std::move(names), rel);
  }
  return out;
}

}  // namespace hibi
