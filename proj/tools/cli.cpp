#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>

#include "hibi/error.hpp"
#include "hibi/hibi_ideals.hpp"
#include "hibi/invariants.hpp"
#include "hibi/oracle.hpp"
#include "hibi/toric.hpp"

namespace hibi::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string verb;
  std::string poset_file;
  bool point = false;
  int r = 2;
  std::optional<int> s;
  std::string family;
  std::string order;
  std::string format = "json";
  std::string which = "I";
  bool verify = false;
  int max_n = 3;
  int max_r = 3;
  std::optional<std::uint64_t> seed;
};

Poset load_poset(const Options& opt) {
  require(opt.point != !opt.poset_file.empty(), "give exactly one of --poset FILE or --point");
  if (opt.point) return Poset({"p"}, {});
  std::ifstream in(opt.poset_file);
  require(in.good(), "cannot read poset file '" + opt.poset_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_poset(buf.str());
  } catch (const InputError& e) {
    throw InputError(opt.poset_file + ": " + e.what());
  }
}

int s_of(const Options& opt) {
  int s = opt.s.value_or(opt.r);
  require(opt.r >= 1, "--r must be at least 1");
  require(s >= 1 && s <= opt.r, "--s must satisfy 1 <= s <= r");
  return s;
}

Json names_of(const Poset& poset, ElementSet set) {
  Json out = Json::array();
  for (int p = 0; p < poset.size(); ++p)
    if ((set >> p) & 1) out.push_back(poset.name(p));
  return out;
}

Json chain_json(const Poset& poset, const Multichain& chain) {
  Json out = Json::array();
  for (ElementSet ideal : chain.ideals) out.push_back(names_of(poset, ideal));
  return out;
}

Json poset_json(const Poset& poset) {
  Json covers = Json::array();
  for (auto [a, b] : poset.covers()) covers.push_back({poset.name(a), poset.name(b)});
  return Json{{"elements", poset.names()}, {"covers", covers}};
}

std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : decreasing_lex(ideal.generators(), VariableOrder::row_major(ideal.ambient())))
    out.push_back(to_string(g, ideal.ambient()));
  return out;
}

void print_lines(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << l << "\n";
}

int cmd_ideal(const Options& opt, std::ostream& out) {
  Poset poset = load_poset(opt);
  int s = s_of(opt);
  require(opt.which == "I" || opt.which == "H", "--ideal must be I or H");
  MonomialIdeal ideal = opt.which == "I" ? multichain_ideal_I(poset, opt.r, s) : generalized_hibi_H(poset, opt.r, s).ideal;
  auto gens = generator_strings(ideal);
  if (opt.format == "text") {
    print_lines(out, gens);
    return 0;
  }
  out << Json{{"ideal", opt.which}, {"r", opt.r}, {"s", s}, {"count", gens.size()}, {"generators", gens}}.dump(2) << "\n";
  return 0;
}

int cmd_dual(const Options& opt, std::ostream& out) {
  Poset poset = load_poset(opt);
  int s = s_of(opt);
  MonomialIdeal ideal = opt.which == "I" ? multichain_ideal_I(poset, opt.r, s) : generalized_hibi_H(poset, opt.r, s).ideal;
  MonomialIdeal dual = alexander_dual(ideal);
  if (opt.verify)
    verify(dual == oracle::definitional_dual(ideal), "the Alexander dual agrees with the definition");
  auto gens = generator_strings(dual);
  if (opt.format == "text") {
    print_lines(out, gens);
    return 0;
  }
  out << Json{{"ideal", opt.which}, {"r", opt.r}, {"s", s}, {"count", gens.size()}, {"dual", gens}}.dump(2) << "\n";
  return 0;
}

void render_betti_text(std::ostream& out, const BettiTable& table, const std::vector<long long>& totals) {
  int top = 0;
  for (const auto& [key, value] : table)
    if (value) top = std::max(top, key.second - key.first);
  const int w = 6;
  out << std::setw(8) << "";
  for (std::size_t i = 0; i < totals.size(); ++i) out << std::setw(w) << i;
  out << "\n" << std::setw(8) << "total:";
  for (long long t : totals) out << std::setw(w) << t;
  out << "\n";
  for (int row = 0; row <= top; ++row) {
    out << std::setw(7) << row << ":";
    for (std::size_t i = 0; i < totals.size(); ++i) {
      auto it = table.find({static_cast<int>(i), static_cast<int>(i) + row});
      if (it != table.end() && it->second) out << std::setw(w) << it->second;
      else out << std::setw(w) << ".";
    }
    out << "\n";
  }
}

int cmd_betti(const Options& opt, std::ostream& out) {
  Poset poset = load_poset(opt);
  require(!opt.s || *opt.s == opt.r, "betti is computed for H_r(P); omit --s");
  require(opt.r >= 1, "--r must be at least 1");
  BettiTable table = betti_from_sets(poset, opt.r);
  auto totals = betti_totals(table);
  if (opt.verify) {
    require(opt.r * poset.size() <= 12, "--verify needs r * n <= 12");
    auto hochster = oracle::hochster_betti(hibi_ideal_H(poset, opt.r));
    BettiTable nonzero;
    for (const auto& [key, value] : table)
      if (value) nonzero[key] = value;
    verify(nonzero == BettiTable(hochster.graded.begin(), hochster.graded.end()),
           "Betti numbers from set sizes agree with Hochster's formula");
  }
  if (opt.format == "text") {
    render_betti_text(out, table, totals);
    return 0;
  }
  Json entries = Json::array();
  for (const auto& [key, value] : table)
    if (value) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", value}});
  out << Json{{"r", opt.r}, {"totals", totals}, {"table", entries}, {"verified", opt.verify}}.dump(2) << "\n";
  return 0;
}

int cmd_resolution(const Options& opt, std::ostream& out) {
  Poset poset = load_poset(opt);
  require(!opt.s || *opt.s == opt.r, "the resolution is built for H_r(P); omit --s");
  require(opt.r >= 1, "--r must be at least 1");
  ResolutionComplex complex = resolution_of_H(poset, opt.r);
  const Ambient& amb = complex.ambient;
  if (opt.format == "text") {
    auto ranks = complex.ranks();
    out << "ranks:";
    for (long long k : ranks) out << " " << k;
    out << "\n";
    for (std::size_t i = 1; i < complex.bases.size(); ++i) {
      out << "F_" << i << ":\n";
      for (std::size_t b = 0; b < complex.bases[i].size(); ++b) {
        const auto& sym = complex.bases[i][b];
        out << "  f" << b << "  u=" << to_string(hibi_generator(poset, complex.chains[sym.gen]), amb) << "  sigma={";
        bool first = true;
        for (int v = 0; v < amb.size(); ++v)
          if ((sym.sigma >> v) & 1) {
            out << (first ? "" : ",") << variable_name(v, amb);
            first = false;
          }
        out << "}\n";
      }
    }
    return 0;
  }
  Json degrees = Json::array();
  for (std::size_t i = 0; i < complex.bases.size(); ++i) {
    Json basis = Json::array();
    for (const auto& sym : complex.bases[i]) {
      if (i == 0) {
        basis.push_back({{"generator", nullptr}, {"sigma", Json::array()}});
        continue;
      }
      Json sigma = Json::array();
      for (int v = 0; v < amb.size(); ++v)
        if ((sym.sigma >> v) & 1) sigma.push_back(variable_name(v, amb));
      basis.push_back({{"generator", chain_json(poset, complex.chains[sym.gen])}, {"sigma", sigma}});
    }
    Json differential = Json::array();
    if (i >= 1)
      for (std::size_t from = 0; from < complex.differential[i].size(); ++from)
        for (const auto& t : complex.differential[i][from])
          differential.push_back({{"from", from},
                                  {"to", t.target},
                                  {"coeff", (t.sign < 0 ? "-" : "") + to_string(t.coeff, amb)}});
    degrees.push_back({{"degree", i}, {"basis", basis}, {"differential", differential}});
  }
  out << Json{{"r", opt.r}, {"ranks", complex.ranks()}, {"degrees", degrees}}.dump(2) << "\n";
  return 0;
}

std::string resolve_family(const Options& opt) {
  std::string from_order;
  if (opt.order == "revlex") from_order = "revlex";
  else if (opt.order == "sorting") from_order = "sorting";
  else if (opt.order == "bigraded-sharp") from_order = "rees";
  else require(opt.order.empty(), "--order must be revlex, sorting or bigraded-sharp");
  std::string family = opt.family.empty() ? from_order : opt.family;
  require(!family.empty(), "gb needs --family hibi|sorting|revlex|rees");
  require(family == "hibi" || family == "sorting" || family == "revlex" || family == "rees",
          "--family must be hibi, sorting, revlex or rees");
  bool consistent = from_order.empty() || from_order == family || (family == "hibi" && from_order == "revlex");
  require(consistent, "--order " + opt.order + " does not fit --family " + family);
  return family;
}

int cmd_gb(const Options& opt, std::ostream& out) {
  std::string family = resolve_family(opt);
  Poset poset = load_poset(opt);
  int s = s_of(opt);
  // With --point the fiber is the squarefree Veronese of degree s, with
  // letter names and generators in decreasing lex order.
  auto fiber = [&] { return opt.point ? veronese_presentation(opt.r, s) : fiber_presentation(poset, opt.r, s); };
  auto y_order = [&](const ToricPresentation& pres) {
    if (opt.seed) return random_y_order(pres, *opt.seed);
    return opt.point ? identity_y_order(pres) : canonical_y_order(pres);
  };

  GroebnerBasis basis;
  ToricPresentation pres;
  Json extra = Json::object();
  if (family == "hibi") {
    require(s == opt.r, "Hibi relations need s = r");
    pres = fiber_presentation(poset, opt.r, opt.r);
    basis = hibi_relations(pres, y_order(pres));
  } else if (family == "sorting") {
    pres = fiber();
    basis = sorting_gb(pres);
  } else if (family == "revlex") {
    pres = fiber();
    auto result = revlex_gb(pres, y_order(pres));
    basis = result.basis;
    extra = {{"squarefree_initials", result.squarefree_initials}, {"max_degree", result.max_degree}};
  } else {
    auto fib = fiber();
    auto result = rees_gb(fib);
    basis = result.basis;
    pres = rees_presentation(fib);
    extra = {{"fiber_part", result.fiber_part},
             {"linear_part", result.linear_part},
             {"squarefree_quadratic", result.squarefree_quadratic},
             {"x_condition", result.x_condition}};
  }

  if (opt.format == "text") {
    for (const auto& b : basis.binomials) out << to_string(b, pres) << "\n";
    return 0;
  }
  Json list = Json::array();
  for (const auto& b : basis.binomials)
    list.push_back({{"lead", to_string(b.lead, pres)}, {"trail", to_string(b.trail, pres)}, {"degree", b.degree()}});
  Json doc{{"family", family}, {"order", basis.order}, {"r", opt.r}, {"s", s}, {"count", basis.binomials.size()}};
  for (auto& [k, v] : extra.items()) doc[k] = v;
  doc["binomials"] = list;
  out << doc.dump(2) << "\n";
  return 0;
}

Json report_json(const InvariantReport& rep) {
  Json covers = Json::array();
  for (const auto& [a, b] : rep.covers) covers.push_back({a, b});
  const auto& c = rep.certificates;
  Json witness = nullptr;
  if (c.polymatroidal_failure)
    witness = {{"u", c.polymatroidal_failure->u.exponents()},
               {"v", c.polymatroidal_failure->v.exponents()},
               {"t", c.polymatroidal_failure->t}};
  return Json{
      {"poset", {{"n", rep.n}, {"elements", rep.elements}, {"covers", covers}, {"width", rep.width}}},
      {"r", rep.r},
      {"s", rep.s},
      {"dimensions",
       {{"ring_dim", rep.ring_dim},
        {"ring_dim_rs", rep.ring_dim_rs},
        {"analytic_spread", rep.analytic_spread},
        {"dim_quotient", rep.dim_quotient},
        {"height", rep.height},
        {"pd", rep.pd},
        {"reg", rep.reg},
        {"reg_quotient_I", rep.reg_quotient_I ? Json(*rep.reg_quotient_I) : Json(nullptr)},
        {"generators_I", rep.generators_I},
        {"generators_H", rep.generators_H}}},
      {"statuses",
       {{"pure", rep.pure},
        {"antichain", rep.antichain},
        {"complete_intersection", rep.complete_intersection},
        {"gorenstein_I", rep.gorenstein_I},
        {"gorenstein_R", rep.gorenstein_R}}},
      {"certificates",
       {{"order", "row-major"},
        {"weakly_polymatroidal", c.weakly_polymatroidal},
        {"polymatroidal_failure", witness},
        {"linear_quotients", c.linear_quotients},
        {"sorting_squarefree_quadratic", c.sorting_squarefree_quadratic},
        {"sorting_relations", c.sorting_relations},
        {"rees",
         c.rees ? Json{{"squarefree_quadratic", c.rees->squarefree_quadratic},
                       {"x_condition", c.rees->x_condition},
                       {"relations", c.rees->relations}}
                : Json(nullptr)},
        {"hibi_relations", c.hibi_relations ? Json(*c.hibi_relations) : Json(nullptr)}}},
      {"predicted_depth_limit", rep.predicted_depth_limit},
  };
}

// Flattens nested objects into "a.b" keys and aligns the values.
void render_flat(std::ostream& out, const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::function<void(const std::string&, const Json&)> walk = [&](const std::string& prefix, const Json& j) {
    if (j.is_object()) {
      for (auto& [k, v] : j.items()) walk(prefix.empty() ? k : prefix + "." + k, v);
      return;
    }
    rows.emplace_back(prefix, j.dump());
  };
  walk("", doc);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

int cmd_report(const Options& opt, std::ostream& out) {
  Poset poset = load_poset(opt);
  int s = s_of(opt);
  Json doc = report_json(full_report(poset, opt.r, s));
  if (opt.format == "text") render_flat(out, doc);
  else out << doc.dump(2) << "\n";
  return 0;
}

int cmd_iso(const Options& opt, std::ostream& out) {
  Poset poset = load_poset(opt);
  require(opt.r >= 2, "iso needs --r >= 2");
  auto iso = verify_hibi_isomorphism(poset, opt.r);
  if (opt.format == "text") {
    out << "lattice size: " << iso.chains.size() << "\n";
    out << "relations:    " << iso.relations << "\n";
    for (std::size_t i = 0; i < iso.chains.size(); ++i)
      out << chain_json(poset, iso.chains[i]).dump() << " -> " << names_of(iso.product, iso.images[i]).dump() << "\n";
    return 0;
  }
  Json map = Json::array();
  for (std::size_t i = 0; i < iso.chains.size(); ++i)
    map.push_back({{"chain", chain_json(poset, iso.chains[i])}, {"image", names_of(iso.product, iso.images[i])}});
  out << Json{{"r", opt.r},
              {"product", poset_json(iso.product)},
              {"lattice_size", iso.chains.size()},
              {"relations", iso.relations},
              {"map", map}}
             .dump(2)
      << "\n";
  return 0;
}

// All checks for one poset; returns the number of (r, s) instances.
int check_poset(const Poset& poset, int max_r) {
  const int n = poset.size();
  int instances = 0;
  for (int r = 1; r <= max_r; ++r)
    for (int s = 1; s <= r; ++s) {
      std::string where = "n=" + std::to_string(n) + " covers=" + poset_json(poset)["covers"].dump() +
                          " r=" + std::to_string(r) + " s=" + std::to_string(s) + ": ";
      try {
        auto gh = generalized_hibi_H(poset, r, s);
        if (r * n <= 12)
          verify(alexander_dual(multichain_ideal_I(poset, r, s)) == oracle::definitional_dual(multichain_ideal_I(poset, r, s)),
                 "the Alexander dual agrees with the definition");
        verify(is_weakly_polymatroidal(gh.ideal, VariableOrder::row_major(gh.ideal.ambient())).holds,
               "H_{r,s}(P) is weakly polymatroidal");
        auto pres = fiber_presentation(poset, r, s);
        verify(is_sortable(pres.images, pres.ambient).sortable, "the generators of H_{r,s}(P) are sortable");
        if (s == r && r * n <= 12) {
          auto table = betti_from_sets(poset, r);
          BettiTable nonzero;
          for (const auto& [key, value] : table)
            if (value) nonzero[key] = value;
          auto hochster = oracle::hochster_betti(hibi_ideal_H(poset, r));
          verify(nonzero == BettiTable(hochster.graded.begin(), hochster.graded.end()),
                 "Betti numbers from set sizes agree with Hochster's formula");
        }
        if (s == r && r * n <= 9) {
          auto twists = twist_alternating_sum(resolution_of_H(poset, r));
          oracle::Numerator from_twists;
          for (const auto& [m, c] : twists)
            if (c) from_twists[m.exponents()] = c;
          verify(from_twists == oracle::hilbert_numerator(hibi_ideal_H(poset, r)),
                 "the resolution twists give the Hilbert series");
        }
        full_report(poset, r, s);
        if (s == r && r >= 2) verify_hibi_isomorphism(poset, r);
      } catch (const VerificationError& e) {
        throw VerificationError(where + e.what());
      } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(where + e.what());
      }
      ++instances;
    }
  return instances;
}

int cmd_check(const Options& opt, std::ostream& out) {
  require(opt.max_n >= 1 && opt.max_n <= 5, "--max-n must be between 1 and 5");
  require(opt.max_r >= 1 && opt.max_r <= 4, "--max-r must be between 1 and 4");
  std::vector<Poset> posets;
  for (int n = 1; n <= opt.max_n; ++n)
    for (auto& p : all_posets(n)) posets.push_back(std::move(p));
  std::vector<std::future<int>> jobs;
  for (const auto& p : posets) jobs.push_back(std::async(std::launch::async, check_poset, std::cref(p), opt.max_r));
  int instances = 0;
  std::exception_ptr failure;
  for (auto& job : jobs) {
    try {
      instances += job.get();
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (opt.format == "text") {
    out << "posets:    " << posets.size() << "\n";
    out << "instances: " << instances << "\n";
    out << "ok\n";
    return 0;
  }
  out << Json{{"max_n", opt.max_n}, {"max_r", opt.max_r}, {"posets", posets.size()}, {"instances", instances}, {"ok", true}}
             .dump(2)
      << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multichain ideals, generalized Hibi ideals and their toric rings", "hibi"};
  Options opt;
  app.add_option("verb", opt.verb, "ideal | dual | betti | resolution | gb | report | iso | check")
      ->required()
      ->check(CLI::IsMember({"ideal", "dual", "betti", "resolution", "gb", "report", "iso", "check"}));
  app.add_option("--poset", opt.poset_file, "poset file (JSON or 'a < b' lines)");
  app.add_flag("--point", opt.point, "one-element poset; gb uses the squarefree Veronese of degree s");
  app.add_option("--r", opt.r, "multichain length");
  app.add_option("--s", opt.s, "1 <= s <= r (default r)");
  app.add_option("--ideal", opt.which, "I or H, for ideal and dual")->check(CLI::IsMember({"I", "H"}));
  app.add_option("--family", opt.family, "hibi | sorting | revlex | rees");
  app.add_option("--order", opt.order, "revlex | sorting | bigraded-sharp");
  app.add_option("--format", opt.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--verify", opt.verify, "cross-check against the brute-force oracle");
  app.add_option("--max-n", opt.max_n, "check: largest poset size");
  app.add_option("--max-r", opt.max_r, "check: largest r");
  app.add_option("--y-order-seed", opt.seed, "random linear extension for the y order");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (opt.verb == "ideal") return cmd_ideal(opt, out);
    if (opt.verb == "dual") return cmd_dual(opt, out);
    if (opt.verb == "betti") return cmd_betti(opt, out);
    if (opt.verb == "resolution") return cmd_resolution(opt, out);
    if (opt.verb == "gb") return cmd_gb(opt, out);
    if (opt.verb == "report") return cmd_report(opt, out);
    if (opt.verb == "iso") return cmd_iso(opt, out);
    return cmd_check(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "step budget exceeded: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hibi::cli
