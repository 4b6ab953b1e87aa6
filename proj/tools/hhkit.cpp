// hhkit: generate the graph families, compute parameters against the
// closed forms, reproduce the reference tables, and run the verification
// suites. One command per process; exit code 0 iff every check passed
// exactly.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hh/automorphism.hpp"
#include "hh/coloring.hpp"
#include "hh/families.hpp"
#include "hh/homomorphism.hpp"
#include "hh/independence.hpp"
#include "hh/metrics.hpp"
#include "hh/structure.hpp"

using json = nlohmann::ordered_json;
using namespace hh;
using Clock = std::chrono::steady_clock;

namespace {

int thread_cap() {
  const char* env = std::getenv("HHKIT_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

std::string rat_str(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

json metric_json(const Metric& m) {
  if (m.is_infinite()) return "INFINITE";
  return m.value();
}

struct Report {
  json doc;
  bool pass = true;
  bool exact = true;
  Clock::time_point t0 = Clock::now();

  explicit Report(const std::string& command) {
    doc["command"] = command;
    doc["params"] = json::object();
    doc["params"]["threads"] = thread_cap();
    doc["results"] = json::array();
  }

  void add(json row, bool ok, bool row_exact = true) {
    row["match"] = ok;
    if (!row_exact) row["exact"] = false;
    doc["results"].push_back(row);
    pass = pass && ok;
    exact = exact && row_exact;
  }

  int finish(const std::string& out_path) {
    doc["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            Clock::now() - t0)
                            .count();
    doc["exact"] = exact;
    doc["pass"] = pass;
    if (!out_path.empty()) {
      std::ofstream os(out_path);
      if (!os) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      }
      os << doc.dump(2) << "\n";
    }
    std::cout << (pass && exact ? "PASS" : "FAIL") << " (" << doc["results"].size()
              << " checks, " << doc["elapsed_ms"] << " ms)\n";
    return pass && exact ? 0 : 1;
  }
};

std::chrono::milliseconds budget_ms(double budget_s) {
  return std::chrono::milliseconds(static_cast<long long>(budget_s * 1000));
}

// The verification grid: every (r,n) the closed-form theorems are checked
// on. r=2: n=5..9; r=3: n=7..9; r=4: n=9..10.
std::vector<FamilyParams> default_grid() {
  std::vector<FamilyParams> out;
  for (int n = 5; n <= 9; ++n) out.push_back({n, 2});
  for (int n = 7; n <= 9; ++n) out.push_back({n, 3});
  for (int n = 9; n <= 10; ++n) out.push_back({n, 4});
  return out;
}

std::vector<FamilyParams> parse_instances(const std::string& s) {
  std::vector<FamilyParams> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--instances", "expected n:r pairs");
    out.push_back({std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1))});
  }
  return out;
}

std::vector<FamilyParams> grid_from(const std::string& instances, int n_max) {
  auto grid = instances.empty() ? default_grid() : parse_instances(instances);
  if (n_max > 0) {
    std::vector<FamilyParams> out;
    for (auto p : grid)
      if (p.n <= n_max) out.push_back(p);
    return out;
  }
  return grid;
}

// ---------------------------------------------------------------- gen

int cmd_gen(const std::string& family, int n, int r, const std::string& out,
            const std::string& format) {
  Graph g = [&] {
    if (family == "hh") return hh_graph({n, r});
    if (family == "kneser") return kneser_graph({n, r});
    if (family == "complete") return complete_graph(n);
    if (family == "shift") return shift_graph(n);
    throw CLI::ValidationError("family", "unknown family " + family);
  }();

  std::ofstream os(out);
  if (!os) {
    std::cerr << "cannot write " << out << "\n";
    return 2;
  }
  auto edges = g.edges();
  if (format == "edges") {
    os << "p " << g.vertex_count() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) os << "e " << u + 1 << " " << v + 1 << "\n";
    std::ofstream ls(out + ".labels");
    if (!ls) {
      std::cerr << "cannot write " << out << ".labels\n";
      return 2;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
      ls << v + 1 << "," << g.label(v) << "\n";
  } else {
    json j;
    j["family"] = family;
    j["n"] = n;
    if (family == "hh" || family == "kneser") j["r"] = r;
    j["vertex_count"] = g.vertex_count();
    j["edge_count"] = edges.size();
    j["edges"] = json::array();
    for (auto [u, v] : edges) j["edges"].push_back({u + 1, v + 1});
    j["labels"] = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) j["labels"].push_back(g.label(v));
    os << j.dump(2) << "\n";
  }
  std::cout << "wrote " << out << " (" << g.vertex_count() << " vertices, "
            << edges.size() << " edges)\n";
  return 0;
}

// ---------------------------------------------------------------- params

int cmd_params(int n, int r, const std::string& out_path) {
  Report rep("params");
  rep.doc["params"]["n"] = n;
  rep.doc["params"]["r"] = r;
  auto cf = closed_form({n, r});
  Graph g = hh_graph({n, r});

  auto row = [&](const std::string& name, json formula, json computed) {
    bool ok = formula == computed;
    rep.add({{"name", name}, {"formula", formula}, {"computed", computed}}, ok);
    std::cout << name << ": formula=" << formula.dump() << " computed=" << computed.dump()
              << (ok ? " ok" : " MISMATCH") << "\n";
  };

  row("vertex_count", cf.vertex_count, g.vertex_count());
  row("valency", cf.valency, g.vertex_count() ? g.degree(0) : 0);
  long long edge_count = static_cast<long long>(g.edges().size());
  row("edge_count", cf.edge_count, edge_count);
  row("components", cf.component_count,
      static_cast<long long>(connected_components(g).size()));
  row("girth", 4, metric_json(girth(g)));
  row("diameter", metric_json(cf.diameter_formula), metric_json(diameter(g)));
  row("odd_girth", metric_json(cf.odd_girth_formula), metric_json(odd_girth(g)));
  return rep.finish(out_path);
}

// ---------------------------------------------------------------- table

struct TableRow {
  int r, n;
  long long value;      // tables 1 and 2
  Rational rat{0};      // table 3
};

const std::vector<TableRow> kTable1 = {
    {2, 4, 6, {}}, {2, 5, 12, {}}, {2, 6, 22, {}}, {2, 7, 37, {}}, {2, 8, 58, {}},
    {3, 6, 30, {}}, {3, 7, 60, {}}, {3, 8, 105, {}}};
const std::vector<TableRow> kTable2 = {
    {2, 4, 2, {}}, {2, 5, 3, {}}, {2, 6, 4, {}}, {2, 7, 4, {}},
    {3, 6, 2, {}}, {3, 7, 3, {}}};
const std::vector<TableRow> kTable3 = {
    {2, 4, 0, Rational(2)},        {2, 5, 0, Rational(5, 2)},
    {2, 6, 0, Rational(30, 11)},   {2, 7, 0, Rational(105, 37)},
    {2, 8, 0, Rational(84, 29)},   {3, 6, 0, Rational(2)},
    {3, 7, 0, Rational(7, 3)},     {3, 8, 0, Rational(8, 3)}};

int cmd_table(int which, double budget_s, const std::string& out_path) {
  Report rep("table");
  rep.doc["params"]["which"] = which;
  rep.doc["params"]["budget_s"] = budget_s;
  auto budget = budget_ms(budget_s);

  if (which == 1 || which == 3) {
    const auto& rows = which == 1 ? kTable1 : kTable3;
    for (const auto& row : rows) {
      FamilyParams p{row.n, row.r};
      Graph g = hh_graph(p);
      auto seed = best_constructed_set(p);
      auto t0 = Clock::now();
      auto a = alpha_exact(g, budget, &seed);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                    .count();
      if (which == 1) {
        bool ok = a.optimality_certified && a.alpha == row.value;
        rep.add({{"n", row.n}, {"r", row.r}, {"expected", row.value},
                 {"computed", a.alpha}, {"row_ms", ms}},
                ok, a.optimality_certified);
        std::cout << "alpha H(" << row.n << ":" << row.r << ") = " << a.alpha
                  << " (expected " << row.value << ", " << ms << " ms)"
                  << (ok ? "" : " MISMATCH") << "\n";
      } else {
        auto gens = sn_vertex_generators(p);
        json computed = "uncertified";
        bool ok = false;
        if (a.optimality_certified) {
          Rational chi_star = fractional_chromatic(g, gens, a.alpha);
          computed = rat_str(chi_star);
          ok = chi_star == row.rat;
        }
        rep.add({{"n", row.n}, {"r", row.r}, {"expected", rat_str(row.rat)},
                 {"computed", computed}, {"row_ms", ms}},
                ok, a.optimality_certified);
        std::cout << "chi* H(" << row.n << ":" << row.r << ") = " << computed.dump()
                  << " (expected " << rat_str(row.rat) << ")"
                  << (ok ? "" : " MISMATCH") << "\n";
      }
    }
  } else if (which == 2) {
    for (const auto& row : kTable2) {
      Graph g = hh_graph({row.n, row.r});
      auto t0 = Clock::now();
      auto c = chi_exact(g, budget);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                    .count();
      bool ok = c.exact && c.upper == row.value;
      rep.add({{"n", row.n}, {"r", row.r}, {"expected", row.value},
               {"computed", c.upper}, {"lower", c.lower}, {"row_ms", ms}},
              ok, c.exact);
      std::cout << "chi H(" << row.n << ":" << row.r << ") = " << c.upper
                << " (expected " << row.value << ", " << ms << " ms)"
                << (ok ? "" : " MISMATCH") << "\n";
    }
  } else {
    std::cerr << "table must be 1, 2, or 3\n";
    return 2;
  }
  return rep.finish(out_path);
}

// ---------------------------------------------------------------- verify

void suite_diameter(Report& rep, const std::vector<FamilyParams>& grid) {
  for (auto p : grid) {
    auto cf = closed_form(p);
    Graph g = hh_graph(p);
    auto d = diameter(g);
    rep.add({{"n", p.n}, {"r", p.r}, {"formula", metric_json(cf.diameter_formula)},
             {"computed", metric_json(d)}},
            d == cf.diameter_formula);
  }
}

void suite_hhog(Report& rep, const std::vector<FamilyParams>& grid) {
  for (auto p : grid) {
    auto cf = closed_form(p);
    Graph g = hh_graph(p);
    auto og = odd_girth(g);
    auto gi = girth(g);
    rep.add({{"n", p.n}, {"r", p.r}, {"check", "odd_girth"},
             {"formula", metric_json(cf.odd_girth_formula)}, {"computed", metric_json(og)}},
            og == cf.odd_girth_formula);
    rep.add({{"n", p.n}, {"r", p.r}, {"check", "girth"}, {"formula", 4},
             {"computed", metric_json(gi)}},
            gi == Metric::finite(4));
  }
}

Mask m2(int a, int b) { return with_element(with_element(Mask{0}, a), b); }

void suite_subgraphs(Report& rep) {
  FamilyParams p{5, 2};
  // 5-cycle in the disjointness graph of 2-subsets of {1..5}
  std::vector<Mask> cyc = {m2(1, 2), m2(3, 4), m2(1, 5), m2(2, 3), m2(4, 5)};
  std::vector<std::pair<int, int>> cyc_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  Graph c5(5, cyc_edges);
  auto vm = lift_kneser_subgraph(p, c5, cyc);
  rep.add({{"check", "lift 5-cycle"}, {"injective", vm.injective}}, vm.injective);

  std::vector<Mask> match = {m2(1, 2), m2(3, 4), m2(1, 3), m2(2, 5),
                             m2(1, 4), m2(3, 5), m2(1, 5), m2(2, 4), m2(2, 3), m2(4, 5)};
  std::vector<std::pair<int, int>> match_edges = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}};
  Graph pm(10, match_edges);
  auto vm2 = lift_kneser_subgraph(p, pm, match);
  rep.add({{"check", "lift perfect matching"}, {"injective", vm2.injective}}, vm2.injective);
}

void suite_bestindybd(Report& rep, const std::vector<FamilyParams>& grid) {
  for (auto p : grid) {
    Graph g = hh_graph(p);
    auto cf = closed_form(p);
    auto kt = kneser_type_set(p, 1);
    bool kt_ok = is_independent(g, kt) &&
                 static_cast<long long>(kt.size()) == p.r * binomial(p.n - 1, p.r);
    rep.add({{"n", p.n}, {"r", p.r}, {"check", "kneser_type"},
             {"size", kt.size()}},
            kt_ok);
    auto rt = recursive_type_set(p);
    auto rtl = recursive_type_set_low(p);
    bool rt_ok = is_independent(g, rt) && is_independent(g, rtl) &&
                 static_cast<long long>(rt.size()) == binomial(p.n, p.r + 1) &&
                 rt.size() == rtl.size();
    // high and low recursive-type sets are disjoint
    for (int v : rt)
      rt_ok = rt_ok && !std::binary_search(rtl.begin(), rtl.end(), v);
    rep.add({{"n", p.n}, {"r", p.r}, {"check", "recursive_type"},
             {"size", rt.size()}},
            rt_ok);
    auto best = best_constructed_set(p);
    bool best_ok = is_independent(g, best) && is_maximal_independent(g, best) &&
                   static_cast<long long>(best.size()) == cf.alpha_lower &&
                   alpha_prime(p) == cf.alpha_lower;
    rep.add({{"n", p.n}, {"r", p.r}, {"check", "best_constructed"},
             {"size", best.size()}, {"alpha_lower", cf.alpha_lower}},
            best_ok);
    if (p.n >= p.r * p.r) {
      auto hy = hybrid_set(p);
      bool hy_ok = is_independent(g, hy);
      if (p.n == p.r * p.r + 1) hy_ok = hy_ok && hy.size() == kt.size();
      rep.add({{"n", p.n}, {"r", p.r}, {"check", "hybrid"}, {"size", hy.size()}}, hy_ok);
    }
  }
}

void suite_twobigsets(Report& rep, const std::vector<FamilyParams>& grid) {
  for (auto p : grid) {
    if (p.n < p.r * p.r + 1) continue;
    Graph g = hh_graph(p);
    auto [a, b] = disjoint_pair(p);
    bool ok = is_independent(g, a) && is_independent(g, b) && a.size() == b.size();
    for (int v : a) ok = ok && !std::binary_search(b.begin(), b.end(), v);
    rep.add({{"n", p.n}, {"r", p.r}, {"size", a.size()}}, ok);
  }
}

void suite_recursivebd(Report& rep, const std::vector<FamilyParams>& grid,
                       std::chrono::milliseconds budget) {
  for (auto p : grid) {
    Graph g = hh_graph(p);
    auto c = constructive_coloring(p);
    bool ok = is_proper(g, c) && c.color_count <= p.n - 2 * p.r + 2;
    rep.add({{"n", p.n}, {"r", p.r}, {"check", "constructive"},
             {"colors", c.color_count}, {"bound", p.n - 2 * p.r + 2}},
            ok);
  }
  // chromatic number rises by 0 or 1 per ground-set step (small instances)
  for (auto [r, lo, hi] : {std::tuple{2, 4, 7}, {3, 6, 7}}) {
    int prev = -1;
    for (int n = lo; n <= hi; ++n) {
      auto c = chi_exact(hh_graph({n, r}), budget);
      if (!c.exact) {
        rep.add({{"n", n}, {"r", r}, {"check", "chi_step"}, {"status", "budget"}}, false,
                false);
        break;
      }
      if (prev >= 0)
        rep.add({{"n", n}, {"r", r}, {"check", "chi_step"}, {"prev", prev},
                 {"chi", c.upper}},
                c.upper == prev || c.upper == prev + 1);
      prev = c.upper;
    }
  }
}

void suite_tailchi(Report& rep, std::chrono::milliseconds budget) {
  for (auto p : {FamilyParams{4, 2}, FamilyParams{5, 2}}) {
    auto c = chi_exact(hh_graph(p), budget);
    if (!c.exact) {
      rep.add({{"n", p.n}, {"r", p.r}, {"status", "budget"}}, false, false);
      continue;
    }
    auto vm = tail_growth_embed(p, c.coloring);
    rep.add({{"n", p.n}, {"r", p.r}, {"chi", c.upper},
             {"target_n", p.n + c.upper}, {"target_r", p.r + 1},
             {"injective", vm.injective}},
            vm.injective);
  }
}

void suite_s_n_embed(Report& rep, std::chrono::milliseconds budget) {
  for (int n = 4; n <= 7; ++n) {
    auto vm = shift_embed(n);  // throws unless induced + injective
    auto cs = chi_exact(shift_graph(n), budget);
    auto ch = chi_exact(hh_graph({n, 2}), budget);
    bool exact = cs.exact && ch.exact;
    bool ok = exact && cs.upper <= ch.upper && ch.upper <= cs.upper + 2;
    rep.add({{"n", n}, {"embed_size", vm.map.size()}, {"chi_shift", cs.upper},
             {"chi_hh", ch.upper}},
            ok, exact);
  }
}

void suite_frachom(Report& rep, const std::vector<FamilyParams>& grid) {
  for (auto p : grid) {
    Graph g = hh_graph(p);
    auto gens = sn_vertex_generators(p);
    auto s = best_constructed_set(p);
    auto oh = orbit_hom(g, gens, s);  // verifies images and disjointness
    Rational ratio(oh.ground_size, oh.image_size);
    bool ok = ratio == Rational(g.vertex_count(), static_cast<long long>(s.size()));
    auto fc = orbit_fractional_coloring(g, gens, s);
    ok = ok && fc.total_weight == Rational(g.vertex_count(),
                                           static_cast<long long>(s.size()));
    rep.add({{"n", p.n}, {"r", p.r}, {"ground", oh.ground_size},
             {"image", oh.image_size}, {"ratio", rat_str(ratio)},
             {"cover_weight", rat_str(fc.total_weight)}},
            ok);
  }
}

void suite_quotient(Report& rep, const std::vector<FamilyParams>& grid) {
  for (auto p : grid) {
    if (p.n < 2 * p.r + 1) continue;
    Graph g = hh_graph(p);
    auto part = three_cell_partition(p);
    auto qr = quotient_matrix(g, part);
    bool ok = qr.equitable && qr.matrix == expected_quotient_matrix(p);
    rep.add({{"n", p.n}, {"r", p.r}, {"equitable", qr.equitable}}, ok);
  }
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void suite_aut(Report& rep, const std::vector<FamilyParams>& grid,
               std::chrono::milliseconds budget) {
  for (auto p : grid) {
    Graph g = hh_graph(p);
    auto a = aut_group(g, budget);
    bool ok = a.exact && a.order == factorial(p.n);
    rep.add({{"n", p.n}, {"r", p.r}, {"order", a.order}, {"expected", factorial(p.n)}},
            ok, a.exact);
    if (ok && p.n == 5 && p.r == 2) {
      bool tp = tail_preservation_check(g, a.elements);
      rep.add({{"n", p.n}, {"r", p.r}, {"check", "tail_preservation"}}, tp);
    }
  }
}

void suite_distinguisher(Report& rep, const std::vector<FamilyParams>& grid,
                         long long samples) {
  for (auto p : grid) {
    Graph g = hh_graph(p);
    auto verts = hh_vertices(p);
    const int nv = g.vertex_count();
    long long mismatches = 0, checked = 0;
    if (static_cast<long long>(nv) * nv <= 250000) {
      for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) {
          bool truth = verts[u].tail == verts[v].tail;
          if (structural_same_tail(g, p, u, v) != truth) ++mismatches;
          ++checked;
        }
    } else {
      // all tail-type and head-type pairs, plus deterministic samples
      for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) {
          auto cls = pair_classify(p, verts[u], verts[v]);
          if (cls == PairClass::OTHER) continue;
          bool truth = cls == PairClass::TAIL_TYPE;
          if (structural_same_tail(g, p, u, v) != truth) ++mismatches;
          ++checked;
        }
      uint64_t state = 0x9e3779b97f4a7c15ull;
      auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
      };
      for (long long i = 0; i < samples; ++i) {
        int u = static_cast<int>(next() % nv);
        int v = static_cast<int>(next() % nv);
        if (u == v) continue;
        bool truth = verts[u].tail == verts[v].tail;
        if (structural_same_tail(g, p, u, v) != truth) ++mismatches;
        ++checked;
      }
    }
    rep.add({{"n", p.n}, {"r", p.r}, {"pairs", checked}, {"mismatches", mismatches}},
            mismatches == 0);
  }
}

int cmd_verify(const std::string& suite, const std::string& instances, int n_max,
               double budget_s, long long samples, const std::string& out_path) {
  Report rep("verify");
  rep.doc["params"]["suite"] = suite;
  rep.doc["params"]["budget_s"] = budget_s;
  auto budget = budget_ms(budget_s);
  auto grid = grid_from(instances, n_max);

  if (suite == "diameter") suite_diameter(rep, grid);
  else if (suite == "hhog") suite_hhog(rep, grid);
  else if (suite == "subgraphs") suite_subgraphs(rep);
  else if (suite == "bestindybd") suite_bestindybd(rep, grid);
  else if (suite == "twobigsets") suite_twobigsets(rep, grid);
  else if (suite == "recursivebd") suite_recursivebd(rep, grid, budget);
  else if (suite == "tailchi") suite_tailchi(rep, budget);
  else if (suite == "s_n_embed") suite_s_n_embed(rep, budget);
  else if (suite == "frachom")
    suite_frachom(rep, instances.empty()
                           ? std::vector<FamilyParams>{{4, 2}, {5, 2}, {6, 2}}
                           : grid);
  else if (suite == "quotient") suite_quotient(rep, grid);
  else if (suite == "aut")
    suite_aut(rep, instances.empty() ? std::vector<FamilyParams>{{5, 2}, {6, 2}} : grid,
              budget);
  else if (suite == "distinguisher")
    suite_distinguisher(rep,
                        instances.empty()
                            ? std::vector<FamilyParams>{{5, 2}, {6, 2}}
                            : grid,
                        samples);
  else {
    std::cerr << "unknown suite " << suite << "\n";
    return 2;
  }
  return rep.finish(out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"H(n:r) graph family toolkit"};
  app.require_subcommand(1);

  std::string family, out_path, format = "edges", instances, suite;
  int n = 0, r = 0, which = 0, n_max = 0;
  double budget_s = 600.0;
  long long samples = 10000;

  auto* gen = app.add_subcommand("gen", "write a graph to a file");
  gen->add_option("family", family, "hh|kneser|complete|shift")->required();
  gen->add_option("n", n, "ground-set size")->required();
  gen->add_option("r", r, "subset size (hh, kneser)");
  gen->add_option("--out", out_path, "output path")->required();
  gen->add_option("--format", format, "edges|json");

  auto* params = app.add_subcommand("params", "closed forms vs computed metrics");
  params->add_option("n", n)->required();
  params->add_option("r", r)->required();
  params->add_option("--out", out_path, "JSON report path");

  auto* table = app.add_subcommand("table", "recompute a reference table");
  table->add_option("which", which, "1|2|3")->required();
  table->add_option("--budget", budget_s, "seconds per solver call");
  table->add_option("--out", out_path, "JSON report path");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite,
                     "diameter|hhog|subgraphs|bestindybd|twobigsets|recursivebd|"
                     "tailchi|s_n_embed|frachom|quotient|aut|distinguisher")
      ->required();
  verify->add_option("--instances", instances, "comma-separated n:r pairs");
  verify->add_option("--n-max", n_max, "cap n on the default grid");
  verify->add_option("--budget", budget_s, "seconds per solver call");
  verify->add_option("--samples", samples, "sampled pairs for large distinguisher runs");
  verify->add_option("--out", out_path, "JSON report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(family, n, r, out_path, format);
    if (params->parsed()) return cmd_params(n, r, out_path);
    if (table->parsed()) return cmd_table(which, budget_s, out_path);
    if (verify->parsed()) return cmd_verify(suite, instances, n_max, budget_s, samples, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
