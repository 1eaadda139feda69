#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extq/graph.hpp"
#include "extq/parse.hpp"
#include "extq/quadrics.hpp"
#include "extq/regular.hpp"
#include "extq/report.hpp"
#include "extq/resolution.hpp"
#include "extq/scan.hpp"
#include "extq/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct Common {
  int n = 0;
  std::string order_text = "degrevlex";
  std::string field = "q";
  uint64_t seed = extq::kDefaultSeed;
  bool seed_given = false;
  std::string json_path;
  std::vector<std::string> gens;
  std::string graph_text;
};

uint64_t env_seed() {
  const char* s = std::getenv("EXTKOSZUL_SEED");
  if (!s) return extq::kDefaultSeed;
  return std::strtoull(s, nullptr, 10);
}

extq::Graph load_graph(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw extq::UsageError("cannot open graph file: " + text.substr(1));
    return extq::parse_graph_file(in);
  }
  return extq::preset_graph(text);
}

/// Generators from --gen expressions and/or a --graph edge ideal.
extq::Ideal<extq::Rational> load_ideal(const Common& c, int* n_out) {
  int n = c.n;
  std::vector<extq::ExtElement<extq::Rational>> gens;
  if (!c.graph_text.empty()) {
    extq::Graph g = load_graph(c.graph_text);
    n = n > 0 ? n : g.vertex_count;
    if (n < g.vertex_count) throw extq::UsageError("--n smaller than the graph");
    for (auto& e : extq::edge_ideal<extq::Rational>(g).generators) {
      extq::ExtElement<extq::Rational> lifted(n);
      for (auto& [m, coef] : e.terms()) lifted.add_term(m, coef);
      gens.push_back(std::move(lifted));
    }
  }
  if (n <= 0) throw extq::UsageError("--n is required when no graph is given");
  for (auto& text : c.gens) {
    extq::ExtElement<extq::Rational> f = extq::parse_element(text, n);
    if (f.is_zero()) std::cerr << "warning: generator vanishes: " << text << "\n";
    gens.push_back(std::move(f));
  }
  *n_out = n;
  return extq::Ideal<extq::Rational>(n, std::move(gens));
}

uint32_t field_prime(const std::string& field) {
  if (field == "q") return 0;
  if (field == "fp") return extq::kDefaultPrime;
  if (field.rfind("fp:", 0) == 0) {
    long p = std::stol(field.substr(3));
    if (p < 2) throw extq::UsageError("invalid field modulus");
    return static_cast<uint32_t>(p);
  }
  throw extq::UsageError("unknown field: " + field + " (use q or fp:<p>)");
}

void emit_json(const Common& c, const std::string& command, const std::string& status,
               const std::string& expected, const std::string& actual, long long ms) {
  if (c.json_path.empty()) return;
  extq::Report rep;
  rep.session = {{"command", command}, {"n", c.n},        {"order", c.order_text},
                 {"field", c.field},   {"seed", c.seed}};
  rep.add({command, "command line invocation", status, expected, actual, ms});
  rep.write(c.json_path);
}

int status_code(const std::string& status) {
  if (status == "pass") return kExitPass;
  if (status == "fail") return kExitFail;
  return kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace extq;
  CLI::App app{"exact computations in quotients of exterior algebras"};
  app.require_subcommand(1);
  Common c;
  c.seed = env_seed();

  auto add_common = [&](CLI::App* cmd, bool wants_ideal) {
    cmd->add_option("--n", c.n, "ambient variable count");
    cmd->add_option("--order", c.order_text, "lex|deglex|degrevlex[:perm]");
    cmd->add_option("--field", c.field, "q | fp[:<p>]");
    cmd->add_option("--seed", c.seed, "random seed (default: EXTKOSZUL_SEED or built-in)");
    cmd->add_option("--json", c.json_path, "write a JSON report here");
    if (wants_ideal) {
      cmd->add_option("--gen", c.gens, "generator expression (repeatable)");
      cmd->add_option("--graph", c.graph_text, "graph preset (path:7, triangle+triangle) or @file");
    }
  };

  auto* cmd_gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_common(cmd_gb, true);
  auto* cmd_initial = app.add_subcommand("initial", "initial ideal");
  add_common(cmd_initial, true);
  auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert series of the quotient");
  add_common(cmd_hilbert, true);

  auto* cmd_froberg = app.add_subcommand("froberg", "expand 1/h(-t), flag negative coefficients");
  add_common(cmd_froberg, false);
  std::string hs_text;
  int truncation = 10;
  cmd_froberg->add_option("--hs", hs_text, "Hilbert coefficients, comma separated")->required();
  cmd_froberg->add_option("--N", truncation, "truncation degree");

  auto* cmd_betti = app.add_subcommand("betti", "graded Betti table over the exterior algebra");
  add_common(cmd_betti, true);
  int i_max = 3, j_max = -1;
  cmd_betti->add_option("--imax", i_max, "homological degree bound");
  cmd_betti->add_option("--jmax", j_max, "internal degree bound");

  auto* cmd_koszul = app.add_subcommand("koszul-test", "residue-field Betti table over E/I");
  add_common(cmd_koszul, true);
  cmd_koszul->add_option("--imax", i_max, "homological degree bound");

  auto* cmd_gsearch = app.add_subcommand("graphs-search", "graphs with a given series");
  add_common(cmd_gsearch, false);
  int v_min = 0, v_max = 0, edge_count = 0;
  bool ignore_isolated = false;
  cmd_gsearch->add_option("--vmin", v_min)->required();
  cmd_gsearch->add_option("--vmax", v_max)->required();
  cmd_gsearch->add_option("--e", edge_count)->required();
  cmd_gsearch->add_option("--target", hs_text, "target series coefficients")->required();
  cmd_gsearch->add_flag("--ignore-isolated", ignore_isolated);

  auto* cmd_regular = app.add_subcommand("regular", "regular-element certificate");
  add_common(cmd_regular, true);
  std::string form_text;
  cmd_regular->add_option("--form", form_text, "linear form")->required();

  auto* cmd_depth = app.add_subcommand("depth", "greedy certified depth probe");
  add_common(cmd_depth, true);
  int trials = 8;
  cmd_depth->add_option("--trials", trials, "random attempts per step");

  auto* cmd_quotient = app.add_subcommand("quotient", "quotient by a certified regular form");
  add_common(cmd_quotient, true);
  cmd_quotient->add_option("--form", form_text, "linear form")->required();

  auto* cmd_lg = app.add_subcommand("lg-search", "quadratic monomial models of a series");
  add_common(cmd_lg, false);
  int d_max = 0;
  cmd_lg->add_option("--hs", hs_text, "series coefficients")->required();
  cmd_lg->add_option("--dmax", d_max, "extra exterior variables to try");

  auto* cmd_rank = app.add_subcommand("rank", "quadric rank and decomposition");
  add_common(cmd_rank, false);
  std::string q_text, q2_text;
  cmd_rank->add_option("--q", q_text, "quadric expression")->required();

  auto* cmd_pencil = app.add_subcommand("pencil", "rank-2 locus of a 4-variable pencil");
  add_common(cmd_pencil, false);
  cmd_pencil->add_option("--q1", q_text, "first quadric")->required();
  cmd_pencil->add_option("--q2", q2_text, "second quadric")->required();

  auto* cmd_minrank = app.add_subcommand("minrank", "sampled minimum rank in a span");
  add_common(cmd_minrank, true);
  size_t samples = 10000;
  cmd_minrank->add_option("--samples", samples, "random combinations to draw");

  auto* cmd_generic = app.add_subcommand("generic", "seeded random quadric ideal");
  add_common(cmd_generic, false);
  int t_count = 0;
  long long bound = 50;
  cmd_generic->add_option("--t", t_count, "number of quadrics")->required();
  cmd_generic->add_option("--bound", bound, "coefficient bound");

  auto* cmd_scan = app.add_subcommand("scan-quadratic",
                                      "order-free quadratic Groebner basis scan");
  add_common(cmd_scan, true);

  auto* cmd_verify = app.add_subcommand("verify-paper", "replay every source computation");
  add_common(cmd_verify, false);
  bool skip_slow = false, corrupt = false;
  cmd_verify->add_flag("--skip-slow", skip_slow, "skip the Betti-table checks");
  cmd_verify->add_flag("--corrupt", corrupt, "negative control: perturb an input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    std::string status = "pass", expected = "", actual = "";
    StopWatch sw;
    std::string command = app.get_subcommands().front()->get_name();

    if (cmd_gb->parsed() || cmd_initial->parsed()) {
      int n = 0;
      Ideal<Rational> I = load_ideal(c, &n);
      c.n = n;
      GroebnerBasis<Rational> gb = buchberger(I, parse_order(c.order_text, n));
      if (cmd_gb->parsed()) {
        for (auto& g : gb.elements) std::cout << to_string(g) << "\n";
        actual = std::to_string(gb.elements.size()) + " elements";
      }
      std::cout << "initial ideal:";
      for (Monomial m : gb.initial.minimal_generators) std::cout << " " << to_string(m);
      std::cout << "\n";
      if (cmd_initial->parsed()) actual = std::to_string(gb.initial.minimal_generators.size()) +
                                          " minimal generators";
    } else if (cmd_hilbert->parsed()) {
      int n = 0;
      Ideal<Rational> I = load_ideal(c, &n);
      c.n = n;
      HilbertSeries hs = hilbert_series(I, parse_order(c.order_text, n));
      std::cout << hs.to_string() << "\n";
      actual = hs.to_string();
    } else if (cmd_froberg->parsed()) {
      FrobergResult fr = froberg_inverse(parse_hilbert(hs_text), truncation);
      std::cout << fr.series.to_string() << "\n";
      if (fr.first_negative_index) {
        std::cout << "first negative coefficient at degree " << *fr.first_negative_index
                  << ": NOT Koszul\n";
        status = "fail";
      } else {
        std::cout << "no negative coefficient through degree " << truncation
                  << " (necessary test only)\n";
        status = "inconclusive";
      }
      actual = fr.series.to_string();
    } else if (cmd_betti->parsed() || cmd_koszul->parsed()) {
      int n = 0;
      Ideal<Rational> I = load_ideal(c, &n);
      c.n = n;
      if (c.field == "q") c.field = "fp";  // modular default for Betti work
      uint32_t p = field_prime(c.field);
      MonomialOrder order = parse_order(c.order_text, n);
      auto run = [&](auto ctx) {
        using K = decltype(ctx.zero());
        Ideal<K> If = convert_ideal<K>(I, ctx);
        if (cmd_betti->parsed()) {
          int jm = j_max >= 0 ? j_max : i_max + n;
          return betti_over_E(If, i_max, jm, ctx);
        }
        return koszul_betti_bounded(If, order, i_max, ctx);
      };
      BettiTable table = p == 0 ? run(FieldCtx<Rational>{}) : run(FieldCtx<Fp>{p});
      std::cout << table.to_string();
      if (p != 0)
        std::cout << "(modular backend F" << p
                  << "; characteristic-0 Betti numbers could differ)\n";
      if (cmd_koszul->parsed()) {
        auto off = table.off_diagonal();
        if (off.empty()) {
          std::cout << "no off-diagonal entries through i = " << i_max
                    << " (bounded evidence, not a proof)\n";
          status = "inconclusive";
        } else {
          std::cout << "off-diagonal entries:";
          for (auto [i, j] : off) std::cout << " (" << i << "," << j << ")";
          std::cout << "\nNOT Koszul\n";
          status = "fail";
        }
      }
      actual = std::to_string(table.entries.size()) + " nonzero entries";
    } else if (cmd_gsearch->parsed()) {
      auto found =
          search_by_series(v_min, v_max, edge_count, parse_hilbert(hs_text), ignore_isolated);
      for (auto& g : found) {
        std::cout << "v " << g.vertex_count << ":";
        for (auto [a, b] : g.edges) std::cout << " " << a << "-" << b;
        std::cout << "\n";
      }
      std::cout << found.size() << " isomorphism classes\n";
      actual = std::to_string(found.size()) + " classes";
    } else if (cmd_regular->parsed()) {
      int n = 0;
      Ideal<Rational> I = load_ideal(c, &n);
      c.n = n;
      QuotientAlgebra<Rational> A(I, parse_order(c.order_text, n));
      auto form = LinearForm<Rational>::from_element(parse_element(form_text, n));
      RegularityCertificate<Rational> cert = is_regular(form, A);
      if (cert.regular) {
        std::cout << "regular\n";
      } else {
        std::cout << "singular; witness " << to_string(cert.witness) << "\n";
        status = "fail";
      }
      actual = cert.regular ? "regular" : "singular";
    } else if (cmd_depth->parsed()) {
      int n = 0;
      Ideal<Rational> I = load_ideal(c, &n);
      c.n = n;
      QuotientAlgebra<Rational> A(I, parse_order(c.order_text, n));
      DepthProbe probe = depth_probe(A, trials, c.seed);
      std::cout << "certified depth >= " << probe.certified_lower_bound << "\n";
      if (probe.certified_complete) {
        std::cout << "depth = " << probe.certified_lower_bound << " (certified)\n";
      } else {
        std::cout << "probable depth = " << probe.probable_depth << " (Monte-Carlo: "
                  << probe.failed_trials << " failed attempts at the next step)\n";
        status = "inconclusive";
      }
      for (auto& w : probe.witnesses)
        std::cout << "  regular form: " << to_string(w.element()) << "\n";
      actual = "certified " + std::to_string(probe.certified_lower_bound);
    } else if (cmd_quotient->parsed()) {
      int n = 0;
      Ideal<Rational> I = load_ideal(c, &n);
      c.n = n;
      QuotientAlgebra<Rational> A(I, parse_order(c.order_text, n));
      auto form = LinearForm<Rational>::from_element(parse_element(form_text, n));
      RegularityCertificate<Rational> cert = is_regular(form, A);
      if (!cert.regular) {
        std::cout << "form is singular; refusing (witness " << to_string(cert.witness)
                  << ")\n";
        status = "fail";
        actual = "singular";
      } else {
        QuotientByLinear<Rational> q = quotient_by_linear(A, cert);
        std::cout << "eliminated e" << q.eliminated_variable << "; presentation over "
                  << q.algebra.ambient_n() << " variables:\n";
        for (auto& g : q.algebra.groebner().elements) std::cout << "  " << to_string(g) << "\n";
        std::cout << "Hilbert series: " << q.algebra.hilbert().to_string() << "\n";
        actual = q.algebra.hilbert().to_string();
      }
    } else if (cmd_lg->parsed()) {
      LGSearchResult res = lg_obstruction_search(parse_hilbert(hs_text), d_max);
      for (auto& v : res.per_d) {
        std::cout << "d=" << v.extra << " (v=" << v.vertices << ", e=" << v.edges
                  << "): " << v.candidates.size() << " candidate graphs\n";
      }
      if (res.not_g_quadratic) std::cout << "not G-quadratic (no graph at d=0)\n";
      if (res.obstructed_throughout) {
        std::cout << "obstructed at every tested d (not an unbounded disproof)\n";
        status = "fail";
      } else {
        std::cout << "candidates exist: inconclusive\n";
        status = "inconclusive";
      }
      actual = res.not_g_quadratic ? "not G-quadratic" : "candidates at d=0";
    } else if (cmd_rank->parsed()) {
      if (c.n <= 0) throw UsageError("--n is required");
      ExtElement<Rational> q = parse_element(q_text, c.n);
      size_t r = rank(q);
      std::cout << "rank " << r << "\n";
      QuadricDecomposition<Rational> dec = decompose(q, parse_order(c.order_text, c.n));
      for (auto& f : dec.factors)
        std::cout << "  + (" << to_string(f.alpha) << ") * (" << to_string(f.left) << ") * ("
                  << to_string(f.right) << ")\n";
      actual = "rank " + std::to_string(r);
    } else if (cmd_pencil->parsed()) {
      c.n = 4;
      PencilResult pr =
          rank2_in_pencil(parse_element(q_text, 4), parse_element(q2_text, 4));
      std::cout << "Pf(q1 + x q2) = " << to_string(pr.pfaffian_poly[0]) << " + "
                << to_string(pr.pfaffian_poly[1]) << " x + " << to_string(pr.pfaffian_poly[2])
                << " x^2\n";
      if (pr.identically_deficient) std::cout << "identically rank-deficient pencil\n";
      for (auto& rt : pr.rational_roots) std::cout << "rational root " << to_string(rt) << "\n";
      if (pr.q2_deficient) std::cout << "q2 itself has rank <= 2 (the infinite endpoint)\n";
      if (pr.discriminant)
        std::cout << "no rational root; discriminant " << to_string(*pr.discriminant)
                  << (sgn(*pr.discriminant) < 0 ? " (complex conjugate roots)"
                                                : " (quadratic irrational roots)")
                  << "\n";
      if (pr.witness) {
        std::cout << "rank-2 witness: " << to_string(*pr.witness) << "\n";
        actual = "witness found";
      } else {
        status = "inconclusive";
        actual = "no rational witness";
      }
    } else if (cmd_minrank->parsed()) {
      int n = 0;
      Ideal<Rational> I = load_ideal(c, &n);
      c.n = n;
      MinRankSample<Rational> mr = min_rank_sample(I.generators, samples, c.seed);
      std::cout << "minimum rank found: " << mr.min_rank << " (over " << samples
                << " samples plus deterministic probes; evidence only for the minimum)\n";
      actual = "min rank " + std::to_string(mr.min_rank);
    } else if (cmd_generic->parsed()) {
      if (c.n <= 0) throw UsageError("--n is required");
      Ideal<Rational> I = generic_quadrics(c.n, t_count, c.seed, bound);
      std::cout << "seed " << c.seed << "\n";
      for (auto& g : I.generators) std::cout << to_string(g) << "\n";
      HilbertSeries hs = hilbert_series(I, MonomialOrder(OrderKind::degrevlex, c.n));
      std::cout << "Hilbert series: " << hs.to_string() << "\n";
      actual = hs.to_string();
    } else if (cmd_scan->parsed()) {
      int n = 0;
      Ideal<Rational> I = load_ideal(c, &n);
      c.n = n;
      QuadraticScanResult res = fixed_coordinate_quadratic_scan(I);
      std::cout << res.bases_examined << " leading-term sets examined\n";
      if (res.certificate) {
        std::cout << "certificate: no quadratic Groebner basis in these coordinates\n";
        actual = "certificate";
      } else {
        std::cout << "inconclusive; surviving candidate leading-term sets:\n";
        for (auto& cand : res.candidates) {
          std::cout << " ";
          for (Monomial m : cand) std::cout << " " << to_string(m);
          std::cout << "\n";
        }
        status = "inconclusive";
        actual = std::to_string(res.candidates.size()) + " candidates";
      }
    } else if (cmd_verify->parsed()) {
      VerifyOptions vo;
      vo.seed = c.seed;
      vo.include_slow = !skip_slow;
      vo.corrupt = corrupt;
      Report rep = verify_paper(vo);
      for (auto& ch : rep.checks)
        std::cout << (ch.status == "pass" ? "PASS " : "FAIL ") << ch.name << " ["
                  << ch.paper_ref << "] (" << ch.runtime_ms << " ms)\n"
                  << "      expected: " << ch.expected << "\n      actual:   " << ch.actual
                  << "\n";
      std::cout << "overall: " << rep.overall() << "\n";
      if (!c.json_path.empty()) rep.write(c.json_path);
      return rep.all_passed() ? kExitPass : kExitFail;
    }

    emit_json(c, command, status, expected, actual, sw.ms());
    return status_code(status);
  } catch (const extq::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
