// hypsys command-line tool.

#include <array>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "hypsys/diagram.hpp"
#include "hypsys/errors.hpp"
#include "hypsys/families.hpp"
#include "hypsys/io.hpp"
#include "hypsys/matrix.hpp"
#include "hypsys/roots.hpp"
#include "hypsys/search.hpp"
#include "hypsys/suspension.hpp"
#include "hypsys/verify.hpp"
#include "hypsys/zrl.hpp"

using namespace hypsys;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitCheckFailed = 4;

struct Global {
  int precision = 0;
  int threads = 1;
  int max_depth = 0;
  double time_budget = 0;
  bool no_header = false;
  std::string format = "text";
};

struct Args {
  int n = 0;
  std::string bound = "2";
  int g_min = 2, g_max = 3;
  int k = 0, l = 0;
  std::string word;
  std::string start;
  std::string suite = "lemmas";
  int n_max = 30;
  bool stats = false;
  bool trace = false;
  int samples = 100;
  std::uint64_t seed = 1;
};

SearchConfig search_config(const Global& g, int n) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.threads = g.threads;
  cfg.max_depth = g.max_depth;
  cfg.time_budget = g.time_budget;
  return cfg;
}

void header(const Global& g, const std::string& sub, const CLI::App& app) {
  if (g.no_header) return;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::cerr << "# hypsys " << sub << " " << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ") << "\n# config:";
  // echo every option that was given or has a default
  const std::array<const CLI::App*, 2> apps{&app, app.get_subcommand(sub)};
  for (const CLI::App* a : apps)
    for (const CLI::Option* o : a->get_options()) {
      if (o->get_name() == "--help" || o->get_name() == "-h") continue;
      const auto res = o->results();
      std::string v = res.empty() ? o->get_default_str() : res.back();
      if (o->get_expected_max() == 0) v = o->count() ? "true" : "false";
      std::cerr << ' ' << o->get_name() << '=' << v;
    }
  std::cerr << " precision_bits=" << default_precision_bits() << '\n';
}

std::string ascending(const IntPolynomial& p) { return p.ascending_string(); }

void print_entry(std::ostream& os, const SpectrumEntry& e) {
  os << "polynomial  " << e.polynomial.to_string() << '\n'
     << "ascending   " << ascending(e.polynomial) << '\n'
     << "root        " << e.root.decimal(14) << '\n'
     << "log root    " << log_decimal(e.root) << '\n'
     << "path        k=" << e.k << " " << format_word(e.word) << '\n'
     << "classes     " << e.class_charpolys.size() << '\n';
}

void print_stats(std::ostream& os, const SearchStats& s) {
  os << "search      nodes=" << s.nodes << " pruned=" << s.pruned << " emitted=" << s.emitted
     << " complete=" << (s.complete() ? "yes" : "no");
  if (s.depth_limited) os << " (depth cap reached)";
  if (s.out_of_time) os << " (time budget reached)";
  os << '\n';
}

int warn_incomplete(const SearchStats& s) {
  if (s.complete()) return 0;
  std::cerr << "warning: search incomplete"
            << (s.depth_limited ? "; a live branch reached max_depth (raise --max-depth)" : "")
            << (s.out_of_time ? "; time budget exhausted" : "") << '\n';
  return kExitIncomplete;
}

RauzyPath path_from(int n, int k, const std::string& word) {
  if (k < 0 || k > n - 2) throw Error(ErrorKind::OutOfRange, "start-k must be in [0, n-2]");
  return RauzyPath::build(central_loop_vertex(n, k), parse_word(word));
}

int run_diagram(const Global&, const Args& a) {
  const RauzyDiagram d = RauzyDiagram::build(a.n);
  if (a.stats) {
    std::cout << "n " << a.n << "\nvertices " << d.size() << "\nedges " << d.edge_count() << "\nstrongly_connected "
              << (d.strongly_connected() ? "yes" : "no") << '\n';
    return 0;
  }
  for (std::uint32_t v = 0; v < d.size(); ++v) {
    const PathCoordinates c = d.coordinates(v);
    std::cout << v << '\t' << d.vertex(v).to_string() << "\t(";
    for (std::size_t i = 0; i < c.parts.size(); ++i) std::cout << (i ? "," : "") << c.parts[i];
    std::cout << ")\tt->" << d.edge(v, Move::RightT).target << "\tb->" << d.edge(v, Move::RightB).target
              << "\ts->" << d.symmetric_of(v) << '\n';
  }
  return 0;
}

int run_systole(const Global& g, const Args& a) {
  const SystoleResult r = systole(a.n, search_config(g, a.n));
  std::cout << "n           " << a.n << " (" << stratum_name(a.n) << ", genus " << genus_of(a.n) << ")\n";
  print_entry(std::cout, r.entry);
  print_stats(std::cout, r.stats);
  return warn_incomplete(r.stats);
}

int run_second(const Global& g, const Args& a) {
  const SystoleResult r = second_length(a.n, search_config(g, a.n));
  std::cout << "n           " << a.n << " (" << stratum_name(a.n) << ", genus " << genus_of(a.n) << ")\n";
  print_entry(std::cout, r.entry);
  print_stats(std::cout, r.stats);
  return warn_incomplete(r.stats);
}

int run_spectrum(const Global& g, const Args& a) {
  SearchConfig cfg = search_config(g, a.n);
  try {
    cfg.bound = mpq_class(a.bound);
    cfg.bound.canonicalize();
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Parse, "bound must be a rational such as 2 or 19/10: " + a.bound);
  }
  const SpectrumResult r = spectrum(cfg);
  if (r.symmetric_only)
    std::cerr << "note: bound > 2, results are symmetric-construction-only (closed-loop maps are not enumerated)\n";
  if (g.format == "json") {
    std::cout << spectrum_json(r);
  } else if (g.format == "csv") {
    std::cout << spectrum_csv(r);
  } else {
    std::cout << "n " << r.n << " (" << stratum_name(r.n) << "), " << r.entries.size() << " distinct values below "
              << a.bound << '\n';
    for (const SpectrumEntry& e : r.entries)
      std::cout << e.root.decimal(14) << "  " << e.polynomial.to_string() << "  k=" << e.k << " "
                << format_word(e.word) << '\n';
    print_stats(std::cout, r.stats);
  }
  return warn_incomplete(r.stats);
}

int run_table(const Global& g, const Args& a) {
  const std::vector<CensusRow> rows = census_table(a.g_min, a.g_max, search_config(g, 4));
  int code = 0;
  if (g.format == "csv") std::cout << "genus,n,count,complete\n";
  for (const CensusRow& r : rows) {
    if (g.format == "csv")
      std::cout << r.genus << ',' << r.n << ',' << r.count << ',' << (r.complete ? "yes" : "no") << '\n';
    else
      std::cout << "g=" << r.genus << "  n=" << r.n << "  count=" << r.count << (r.complete ? "" : "  (incomplete)")
                << '\n';
    if (!r.complete) code = kExitIncomplete;
  }
  if (code) std::cerr << "warning: search incomplete for at least one genus\n";
  return code;
}

int run_charpoly(const Global&, const Args& a) {
  const RauzyPath p = path_from(a.n, a.k, a.word);
  const IntMatrix v = path_matrix(p);
  const IntPolynomial chi = charpoly_exact(v);
  std::cout << "kind        " << (is_symmetric_path(p) ? "symmetric" : "closed") << '\n'
            << "matrix\n" << v.to_string() << "charpoly    " << chi.to_string() << '\n'
            << "ascending   " << ascending(chi) << '\n'
            << "(X+1)*      " << (chi * IntPolynomial{1, 1}).to_string() << '\n'
            << "primitive   " << (is_primitive(v) ? "yes" : "no") << '\n';
  try {
    std::cout << "root        " << perron_root(chi).decimal(14) << '\n';
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoDominantRoot) throw;
    std::cout << "root        none above 1\n";
  }
  return 0;
}

int run_families(const Global&, const Args& a) {
  const int n = a.n, K = K_of(n), L = L_of(n);
  std::cout << "n " << n << "  K_n " << K << "  L_n " << L << '\n';
  auto show = [](const std::string& name, const IntPolynomial& p) {
    std::cout << name << "  " << p.to_string() << "  root " << perron_root(p).decimal(14) << '\n';
  };
  if (a.l > 0) {
    if (n % 2 == 0)
      show("P_{n,K,l}", family_P_nKl_even(n, a.l));
    else
      show("P_{n,K,l}", family_P_nKl_odd(n, a.l));
    return 0;
  }
  for (int k = a.k > 0 ? a.k : 1; k <= (a.k > 0 ? a.k : K); ++k) {
    try {
      show("P_{" + std::to_string(n) + "," + std::to_string(k) + "}", family_P_nk(n, k));
    } catch (const MustReduceError& e) {
      if (a.k > 0) throw;
      std::cout << "P_{" << n << "," << k << "}  reduces to n'=" << e.n_reduced << " k'=" << e.k_reduced << '\n';
    }
  }
  return 0;
}

int run_verify(const Global&, const Args& a) {
  VerifyReport r;
  if (a.suite == "lemmas")
    r = verify_inequalities(a.n_max);
  else if (a.suite == "families")
    r = verify_families(a.n_max);
  else if (a.suite == "rome")
    r = verify_rome(a.n_max);
  else {
    ZrlSuiteOptions o;
    o.samples = a.samples;
    o.seed = a.seed;
    r = verify_zrl(o);
  }
  for (const CheckResult& c : r.checks)
    std::cout << (c.pass ? "PASS" : "FAIL") << '\t' << c.group << '\t' << c.instance << '\t' << c.detail << '\n';
  std::cout << "summary\t" << r.suite << '\t' << r.checks.size() << " checks\t" << r.failures() << " failures\n";
  return r.all_pass() ? 0 : kExitCheckFailed;
}

int run_zrl(const Global&, const Args& a) {
  const RauzyDiagram d = RauzyDiagram::build(a.n);
  const LabeledPermutation start =
      a.start.empty() ? central_loop_vertex(a.n, a.k) : LabeledPermutation::parse(a.start);
  const AdmissiblePath p{start, parse_word(a.word)};
  const ZrlResult r = zrl_normalize(d, p);
  if (a.trace) std::cout << format_trace(r);
  std::cout << "iterations  " << r.iterations << '\n'
            << "start       " << r.path.start.to_string() << '\n'
            << "word        " << format_word(r.path.word) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dilatations of pseudo-Anosov maps on hyperelliptic components"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  Global g;
  Args a;
  app.add_option("--precision", g.precision, "Bit ceiling for exact sign decisions (overrides HYPSYS_PRECISION)")
      ->check(CLI::Range(16, 1 << 20));
  app.add_option("--threads", g.threads, "Worker threads for the search")->check(CLI::Range(1, 256));
  app.add_option("--max-depth", g.max_depth, "Search depth cap; 0 means 6(n-1)")->check(CLI::NonNegativeNumber);
  app.add_option("--time-budget", g.time_budget, "Seconds per search; 0 disables")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-header", g.no_header, "Suppress the timestamp and config header on stderr");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  auto n_opt = [&](CLI::App* s) { return s->add_option("--n", a.n, "Number of letters")->required(); };
  auto* diagram = app.add_subcommand("diagram", "Vertices of D_n, or counts with --stats");
  n_opt(diagram);
  diagram->add_flag("--stats", a.stats);
  auto* sys = app.add_subcommand("systole", "Least dilatation");
  n_opt(sys);
  auto* spec = app.add_subcommand("spectrum", "All distinct dilatations below a bound");
  n_opt(spec);
  spec->add_option("--bound", a.bound, "Rational bound, completeness only claimed for <= 2");
  auto* second = app.add_subcommand("second", "Second least dilatation");
  n_opt(second);
  auto* table = app.add_subcommand("table", "Distinct-value counts per genus");
  table->add_option("--g-min", a.g_min)->required();
  table->add_option("--g-max", a.g_max)->required();
  auto* charpoly = app.add_subcommand("charpoly", "Matrix and characteristic polynomial of a path");
  n_opt(charpoly);
  charpoly->add_option("--start-k", a.k, "Start at π_n.t^k")->required();
  charpoly->add_option("--word", a.word, "Moves, e.g. bbt or b^2 t")->required();
  auto* fam = app.add_subcommand("families", "Closed-form polynomials");
  n_opt(fam);
  auto* kopt = fam->add_option("--k", a.k);
  fam->add_option("--l", a.l)->excludes(kopt);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", a.suite)->check(CLI::IsMember({"lemmas", "families", "zrl", "rome"}));
  verify->add_option("--n-max", a.n_max);
  verify->add_option("--samples", a.samples, "zrl suite: paths per diagram");
  verify->add_option("--seed", a.seed, "zrl suite: sampler seed");
  auto* zrl = app.add_subcommand("zrl", "Normalize a path by ZRL");
  n_opt(zrl);
  auto* zk = zrl->add_option("--start-k", a.k, "Start at π_n.t^k");
  zrl->add_option("--start", a.start, "Start permutation, e.g. \"1 2 6 3 4 5 / 6 1 5 3 2 4\"")->excludes(zk);
  zrl->add_option("--word", a.word)->required();
  zrl->add_flag("--trace", a.trace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (g.precision > 0) setenv("HYPSYS_PRECISION", std::to_string(g.precision).c_str(), 1);

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    header(g, sub, app);
    if (sub == "diagram") return run_diagram(g, a);
    if (sub == "systole") return run_systole(g, a);
    if (sub == "spectrum") return run_spectrum(g, a);
    if (sub == "second") return run_second(g, a);
    if (sub == "table") return run_table(g, a);
    if (sub == "charpoly") return run_charpoly(g, a);
    if (sub == "families") return run_families(g, a);
    if (sub == "verify") return run_verify(g, a);
    if (sub == "zrl") return run_zrl(g, a);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
