#include "kashaev_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kashaev/corpus.hpp"
#include "kashaev/error.hpp"
#include "kashaev/invariants.hpp"
#include "kashaev/matrices.hpp"

namespace kashaev::cli {

namespace {

struct InputOptions {
  std::string path;
  std::string pd;
  std::string corpus;
  int mark = 0;
};

struct Options {
  InputOptions input;
  std::string output;
  double tol = -1;
  std::string theta;
  std::size_t grid_n = 0;
  std::string which = "tau-sym";
  bool reduced = false;
  std::size_t count = 50;
  std::uint64_t seed = 1;
};

std::string read_all(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ColoredDiagram load(const InputOptions& in) {
  const int given = !in.path.empty() + !in.pd.empty() + !in.corpus.empty();
  if (given != 1) throw ValidationError("give exactly one of INPUT, --pd or --corpus");
  std::string text;
  if (!in.pd.empty()) {
    text = in.pd;
  } else if (!in.corpus.empty()) {
    text = corpus_text(in.corpus);
  } else if (in.path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream f(in.path);
    if (!f) throw ValidationError("cannot open '" + in.path + "'");
    text = read_all(f);
  }
  ColoredDiagram d = parse_pd(text);
  if (in.mark != 0) d = d.with_mark(in.mark);
  return d;
}

double tolerance(const Options& o) {
  if (o.tol > 0) return o.tol;
  if (const char* env = std::getenv("KASHAEV_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0) || !std::isfinite(v)) {
      throw ValidationError(std::string("KASHAEV_TOL is not a positive number: '") + env + "'");
    }
    return v;
  }
  return kDefaultTolRel;
}

TorusPoint parse_theta(const std::string& text, int mu) {
  if (text.empty()) throw ValidationError("--theta is required");
  std::vector<double> th;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ValidationError("--theta: '" + item + "' is not a number");
    }
    th.push_back(v);
  }
  if (static_cast<int>(th.size()) != mu) {
    throw ValidationError("--theta has " + std::to_string(th.size()) + " angles, the diagram has " +
                          std::to_string(mu) + " colors");
  }
  return TorusPoint(std::move(th));
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw ValidationError("cannot write '" + o.output + "'");
  f << text;
}

nlohmann::json info_json(const ColoredDiagram& d) {
  const RegionMap r = compute_regions(d);
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : d.components()) {
    nlohmann::json edges = nlohmann::json::array();
    for (int e : c.edges) edges.push_back(d.edge_label(e));
    comps.push_back({{"color", c.color}, {"edges", edges}, {"circle", c.circle}});
  }
  nlohmann::json lk = nlohmann::json::array();
  for (std::size_t a = 0; a < d.num_components(); ++a) {
    for (std::size_t b = a + 1; b < d.num_components(); ++b) {
      lk.push_back({{"components", {a, b}}, {"lk", linking_number(d, a, b)}});
    }
  }
  nlohmann::json signs = nlohmann::json::array();
  for (const auto& x : d.crossings()) signs.push_back(x.sign);
  return {{"crossings", d.num_crossings()},
          {"regions", r.num_regions()},
          {"colors", d.num_colors()},
          {"components", comps},
          {"signs", signs},
          {"w_m", monochromatic_writhe(d)},
          {"linking_numbers", lk},
          {"connected", is_connected(d)},
          {"marked_edge", d.edge_label(d.marked_edge())}};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int do_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  v.random_count = o.count;
  v.seed = o.seed;
  v.tol_rel = tolerance(o);
  const auto rows = run_verify(v);
  std::ostringstream table;
  std::size_t failed = 0;
  for (const auto& r : rows) {
    failed += !r.passed;
    table << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(9) << r.suite << std::setw(40) << r.name
          << r.detail << "\n";
  }
  table << rows.size() - failed << "/" << rows.size() << " checks passed\n";
  emit(o, out, table.str());
  return failed == 0 ? 0 : 2;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input.path, "Colored PD file ('-' for stdin)");
  sub->add_option("--pd", o.input.pd, "Inline colored PD text");
  sub->add_option("--corpus", o.input.corpus, "Built-in diagram name");
  sub->add_option("--mark", o.input.mark, "Marked edge label (color 1)");
  sub->add_option("--tol", o.tol, "Relative eigenvalue threshold (default 1e-9 or KASHAEV_TOL)");
  sub->add_option("-o,--output", o.output, "Write output to this file");
}

void report(std::ostream& err, const std::string& what, const std::string& kind) {
  err << nlohmann::json{{"error", what}, {"kind", kind}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Signature, nullity and Conway function of colored links"};
  app.name("kashaev");
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "Crossings, regions, colors, writhe and linking numbers");
  add_input(info, o);
  auto* sig = app.add_subcommand("signature", "Signature and nullity at a torus point");
  add_input(sig, o);
  sig->add_option("--theta", o.theta, "Comma-separated angles in (0, 2 pi)")->required();
  auto* grid = app.add_subcommand("grid", "Signature on the open n^mu torus grid, as CSV");
  add_input(grid, o);
  grid->add_option("--n", o.grid_n, "Points per axis")->required()->check(CLI::PositiveNumber);
  auto* alex = app.add_subcommand("alexander", "Conway function up to sign and Alexander polynomial");
  add_input(alex, o);
  auto* dm = app.add_subcommand("dump-matrix", "Print tau (numeric), tau-sym (symbolic) or K");
  add_input(dm, o);
  dm->add_option("--which", o.which, "tau | tau-sym | K")->check(CLI::IsMember({"tau", "tau-sym", "K"}));
  dm->add_option("--theta", o.theta, "Angles for --which tau");
  dm->add_flag("--reduced", o.reduced, "Delete the two regions beside the mark");
  auto* ver = app.add_subcommand("verify", "Golden, property and oracle checks");
  ver->add_option("--count", o.count, "Random diagrams in the property suite");
  ver->add_option("--seed", o.seed, "Random seed");
  ver->add_option("--tol", o.tol, "Relative eigenvalue threshold");
  ver->add_option("-o,--output", o.output, "Write the table to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, e.what(), "usage");
    return 1;
  }

  try {
    if (ver->parsed()) return do_verify(o, out);
    const ColoredDiagram d = load(o.input);
    const double tol = tolerance(o);
    if (info->parsed()) {
      emit(o, out, dump(info_json(d)));
    } else if (sig->parsed()) {
      emit(o, out, dump(to_json(signature_at(d, parse_theta(o.theta, d.num_colors()), tol))));
    } else if (grid->parsed()) {
      emit(o, out, grid_csv(signature_grid(d, o.grid_n, tol), static_cast<std::size_t>(d.num_colors())));
    } else if (alex->parsed()) {
      const ConwayResult c = conway(d);
      emit(o, out, dump(to_json(c)));
      if (!c.consistency_ok) throw ConsistencyError("route A squared differs from route B");
    } else if (dm->parsed()) {
      const RegionMap r = compute_regions(d);
      nlohmann::json j;
      if (o.which == "tau") {
        RealSymMatrix m = build_tau_numeric(d, r, parse_theta(o.theta, d.num_colors()));
        j = to_json(o.reduced ? delete_marked(m, d, r) : m);
      } else if (o.which == "tau-sym") {
        SymbolicSymMatrix m = build_tau_symbolic(d, r);
        j = to_json(o.reduced ? delete_marked(m, d, r) : m);
      } else {
        LabelMatrix m = build_K(d, r);
        j = to_json(o.reduced ? delete_marked(m, d, r) : m);
      }
      emit(o, out, dump(j));
    }
    return 0;
  } catch (const ValidationError& e) {
    report(err, e.what(), e.kind());
    return 1;
  } catch (const Error& e) {
    report(err, e.what(), e.kind());
    return 2;
  } catch (const std::exception& e) {
    report(err, e.what(), "internal");
    return 2;
  }
}

}  // namespace kashaev::cli
