#include "curvedim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "curvedim/constructions.hpp"
#include "curvedim/curves.hpp"
#include "curvedim/errors.hpp"
#include "curvedim/plot.hpp"
#include "curvedim/theorems.hpp"

namespace curvedim::cli {

namespace {

// Carries a final exit code out of a subcommand handler.
struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{2, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{2, "cannot write '" + path + "'"};
  out << content;
  if (!out) throw CliError{2, "write to '" + path + "' failed"};
}

NodeSet load_nodes(const std::string& path) {
  try {
    return parse_nodes_text(read_file(path));
  } catch (const ParseError& e) {
    throw CliError{2, path + ":" + std::to_string(e.line()) + ": " + e.what()};
  }
}

std::vector<Poly2> load_polys(const std::string& path) {
  try {
    return parse_polys_text(read_file(path));
  } catch (const ParseError& e) {
    throw CliError{2, path + ":" + std::to_string(e.line()) + ": " + e.what()};
  }
}

std::uint64_t env_default_seed() {
  if (const char* env = std::getenv("CURVEDIM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CliError{2, "CURVEDIM_SEED is not a valid seed"};
    }
  }
  return 0;
}

struct SeedOpts {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string seeds_range;
  int max_attempts = 64;
  int bound = 50;

  SearchBudget budget(std::uint64_t s) const {
    SearchBudget b;
    b.seed = s;
    b.max_attempts = max_attempts;
    b.coordinate_bound = bound;
    return b;
  }

  std::uint64_t single_seed() const {
    return seed_given ? seed : env_default_seed();
  }

  std::vector<std::uint64_t> seed_list() const {
    if (seeds_range.empty()) return {single_seed()};
    const auto dots = seeds_range.find("..");
    if (dots == std::string::npos) {
      throw CliError{2, "--seeds expects A..B"};
    }
    try {
      const std::uint64_t a = std::stoull(seeds_range.substr(0, dots));
      const std::uint64_t b = std::stoull(seeds_range.substr(dots + 2));
      if (b < a) throw CliError{2, "--seeds range is empty"};
      std::vector<std::uint64_t> seeds;
      for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
      return seeds;
    } catch (const std::invalid_argument&) {
      throw CliError{2, "--seeds expects A..B"};
    } catch (const std::out_of_range&) {
      throw CliError{2, "--seeds range is out of range"};
    }
  }
};

void add_seed_opts(CLI::App* cmd, SeedOpts& opts, bool with_range) {
  cmd->add_option("--seed", opts.seed, "seed (default: $CURVEDIM_SEED)");
  if (with_range) {
    cmd->add_option("--seeds", opts.seeds_range,
                    "inclusive seed sweep A..B (overrides --seed)");
  }
  cmd->add_option("--max-attempts", opts.max_attempts,
                  "attempt budget for randomized searches");
  cmd->add_option("--bound", opts.bound, "coordinate bound for sampling");
}

int run_analyze(std::ostream& out, const std::string& file, int n,
                const std::string& expect) {
  const NodeSet x = load_nodes(file);
  const bool independent = is_independent(x, n);
  const bool poised = is_poised(x, n);
  const std::size_t dim = dim_vanishing(x, n);
  const auto subset = max_independent_subset_indices(x, n);
  out << "nodes: " << x.size() << "\n";
  out << "independent(n=" << n << "): " << (independent ? "yes" : "no")
      << "\n";
  out << "poised(n=" << n << "): " << (poised ? "yes" : "no") << "\n";
  out << "dim P_{" << n << ",X}: " << dim << "\n";
  out << "max independent subset: " << subset.size() << "\n";
  if (expect == "independent" && !independent) return 1;
  if (expect == "poised" && !poised) return 1;
  return 0;
}

int run_vanishing(std::ostream& out, const std::string& file, int n,
                  const std::string& out_path) {
  const NodeSet x = load_nodes(file);
  const VanishingSpace space = vanishing_basis(x, n);
  out << "dim " << space.dim() << "\n";
  std::string text;
  for (const Poly2& p : space.basis) text += write_poly_text(p);
  out << text;
  if (!out_path.empty()) write_file(out_path, text);
  return 0;
}

int run_fundamental(std::ostream& out, const std::string& file, int n,
                    std::size_t idx, const std::string& out_path) {
  const NodeSet x = load_nodes(file);
  if (idx >= x.size()) throw CliError{2, "--node index out of range"};
  const auto p = fundamental_polynomial(x, idx, n);
  if (!p) {
    out << "none\n";
    return 1;
  }
  const std::string text = write_poly_text(*p);
  out << text;
  if (!out_path.empty()) write_file(out_path, text);
  return 0;
}

int run_detect(std::ostream& out, const std::string& file, int n, int k,
               std::size_t m, const std::string& out_path) {
  const NodeSet x = load_nodes(file);
  const int curve_degree = k - static_cast<int>(m);
  if (curve_degree < 1) {
    throw CliError{2, "k - m must be at least 1 (curve degree)"};
  }
  if (!is_independent(x, n)) {
    throw CliError{2, "node set is not " + std::to_string(n) +
                          "-independent; the detector requires it"};
  }
  const auto found = detect_maximal_all_but(x, n, curve_degree, m);
  if (!found) {
    out << "no maximal-curve exclusion found\n";
    return 1;
  }
  out << "excluded:";
  for (std::size_t i : found->excluded) out << " " << i;
  out << "\n";
  const std::string text = write_poly_text(found->curve.poly);
  out << text;
  if (!out_path.empty()) write_file(out_path, text);
  return 0;
}

int run_verify(std::ostream& out, const std::string& statement, int n, int k,
               const SeedOpts& opts) {
  const std::vector<std::uint64_t> seeds = opts.seed_list();
  std::size_t pass = 0, fail = 0, inconclusive = 0;
  bool first = true;
  for (const std::uint64_t s : seeds) {
    VerifierReport report;
    if (statement == "thm31") {
      report = verify_unique_curve(n, k, s, opts.budget(s));
    } else if (statement == "thm32") {
      report = verify_two_curves(n, k, s, opts.budget(s));
    } else if (statement == "thm33") {
      report = verify_four_curves(n, k, s, opts.budget(s));
    } else if (statement == "line4") {
      const auto lines = random_lines_general_position(
          static_cast<std::size_t>(n) + 2, opts.budget(s));
      report = verify_corollary_line4(chung_yao(lines), s);
    } else {
      throw CliError{2, "unknown statement '" + statement + "'"};
    }
    if (!first) out << "\n";
    first = false;
    out << report.to_text();
    switch (report.verdict) {
      case Verdict::pass:
        ++pass;
        break;
      case Verdict::fail:
        ++fail;
        break;
      default:
        ++inconclusive;
        break;
    }
  }
  if (seeds.size() > 1) {
    out << "\nSUMMARY statement=" << statement << " seeds=" << seeds.front()
        << ".." << seeds.back() << " pass=" << pass << " fail=" << fail
        << " inconclusive=" << inconclusive << "\n";
  }
  return fail > 0 || inconclusive > 0 ? 1 : 0;
}

int run_gen(std::ostream& out, const std::string& kind, int n, int k,
            std::size_t count, const SeedOpts& opts,
            const std::string& out_path, const std::string& curve_out,
            const std::string& lines_out) {
  const SearchBudget budget = opts.budget(opts.single_seed());
  if (kind == "chungyao") {
    const auto lines = random_lines_general_position(
        static_cast<std::size_t>(n) + 2, budget);
    const ChungYaoLattice lat = chung_yao(lines);
    write_file(out_path, write_nodes_text(lat.nodes));
    if (!lines_out.empty()) {
      std::string text;
      for (const Line& l : lat.lines) text += write_poly_text(l.to_poly());
      write_file(lines_out, text);
    }
    out << "chung-yao lattice: n=" << n << " lines=" << lat.lines.size()
        << " nodes=" << lat.nodes.size() << "\n";
    return 0;
  }
  if (kind == "random") {
    if (count == 0) throw CliError{2, "--count is required for 'random'"};
    const NodeSet x = random_independent_nodeset(count, n, budget);
    write_file(out_path, write_nodes_text(x));
    out << "random " << n << "-independent set: nodes=" << x.size() << "\n";
    return 0;
  }

  PlantedConfig cfg;
  if (kind == "thm31") {
    cfg = plant_on_curve_config(n, k, dnk(n, k - 1) + 2, 0, budget);
  } else if (kind == "thm32") {
    cfg = plant_on_curve_config(n, k - 1, dnk(n, k - 1), 1, budget);
  } else if (kind == "thm33") {
    cfg = plant_on_curve_config(n, k - 2, dnk(n, k - 2), 2, budget);
  } else {
    throw CliError{2, "unknown generator '" + kind + "'"};
  }
  write_file(out_path, write_nodes_text(cfg.nodes));
  if (!curve_out.empty()) {
    write_file(curve_out, write_poly_text(cfg.param_curve().implicit_poly()));
  }
  out << kind << " configuration: nodes=" << cfg.nodes.size()
      << " off-curve:";
  for (std::size_t i : cfg.off_curve) out << " " << i;
  out << "\n";
  return 0;
}

int run_plot(std::ostream& out, const std::string& file,
             const std::vector<std::string>& curve_files,
             const std::string& highlight, const std::string& out_path) {
  PlotSpec spec;
  spec.nodes = load_nodes(file);
  if (!highlight.empty()) {
    std::istringstream ss(highlight);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        const std::size_t idx = std::stoull(tok);
        if (idx >= spec.nodes.size()) {
          throw CliError{2, "--highlight index out of range"};
        }
        spec.highlighted.push_back(idx);
      } catch (const std::invalid_argument&) {
        throw CliError{2, "--highlight expects comma-separated indices"};
      } catch (const std::out_of_range&) {
        throw CliError{2, "--highlight index out of range"};
      }
    }
  }
  for (const std::string& cf : curve_files) {
    for (const Poly2& p : load_polys(cf)) {
      if (p.effective_degree() < 1) {
        throw CliError{2, cf + ": constant polynomial is not a curve"};
      }
      spec.curves.push_back(plot_item_for_poly(p));
    }
  }
  write_file(out_path, render_svg(spec));
  out << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "exact toolkit for poisedness, vanishing polynomial spaces, and "
      "maximal curves of planar rational node sets"};
  app.name("curvedim");
  app.require_subcommand(1);

  // analyze
  std::string an_file, an_expect;
  int an_n = 0;
  auto* analyze = app.add_subcommand("analyze", "node-set summary");
  analyze->add_option("file", an_file, "node file")->required();
  analyze->add_option("--n", an_n, "degree n")->required();
  analyze->add_option("--expect", an_expect, "independent|poised")
      ->check(CLI::IsMember({"independent", "poised"}));

  // vanishing
  std::string va_file, va_out;
  int va_n = 0;
  auto* vanishing =
      app.add_subcommand("vanishing", "basis of the vanishing space");
  vanishing->add_option("file", va_file, "node file")->required();
  vanishing->add_option("--n", va_n, "degree n")->required();
  vanishing->add_option("-o,--out", va_out, "write the basis to a file");

  // fundamental
  std::string fu_file, fu_out;
  int fu_n = 0;
  std::size_t fu_idx = 0;
  auto* fundamental =
      app.add_subcommand("fundamental", "fundamental polynomial of a node");
  fundamental->add_option("file", fu_file, "node file")->required();
  fundamental->add_option("--n", fu_n, "degree n")->required();
  fundamental->add_option("--node", fu_idx, "node index")->required();
  fundamental->add_option("-o,--out", fu_out, "write the polynomial");

  // detect
  std::string de_file, de_out;
  int de_n = 0, de_k = 0;
  std::size_t de_m = 2;
  auto* detect = app.add_subcommand(
      "detect", "all-but-m maximal curve of degree k-m through the set");
  detect->add_option("file", de_file, "node file")->required();
  detect->add_option("--n", de_n, "degree n")->required();
  detect->add_option("--k", de_k, "statement degree k")->required();
  detect->add_option("--m", de_m, "excluded node count (default 2)");
  detect->add_option("-o,--out", de_out, "write the curve");

  // verify
  std::string ve_statement;
  int ve_n = 0, ve_k = 0;
  SeedOpts ve_opts;
  auto* verify =
      app.add_subcommand("verify", "statement verifier with seeded sweeps");
  verify->add_option("statement", ve_statement, "thm31|thm32|thm33|line4")
      ->required()
      ->check(CLI::IsMember({"thm31", "thm32", "thm33", "line4"}));
  verify->add_option("--n", ve_n, "degree n")->required();
  verify->add_option("--k", ve_k, "degree k (unused for line4)");
  add_seed_opts(verify, ve_opts, true);

  // gen
  std::string ge_kind, ge_out, ge_curve_out, ge_lines_out;
  int ge_n = 0, ge_k = 0;
  std::size_t ge_count = 0;
  SeedOpts ge_opts;
  auto* gen = app.add_subcommand("gen", "test-corpus generators");
  gen->add_option("kind", ge_kind, "chungyao|thm31|thm32|thm33|random")
      ->required()
      ->check(CLI::IsMember({"chungyao", "thm31", "thm32", "thm33", "random"}));
  gen->add_option("--n", ge_n, "degree n")->required();
  gen->add_option("--k", ge_k, "degree k for the thm generators");
  gen->add_option("--count", ge_count, "node count for 'random'");
  gen->add_option("-o,--out", ge_out, "node file to write")->required();
  gen->add_option("--curve-out", ge_curve_out, "write the planted curve");
  gen->add_option("--lines-out", ge_lines_out, "write the lattice lines");
  add_seed_opts(gen, ge_opts, false);

  // plot
  std::string pl_file, pl_highlight, pl_out;
  std::vector<std::string> pl_curves;
  auto* plot = app.add_subcommand("plot", "SVG figure of nodes and curves");
  plot->add_option("file", pl_file, "node file")->required();
  plot->add_option("--curve", pl_curves, "curve file (repeatable)");
  plot->add_option("--highlight", pl_highlight, "comma-separated indices");
  plot->add_option("-o,--out", pl_out, "SVG path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  ve_opts.seed_given = verify->count("--seed") > 0;
  ge_opts.seed_given = gen->count("--seed") > 0;

  try {
    if (*analyze) return run_analyze(out, an_file, an_n, an_expect);
    if (*vanishing) return run_vanishing(out, va_file, va_n, va_out);
    if (*fundamental) {
      return run_fundamental(out, fu_file, fu_n, fu_idx, fu_out);
    }
    if (*detect) return run_detect(out, de_file, de_n, de_k, de_m, de_out);
    if (*verify) return run_verify(out, ve_statement, ve_n, ve_k, ve_opts);
    if (*gen) {
      return run_gen(out, ge_kind, ge_n, ge_k, ge_count, ge_opts, ge_out,
                     ge_curve_out, ge_lines_out);
    }
    if (*plot) return run_plot(out, pl_file, pl_curves, pl_highlight, pl_out);
  } catch (const CliError& e) {
    err << "curvedim: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << "curvedim: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "curvedim: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "curvedim: " << e.what() << "\n";
    return 1;
  } catch (const ReplacementError& e) {
    err << "curvedim: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "curvedim: internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace curvedim::cli
