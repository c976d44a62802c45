// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: curvedim_acceptance [--cli /path/to/curvedim]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "curvedim/theorems.hpp"
#include "oracles.hpp"

using namespace curvedim;

namespace {

std::string g_cli_path;

SearchBudget seeded(std::uint64_t seed) {
  SearchBudget b;
  b.seed = seed;
  return b;
}

struct Criterion {
  std::string name;
  double time_limit_s;  // 0 = unlimited
  std::function<bool(std::string&)> body;
};

const Poly2 kUnitCircle(2, {Rational(1), Rational(0), Rational(0),
                            Rational(-1), Rational(0), Rational(-1)});

// 1. planted 11-on-circle + 2: dim = 4 exactly, detector recovers the
//    circle and the pair, 20 seeds.
bool criterion_thm33_inverse(std::string& detail) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PlantedConfig cfg = plant_on_curve_config(5, 2, 11, 2, seeded(seed));
    if (cfg.components[0].implicit_poly() != kUnitCircle) {
      detail = "seed " + std::to_string(seed) + ": curve is not the unit circle";
      return false;
    }
    for (std::size_t i = 0; i < 11; ++i) {
      if (eval(kUnitCircle, cfg.nodes[i]) != 0) {
        detail = "seed " + std::to_string(seed) + ": node off the circle";
        return false;
      }
    }
    if (!is_independent(cfg.nodes, 5)) {
      detail = "seed " + std::to_string(seed) + ": set not 5-independent";
      return false;
    }
    const std::size_t dim = dim_vanishing(cfg.nodes, 4);
    if (dim != 4) {
      detail = "seed " + std::to_string(seed) + ": dim " +
               std::to_string(dim) + " != 4";
      return false;
    }
    const auto det = detect_maximal_all_but(cfg.nodes, 5, 2, 2);
    if (!det || det->curve.poly != kUnitCircle ||
        det->excluded != std::vector<std::size_t>{11, 12}) {
      detail = "seed " + std::to_string(seed) + ": detector missed the plant";
      return false;
    }
  }
  detail = "20 seeds, dim = 4 exactly, circle + pair recovered";
  return true;
}

// 2. bound: 200 mixed 5-independent 13-node sets, dim <= 4, detector
//    resolves every dim = 4 instance.
bool criterion_thm33_bound(std::string& detail) {
  std::size_t dim_counts[5] = {0, 0, 0, 0, 0};
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    NodeSet nodes;
    switch (seed % 5) {
      case 0:
        nodes = random_independent_nodeset(13, 5, seeded(seed));
        break;
      case 1:
        nodes = plant_on_curve_config(5, 2, 11, 2, seeded(seed)).nodes;
        break;
      case 2:  // all 13 on a line*circle cubic
        nodes = plant_on_curve_config(5, 3, 13, 0, seeded(seed)).nodes;
        break;
      case 3:  // maximal line + generic rest
        nodes = plant_on_curve_config(5, 1, 6, 7, seeded(seed)).nodes;
        break;
      default:  // near-degenerate: 10 on the circle + 3 generic
        nodes = plant_on_curve_config(5, 2, 10, 3, seeded(seed)).nodes;
        break;
    }
    if (nodes.size() != 13 || !is_independent(nodes, 5)) {
      detail = "seed " + std::to_string(seed) + ": generator broke the contract";
      return false;
    }
    const std::size_t dim = dim_vanishing(nodes, 4);
    if (dim > 4) {
      detail = "seed " + std::to_string(seed) + ": dim " +
               std::to_string(dim) + " exceeds 4 (counterexample!)";
      return false;
    }
    ++dim_counts[dim];
    // characterization: dim = 4 exactly when an all-but-two maximal
    // conic exists
    const bool detected = detect_maximal_all_but(nodes, 5, 2, 2).has_value();
    if (detected != (dim == 4)) {
      detail = "seed " + std::to_string(seed) + ": dim " +
               std::to_string(dim) +
               (detected ? " with" : " without") + " a detector witness";
      return false;
    }
  }
  std::ostringstream os;
  os << "200 sets, zero violations; dim histogram 0..4 = " << dim_counts[0];
  for (int d = 1; d <= 4; ++d) os << "/" << dim_counts[d];
  detail = os.str();
  return true;
}

// 3. unique curve at n=5, k=3 over 20 seeds, exact equality.
bool criterion_thm31(std::string& detail) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const VerifierReport r = verify_unique_curve(5, 3, seed);
    if (r.verdict != Verdict::pass) {
      detail = "seed " + std::to_string(seed) + ": " + to_string(r.verdict);
      return false;
    }
  }
  detail = "20 seeds, dim = 1 and exact curve recovery";
  return true;
}

// 4. two curves at n=5, k=4 over 20 seeds.
bool criterion_thm32(std::string& detail) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const VerifierReport r = verify_two_curves(5, 4, seed);
    if (r.verdict != Verdict::pass) {
      detail = "seed " + std::to_string(seed) + ": " + to_string(r.verdict);
      return false;
    }
  }
  detail = "20 seeds, dim = 2 and m=1 detection";
  return true;
}

// 5. dim formula vs greedy subset on 500 sets; exhaustive oracle <= 6.
bool criterion_dim_formula(std::string& detail) {
  Rng rng(20260810);
  std::size_t oracle_checked = 0;
  for (int round = 0; round < 500; ++round) {
    const int n = static_cast<int>(rng.below(6));
    const std::size_t count = 1 + rng.below(15);
    const long long box = 1 + static_cast<long long>(rng.below(6));
    NodeSet x;
    const bool line_heavy = rng.below(3) == 0;
    std::size_t guard = 0;
    while (x.size() < count && guard++ < 4000) {
      Point p{Rational(rng.in_range(-box, box)),
              Rational(rng.in_range(-box, box))};
      if (line_heavy && x.size() % 2 == 0) p.y = 0;
      if (!x.contains(p)) x.push_back(p);
    }
    if (x.size() != count) continue;
    const std::size_t dim = dim_vanishing(x, n);
    const std::size_t greedy = max_independent_subset_indices(x, n).size();
    if (dim + greedy != static_cast<std::size_t>(poly_space_dim(n))) {
      detail = "round " + std::to_string(round) + ": dim formula broke";
      return false;
    }
    if (count <= 6) {
      ++oracle_checked;
      if (greedy != testing::exhaustive_max_independent_size(x, n)) {
        detail = "round " + std::to_string(round) +
                 ": greedy subset disagrees with the exhaustive oracle";
        return false;
      }
    }
  }
  detail = "500 sets, " + std::to_string(oracle_checked) +
           " exhaustive-oracle cross-checks";
  return true;
}

// 6. curve capacity: d(n,k)+1 on-curve nodes dependent; maximal sets
//    force divisibility of the whole vanishing basis.
bool criterion_curve_capacity(std::string& detail) {
  Rng rng(3141);
  std::size_t cases = 0;
  for (int round = 0; round < 100; ++round) {
    const int kind = round % 5;
    std::vector<CurveComponent> components;
    const auto random_line = [&rng]() {
      for (;;) {
        const Rational a(rng.in_range(-5, 5));
        const Rational b(rng.in_range(-5, 5));
        if (a == 0 && b == 0) continue;
        return Line::from_coeffs(a, b, Rational(rng.in_range(-5, 5)));
      }
    };
    const auto random_affine_circle = [&rng]() {
      std::array<Rational, 4> m;
      do {
        for (auto& e : m) e = Rational(rng.in_range(-3, 3));
      } while (m[0] * m[3] - m[1] * m[2] == 0);
      return CurveComponent::affine_circle(
          m, Point{Rational(rng.in_range(-3, 3)),
                   Rational(rng.in_range(-3, 3))});
    };
    try {
      switch (kind) {
        case 0: components = {CurveComponent::line(random_line())}; break;
        case 1: components = {CurveComponent::circle()}; break;
        case 2: components = {random_affine_circle()}; break;
        case 3:
          components = {CurveComponent::line(random_line()),
                        CurveComponent::line(random_line())};
          break;
        default:
          components = {CurveComponent::line(random_line()),
                        CurveComponent::circle()};
          break;
      }
    } catch (const std::invalid_argument&) {
      continue;  // coincident random components; next round
    }
    ParamCurve curve{components};
    const int k = curve.degree();
    const int n = k + static_cast<int>(rng.below(
                          static_cast<std::uint64_t>(7 - k)));
    const std::size_t d = dnk(n, k);

    const NodeSet over = sample_on_curve(curve, d + 1, seeded(rng.next()));
    if (is_independent(over, n)) {
      detail = "round " + std::to_string(round) +
               ": d(n,k)+1 on-curve nodes came out independent";
      return false;
    }
    const NodeSet maximal =
        extend_on_curve_to_maximal(NodeSet(), curve, n, seeded(rng.next()));
    const VanishingSpace space = vanishing_basis(maximal, n);
    if (space.dim() != static_cast<std::size_t>(poly_space_dim(n)) - d) {
      detail = "round " + std::to_string(round) + ": wrong vanishing dim";
      return false;
    }
    for (const Poly2& p : space.basis) {
      if (!divide_exact(p, curve.implicit_poly())) {
        detail = "round " + std::to_string(round) +
                 ": a vanishing polynomial is not divisible by the curve";
        return false;
      }
    }
    ++cases;
  }
  if (cases < 100) {
    detail = "only " + std::to_string(cases) + " usable cases";
    return false;
  }
  detail = std::to_string(cases) + " cases, zero exceptions";
  return true;
}

// 7. four-node-line census on chung-yao lattices.
bool criterion_line_census(std::string& detail) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    SearchBudget b = seeded(seed);
    b.coordinate_bound = 9;
    const ChungYaoLattice lat =
        chung_yao(random_lines_general_position(5, b));
    const auto census = line4_census(lat);
    std::size_t construction_entries = 0;
    for (const auto& entry : census) {
      if (!entry.construction_line) continue;
      ++construction_entries;
      if (entry.nodes_on.size() != 4 || entry.users.size() != 6) {
        detail = "n=3 seed " + std::to_string(seed) +
                 ": construction line without 4 nodes / 6 users";
        return false;
      }
    }
    if (construction_entries != 5) {
      detail = "n=3 seed " + std::to_string(seed) + ": expected 5 lines, got " +
               std::to_string(construction_entries);
      return false;
    }
    if (judge_line4(lat, census, seed).verdict != Verdict::pass) {
      detail = "n=3 seed " + std::to_string(seed) + ": GC_2 judgement failed";
      return false;
    }
  }
  for (int n = 4; n <= 5; ++n) {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      SearchBudget b = seeded(seed * 17 + n);
      b.coordinate_bound = 9;
      const ChungYaoLattice lat = chung_yao(random_lines_general_position(
          static_cast<std::size_t>(n) + 2, b));
      const VerifierReport r = verify_corollary_line4(lat, seed);
      if (r.verdict != Verdict::pass) {
        detail = "n=" + std::to_string(n) + " seed " + std::to_string(seed) +
                 ": usage census failed";
        return false;
      }
    }
  }
  detail = "n=3: 5 lines x 4 nodes x 6 users, GC_2 verified; n=4,5 clean";
  return true;
}

// 8. pairing greedy vs exhaustive matching oracle, 200 configurations.
bool criterion_pairing(std::string& detail) {
  Rng rng(888);
  std::size_t checked = 0, infeasible = 0;
  while (checked < 200) {
    const std::size_t line_count = 2 + rng.below(4);
    std::vector<Line> lines;
    for (std::size_t i = 0; i < line_count; ++i) {
      lines.push_back(Line::from_coeffs(Rational(0), Rational(1),
                                        Rational(-static_cast<long long>(i))));
    }
    const std::size_t m = 1 + rng.below(4);
    std::vector<Point> pts;
    std::size_t guard = 0;
    while (pts.size() < 2 * m && guard++ < 100) {
      const Point p{Rational(rng.in_range(-8, 8)),
                    Rational(rng.below(line_count))};
      bool dup = false;
      for (const Point& q : pts) {
        if (q == p) dup = true;
      }
      if (!dup) pts.push_back(p);
    }
    if (pts.size() != 2 * m) continue;
    const auto greedy = pair_partition(lines, pts);
    const bool feasible = testing::matching_feasible_oracle(lines, pts);
    if (greedy.has_value() != feasible) {
      detail = "config " + std::to_string(checked) +
               ": greedy feasibility disagrees with the oracle";
      return false;
    }
    if (greedy) {
      std::vector<bool> used(pts.size(), false);
      for (const auto& [a, b] : *greedy) {
        if (used[a] || used[b] || pts[a].y == pts[b].y) {
          detail = "config " + std::to_string(checked) + ": invalid pairing";
          return false;
        }
        used[a] = used[b] = true;
      }
    } else {
      ++infeasible;
    }
    ++checked;
  }
  detail = "200 configurations (" + std::to_string(infeasible) +
           " infeasible), full agreement";
  return true;
}

std::string run_command(const std::string& cmd, bool& ok) {
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    ok = false;
    return output;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  ok = pclose(pipe) == 0;
  return output;
}

// 9. byte-identical reports for repeated seeds, in-process and via the CLI.
bool criterion_determinism(std::string& detail) {
  if (verify_four_curves(5, 4, 5).to_text() !=
      verify_four_curves(5, 4, 5).to_text()) {
    detail = "in-process thm33 reports differ";
    return false;
  }
  SearchBudget b = seeded(2);
  b.coordinate_bound = 9;
  const auto lines = random_lines_general_position(5, b);
  if (verify_corollary_line4(chung_yao(lines), 2).to_text() !=
      verify_corollary_line4(chung_yao(lines), 2).to_text()) {
    detail = "in-process line4 reports differ";
    return false;
  }
  if (g_cli_path.empty()) {
    detail = "in-process reports byte-identical (no --cli given)";
    return true;
  }
  const std::array<std::string, 2> commands = {
      g_cli_path + " verify thm33 --n 5 --k 4 --seeds 1..3 2>&1",
      g_cli_path + " verify thm31 --n 5 --k 3 --seed 9 2>&1",
  };
  for (const std::string& cmd : commands) {
    bool ok1 = false, ok2 = false;
    const std::string first = run_command(cmd, ok1);
    const std::string second = run_command(cmd, ok2);
    if (!ok1 || !ok2) {
      detail = "CLI invocation failed: " + cmd;
      return false;
    }
    if (first != second || first.empty()) {
      detail = "CLI outputs differ for: " + cmd;
      return false;
    }
  }
  detail = "in-process and CLI reports byte-identical";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
  }

  const std::vector<Criterion> criteria = {
      {"thm33 inverse construction (n=5, k=4, 20 seeds)", 5.0,
       criterion_thm33_inverse},
      {"thm33 bound over 200 mixed 13-node sets", 60.0,
       criterion_thm33_bound},
      {"thm31 unique curve (n=5, k=3, 20 seeds)", 0.0, criterion_thm31},
      {"thm32 two curves (n=5, k=4, 20 seeds)", 0.0, criterion_thm32},
      {"vanishing dim = N - max independent subset (500 sets)", 0.0,
       criterion_dim_formula},
      {"curve capacity and divisibility (100 cases)", 0.0,
       criterion_curve_capacity},
      {"four-node-line usage census on chung-yao n=3,4,5", 30.0,
       criterion_line_census},
      {"pair partition vs exhaustive matching oracle (200 configs)", 0.0,
       criterion_pairing},
      {"byte-identical verify reports", 0.0, criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && criteria[i].time_limit_s > 0 &&
        elapsed > criteria[i].time_limit_s) {
      ok = false;
      detail = "over the " + std::to_string(criteria[i].time_limit_s) +
               "s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", elapsed);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << i + 1 << "  "
              << criteria[i].name << "  [" << timing << "]";
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failures;
}
