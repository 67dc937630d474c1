#include "leaderline_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "leaderline/errors.hpp"
#include "leaderline/fixtures.hpp"
#include "leaderline/instance_io.hpp"
#include "leaderline/oracle.hpp"
#include "leaderline/reductions.hpp"
#include "leaderline/sliding.hpp"
#include "leaderline/solver.hpp"
#include "leaderline/svg.hpp"
#include "leaderline/verify.hpp"

namespace leaderline::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  std::optional<Solution> solution;
  double millis = 0;
};

std::string millis_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

// Picks the solver for the instance: the oracle when asked for or when the
// instance is two-sided, the sliding discretization for sliding instances,
// the dynamic program otherwise. Timing excludes file I/O.
Outcome solve_instance(const Instance& inst, bool use_oracle, std::optional<Rational> epsilon) {
  const bool two_sided = inst.mode == CandidateMode::Fixed && !inst.one_sided();
  if (two_sided && !use_oracle) throw MalformedInput("two-sided instances are solved by the oracle only; pass --oracle");
  Outcome outcome;
  auto start = std::chrono::steady_clock::now();
  if (use_oracle) {
    if (auto r = oracle_solve(inst)) outcome.solution = Solution{r->labeling, r->value};
  } else if (inst.mode == CandidateMode::Sliding) {
    outcome.solution = solve_sliding(inst, {}, nullptr, epsilon);
  } else {
    outcome.solution = solve_fixed(inst);
  }
  auto stop = std::chrono::steady_clock::now();
  outcome.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  return outcome;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw MalformedInput("not an integer list: \"" + text + "\"");
    }
  }
  return out;
}

Rational parse_option_number(const std::string& text) { return parse_rational(text); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary labeling with grouping and ordering constraints"};
  app.name("leaderline");
  app.require_subcommand(1);

  // solve
  std::string solve_path, solve_objective, solve_vmin, solve_epsilon, solve_labeling, solve_svg;
  bool solve_oracle = false;
  auto* solve = app.add_subcommand("solve", "Compute an optimal admissible labeling");
  solve->add_option("instance", solve_path, "Instance file")->required();
  solve->add_option("--objective", solve_objective, "length or bends (overrides the file)")
      ->check(CLI::IsMember({"length", "bends"}));
  solve->add_option("--v-min", solve_vmin, "Minimum leader-site separation (overrides the file)");
  solve->add_option("--epsilon", solve_epsilon, "Offset for sliding candidates, strictly inside (0, d)");
  solve->add_option("--labeling", solve_labeling, "Write the labeling here");
  solve->add_option("--svg", solve_svg, "Write an SVG drawing here");
  solve->add_flag("--oracle", solve_oracle, "Use exhaustive search (required for two-sided instances)");

  // verify
  std::string verify_instance, verify_labeling;
  auto* verify_cmd = app.add_subcommand("verify", "Check a labeling for admissibility");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("labeling", verify_labeling, "Labeling file")->required();

  // render
  std::string render_instance, render_labeling, render_out;
  auto* render = app.add_subcommand("render", "Draw an instance and optionally a labeling as SVG");
  render->add_option("instance", render_instance, "Instance file")->required();
  render->add_option("labeling", render_labeling, "Labeling file");
  render->add_option("-o,--output", render_out, "SVG output file (stdout if omitted)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  std::string gen_out;
  std::string part_weights;
  bool part_ordering = false;
  bool part_scale = false;
  auto* gen_partition = gen->add_subcommand("partition", "One-sided sliding instance from a Partition input");
  gen_partition->add_option("--weights", part_weights, "Comma-separated positive weights")->required();
  gen_partition->add_flag("--ordering", part_ordering, "Model the blocks with ordering instead of grouping");
  gen_partition->add_flag("--scale", part_scale, "Scale by 2N to integer coordinates");
  gen_partition->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");

  int sat_vars = 0;
  std::vector<std::string> sat_clauses;
  auto* gen_sat = gen->add_subcommand("sat13", "Two-sided instance from a positive 1-in-3 SAT formula");
  gen_sat->add_option("--variables", sat_vars, "Number of variables")->required();
  gen_sat->add_option("--clause", sat_clauses, "Clause as three 1-based variable numbers, e.g. 1,2,3");
  gen_sat->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");

  CitiesLikeOptions cities;
  std::string cities_objective = "length";
  auto* gen_cities = gen->add_subcommand("cities-like", "Grouped city-map style one-sided fixture");
  gen_cities->add_option("--sites", cities.sites, "Number of sites")->capture_default_str();
  gen_cities->add_option("--groups", cities.groups, "Maximum number of groups")->capture_default_str();
  gen_cities->add_option("--order", cities.order_pairs, "Number of order pairs")->capture_default_str();
  gen_cities->add_option("--seed", cities.seed, "Random seed")->capture_default_str();
  gen_cities->add_option("--objective", cities_objective, "length or bends")
      ->check(CLI::IsMember({"length", "bends"}));
  gen_cities->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");

  // bench
  std::string bench_dir, bench_out;
  int bench_repeats = 1;
  auto* bench = app.add_subcommand("bench", "Time the solver on every instance file of a directory");
  bench->add_option("directory", bench_dir, "Fixture directory")->required();
  bench->add_option("--repeats", bench_repeats, "Runs per fixture")->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", bench_out, "CSV output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*solve) {
      Instance inst = read_instance(solve_path);
      if (!solve_objective.empty()) {
        inst.objective = solve_objective == "length" ? ObjectiveKind::Length : ObjectiveKind::Bends;
      }
      if (!solve_vmin.empty()) inst.v_min = parse_option_number(solve_vmin);
      std::optional<Rational> epsilon;
      if (!solve_epsilon.empty()) epsilon = parse_option_number(solve_epsilon);
      Outcome outcome = solve_instance(inst, solve_oracle, epsilon);
      if (!outcome.solution) {
        out << "infeasible\n";
        out << "time_ms: " << millis_text(outcome.millis) << '\n';
        return kInfeasible;
      }
      out << "objective: " << format_rational(outcome.solution->value) << '\n';
      out << "time_ms: " << millis_text(outcome.millis) << '\n';
      if (!solve_labeling.empty()) write_labeling(solve_labeling, outcome.solution->labeling, &outcome.solution->value);
      if (!solve_svg.empty()) {
        VerifyReport report = verify(inst, outcome.solution->labeling);
        write_text_file(solve_svg, render_svg(inst, &outcome.solution->labeling, &report));
      }
      return kOk;
    }

    if (*verify_cmd) {
      Instance inst = read_instance(verify_instance);
      Labeling labeling = read_labeling(verify_labeling, inst.site_count());
      VerifyReport report = verify(inst, labeling);
      out << report.to_text();
      return report.admissible() ? kOk : kNotAdmissible;
    }

    if (*render) {
      Instance inst = read_instance(render_instance);
      std::string svg;
      if (render_labeling.empty()) {
        svg = render_svg(inst);
      } else {
        Labeling labeling = read_labeling(render_labeling, inst.site_count());
        VerifyReport report = verify(inst, labeling);
        svg = render_svg(inst, &labeling, &report);
      }
      emit(svg, render_out, out);
      return kOk;
    }

    if (*gen) {
      Instance inst;
      if (*gen_partition) {
        inst = gen_partition_instance(split_ints(part_weights), part_ordering, part_scale).instance;
      } else if (*gen_sat) {
        OneInThreeFormula formula;
        formula.variables = sat_vars;
        for (const auto& text : sat_clauses) {
          auto ids = split_ints(text);
          if (ids.size() != 3) throw MalformedInput("a clause needs exactly three variables: \"" + text + "\"");
          formula.clauses.push_back({ids[0] - 1, ids[1] - 1, ids[2] - 1});
        }
        inst = gen_one_in_three_instance(formula).instance;
      } else {
        cities.objective = cities_objective == "bends" ? ObjectiveKind::Bends : ObjectiveKind::Length;
        inst = gen_cities_like(cities);
      }
      emit(instance_to_json(inst), gen_out, out);
      return kOk;
    }

    if (*bench) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(bench_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end(),
                [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
      std::ostringstream csv;
      csv << "instance,n,m,k,r,feasible,value,millis\n";
      for (const auto& file : files) {
        Instance inst = read_instance(file);
        const bool two_sided = inst.mode == CandidateMode::Fixed && !inst.one_sided();
        for (int rep = 0; rep < bench_repeats; ++rep) {
          Outcome outcome = solve_instance(inst, two_sided, std::nullopt);
          csv << file.filename().string() << ',' << inst.site_count() << ',' << inst.candidate_count() << ','
              << inst.constraints.groups.size() << ',' << inst.constraints.order.size() << ','
              << (outcome.solution ? "yes" : "no") << ','
              << (outcome.solution ? format_rational(outcome.solution->value) : "") << ','
              << millis_text(outcome.millis) << '\n';
        }
      }
      emit(csv.str(), bench_out, out);
      return kOk;
    }
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return kOk;
}

}  // namespace leaderline::cli
