// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "angleforge/construction.hpp"
#include "angleforge/counting.hpp"
#include "angleforge/directions.hpp"
#include "angleforge/errors.hpp"
#include "angleforge/grids.hpp"
#include "angleforge/io.hpp"

namespace angleforge::cli {

using nlohmann::json;

namespace {

struct ContextFlags {
  std::string preset;
  std::string minpoly;
  std::string b;
  std::string iso;
  std::string context_file;
  bool allow_right_angle = false;
};

struct Budgets {
  std::size_t brute_limit = 800;
  std::uint64_t triple_budget = 10'000'000;
  std::uint64_t grid_limit = kDefaultGridLimit;
  unsigned threads = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

IntPoly parse_poly(const std::string& text) {
  IntPoly p;
  for (const auto& c : split(text, ',')) p.push_back(parse_bigint(c));
  if (p.empty()) throw InputError("empty coefficient list");
  return p;
}

RationalInterval parse_interval(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw InputError("interval must be \"lo,hi\", got '" + text + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

void add_context_flags(CLI::App* cmd, ContextFlags& f) {
  cmd->add_option("--preset", f.preset, "Built-in angle: pi4 (tan=1), sqrt2 (tan=sqrt 2), pi6 (tan=1/sqrt 3)")
      ->check(CLI::IsMember({"pi4", "sqrt2", "pi6"}));
  cmd->add_option("--d1-theta", f.preset, "Alias for --preset (pi4)")->check(CLI::IsMember({"pi4"}));
  cmd->add_option("--minpoly", f.minpoly, "Monic minimal polynomial of alpha, constant term first, e.g. -2,0,1");
  cmd->add_option("--b", f.b, "Integer b with tan(theta) = alpha / b");
  cmd->add_option("--iso", f.iso, "Isolating interval for alpha, \"lo,hi\" (rationals)");
  cmd->add_option("--context", f.context_file, "Context JSON file");
  cmd->add_flag("--allow-right-angle", f.allow_right_angle, "Accept b = 0 (theta = pi/2)");
}

void add_budget_flags(CLI::App* cmd, Budgets& b) {
  cmd->add_option("--brute-limit", b.brute_limit, "Largest point set for the brute-force counter")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--triple-budget", b.triple_budget, "Largest triple family to materialize")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--grid-limit", b.grid_limit, "Largest grid to materialize")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", b.threads, "Worker threads (0 = all available)");
}

AlgebraicContext build_context(const ContextFlags& f) {
  ContextOptions options;
  options.allow_right_angle = f.allow_right_angle;
  const int sources = !f.preset.empty() + !f.context_file.empty() + !f.minpoly.empty();
  if (sources != 1) {
    throw InputError("specify exactly one of --preset/--d1-theta, --context, or --minpoly/--b/--iso");
  }
  if (!f.preset.empty()) {
    if (f.preset == "pi4") return AlgebraicContext::create({-1, 1}, 1, {Rational(1, 2), Rational(3, 2)}, options);
    if (f.preset == "sqrt2") return AlgebraicContext::create({-2, 0, 1}, 1, {Rational(1), Rational(2)}, options);
    return AlgebraicContext::create({-3, 0, 1}, 3, {Rational(1), Rational(2)}, options);
  }
  if (!f.context_file.empty()) return context_from_json(read_json_file(f.context_file), options);
  if (f.b.empty() || f.iso.empty()) throw InputError("--minpoly requires --b and --iso");
  return AlgebraicContext::create(parse_poly(f.minpoly), parse_bigint(f.b), parse_interval(f.iso), options);
}

void emit_warnings(const AlgebraicContext& ctx, std::ostream& err) {
  for (const auto& w : ctx.warnings()) err << json{{"warning", w}}.dump() << '\n';
}

PlanePoint parse_point(const AlgebraicContext& ctx, const std::string& text) {
  if (!text.empty() && text.front() == '{') return point_from_json(ctx, json::parse(text));
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw InputError("point must be \"re0,re1,...:im0,im1,...\", got '" + text + "'");
  IntPoly re = parse_poly(parts[0]);
  IntPoly im = parse_poly(parts[1]);
  return {ctx.element(std::move(re)), ctx.element(std::move(im))};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions and counters for point sets with many repeated angles", "angleforge"};
  app.require_subcommand(1);

  ContextFlags ctx_flags;
  Budgets budgets;

  // normalize
  std::string tanpoly, tan_iso;
  auto* normalize = app.add_subcommand("normalize", "Rewrite a polynomial for tan(theta) as alpha / b");
  normalize->add_option("--tanpoly", tanpoly, "Integer polynomial with root tan(theta), constant term first")
      ->required();
  normalize->add_option("--iso", tan_iso, "Interval \"lo,hi\" isolating tan(theta)")->required();

  // construct
  std::uint64_t t = 0;
  std::string n_text, out_path, triples_out, csv_out;
  bool dry_run = false;
  auto* construct = app.add_subcommand("construct", "Build the repeated-angle triple family");
  add_context_flags(construct, ctx_flags);
  add_budget_flags(construct, budgets);
  auto* t_opt = construct->add_option("--t", t, "Grid parameter t >= 1")->check(CLI::PositiveNumber);
  construct->add_option("--n", n_text, "Target point count; t is chosen so C3 t^{2d} < n <= C3 (t+1)^{2d}")
      ->excludes(t_opt);
  construct->add_flag("--dry-run", dry_run, "Only report the expected triple count");
  construct->add_option("--out", out_path, "Point set JSON output");
  construct->add_option("--triples-out", triples_out, "Triples JSON output");
  construct->add_option("--csv-out", csv_out, "Decimal rendering of the points as CSV");

  // count
  std::string input, method = "fast";
  bool per_apex = false, theta_from_context = true;
  auto* count = app.add_subcommand("count", "Count theta-triples in a point set");
  count->add_option("--input", input, "Point set JSON")->required();
  count->add_flag("--theta-from-context", theta_from_context, "Take theta from the file's context (default)");
  count->add_option("--method", method, "brute, fast or both")->check(CLI::IsMember({"brute", "fast", "both"}));
  count->add_flag("--per-apex", per_apex, "Include per-apex counts");
  add_budget_flags(count, budgets);

  // verify-ungar
  std::uint64_t ungar_t = 0, ungar_t_max = 0;
  auto* ungar = app.add_subcommand("verify-ungar", "Check the distinct-direction bound on G_t");
  add_context_flags(ungar, ctx_flags);
  add_budget_flags(ungar, budgets);
  auto* ut = ungar->add_option("--t", ungar_t, "Single grid radius")->check(CLI::NonNegativeNumber);
  ungar->add_option("--t-max", ungar_t_max, "Check every t in 1..t-max")->excludes(ut);

  // sweep
  SweepOptions sweep_opts;
  std::string sweep_out, source = "auto";
  auto* sweep_cmd = app.add_subcommand("sweep", "Triples versus n^2 ln n over growing point sets");
  add_context_flags(sweep_cmd, ctx_flags);
  add_budget_flags(sweep_cmd, budgets);
  sweep_cmd->add_option("--t-max", sweep_opts.t_max, "Last step")->required();
  sweep_cmd->add_option("--t-min", sweep_opts.t_min, "First step")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--source", source, "auto, grid or construction")
      ->check(CLI::IsMember({"auto", "grid", "construction"}));
  sweep_cmd->add_option("--grid-scale", sweep_opts.grid_scale, "Grid radius per step (grid source)")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--point-budget", sweep_opts.point_budget, "Skip steps with more points")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep_out, "CSV output (default: stdout)");

  // angle-check
  std::string pa, pb, pc;
  auto* angle = app.add_subcommand("angle-check", "Does the angle q-p-r equal theta?");
  add_context_flags(angle, ctx_flags);
  angle->add_option("--p", pa, "Apex, \"re0,..:im0,..\" or point JSON")->required();
  angle->add_option("--q", pb, "First arm")->required();
  angle->add_option("--r", pc, "Second arm")->required();

  std::vector<const char*> argv{"angleforge"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      throw InputError(e.what());
    }

    if (normalize->parsed()) {
      const NormalizedTangent nt = normalize_tangent(parse_poly(tanpoly), parse_interval(tan_iso));
      ContextOptions options;
      options.allow_right_angle = true;
      const auto ctx = AlgebraicContext::create(nt.minpoly, nt.b, nt.iso, options);
      emit_warnings(ctx, err);
      out << dump(context_to_json(ctx));
      return 0;
    }

    if (construct->parsed()) {
      const auto ctx = build_context(ctx_flags);
      emit_warnings(ctx, err);
      if (!n_text.empty()) {
        t = size_for_n(ctx, parse_bigint(n_text));
      } else if (t == 0) {
        throw InputError("construct: one of --t or --n is required");
      }
      json summary{{"schema", kSchema},
                   {"t", t},
                   {"expected_triples", expected_count(ctx, t).get_str()},
                   {"containment_radius", containment_radius(ctx, t).get_str()},
                   {"C1", ctx.c1().get_str()},
                   {"C2", ctx.c2().get_str()},
                   {"C3", ctx.c3().get_str()}};
      if (dry_run) {
        summary["dry_run"] = true;
        out << dump(summary);
        return 0;
      }
      ConstructionLimits limits;
      limits.triple_budget = budgets.triple_budget;
      limits.grid_limit = budgets.grid_limit;
      const TripleFamily family = generate(ctx, t, limits);
      summary["dry_run"] = false;
      summary["triples"] = std::to_string(family.triples.size());
      summary["points"] = family.points.size();
      if (!out_path.empty()) write_text_file(out_path, dump(point_set_to_json(ctx, family.points)));
      if (!triples_out.empty()) write_text_file(triples_out, dump(triples_to_json(family)));
      if (!csv_out.empty()) {
        std::ostringstream csv;
        write_points_csv(csv, ctx, family.points);
        write_text_file(csv_out, csv.str());
      }
      out << dump(summary);
      return 0;
    }

    if (count->parsed()) {
      const PointSet set = point_set_from_json(read_json_file(input));
      emit_warnings(set.ctx, err);
      CountOptions options;
      options.brute_limit = budgets.brute_limit;
      options.threads = budgets.threads;
      json result{{"schema", kSchema}, {"n", set.points.size()}, {"method", method}};
      auto record = [&](const CountReport& report) {
        json entry{{"total", report.total.get_str()}};
        if (per_apex) entry["per_apex"] = report.per_apex;
        result[to_string(report.method)] = entry;
      };
      std::optional<CountReport> brute, fast;
      if (method != "fast") record(*(brute = count_brute(set.ctx, set.points, options)));
      if (method != "brute") record(*(fast = count_fast(set.ctx, set.points, options)));
      if (brute && fast) {
        result["agree"] = brute->total == fast->total;
        if (brute->total != fast->total) {
          out << dump(result);
          throw InvariantViolation("count: brute (" + brute->total.get_str() + ") and fast (" +
                                   fast->total.get_str() + ") counters disagree");
        }
      }
      result["total"] = (fast ? fast->total : brute->total).get_str();
      out << dump(result);
      return 0;
    }

    if (ungar->parsed()) {
      const auto ctx = build_context(ctx_flags);
      emit_warnings(ctx, err);
      std::uint64_t lo = ungar_t, hi = ungar_t;
      if (ungar_t_max > 0) {
        lo = 1;
        hi = ungar_t_max;
      } else if (ungar->count("--t") == 0) {
        throw InputError("verify-ungar: one of --t or --t-max is required");
      }
      out << "t,N,distinct_directions,bound,status\n";
      bool ok = true;
      for (std::uint64_t r = lo; r <= hi; ++r) {
        const auto grid = gen_G(ctx, r, budgets.grid_limit);
        if (grid.size() < 2) {
          out << r << ',' << grid.size() << ",0,0,pass\n";
          continue;
        }
        const std::uint64_t distinct = count_distinct_directions(ctx, grid);
        const std::uint64_t bound = grid.size() - 1;
        const bool pass = distinct >= bound;
        ok = ok && pass;
        out << r << ',' << grid.size() << ',' << distinct << ',' << bound << ',' << (pass ? "pass" : "fail") << '\n';
      }
      if (!ok) throw InvariantViolation("verify-ungar: fewer distinct directions than N - 1");
      return 0;
    }

    if (sweep_cmd->parsed()) {
      const auto ctx = build_context(ctx_flags);
      emit_warnings(ctx, err);
      sweep_opts.source = source == "grid"           ? SweepSource::grid
                          : source == "construction" ? SweepSource::construction
                                                     : SweepSource::automatic;
      sweep_opts.threads = budgets.threads;
      sweep_opts.construction.triple_budget = budgets.triple_budget;
      sweep_opts.construction.grid_limit = budgets.grid_limit;
      const auto rows = sweep(ctx, sweep_opts);
      std::ostringstream csv;
      write_sweep_csv(csv, rows);
      if (sweep_out.empty()) {
        out << csv.str();
      } else {
        write_text_file(sweep_out, csv.str());
      }
      return 0;
    }

    if (angle->parsed()) {
      const auto ctx = build_context(ctx_flags);
      emit_warnings(ctx, err);
      const AngleMatch m = angle_at(ctx, parse_point(ctx, pa), parse_point(ctx, pb), parse_point(ctx, pc));
      out << to_string(m) << '\n';
      return 0;
    }
  } catch (const InvariantViolation& e) {
    err << json{{"error", e.what()}, {"kind", "invariant"}, {"exit_code", 2}}.dump() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << json{{"error", e.what()}, {"kind", "input"}, {"exit_code", 1}}.dump() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << json{{"error", e.what()}, {"kind", "input"}, {"exit_code", 1}}.dump() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << json{{"error", e.what()}, {"kind", "input"}, {"exit_code", 1}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", e.what()}, {"kind", "internal"}, {"exit_code", 2}}.dump() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace angleforge::cli
