// dngon: exact computations on the double regular n-gon translation surface
// and its staircase model. Subcommands: orbit, certify, survey, witness,
// trace, check. Exit codes: 0 success, 1 usage error, 2 inconclusive verdict
// under --strict, 3 internal invariant failure.

#include "dngon/serialize.hpp"
#include "dngon/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace dngon;

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << "\n";
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open output file " + path);
      out << text;
    }
  }
};

void require_odd(int n) {
  if (n < 3 || n % 2 == 0) throw CLI::ValidationError("--n must be odd and >= 3");
}

// Accepts either two coefficient lists or the compact "a,b" form with two
// plain rationals (e.g. --point 1/3,1/3).
Vec2F parse_pair(const FieldContext& F, std::vector<std::string> parts, const char* what) {
  if (parts.size() == 1) {
    const std::string& s = parts[0];
    size_t comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
      throw CLI::ValidationError(std::string(what) +
                                 ": expected two coefficient lists or a 'x,y' rational pair");
    parts = {s.substr(0, comma), s.substr(comma + 1)};
  }
  if (parts.size() != 2) throw CLI::ValidationError(std::string(what) + ": expected two values");
  return {parse_field_element(F, parts[0]), parse_field_element(F, parts[1])};
}

int run_orbit(int n, const std::string& format, const Output& out) {
  AnalysisContext A(n);
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["orbit_size"] = static_cast<long>(A.orbit.size());
    j["p1_size"] = A.mod2.p1_size().get_str();
    j["strict_inclusion"] = strict_inclusion(A.mod2, A.orbit);
    j["pbar"] = A.mod2.pbar.to_string();
    j["classes"] = to_json(A.orbit, A.mod2);
    out.write(j.dump(2));
  } else {
    std::ostringstream os;
    os << "n = " << n << "\n";
    os << "pbar = " << A.mod2.pbar.to_string() << "\n";
    os << "orbit size = " << A.orbit.size() << "\n";
    os << "|P1(O/2O)| = " << A.mod2.p1_size().get_str() << "\n";
    os << "strict inclusion: " << (strict_inclusion(A.mod2, A.orbit) ? "true" : "false") << "\n";
    for (const ProjClass& c : A.orbit.classes) os << "  " << c.to_string() << "\n";
    out.write(os.str());
  }
  return 0;
}

int run_certify(int n, const std::vector<std::string>& dir_lit, bool strict, const Output& out) {
  AnalysisContext A(n);
  Vec2F dir = parse_pair(A.field, dir_lit, "--direction");
  Certificate cert = certify_direction(A, dir);
  out.write(to_json(cert).dump(2));
  if (strict && cert.verdict == Verdict::MembershipInconclusive) return 2;
  return 0;
}

int run_survey(int from, int to, const std::string& format, bool strict, const Output& out) {
  std::vector<SurveyRow> rows = survey(from, to);
  if (format == "json")
    out.write(to_json(rows).dump(2));
  else
    out.write(to_csv(rows));
  if (strict)
    for (const SurveyRow& r : rows)
      if (r.verdict == Verdict::MembershipInconclusive) return 2;
  return 0;
}

int run_witness(int n, const std::vector<std::string>& point_lit, int depth, long states,
                const Output& out) {
  AnalysisContext A(n);
  Staircase S(A.field);
  Vec2F p0 = parse_pair(A.field, point_lit, "--point");
  SearchBudget budget;
  if (depth > 0) budget.max_depth = depth;
  if (states > 0) budget.max_states = static_cast<size_t>(states);
  WitnessResult w = find_witness(A, S, p0, budget);
  out.write(to_json(w, A.mod2).dump(2));
  return 0;
}

int run_trace(int n, const std::string& surface_kind, bool theorem_dir,
              const std::vector<std::string>& start_lit, const std::vector<std::string>& dir_lit,
              int budget, const std::string& svg_path, const std::string& format,
              const Output& out) {
  FieldContext F(n);
  FlatSurface flat;
  Vec2Q start{QuadExtElement(F, 0), QuadExtElement(F, 0)};
  Vec2Q dir = start;
  int start_poly = 0;

  if (surface_kind == "double-ngon") {
    DoubleNgon D = build_double_ngon(F);
    flat = D.surface;
    if (theorem_dir) {
      start = D.theorem_start;
      dir = -theorem_direction(F).ngon;
      start_poly = D.right_poly;
    }
  } else if (surface_kind == "staircase") {
    Staircase S(F);
    flat = S.to_flat();
  } else {
    throw CLI::ValidationError("--surface must be double-ngon or staircase");
  }
  if (!theorem_dir) {
    if (start_lit.empty() || dir_lit.empty())
      throw CLI::ValidationError("trace: give --start and --direction, or --theorem-direction");
    Vec2F s0 = parse_pair(F, start_lit, "--start");
    Vec2F d0 = parse_pair(F, dir_lit, "--direction");
    start = to_quad(s0);
    dir = to_quad(d0);
    start_poly = -1;
    for (size_t p = 0; p < flat.polys.size(); ++p)
      if (flat.contains(static_cast<int>(p), start)) {
        start_poly = static_cast<int>(p);
        break;
      }
    if (start_poly < 0) throw CLI::ValidationError("trace: start point is not on the surface");
  }

  TraceResult r = trace(flat, start_poly, start, dir, budget);
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) throw std::runtime_error("cannot open " + svg_path);
    svg << SvgWriter::render(flat, &r, &start);
  }
  if (format == "json")
    out.write(to_json(r, flat).dump(2));
  else {
    std::ostringstream os;
    os << "crossings: " << r.crossings << "\n";
    os << "termination: "
       << (r.termination == TraceTermination::VertexHit    ? "singularity"
           : r.termination == TraceTermination::MarkedHit ? "marked point"
                                                          : "budget")
       << "\n";
    int marked = 0;
    for (const TraceEvent& e : r.events)
      if (e.kind == EventKind::MarkedHit) ++marked;
    os << "marked-point hits: " << marked << "\n";
    out.write(os.str());
  }
  return 0;
}

int run_check(int n_max, const Output& out) {
  if (n_max < 7 || n_max % 2 == 0) throw CLI::ValidationError("--n-max must be odd and >= 7");
  std::ostringstream os;
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    os << (ok ? "ok   " : "FAIL ") << name << "\n";
    all_ok = all_ok && ok;
  };

  {
    bool ok = true;
    for (int n = 3; n <= n_max; n += 2) ok = ok && !min_poly(n).is_zero();
    report("minimal-polynomial identity (exact, odd 3.." + std::to_string(n_max) + ")", ok);
  }
  {
    bool ok = true;
    for (int n : {7, 11, 13, 17, 19, 23, 29, 31})
      if (n <= std::max(n_max, 31)) ok = ok && prime_coefficient_check(n);
    report("prime coefficient pattern", ok);
  }
  {
    bool ok = true;
    for (int n = 3; n <= n_max; n += 2) {
      AnalysisContext A(n);
      ok = ok && static_cast<int>(A.orbit.size()) <= n;
      bool strict = strict_inclusion(A.mod2, A.orbit);
      if (n >= 7) ok = ok && (strict == (n != 9));
      ok = ok && symmetry_check(A.mod2);
    }
    report("orbit bound, strict inclusion table, P symmetry", ok);
  }
  {
    bool ok = true;
    for (int n = 5; n <= std::min(n_max, 31); n += 2) {
      FieldContext F(n);
      Staircase S(F);
      FieldElement lam = FieldElement::lambda(F);
      for (auto strips : {&S.hstrips(), &S.vstrips()}) {
        ok = ok && static_cast<int>(strips->size()) == S.m();
        for (const auto& s : *strips) ok = ok && (s.width() == lam * s.height());
      }
      S.to_flat().validate();
    }
    report("cylinder decompositions (count and modulus)", ok);
  }
  {
    FieldContext F(7);
    bool ok = true;
    for (int k = 0; k <= 14; ++k) ok = ok && u_power_formula_check(F, k);
    report("U-power sine formula (n=7, k=0..2n)", ok);
  }
  out.write(os.str());
  if (!all_ok) throw std::logic_error("invariant suite failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dngon;
  CLI::App app{"exact non-periodicity certificates and separatrix tracing on double regular n-gons"};
  app.require_subcommand(1);

  std::string out_path;
  bool strict = false;
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_flag("--strict", strict, "exit 2 on an Inconclusive verdict");
  app.fallthrough();

  auto* orbit_cmd = app.add_subcommand("orbit", "mod-2 cusp orbit, |P1|, strict inclusion");
  orbit_cmd->fallthrough();
  int orbit_n = 7;
  std::string orbit_format = "text";
  orbit_cmd->add_option("--n", orbit_n, "odd n >= 3")->required();
  orbit_cmd->add_option("--format", orbit_format, "text|json");

  auto* certify_cmd = app.add_subcommand("certify", "certify a staircase direction");
  certify_cmd->fallthrough();
  int certify_n = 7;
  std::vector<std::string> certify_dir;
  certify_cmd->add_option("--n", certify_n, "odd n >= 3")->required();
  certify_cmd->add_option("--direction", certify_dir, "two coefficient lists (lambda-power basis)")
      ->required()
      ->expected(1, 2);

  auto* survey_cmd = app.add_subcommand("survey", "certify the theorem direction over a range of n");
  survey_cmd->fallthrough();
  int survey_from = 7, survey_to = 199;
  std::string survey_format = "csv";
  survey_cmd->add_option("--from", survey_from, "odd lower bound")->required();
  survey_cmd->add_option("--to", survey_to, "odd upper bound")->required();
  survey_cmd->add_option("--format", survey_format, "csv|json");

  auto* witness_cmd = app.add_subcommand("witness", "constructive non-connection-point witness");
  witness_cmd->fallthrough();
  int witness_n = 7, witness_depth = 0;
  long witness_states = 0;
  std::vector<std::string> witness_point;
  witness_cmd->add_option("--n", witness_n, "odd n >= 5, n != 9")->required();
  witness_cmd->add_option("--point", witness_point, "P0, e.g. 1/3,1/3 or two coefficient lists")
      ->required()
      ->expected(1, 2);
  witness_cmd->add_option("--budget", witness_depth, "BFS depth budget");
  witness_cmd->add_option("--states", witness_states, "BFS state budget");

  auto* trace_cmd = app.add_subcommand("trace", "exact geodesic trace");
  trace_cmd->fallthrough();
  int trace_n = 7, trace_budget = 1000;
  std::string trace_surface = "double-ngon", trace_svg, trace_format = "text";
  bool trace_theorem = false;
  std::vector<std::string> trace_start, trace_dir;
  trace_cmd->add_option("--n", trace_n, "odd n >= 5")->required();
  trace_cmd->add_option("--surface", trace_surface, "double-ngon|staircase");
  trace_cmd->add_flag("--theorem-direction", trace_theorem,
                      "trace the Theorem separatrix from (cos 2pi/n, sin 2pi/n)");
  trace_cmd->add_option("--start", trace_start, "start point")->expected(1, 2);
  trace_cmd->add_option("--direction", trace_dir, "direction")->expected(1, 2);
  trace_cmd->add_option("--budget", trace_budget, "max edge crossings");
  trace_cmd->add_option("--svg", trace_svg, "write an SVG rendering to this file");
  trace_cmd->add_option("--format", trace_format, "text|json");

  auto* check_cmd = app.add_subcommand("check", "run the invariant suite");
  check_cmd->fallthrough();
  int check_n = 31;
  check_cmd->add_option("--n-max", check_n, "largest n exercised by the sweep checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  Output out{out_path};
  try {
    if (*orbit_cmd) {
      require_odd(orbit_n);
      return run_orbit(orbit_n, orbit_format, out);
    }
    if (*certify_cmd) {
      require_odd(certify_n);
      return run_certify(certify_n, certify_dir, strict, out);
    }
    if (*survey_cmd) return run_survey(survey_from, survey_to, survey_format, strict, out);
    if (*witness_cmd) {
      require_odd(witness_n);
      return run_witness(witness_n, witness_point, witness_depth, witness_states, out);
    }
    if (*trace_cmd) {
      require_odd(trace_n);
      return run_trace(trace_n, trace_surface, trace_theorem, trace_start, trace_dir, trace_budget,
                       trace_svg, trace_format, out);
    }
    if (*check_cmd) return run_check(check_n, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
