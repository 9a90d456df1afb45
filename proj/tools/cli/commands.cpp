#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "bires/error.hpp"

namespace bires::cli {

using nlohmann::json;
using bires::to_string;

namespace {

json bideg_json(BiDeg d) { return json::array({d.x, d.y}); }

json corners_json(const RegRegion& r) {
  json a = json::array();
  for (auto c : r.corners()) a.push_back(bideg_json(c));
  return a;
}

std::string corners_text(const RegRegion& r) {
  std::string s;
  for (auto c : r.corners()) s += (s.empty() ? "" : " ") + to_string(c);
  return s.empty() ? "(none)" : s;
}

std::uint64_t seed_of(const ProblemSpec& s) { return s.seed.value_or(1); }

StrandSetup strand_for(const Problem& p, const std::optional<BiDeg>& nu) {
  return p.h ? implicit_strand(p.g, *p.h, nu) : resultant_strand(p.g, *p.fdegs, nu);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void deliver(const ProblemSpec& spec, const std::string& text, std::ostream& out) {
  if (spec.output.report)
    write_file(*spec.output.report, text);
  else
    out << text;
}

/// Maps library exceptions to exit codes.
int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return kMathError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMathError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace

BiDeg parse_nu(const std::string& text) {
  auto comma = text.find(',');
  BiDeg d;
  auto parse = [&](std::string_view part, int& v) {
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    return ec == std::errc() && p == part.data() + part.size() && !part.empty();
  };
  std::string_view all(text);
  if (comma == std::string::npos || !parse(all.substr(0, comma), d.x) || !parse(all.substr(comma + 1), d.y))
    throw InputError("--nu expects A,B (two integers), got '" + text + "'");
  return d;
}

ProblemSpec effective_spec(ProblemSpec s, const RunFlags& f) {
  if (f.nu) s.nu = f.nu;
  if (f.seed)
    s.seed = f.seed;
  else if (!s.seed && f.env_seed)
    s.seed = f.env_seed;
  if (!s.seed) s.seed = 1;
  if (f.sum_mult) s.sum_mult = f.sum_mult;
  if (f.format) s.output.format = *f.format;
  if (f.emit_matrix) s.output.emit_matrix = f.emit_matrix;
  if (f.output) s.output.report = f.output;
  if (s.output.format != "text" && s.output.format != "json") throw InputError("--format must be text or json");
  return s;
}

json report_json(const ProblemSpec& spec, const ResultReport& r) {
  json j;
  j["schema"] = "bires/report/1";
  j["spec"] = to_json(spec);
  j["mode"] = r.mode == Mode::Resultant ? "resultant" : "implicitize";
  j["nu"] = bideg_json(r.nu);
  j["nu_source"] = r.nu_from_override ? "override" : "heuristic";
  j["region"] = corners_json(r.region);
  j["theta"] = {{"rows", r.theta_rows}, {"cols", r.theta_cols}};
  j["sum_mult"] = r.sum_mult;
  if (r.predicted_coeff_degrees) j["predicted_coeff_degrees"] = *r.predicted_coeff_degrees;
  if (r.predicted_surface_degree) j["predicted_surface_degree"] = *r.predicted_surface_degree;
  j["result"] = to_string(r.result, r.ring);
  j["terms"] = r.result.size();
  if (r.homogenized) j["homogenized"] = to_string(*r.homogenized, r.ring);
  j["block_degrees"] = r.block_degrees;
  j["total_degree"] = r.total_degree;
  j["fallback"] = r.fallback;
  j["corank"] = r.corank;
  j["multiple_of_implicit_equation"] = r.multiple_of_implicit_equation;
  j["removed_factors"] = r.removed_factors;
  j["diagnostics"] = {{"seed", r.seed},
                      {"retries", r.retries},
                      {"avoiding_columns", r.avoiding_columns},
                      {"fallback_minors", r.fallback_minors}};
  j["warnings"] = r.warnings;
  return j;
}

std::string report_text(const ResultReport& r) {
  std::ostringstream o;
  const bool imp = r.mode == Mode::Implicitize;
  o << "mode: " << (imp ? "implicitize" : "resultant") << "\n";
  o << "seed: " << r.seed << "\n";
  o << "region corners: " << corners_text(r.region) << "\n";
  o << "nu: " << to_string(r.nu) << (r.nu_from_override ? " (override)" : " (heuristic)") << "\n";
  o << "theta: " << r.theta_rows << "x" << r.theta_cols << "\n";
  o << "base-point multiplicity: " << r.sum_mult << "\n";
  if (r.predicted_coeff_degrees) {
    const auto& n = *r.predicted_coeff_degrees;
    o << "predicted coefficient degrees: (" << n[0] << "," << n[1] << "," << n[2] << ")\n";
  }
  if (r.predicted_surface_degree) o << "predicted surface degree: " << *r.predicted_surface_degree << "\n";
  if (imp) {
    o << "corank: " << r.corank << "\n";
    o << "fallback: " << (r.fallback ? "yes (multiple of the implicit equation)" : "no") << "\n";
    if (!r.removed_factors.empty()) {
      o << "removed factors:";
      for (const auto& f : r.removed_factors) o << " " << f;
      o << "\n";
    }
    o << "affine equation: " << to_string(r.result, r.ring) << "\n";
    if (r.homogenized) o << "equation: " << to_string(*r.homogenized, r.ring) << "\n";
    o << "degree: " << r.total_degree << "\n";
  } else {
    o << "block degrees: (" << r.block_degrees[0] << "," << r.block_degrees[1] << "," << r.block_degrees[2] << ")\n";
    o << "terms: " << r.result.size() << "\n";
    o << "resultant: " << to_string(r.result, r.ring) << "\n";
  }
  o << "retries: " << r.retries << "\n";
  for (const auto& w : r.warnings) o << "warning: " << w << "\n";
  return o.str();
}

json theta_json(const StrandSetup& s) {
  const ThetaStrand& t = s.theta;
  json j;
  j["nu"] = bideg_json(t.nu);
  j["rows"] = t.row_count();
  j["cols"] = t.col_count();
  json vars = json::array();
  for (const auto& v : s.ring.vars()) vars.push_back(v.name());
  j["variables"] = vars;
  json rows = json::array();
  for (const auto& m : t.rows) rows.push_back(to_string(m));
  j["row_monomials"] = rows;
  json cols = json::array();
  for (std::size_t c = 0; c < t.col_count(); ++c) {
    const auto& l = t.label(c);
    cols.push_back({{"minor", l.columns}, {"degree", bideg_json(l.degree)}, {"multiplier", to_string(t.columns[c].multiplier)}});
  }
  j["columns"] = cols;
  json entries = json::array();
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < t.col_count(); ++c) row.push_back(to_string(t.at(r, c), s.ring));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

std::string theta_csv(const StrandSetup& s, std::uint64_t seed) {
  QMatrix q = specialize(s.theta, random_assignment(s.ring, seed));
  std::ostringstream o;
  for (std::size_t r = 0; r < q.rows(); ++r) {
    for (std::size_t c = 0; c < q.cols(); ++c) o << (c ? "," : "") << to_string(q.at(r, c));
    o << "\n";
  }
  return o.str();
}

json region_json(const ProblemSpec& spec, const StrandSetup& s) {
  json j;
  j["schema"] = "bires/region/1";
  j["spec"] = to_json(spec);
  j["corners"] = corners_json(s.region);
  j["nu"] = bideg_json(s.nu.nu);
  j["nu_source"] = s.nu.from_override ? "override" : "heuristic";
  j["theta"] = {{"rows", s.theta.row_count()}, {"cols", s.theta.col_count()}};
  j["warnings"] = s.nu.warning ? json::array({*s.nu.warning}) : json::array();
  return j;
}

std::string region_text(const StrandSetup& s) {
  std::ostringstream o;
  o << "region corners: " << corners_text(s.region) << "\n";
  o << "suggested nu: " << to_string(s.nu.nu) << (s.nu.from_override ? " (override)" : " (heuristic)") << "\n";
  o << "theta at nu: " << s.theta.row_count() << "x" << s.theta.col_count() << "\n";
  if (s.nu.warning) o << "warning: " << *s.nu.warning << "\n";
  o << ascii_sketch(s.region, s.nu.nu);
  return o.str();
}

int cmd_region(const std::string& path, const RunFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ProblemSpec spec = effective_spec(load_spec(path), flags);
    Problem p = build_problem(spec);
    StrandSetup s = strand_for(p, spec.nu);
    deliver(spec, spec.output.format == "json" ? region_json(spec, s).dump(2) + "\n" : region_text(s), out);
  });
}

int cmd_run(const std::string& path, const RunFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ProblemSpec spec = effective_spec(load_spec(path), flags);
    if (spec.mode == SpecMode::Region) {
      Problem p = build_problem(spec);
      StrandSetup s = strand_for(p, spec.nu);
      deliver(spec, spec.output.format == "json" ? region_json(spec, s).dump(2) + "\n" : region_text(s), out);
      return;
    }
    Problem p = build_problem(spec);
    const std::uint64_t seed = seed_of(spec);
    std::string text;
    std::optional<BiDeg> nu = spec.nu;
    if (spec.mode == SpecMode::Theta) {
      StrandSetup s = strand_for(p, nu);
      json j = theta_json(s);
      j["spec"] = to_json(spec);
      if (spec.output.format == "json") {
        text = j.dump(2) + "\n";
      } else {
        std::ostringstream o;
        o << "nu: " << to_string(s.nu.nu) << (s.nu.from_override ? " (override)" : " (heuristic)") << "\n";
        o << "theta: " << s.theta.row_count() << "x" << s.theta.col_count() << "\n";
        for (std::size_t r = 0; r < s.theta.row_count(); ++r) {
          o << "[";
          for (std::size_t c = 0; c < s.theta.col_count(); ++c) o << (c ? ", " : "") << to_string(s.theta.at(r, c), s.ring);
          o << "]\n";
        }
        if (s.nu.warning) o << "warning: " << *s.nu.warning << "\n";
        text = o.str();
      }
      nu = s.nu.nu;
    } else {
      PipelineOptions opt;
      opt.nu = spec.nu;
      opt.seed = seed;
      opt.sum_mult = spec.sum_mult;
      ResultReport r = spec.mode == SpecMode::Resultant ? residual_resultant(p.g, *p.fdegs, opt) : implicitize(p.g, *p.h, opt);
      text = spec.output.format == "json" ? report_json(spec, r).dump(2) + "\n" : report_text(r);
      nu = r.nu;
    }
    if (spec.output.emit_matrix) {
      StrandSetup s = strand_for(p, nu);
      write_file(*spec.output.emit_matrix, theta_json(s).dump(2) + "\n");
      write_file(*spec.output.emit_matrix + ".csv", theta_csv(s, derive_seed(seed, 9)));
      if (spec.output.format == "text")
        text += "theta dump: " + *spec.output.emit_matrix + " (" + std::to_string(s.theta.row_count()) + "x" +
                std::to_string(s.theta.col_count()) + ")\n";
    }
    deliver(spec, text, out);
  });
}

}  // namespace bires::cli
