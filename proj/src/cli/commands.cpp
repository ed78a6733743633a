#include "polyquant/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "internal.hpp"
#include "polyquant/numeric/grid.hpp"
#include "polyquant/numeric/oracle.hpp"
#include "polyquant/symexpr/text.hpp"

namespace polyquant::cli {

namespace {

using Json = nlohmann::ordered_json;
using namespace detail;

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_null()) return "none";
  return v.dump();
}

void render_text(const Json& doc, std::ostringstream& out, int indent);

void render_value(const std::string& key, const Json& v, std::ostringstream& out, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    render_text(v, out, indent + 2);
  } else if (v.is_array()) {
    out << pad << key << ":\n";
    for (const auto& item : v) {
      if (item.is_object()) {
        std::ostringstream nested;
        render_text(item, nested, indent + 4);
        std::string block = nested.str();
        block.replace(indent + 2, 2, "- ");
        out << block;
      } else {
        out << pad << "  - " << scalar_text(item) << "\n";
      }
    }
  } else {
    out << pad << key << ": " << scalar_text(v) << "\n";
  }
}

void render_text(const Json& doc, std::ostringstream& out, int indent) {
  for (const auto& [key, v] : doc.items()) render_value(key, v, out, indent);
}

std::string render(const Json& doc, Format format) {
  if (format == Format::json) return doc.dump(2) + "\n";
  std::ostringstream out;
  render_text(doc, out, 0);
  return out.str();
}

Outcome error_outcome(const std::string& message, Format format) {
  Json doc;
  doc["error"] = message;
  return {2, format == Format::json ? doc.dump(2) + "\n" : "error: " + message + "\n"};
}

const char* status(bool ok) { return ok ? "PASS" : "FAIL"; }

Outcome finish(Json& doc, bool ok, Format format) {
  doc["status"] = status(ok);
  return {ok ? 0 : 1, render(doc, format)};
}

Outcome derive_commutators(const RunConfig& cfg) {
  Pipeline p = make_pipeline(cfg);
  Json doc;
  doc["target"] = "commutators";
  doc["volume_mode"] = volume_label(cfg.volume_mode);
  const std::string order[] = {"phi", "pi0", "pi1", "pi2", "pi3"};
  auto rank = [&](const std::string& n) { return std::find(std::begin(order), std::end(order), n) - order; };

  DiffOp want = expected_commutator(cfg.volume_mode);
  DiffOp want_integrated = DiffOp::multiplication(expected("i*hbar*c"));
  bool ok = true;
  Json entries = Json::array();
  for (const auto& e : commutator_report(p)) {
    if (rank(e.left) >= rank(e.right)) continue;
    bool canonical = e.left == "phi" && e.right == "pi0";
    ok = ok && e.commutator == (canonical ? want : DiffOp());
    ok = ok && (!canonical || e.integrated == want_integrated);
    entries.push_back({{"left", e.left},
                       {"right", e.right},
                       {"commutator", to_string(e.commutator)},
                       {"integrated", to_string(e.integrated)}});
  }
  doc["entries"] = entries;
  doc["expected"] = {{"commutator", to_string(want)}, {"integrated", to_string(want_integrated)}};
  return finish(doc, ok, cfg.format);
}

Outcome derive_eigen(DeriveTarget target, int j, const RunConfig& cfg) {
  Pipeline p = make_pipeline(cfg);
  SolutionSection section = make_section(cfg);
  bool energy = target == DeriveTarget::energy;
  Expr f = energy ? stress_energy(0, 0) : stress_energy(0, j);
  DiffOp op = energy ? energy_operator(p) : momentum_operator(j, p);
  DiffOp want_op = energy ? expected_energy_operator() : expected_momentum_operator(j);
  StateProfile state = psi_s(amplitude_norm());
  EigenOptions opts{.substitute_frequency = true, .massless = energy && cfg.massless};
  EigenReport r = eigen_analysis(op, state, section, opts);
  Expr want_lambda = energy ? expected_energy_eigenvalue(opts.massless) : expected_momentum_eigenvalue(j);
  bool want_eigen = !energy || opts.massless;

  Json doc;
  doc["target"] = energy ? "energy" : "momentum";
  if (!energy) doc["component"] = j;
  doc["mass"] = opts.massless ? "m = 0" : "symbolic m";
  doc["volume_mode"] = volume_label(cfg.volume_mode);
  doc["on_shell"] = section.on_shell;
  doc["input"] = to_string(f);
  doc["unrestricted"] = to_string(prequantize_adapted(f, p.quant));
  doc["restricted"] = to_string(quantize(f, p));
  doc["operator"] = to_string(op);
  doc["state"] = state.description;
  doc["pulled_state"] = to_string(r.pulled_state);
  doc["pulled_result"] = to_string(r.pulled_result);
  doc["eigenvalue"] = to_string(r.lambda);
  doc["is_eigen"] = r.is_eigen;
  doc["anomaly"] = to_string(r.anomaly);
  doc["residual"] = to_string(r.residual);
  doc["expected_operator"] = to_string(want_op);
  doc["expected_eigenvalue"] = to_string(want_lambda);
  if (energy && !opts.massless) {
    doc["note"] = "the mass term is (m^2 c^2/hbar^2) V gamma^2; the form with V/(A*Abar) agrees only when A*Abar = 1";
  }
  bool ok = op == want_op && r.lambda == want_lambda && r.residual.is_zero() && r.is_eigen == want_eigen;
  return finish(doc, ok, cfg.format);
}

Outcome check_oracle(const RunConfig& cfg) {
  numeric::OracleConfig oc;
  oc.seed = cfg.seed;
  oc.samples = cfg.samples;
  oc.h = cfg.h.value_or(oc.h);
  numeric::OracleSuiteReport r = numeric::run_oracle_suite(oc);

  Json doc;
  doc["check"] = "oracle";
  doc["seed"] = cfg.seed;
  doc["samples"] = cfg.samples;
  doc["h"] = oc.h;
  doc["tolerance"] = oc.tolerance;
  Json derivs = Json::array();
  for (const auto& d : r.derivatives) {
    derivs.push_back({{"expression", d.expression},
                      {"generator", std::string(name(d.generator))},
                      {"samples", d.samples},
                      {"max_error", d.max_error},
                      {"order", d.order},
                      {"status", status(d.passed)}});
  }
  doc["derivatives"] = derivs;
  Json ops = Json::array();
  for (const auto& o : r.operators) {
    ops.push_back({{"label", o.label}, {"samples", o.samples}, {"max_error", o.max_error}, {"status", status(o.passed)}});
  }
  doc["operators"] = ops;
  double worst = 0.0;
  bool comm_ok = true;
  for (const auto& c : r.commutators) {
    worst = std::max(worst, c.max_error);
    comm_ok = comm_ok && c.passed;
  }
  doc["commutator"] = {{"expected", "i*hbar*c/L^3"},
                       {"test_functions", r.commutators.size()},
                       {"max_error", worst},
                       {"status", status(comm_ok)}};
  return finish(doc, r.passed, cfg.format);
}

Outcome check_kg(const RunConfig& cfg) {
  numeric::GridConfig g;
  g.h = cfg.h.value_or(g.h);
  g.extent = cfg.extent;
  struct Case {
    const char* label;
    int dims;
    double mass;
    std::array<double, 4> k;
  };
  const Case cases[] = {
      {"massive wave, m = 1, k1 = 1", 2, 1.0, {std::sqrt(2.0), 1.0, 0.0, 0.0}},
      {"field at rest, k = 0, k0 = m", 2, 1.0, {1.0, 0.0, 0.0, 0.0}},
      {"constant field, m = 0", 2, 0.0, {0.0, 0.0, 0.0, 0.0}},
      {"massive wave in 3+1, m = 1, k = (1, 0.5, 0.25)", 4, 1.0, {std::sqrt(2.3125), 1.0, 0.5, 0.25}},
  };
  Json doc;
  doc["check"] = "kg";
  doc["h"] = g.h;
  doc["extent"] = g.extent;
  doc["isa"] = numeric::kernels::isa_name(numeric::kernels::best_available_isa());
  bool ok = true;
  Json out = Json::array();
  for (const Case& c : cases) {
    numeric::PlaneWave w;
    w.mass = c.mass;
    w.k = c.k;
    g.dimensions = c.dims;
    numeric::GridResidual r = numeric::kg_grid_residual(w, g);
    double bound = 5.0 * g.h * g.h * r.analytic_scale;
    bool pass = r.analytic_scale == 0.0 ? r.max_residual <= 1e-12
                                        : std::abs(r.order - 2.0) <= 0.2 && r.max_residual <= bound;
    ok = ok && pass;
    out.push_back({{"label", c.label},
                   {"dimensions", c.dims},
                   {"max_residual", r.max_residual},
                   {"max_residual_half_step", r.max_residual_half},
                   {"ratio", r.ratio},
                   {"order", r.order},
                   {"bound", bound},
                   {"status", status(pass)}});
  }
  doc["cases"] = out;
  return finish(doc, ok, cfg.format);
}

}  // namespace

Outcome cmd_quantize(const std::string& text, const RunConfig& cfg) {
  Expr f;
  try {
    f = parse_expr(text);
  } catch (const ParseError& e) {
    return error_outcome(e.what(), cfg.format);
  }
  Pipeline p = make_pipeline(cfg);
  DiffOp unrestricted = prequantize_adapted(f, p.quant);
  Json doc;
  doc["input"] = to_string(f);
  doc["volume_mode"] = volume_label(cfg.volume_mode);
  doc["unrestricted"] = to_string(unrestricted);
  doc["restricted"] = to_string(quantize(f, p));
  doc["preserves_states"] = preserves_states(unrestricted);
  doc["quadratic_in_pi0"] = is_quadratic_in_pi0(f);
  return {0, render(doc, cfg.format)};
}

Outcome cmd_derive(DeriveTarget target, int j, const RunConfig& cfg) {
  if (target == DeriveTarget::momentum && (j < 1 || j > 3)) {
    return error_outcome("momentum component must be 1, 2 or 3", cfg.format);
  }
  try {
    if (target == DeriveTarget::commutators) return derive_commutators(cfg);
    return derive_eigen(target, j, cfg);
  } catch (const std::exception& e) {
    Json doc;
    doc["error"] = e.what();
    return finish(doc, false, cfg.format);
  }
}

Outcome cmd_check(CheckTarget target, const RunConfig& cfg) {
  if (cfg.h && !(*cfg.h > 0.0)) return error_outcome("--h must be positive", cfg.format);
  if (target == CheckTarget::oracle) {
    if (cfg.samples < 1) return error_outcome("--samples must be at least 1", cfg.format);
    return check_oracle(cfg);
  }
  if (cfg.extent < 3) return error_outcome("--extent must be at least 3", cfg.format);
  return check_kg(cfg);
}

Outcome cmd_verify_all(const RunConfig& cfg) {
  if (cfg.samples < 1) return error_outcome("--samples must be at least 1", cfg.format);
  std::vector<NamedCheck> checks = run_verification_suite(cfg);
  int failed = 0;
  const NamedCheck* first = nullptr;
  for (const auto& c : checks) {
    if (!c.passed) {
      ++failed;
      if (!first) first = &c;
    }
  }
  int code = failed == 0 ? 0 : 1;
  if (cfg.format == Format::json) {
    Json doc;
    Json list = Json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name}, {"subject", c.subject}, {"status", status(c.passed)}, {"detail", c.detail}});
    }
    doc["checks"] = list;
    doc["total"] = checks.size();
    doc["passed"] = checks.size() - failed;
    doc["failed"] = failed;
    doc["first_failure"] = first ? Json(first->name) : Json(nullptr);
    return {code, doc.dump(2) + "\n"};
  }
  std::ostringstream out;
  for (const auto& c : checks) {
    out << status(c.passed) << "  " << c.name << "  " << c.subject;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
  }
  out << "summary: " << checks.size() << " checks, " << checks.size() - failed << " passed, " << failed
      << " failed\n";
  if (first) out << "first failure: " << first->name << " (" << first->subject << ")\n";
  return {code, out.str()};
}

}  // namespace polyquant::cli
