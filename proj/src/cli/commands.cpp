// Copyright 2026 The bonafide Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bonafide/cli/commands.hpp"

#include <cmath>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "bonafide/errors.hpp"
#include "bonafide/invariants.hpp"
#include "bonafide/physicality.hpp"
#include "bonafide/separability.hpp"
#include "bonafide/standard_form.hpp"
#include "bonafide/symplectic.hpp"
#include "bonafide/williamson.hpp"

namespace bonafide::cli {

using Json = nlohmann::ordered_json;

namespace {

Json optional_real(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json margins_json(const Margins& margins) {
  auto out = Json::array();
  for (const auto& m : margins) {
    out.push_back({{"name", m.name},
                   {"value", m.value},
                   {"bound", m.bound},
                   {"strict", m.strict},
                   {"passes", m.passes()}});
  }
  return out;
}

Json bona_fide_json(const BonaFideReport& r) {
  return {{"route", to_string(r.route)},
          {"verdict", r.verdict},
          {"borderline", r.borderline},
          {"nu_minus", optional_real(r.nu_minus)},
          {"margins", margins_json(r.margins)}};
}

Json classification_json(const Classification& c) {
  return {{"route", to_string(c.route)},
          {"tag", to_string(c.tag)},
          {"reason", c.reason},
          {"nu_minus", optional_real(c.nu_minus)},
          {"nu_tilde_minus", optional_real(c.nu_tilde_minus)},
          {"margins", margins_json(c.margins)}};
}

Json invariants_json(const TwoModeInvariants& inv) {
  return {{"det_a", inv.det_a},         {"det_b", inv.det_b},
          {"det_c", inv.det_c},         {"det_v", inv.det_v},
          {"i4", inv.i4},               {"delta", inv.delta},
          {"delta_tilde", inv.delta_tilde}, {"gamma_sep", inv.gamma_sep}};
}

Json header(std::string_view command, const MatrixDocument& doc, const Tolerance& tol) {
  Json j;
  j["command"] = command;
  if (doc.label) j["label"] = *doc.label;
  j["tolerance"] = tolerance_to_json(tol);
  j["matrix"] = matrix_to_json(doc.matrix);
  return j;
}

std::string family_label(const FamilySpec& spec) {
  std::string label(to_string(spec.family));
  switch (spec.family) {
    case Family::RandomPhysical:
    case Family::RandomSymmetric:
      return label + "(seed=" + std::to_string(spec.seed) + ")";
    default:
      break;
  }
  label += '(';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i > 0) label += ", ";
    label += format_short(spec.params[i]);
  }
  return label + ')';
}

bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_array()) return false;
    for (const auto& x : row) {
      if (!x.is_number()) return false;
    }
  }
  return true;
}

bool is_margin_list(const Json& j) {
  return j.is_array() && !j.empty() && j.front().is_object() && j.front().contains("name");
}

std::string scalar_text(const Json& j) {
  if (j.is_null()) return "n/a";
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (j.is_number()) return format_short(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(std::string& out, const Json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    out += indent + key + ":";
    if (is_matrix(value)) {
      out += '\n';
      for (const auto& row : value) {
        out += indent + "  ";
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c > 0) out += ' ';
          out += format_short(row[c].get<double>());
        }
        out += '\n';
      }
    } else if (is_margin_list(value)) {
      out += '\n';
      for (const auto& m : value) {
        out += indent + "  " + m["name"].get<std::string>() + " = " + scalar_text(m["value"]) +
               "  [" + (m["passes"].get<bool>() ? "pass" : "FAIL") +
               (m["strict"].get<bool>() ? ", strict" : "") + ", bound " +
               scalar_text(m["bound"]) + "]\n";
      }
    } else if (value.is_object()) {
      out += '\n';
      render(out, value, indent + "  ");
    } else if (value.is_array()) {
      for (const auto& x : value) out += ' ' + scalar_text(x);
      out += '\n';
    } else {
      out += ' ' + scalar_text(value) + '\n';
    }
  }
}

}  // namespace

Json classify_report(const MatrixDocument& doc, const Tolerance& tol) {
  const auto& v = doc.matrix;
  require_two_mode(v, tol);
  const auto global = classify_global(v, tol);
  const auto local = classify_local(v, tol);

  auto j = header("classify", doc, tol);
  j["tag"] = to_string(global.tag);
  j["reason"] = global.reason;
  j["nu_minus"] = optional_real(global.nu_minus);
  j["nu_tilde_minus"] = optional_real(global.nu_tilde_minus);
  j["simon_margin"] = simon_inequality_margin(v, tol);
  j["invariants"] = invariants_json(two_mode_invariants(v, tol));
  j["bona_fide"] = {{"oracle", bona_fide_json(check_oracle(v, tol))},
                    {"global", bona_fide_json(check_global(v, tol))},
                    {"local", bona_fide_json(check_local(v, tol))}};
  j["classification"] = {{"global", classification_json(global)},
                         {"local", classification_json(local)}};
  return j;
}

Json invariants_report(const MatrixDocument& doc, const Tolerance& tol) {
  const auto& v = doc.matrix;
  require_two_mode(v, tol);
  auto j = header("invariants", doc, tol);
  j["invariants"] = invariants_json(two_mode_invariants(v, tol));
  Json spectrum = {{"nu_minus", nullptr},
                   {"nu_plus", nullptr},
                   {"nu_tilde_minus", nullptr},
                   {"nu_tilde_plus", nullptr}};
  if (is_positive_definite(v, tol)) {
    const auto s = symplectic_spectrum_2mode(v, tol);
    const auto t = ppt_spectrum_2mode(v, tol);
    spectrum = {{"nu_minus", s.nu_minus},
                {"nu_plus", s.nu_plus},
                {"nu_tilde_minus", t.nu_minus},
                {"nu_tilde_plus", t.nu_plus}};
  }
  j["spectrum"] = spectrum;
  return j;
}

Json standard_form_report(const MatrixDocument& doc, const Tolerance& tol) {
  const auto& v = doc.matrix;
  require_two_mode(v, tol);
  const auto p = reduce_to_standard_form(v, tol);
  const auto std_v = p.assemble();
  auto j = header("standard-form", doc, tol);
  j["a"] = p.a;
  j["b"] = p.b;
  j["c_plus"] = p.c_plus;
  j["c_minus"] = p.c_minus;
  j["s_local"] = matrix_to_json(p.s_local);
  j["standard_form"] = matrix_to_json(std_v);
  j["residual"] = max_abs_diff(congruence(v, p.s_local), std_v);
  return j;
}

Json williamson_report(const MatrixDocument& doc, const Tolerance& tol) {
  const auto& v = doc.matrix;
  const auto d = williamson_decompose(v, tol);
  const auto n = static_cast<std::size_t>(v.rows() / 2);
  const auto om = omega(n);
  auto j = header("williamson", doc, tol);
  j["modes"] = n;
  j["spectrum"] = d.spectrum;
  j["degenerate"] = d.degenerate;
  j["w"] = matrix_to_json(d.w);
  j["s"] = matrix_to_json(d.s);
  j["residual_symplectic"] = max_abs_diff(d.s * om * d.s.transpose(), om);
  j["residual_williamson"] = max_abs_diff(congruence(v, d.s), d.w);
  return j;
}

Json generate_document(const FamilySpec& spec) {
  const auto m = generate(spec);
  Json j;
  j["label"] = family_label(spec);
  j["family"] = to_string(spec.family);
  j["params"] = spec.params;
  if (spec.family == Family::RandomPhysical || spec.family == Family::RandomSymmetric) {
    j["seed"] = spec.seed;
  }
  j["matrix"] = matrix_to_json(m);
  return j;
}

std::vector<double> SweepRange::points() const {
  if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step)) {
    throw ParameterError("sweep range must be finite");
  }
  if (!(step > 0)) throw ParameterError("sweep step must be positive");
  if (to < from) throw ParameterError("sweep range is empty (--to < --from)");
  const double span = (to - from) / step;
  if (span > 1e7) throw ParameterError("sweep has more than 1e7 points");
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) xs[i] = from + static_cast<double>(i) * step;
  return xs;
}

std::string sweep_csv(Family family, const SweepRange& range, const Tolerance& tol) {
  switch (family) {
    case Family::SimonVx:
    case Family::TwoModeSqueezed:
    case Family::Thermal:
      break;
    default:
      throw ParameterError("family " + std::string(to_string(family)) +
                           " has no sweep parameter");
  }
  tol.validate();
  std::string out = std::string(kSweepHeader) + '\n';
  auto cell = [](const std::optional<double>& x) { return x ? format_real(*x) : std::string(); };
  for (double x : range.points()) {
    const auto v = generate({family, {x}, 0});
    const auto inv = two_mode_invariants(v, tol);
    const auto cls = classify_global(v, tol);
    std::optional<double> nu, nu_t;
    if (is_positive_definite(v, tol)) {
      nu = symplectic_spectrum_2mode(v, tol).nu_minus;
      nu_t = ppt_spectrum_2mode(v, tol).nu_minus;
    }
    out += format_real(x) + ',' + format_real(inv.det_v) + ',' + format_real(inv.delta) + ',' +
           format_real(inv.delta_tilde) + ',' + cell(nu) + ',' + cell(nu_t) + ',' +
           format_real(heisenberg_oracle(v, tol).min_eigenvalue) + ',' +
           format_real(simon_inequality_margin(v, tol)) + ',' + std::string(to_string(cls.tag)) +
           '\n';
  }
  return out;
}

std::string render_text(const Json& report) {
  std::string out;
  render(out, report, "");
  return out;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bona fide, separability and normal-form checks for Gaussian covariance matrices",
               "bonafide"};
  app.require_subcommand(1);

  struct Io {
    std::string input = "-";
    std::string format = "text";
    std::string out;
    double tol_rel = Tolerance{}.rel;
    double tol_abs = Tolerance{}.abs;
    CLI::Option* rel_opt = nullptr;
    CLI::Option* abs_opt = nullptr;
  } io;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", io.format, "text or machine (JSON)")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--out", io.out, "write the report to PATH instead of stdout");
  };
  auto add_tolerance = [&](CLI::App* sub) {
    io.rel_opt = sub->add_option("--tol-rel", io.tol_rel, "relative tolerance (default 1e-9)");
    io.abs_opt = sub->add_option("--tol-abs", io.tol_abs, "absolute tolerance (default 1e-12)");
  };

  std::vector<std::pair<std::string, CLI::App*>> matrix_commands;
  const std::pair<const char*, const char*> matrix_specs[] = {
      {"classify", "bona fide verdicts, separability tag, margins and invariants"},
      {"invariants", "local and global invariants with both symplectic spectra"},
      {"standard-form", "local symplectic reduction to (a, b, c+, c-)"},
      {"williamson", "symplectic S and W with S V S^T = W, plus residuals"},
  };
  for (const auto& [name, desc] : matrix_specs) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("--input", io.input,
                    "JSON document or whitespace rows; '-' reads stdin (default)");
    add_output(sub);
    add_tolerance(sub);
    matrix_commands.emplace_back(name, sub);
  }

  std::string family_name;
  std::vector<double> params;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand(
      "gen",
      "emit a named matrix. Families: vacuum; thermal NU [NU2]; two_mode_squeezed R; "
      "simon_vx X; random_physical and random_symmetric (use --seed). random_physical draws "
      "nu_1, nu_2 uniform in [1, 3] and applies S = L3 B L2 B L1, where each L is a random "
      "local rotation-squeeze-rotation and B = [[I, I], [-I, I]]/sqrt(2) is the balanced "
      "two-mode mixer. random_symmetric has entries uniform in [-2, 2].");
  gen->add_option("--family", family_name, "family name")->required();
  gen->add_option("--param", params, "family parameter; repeat for several")
      ->allow_extra_args(false);
  gen->add_option("--seed", seed, "seed for the random families");
  add_output(gen);

  SweepRange range;
  std::string sweep_family;
  auto* sweep = app.add_subcommand(
      "sweep",
      "CSV over a one-parameter family (simon_vx, two_mode_squeezed, thermal). Columns: " +
          std::string(kSweepHeader));
  sweep->add_option("--family", sweep_family, "family name")->required();
  sweep->add_option("--from", range.from, "first parameter value")->required();
  sweep->add_option("--to", range.to, "last parameter value")->required();
  sweep->add_option("--step", range.step, "parameter step")->required();
  sweep->add_option("--out", io.out, "write the CSV to PATH instead of stdout");
  add_tolerance(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto emit = [&](const std::string& text) {
    if (io.out.empty()) {
      out << text;
    } else {
      write_file(io.out, text);
    }
  };

  try {
    Tolerance flags;
    flags.rel = io.tol_rel;
    flags.abs = io.tol_abs;
    flags.validate();
    const bool rel_given = io.rel_opt && io.rel_opt->count() > 0;
    const bool abs_given = io.abs_opt && io.abs_opt->count() > 0;

    for (const auto& [name, sub] : matrix_commands) {
      if (!sub->parsed()) continue;
      std::string text;
      if (io.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      } else {
        text = read_file(io.input);
      }
      const auto doc = parse_document(text, flags);
      Tolerance tol = doc.tolerance.value_or(Tolerance{});
      if (rel_given) tol.rel = flags.rel;
      if (abs_given) tol.abs = flags.abs;
      require_symmetric(doc.matrix, tol);

      Json report;
      if (name == "classify") {
        report = classify_report(doc, tol);
      } else if (name == "invariants") {
        report = invariants_report(doc, tol);
      } else if (name == "standard-form") {
        report = standard_form_report(doc, tol);
      } else {
        report = williamson_report(doc, tol);
      }
      emit(io.format == "machine" ? report.dump(2) + '\n' : render_text(report));
      return kOk;
    }

    if (gen->parsed()) {
      const FamilySpec spec{family_from_string(family_name), params, seed};
      const auto doc = generate_document(spec);
      if (io.format == "machine") {
        emit(doc.dump(2) + '\n');
      } else {
        emit("# " + doc["label"].get<std::string>() + '\n' + matrix_to_text(generate(spec)));
      }
      return kOk;
    }

    if (sweep->parsed()) {
      emit(sweep_csv(family_from_string(sweep_family), range, flags));
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "shape error: " << e.what() << '\n';
    return kShape;
  } catch (const SymmetryError& e) {
    err << "shape error: " << e.what() << '\n';
    return kShape;
  } catch (const BlockNotPositiveDefinite& e) {
    err << "not positive definite: block " << e.block() << " has smallest eigenvalue "
        << format_short(e.min_eigenvalue()) << '\n';
    return kPositivity;
  } catch (const NotPositiveDefinite& e) {
    err << "not positive definite: smallest eigenvalue " << format_short(e.min_eigenvalue())
        << '\n';
    return kPositivity;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bonafide");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace bonafide::cli
