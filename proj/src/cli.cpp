#include "framelab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>

#include "framelab/duals.hpp"
#include "framelab/errors.hpp"
#include "framelab/frame_io.hpp"
#include "framelab/frame_ops.hpp"
#include "framelab/json_text.hpp"
#include "framelab/retro.hpp"
#include "framelab/scenarios.hpp"

namespace framelab::cli {

namespace {

using nlohmann::json;

struct Config {
  double tol = kDefaultTol;
  std::string output = "json";
  std::uint64_t seed = 0;
  std::optional<Index> depth;
};

int digits_for(const Config& config) { return config.output == "pretty" ? 6 : 17; }

json bounds_to_json(const FrameBounds& b) {
  return json{{"lower", b.lower}, {"upper", b.upper}, {"optimal", b.optimal}};
}

json complex_vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i)out.push_back(json::array({v(i).real(), v(i).imag()}));
  return out;
}

json real_vector_to_json(const RealVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

ComplexVector parse_vector_arg(const std::string& text) {
  std::vector<Complex> entries;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) throw ParseError("--vector: empty component in '" + text + "'");
    const auto sep = token.find(':');
    try {
      if (sep == std::string::npos) {
        entries.emplace_back(std::stod(token), 0.0);
      } else {
        entries.emplace_back(std::stod(token.substr(0, sep)), std::stod(token.substr(sep + 1)));
      }
    } catch (const std::exception&) {
      throw ParseError("--vector: cannot parse component '" + token + "'");
    }
  }
  if (entries.empty()) throw ParseError("--vector: no components given");
  ComplexVector v(static_cast<Index>(entries.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = entries[static_cast<std::size_t>(i)];
  return v;
}

OmegaSubset parse_omega0(const std::string& text) {
  OmegaSubset subset;
  if (text.empty()) return subset;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) subset.excluded.push_back(token);
  }
  return subset;
}

// Flattens a report to "key,value" CSV rows; scenario reports get the
// assertion table instead (handled by the caller).
void flatten_csv(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten_csv(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  if (j.is_array()) {
    bool scalars = true;
    for (const auto& item : j) {
      if (item.is_structured()) scalars = false;
    }
    if (scalars) {
      out += prefix + ",";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ";";
        first = false;
        out += item.is_number_float() ? io::format_double(item.get<double>(), 17) : item.dump();
      }
      out += "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten_csv(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out += prefix + ",";
  out += j.is_number_float() ? io::format_double(j.get<double>(), 17)
                             : (j.is_string() ? j.get<std::string>() : j.dump());
  out += "\n";
}

std::string render_scenario_csv(const json& report) {
  std::string out = "name,measured,expected,tolerance,pass\n";
  for (const auto& a : report["assertions"]) {
    auto cell = [](const json& v) {
      return v.is_number_float() ? io::format_double(v.get<double>(), 17)
                                 : (v.is_string() ? v.get<std::string>() : v.dump());
    };
    out += cell(a["name"]) + "," + cell(a["measured"]) + "," + cell(a["expected"]) + "," +
           cell(a["tolerance"]) + "," + (a["pass"].get<bool>() ? "true" : "false") + "\n";
  }
  return out;
}

std::string render_scenario_pretty(const json& report) {
  std::string out = "scenario " + report["scenario"].get<std::string>() + " (" +
                    report["anchor"].get<std::string>() + ", " +
                    report["kind"].get<std::string>() + "), n = " +
                    std::to_string(report["n"].get<long long>()) + "\n";
  for (const auto& a : report["assertions"]) {
    auto cell = [](const json& v) {
      return v.is_number_float() ? io::format_double(v.get<double>(), 6)
                                 : (v.is_string() ? v.get<std::string>() : v.dump());
    };
    out += std::string(a["pass"].get<bool>() ? "  pass  " : "  FAIL  ") +
           a["name"].get<std::string>() + ": measured " + cell(a["measured"]) + ", expected " +
           cell(a["expected"]);
    const double tol = a["tolerance"].get<double>();
    if (tol > 0) out += " (tol " + io::format_double(tol, 6) + ")";
    out += "\n";
  }
  for (const auto& note : report["notes"]) {
    out += "  note: " + note.get<std::string>() + "\n";
  }
  out += report["all_pass"].get<bool>() ? "all assertions passed\n" : "ASSERTION FAILURES\n";
  return out;
}

void emit_report(const json& report, const Config& config, std::ostream& out) {
  if (config.output == "csv") {
    if (report.is_object() && report.contains("assertions")) {
      out << render_scenario_csv(report);
    } else {
      std::string text;
      flatten_csv(report, "", text);
      out << text;
    }
    return;
  }
  if (config.output == "pretty" && report.is_object() && report.contains("assertions")) {
    out << render_scenario_pretty(report);
    return;
  }
  out << io::dump_json(report, digits_for(config), 2) << "\n";
}

// Frame files always round-trip bit-exactly, so they are emitted at 17
// significant digits whatever the output mode.
void emit_frame(const Frame& f, std::ostream& out) {
  out << io::dump_json(io::frame_to_json(f), 17, 2) << "\n";
}

json retro_verdict_to_json(const RetroVerdict& v) {
  json witness = nullptr;
  json profile = nullptr;
  if (v.witness) witness = complex_vector_to_json(*v.witness);
  if (v.witness_profile) profile = real_vector_to_json(*v.witness_profile);
  return json{{"verdict", std::string(to_string(v.verdict))},
              {"max_biorth_residual", v.biorth.max_residual},
              {"a0", v.candidate_bounds.lower},
              {"b0", v.candidate_bounds.upper},
              {"rank_deficit", v.rank_deficit},
              {"witness", witness},
              {"truncation_dim", v.truncation_dim},
              {"witness_profile", profile},
              {"note", v.note}};
}

json biorth_to_json(const BiorthReport& report) {
  json rows = json::array();
  for (Index r = 0; r < report.residuals.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < report.residuals.cols(); ++c) row.push_back(report.residuals(r, c));
    rows.push_back(std::move(row));
  }
  return json{{"row_labels", report.row_labels},
              {"max_residual", report.max_residual},
              {"holds", report.holds},
              {"residuals", rows}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;

  CLI::App app{"framelab: frame bounds, dual frames and retro-dual diagnostics on finite "
               "measure spaces"};
  app.require_subcommand(1);
  app.add_option("--tol", config.tol, "tolerance for classification and duality checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--output", config.output, "report format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for randomized constructions")->capture_default_str();

  std::string frame_path, second_path, candidate_path, omega0_text, vector_text, scenario_name;
  Index count = 3;
  Index depth_arg = -1;
  Index scenario_n = -1;
  double quad_a = 0.0, quad_b = 0.0;
  Index quad_m = 0;

  auto* bounds_cmd = app.add_subcommand("bounds", "optimal frame bounds of a frame file");
  bounds_cmd->add_option("frame", frame_path, "frame file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "frame classification flags and bounds");
  classify_cmd->add_option("frame", frame_path, "frame file")->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual frame construction and verification");
  dual_cmd->require_subcommand(1);
  auto* dual_canonical = dual_cmd->add_subcommand("canonical", "canonical dual frame");
  dual_canonical->add_option("frame", frame_path, "frame file")->required();
  auto* dual_alternates = dual_cmd->add_subcommand("alternates", "distinct verified duals");
  dual_alternates->add_option("frame", frame_path, "frame file")->required();
  dual_alternates->add_option("--count", count, "how many duals (canonical first)")
      ->capture_default_str();
  auto* dual_verify = dual_cmd->add_subcommand("verify", "check a dual pair");
  dual_verify->add_option("frame", frame_path, "frame file F")->required();
  dual_verify->add_option("dual", second_path, "candidate dual file G")->required();

  auto* biorth_cmd = app.add_subcommand("biorth", "biorthogonality checks and construction");
  auto* biorth_construct = biorth_cmd->add_subcommand("construct", "minimal-norm biorthogonal family");
  biorth_construct->add_option("frame", frame_path, "frame file")->required();
  biorth_construct->add_option("--omega0", omega0_text, "comma-separated labels to exclude");
  biorth_cmd->add_option("frame", frame_path, "frame file F");
  biorth_cmd->add_option("candidate", second_path, "candidate file G");
  biorth_cmd->add_option("--omega0", omega0_text, "comma-separated labels to exclude");

  auto* exactness_cmd = app.add_subcommand("exactness", "per-point span distances");
  exactness_cmd->add_option("frame", frame_path, "frame file")->required();

  auto* profile_cmd = app.add_subcommand("distance-profile", "distances to nested spans");
  profile_cmd->add_option("frame", frame_path, "frame file G")->required();
  profile_cmd->add_option("--vector", vector_text, "comma-separated entries; re:im for complex")
      ->required();
  profile_cmd->add_option("--depth", depth_arg, "profile depth (default: all points)")
      ->check(CLI::NonNegativeNumber);

  auto* retro_cmd = app.add_subcommand("retro", "retro-dual existence diagnostics");
  retro_cmd->require_subcommand(1);
  auto* retro_verdict_cmd = retro_cmd->add_subcommand("verdict", "combined existence verdict");
  retro_verdict_cmd->add_option("frame", frame_path, "frame file F")->required();
  retro_verdict_cmd->add_option("--candidate", candidate_path, "candidate dual file G");
  retro_verdict_cmd->add_option("--omega0", omega0_text, "comma-separated labels to exclude");

  auto* scenario_cmd = app.add_subcommand("scenario", "worked-example scenarios");
  scenario_cmd->require_subcommand(1);
  auto* scenario_run = scenario_cmd->add_subcommand("run", "run one scenario");
  scenario_run->add_option("name", scenario_name, "scenario name")->required();
  scenario_run->add_option("--n", scenario_n, "size parameter (n >= 3)");
  auto* scenario_list = scenario_cmd->add_subcommand("list", "list the scenario registry");

  auto* quadrature_cmd = app.add_subcommand("quadrature", "emit a uniform quadrature measure space");
  quadrature_cmd->add_option("--a", quad_a, "interval start")->required();
  quadrature_cmd->add_option("--b", quad_b, "interval end")->required();
  quadrature_cmd->add_option("--m", quad_m, "node count")->required();

  // global options (--tol, --output, --seed) may appear after subcommands
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bounds_cmd->parsed()) {
      const Frame f = io::read_frame_file(frame_path);
      emit_report(bounds_to_json(optimal_bounds(f)), config, out);
      return 0;
    }
    if (classify_cmd->parsed()) {
      const Frame f = io::read_frame_file(frame_path);
      const FrameClass cls = classify(f, config.tol);
      emit_report(json{{"is_bessel", cls.is_bessel},
                       {"is_frame", cls.is_frame},
                       {"is_tight", cls.is_tight},
                       {"is_parseval", cls.is_parseval},
                       {"is_exact", cls.is_exact},
                       {"bounds", bounds_to_json(cls.bounds)}},
                  config, out);
      return 0;
    }
    if (dual_canonical->parsed()) {
      emit_frame(canonical_dual(io::read_frame_file(frame_path), config.tol), out);
      return 0;
    }
    if (dual_alternates->parsed()) {
      const Frame f = io::read_frame_file(frame_path);
      const DualFamily family = alternate_duals(f, count, config.seed, 1.0, config.tol);
      json duals = json::array();
      for (const Frame& dual : family.duals) duals.push_back(io::frame_to_json(dual));
      emit_report(json{{"count", static_cast<Index>(family.duals.size())},
                       {"canonical_only", family.canonical_only},
                       {"duals", duals}},
                  config, out);
      return 0;
    }
    if (dual_verify->parsed()) {
      const Frame f = io::read_frame_file(frame_path);
      const Frame g = io::read_frame_file(second_path);
      const DualPairReport report = verify_hilbert_dual(f, g, config.tol);
      emit_report(json{{"reconstruction_residual", report.reconstruction_residual},
                       {"g_bounds", bounds_to_json(report.g_bounds)},
                       {"is_dual", report.is_dual}},
                  config, out);
      return 0;
    }
    if (biorth_construct->parsed()) {
      const Frame f = io::read_frame_file(frame_path);
      emit_frame(min_norm_biorthogonal(f, parse_omega0(omega0_text), config.tol), out);
      return 0;
    }
    if (biorth_cmd->parsed()) {
      if (frame_path.empty() || second_path.empty()) {
        err << "biorth needs two frame files (or the 'construct' subcommand)\n";
        return 2;
      }
      const Frame f = io::read_frame_file(frame_path);
      const Frame g = io::read_frame_file(second_path);
      emit_report(biorth_to_json(check_biorthogonality(f, g, parse_omega0(omega0_text), config.tol)),
                  config, out);
      return 0;
    }
    if (exactness_cmd->parsed()) {
      const Frame f = io::read_frame_file(frame_path);
      const RealVector distances = exactness_profile(f);
      emit_report(json{{"labels", f.space().labels()},
                       {"distances", real_vector_to_json(distances)},
                       {"exact", bool((distances.array() > config.tol).all())}},
                  config, out);
      return 0;
    }
    if (profile_cmd->parsed()) {
      const Frame g = io::read_frame_file(frame_path);
      const ComplexVector x = parse_vector_arg(vector_text);
      std::optional<Index> depth;
      if (depth_arg >= 0) depth = depth_arg;
      const DistanceProfile profile = distance_profile(g, x, depth);
      emit_report(json{{"x", complex_vector_to_json(profile.x)},
                       {"depth", profile.distances.size()},
                       {"distances", real_vector_to_json(profile.distances)}},
                  config, out);
      return 0;
    }
    if (retro_verdict_cmd->parsed()) {
      const Frame f = io::read_frame_file(frame_path);
      std::optional<Frame> candidate;
      if (!candidate_path.empty()) candidate = io::read_frame_file(candidate_path);
      const RetroVerdict verdict =
          retro_dual_verdict(f, parse_omega0(omega0_text), std::move(candidate), config.tol);
      emit_report(retro_verdict_to_json(verdict), config, out);
      return 0;
    }
    if (scenario_run->parsed()) {
      std::optional<Index> n;
      if (scenario_n >= 0) n = scenario_n;
      const scenarios::Report report = scenarios::run_scenario(scenario_name, n);
      emit_report(scenarios::to_json(report), config, out);
      return report.all_pass ? 0 : 1;
    }
    if (scenario_list->parsed()) {
      json entries = json::array();
      for (const auto& info : scenarios::list_scenarios()) {
        entries.push_back({{"name", info.name},
                           {"anchor", info.anchor},
                           {"kind", info.kind},
                           {"parameter_range", info.parameter_range},
                           {"default_n", info.default_n}});
      }
      emit_report(json{{"scenarios", entries}}, config, out);
      return 0;
    }
    if (quadrature_cmd->parsed()) {
      const Quadrature quad = uniform_quadrature(quad_a, quad_b, quad_m);
      out << io::dump_json(io::measure_space_to_json(quad.space, &quad.nodes), 17, 2) << "\n";
      return 0;
    }
  } catch (const InfeasibleError& e) {
    emit_report(json{{"error", "infeasible"},
                     {"message", e.what()},
                     {"offending_index", e.offending_index}},
                config, out);
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }

  err << "no subcommand given\n";
  return 2;
}

}  // namespace framelab::cli
