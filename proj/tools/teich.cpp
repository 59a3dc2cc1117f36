// teich: command-line front end. Every command prints one JSON document (or
// the selftest table); module errors exit 1 with {"error": {...}}, usage
// errors exit 2.

#include <CLI11.hpp>
#include <cfloat>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "json_io.hpp"
#include "teich/acceptance/acceptance.hpp"
#include "teich/error.hpp"
#include "teich/freenc/lie.hpp"
#include "teich/graphs/enumerate.hpp"
#include "teich/graphs/fusing.hpp"
#include "teich/graphs/graph_json.hpp"
#include "teich/graphs/rigidification.hpp"
#include "teich/kz/associator.hpp"
#include "teich/kz/monodromy.hpp"
#include "teich/kz/transport.hpp"
#include "teich/schottky/schottky.hpp"

namespace {

using namespace teich;
using cli::json;

struct RunConfig {
  int order = 6;
  int nc_length = 5;
  int weight = 6;
  std::optional<double> epsilon;
  std::optional<double> tol;
  std::uint64_t seed = 20240611;
  std::string input;
  std::string output;
  bool quick = false;
};

json config_json(const RunConfig& c) {
  json j = {{"order", c.order}, {"nc_length", c.nc_length}, {"weight", c.weight}, {"seed", c.seed}};
  j["epsilon"] = c.epsilon ? json(*c.epsilon) : json(nullptr);
  j["tol"] = c.tol ? json(*c.tol) : json(nullptr);
  return j;
}

void emit(const RunConfig& c, json body) {
  body["config"] = config_json(c);
  const std::string text = body.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw Error(ErrorKind::io, "cannot write " + c.output);
  out << text;
}

std::string require_path(const std::string& local, const std::string& fallback, const char* what) {
  if (!local.empty()) return local;
  if (!fallback.empty()) return fallback;
  throw Error(ErrorKind::precondition, std::string("missing input: pass --") + what + " or --input");
}

void check_positive(const RunConfig& c) {
  if (c.order < 1 || c.nc_length < 1 || c.weight < 1) {
    throw Error(ErrorKind::precondition, "--order, --nc-length and --weight must be positive");
  }
  if ((c.epsilon && !(*c.epsilon > 0)) || (c.tol && !(*c.tol > 0))) {
    throw Error(ErrorKind::precondition, "--epsilon and --tol must be positive");
  }
}

std::pair<int, int> parse_type(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse, "--type expects g,n, got '" + text + "'");
  }
}

// ---- graphs -------------------------------------------------------------

json report_json(const graphs::StableGraph& g) {
  const auto report = graphs::validate(g);
  json violations = json::array();
  for (const auto& v : report.violations) {
    json item = {{"kind", graphs::to_string(v.kind)}, {"message", v.message}};
    item["vertex"] = v.vertex ? json(*v.vertex) : json(nullptr);
    violations.push_back(item);
  }
  json j = {{"ok", report.ok()}, {"violations", violations}};
  if (report.ok()) {
    const auto [genus, n] = graphs::type_of(g);
    j["type"] = json::array({genus, n});
    j["trivalent"] = graphs::is_trivalent(g);
  }
  return j;
}

json branch_strings(const std::array<graphs::Branch, 2>& bs) {
  return json::array({graphs::to_string(bs[0]), graphs::to_string(bs[1])});
}

void add_graphs(CLI::App& app, RunConfig& cfg) {
  auto* cmd = app.add_subcommand("graphs", "stable graphs: validate, enumerate, rigidify, fuse");
  cmd->require_subcommand(1);

  cmd->add_subcommand("validate", "check a graph file")->callback([&cfg] {
    const auto g = graphs::graph_from_json(cli::read_json_file(require_path("", cfg.input, "input")));
    emit(cfg, {{"command", "graphs validate"}, {"report", report_json(g)}});
  });

  auto* en = cmd->add_subcommand("enumerate", "trivalent graphs of a type, up to isomorphism");
  static std::string type_text;
  auto* type = &type_text;
  en->add_option("--type", *type, "g,n")->required();
  en->callback([&cfg, type] {
    const auto [g, n] = parse_type(*type);
    graphs::EnumerationOptions options;
    if (const char* dir = std::getenv("TEICH_DATA_DIR"); dir && *dir) options.cache_dir = dir;
    json list = json::array();
    for (const auto& item : graphs::enumerate_trivalent(g, n, options)) {
      list.push_back({{"certificate", item.certificate}, {"graph", graphs::to_json(item.graph)}});
    }
    emit(cfg, {{"command", "graphs enumerate"}, {"type", json::array({g, n})}, {"count", list.size()}, {"graphs", list}});
  });

  cmd->add_subcommand("rigidify", "first rigidification and its coordinates")->callback([&cfg] {
    const auto g = graphs::graph_from_json(cli::read_json_file(require_path("", cfg.input, "input")));
    const auto tau = graphs::find_rigidification(g);
    const auto coords = graphs::coordinate_system(g, tau);
    json alpha = json::array();
    for (const auto& b : coords.alpha_variables) alpha.push_back(graphs::to_string(b));
    emit(cfg, {{"command", "graphs rigidify"},
               {"rigidification", graphs::to_json(tau)},
               {"alpha_variables", alpha},
               {"q_variables", coords.q_variables},
               {"dimension", coords.dimension()}});
  });

  auto* fu = cmd->add_subcommand("fuse", "both fusing rewrites at an edge");
  static int edge_id = 0;
  static std::optional<int> new_edge_id;
  auto* edge = &edge_id;
  auto* new_edge = &new_edge_id;
  fu->add_option("--edge", *edge, "edge id")->required();
  fu->add_option("--new-edge", *new_edge, "id of the created edge");
  fu->callback([&cfg, edge, new_edge] {
    const auto g = graphs::graph_from_json(cli::read_json_file(require_path("", cfg.input, "input")));
    json results = json::array();
    const auto rewrites = graphs::fusing_rewrite(g, *edge, *new_edge);
    for (const auto& r : rewrites) {
      results.push_back({{"graph", graphs::to_json(r.graph)},
                         {"new_edge", r.new_edge},
                         {"at_source", branch_strings(r.at_source)},
                         {"at_target", branch_strings(r.at_target)}});
    }
    emit(cfg, {{"command", "graphs fuse"},
               {"edge", *edge},
               {"results", results},
               {"contracted", graphs::to_json(rewrites.front().contracted)}});
  });
}

// ---- schottky -----------------------------------------------------------

struct SchottkyArgs {
  std::string graph;
  std::string alpha;
  std::string word;
};

json matrix_json(const schottky::ProjMat& m) {
  const auto s = m.to_strings();
  return json::array({json::array({s[0][0], s[0][1]}), json::array({s[1][0], s[1][1]})});
}

json point_json(const schottky::SeriesPoint& p) { return p ? json(p->to_string()) : json("inf"); }

schottky::SchottkyContext make_context(const RunConfig& cfg, const SchottkyArgs& args, json& alpha_out) {
  const auto g = graphs::graph_from_json(cli::read_json_file(require_path(args.graph, cfg.input, "graph")));
  schottky::AlphaMap alpha;
  if (args.alpha.empty()) {
    std::mt19937_64 rng(cfg.seed);
    alpha = schottky::random_alpha(g, rng);
  } else {
    alpha = schottky::parse_alpha(args.alpha);
  }
  alpha_out = json::object();
  for (const auto& [h, a] : alpha) alpha_out[graphs::to_string(h)] = schottky::to_string(a);
  return schottky::SchottkyContext(g, alpha, cfg.order);
}

void add_schottky(CLI::App& app, RunConfig& cfg) {
  auto* cmd = app.add_subcommand("schottky", "universal Schottky group over truncated series");
  cmd->require_subcommand(1);
  static SchottkyArgs storage;
  auto* args = &storage;
  auto add_common = [args](CLI::App* sub) {
    sub->add_option("--graph", args->graph, "graph JSON file (defaults to --input)");
    sub->add_option("--alpha", args->alpha, "assignments like \"+0=1/2,-0=inf\"; random from --seed if omitted");
  };

  auto* gens = cmd->add_subcommand("gens", "generator matrices of the free group");
  add_common(gens);
  gens->callback([&cfg, args] {
    json alpha;
    const auto ctx = make_context(cfg, *args, alpha);
    json list = json::array();
    for (const auto& path : schottky::free_generators(ctx)) {
      list.push_back({{"word", schottky::to_string(path)},
                      {"matrix", matrix_json(schottky::word_to_element(ctx, path))}});
    }
    emit(cfg, {{"command", "schottky gens"}, {"alpha", alpha}, {"base_vertex", ctx.base_vertex()},
               {"generators", list}});
  });

  auto* el = cmd->add_subcommand("element", "matrix of an edge path");
  add_common(el);
  el->add_option("--word", args->word, "oriented edges like \"+0,-1\"")->required();
  el->callback([&cfg, args] {
    json alpha;
    const auto ctx = make_context(cfg, *args, alpha);
    const auto path = schottky::parse_path(args->word);
    const auto m = schottky::word_to_element(ctx, path);
    emit(cfg, {{"command", "schottky element"}, {"alpha", alpha}, {"word", schottky::to_string(path)},
               {"matrix", matrix_json(m)}, {"det", m.det().to_string()}});
  });

  auto* fp = cmd->add_subcommand("fixed-points", "fixed points and multiplier of a closed path");
  add_common(fp);
  fp->add_option("--word", args->word, "closed cyclically reduced path")->required();
  fp->callback([&cfg, args] {
    json alpha;
    const auto ctx = make_context(cfg, *args, alpha);
    const auto path = schottky::parse_path(args->word);
    const auto gamma = schottky::word_to_element(ctx, path);
    const auto data = schottky::fixed_point_data(ctx, path);
    json residual = json::array();
    for (const auto& r : schottky::cross_ratio_residual(gamma, data)) residual.push_back(r.to_string());
    emit(cfg, {{"command", "schottky fixed-points"},
               {"alpha", alpha},
               {"word", schottky::to_string(path)},
               {"attractive", point_json(data.attractive)},
               {"repulsive", point_json(data.repulsive)},
               {"multiplier", data.multiplier.to_string()},
               {"cross_ratio_residual", residual}});
  });
}

// ---- algebra ------------------------------------------------------------

struct AlgebraArgs {
  int g = 1;
  int n = 1;
  std::optional<int> r;
  std::optional<int> degree;
};

void add_algebra(CLI::App& app, RunConfig& cfg) {
  auto* cmd = app.add_subcommand("algebra", "free Lie algebra and torsor dimensions");
  cmd->require_subcommand(1);
  static AlgebraArgs storage;
  auto* args = &storage;
  auto add_common = [args](CLI::App* sub) {
    sub->add_option("--g", args->g, "genus");
    sub->add_option("--n", args->n, "number of marked points");
    sub->add_option("--r", args->r, "number of letters (default 2g + n - 1)");
    sub->add_option("--degree", args->degree, "largest degree (default --nc-length)");
  };
  auto setup = [&cfg, args] {
    check_positive(cfg);
    const int r = args->r.value_or(2 * args->g + args->n - 1);
    const int degree = args->degree.value_or(cfg.nc_length);
    if (args->g < 0 || args->n < 0 || r < 1 || degree < 1) {
      throw Error(ErrorKind::precondition, "need g, n >= 0, r >= 1 and degree >= 1");
    }
    return std::pair{r, degree};
  };

  auto* witt = cmd->add_subcommand("witt", "graded dimensions of the free Lie algebra");
  add_common(witt);
  witt->callback([&cfg, setup] {
    const auto [r, degree] = setup();
    json dims = json::array();
    for (int k = 1; k <= degree; ++k) dims.push_back(freenc::witt_dim(r, k));
    emit(cfg, {{"command", "algebra witt"}, {"r", r}, {"degree", degree}, {"dims", dims},
               {"lcs_quotients", freenc::lcs_quotient_dims(r, degree)}});
  });

  auto* ideal = cmd->add_subcommand("ideal-dims", "graded dimensions of the augmentation ideal");
  add_common(ideal);
  ideal->callback([&cfg, setup] {
    const auto [r, degree] = setup();
    emit(cfg, {{"command", "algebra ideal-dims"}, {"r", r}, {"degree", degree},
               {"dims", freenc::ideal_graded_dims(r, degree)}});
  });

  auto* pol = cmd->add_subcommand("polylog-dims", "dimensions of Log and Pol by degree");
  add_common(pol);
  pol->callback([&cfg, setup] {
    const auto [r, degree] = setup();
    json rows = json::array();
    for (int k = 1; k <= degree; ++k) {
      const auto d = freenc::polylog_dims_rank(r, k);
      rows.push_back({{"k", k}, {"witt", d.witt}, {"derived_span", d.derived_span}, {"log", d.log_dim},
                      {"pol", d.pol_dim}});
    }
    emit(cfg, {{"command", "algebra polylog-dims"}, {"r", r}, {"degree", degree}, {"dims", rows}});
  });

  auto* weights = cmd->add_subcommand("weights", "weight grading of degree-m words");
  add_common(weights);
  weights->callback([&cfg, setup, args] {
    const auto [r, degree] = setup();
    if (args->r && *args->r != 2 * args->g + args->n - 1) {
      throw Error(ErrorKind::precondition, "weights is defined by (g, n); --r must be 2g + n - 1");
    }
    json dims = json::object();
    for (const auto& [w, d] : freenc::weight_graded_dims(args->g, args->n, degree)) dims[std::to_string(w)] = d;
    emit(cfg, {{"command", "algebra weights"}, {"g", args->g}, {"n", args->n}, {"r", r}, {"degree", degree},
               {"dims", dims}});
  });
}

// ---- kz -----------------------------------------------------------------

struct KzArgs {
  std::string pair;
  std::string res;
  std::string path;
  std::string forms;
  std::string word;
  std::string residues;
  std::string method = "ode";
  std::string regularization = "frobenius";
  bool regularized = false;
};

kz::ConnectionOptions connection_options(const RunConfig& cfg, const KzArgs& args) {
  kz::ConnectionOptions o;
  if (args.regularization == "plain") {
    o.regularization = kz::Regularization::plain;
  } else if (args.regularization != "frobenius") {
    throw Error(ErrorKind::parse, "--regularization must be frobenius or plain");
  }
  o.epsilon = cfg.epsilon;
  if (cfg.tol) o.rtol = *cfg.tol;
  return o;
}

json connection_json(const kz::ConnectionMatrix& m) {
  json j = {{"phi", cli::to_json(m.phi)}, {"method", kz::to_string(m.method)}, {"error_estimate", m.error_estimate}};
  j["warning"] = m.warning ? json(*m.warning) : json(nullptr);
  return j;
}

json universal_json(const kz::UniversalAssociator& u) {
  json coeffs = json::object();
  for (const auto& [w, c] : u.coefficients.terms()) {
    std::string word;
    for (auto letter : w) word += letter == 0 ? 'a' : 'b';
    coeffs[word.empty() ? "1" : word] = c;
  }
  return {{"weight", u.weight}, {"coefficients", coeffs}, {"error_estimate", u.error}};
}

void add_kz(CLI::App& app, RunConfig& cfg) {
  auto* cmd = app.add_subcommand("kz", "KZ connection matrices, monodromy and transport");
  cmd->require_subcommand(1);
  static KzArgs storage;
  auto* args = &storage;

  cmd->add_subcommand("associator", "universal associator to weight --weight")->callback([&cfg, args] {
    check_positive(cfg);
    const auto u = kz::universal_associator(cfg.weight, connection_options(cfg, *args));
    emit(cfg, {{"command", "kz associator"}, {"associator", universal_json(u)}});
  });

  auto* phi = cmd->add_subcommand("phi", "connection matrix Phi(A, B) of a nilpotent pair");
  phi->add_option("--pair", args->pair, "{\"A\": matrix, \"B\": matrix}");
  phi->add_option("--method", args->method, "ode or series")->check(CLI::IsMember({"ode", "series"}));
  phi->add_option("--regularization", args->regularization, "frobenius or plain");
  phi->callback([&cfg, args] {
    check_positive(cfg);
    const auto j = cli::read_json_file(require_path(args->pair, cfg.input, "pair"));
    if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
      throw Error(ErrorKind::parse, "pair file needs keys A and B");
    }
    const kz::NilpotentPair pair(cli::rational_matrix_from_json(j["A"]), cli::rational_matrix_from_json(j["B"]));
    const auto options = connection_options(cfg, *args);
    json body = {{"command", "kz phi"}};
    if (args->method == "series") {
      body["result"] = connection_json(kz::specialize_associator(kz::universal_associator(cfg.weight, options), pair));
    } else {
      body["result"] = connection_json(kz::ode_connection_matrix(pair, options));
      body["epsilon"] = kz::effective_epsilon(options);
      body["regularization"] = kz::to_string(options.regularization);
    }
    emit(cfg, body);
  });

  auto* dehn = cmd->add_subcommand("dehn", "half-Dehn monodromy exp(pi i N)");
  dehn->add_option("--res", args->res, "{\"res\": matrix} or a bare matrix");
  dehn->callback([&cfg, args] {
    const auto j = cli::read_json_file(require_path(args->res, cfg.input, "res"));
    const auto n = cli::rational_matrix_from_json(j.is_object() && j.contains("res") ? j["res"] : j);
    const auto m = kz::half_dehn_monodromy(n);
    json exact = json::array();
    for (std::size_t i = 0; i < m.exact.size(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < m.exact.size(); ++k) row.push_back(m.exact.entry_string(i, k));
      exact.push_back(row);
    }
    // Only the evaluation of the exact polynomial in pi i is inexact.
    const double err = 8 * DBL_EPSILON * static_cast<double>(m.exact.size()) * (1 + kz::max_abs(m.numeric));
    emit(cfg, {{"command", "kz dehn"}, {"exact", exact}, {"numeric", cli::to_json(m.numeric)},
               {"error_estimate", err}});
  });

  auto* tr = cmd->add_subcommand("transport", "nilpotent transport of forms along a path");
  tr->add_option("--path", args->path, "segments JSON");
  tr->add_option("--forms", args->forms, "forms JSON")->required();
  tr->add_flag("--regularized", args->regularized, "regularized transport along [0, 1]; --path is ignored");
  tr->callback([&cfg, args] {
    check_positive(cfg);
    const auto forms = cli::read_json_file(args->forms);
    json body = {{"command", "kz transport"}};
    if (args->regularized) {
      const auto m = kz::regularized_unit_transport(cli::forms_from_json(forms), connection_options(cfg, *args));
      body["result"] = connection_json(m);
    } else {
      const auto fp = cli::path_from_json(cli::read_json_file(require_path(args->path, cfg.input, "path")), forms);
      kz::TransportOptions options;
      if (cfg.tol) options.rtol = *cfg.tol;
      const auto y = kz::nilpotent_transport(fp, options);
      const auto loose = kz::nilpotent_transport(fp, {options.rtol * 100});
      body["result"] = {{"transport", cli::to_json(y)}, {"error_estimate", kz::max_abs_diff(y, loose)}};
    }
    emit(cfg, body);
  });

  auto* gr = cmd->add_subcommand("groupoid", "evaluate a groupoid word on residues");
  gr->add_option("--word", args->word, "word JSON")->required();
  gr->add_option("--residues", args->residues, "{\"<edge>\": matrix}")->required();
  gr->callback([&cfg, args] {
    check_positive(cfg);
    const auto word = graphs::word_from_json(cli::read_json_file(args->word));
    const auto rj = cli::read_json_file(args->residues);
    if (!rj.is_object()) throw Error(ErrorKind::parse, "residues file must map edge ids to matrices");
    kz::ResidueMap residues;
    for (const auto& [key, value] : rj.items()) {
      try {
        std::size_t used = 0;
        const int id = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        residues.emplace(id, cli::rational_matrix_from_json(value));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::parse, "residue key '" + key + "' is not an edge id");
      }
    }
    const auto u = kz::universal_associator(cfg.weight, connection_options(cfg, *args));
    const auto r = kz::evaluate_groupoid_word(word, residues, u);
    emit(cfg, {{"command", "kz groupoid"}, {"value", cli::to_json(r.value)}, {"error_estimate", r.error_estimate},
               {"warnings", r.warnings}});
  });
}

// ---- selftest -----------------------------------------------------------

int selftest_status = 0;

void add_selftest(CLI::App& app, RunConfig& cfg) {
  app.add_subcommand("selftest", "run the acceptance suite")->callback([&cfg] {
    acceptance::AcceptanceOptions options;
    options.seed = cfg.seed;
    options.quick = cfg.quick;
    int passed = 0;
    std::string table;
    for (const auto& r : acceptance::run_all(options)) {
      table += acceptance::format_line(r, false) + "\n";
      passed += r.passed ? 1 : 0;
    }
    table += std::to_string(passed) + "/" + std::to_string(acceptance::kCriteria) + " criteria passed (seed " +
             std::to_string(cfg.seed) + ")\n";
    if (cfg.output.empty()) {
      std::cout << table;
    } else {
      std::ofstream(cfg.output) << table;
    }
    selftest_status = passed == acceptance::kCriteria ? 0 : 1;
  });
}

void print_error(const Error& e) {
  json body = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  body["index"] = e.index() ? json(*e.index()) : json(nullptr);
  std::cout << json{{"error", body}}.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"teich: Schottky groups, stable graphs, free Lie algebras and KZ monodromy"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--order", cfg.order, "q-series truncation order")->capture_default_str();
  app.add_option("--nc-length", cfg.nc_length, "noncommutative series length")->capture_default_str();
  app.add_option("--weight", cfg.weight, "associator weight")->capture_default_str();
  app.add_option("--epsilon", cfg.epsilon, "endpoint distance for connection matrices");
  app.add_option("--tol", cfg.tol, "integrator relative tolerance");
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--input", cfg.input, "input file");
  app.add_option("--output", cfg.output, "output file (default stdout)");
  app.add_flag("--quick", cfg.quick, "pinned sample sizes in selftest");

  add_graphs(app, cfg);
  add_schottky(app, cfg);
  add_algebra(app, cfg);
  add_kz(app, cfg);
  add_selftest(app, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    print_error(e);
    return 1;
  } catch (const std::exception& e) {
    print_error(Error(ErrorKind::numeric, e.what()));
    return 1;
  }
  return selftest_status;
}
