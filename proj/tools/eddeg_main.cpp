// eddeg: exact computation of Euclidean distance degrees.
//
// Subcommands: implicit, parametric, linear-count, conormal, multiview,
// euler, milnor. Reports are JSON on stdout (TSV via --format tsv);
// diagnostics go to stderr. Exit codes: 0 success, 1 usage or input errors,
// 2 disagreeing randomized trials, 3 resource limit exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "eddeg/critical.hpp"
#include "eddeg/euler.hpp"
#include "eddeg/multiview.hpp"
#include "eddeg/parse.hpp"
#include "eddeg/variety.hpp"

using namespace eddeg;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonOptions {
  int trials = 3;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t modulus = 0;  // 0: default (or EDDEG_MODULUS)
  std::string format = "json";
  bool rational = false;
  std::uint64_t max_degree = GroebnerOptions{}.max_degree;
  std::size_t max_basis = GroebnerOptions{}.max_basis_size;
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool counting) {
  if (counting) {
    cmd->add_option("--trials", opts->trials, "Number of agreement trials (>= 3)")
        ->check(CLI::Range(3, 1000));
    cmd->add_option("--seed", opts->seed, "Base seed for all random draws");
    cmd->add_option("--modulus", opts->modulus,
                    "Prime modulus for the first trial stream");
    cmd->add_flag("--rational", opts->rational,
                  "Count over Q instead of prime fields (slow)");
    cmd->add_option("--max-degree", opts->max_degree,
                    "Degree budget for Groebner runs");
    cmd->add_option("--max-basis", opts->max_basis,
                    "Basis-size budget for Groebner runs");
  }
  cmd->add_option("--format", opts->format, "Output format: json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
}

Protocol make_protocol(const CommonOptions& opts) {
  Protocol p;
  p.trials = opts.trials;
  p.seed = opts.seed;
  p.over_rationals = opts.rational;

  std::uint64_t modulus = opts.modulus;
  if (modulus == 0) {
    if (const char* env = std::getenv("EDDEG_MODULUS")) {
      modulus = std::strtoull(env, nullptr, 10);
      if (modulus == 0)
        throw Error(std::string("cannot parse EDDEG_MODULUS='") + env + "'");
    }
  }
  if (modulus != 0) {
    if (!is_prime(modulus) || modulus % 2 == 0)
      throw Error("modulus " + std::to_string(modulus) + " is not an odd prime");
    p.primes = {modulus,
                modulus == kDefaultModulus ? kAlternateModulus : kDefaultModulus};
  }
  p.groebner.max_degree = opts.max_degree;
  p.groebner.max_basis_size = opts.max_basis;
  return p;
}

ordered_json trials_to_json(const EDCertificate& cert) {
  ordered_json trials = ordered_json::array();
  for (const auto& t : cert.trials) {
    ordered_json row;
    row["prime"] = t.prime;
    row["seed"] = t.seed;
    row["count"] = t.raw.encoded();
    trials.push_back(std::move(row));
  }
  return trials;
}

void emit_tsv(std::ostream& out, const ordered_json& report) {
  for (const auto& [key, value] : report.items()) {
    if (key == "timings") continue;
    if (value.is_array() && !value.empty() && value[0].is_object()) {
      // Tables: one header line from the keys, one line per row.
      out << key;
      for (const auto& [col, cell] : value[0].items()) out << "\t" << col;
      out << "\n";
      for (const auto& row : value) {
        out << key;
        for (const auto& [col, cell] : row.items())
          out << "\t" << (cell.is_string() ? cell.get<std::string>() : cell.dump());
        out << "\n";
      }
    } else if (value.is_object()) {
      for (const auto& [sub, cell] : value.items())
        out << key << "." << sub << "\t"
            << (cell.is_string() ? cell.get<std::string>() : cell.dump()) << "\n";
    } else {
      out << key << "\t"
          << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

void emit(const ordered_json& report, const std::string& format) {
  if (format == "tsv")
    emit_tsv(std::cout, report);
  else
    std::cout << report.dump(2) << "\n";
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

ordered_json certificate_report(const std::string& command,
                                ordered_json inputs, const EDCertificate& cert,
                                const Protocol& protocol, long long ms) {
  ordered_json report;
  report["command"] = command;
  report["inputs"] = std::move(inputs);
  report["count"] = cert.count;
  report["trials"] = trials_to_json(cert);
  report["agreed"] = cert.agreed;
  report["seed"] = protocol.seed;
  report["modulus"] = protocol.primes[0];
  report["timings"] = ordered_json{{"total_ms", ms}};
  return report;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euclidean distance degrees of affine varieties"};
  app.require_subcommand(1);

  CommonOptions opts;

  std::string variety_path;
  bool check_codim = false;
  auto* implicit_cmd = app.add_subcommand(
      "implicit", "ED degree of an implicitly presented variety");
  implicit_cmd->add_option("file", variety_path, "variety file (# vars / # codim)")
      ->required();
  implicit_cmd->add_flag("--check-codim", check_codim,
                         "cross-check the declared codimension (slow, exact)");
  add_common(implicit_cmd, &opts, true);

  auto* parametric_cmd = app.add_subcommand(
      "parametric", "ED degree of a parametrically presented variety");
  parametric_cmd->add_option("file", variety_path, "variety file (# params)")
      ->required();
  add_common(parametric_cmd, &opts, true);

  auto* linear_cmd = app.add_subcommand(
      "linear-count", "critical points of a generic linear function");
  linear_cmd->add_option("file", variety_path, "implicit variety file")->required();
  add_common(linear_cmd, &opts, true);

  auto* conormal_cmd =
      app.add_subcommand("conormal", "conormal ideal and its dimension");
  conormal_cmd->add_option("file", variety_path, "implicit variety file")->required();
  add_common(conormal_cmd, &opts, false);

  std::size_t camera_count = 2;
  bool long_running = false;
  bool second_chart = false;
  auto* multiview_cmd = app.add_subcommand(
      "multiview", "ED degree of the affine multiview variety of n cameras");
  multiview_cmd->add_option("n", camera_count, "number of cameras (>= 2)")
      ->required()
      ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(64)));
  multiview_cmd->add_flag("--long", long_running,
                          "allow long-running camera counts (n >= 4)");
  multiview_cmd->add_flag("--verify-second-chart", second_chart,
                          "recount each trial in a second chart of the source");
  add_common(multiview_cmd, &opts, true);

  bool symbolic = false;
  long euler_from = 2, euler_to = 10;
  auto* euler_cmd = app.add_subcommand(
      "euler", "Euler-characteristic route: verification table or closed forms");
  euler_cmd->add_flag("--symbolic", symbolic, "print the closed forms in n");
  euler_cmd->add_option("--from", euler_from, "first table row")
      ->check(CLI::Range(2L, 1000L));
  euler_cmd->add_option("--to", euler_to, "last table row")
      ->check(CLI::Range(2L, 1000L));
  add_common(euler_cmd, &opts, false);

  std::string milnor_poly, milnor_vars = "x,y,z", milnor_at, milnor_model;
  auto* milnor_cmd = app.add_subcommand(
      "milnor", "Milnor number of an isolated singularity, or a model fiber");
  milnor_cmd->add_option("poly", milnor_poly, "polynomial with an isolated singularity");
  milnor_cmd->add_option("--vars", milnor_vars, "comma-separated variable names");
  milnor_cmd->add_option("--at", milnor_at, "critical point (default: origin)");
  milnor_cmd->add_option("--model", milnor_model,
                         "local model: smooth, node, umbrella, or triple")
      ->check(CLI::IsMember({"smooth", "node", "umbrella", "triple"}));
  add_common(milnor_cmd, &opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (implicit_cmd->parsed() || parametric_cmd->parsed()) {
      const bool wants_implicit = implicit_cmd->parsed();
      Protocol protocol = make_protocol(opts);
      VarietyPresentation v = load_variety(variety_path);
      if (wants_implicit != (v.mode() == VarietyMode::implicit))
        throw Error("variety file mode does not match the subcommand");
      if (check_codim && !codimension_consistent(v.implicit_data()))
        throw Error("declared codimension disagrees with ideal_dimension");
      EDCertificate cert = ed_degree(v, protocol);
      ordered_json inputs{{"file", variety_path}};
      emit(certificate_report(wants_implicit ? "implicit" : "parametric",
                              inputs, cert, protocol, elapsed_ms(start)),
           opts.format);
    } else if (linear_cmd->parsed()) {
      Protocol protocol = make_protocol(opts);
      VarietyPresentation v = load_variety(variety_path);
      if (v.mode() != VarietyMode::implicit)
        throw Error("linear-count needs an implicit variety file");
      EDCertificate cert = linear_critical_count(v.implicit_data(), protocol);
      emit(certificate_report("linear-count", ordered_json{{"file", variety_path}},
                              cert, protocol, elapsed_ms(start)),
           opts.format);
    } else if (conormal_cmd->parsed()) {
      VarietyPresentation v = load_variety(variety_path);
      if (v.mode() != VarietyMode::implicit)
        throw Error("conormal needs an implicit variety file");
      auto ideal = conormal_ideal(v.implicit_data());
      auto basis = groebner_basis(ideal, MonomialOrder::degrevlex());
      ordered_json report;
      report["command"] = "conormal";
      report["inputs"] = ordered_json{{"file", variety_path}};
      report["ring"] = ideal.ring->vars;
      ordered_json gens = ordered_json::array();
      for (const auto& g : ideal.generators) gens.push_back(g.to_string());
      report["generators"] = std::move(gens);
      report["dimension"] = ideal_dimension(basis);
      report["timings"] = ordered_json{{"total_ms", elapsed_ms(start)}};
      emit(report, opts.format);
    } else if (multiview_cmd->parsed()) {
      if (camera_count >= 4 && !long_running)
        throw Error("n >= 4 takes minutes per trial; pass --long to run it");
      Protocol protocol = make_protocol(opts);
      MultiviewOptions mv;
      mv.verify_second_chart = second_chart;
      EDCertificate cert = ed_degree_multiview(camera_count, protocol, mv);
      ordered_json inputs{{"n", camera_count}};
      ordered_json report = certificate_report("multiview", inputs, cert, protocol,
                                               elapsed_ms(start));
      report["closed_form"] = ed_degree_closed_form(camera_count);
      report["upper_bound"] = ed_degree_upper_bound(camera_count);
      emit(report, opts.format);
    } else if (euler_cmd->parsed()) {
      ordered_json report;
      report["command"] = "euler";
      if (symbolic) {
        report["inputs"] = ordered_json{{"symbolic", true}};
        ordered_json polys;
        polys["chi_total"] = chi_blowup().to_string();
        polys["chi_member"] = chi_smooth_member().to_string();
        polys["chi_divisor"] = chi_distance_divisor().to_string();
        polys["chi_infinity"] = chi_boundary().to_string();
        polys["chi_intersection"] = chi_distance_boundary().to_string();
        polys["ed_degree"] = ed_degree_via_euler().to_string();
        report["polynomials"] = std::move(polys);
      } else {
        if (euler_to < euler_from) throw Error("--to must be >= --from");
        report["inputs"] = ordered_json{{"from", euler_from}, {"to", euler_to}};
        ordered_json table = ordered_json::array();
        for (long n = euler_from; n <= euler_to; ++n) {
          EulerRow row = euler_row(n);
          ordered_json r;
          r["n"] = row.n;
          r["chi_total"] = row.chi_total;
          r["chi_member"] = row.chi_member;
          r["chi_divisor"] = row.chi_divisor;
          r["chi_infinity"] = row.chi_infinity;
          r["chi_intersection"] = row.chi_intersection;
          r["ed_degree"] = row.ed_degree;
          table.push_back(std::move(r));
        }
        report["table"] = std::move(table);
      }
      report["timings"] = ordered_json{{"total_ms", elapsed_ms(start)}};
      emit(report, opts.format);
    } else if (milnor_cmd->parsed()) {
      ordered_json report;
      report["command"] = "milnor";
      if (!milnor_model.empty()) {
        MilnorModelTag tag = milnor_model == "smooth"     ? MilnorModelTag::smooth
                             : milnor_model == "node"     ? MilnorModelTag::node
                             : milnor_model == "umbrella" ? MilnorModelTag::umbrella
                                                          : MilnorModelTag::triple;
        MilnorModel model = make_milnor_model(tag);
        report["inputs"] = ordered_json{{"model", milnor_model}};
        report["local_equation"] = model.local_equation.to_string();
        report["reduced_fiber_chi"] = model_fiber_chi(model);
      } else {
        if (milnor_poly.empty())
          throw Error("milnor needs a polynomial or --model");
        std::vector<std::string> vars = split_csv(milnor_vars);
        RingPtr ring = make_ring_q(vars);
        PolyQ f = parse_poly(milnor_poly, ring);
        std::vector<Rational> at(vars.size(), Rational(0));
        if (!milnor_at.empty()) {
          std::vector<std::string> coords = split_csv(milnor_at);
          if (coords.size() != at.size())
            throw Error("--at needs one coordinate per variable");
          for (std::size_t i = 0; i < coords.size(); ++i)
            at[i] = Rational::from_string(coords[i]);
        }
        report["inputs"] = ordered_json{{"poly", milnor_poly}, {"vars", vars}};
        report["milnor_number"] = milnor_number(f, at);
      }
      report["timings"] = ordered_json{{"total_ms", elapsed_ms(start)}};
      emit(report, opts.format);
    }
  } catch (const NonGeneric& e) {
    std::cerr << "eddeg: non-generic draw: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "eddeg: resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "eddeg: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
