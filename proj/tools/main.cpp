#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "entrobell/json_io.hpp"

namespace {

using entrobell::Error;
using entrobell::ErrorCode;
using nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;
constexpr const char* kSchemaVersion = "1";

double to_radians(double angle, bool degrees) {
  return degrees ? angle * (kPi / 180.0) : angle;
}

void print(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

entrobell::JointDistribution load_triple(const std::string& path) {
  entrobell::JointDistribution joint = entrobell::load_distribution(path);
  if (joint.arity() != 3) {
    throw Error(ErrorCode::bad_arity,
                "this command needs a three-variable distribution, got " +
                    std::to_string(joint.arity()) + " variable(s)");
  }
  return joint;
}

void run_diagram(const std::string& dist_path) {
  const auto joint = load_triple(dist_path);
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["variables"] = joint.variables;
  out["summary"] = to_json(entrobell::pairwise_summary(joint));
  out["diagram"] = to_json(entrobell::ternary_diagram(joint));
  print(out);
}

void run_check(const std::string& dist_path, bool have_angles, double theta,
               double phi) {
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  entrobell::CorrelationSet corr{};
  entrobell::PairwiseEntropySummary summary{};
  if (!dist_path.empty()) {
    const auto joint = load_triple(dist_path);
    const auto& v = joint.variables;
    const double ab =
        entrobell::correlation(entrobell::marginalize(joint, {v[0], v[1]}));
    const double ac =
        entrobell::correlation(entrobell::marginalize(joint, {v[0], v[2]}));
    const double bc =
        entrobell::correlation(entrobell::marginalize(joint, {v[1], v[2]}));
    // A' is modeled as the exactly anticorrelated twin of A.
    corr = entrobell::CorrelationSet{ab, ac, bc, -ab, -1.0};
    summary = entrobell::pairwise_summary(joint);
    out["source"] =
        ordered_json{{"kind", "distribution"}, {"variables", v}};
  } else {
    if (!have_angles) {
      throw Error(ErrorCode::bad_range,
                  "check needs either --dist or both --theta and --phi");
    }
    const entrobell::MeasurementSetup setup(theta, phi);
    corr = entrobell::bell_correlations(setup);
    summary = entrobell::bell_entropy_summary(setup);
    out["source"] = ordered_json{
        {"kind", "quantum"}, {"theta", setup.theta}, {"phi", setup.phi}};
  }
  out["correlations"] = to_json(corr);
  out["summary"] = to_json(summary);
  ordered_json reports = ordered_json::array();
  for (const auto& r : entrobell::conventional_bell(corr)) {
    reports.push_back(to_json(r));
  }
  reports.push_back(to_json(entrobell::standard_bell(corr)));
  for (const auto& r : entrobell::entropic_bell(summary)) {
    reports.push_back(to_json(r));
  }
  reports.push_back(to_json(entrobell::entropic_bell_standard(summary)));
  reports.push_back(to_json(entrobell::entropic_chsh(
      entrobell::mutual_from_correlation(corr.a_prime_b), summary.iAC,
      summary.iBC, entrobell::mutual_from_correlation(corr.a_a_prime))));
  out["reports"] = std::move(reports);
  out["diagnosis"] = to_json(entrobell::diagnose_negativity(summary));
  print(out);
}

void run_sweep(double theta, double phi_min, double phi_max, int steps,
               const std::string& out_path) {
  const auto rows = entrobell::sweep_phi(theta, phi_min, phi_max, steps);
  entrobell::emit_rows(rows, out_path);
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["theta"] = theta;
  out["phi_min"] = phi_min;
  out["phi_max"] = phi_max;
  out["steps"] = steps;
  out["rows"] = rows.size();
  out["out"] = out_path;
  print(out);
}

void run_maximize(const std::string& family_name, int resolution) {
  const entrobell::Family family = family_name == "entropic"
                                       ? entrobell::Family::entropic
                                       : entrobell::Family::conventional;
  const auto optimum = entrobell::maximize_violation(family, resolution);
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out.update(to_json(optimum));
  print(out);
}

void run_wigner(const std::string& counts_path) {
  const auto table = entrobell::load_count_table(counts_path);
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out.update(to_json(entrobell::wigner_check(table)));
  print(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Entropy Venn diagrams and Bell-inequality checks for dichotomic "
      "variables"};
  app.require_subcommand(1);

  std::string dist_path;
  std::string counts_path;
  std::string out_path;
  std::string family_name;
  double theta = 0.0;
  double phi = 0.0;
  double phi_min = 0.0;
  double phi_max = kPi;
  int steps = 721;
  int resolution = 720;
  bool degrees = false;

  auto* diagram = app.add_subcommand(
      "diagram",
      "Entropy Venn diagram and pairwise summary of a 3-variable "
      "distribution");
  diagram->add_option("--dist", dist_path, "distribution JSON file")
      ->required();

  auto* check = app.add_subcommand(
      "check",
      "Evaluate all Bell inequalities from a distribution file or from "
      "measurement angles");
  auto* check_dist =
      check->add_option("--dist", dist_path, "distribution JSON file");
  auto* check_theta =
      check->add_option("--theta", theta, "axis angle of observable B");
  auto* check_phi =
      check->add_option("--phi", phi, "axis angle of observable C");
  check->add_flag("--degrees", degrees, "angles are given in degrees");
  check_dist->excludes(check_theta)->excludes(check_phi);
  check_theta->needs(check_phi);
  check_phi->needs(check_theta);

  auto* sweep = app.add_subcommand(
      "sweep", "Tabulate inequality left-hand sides over a phi range (CSV)");
  sweep->add_option("--theta", theta, "axis angle of observable B")
      ->required();
  sweep->add_option("--phi-min", phi_min, "sweep start (default 0)");
  auto* sweep_phi_max =
      sweep->add_option("--phi-max", phi_max, "sweep end (default pi)");
  sweep->add_option("--steps", steps, "number of grid points (default 721)");
  sweep->add_option("--out", out_path, "CSV output file")->required();
  sweep->add_flag("--degrees", degrees, "angles are given in degrees");

  auto* maximize = app.add_subcommand(
      "maximize", "Locate the angles maximizing a family's violation");
  maximize
      ->add_option("--family", family_name, "entropic or conventional")
      ->required()
      ->check(CLI::IsMember({"entropic", "conventional"}));
  maximize->add_option("--resolution", resolution,
                       "coarse grid resolution (default 720)");

  auto* wigner = app.add_subcommand(
      "wigner", "Evaluate the counting inequality on a count table");
  wigner->add_option("--counts", counts_path, "count table JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (diagram->parsed()) {
      run_diagram(dist_path);
    } else if (check->parsed()) {
      const bool have_angles = check_theta->count() > 0;
      run_check(dist_path, have_angles, to_radians(theta, degrees),
                to_radians(phi, degrees));
    } else if (sweep->parsed()) {
      // The built-in phi_max default is already in radians; only convert it
      // when the user actually supplied a value.
      const double phi_max_rad =
          sweep_phi_max->count() > 0 ? to_radians(phi_max, degrees) : phi_max;
      run_sweep(to_radians(theta, degrees), to_radians(phi_min, degrees),
                phi_max_rad, steps, out_path);
    } else if (maximize->parsed()) {
      run_maximize(family_name, resolution);
    } else if (wigner->parsed()) {
      run_wigner(counts_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::io_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
