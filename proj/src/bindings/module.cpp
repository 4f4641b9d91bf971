#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entrobell/entropy.hpp"
#include "entrobell/inequalities.hpp"
#include "entrobell/json_io.hpp"
#include "entrobell/probability.hpp"
#include "entrobell/quantum.hpp"
#include "entrobell/scan.hpp"

namespace py = pybind11;
using namespace entrobell;

namespace {

Outcome outcome_from_int(int v) {
  if (v != 1 && v != -1) {
    throw Error(ErrorCode::out_of_range,
                "outcomes must be +1 or -1, got " + std::to_string(v));
  }
  return v == 1 ? Outcome::plus : Outcome::minus;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entropy Venn diagrams and Bell-inequality checks for "
            "dichotomic variables";

  py::register_exception<Error>(m, "Error");
  m.attr("VIOLATION_TOLERANCE") = kViolationTolerance;

  py::enum_<InequalityId>(m, "InequalityId")
      .value("BELL1", InequalityId::bell1)
      .value("BELL2", InequalityId::bell2)
      .value("BELL3", InequalityId::bell3)
      .value("BELL_STD", InequalityId::bell_std)
      .value("EBELL1", InequalityId::ebell1)
      .value("EBELL2", InequalityId::ebell2)
      .value("EBELL3", InequalityId::ebell3)
      .value("EBELL_STD", InequalityId::ebell_std)
      .value("ECHSH", InequalityId::echsh)
      .value("WIGNER", InequalityId::wigner);

  py::enum_<Family>(m, "Family")
      .value("ENTROPIC", Family::entropic)
      .value("CONVENTIONAL", Family::conventional);

  py::class_<JointDistribution>(m, "JointDistribution")
      .def_readonly("variables", &JointDistribution::variables)
      .def_readonly("probabilities", &JointDistribution::probabilities)
      .def_property_readonly("arity", &JointDistribution::arity)
      .def("__repr__", [](const JointDistribution& j) {
        std::string out = "JointDistribution(";
        for (std::size_t i = 0; i < j.variables.size(); ++i) {
          if (i) out += ", ";
          out += j.variables[i];
        }
        return out + ")";
      });

  py::class_<CountTable>(m, "CountTable")
      .def_readonly("counts", &CountTable::counts)
      .def_property_readonly("total", &CountTable::total);

  py::class_<EntropyDiagram>(m, "EntropyDiagram")
      .def_readonly("alpha", &EntropyDiagram::alpha)
      .def_readonly("beta", &EntropyDiagram::beta)
      .def_readonly("gamma", &EntropyDiagram::gamma)
      .def_readonly("abar", &EntropyDiagram::abar)
      .def_readonly("bbar", &EntropyDiagram::bbar)
      .def_readonly("gbar", &EntropyDiagram::gbar)
      .def_readonly("delta", &EntropyDiagram::delta);

  py::class_<PairwiseEntropySummary>(m, "PairwiseEntropySummary")
      .def(py::init<double, double, double, double, double, double>(),
           py::arg("hA"), py::arg("hB"), py::arg("hC"), py::arg("iAB"),
           py::arg("iAC"), py::arg("iBC"))
      .def_readonly("hA", &PairwiseEntropySummary::hA)
      .def_readonly("hB", &PairwiseEntropySummary::hB)
      .def_readonly("hC", &PairwiseEntropySummary::hC)
      .def_readonly("iAB", &PairwiseEntropySummary::iAB)
      .def_readonly("iAC", &PairwiseEntropySummary::iAC)
      .def_readonly("iBC", &PairwiseEntropySummary::iBC);

  py::class_<MeasurementSetup>(m, "MeasurementSetup")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
      .def_readonly("theta", &MeasurementSetup::theta)
      .def_readonly("phi", &MeasurementSetup::phi);

  py::class_<CorrelationSet>(m, "CorrelationSet")
      .def(py::init<double, double, double, double, double>(), py::arg("ab"),
           py::arg("ac"), py::arg("bc"), py::arg("a_prime_b"),
           py::arg("a_a_prime"))
      .def_readonly("ab", &CorrelationSet::ab)
      .def_readonly("ac", &CorrelationSet::ac)
      .def_readonly("bc", &CorrelationSet::bc)
      .def_readonly("a_prime_b", &CorrelationSet::a_prime_b)
      .def_readonly("a_a_prime", &CorrelationSet::a_a_prime);

  py::class_<InequalityReport>(m, "InequalityReport")
      .def_readonly("id", &InequalityReport::id)
      .def_readonly("lhs", &InequalityReport::lhs)
      .def_readonly("rhs", &InequalityReport::rhs)
      .def_readonly("margin", &InequalityReport::margin)
      .def_readonly("violated", &InequalityReport::violated)
      .def("__repr__", [](const InequalityReport& r) {
        return std::string("InequalityReport(") + to_string(r.id) +
               (r.violated ? ", violated)" : ", satisfied)");
      });

  py::class_<NegativityEntry>(m, "NegativityEntry")
      .def_readonly("label", &NegativityEntry::label)
      .def_readonly("bound", &NegativityEntry::bound);

  py::class_<NegativityDiagnosis>(m, "NegativityDiagnosis")
      .def_readonly("entries", &NegativityDiagnosis::entries);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("phi", &SweepRow::phi)
      .def_readonly("lE1", &SweepRow::lE1)
      .def_readonly("lE2", &SweepRow::lE2)
      .def_readonly("lE3", &SweepRow::lE3)
      .def_readonly("lC1", &SweepRow::lC1)
      .def_readonly("lC2", &SweepRow::lC2)
      .def_readonly("lC3", &SweepRow::lC3);

  py::class_<OptimumReport>(m, "OptimumReport")
      .def_readonly("family", &OptimumReport::family)
      .def_readonly("theta_star", &OptimumReport::theta_star)
      .def_readonly("phi_star", &OptimumReport::phi_star)
      .def_readonly("lhs_star", &OptimumReport::lhs_star)
      .def_readonly("inequality_id", &OptimumReport::inequality_id);

  m.def("make_joint", &make_joint, py::arg("labels"), py::arg("table"),
        "Validate a probability table over 1-3 named +/-1 variables");
  m.def("marginalize", &marginalize, py::arg("joint"), py::arg("keep"),
        "Sum out every variable not in keep, in keep order");
  m.def("correlation", &correlation, py::arg("pair"),
        "Correlation coefficient of a two-variable distribution");
  m.def(
      "deterministic_bound",
      [](int a, int b, int c) {
        return deterministic_bound(outcome_from_int(a), outcome_from_int(b),
                                   outcome_from_int(c));
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "ab + ac - bc for fixed outcomes +/-1; never exceeds 1");
  m.def("make_count_table", &make_count_table, py::arg("counts"),
        "Validate an 8-cell population count table");
  m.def("wigner_check", &wigner_check, py::arg("table"),
        "Counting inequality n(a, not b) <= n(a, not c) + n(not b, c)");
  m.def("random_joint", &random_joint, py::arg("seed"), py::arg("n"),
        "Seeded pseudo-random distribution over n variables");

  m.def("shannon_entropy", &shannon_entropy, py::arg("joint"),
        "Entropy in bits with the 0*log(0) = 0 convention");
  m.def("mutual_information", &mutual_information, py::arg("joint"),
        py::arg("x"), py::arg("y"));
  m.def("conditional_entropy", &conditional_entropy, py::arg("joint"),
        py::arg("x"), py::arg("given"));
  m.def("conditional_mutual", &conditional_mutual, py::arg("joint"),
        py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("ternary_mutual", &ternary_mutual, py::arg("joint"),
        "Three-way mutual information; may be negative");
  m.def("ternary_diagram", &ternary_diagram, py::arg("joint"),
        "All seven entropy Venn cells of a three-variable distribution");
  m.def("pairwise_summary", &pairwise_summary, py::arg("joint"),
        "Marginal entropies and pairwise mutual informations");
  m.def("diagram_from_summary", &diagram_from_summary, py::arg("summary"),
        py::arg("delta"),
        "Rebuild all Venn cells from pairwise data plus an assumed delta");
  m.def("degree_sums", &degree_sums, py::arg("summary"),
        "The three delta-independent cell sums");
  m.def("mutual_from_correlation", &mutual_from_correlation, py::arg("c"),
        "Mutual information of a symmetric +/-1 pair with correlation c");

  m.def("singlet_pair_distribution", &singlet_pair_distribution,
        py::arg("axis1"), py::arg("axis2"),
        "Outcome table for spin measurements on a singlet pair");
  m.def("bell_correlations", &bell_correlations, py::arg("setup"));
  m.def(
      "bell_correlations",
      [](double theta, double phi) {
        return bell_correlations(MeasurementSetup(theta, phi));
      },
      py::arg("theta"), py::arg("phi"));
  m.def("bell_entropy_summary", &bell_entropy_summary, py::arg("setup"));
  m.def(
      "bell_entropy_summary",
      [](double theta, double phi) {
        return bell_entropy_summary(MeasurementSetup(theta, phi));
      },
      py::arg("theta"), py::arg("phi"));

  m.def("conventional_bell", &conventional_bell, py::arg("correlations"),
        "The three correlation inequalities bounded by 1");
  m.def("standard_bell", &standard_bell, py::arg("correlations"),
        "|ab - ac| + bc <= 1");
  m.def("entropic_bell", &entropic_bell, py::arg("summary"),
        "The three entropic inequalities bounded by marginal entropies");
  m.def("entropic_bell_standard", &entropic_bell_standard,
        py::arg("summary"), "|iAB - iAC| + iBC <= 1");
  m.def("entropic_chsh", &entropic_chsh, py::arg("i_a_prime_b"),
        py::arg("i_ac"), py::arg("i_bc"), py::arg("i_a_a_prime"),
        "Four-observable entropic inequality bounded by 2");
  m.def("diagnose_negativity", &diagnose_negativity, py::arg("summary"),
        "Conditional entropies forced negative by the pairwise data");

  m.def("sweep_phi", &sweep_phi, py::arg("theta"), py::arg("phi_min"),
        py::arg("phi_max"), py::arg("steps"),
        py::call_guard<py::gil_scoped_release>(),
        "Tabulate all six inequality left-hand sides over a phi grid");
  m.def("maximize_violation", &maximize_violation, py::arg("family"),
        py::arg("resolution") = 720,
        py::call_guard<py::gil_scoped_release>(),
        "Locate the angles maximizing a family's worst margin");
  m.def(
      "emit_rows",
      [](const std::vector<SweepRow>& rows, const std::string& path) {
        emit_rows(rows, path);
      },
      py::arg("rows"), py::arg("path"),
      "Write sweep rows as a byte-stable CSV file");

  m.def("load_distribution", &load_distribution, py::arg("path"),
        "Read a distribution from its JSON file format");
  m.def("load_count_table", &load_count_table, py::arg("path"),
        "Read a count table from its JSON file format");
}
