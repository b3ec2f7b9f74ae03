#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetaloc/census.hpp"
#include "thetaloc/characteristic.hpp"
#include "thetaloc/errors.hpp"
#include "thetaloc/incidence.hpp"
#include "thetaloc/json_io.hpp"
#include "thetaloc/siegel.hpp"
#include "thetaloc/theta.hpp"
#include "thetaloc/verify.hpp"

namespace py = pybind11;
using namespace thetaloc;

namespace {

py::int_ big_to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Riemann theta functions with half-integer characteristics and "
              "the incidence structure of the genus-3 reducible locus";

    py::register_exception<truncation_error>(m, "TruncationError");
    py::register_exception<indeterminate_error>(m, "IndeterminateError");
    py::register_exception<degeneracy_error>(m, "DegeneracyError");
    py::register_exception<resample_error>(m, "ResampleError");

    py::enum_<Parity>(m, "Parity")
        .value("Even", Parity::Even)
        .value("Odd", Parity::Odd);

    py::class_<Characteristic>(m, "Characteristic")
        .def(py::init<int>(), py::arg("genus"))
        .def(py::init<std::vector<std::uint8_t>, std::vector<std::uint8_t>>(),
             py::arg("top"), py::arg("bottom"))
        .def_static("from_string", &Characteristic::from_string)
        .def_property_readonly("genus", &Characteristic::genus)
        .def_property_readonly("top", &Characteristic::top_bits)
        .def_property_readonly("bottom", &Characteristic::bottom_bits)
        .def("parity", &Characteristic::parity)
        .def("is_even", &Characteristic::is_even)
        .def("restricted", &Characteristic::restricted, py::arg("positions"))
        .def("lex_index", &Characteristic::lex_index)
        .def("__str__", &Characteristic::to_compact_string)
        .def("__repr__", &Characteristic::to_string)
        .def("__eq__", [](const Characteristic& a, const Characteristic& b) {
            return a == b;
        })
        .def("__lt__", [](const Characteristic& a, const Characteristic& b) {
            return a < b;
        })
        .def("__hash__", &Characteristic::lex_index);

    m.def("direct_sum", &direct_sum, py::arg("parts"));
    m.def("split", &split, py::arg("delta"), py::arg("block_sizes"));
    m.def("enumerate_characteristics", &enumerate_characteristics,
          py::arg("genus"), py::arg("parity") = std::nullopt);
    m.def("even_count", &even_count);
    m.def("odd_count", &odd_count);

    py::class_<PeriodMatrix>(m, "PeriodMatrix")
        .def(py::init<Eigen::MatrixXcd>(), py::arg("omega"))
        .def_property_readonly("genus", &PeriodMatrix::genus)
        .def_property_readonly("matrix", &PeriodMatrix::matrix)
        .def_property_readonly("min_imag_eigenvalue",
                               &PeriodMatrix::min_imag_eigenvalue);

    py::class_<SymplecticMatrix>(m, "SymplecticMatrix")
        .def(py::init([](const Eigen::MatrixXi& entries) {
                 return SymplecticMatrix(entries.cast<std::int64_t>());
             }),
             py::arg("entries"))
        .def_property_readonly("genus", &SymplecticMatrix::genus)
        .def_property_readonly("matrix",
                               [](const SymplecticMatrix& s) {
                                   return Eigen::MatrixXd(
                                       s.matrix().cast<double>());
                               })
        .def("__matmul__", [](const SymplecticMatrix& a,
                              const SymplecticMatrix& b) { return a * b; });

    m.def("is_member", &is_member, py::arg("omega"),
          py::arg("tol") = kMemberTol);
    m.def("act", &act, py::arg("m"), py::arg("omega"));
    m.def("block_sum", &block_sum, py::arg("parts"));
    m.def("sample_generic", &sample_generic, py::arg("genus"), py::arg("seed"));
    m.def("standard_generators", &standard_generators, py::arg("genus"));
    m.def("random_word", &random_word, py::arg("genus"), py::arg("length"),
          py::arg("seed"));
    m.def("symplectic_direct_sum", &symplectic_direct_sum);
    m.def("is_level2_congruent", &is_level2_congruent);

    py::class_<ThetaOptions>(m, "ThetaOptions")
        .def(py::init<>())
        .def_readwrite("tol", &ThetaOptions::tol)
        .def_readwrite("box_cap", &ThetaOptions::box_cap)
        .def_readwrite("max_points", &ThetaOptions::max_points)
        .def_readwrite("fixed_radius", &ThetaOptions::fixed_radius)
        .def_readwrite("zero_margin", &ThetaOptions::zero_margin)
        .def_readwrite("nonzero_margin", &ThetaOptions::nonzero_margin)
        .def_readwrite("fd_step", &ThetaOptions::fd_step);

    py::class_<ThetaValue>(m, "ThetaValue")
        .def_readonly("value", &ThetaValue::value)
        .def_readonly("tail_bound", &ThetaValue::tail_bound)
        .def_readonly("radius", &ThetaValue::radius)
        .def_readonly("peak_term", &ThetaValue::peak_term)
        .def_readonly("n_points", &ThetaValue::n_points)
        .def("normalized_magnitude", &ThetaValue::normalized_magnitude);

    py::class_<JetAtZero>(m, "JetAtZero")
        .def_readonly("value", &JetAtZero::value)
        .def_readonly("gradient", &JetAtZero::gradient)
        .def_readonly("hessian", &JetAtZero::hessian)
        .def_readonly("value_tail", &JetAtZero::value_tail)
        .def_readonly("gradient_tail", &JetAtZero::gradient_tail)
        .def_readonly("hessian_tail", &JetAtZero::hessian_tail)
        .def_readonly("value_peak", &JetAtZero::value_peak)
        .def_readonly("gradient_peak", &JetAtZero::gradient_peak)
        .def_readonly("hessian_peak", &JetAtZero::hessian_peak)
        .def_readonly("radius", &JetAtZero::radius)
        .def_readonly("n_points", &JetAtZero::n_points);

    py::enum_<VanishingOrder>(m, "VanishingOrder")
        .value("Order0", VanishingOrder::Order0)
        .value("Order1", VanishingOrder::Order1)
        .value("Order2", VanishingOrder::Order2)
        .value("HigherOrIndeterminate", VanishingOrder::HigherOrIndeterminate);

    py::class_<VanishingOrderResult>(m, "VanishingOrderResult")
        .def_readonly("order", &VanishingOrderResult::order)
        .def_readonly("value_magnitude", &VanishingOrderResult::value_magnitude)
        .def_readonly("gradient_magnitude",
                      &VanishingOrderResult::gradient_magnitude)
        .def_readonly("hessian_magnitude",
                      &VanishingOrderResult::hessian_magnitude)
        .def_readonly("indeterminate", &VanishingOrderResult::indeterminate);

    m.def("eval_theta", &eval_theta, py::arg("delta"), py::arg("omega"),
          py::arg("z"), py::arg("opts") = ThetaOptions());
    m.def("eval_thetanull", &eval_thetanull, py::arg("delta"), py::arg("omega"),
          py::arg("opts") = ThetaOptions());
    m.def("jet_at_zero", &jet_at_zero, py::arg("delta"), py::arg("omega"),
          py::arg("opts") = ThetaOptions());
    m.def("heat_residual", &heat_residual, py::arg("delta"), py::arg("omega"),
          py::arg("j"), py::arg("k"), py::arg("opts") = ThetaOptions());
    m.def("vanishing_order_at_zero", &vanishing_order_at_zero, py::arg("delta"),
          py::arg("omega"), py::arg("opts") = ThetaOptions());
    m.def("shift_ratio_check", &shift_ratio_check, py::arg("delta"),
          py::arg("omega"), py::arg("z_samples"),
          py::arg("opts") = ThetaOptions());

    py::class_<Grouping>(m, "Grouping")
        .def(py::init<std::vector<std::vector<int>>>(), py::arg("blocks"))
        .def_static("whole", &Grouping::whole)
        .def_static("singletons", &Grouping::singletons)
        .def_static("pair_with_singleton", &Grouping::pair_with_singleton)
        .def_property_readonly("genus", &Grouping::genus)
        .def_property_readonly("blocks", &Grouping::blocks)
        .def("shape", &Grouping::shape)
        .def("__str__", &Grouping::to_string)
        .def("__eq__",
             [](const Grouping& a, const Grouping& b) { return a == b; });

    py::enum_<StratumKind>(m, "StratumKind")
        .value("Generic", StratumKind::Generic)
        .value("Red", StratumKind::Red)
        .value("RedSing", StratumKind::RedSing);

    py::enum_<Classification>(m, "Classification")
        .value("Zero", Classification::Zero)
        .value("Nonzero", Classification::Nonzero)
        .value("Indeterminate", Classification::Indeterminate);

    py::class_<StratumPoint>(m, "StratumPoint")
        .def_readonly("kind", &StratumPoint::kind)
        .def_readonly("grouping", &StratumPoint::grouping)
        .def_readonly("data", &StratumPoint::data);

    py::class_<CharacteristicReading>(m, "CharacteristicReading")
        .def_readonly("delta", &CharacteristicReading::delta)
        .def_readonly("magnitude", &CharacteristicReading::magnitude)
        .def_readonly("classification", &CharacteristicReading::cls);

    py::class_<IncidenceReport>(m, "IncidenceReport")
        .def_readonly("point", &IncidenceReport::point)
        .def_readonly("vanishing_even", &IncidenceReport::vanishing_even)
        .def_readonly("readings", &IncidenceReport::readings)
        .def_readonly("indeterminate", &IncidenceReport::indeterminate);

    py::class_<LocalIntersectionCensus>(m, "LocalIntersectionCensus")
        .def_readonly("components_of_red_at_point",
                      &LocalIntersectionCensus::components_of_red_at_point)
        .def_readonly("hyp_per_red_point",
                      &LocalIntersectionCensus::hyp_per_red_point)
        .def_readonly("incidences_with_multiplicity",
                      &LocalIntersectionCensus::incidences_with_multiplicity)
        .def_readonly("distinct_hyp", &LocalIntersectionCensus::distinct_hyp)
        .def_readonly("containments_per_delta",
                      &LocalIntersectionCensus::containments_per_delta);

    m.def("grouping_compatible", &grouping_compatible, py::arg("omega"),
          py::arg("grouping"), py::arg("tol") = kMemberTol);
    m.def("assemble_from_blocks", &assemble_from_blocks);
    m.def("vanishing_set_combinatorial", &vanishing_set_combinatorial);
    m.def("classify_even_thetanulls", &classify_even_thetanulls,
          py::arg("omega"), py::arg("opts") = ThetaOptions());
    m.def("vanishing_set_numeric", &vanishing_set_numeric, py::arg("point"),
          py::arg("opts") = ThetaOptions(), py::arg("strict") = true);
    m.def("components_containing", &components_containing, py::arg("delta"));
    m.def("local_intersection_census", &local_intersection_census);
    m.def("sp_invariance_check", &sp_invariance_check, py::arg("point"),
          py::arg("m"), py::arg("opts") = ThetaOptions());
    m.def("sample_stratum_point",
          py::overload_cast<StratumKind, std::uint64_t, const ThetaOptions&>(
              &sample_stratum_point),
          py::arg("kind"), py::arg("seed"), py::arg("opts") = ThetaOptions());
    m.def("sample_stratum_point",
          py::overload_cast<StratumKind, const Grouping&, std::uint64_t,
                            const ThetaOptions&>(&sample_stratum_point),
          py::arg("kind"), py::arg("grouping"), py::arg("seed"),
          py::arg("opts") = ThetaOptions());

    py::class_<NerveInput>(m, "NerveInput")
        .def(py::init<>())
        .def_readwrite("ambient_dim", &NerveInput::ambient_dim)
        .def_readwrite("level_cell_dims", &NerveInput::level_cell_dims);

    py::class_<NerveTable>(m, "NerveTable")
        .def_readonly("ambient_dim", &NerveTable::ambient_dim)
        .def_readonly("nonzero", &NerveTable::nonzero);

    py::class_<DegreeSupport>(m, "DegreeSupport")
        .def_readonly("degrees", &DegreeSupport::degrees)
        .def_readonly("degeneration_automatic",
                      &DegreeSupport::degeneration_automatic)
        .def_readonly("obstructions", &DegreeSupport::obstructions);

    py::enum_<HomologyConstraint>(m, "HomologyConstraint")
        .value("ForcedZero", HomologyConstraint::ForcedZero)
        .value("ForcedFree", HomologyConstraint::ForcedFree)
        .value("Unconstrained", HomologyConstraint::Unconstrained);

    m.def("nerve_e1", &nerve_e1);
    m.def("supported_degrees", &supported_degrees);
    m.def("gysin_support", &gysin_support, py::arg("ambient_dim"),
          py::arg("boundary_support"), py::arg("complement_vanishing_from") = 3);
    m.def("component_count", [](int genus) {
        const BigRational q = component_count(genus);
        return py::make_tuple(big_to_py(boost::multiprecision::numerator(q)),
                              big_to_py(boost::multiprecision::denominator(q)));
    });
    m.def("moduli_poincare_polynomial", [](int genus) {
        py::list coeffs;
        for (const BigInt& c : moduli_poincare_polynomial(genus))
            coeffs.append(big_to_py(c));
        return coeffs;
    });
    m.def("moduli_betti",
          [](int genus) { return big_to_py(moduli_betti(genus)); });
    m.def("binomial", [](int n, int k) { return big_to_py(binomial(n, k)); });
    m.def("genus3_branch_split_count",
          [] { return big_to_py(genus3_branch_split_count()); });

    m.def("run_verify_json",
          [](std::uint64_t seed, double tol, double fd_step,
             const std::vector<std::string>& only) {
              VerifyConfig cfg;
              cfg.seed = seed;
              cfg.tol = tol;
              cfg.fd_step = fd_step;
              cfg.only = only;
              return to_json(run_verify(cfg)).dump(2);
          },
          py::arg("seed") = 42, py::arg("tol") = 1e-10,
          py::arg("fd_step") = 1e-5,
          py::arg("only") = std::vector<std::string>{});
}
