#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohdist/complementarity.hpp"
#include "cohdist/io.hpp"

namespace py = pybind11;
using namespace cohdist;

namespace {

KrausChannel make_channel(const std::string& name, double param, int dim) {
    if (name == "identity") return unitary_channel(identity(dim), "identity");
    if (name == "projective") return projective_measurement(Basis::computational(dim));
    if (name == "weak") return weak_measurement(param);
    if (name == "depolarizing") return depolarizing(param, dim);
    if (name == "amplitude_damping") return amplitude_damping(param);
    if (name == "bit_flip") return bit_flip(param);
    if (name == "phase_flip") return phase_flip(param);
    if (name == "bit_phase_flip") return bit_phase_flip(param);
    throw std::invalid_argument("unknown channel '" + name + "'");
}

py::dict report_to_dict(const InequalityReport& rep) {
    py::dict d;
    d["lhs"] = rep.lhs;
    d["bound"] = rep.bound;
    d["residual"] = rep.residual;
    d["satisfied"] = rep.satisfied;
    py::dict comps;
    for (const auto& [k, v] : rep.components) comps[py::str(k)] = v;
    d["components"] = comps;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "coherence / disturbance trade-off numerics";

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init<Mat>(), py::arg("matrix"))
        .def_property_readonly("matrix", &DensityMatrix::mat)
        .def_property_readonly("dim", &DensityMatrix::dim);

    py::class_<KrausChannel>(m, "KrausChannel")
        .def_readonly("dim_in", &KrausChannel::dim_in)
        .def_readonly("dim_out", &KrausChannel::dim_out)
        .def_readonly("kraus", &KrausChannel::kraus)
        .def_readonly("label", &KrausChannel::label)
        .def_readonly("param", &KrausChannel::param)
        .def_readonly("measurement_type", &KrausChannel::measurement_type);

    m.def("channel", &make_channel, py::arg("name"), py::arg("param") = 0.0, py::arg("dim") = 2,
          "construct a named channel");
    m.def("apply", [](const KrausChannel& ch, const DensityMatrix& rho) {
        return apply(ch, rho).mat();
    });
    m.def("is_cptp", &is_cptp, py::arg("channel"), py::arg("tol") = 1e-9);

    m.def("von_neumann_entropy", &von_neumann_entropy);
    m.def("coherence_relative_entropy",
          [](const Mat& rho, int dim) {
              return coherence_relative_entropy(rho, Basis::computational(dim));
          },
          py::arg("rho"), py::arg("dim"));
    m.def("coherence_l1", [](const Mat& rho, int dim) {
        return coherence_l1(rho, Basis::computational(dim));
    });

    m.def("coherent_information", &coherent_information);
    m.def("disturbance", &disturbance);
    m.def("mutual_information", &mutual_information);
    m.def("quantum_discord", [](const DensityMatrix& rho, int d_a, int d_b) {
        const DiscordSolution s = quantum_discord(rho, d_a, d_b);
        py::dict d;
        d["value"] = s.value;
        d["theta"] = s.theta;
        d["phi"] = s.phi;
        d["refinement_iterations"] = s.refinement_iterations;
        return d;
    });
    m.def("relative_entropy_entanglement",
          [](const DensityMatrix& rho, int d_a, int d_b, int restarts) {
              const ERSolution s = relative_entropy_entanglement(rho, d_a, d_b, restarts);
              py::dict d;
              d["value"] = s.value;
              d["closest_separable"] = s.closest_separable;
              d["mixture_size"] = s.mixture_size;
              d["restarts_used"] = s.restarts_used;
              return d;
          },
          py::arg("rho"), py::arg("d_a"), py::arg("d_b"), py::arg("restarts") = 8);
    m.def("er_upper_bound_product", &er_upper_bound_product);

    m.def("random_mixed", [](int d, int rank, std::uint64_t seed, std::uint64_t stream) {
        RngStream rng(seed, stream);
        return random_mixed(d, rank, rng);
    }, py::arg("d"), py::arg("rank"), py::arg("seed") = 0, py::arg("stream") = 0);
    m.def("schmidt_state", [](double l0) {
        return system_state_plus_minus_basis(l0, 1.0 - l0);
    });

    m.def("check_single", [](const DensityMatrix& rho, const KrausChannel& ch) {
        return report_to_dict(check_single(rho, ch, Basis::computational(rho.dim())));
    });
    m.def("check_measurement_channel", [](const DensityMatrix& rho, const KrausChannel& ch) {
        return report_to_dict(check_measurement_channel(rho, ch, Basis::computational(rho.dim())));
    });
    m.def("check_bipartite_entanglement",
          [](const DensityMatrix& rho, int d_a, int d_b, const KrausChannel& ch, bool certified) {
              return report_to_dict(check_bipartite_entanglement(
                  rho, d_a, d_b, ch, Basis::computational(d_a * d_b),
                  certified ? EntanglementMode::certified : EntanglementMode::variational));
          },
          py::arg("rho"), py::arg("d_a"), py::arg("d_b"), py::arg("channel"),
          py::arg("certified") = true);
    m.def("check_bipartite_discord",
          [](const DensityMatrix& rho, int d_a, int d_b, const KrausChannel& ch) {
              return report_to_dict(
                  check_bipartite_discord(rho, d_a, d_b, ch, Basis::computational(d_a * d_b)));
          });

    m.def("coherence_closed_form", &coherence_closed_form);
    m.def("disturbance_weak_closed_form", &disturbance_weak_closed_form);
    m.def("disturbance_depolarizing_closed_form", &disturbance_depolarizing_closed_form);
    m.def("disturbance_ad_closed_form", &disturbance_ad_closed_form);
    m.def("disturbance_ad_closed_form_corrected", &disturbance_ad_closed_form_corrected);
}
