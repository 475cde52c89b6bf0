// Copyright 2026 The qgauge Authors
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

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgauge/channel.hpp"
#include "qgauge/cli.hpp"
#include "qgauge/cp_criteria.hpp"
#include "qgauge/gauge.hpp"
#include "qgauge/io.hpp"
#include "qgauge/metrics.hpp"
#include "qgauge/sampling.hpp"
#include "qgauge/spectrum.hpp"
#include "qgauge/synthesis.hpp"

namespace py = pybind11;
using namespace qgauge;

namespace {

int dim_of(const CMatrix& m) {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m.rows()))));
  if (m.rows() != m.cols() || d * d != m.rows()) {
    throw Error(ErrorKind::Structural, "superoperator must be d^2 x d^2");
  }
  return d;
}

Superoperator superop(const CMatrix& m) { return Superoperator(dim_of(m), m); }

Spectrum spectrum_of(const std::vector<cplx>& values) {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(values.size()))));
  return Spectrum::from_values(d, values);
}

}  // namespace

PYBIND11_MODULE(_qgauge, m) {
  m.doc() = "Gauge-invariant analysis of quantum channels.";

  static py::handle exc = py::exception<Error>(m, "Error").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Spectrum>(m, "Spectrum")
      .def_property_readonly("dim", &Spectrum::dim)
      .def_property_readonly("values", &Spectrum::values)
      .def_property_readonly("unit_index", &Spectrum::unit_index)
      .def_property_readonly("gap", &Spectrum::gap)
      .def_property_readonly("unit_flagged", &Spectrum::unit_flagged)
      .def_property_readonly("conjugation_closed", &Spectrum::conjugation_closed)
      .def_property_readonly("nonunit_moduli", &Spectrum::nonunit_moduli);

  py::class_<CriterionVerdict>(m, "CriterionVerdict")
      .def_readonly("criterion", &CriterionVerdict::criterion)
      .def_readonly("satisfied", &CriterionVerdict::satisfied)
      .def_readonly("margin", &CriterionVerdict::margin)
      .def_property_readonly("branch", [](const CriterionVerdict& v) { return std::string(to_string(v.branch)); })
      .def("__repr__", [](const CriterionVerdict& v) {
        return "<CriterionVerdict " + v.criterion + (v.satisfied ? " satisfied" : " violated") +
               " margin=" + io::format_double(v.margin) + ">";
      });

  // Representations.
  m.def("kraus_to_superoperator",
        [](const std::vector<CMatrix>& ks) { return kraus_to_superoperator(KrausSet(ks)).matrix(); },
        py::arg("kraus"));
  m.def("transfer_form", [](const CMatrix& phi) { return transfer_form(superop(phi)); }, py::arg("superoperator"));
  m.def("transfer_to_superoperator",
        [](const RVector& k, const RMatrix& t) {
          const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(k.size() + 1))));
          return transfer_to_superoperator(TransferMatrix(d, k, t)).matrix();
        },
        py::arg("k"), py::arg("T"));
  m.def("choi_matrix", [](const CMatrix& phi) { return choi_matrix(superop(phi)).matrix(); }, py::arg("superoperator"));
  m.def("is_completely_positive",
        [](const CMatrix& phi, std::optional<double> tol) {
          const Superoperator s = superop(phi);
          const CpReport r = is_completely_positive(s, tol.value_or(default_cp_tolerance(s.dim())));
          return py::make_tuple(r.completely_positive, r.min_eigenvalue);
        },
        py::arg("superoperator"), py::arg("tol") = py::none());

  // Spectra.
  m.def("spectrum", [](const CMatrix& phi) { return spectrum(superop(phi)); }, py::arg("superoperator"));
  m.def("spectrum_from_values", &spectrum_of, py::arg("values"));
  m.def("spectral_distance",
        [](const std::vector<cplx>& a, const std::vector<cplx>& b) { return spectral_distance(a, b); });
  m.def("singular_values", &singular_values);

  // Criteria.
  m.def("theorem1", [](const std::vector<cplx>& v) { return theorem1(spectrum_of(v)); }, py::arg("spectrum"));
  m.def("det_range_check", [](const std::vector<cplx>& v) { return det_range_check(spectrum_of(v)); },
        py::arg("spectrum"));
  m.def("k_norm_bound",
        [](const std::vector<cplx>& v) {
          const KNormBound b = k_norm_bound(spectrum_of(v));
          return py::make_tuple(b.bound, b.feasible);
        },
        py::arg("spectrum"));
  m.def("z_feasibility",
        [](const std::vector<cplx>& v, int samples, std::uint64_t seed) {
          return to_verdict(z_feasibility(spectrum_of(v), samples, seed));
        },
        py::arg("spectrum"), py::arg("samples") = 16, py::arg("seed") = 0);
  m.def("fa_conditions", [](double a, double b, double c) { return fa_conditions({a, b, c}); });
  m.def("real_tetrahedron", &real_tetrahedron);
  m.def("complex_pair_disc", &complex_pair_disc, py::arg("x"), py::arg("z"));
  m.def("z_condition", [](const std::array<double, 3>& eta, const KVector& k) {
    return z_condition({eta[0], eta[1], eta[2]}, k);
  });

  // Metrics.
  m.def("avg_gate_fidelity", [](const CMatrix& phi) { return avg_gate_fidelity(superop(phi)); });
  m.def("unitarity", [](const CMatrix& phi) { return unitarity_exact(superoperator_to_transfer(superop(phi))); });
  m.def("unitarity_lower_from_r", &unitarity_lower_from_r, py::arg("r"), py::arg("dim"));
  m.def("diamond_bounds_from_r",
        [](double r, int d) {
          const DiamondBounds b = diamond_bounds_from_r(r, d);
          return py::make_tuple(b.lower, b.upper);
        },
        py::arg("r"), py::arg("dim"));
  m.def("diamond_lower_wallman", &diamond_lower_wallman, py::arg("u"), py::arg("r"), py::arg("dim"));

  // Synthesis.
  m.def("synthesize_from_complex_pair", [](double x, cplx z) { return synthesize_from_complex_pair(x, z).matrix(); },
        py::arg("x"), py::arg("z"));
  m.def("xi_from_real_spectrum",
        [](double a, double b, double c) { return xi_from_real_spectrum(a, b, c).matrix(); });
  m.def("mixture_channel", [](double p, double a, double alpha) { return mixture_channel(p, a, alpha).matrix(); },
        py::arg("p"), py::arg("a"), py::arg("alpha"));
  m.def("det_saturating_channel", [] { return det_saturating_channel().matrix(); });

  // Sampling and gauge.
  m.def("sample_cptp",
        [](int d, int rank, std::uint64_t seed) { return sample_cptp(d, rank, seed).operators(); },
        py::arg("dim"), py::arg("rank"), py::arg("seed"));
  m.def("random_gauge",
        [](int d, double strength, std::uint64_t seed) { return random_gauge(d, strength, seed).matrix(); },
        py::arg("dim"), py::arg("strength"), py::arg("seed"));
  m.def("apply_gauge",
        [](const CMatrix& phi, const RMatrix& x) {
          const Superoperator s = superop(phi);
          return apply_gauge(s, GaugeTransform(s.dim(), x)).matrix();
        },
        py::arg("superoperator"), py::arg("gauge"));

  // JSON-level entry points shared with the command-line tool.
  m.def("analyze",
        [](const std::string& channel_json, int z_samples, std::uint64_t seed) {
          cli::AnalyzeOptions o;
          o.z_samples = z_samples;
          o.seed = seed;
          bool refuted = false;
          return io::dump(cli::analyze_report(io::parse(channel_json), o, refuted));
        },
        py::arg("channel_json"), py::arg("z_samples") = 64, py::arg("seed") = 0);
  m.def("channel_json", [](const CMatrix& phi) { return io::dump(io::channel_to_json(superop(phi))); });

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
