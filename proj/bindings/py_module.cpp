#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnormlab/json_io.hpp"

namespace py = pybind11;
using namespace gnormlab;

namespace {

CMatrix to_cmatrix(const py::array_t<Complex, py::array::c_style | py::array::forcecast>& arr) {
  if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
  const int rows = int(arr.shape(0)), cols = int(arr.shape(1));
  std::vector<Complex> entries(arr.data(), arr.data() + size_t(rows) * cols);
  return CMatrix(rows, cols, std::move(entries));
}

py::array_t<Complex> to_numpy(const CMatrix& m) {
  py::array_t<Complex> arr({m.rows(), m.cols()});
  auto buf = arr.mutable_unchecked<2>();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) buf(i, j) = m(i, j);
  return arr;
}

using NumpyMatrix = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

NormKind parse_kind(const std::string& label) {
  if (label == "operator") return NormKind::operator_norm();
  if (label == "hs" || label == "hilbert-schmidt") return NormKind::hilbert_schmidt();
  if (label.rfind("schatten:", 0) == 0) return NormKind::schatten(std::stod(label.substr(9)));
  if (label.rfind("kyfan:", 0) == 0) return NormKind::kyfan(std::stoi(label.substr(6)));
  throw std::invalid_argument("unknown norm kind: " + label);
}

SpectralDecomposition decomp_from(const NumpyMatrix& u, const std::vector<Complex>& eigs) {
  SpectralDecomposition d;
  d.u = to_cmatrix(u);
  d.eigenvalues = eigs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_gnormlab, m) {
  m.doc() = "matrix-analysis laboratory: unitarily invariant norms, analytic "
            "functional calculus, and inequality suites";

  m.def("singular_values",
        [](const NumpyMatrix& a) { return singular_values(to_cmatrix(a)); },
        py::arg("a"));
  m.def("uinorm",
        [](const NumpyMatrix& a, const std::string& kind) {
          return uinorm(to_cmatrix(a), parse_kind(kind));
        },
        py::arg("a"), py::arg("kind"),
        "unitarily invariant norm; kind: operator | hs | schatten:P | kyfan:K");
  m.def("hs_norm_direct",
        [](const NumpyMatrix& a) { return hs_norm_direct(to_cmatrix(a)); }, py::arg("a"));
  m.def("abs_matrix", [](const NumpyMatrix& a) { return to_numpy(abs_matrix(to_cmatrix(a))); },
        py::arg("a"));
  m.def("direct_sum",
        [](const NumpyMatrix& a, const NumpyMatrix& b) {
          return to_numpy(direct_sum(to_cmatrix(a), to_cmatrix(b)));
        },
        py::arg("a"), py::arg("b"));
  m.def("block_offdiag",
        [](const NumpyMatrix& a, const NumpyMatrix& b) {
          return to_numpy(block_offdiag(to_cmatrix(a), to_cmatrix(b)));
        },
        py::arg("a"), py::arg("b"));
  m.def("classify",
        [](const NumpyMatrix& a, double tol) {
          const MatrixClass c = classify(to_cmatrix(a), tol);
          py::dict d;
          d["hermitian"] = c.hermitian;
          d["normal"] = c.normal;
          d["unitary"] = c.unitary;
          d["contraction"] = c.contraction;
          return d;
        },
        py::arg("a"), py::arg("tol") = 1e-10);
  m.def("eig_hermitian",
        [](const NumpyMatrix& a) {
          const auto d = eig_hermitian(to_cmatrix(a));
          return py::make_tuple(to_numpy(d.u), d.eigenvalues);
        },
        py::arg("a"), "returns (U, eigenvalues) with A = U diag(eig) U*");
  m.def("svd",
        [](const NumpyMatrix& a) {
          const auto f = svd(to_cmatrix(a));
          return py::make_tuple(to_numpy(f.u), f.singular_values, to_numpy(f.v));
        },
        py::arg("a"), "returns (U, s, V) with A = U diag(s) V*");
  m.def("haar_unitary",
        [](int dim, std::uint64_t seed) {
          RandomSpec spec;
          spec.dim = dim;
          spec.seed = seed;
          spec.kind = RandomKind::unitary;
          return to_numpy(haar_unitary(spec));
        },
        py::arg("dim"), py::arg("seed"));
  m.def("random_in_disk",
        [](int dim, std::uint64_t seed, double radius, bool hermitian) {
          RandomSpec spec;
          spec.dim = dim;
          spec.seed = seed;
          spec.spectrum_radius = radius;
          spec.kind = hermitian ? RandomKind::hermitian_in_disk : RandomKind::normal_in_disk;
          const auto sample = random_in_disk(spec);
          return py::make_tuple(to_numpy(sample.matrix), to_numpy(sample.decomposition.u),
                                sample.decomposition.eigenvalues);
        },
        py::arg("dim"), py::arg("seed"), py::arg("radius") = 0.9, py::arg("hermitian") = false,
        "returns (A, U, eigenvalues) with ground-truth spectrum");
  m.def("resolvent_defect",
        [](const NumpyMatrix& a, const NumpyMatrix& u, const std::vector<Complex>& eigs,
           const std::vector<Complex>& samples) {
          return resolvent_defect(to_cmatrix(a), decomp_from(u, eigs), samples);
        },
        py::arg("a"), py::arg("u"), py::arg("eigenvalues"), py::arg("z_samples"));
  m.def("dist_boundary_spectrum",
        [](const std::vector<Complex>& eigs) {
          SpectralDecomposition d;
          d.eigenvalues = eigs;
          return dist_boundary_spectrum(d);
        },
        py::arg("eigenvalues"));
  m.def("numerical_range_distance",
        [](const NumpyMatrix& a, int angle_count) {
          return numerical_range_distance(to_cmatrix(a), angle_count);
        },
        py::arg("a"), py::arg("angle_count") = 720);

  py::class_<HerglotzFunction>(m, "HerglotzFunction")
      .def(py::init([](std::vector<double> atoms, std::vector<double> weights) {
             return HerglotzFunction::from(std::move(atoms), std::move(weights));
           }),
           py::arg("atoms"), py::arg("weights"))
      .def_static("single_atom", &HerglotzFunction::single_atom, py::arg("alpha"))
      .def_static("random",
                  [](int atom_count, std::uint64_t seed) {
                    return random_herglotz(atom_count, seed);
                  },
                  py::arg("atom_count"), py::arg("seed"))
      .def_readonly("atoms", &HerglotzFunction::atoms)
      .def_readonly("weights", &HerglotzFunction::weights)
      .def("__call__", [](const HerglotzFunction& f, Complex z) { return herglotz_eval(f, z); },
           py::arg("z"))
      .def("conj_eval", [](const HerglotzFunction& f, Complex z) { return conj_eval(f, z); },
           py::arg("z"))
      .def("apply",
           [](const HerglotzFunction& f, const NumpyMatrix& u, const std::vector<Complex>& eigs,
              bool conjugate) {
             return to_numpy(apply_spectral(f, decomp_from(u, eigs), conjugate));
           },
           py::arg("u"), py::arg("eigenvalues"), py::arg("conjugate") = false,
           "f(A) for normal A = U diag(eig) U*")
      .def("apply_contour",
           [](const HerglotzFunction& f, const NumpyMatrix& a, double radius, int nodes) {
             return to_numpy(apply_contour(f, to_cmatrix(a), ContourSpec{radius, nodes}));
           },
           py::arg("a"), py::arg("radius"), py::arg("nodes") = 256);

  m.def("checker_names", &checker_names);
  m.def("run_suite",
        [](const py::dict& config) {
          const nlohmann::json j = nlohmann::json::parse(
              py::str(py::module_::import("json").attr("dumps")(config)).cast<std::string>());
          SuiteConfig c = config_from_json(j);
          const SuiteReport report = run_suite(c);
          const std::string body = render_report(report, "json");
          py::dict out = py::module_::import("json").attr("loads")(body);
          out["exit_status"] = exit_status(report);
          return out;
        },
        py::arg("config"),
        "config keys: trials, dims, seed, spectrum_radius, atol, rtol, suites, contour_nodes");
  m.def("replay",
        [](const py::dict& params) {
          const nlohmann::json j = nlohmann::json::parse(
              py::str(py::module_::import("json").attr("dumps")(params)).cast<std::string>());
          const IneqReport r = replay(j);
          return py::module_::import("json").attr("loads")(report_to_json(r).dump());
        },
        py::arg("params"));
}
