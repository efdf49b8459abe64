#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orbimirror/cli.hpp"
#include "orbimirror/quantum.hpp"
#include "orbimirror/selftest.hpp"
#include "orbimirror/serialize.hpp"

namespace py = pybind11;
using namespace orbimirror;

namespace {

using PyClass = std::pair<std::string, std::int64_t>;  // (gamma, d)

BasisClass to_class(const PyClass& c) { return BasisClass{Sector(parse_rational(c.first)), c.second}; }
PyClass from_class(const BasisClass& c) { return {to_string(c.g.gamma), c.d}; }

std::pair<std::string, std::vector<std::pair<std::string, std::string>>> report_tuple(const Report& r) {
  std::vector<std::pair<std::string, std::string>> findings;
  for (const auto& f : r.findings) findings.emplace_back(f.check, f.detail);
  return {std::string(to_string(r.status)), std::move(findings)};
}

std::vector<std::vector<std::string>> matrix_strings(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(to_string(m(r, c)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact orbifold quantum cohomology of weighted projective spaces and its mirror";
  py::register_exception<ConsistencyError>(m, "ConsistencyError");
  py::register_exception<ReconstructionError>(m, "ReconstructionError");

  m.def("basis", [](std::vector<std::int64_t> w) {
    const OrderedBasis b{Weights(std::move(w))};
    std::vector<std::tuple<std::string, std::int64_t, std::string>> out;
    for (std::size_t i = 0; i < b.size(); ++i) out.emplace_back(to_string(b[i].g.gamma), b[i].d, to_string(b.degree(i)));
    return out;
  });
  m.def("sigma", [](std::vector<std::int64_t> w) {
    std::vector<std::string> out;
    for (const auto& s : sigma(Weights(std::move(w)))) out.push_back(to_string(s));
    return out;
  });
  m.def("k_min", [](std::vector<std::int64_t> w, const std::string& gamma) {
    return k_min(Weights(std::move(w)), Sector(parse_rational(gamma)));
  });
  m.def("cup", [](std::vector<std::int64_t> w, const PyClass& a, const PyClass& b)
            -> std::optional<std::pair<std::string, PyClass>> {
    const auto t = cup(Weights(std::move(w)), to_class(a), to_class(b));
    if (!t) return std::nullopt;
    return std::make_pair(to_string(t->coeff), from_class(t->out));
  });
  m.def("pairing", [](std::vector<std::int64_t> w, const PyClass& a, const PyClass& b) {
    return to_string(pairing(Weights(std::move(w)), to_class(a), to_class(b)));
  });
  m.def("gram_matrix", [](std::vector<std::int64_t> w) { return matrix_strings(gram_matrix(Weights(std::move(w)))); });
  m.def("a0_matrix_A", [](std::vector<std::int64_t> w) { return matrix_strings(a0_matrix_A(Weights(std::move(w)))); });
  m.def("a0_matrix_B", [](std::vector<std::int64_t> w) {
    return matrix_strings(a0_matrix_B(OmegaFrame(Weights(std::move(w)))));
  });
  m.def("b_product", [](std::vector<std::int64_t> w, std::size_t i, std::size_t j) {
    const OmegaFrame frame{Weights(std::move(w))};
    if (i >= static_cast<std::size_t>(frame.mu()) || j >= static_cast<std::size_t>(frame.mu()))
      throw std::out_of_range("b_product: index out of range");
    const auto p = b_product(frame, i, j);
    return std::make_pair(to_string(p.coeff), p.target);
  });
  m.def("check_classical", [](std::vector<std::int64_t> w) { return report_tuple(check_classical(Weights(std::move(w)))); });
  m.def("check_quantum", [](std::vector<std::int64_t> w) { return report_tuple(check_quantum(Weights(std::move(w)))); });
  m.def("selftest", [](std::vector<std::int64_t> w) { return report_tuple(run_selftest(Weights(std::move(w)))); });
  m.def(
      "reconstruct",
      [](std::vector<std::int64_t> w, std::int64_t max_length) {
        std::vector<std::pair<std::vector<std::int32_t>, std::string>> out;
        {
          py::gil_scoped_release release;
          const Potential p = reconstruct(Weights(std::move(w)), max_length);
          for (const auto& [alpha, value] : p.nonzero_coefficients()) out.emplace_back(alpha, to_string(value));
        }
        return out;
      },
      py::arg("weights"), py::arg("max_length") = 7);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  });
}
