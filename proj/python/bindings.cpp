#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gitfan/cli.hpp"
#include "gitfan/error.hpp"
#include "gitfan/fixtures.hpp"
#include "gitfan/json_io.hpp"
#include "gitfan/quotient.hpp"
#include "gitfan/res2.hpp"
#include "gitfan/svg.hpp"

namespace py = pybind11;
using gitfan::json_io::json;

namespace {

PyObject* input_error_type = nullptr;

// Rationals and big integers stay strings, exactly as in the JSON forms.
py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_py(x));
      return std::move(out);
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return std::move(out);
    }
    default:
      return py::none();
  }
}

json from_py(const py::handle& h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return py::str(h).cast<std::string>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::dict>(h)) {
    json out = json::object();
    for (const auto& [k, v] : h.cast<py::dict>()) out[py::str(k).cast<std::string>()] = from_py(v);
    return out;
  }
  if (py::isinstance<py::sequence>(h)) {
    json out = json::array();
    for (const auto& x : h.cast<py::sequence>()) out.push_back(from_py(x));
    return out;
  }
  throw gitfan::InputError("invalid_argument", "unsupported Python value");
}

gitfan::WeightSystem weights_arg(const py::object& w) {
  if (w.is_none()) return gitfan::res2::weights();
  return gitfan::json_io::weights_from_json(from_py(w));
}

gitfan::IntMatrix matrix_arg(const py::object& m) {
  json j = from_py(m);
  if (j.is_array()) j = {{"entries", j}};
  return gitfan::json_io::matrix_from_json(j);
}

gitfan::IntMatrix basis_arg(const py::object& basis, const py::object& weights) {
  if (!basis.is_none()) return matrix_arg(basis);
  if (weights.is_none()) return gitfan::res2::kernel_matrix();
  return gitfan::ratlin::kernel_lattice_basis(weights_arg(weights).matrix());
}

gitfan::Character char_arg(const std::string& b, const std::string& c) {
  return gitfan::Character::from_point(gitfan::ratlin::parse_rational(b),
                                       gitfan::ratlin::parse_rational(c));
}

gitfan::Character point_arg(const std::pair<std::string, std::string>& p) {
  return char_arg(p.first, p.second);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact toric GIT quotients: support sets, chambers, fans, unstable loci";

  input_error_type = PyErr_NewException("gitfan._core.InputError", PyExc_ValueError, nullptr);
  m.attr("InputError") = py::handle(input_error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gitfan::InputError& e) {
      py::tuple args = py::make_tuple(e.code(), e.what());
      PyErr_SetObject(input_error_type, args.ptr());
    }
  });

  const auto W = py::arg("weights") = py::none();

  m.def("kernel_lattice_basis", [](const py::object& mat) {
    return to_py(gitfan::json_io::to_json(gitfan::ratlin::kernel_lattice_basis(matrix_arg(mat))));
  }, py::arg("matrix"), "Row basis of the integer kernel, as a matrix JSON dict.");

  m.def("lattices_equal", [](const py::object& a, const py::object& b) {
    return gitfan::ratlin::lattices_equal(matrix_arg(a), matrix_arg(b));
  }, py::arg("a"), py::arg("b"));

  m.def("instance", [] {
    using namespace gitfan;
    return to_py({{"labels", res2::labels()},
                  {"A", json_io::to_json(res2::weight_matrix())},
                  {"B", json_io::to_json(res2::kernel_matrix())},
                  {"kernel_coordinates", res2::kernel_coordinates()}});
  }, "Labels Q, weight matrix A and kernel basis B of the built-in instance.");

  m.def("minimal_support_sets", [](const std::string& b, const std::string& c, const py::object& w) {
    const auto ws = weights_arg(w);
    return to_py(gitfan::json_io::supports_to_json(ws, gitfan::minimal_support_sets(ws, char_arg(b, c))));
  }, py::arg("b"), py::arg("c"), W);

  m.def("chamber_at", [](const std::string& b, const std::string& c, const py::object& w) {
    const auto ws = weights_arg(w);
    return to_py(gitfan::json_io::to_json(ws, gitfan::chamber_of(ws, char_arg(b, c))));
  }, py::arg("b"), py::arg("c"), W);

  m.def("enumerate_chambers", [](const py::object& w) {
    const auto ws = weights_arg(w);
    json out = json::array();
    for (const auto& ch : gitfan::enumerate_chambers(ws)) out.push_back(gitfan::json_io::to_json(ws, ch));
    return to_py(out);
  }, W);

  m.def("certify_support", [](const std::string& b, const std::string& c,
                              const std::vector<std::string>& support, const std::string& bound,
                              const py::object& w) {
    const auto ws = weights_arg(w);
    const auto m = gitfan::certify_support(ws, char_arg(b, c), gitfan::support_from_labels(ws, support),
                                           gitfan::ratlin::parse_integer(bound));
    return to_py(gitfan::json_io::to_json(ws, m));
  }, py::arg("b"), py::arg("c"), py::arg("support"), py::arg("bound") = "1000000", W);

  m.def("quotient_fan", [](const std::string& b, const std::string& c, const py::object& w,
                           const py::object& basis) {
    const auto ws = weights_arg(w);
    const auto fan = gitfan::quotient_fan(ws, basis_arg(basis, w), char_arg(b, c));
    return to_py(gitfan::json_io::to_json(fan, gitfan::polycone::fan_check(fan)));
  }, py::arg("b"), py::arg("c"), W, py::arg("basis") = py::none());

  m.def("unstable_locus", [](const std::string& b, const std::string& c, const py::object& w) {
    const auto ws = weights_arg(w);
    return to_py(gitfan::json_io::to_json(ws, gitfan::unstable_locus(ws, char_arg(b, c))));
  }, py::arg("b"), py::arg("c"), W);

  m.def("wall_crossing", [](const std::pair<std::string, std::string>& wall,
                            const std::pair<std::string, std::string>& side_a,
                            const std::pair<std::string, std::string>& side_b,
                            const py::object& w, const py::object& basis) {
    const auto ws = weights_arg(w);
    const auto wc = gitfan::wall_crossing(ws, basis_arg(basis, w), point_arg(wall),
                                          point_arg(side_a), point_arg(side_b));
    return to_py(gitfan::json_io::to_json(ws, wc));
  }, py::arg("wall"), py::arg("side_a"), py::arg("side_b"), W, py::arg("basis") = py::none());

  m.def("eliminate_a21", [](const py::object& curve) {
    return to_py(gitfan::json_io::to_json(
        gitfan::res2::eliminate_a21(gitfan::json_io::curve_from_json(from_py(curve)))));
  }, py::arg("curve"));

  m.def("scale_normalize", [](const py::object& curve) {
    const auto n = gitfan::res2::scale_normalize(gitfan::json_io::curve_from_json(from_py(curve)));
    json j = {{"curve", gitfan::json_io::to_json(n.curve)},
              {"radicand", gitfan::json_io::to_json(n.radicand)},
              {"extension_required", n.extension_required},
              {"witness", n.witness ? gitfan::json_io::to_json(*n.witness) : json(nullptr)}};
    return to_py(j);
  }, py::arg("curve"));

  m.def("w_invariants", [](const py::object& curve) {
    using namespace gitfan::res2;
    const auto n = scale_normalize(eliminate_a21(gitfan::json_io::curve_from_json(from_py(curve))));
    return to_py(gitfan::json_io::to_json(w_invariants(n)));
  }, py::arg("curve"));

  m.def("j_invariant", [](const std::string& w12) {
    return to_py(gitfan::json_io::j_to_json(
        gitfan::res2::j_invariant(gitfan::ratlin::parse_rational(w12))));
  }, py::arg("w12"), "J as a 'p/q' string, or 'infinity' at w12 = +-2.");

  m.def("minimal_chart_cones", [] {
    json out = json::array();
    for (const auto& [label, cone] : gitfan::res2::minimal_chart_cones()) {
      json e = {{"label", "C" + label}};
      e.update(gitfan::json_io::to_json(cone));
      out.push_back(std::move(e));
    }
    return to_py(out);
  });

  m.def("chamber_svg", [](const std::vector<std::string>& highlight, const py::object& w) {
    const auto ws = weights_arg(w);
    const auto chambers = gitfan::enumerate_chambers(ws);
    std::vector<gitfan::svg::Highlight> hs;
    for (const auto& name : highlight) {
      const auto chi = name == "red" ? gitfan::res2::red_character()
                     : name == "blue" ? gitfan::res2::blue_character()
                     : throw gitfan::InputError("invalid_highlight", "unknown highlight '" + name + "'");
      const auto fp = gitfan::chamber_of(ws, chi).fingerprint;
      for (const auto& ch : chambers)
        if (ch.fingerprint == fp) hs.push_back({name, ch.polygon});
    }
    return gitfan::svg::chamber_svg(ws, hs);
  }, py::arg("highlight") = std::vector<std::string>{}, W);

  m.def("verify_paper", [] {
    json rows = json::array();
    for (const auto& f : gitfan::fixtures::all()) {
      const auto r = f.run();
      rows.push_back({{"fixture", f.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    return to_py(rows);
  }, "Run every reference fixture of the built-in instance.");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    const int code = gitfan::cli::run(args, out);
    return py::make_tuple(code, out.str());
  }, py::arg("args"), "Run a CLI command; returns (exit_code, stdout_text).");
}
