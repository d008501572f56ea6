#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "treegf/cli.hpp"
#include "treegf/limits.hpp"
#include "treegf/motzkin.hpp"
#include "treegf/oracle.hpp"
#include "treegf/sampler.hpp"
#include "treegf/schroeder.hpp"

namespace py = pybind11;
using namespace treegf;

namespace {

// Exact big integers cross the boundary as native python ints.
py::int_ to_py_int(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py_fraction(const BigRational& q) {
  static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
  return fraction_type(to_py_int(q.numerator()), to_py_int(q.denominator()));
}

py::list series_coefficients(const UniSeries& s) {
  py::list out;
  for (int n = 0; n <= s.order(); ++n) {
    if (!s.coeff(n).is_integer())
      throw std::runtime_error("series has non-integer coefficients");
    out.append(to_py_int(s.coeff(n).numerator()));
  }
  return out;
}

py::dict quad_dict(const QuadExt& v) {
  py::dict d;
  d["rational_part"] = to_py_fraction(v.rational_part());
  d["sqrt2_coefficient"] = to_py_fraction(v.sqrt2_coefficient());
  d["decimal"] = v.to_decimal(12);
  return d;
}

TreeFamily parse_family(const std::string& name) {
  if (name == "schroeder") return TreeFamily::schroeder;
  if (name == "motzkin") return TreeFamily::motzkin;
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact generating functions and statistics for Schroeder and Motzkin trees";

  m.def("schroeder_series",
        [](int order) { return series_coefficients(schroeder::tree_series(order)); },
        py::arg("order"), "Coefficients of S(x), index = number of leaves");
  m.def("context_series",
        [](int order) { return series_coefficients(schroeder::context_series(order)); },
        py::arg("order"));
  m.def("vertex_series",
        [](int order) { return series_coefficients(schroeder::vertex_series(order)); },
        py::arg("order"));
  m.def("subtree_series",
        [](int k, int order) { return series_coefficients(schroeder::subtree_series(k, order)); },
        py::arg("k"), py::arg("order"));
  m.def("balanced_series",
        [](int k, int order) { return series_coefficients(schroeder::balanced_series(k, order)); },
        py::arg("k"), py::arg("order"));
  m.def("rk_polynomial",
        [](int k) { return schroeder::subtree_root_poly(k).to_string(); }, py::arg("k"));
  m.def("rk_coefficients",
        [](int k) {
          const Polynomial p = schroeder::subtree_root_poly(k);
          py::list out;
          for (int i = 0; i <= std::max(0, p.degree()); ++i)
            out.append(to_py_int(p.coeff(i).numerator()));
          return out;
        },
        py::arg("k"));
  m.def("balanced_root_gf",
        [](int k) { return schroeder::balanced_root_gf(k).to_string(); }, py::arg("k"));
  m.def("finite_probability",
        [](int k, int n) { return to_py_fraction(schroeder::finite_probability(k, n)); },
        py::arg("k"), py::arg("n"));
  m.def("asymptotic_estimate",
        [](const std::string& which, unsigned long n) {
          return schroeder::asymptotic_estimate(schroeder::asymptotic_kind_from_string(which), n);
        },
        py::arg("which"), py::arg("n"));

  m.def("motzkin_series",
        [](int order) { return series_coefficients(motzkin::tree_series(order)); },
        py::arg("order"));
  m.def("motzkin_context_series",
        [](int order) { return series_coefficients(motzkin::context_series(order)); },
        py::arg("order"));
  m.def("motzkin_subtree_series",
        [](int k, int order) { return series_coefficients(motzkin::subtree_series(k, order)); },
        py::arg("k"), py::arg("order"));
  m.def("motzkin_limit_probability",
        [](int k) { return to_py_fraction(motzkin::limit_probability(k)); }, py::arg("k"));

  m.def("enumerate_count",
        [](const std::string& family, int n) {
          return static_cast<long long>(enumerate_count(parse_family(family), n));
        },
        py::arg("family"), py::arg("n"));
  m.def("subtree_census",
        [](const std::string& family, int n) {
          py::dict out;
          for (const auto& [k, c] : subtree_census(parse_family(family), n).counts)
            out[py::int_(k)] = py::int_(static_cast<long long>(c));
          return out;
        },
        py::arg("family"), py::arg("n"));
  m.def("balanced_census",
        [](int n) {
          py::dict out;
          for (const auto& [k, c] : balanced_census(n).counts)
            out[py::int_(k)] = py::int_(static_cast<long long>(c));
          return out;
        },
        py::arg("n"));

  m.def("dominant_singularity",
        [](const std::string& family) {
          return quad_dict(limits::dominant_singularity(parse_family(family)));
        },
        py::arg("family"));
  m.def("limit_subtree_probability",
        [](int k) { return quad_dict(limits::limit_subtree_probability(k)); }, py::arg("k"));
  m.def("limit_balanced_probability",
        [](int k) { return quad_dict(limits::limit_balanced_probability(k)); }, py::arg("k"));
  m.def("tightness_partial_sum",
        [](int k_max, const std::string& family) {
          const auto sum = limits::tightness_partial_sum(k_max, parse_family(family));
          py::dict d = quad_dict(sum.value);
          return d;
        },
        py::arg("k_max"), py::arg("family"));

  m.def("monte_carlo_census",
        [](int n, long trials, std::uint64_t seed, const std::string& stat) {
          const auto res =
              sampler::monte_carlo_census(n, trials, seed, sampler::StatisticSpec::parse(stat));
          py::dict d;
          d["n"] = res.n;
          d["trials"] = res.trials;
          d["seed"] = res.seed;
          d["stat"] = stat;
          d["stat_sum"] = to_py_int(res.stat_sum);
          d["vertex_sum"] = to_py_int(res.vertex_sum);
          d["estimate"] = to_py_fraction(res.estimate);
          d["std_error"] = res.std_error;
          return d;
        },
        py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("stat") = "leaf");

  m.def("verify",
        [](const std::string& family, int n_max) {
          py::list rows;
          bool ok = true;
          for (const auto& c : cli::run_verification(family, n_max)) {
            py::dict d;
            d["name"] = c.name;
            d["ok"] = c.ok;
            rows.append(std::move(d));
            ok = ok && c.ok;
          }
          py::dict out;
          out["ok"] = ok;
          out["checks"] = std::move(rows);
          return out;
        },
        py::arg("family") = "both", py::arg("n_max") = 6);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI invocation in-process; returns (exit_code, stdout, stderr)");
}
