// Python bindings for the main operations: group and group-ring arithmetic,
// the Fredholm module catalog with its pairings, and the cyclic cohomology
// calculus. Exact scalars cross the boundary as "p/q" strings.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ncgdih/cyclic.hpp"
#include "ncgdih/fredholm.hpp"
#include "ncgdih/kclasses.hpp"
#include "ncgdih/ring_io.hpp"

namespace py = pybind11;
using namespace ncgdih;

namespace {

CRat crat_from_str(const std::string& re, const std::string& im) {
  return CRat{rational_from_string(re), rational_from_string(im)};
}

std::pair<std::string, std::string> crat_to_pair(const CRat& c) {
  return {rational_to_string(c.re), rational_to_string(c.im)};
}

template <class Ring>
Ring ring_from_terms(
    const std::vector<std::tuple<typename Ring::Group, std::string,
                                 std::string>>& terms) {
  Ring out;
  for (const auto& [g, re, im] : terms) out.add_term(g, crat_from_str(re, im));
  return out;
}

py::dict pairing_dict(const PairingResult& r, const std::string& module,
                      const std::string& label) {
  py::dict d;
  d["module"] = module;
  d["class"] = label;
  d["value"] = r.value;
  d["stabilized"] = r.stabilized;
  d["window"] = r.window_used;
  return d;
}

py::dict report_dict(const ModuleReport& r) {
  py::dict d;
  d["module"] = to_string(r.name);
  d["backend"] = r.exact_backend ? "exact" : "float";
  d["pass"] = r.all_pass();
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict cd;
    cd["axiom"] = c.axiom;
    cd["pass"] = c.pass;
    cd["detail"] = c.detail;
    checks.append(cd);
  }
  d["checks"] = checks;
  return d;
}

py::dict check_dict(const CheckReport& r) {
  py::dict d;
  d["identity"] = r.identity;
  d["bound"] = r.bound;
  d["tuples_checked"] = r.tuples_checked;
  d["failures"] = r.failures;
  d["ok"] = r.ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact noncommutative-geometry computations over the group algebras "
      "of Z x Z_2 (infinite dihedral) and Z x Z";

  py::class_<DihedralWord>(m, "DihedralWord")
      .def(py::init<long, int>(), py::arg("power"), py::arg("flip"))
      .def_readonly("power", &DihedralWord::power)
      .def_readonly("flip", &DihedralWord::flip)
      .def("inverse", &DihedralWord::inverse)
      .def("__mul__",
           [](const DihedralWord& a, const DihedralWord& b) { return a * b; })
      .def("__eq__", [](const DihedralWord& a,
                        const DihedralWord& b) { return a == b; })
      .def("__hash__",
           [](const DihedralWord& w) {
             return py::hash(py::make_tuple(w.power, w.flip));
           })
      .def("__repr__", &DihedralWord::str);

  py::class_<SemidirectPair>(m, "SemidirectPair")
      .def(py::init<long, long>(), py::arg("m"), py::arg("n"))
      .def_readonly("m", &SemidirectPair::m)
      .def_readonly("n", &SemidirectPair::n)
      .def("inverse", &SemidirectPair::inverse)
      .def("__mul__", [](const SemidirectPair& a,
                         const SemidirectPair& b) { return a * b; })
      .def("__eq__", [](const SemidirectPair& a,
                        const SemidirectPair& b) { return a == b; })
      .def("__hash__",
           [](const SemidirectPair& g) {
             return py::hash(py::make_tuple(g.m, g.n));
           })
      .def("__repr__", &SemidirectPair::str);

  py::class_<DihedralRing>(m, "DihedralRing")
      .def(py::init<>())
      .def_static("from_terms", &ring_from_terms<DihedralRing>,
                  "terms: list of (DihedralWord, re 'p/q', im 'p/q')")
      .def_static("one", &DihedralRing::one)
      .def("coeff",
           [](const DihedralRing& a, const DihedralWord& g) {
             return crat_to_pair(a.coeff(g));
           })
      .def("support_size", &DihedralRing::support_size)
      .def("__add__", [](const DihedralRing& a,
                         const DihedralRing& b) { return a + b; })
      .def("__sub__", [](const DihedralRing& a,
                         const DihedralRing& b) { return a - b; })
      .def("__mul__", [](const DihedralRing& a,
                         const DihedralRing& b) { return a * b; })
      .def("__eq__", [](const DihedralRing& a,
                        const DihedralRing& b) { return a == b; })
      .def("star", [](const DihedralRing& a) { return star(a); })
      .def("to_json", [](const DihedralRing& a) { return to_json(a); })
      .def("__repr__", &DihedralRing::str);

  py::class_<SemidirectRing>(m, "SemidirectRing")
      .def(py::init<>())
      .def_static("from_terms", &ring_from_terms<SemidirectRing>,
                  "terms: list of (SemidirectPair, re 'p/q', im 'p/q')")
      .def_static("one", &SemidirectRing::one)
      .def("coeff",
           [](const SemidirectRing& a, const SemidirectPair& g) {
             return crat_to_pair(a.coeff(g));
           })
      .def("support_size", &SemidirectRing::support_size)
      .def("__add__", [](const SemidirectRing& a,
                         const SemidirectRing& b) { return a + b; })
      .def("__sub__", [](const SemidirectRing& a,
                         const SemidirectRing& b) { return a - b; })
      .def("__mul__", [](const SemidirectRing& a,
                         const SemidirectRing& b) { return a * b; })
      .def("__eq__", [](const SemidirectRing& a,
                        const SemidirectRing& b) { return a == b; })
      .def("star", [](const SemidirectRing& a) { return star(a); })
      .def("to_json", [](const SemidirectRing& a) { return to_json(a); })
      .def("__repr__", &SemidirectRing::str);

  m.def("dihedral_ring_from_json", &dihedral_ring_from_json);
  m.def("semidirect_ring_from_json", &semidirect_ring_from_json);

  m.def("is_projection",
        [](const DihedralRing& a) { return is_projection(a); });
  m.def("is_projection",
        [](const SemidirectRing& a) { return is_projection(a); });
  m.def("is_unitary", [](const DihedralRing& a) { return is_unitary(a); });
  m.def("is_unitary", [](const SemidirectRing& a) { return is_unitary(a); });
  m.def("quotient_hom", &quotient_hom);
  m.def("alpha_minus_one", &alpha_minus_one);
  m.def("conjugacy_class", [](const DihedralWord& g, long bound) {
    auto cls = conjugacy_class(g, bound);
    return std::vector<DihedralWord>(cls.begin(), cls.end());
  });
  m.def("proj_one", &proj_one);
  m.def("proj_p1", &proj_p1);
  m.def("proj_p2", &proj_p2);
  m.def("proj_p2_alt", &proj_p2_alt);

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& mod : full_catalog()) names.push_back(to_string(mod.name));
    return names;
  });

  m.def(
      "even_pairing",
      [](const std::string& module, const DihedralRing& p, int n_max, int n) {
        auto r = even_pairing(catalog(module), p, n_max, n);
        return pairing_dict(r, module, "");
      },
      py::arg("module"), py::arg("p"), py::arg("n_max") = 2,
      py::arg("window") = 32);
  m.def(
      "even_pairing",
      [](const std::string& module, const SemidirectRing& p, int n_max,
         int n) {
        auto r = even_pairing(catalog(module), p, n_max, n);
        return pairing_dict(r, module, "");
      },
      py::arg("module"), py::arg("p"), py::arg("n_max") = 2,
      py::arg("window") = 32);
  m.def(
      "odd_pairing",
      [](const std::string& module, const DihedralRing& u, int n) {
        auto r = odd_pairing(catalog(module), u, n);
        return pairing_dict(r, module, "");
      },
      py::arg("module"), py::arg("u"), py::arg("window") = 32);
  m.def(
      "odd_pairing",
      [](const std::string& module, const SemidirectRing& u, int n) {
        auto r = odd_pairing(catalog(module), u, n);
        return pairing_dict(r, module, "");
      },
      py::arg("module"), py::arg("u"), py::arg("window") = 32);

  m.def(
      "pairing_table",
      [](const std::string& algebra, int window, int n_max) {
        AlgebraTag tag = algebra == "A"   ? AlgebraTag::A
                         : algebra == "B" ? AlgebraTag::B
                                          : AlgebraTag::CT;
        PairingTable t = pairing_table(tag, window, n_max);
        py::list cells;
        for (const auto& c : t.cells)
          cells.append(pairing_dict(c.result, c.module, c.label));
        py::dict d;
        d["algebra"] = algebra;
        d["window"] = t.window;
        d["cells"] = cells;
        d["matrix"] = t.matrix();
        d["stabilized"] = t.all_stabilized();
        return d;
      },
      py::arg("algebra"), py::arg("window") = 32, py::arg("n_max") = 2);

  m.def(
      "verify_module",
      [](const std::string& module, int window, double tol) {
        return report_dict(verify_module(catalog(module), window, tol));
      },
      py::arg("module"), py::arg("window") = 32, py::arg("tol") = 1e-12);

  m.def(
      "homotopy_check",
      [](int window, const std::vector<std::string>& grid, double tol) {
        std::vector<Rational> ts;
        for (const auto& s : grid) ts.push_back(rational_from_string(s));
        auto r = homotopy_check(window, ts);
        py::dict d;
        py::list pts;
        for (const auto& p : r.points) {
          py::dict pd;
          pd["t"] = rational_to_string(p.t);
          pd["selfadjoint_err"] = p.selfadjoint_err;
          pd["involution_err"] = p.involution_err;
          pts.append(pd);
        }
        d["points"] = pts;
        d["y0_match_err"] = r.y0_match_err;
        d["y1_degenerate"] = r.y1_degenerate;
        d["pass"] = r.pass(tol, 1e-15);
        return d;
      },
      py::arg("window") = 32,
      py::arg("grid") =
          std::vector<std::string>{"0/1", "1/4", "1/2", "3/4", "1/1"},
      py::arg("tol") = 1e-12);

  // cyclic cohomology surface
  py::class_<Cochain0>(m, "Cochain0")
      .def_static("from_data",
                  [](const std::map<long, std::string>& a,
                     const std::string& b0, const std::string& b1) {
                    std::map<long, CRat> am;
                    for (const auto& [k, v] : a)
                      am[k] = CRat{rational_from_string(v)};
                    return Cochain0::from_data(am,
                                               CRat{rational_from_string(b0)},
                                               CRat{rational_from_string(b1)});
                  })
      .def("eval_word",
           [](const Cochain0& c, const DihedralWord& w) {
             return crat_to_pair(c(w));
           })
      .def("eval", [](const Cochain0& c, const DihedralRing& x) {
        return crat_to_pair(c(x));
      });

  m.def("psi0", &psi0);
  m.def("psi1", &psi1);
  m.def("psi2", &psi2);
  m.def("psi_k", &psi_k);

  m.def("pair_with_projection",
        [](const Cochain0& psi, const DihedralRing& p) {
          return crat_to_pair(pair_with_projection(psi, p));
        });
  m.def("pair_s_with_projection",
        [](const Cochain0& psi, const DihedralRing& p) {
          return crat_to_pair(pair_with_projection(periodicity_s(psi), p));
        });

  m.def("duality_matrix", [] {
    auto dm = duality_matrix();
    std::vector<std::vector<std::string>> out;
    for (const auto& row : dm) {
      std::vector<std::string> r;
      for (const auto& v : row) r.push_back(v.str());
      out.push_back(std::move(r));
    }
    return out;
  });

  m.def(
      "verify_solve1",
      [](unsigned long long seed, int count, long support, long bound) {
        std::mt19937_64 rng(seed);
        py::list out;
        for (int i = 0; i < count; ++i)
          out.append(check_dict(
              verify_solve1(random_cocycle1(rng, support), bound)));
        return out;
      },
      py::arg("seed") = 1, py::arg("count") = 10, py::arg("support") = 8,
      py::arg("bound") = 16);

  m.def(
      "verify_solve2",
      [](long k, const std::string& ck, long bound) {
        return check_dict(
            verify_solve2(k, CRat{rational_from_string(ck)}, bound));
      },
      py::arg("k"), py::arg("ck") = "0/1", py::arg("bound") = 12);

  py::register_exception<WindowTooSmall>(m, "WindowTooSmallError");
  py::register_exception<NotAProjection>(m, "NotAProjectionError");
  py::register_exception<NotAUnitary>(m, "NotAUnitaryError");
  py::register_exception<TagMismatch>(m, "TagMismatchError");
  py::register_exception<SymmetryViolation>(m, "SymmetryViolationError");
}
