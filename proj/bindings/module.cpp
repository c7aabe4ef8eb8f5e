// Python bindings for the coxkit core. Exact scalars cross the boundary as
// strings (TrigScalar::str); nothing here ever converts to floating point
// unless the caller asks for an approximation explicitly.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "coxkit/aci.hpp"
#include "coxkit/classify.hpp"
#include "coxkit/element.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/essential.hpp"
#include "coxkit/fixedpoint.hpp"
#include "coxkit/geom.hpp"
#include "coxkit/system.hpp"
#include "coxkit/witness.hpp"

namespace py = pybind11;
using namespace coxkit;

namespace {

std::vector<std::string> vec_str(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const TrigScalar& t : v) out.push_back(t.str());
  return out;
}

std::vector<double> vec_approx(const Vec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const TrigScalar& t : v) out.push_back(t.approx());
  return out;
}

py::dict order_dict(const OrderResult& r) {
  py::dict d;
  switch (r.kind) {
    case OrderResult::Kind::Finite:
      d["kind"] = "finite";
      d["order"] = r.order;
      break;
    case OrderResult::Kind::InfiniteCertified:
      d["kind"] = "infinite";
      d["certificate"] = r.certificate;
      break;
    case OrderResult::Kind::Undecided:
      d["kind"] = "undecided";
      break;
  }
  return d;
}

py::dict report_dict(const RowReport& rep) {
  py::dict d;
  d["name"] = rep.name;
  d["ok"] = rep.ok;
  py::list clauses;
  for (const ClauseResult& c : rep.clauses) {
    py::dict e;
    e["clause"] = c.clause;
    e["status"] = c.status == ClauseStatus::Pass   ? "pass"
                  : c.status == ClauseStatus::Fail ? "fail"
                                                   : "skipped";
    e["detail"] = c.detail;
    clauses.append(e);
  }
  d["clauses"] = clauses;
  return d;
}

}  // namespace

PYBIND11_MODULE(_coxkit, m) {
  m.doc() = "exact computations in Coxeter groups and their extensions";

  // derived before base would shadow it: translators run newest-first
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonFiniteTypeError>(m, "NonFiniteTypeError",
                                             PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<GraphAutomorphism>(m, "Automorphism")
      .def_property_readonly("rank", &GraphAutomorphism::rank)
      .def_property_readonly(
          "perm", [](const GraphAutomorphism& t) { return t.perm(); })
      .def("__call__", [](const GraphAutomorphism& t, int i) { return t(i); })
      .def("cycles", &GraphAutomorphism::cycles_str)
      .def("order", &GraphAutomorphism::order)
      .def("is_identity", &GraphAutomorphism::is_identity)
      .def("inverse", &GraphAutomorphism::inverse)
      .def("__mul__", &GraphAutomorphism::compose)
      .def("__eq__", [](const GraphAutomorphism& a,
                        const GraphAutomorphism& b) { return a == b; })
      .def("__repr__", [](const GraphAutomorphism& t) {
        return "Automorphism(" + t.cycles_str() + ")";
      });

  py::class_<GroupElement>(m, "Element")
      .def_property_readonly("length", &GroupElement::length)
      .def_property_readonly(
          "word", [](const GroupElement& w) { return w.canonical_word(); })
      .def("support", &GroupElement::support)
      .def("is_identity", &GroupElement::is_identity)
      .def("left_descent", &GroupElement::left_descent)
      .def("right_descent", &GroupElement::right_descent)
      .def("inverse", &GroupElement::inverse, py::keep_alive<0, 1>())
      .def("__mul__", &GroupElement::operator*, py::keep_alive<0, 1>())
      .def("__eq__", [](const GroupElement& a,
                        const GroupElement& b) { return a == b; })
      .def("__ne__", [](const GroupElement& a,
                        const GroupElement& b) { return a != b; })
      .def(
          "order",
          [](const GroupElement& w, long cap) {
            return order_dict(order_of(w, cap));
          },
          py::arg("cap") = 200)
      .def("__repr__", [](const GroupElement& w) {
        std::string s = "Element([";
        for (size_t i = 0; i < w.canonical_word().size(); ++i) {
          if (i) s += ", ";
          s += std::to_string(w.canonical_word()[i]);
        }
        return s + "])";
      });

  py::class_<CoxeterSystem>(m, "System")
      .def(py::init<int>(), py::arg("rank"))
      .def_property_readonly("rank", &CoxeterSystem::rank)
      .def_property_readonly("modulus", &CoxeterSystem::modulus)
      .def(
          "set_label",
          [](CoxeterSystem& s, int i, int j, int label) {
            s.set_label(i, j, label == 0 ? BondLabel::infinite()
                                         : BondLabel::finite(label));
          },
          py::arg("i"), py::arg("j"), py::arg("m"),
          "bond label m(i, j); m = 0 stands for infinity")
      .def("label",
           [](const CoxeterSystem& s, int i, int j) {
             BondLabel l = s.label(i, j);
             return l.is_finite() ? l.value() : 0;
           })
      .def("adjacent", &CoxeterSystem::adjacent)
      .def("components",
           [](const CoxeterSystem& s) { return components(s).parts; })
      .def("classify",
           [](const CoxeterSystem& s) {
             py::list out;
             for (const auto& [part, tag] : classify_all(s))
               out.append(py::make_tuple(part, kind_str(tag.kind), tag.name));
             return out;
           },
           "per component: (generators, kind, catalog name)")
      .def("automorphisms",
           [](const CoxeterSystem& s) { return all_automorphisms(s); })
      .def("automorphism",
           [](const CoxeterSystem& s, const std::string& cycles) {
             return parse_cycles(s, cycles);
           })
      .def(
          "element",
          [](const CoxeterSystem& s, const std::vector<int>& word) {
            return GroupElement::from_word(s, word);
          },
          py::keep_alive<0, 1>(), py::arg("word") = std::vector<int>{})
      .def("reduce",
           [](const CoxeterSystem& s, const std::vector<int>& word) {
             return reduce_word(s, word);
           })
      .def(
          "longest_element",
          [](const CoxeterSystem& s, std::optional<std::vector<int>> subset) {
            std::vector<int> I;
            if (subset) {
              I = *subset;
            } else {
              for (int i = 0; i < s.rank(); ++i) I.push_back(i);
            }
            return longest_element(s, I);
          },
          py::keep_alive<0, 1>(), py::arg("subset") = py::none())
      .def(
          "gram",
          [](const CoxeterSystem& s, bool approx) -> py::object {
            Mat g = gram(s);
            py::list rows;
            for (int i = 0; i < s.rank(); ++i) {
              py::list row;
              for (int j = 0; j < s.rank(); ++j)
                row.append(approx ? py::cast(g.at(i, j).approx())
                                  : py::cast(g.at(i, j).str()));
              rows.append(row);
            }
            return rows;
          },
          py::arg("approx") = false)
      .def("__eq__", [](const CoxeterSystem& a,
                        const CoxeterSystem& b) { return a == b; })
      .def("__repr__", [](const CoxeterSystem& s) {
        return "System(rank=" + std::to_string(s.rank()) + ")";
      })
      .def("format", [](const CoxeterSystem& s) { return format_system(s); });

  py::class_<FiniteActionGroup>(m, "ActionGroup")
      .def_property_readonly("size", &FiniteActionGroup::size)
      .def("at", &FiniteActionGroup::at,
           py::return_value_policy::reference_internal)
      .def("index_of", &FiniteActionGroup::index_of)
      .def_property_readonly("identity_index",
                             &FiniteActionGroup::identity_index)
      .def("mul", &FiniteActionGroup::mul)
      .def("inv", &FiniteActionGroup::inv)
      .def("element_order", &FiniteActionGroup::element_order)
      .def("__len__", &FiniteActionGroup::size)
      .def("__repr__", [](const FiniteActionGroup& G) {
        return "ActionGroup(size=" + std::to_string(G.size()) + ")";
      });

  m.def("load_system", &load_system, py::arg("path"));
  m.def("parse_system", &parse_system_text, py::arg("text"));
  m.def(
      "action_group",
      [](const CoxeterSystem& sys, const std::vector<GraphAutomorphism>& gens,
         int cap) { return FiniteActionGroup::closure(sys, gens, cap); },
      py::arg("system"), py::arg("generators") = std::vector<GraphAutomorphism>{},
      py::arg("cap") = 5000);
  m.def("load_action_group", &load_action_group, py::arg("system"),
        py::arg("path"), py::arg("cap") = 5000);

  m.def(
      "inversions",
      [](const GroupElement& w, bool approx) -> py::object {
        py::list out;
        for (const Vec& r : inversion_set(w))
          out.append(approx ? py::cast(vec_approx(r)) : py::cast(vec_str(r)));
        return out;
      },
      py::arg("element"), py::arg("approx") = false);

  m.def(
      "roots",
      [](const CoxeterSystem& sys, int depth, std::size_t cap) {
        RootEnumeration e = enumerate_roots(sys, depth, cap);
        py::list roots;
        for (const RootEntry& r : e.roots) {
          py::dict d;
          d["coords"] = vec_str(r.coords);
          d["depth"] = r.depth;
          roots.append(d);
        }
        py::dict out;
        out["roots"] = roots;
        out["closed"] = e.closed;
        return out;
      },
      py::arg("system"), py::arg("depth") = 8, py::arg("cap") = 1000);

  m.def(
      "fixed_presentation",
      [](const CoxeterSystem& sys, const GraphAutomorphism& tau, int cap) {
        FixedPointPresentation pres = fixed_system(sys, tau, cap);
        py::dict d;
        d["orbits"] = pres.orbits;
        d["finite_orbits"] = pres.finite_orbits;
        d["infinite_orbits"] = pres.infinite_orbits;
        py::list gens;
        for (const GroupElement& g : pres.generators)
          gens.append(g.canonical_word());
        d["generator_words"] = gens;
        py::list labels;
        for (const auto& row : pres.labels) {
          py::list lr;
          for (const OrbitLabel& l : row) {
            if (l.kind == OrbitLabel::Kind::Finite)
              lr.append(py::cast(l.value));
            else if (l.kind == OrbitLabel::Kind::Infinite)
              lr.append(py::cast(0));
            else
              lr.append(py::none());
          }
          labels.append(lr);
        }
        d["labels"] = labels;
        return d;
      },
      py::arg("system"), py::arg("tau"), py::arg("cap") = 200,
      "orbit data of the fixed-point subgroup; labels: m, 0 for infinite, "
      "None for undecided");

  m.def(
      "fixed_coxeter_system",
      [](const CoxeterSystem& sys, const GraphAutomorphism& tau, int cap) {
        return fixed_coxeter_system(fixed_system(sys, tau, cap));
      },
      py::arg("system"), py::arg("tau"), py::arg("cap") = 200);

  m.def("finite_index_fixed", &finite_index_fixed, py::arg("system"),
        py::arg("tau"));

  m.def(
      "aci_subgroup",
      [](const CoxeterSystem& sys, const FiniteActionGroup& G) {
        AciReport rep = aci_subgroup(sys, G);
        py::dict d;
        d["finite_components"] = rep.orho.components;
        d["w_generators"] = rep.wpart_generators;
        d["g_involutions"] = rep.grho;
        return d;
      },
      py::arg("system"), py::arg("group"));

  m.def(
      "is_aci",
      [](const CoxeterSystem& sys, const FiniteActionGroup& G,
         const GroupElement& w, int g) {
        AciVerdict v = is_aci_involution(sys, G, SemidirectElement{w, g});
        py::dict d;
        d["aci"] = v.aci;
        d["reasons"] = v.reasons;
        return d;
      },
      py::arg("system"), py::arg("group"), py::arg("w"), py::arg("g") = 0);

  m.def(
      "brute_force_aci",
      [](const CoxeterSystem& sys, const FiniteActionGroup& G, long cap) {
        BruteForceResult r = brute_force_aci_finite(sys, G, cap);
        py::dict d;
        d["group_size"] = r.group_size;
        d["involution_count"] = r.involution_count;
        d["generated_size"] = r.generated_size;
        d["matches"] = r.matches_description;
        return d;
      },
      py::arg("system"), py::arg("group"), py::arg("cap") = 10000);

  m.def(
      "conjugate_growth",
      [](const CoxeterSystem& sys, const FiniteActionGroup& G,
         const GroupElement& w, int g, long target, int radius) {
        return conjugate_growth(sys, G, SemidirectElement{w, g}, target,
                                radius);
      },
      py::arg("system"), py::arg("group"), py::arg("w"), py::arg("g") = 0,
      py::arg("target") = 25, py::arg("radius") = 60);

  m.def(
      "essential_certificate",
      [](const GroupElement& w, int depth, int cap) {
        PinfResult r = pinf_generates(w, depth, cap);
        py::dict d;
        d["kind"] = r.kind == PinfResult::Kind::Yes ? "yes" : "undecided";
        d["odd_count"] = r.odds.odd.size();
        d["undecided_count"] = r.odds.undecided.size();
        return d;
      },
      py::arg("element"), py::arg("depth") = 8, py::arg("cap") = 200);

  m.def(
      "odd_reflections",
      [](const GroupElement& w, int depth, int cap) {
        OddRootReport rep = odd_reflections(w, depth, cap);
        py::dict d;
        py::list odd, und;
        for (const Vec& v : rep.odd) odd.append(vec_str(v));
        for (const Vec& v : rep.undecided) und.append(vec_str(v));
        d["odd"] = odd;
        d["undecided"] = und;
        return d;
      },
      py::arg("element"), py::arg("depth") = 4, py::arg("cap") = 60);

  m.def(
      "verify_rows",
      [](const std::string& path) {
        py::list out;
        for (const WitnessRow& row : load_rows(path))
          out.append(report_dict(row.affine ? verify_affine_row(row)
                                            : verify_hyperbolic_row(row)));
        return out;
      },
      py::arg("path"));
}
