#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radio/bounds.hpp"
#include "radio/constructions.hpp"
#include "radio/errors.hpp"
#include "radio/io.hpp"
#include "radio/labeling.hpp"
#include "radio/oracle.hpp"

namespace py = pybind11;
using namespace radio;

namespace {

using GraphPtr = std::shared_ptr<ProductGraph>;

GraphPtr mutable_ptr(const std::shared_ptr<const ProductGraph>& g) { return std::const_pointer_cast<ProductGraph>(g); }

std::vector<int> as_ids(const ProductGraph& g, const py::sequence& seq) {
  std::vector<int> ids;
  ids.reserve(seq.size());
  for (auto item : seq) {
    if (py::isinstance<py::sequence>(item)) {
      auto xy = item.cast<std::pair<int, int>>();
      ids.push_back(g.id(xy.first, xy.second));
    } else {
      ids.push_back(item.cast<int>());
    }
  }
  return ids;
}

py::dict verdict_dict(const ConditionVerdict& v) {
  py::dict d;
  d["condition"] = std::string(condition_name(v.condition));
  d["holds"] = v.holds;
  if (v.witness) {
    py::dict w;
    w["a"] = v.witness->a;
    w["b"] = v.witness->b;
    w["lhs"] = v.witness->lhs;
    w["rhs"] = v.witness->rhs;
    w["clause"] = v.witness->clause;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

Family family_from(const std::string& name) {
  if (name == "star-star" || name == "star_star") return Family::star_star;
  if (name == "path-star" || name == "path_star") return Family::path_star;
  throw Error(ErrorCode::bad_params, "unknown family '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Radio labelings of Cartesian products of two trees";

  static py::exception<Error> radio_error(m, "RadioError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::handle(radio_error.ptr())(e.what());
      err.attr("code") = std::string(error_name(e.code()));
      PyErr_SetObject(radio_error.ptr(), err.ptr());
    }
  });

  py::class_<Tree>(m, "Tree")
      .def(py::init([](int order, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.push_back({u, v});
             return Tree::from_edges(order, es);
           }),
           py::arg("order"), py::arg("edges"))
      .def_static("path", &Tree::path, py::arg("m"))
      .def_static("star", &Tree::star, py::arg("n"))
      .def_static("parse", [](const std::string& spec) { return tree_from_spec(spec); },
                  "path:M, star:N or a tree file")
      .def_property_readonly("order", &Tree::order)
      .def_property_readonly("diameter", &Tree::diameter)
      .def_property_readonly("edges",
                             [](const Tree& t) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : t.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def_property_readonly("weight_centers",
                             [](const Tree& t) {
                               auto c = t.weight_centers();
                               return std::vector<int>(c.begin(), c.end());
                             })
      .def_property_readonly("total_level", &Tree::total_level)
      .def("level", &Tree::level)
      .def("distance", &Tree::distance)
      .def("phi", &Tree::phi)
      .def("delta", &Tree::delta)
      .def("__repr__", [](const Tree& t) {
        return "Tree(order=" + std::to_string(t.order()) + ", diameter=" + std::to_string(t.diameter()) + ")";
      });

  py::class_<ProductGraph, GraphPtr>(m, "Product")
      .def(py::init<Tree, Tree>(), py::arg("t1"), py::arg("t2"))
      .def_property_readonly("t1", &ProductGraph::t1)
      .def_property_readonly("t2", &ProductGraph::t2)
      .def_property_readonly("m", &ProductGraph::m)
      .def_property_readonly("n", &ProductGraph::n)
      .def_property_readonly("order", &ProductGraph::order)
      .def_property_readonly("diameter", &ProductGraph::diameter)
      .def_property_readonly("weight_centers", &ProductGraph::weight_centers)
      .def_property_readonly("center_count", &ProductGraph::center_count)
      .def_property_readonly("num_sectors", &ProductGraph::num_sectors)
      .def("id", py::overload_cast<int, int>(&ProductGraph::id, py::const_))
      .def("vertex",
           [](const ProductGraph& g, int v) {
             auto p = g.vertex(v);
             return std::pair{p.x, p.y};
           })
      .def("level", &ProductGraph::level)
      .def("distance", &ProductGraph::distance)
      .def("to_dot", [](const ProductGraph& g) { return to_dot(g); })
      .def("__len__", &ProductGraph::order);

  py::class_<VertexOrdering>(m, "Ordering")
      .def(py::init([](GraphPtr g, const py::sequence& seq) { return VertexOrdering(g, as_ids(*g, seq)); }),
           py::arg("graph"), py::arg("sequence"), "Flat ids or (x, y) pairs")
      .def_property_readonly("graph", [](const VertexOrdering& o) { return mutable_ptr(o.graph_ptr()); })
      .def_property_readonly("sequence", &VertexOrdering::sequence)
      .def("__len__", &VertexOrdering::size)
      .def("__getitem__", &VertexOrdering::operator[]);

  py::class_<RadioLabeling>(m, "Labeling")
      .def(py::init([](GraphPtr g, std::vector<std::int64_t> labels) { return RadioLabeling(g, std::move(labels)); }),
           py::arg("graph"), py::arg("labels"))
      .def_property_readonly("graph", [](const RadioLabeling& l) { return mutable_ptr(l.graph_ptr()); })
      .def_property_readonly("labels", &RadioLabeling::labels)
      .def_property_readonly("span", &RadioLabeling::span)
      .def("to_json", [](const RadioLabeling& l) { return labeling_to_json(l).dump(); })
      .def("to_csv", &labeling_to_csv);

  m.def("lower_bound", [](const ProductGraph& g) {
    auto r = lower_bound(g);
    py::dict d;
    d["value"] = r.value;
    d["case"] = std::string(bound_case_name(r.bound_case));
    d["xi"] = r.xi;
    d["p"] = r.p;
    d["d"] = r.d;
    d["attainability"] = attainability(g) == Attainability::open ? "open" : "strictly_above_bound";
    return d;
  });

  m.def("is_feasible_ordering", [](const VertexOrdering& o) {
    auto r = is_feasible_ordering(o);
    return std::pair{r.feasible, r.first_violation};
  }, "(feasible, first violating index or None)");
  m.def("satisfies_endpoint_condition", &satisfies_endpoint_condition);
  m.def("delta_sum", &delta_sum);

  m.def("greedy_label", &greedy_label);
  m.def(
      "verify",
      [](const RadioLabeling& lab, int jobs) {
        std::vector<py::tuple> out;
        for (const auto& v : verify(lab, jobs)) out.push_back(py::make_tuple(v.u, v.v, v.gap, v.required));
        return out;
      },
      py::arg("labeling"), py::arg("jobs") = 1, "List of (u, v, gap, required) violations");
  m.def("ordering_from_labeling", &ordering_from_labeling);

  m.def("check_distance_condition", [](const VertexOrdering& o) { return verdict_dict(check_distance_condition(o)); });
  m.def("check_level_condition", [](const VertexOrdering& o) { return verdict_dict(check_level_condition(o)); });
  m.def("check_sufficient_conditions", [](const VertexOrdering& o) {
    py::list out;
    for (const auto& v : check_sufficient_conditions(o)) out.append(verdict_dict(v));
    return out;
  });

  m.def("family_ordering", [](const std::string& family, int m_, int n_) {
    return family_ordering({family_from(family), m_, n_});
  }, py::arg("family"), py::arg("m"), py::arg("n"));
  m.def("closed_form_rn", [](const std::string& family, int m_, int n_) {
    return closed_form_rn({family_from(family), m_, n_});
  }, py::arg("family"), py::arg("m"), py::arg("n"));

  m.def(
      "exact_rn",
      [](GraphPtr g, std::int64_t max_nodes, double max_seconds, int jobs, bool symmetry_breaking) {
        SearchBudget b;
        b.max_nodes = max_nodes;
        b.max_seconds = max_seconds;
        b.jobs = jobs;
        b.symmetry_breaking = symmetry_breaking;
        OracleResult r;
        {
          py::gil_scoped_release release;
          r = exact_rn(g, b);
        }
        py::dict d;
        d["status"] = r.status == OracleStatus::exact ? "exact" : "bracket";
        d["lo"] = r.lo;
        d["hi"] = r.hi;
        d["nodes_explored"] = r.nodes_explored;
        d["labeling"] = r.best ? py::cast(*r.best) : py::none();
        return d;
      },
      py::arg("graph"), py::arg("max_nodes") = 0, py::arg("max_seconds") = 0.0, py::arg("jobs") = 1,
      py::arg("symmetry_breaking") = true);
  m.def("brute_force_weight_centers", &brute_force_weight_centers);
}
